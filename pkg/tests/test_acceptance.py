"""Acceptance gate: ten criteria, each timed and reported on one line.

Run with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines are
printed even when output capture is on.
"""
import random
import time
from math import gcd

import pytest

from toritrans import standard as S
from toritrans.classify import (
    SpaceDeclaration,
    Theta,
    general_linear_group,
    special_linear_group,
    theta_homogeneous_space,
    theta_toric,
)
from toritrans.cone import Cone, dual_cone, hilbert_basis
from toritrans.cox import divisor_class_group
from toritrans.fan import change_basis, detect_projective_product, is_complete, quasi_affine_envelope
from toritrans.oracle import (
    brute_dual_equivalence,
    brute_hilbert_basis,
    brute_hilbert_basis_pointwise,
    brute_surface_iso_search,
)
from toritrans.statements import STATEMENTS
from toritrans.surfaces import SurfaceForm, hypersurface_family, hypersurface_realization, surfaces_isomorphic

from conftest import random_pointed_cone, random_unimodular

INF = Theta.INF
SEED = 7


def coprime_pairs(max_b, min_b=2):
    return [(a, b) for b in range(min_b, max_b + 1) for a in range(1, b) if gcd(a, b) == 1]


def theta_table():
    table = [
        ("A^1", S.affine_space(1), Theta.TWO),
        ("A^2", S.affine_space(2), INF),
        ("A^3", S.affine_space(3), INF),
        ("P^1", S.projective_space(1), Theta.THREE),
        ("P^2", S.projective_space(2), Theta.TWO),
        ("P^3", S.projective_space(3), Theta.TWO),
        ("K^*", S.torus(1), Theta.ONE),
        ("A^1 x K^*", S.line_with_torus(), Theta.ONE),
        ("A^2 minus origin", S.punctured_affine_space(2), INF),
        ("P^1 x P^1", S.projective_product([1, 1]), Theta.ONE),
        ("P^1 x P^2", S.projective_product([1, 2]), Theta.ONE),
        ("F_1", S.hirzebruch(1), Theta.ZERO),
    ]
    table += [(f"X_{a},{b}", S.surface_fan(a, b), Theta.ZERO) for a, b in coprime_pairs(6)]
    return table


def homogeneous_space_table():
    return [
        ("SL_2", special_linear_group(2), (Theta.ONE, INF), INF),
        ("SL_3", special_linear_group(3), None, INF),
        ("GL_2", general_linear_group(2), None, Theta.ONE),
        ("GL_3", general_linear_group(3), None, Theta.ONE),
        ("non-quasi-affine, K[X] != K", SpaceDeclaration(3, False, has_nonconstant_functions="yes"), None, Theta.ONE),
        ("epimorphic", SpaceDeclaration(4, False, "first", "no", "yes"), None, None),
    ]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title} ({elapsed:.2f}s / limit {limit}s){' ' + detail if detail else ''}"
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def test_criterion_01_theta_table(report):
    failures, slowest = [], 0.0
    for name, f, want in theta_table():
        t0 = time.perf_counter()
        v = theta_toric(f)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        ok = v.exact and v.value == want and dt < 1.0
        if name.startswith("X_"):
            ok = ok and v.regular_locus is not None and v.regular_locus.exact and v.regular_locus.value == INF
        if not ok:
            failures.append(name)
    ok = report(1, "θ table reproduction", not failures, slowest, 1, f"slowest single verdict; failures={failures}")
    assert ok, failures


def test_criterion_02_class_groups(report):
    t0 = time.perf_counter()
    bad = []
    for a, b in coprime_pairs(12):
        cl = divisor_class_group(S.surface_fan(a, b))
        if (cl.free_rank, cl.torsion) != (0, (b,)):
            bad.append((a, b))
    for n in (1, 2, 3):
        cl = divisor_class_group(S.projective_space(n))
        degs = [cl.degree(i) for i in range(n + 1)]
        if (cl.free_rank, cl.torsion) != (1, ()) or degs != [(1,)] * (n + 1):
            bad.append(f"P^{n}")
    cl = divisor_class_group(S.projective_product([1, 1]))
    if (cl.free_rank, cl.torsion) != (2, ()):
        bad.append("P1xP1")
    dt = time.perf_counter() - t0
    ok = report(2, "class groups", not bad and dt < 1, dt, 1, f"failures={bad}" if bad else "")
    assert ok


def test_criterion_03_hypersurfaces(report):
    t0 = time.perf_counter()
    bad = []
    for b in range(2, 7):
        h = hypersurface_realization(SurfaceForm(1, b).cone)
        x, z, y = None, None, None
        if h is None or len(h.generators) != 3 or h.exponent != b:
            bad.append(f"X_1,{b}")
            continue
        x, y = [g for g in h.generators if g != h.apex]
        if tuple(b * c for c in h.apex) != tuple(p + q for p, q in zip(x, y)):
            bad.append(f"X_1,{b} relation")
    for n, b in [(3, 2), (3, 3), (4, 2)]:
        rep = hypersurface_family(n, b)
        u = rep.generators
        lhs = tuple(b * c for c in u[-1])
        rhs = tuple(map(sum, zip(*u[:-1])))
        if len(u) != n + 1 or lhs != rhs or not rep.relation_holds:
            bad.append(f"X({n},{b})")
    dt = time.perf_counter() - t0
    ok = report(3, "hypersurface family", not bad and dt < 10, dt, 10, f"failures={bad}" if bad else "")
    assert ok


def test_criterion_04_duality(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    bad = 0
    for rank, count in ((2, 100), (3, 50)):
        for _ in range(count):
            sigma = random_pointed_cone(rank, rng, -9, 9)
            dual = dual_cone(sigma)
            if dual_cone(dual) != sigma or not brute_dual_equivalence(sigma, dual, 6):
                bad += 1
    dt = time.perf_counter() - t0
    ok = report(4, "duality involution + oracle", bad == 0 and dt < 30, dt, 30, f"mismatches={bad}")
    assert ok


def test_criterion_05_hilbert_vs_oracle(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    bad = []
    for a, b in [(0, 1)] + coprime_pairs(12):
        for sigma in (Cone((1, 0), (a, b)), dual_cone(Cone((1, 0), (a, b)))):
            bound = max(abs(c) for g in sigma.generators for c in g)
            if list(hilbert_basis(sigma)) != brute_hilbert_basis(sigma, bound):
                bad.append((a, b))
    for _ in range(25):
        sigma = random_pointed_cone(3, rng, full=True)
        if list(hilbert_basis(sigma)) != brute_hilbert_basis_pointwise(sigma):
            bad.append(sigma.generators)
    dt = time.perf_counter() - t0
    ok = report(5, "Hilbert basis vs oracle", not bad and dt < 60, dt, 60, f"mismatches={bad}" if bad else "")
    assert ok


def test_criterion_06_surface_isomorphism(report):
    t0 = time.perf_counter()
    forms = [SurfaceForm(0, 1)] + [SurfaceForm(a, b) for a, b in coprime_pairs(8)]
    bad = []
    for s in forms:
        for t in forms:
            found = brute_surface_iso_search(s, t, 8) is not None
            if found != surfaces_isomorphic(s, t):
                bad.append((s, t))
    dt = time.perf_counter() - t0
    ok = report(6, "surface isomorphism vs GL_2(Z) search", not bad and dt < 60, dt, 60,
                f"pairs={len(forms) ** 2}, mismatches={len(bad)}")
    assert ok


def test_criterion_07_product_detection(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    bad = []
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            f = S.projective_product([a, b])
            for _ in range(20):
                g = change_basis(f, random_unimodular(f.rank, rng))
                if detect_projective_product(g) != sorted([a, b]):
                    bad.append((a, b))
    for f in [S.hirzebruch(1), S.hirzebruch(2), S.hirzebruch(3), S.blowup_projective_plane()]:
        for _ in range(20):
            g = change_basis(f, random_unimodular(2, rng))
            if detect_projective_product(g) is not None:
                bad.append(f.name)
    dt = time.perf_counter() - t0
    ok = report(7, "projective product detection", not bad and dt < 30, dt, 30, f"failures={bad}" if bad else "")
    assert ok


def test_criterion_08_envelope(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3):
        if not quasi_affine_envelope(S.punctured_affine_space(n))[0]:
            bad.append(f"A^{n} minus origin")
    if quasi_affine_envelope(S.blowup_affine_plane())[0]:
        bad.append("Bl_0 A^2")
    complete = [S.projective_space(1), S.projective_space(2), S.projective_space(3), S.projective_product([1, 1]),
                S.projective_product([1, 2]), S.hirzebruch(1), S.hirzebruch(2), S.blowup_projective_plane()]
    for f in complete:
        if not is_complete(f) or quasi_affine_envelope(f)[0]:
            bad.append(f.name)
    singles = [S.affine_space(n) for n in (1, 2, 3)] + [S.surface_fan(a, b) for a, b in coprime_pairs(6)]
    singles += [S.cone_fan(random_pointed_cone(r, rng)) for r in (2, 3) for _ in range(10)]
    for f in singles:
        ok, omega = quasi_affine_envelope(f)
        if not ok or omega != f.cone(f.max_cones[0]):
            bad.append(str(f))
    dt = time.perf_counter() - t0
    ok = report(8, "quasi-affine envelope", not bad, dt, "-", f"failures={bad}" if bad else "")
    assert ok


def test_criterion_09_homogeneous_spaces(report):
    t0 = time.perf_counter()
    bad = []
    for name, decl, _, want in homogeneous_space_table():
        v = theta_homogeneous_space(decl)
        if want is not None:
            if not (v.exact and v.value == want):
                bad.append(name)
        else:
            cites = [c.citation for c in v.certificates]
            if v.exact or v.upper != INF or not any(c.startswith("open problem") for c in cites):
                bad.append(name)
    dt = time.perf_counter() - t0
    ok = report(9, "homogeneous-space rules", not bad, dt, "-", f"failures={bad}" if bad else "")
    assert ok


def test_criterion_10_certificates(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    bad = []
    verdicts = [(name, theta_toric(f)) for name, f, _ in theta_table()]
    verdicts += [(name, theta_homogeneous_space(d)) for name, d, _, _ in homogeneous_space_table()]
    for name, v in verdicts:
        if v.exact and (not v.certificates or any(c.citation not in STATEMENTS for c in v.certificates)):
            bad.append(name)
    for name, f, _ in theta_table():
        if f.rank == 0:
            continue
        base = theta_toric(f)
        for _ in range(20):
            g = change_basis(f, random_unimodular(f.rank, rng))
            v = theta_toric(g)
            if (v.lower, v.upper, v.homogeneous) != (base.lower, base.upper, base.homogeneous):
                bad.append(f"{name} conjugate")
                break
    dt = time.perf_counter() - t0
    ok = report(10, "certificate integrity + basis invariance", not bad, dt, "-", f"failures={bad}" if bad else "")
    assert ok
