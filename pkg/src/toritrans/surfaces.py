"""Affine toric surfaces ``X_{a,b}`` and the hypersurfaces ``x_{n+1}^b = x_1...x_n``.

Throughout, ``X_{a,b}`` is the surface of the cone ``Cone((1,0),(a,b))``
(cone labeling).  The cyclic-quotient weight is derived from the Cox
presentation rather than assumed; for ``b > 1`` it comes out as
``a_q = -a mod b`` up to inversion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Tuple

from . import statements as st
from .classify import Certificate, Verdict, theta_toric
from .cone import Cone, RationalCone, dual_cone, hilbert_basis, rank_limit
from .cox import cox_presentation
from .errors import InvalidSurfaceForm, UnsupportedCone, UnsupportedRank
from .fan import Fan, smooth_locus_subfan
from .lattice import IntMatrix, IntVector, add, apply, complete_to_basis, matmul, scale, transpose
from .standard import cone_fan, surface_fan


@dataclass(frozen=True, order=True)
class SurfaceForm:
    """Normal form ``(a, b)``: ``(0, 1)`` for the plane, else ``b > a >= 1`` coprime."""

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 1):
            return
        if not (self.b > self.a >= 1) or gcd(self.a, self.b) != 1:
            raise InvalidSurfaceForm(f"({self.a},{self.b}) needs gcd 1 and b > a >= 1, or (0,1)")

    @property
    def is_smooth(self) -> bool:
        return self.b == 1

    @property
    def cone(self) -> RationalCone:
        return Cone((1, 0), (self.a, self.b))

    @property
    def fan(self) -> Fan:
        return surface_fan(self.a, self.b)

    def __str__(self) -> str:
        return f"X_{{{self.a},{self.b}}}"


def _unimodular_inverse(U: IntMatrix) -> IntMatrix:
    (p, q), (r, s) = U
    d = p * s - q * r
    return ((s * d, -q * d), (-r * d, p * d))


def _reduce(v1: IntVector, v2: IntVector) -> Tuple[int, int, IntMatrix]:
    """Send ``v1`` to ``e1`` and ``v2`` to ``(a, b)`` with ``0 <= a < b``."""
    T = _unimodular_inverse(transpose(complete_to_basis(v1)))
    p, q = apply(T, v2)
    if q < 0:
        T = matmul(((1, 0), (0, -1)), T)
        q = -q
    c = -(p // q)
    T = matmul(((1, c), (0, 1)), T)
    return p + c * q, q, T


def cone_normal_form_2d(sigma: RationalCone) -> Tuple[SurfaceForm, IntMatrix]:
    """Normal form of a full-dimensional pointed 2-cone and a ``GL_2(Z)`` transform realizing it.

    Both generator orders are reduced and the smaller of ``a`` and
    ``a^-1 mod b`` is kept, so the result depends only on the
    ``GL_2(Z)``-class of the cone.
    """
    if sigma.rank != 2 or not sigma.is_pointed or len(sigma.generators) != 2:
        raise UnsupportedCone("expected a strongly convex cone in Z^2 with two rays")
    v1, v2 = sigma.generators
    candidates = [_reduce(v1, v2), _reduce(v2, v1)]
    a, b, T = min(candidates, key=lambda t: t[0])
    return SurfaceForm(a, b), T


def surfaces_isomorphic(s: SurfaceForm, t: SurfaceForm) -> bool:
    if s.b != t.b:
        return False
    return s.a == t.a or (s.a * t.a) % s.b == 1


def quotient_weight(s: SurfaceForm) -> int:
    """Weight ``a_q`` of the action ``ζ(x, y) = (ζ^a_q x, ζ y)`` presenting ``X`` as ``A^2 / C_b``."""
    if s.is_smooth:
        return 0
    cox = cox_presentation(s.fan)
    (w1,), (w2,) = cox.degrees
    return (w1 * pow(w2, -1, s.b)) % s.b


@dataclass(frozen=True)
class HypersurfaceRealization:
    generators: Tuple[IntVector, ...]
    apex: IntVector
    exponent: int

    @property
    def equation(self) -> str:
        return f"z^{self.exponent} = xy"

    def to_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "apex": list(self.apex),
            "exponent": self.exponent,
            "equation": self.equation,
        }


def hypersurface_realization(sigma: RationalCone) -> Optional[HypersurfaceRealization]:
    """The ``z^c = xy`` presentation when ``σ^∨ ∩ M`` has three minimal generators."""
    dual = dual_cone(sigma)
    hb = hilbert_basis(dual)
    if len(hb) != 3:
        return None
    inner = [u for u in hb if u not in dual.generators]
    if len(inner) != 1:
        return None
    z = inner[0]
    x, y = dual.generators
    total = add(x, y)
    c = next(t // z_i for t, z_i in zip(total, z) if z_i)
    if scale(c, z) != total:
        return None
    return HypersurfaceRealization(hb, z, c)


@dataclass(frozen=True)
class SurfaceReport:
    form: SurfaceForm
    quotient_order: int
    quotient_weights: Tuple[int, int]
    quotient_label: int
    theta: Verdict
    theta_regular: Verdict
    regular_is_homogeneous_space: bool
    model: Optional[str]
    hypersurface: Optional[HypersurfaceRealization]
    certificates: Tuple[Certificate, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "a": self.form.a,
            "b": self.form.b,
            "quotient": {
                "order": self.quotient_order,
                "weights": list(self.quotient_weights),
                "label": self.quotient_label,
            },
            "theta": self.theta.to_dict(),
            "theta_regular": self.theta_regular.to_dict(),
            "regular_is_homogeneous_space": self.regular_is_homogeneous_space,
            "model": self.model,
            "hypersurface": self.hypersurface.to_dict() if self.hypersurface else None,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def surface_report(s: SurfaceForm) -> SurfaceReport:
    if not isinstance(s, SurfaceForm):
        raise InvalidSurfaceForm(f"expected a SurfaceForm, got {s!r}")
    verdict = theta_toric(s.fan)
    if s.is_smooth:
        return SurfaceReport(
            s, 1, (0, 0), 0, verdict, verdict, True, "A^2", None,
            (Certificate("b = 1: the cone is smooth and X = A^2", st.FAN_DATA),),
        )
    b = s.b
    (w1,), (w2,) = cox_presentation(s.fan).degrees
    aq = quotient_weight(s)
    is_space = aq == 1
    certs = [
        Certificate(f"Cl(X) = Z/{b} with ray degrees ({w1}, {w2}): X = A^2 / C_{b}, weights ({aq}, 1)", st.CYCLIC_QUOTIENT),
        Certificate(
            f"X_reg is {'' if is_space else 'not '}a homogeneous space (quotient weight {aq})",
            st.CYCLIC_QUOTIENT,
        ),
    ]
    model = f"SL_2/H, H = {{(e, t; 0, e^-1) : e^{b} = 1}}" if is_space else None
    hyper = hypersurface_realization(s.cone)
    if hyper is not None:
        certs.append(Certificate(f"σ^∨ ∩ M has 3 generators {list(hyper.generators)}: {hyper.equation}", st.FAN_DATA))
    return SurfaceReport(s, b, (w1, w2), aq, verdict, verdict.regular_locus, is_space, model, hyper, tuple(certs))


@dataclass(frozen=True)
class FamilyReport:
    n: int
    b: int
    dual: RationalCone
    cone: RationalCone
    generators: Tuple[IntVector, ...]
    relation_holds: bool
    smooth_locus: Fan
    theta_regular: Verdict
    homogeneous_space: str = "open problem"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "dual_generators": [list(g) for g in self.dual.generators],
            "cone_generators": [list(g) for g in self.cone.generators],
            "semigroup_generators": [list(g) for g in self.generators],
            "relation": f"{self.b}*u_{self.n + 1} = " + " + ".join(f"u_{i + 1}" for i in range(self.n)),
            "relation_holds": self.relation_holds,
            "smooth_locus": {
                "rays": [list(r) for r in self.smooth_locus.rays],
                "max_cones": [sorted(c) for c in self.smooth_locus.max_cones],
            },
            "theta_regular": self.theta_regular.to_dict(),
            "homogeneous_space": self.homogeneous_space,
        }


def family_dual_cone(n: int, b: int) -> RationalCone:
    gens: List[IntVector] = [tuple(int(i == j) for j in range(n)) for i in range(n - 1)]
    gens.append(tuple([b - 1] * (n - 1) + [b]))
    return Cone(*gens)


def hypersurface_family(n: int, b: int) -> FamilyReport:
    """Semigroup and smooth locus of ``X(n, b): x_{n+1}^b = x_1 ... x_n``."""
    if n < 2 or b < 2:
        raise ValueError("need n >= 2 and b >= 2")
    if n > rank_limit():
        raise UnsupportedRank(f"rank {n} exceeds the Hilbert-basis limit {rank_limit()}")
    dual = family_dual_cone(n, b)
    sigma = dual_cone(dual)
    hb = hilbert_basis(dual)
    extremal = sorted(dual.generators)
    inner = [u for u in hb if u not in dual.generators]
    relation = len(hb) == n + 1 and len(inner) == 1
    if relation:
        total = extremal[0]
        for u in extremal[1:]:
            total = add(total, u)
        relation = scale(b, inner[0]) == total
    gens = tuple(extremal + inner)
    fan = cone_fan(sigma, name=f"X({n},{b})")
    reg = smooth_locus_subfan(fan)
    verdict = theta_toric(fan).regular_locus
    cert = Certificate("whether X(n,b)_reg is a homogeneous space is not decided here", st.FAMILY_OPEN)
    verdict = Verdict(
        verdict.lower, verdict.upper, verdict.homogeneous, verdict.flexible, verdict.conjectural,
        verdict.certificates + (cert,),
    )
    return FamilyReport(n, b, dual, sigma, gens, relation, reg, verdict)
