"""Transitivity-degree verdicts with certificate chains.

Verdicts are bound pairs over ``0 < 1 < 2 < 3 < ∞``.  Every rule that fires
appends a :class:`Certificate` naming the statement it applied (see
:mod:`toritrans.statements`), so a verdict can be audited step by step.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from . import statements as st
from .errors import DegenerateInput, InconsistentDeclaration
from .fan import (
    Fan,
    degenerate_split,
    detect_projective_product,
    global_functions_cone,
    is_complete,
    is_smooth_fan,
    quasi_affine_envelope,
    smooth_locus_subfan,
)


class Theta(enum.IntEnum):
    ZERO = 0
    ONE = 1
    TWO = 2
    THREE = 3
    INF = 4

    def __str__(self) -> str:
        return "∞" if self is Theta.INF else str(int(self))

    @property
    def token(self) -> str:
        """JSON spelling."""
        return "inf" if self is Theta.INF else str(int(self))

    @classmethod
    def parse(cls, token: str) -> "Theta":
        return cls.INF if token in ("inf", "∞") else cls(int(token))


TRI_STATES = ("yes", "no", "unknown")


@dataclass(frozen=True)
class Certificate:
    fact: str
    citation: str

    def to_dict(self) -> dict:
        return {"fact": self.fact, "citation": self.citation}


@dataclass(frozen=True)
class Verdict:
    lower: Theta
    upper: Theta
    homogeneous: str = "unknown"
    flexible: str = "unknown"
    conjectural: Optional[Theta] = None
    certificates: Tuple[Certificate, ...] = ()
    regular_locus: Optional["Verdict"] = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty bounds [{self.lower}, {self.upper}]")
        if self.homogeneous not in TRI_STATES or self.flexible not in TRI_STATES:
            raise ValueError("homogeneous/flexible must be yes, no or unknown")
        if self.homogeneous == "no" and self.upper != Theta.ZERO:
            raise ValueError("a non-homogeneous variety has θ = 0")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[Theta]:
        return self.lower if self.exact else None

    def describe(self) -> str:
        if self.exact:
            return f"θ = {self.lower}"
        return f"θ ∈ [{self.lower}, {self.upper}]"

    def to_dict(self) -> dict:
        out = {
            "lower": self.lower.token,
            "upper": self.upper.token,
            "exact": self.exact,
            "homogeneous": self.homogeneous,
            "flexible": self.flexible,
            "conjectural": self.conjectural.token if self.conjectural is not None else None,
            "certificates": [c.to_dict() for c in self.certificates],
        }
        if self.regular_locus is not None:
            out["regular_locus"] = self.regular_locus.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        reg = data.get("regular_locus")
        return cls(
            Theta.parse(data["lower"]),
            Theta.parse(data["upper"]),
            data["homogeneous"],
            data["flexible"],
            Theta.parse(data["conjectural"]) if data.get("conjectural") is not None else None,
            tuple(Certificate(c["fact"], c["citation"]) for c in data["certificates"]),
            cls.from_dict(reg) if reg is not None else None,
        )


def _exact(value: Theta, certs: List[Certificate], **kw) -> Verdict:
    return Verdict(value, value, certificates=tuple(certs), **kw)


# --------------------------------------------------------------------------
# toric varieties
# --------------------------------------------------------------------------

def theta_toric(f: Fan) -> Verdict:
    """Transitivity degree of the toric variety ``X(f)``.

    Raises:
        DegenerateInput: for a rank-0 fan.
        InvalidFan: when ``f`` violates the fan axioms.
    """
    if f.rank == 0:
        raise DegenerateInput("a rank-0 fan describes a point")
    f.require_valid()
    n = f.rank
    certs: List[Certificate] = []
    k, f_split = degenerate_split(f)
    if k:
        certs.append(Certificate(f"rays span a rank-{n - k} sublattice: X = X' x (K^*)^{k}", st.DEGENERATE))

    if n == 1:
        if k == 1:
            certs += [
                Certificate("X = K^* is a homogeneous curve", st.CURVES),
                Certificate("the coordinate is a non-constant invertible function", st.INVERTIBLE),
            ]
            return _exact(Theta.ONE, certs, homogeneous="yes")
        if len(f.rays) == 1:
            certs += [
                Certificate("X = A^1", st.CURVES),
                Certificate("affine maps move any pair of distinct points to any other", st.AFFINE_LINE),
            ]
            return _exact(Theta.TWO, certs, homogeneous="yes", flexible="yes")
        certs += [
            Certificate("X = P^1", st.CURVES),
            Certificate("PGL_2 is 3-transitive and preserves the cross-ratio", st.PROJECTIVE_LINE),
        ]
        return _exact(Theta.THREE, certs, homogeneous="yes")

    if is_complete(f):
        certs.append(Certificate("the fan is complete, so X is complete", st.FAN_DATA))
        dims = detect_projective_product(f)
        if dims is None:
            certs.append(Certificate("X is not a product of projective spaces, hence not homogeneous", st.COMPLETE_TORIC))
            return _exact(Theta.ZERO, certs, homogeneous="no")
        label = " x ".join(f"P^{d}" for d in dims)
        certs.append(Certificate(f"X = {label} is homogeneous", st.COMPLETE_TORIC))
        if len(dims) == 1:
            certs += [
                Certificate(f"X = P^{dims[0]} with a single factor", st.PRODUCT_RULE),
                Certificate("three collinear points cannot go to three non-collinear ones", st.PROJECTIVE_SPACE),
            ]
            return _exact(Theta.TWO, certs, homogeneous="yes")
        certs += [
            Certificate(f"{len(dims)} factors, so Aut(X) is not 2-transitive", st.PRODUCT_RULE),
            Certificate("2-transitive actions only occur on P^n and A^n", st.TWO_TRANSITIVE),
        ]
        return _exact(Theta.ONE, certs, homogeneous="yes")

    qa, omega = quasi_affine_envelope(f)
    if qa:
        certs.append(Certificate(f"every cone is a face of Cone(Σ(1)) = {omega!r}: X is quasi-affine", st.ENVELOPE))

    if not is_smooth_fan(f):
        certs.append(Certificate("some cone is not smooth: X has a singular point", st.SINGULAR))
        flexible = "unknown"
        if qa and k == 0:
            flexible = "yes"
            certs += [
                Certificate("X is quasi-affine and non-degenerate, hence flexible", st.TORIC_FLEXIBLE),
                Certificate("SAut(X) acts infinitely transitively on X_reg", st.FLEXIBLE_IT),
            ]
        reg = theta_toric(smooth_locus_subfan(f))
        return _exact(Theta.ZERO, certs, homogeneous="no", flexible=flexible, regular_locus=reg)

    certs.append(Certificate("every cone is smooth", st.FAN_DATA))
    if qa:
        certs.append(Certificate("X is smooth and quasi-affine, hence homogeneous", st.TORIC_SMOOTH))
        if k:
            certs.append(Certificate("X has a non-constant invertible function", st.INVERTIBLE))
            return _exact(Theta.ONE, certs, homogeneous="yes")
        certs.append(Certificate(f"X is smooth, non-degenerate, quasi-affine of dimension {n}", st.TORIC_INFINITE))
        return _exact(Theta.INF, certs, homogeneous="yes", flexible="yes")

    certs.append(Certificate("X is neither complete nor quasi-affine", st.FAN_DATA))
    if k:
        sub = theta_toric(f_split)
        if sub.homogeneous == "yes":
            certs += [
                Certificate("X' is homogeneous, so X = X' x (K^*)^k is homogeneous", st.FAN_DATA),
                Certificate("X has a non-constant invertible function", st.INVERTIBLE),
            ]
            return _exact(Theta.ONE, certs, homogeneous="yes")
        certs.append(Certificate("if X is homogeneous then θ = 1, otherwise θ = 0", st.INVERTIBLE))
        return Verdict(Theta.ZERO, Theta.ONE, certificates=tuple(certs))

    if not global_functions_cone(f).is_zero:
        certs.append(Certificate("K[X] != K and X is not quasi-affine: if homogeneous then θ = 1", st.NON_QUASI_AFFINE))
        return Verdict(Theta.ZERO, Theta.ONE, certificates=tuple(certs))
    v = Verdict(Theta.ZERO, Theta.INF, certificates=tuple(certs))
    return with_conjecture(v, qa, k == 0, n)


# --------------------------------------------------------------------------
# homogeneous spaces of linear algebraic groups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpaceDeclaration:
    """What the caller knows about a homogeneous space ``X = G/H``."""

    dim: int
    quasi_affine: bool
    space_type: str = "unknown"
    has_nonconstant_functions: str = "unknown"
    epimorphic: str = "unknown"
    name: Optional[str] = field(default=None, compare=False)
    complete: str = "unknown"

    def __post_init__(self):
        problems = []
        if self.dim < 1:
            problems.append("dimension must be positive")
        if self.space_type not in ("first", "second", "unknown"):
            problems.append("space_type must be first, second or unknown")
        for attr in ("has_nonconstant_functions", "epimorphic", "complete"):
            if getattr(self, attr) not in TRI_STATES:
                problems.append(f"{attr} must be yes, no or unknown")
        if self.epimorphic == "yes" and self.has_nonconstant_functions == "yes":
            problems.append("an epimorphic stabilizer means K[X] = K")
        if self.space_type == "second" and "no" in (self.has_nonconstant_functions,):
            problems.append("a second-type space has non-constant invertible functions")
        if self.space_type == "second" and self.epimorphic == "yes":
            problems.append("a second-type space has non-constant functions, so H is not epimorphic")
        if self.quasi_affine and (self.epimorphic == "yes" or self.has_nonconstant_functions == "no"):
            problems.append("a quasi-affine variety of positive dimension has non-constant functions")
        if self.complete == "yes" and (self.quasi_affine or self.has_nonconstant_functions == "yes"):
            problems.append("a complete variety of positive dimension is not quasi-affine and has K[X] = K")
        if problems:
            raise InconsistentDeclaration("; ".join(problems))


def special_linear_group(n: int) -> SpaceDeclaration:
    return SpaceDeclaration(n * n - 1, True, "first", "yes", "no", name=f"SL_{n}")


def general_linear_group(n: int) -> SpaceDeclaration:
    return SpaceDeclaration(n * n, True, "second", "yes", "no", name=f"GL_{n}")


def theta_homogeneous_space(d: SpaceDeclaration) -> Verdict:
    certs = [Certificate("X carries a transitive algebraic group action", st.HOMOGENEOUS_SPACE)]
    if d.space_type == "second":
        certs += [
            Certificate("second type: X has a non-constant invertible function", st.TYPE_DICHOTOMY),
            Certificate("X is of the second type", st.SECOND_TYPE),
        ]
        return _exact(Theta.ONE, certs, homogeneous="yes")
    if d.space_type == "first" and d.quasi_affine:
        if d.dim >= 2:
            certs.append(Certificate(f"first type, quasi-affine, dimension {d.dim}", st.FIRST_TYPE))
            return _exact(Theta.INF, certs, homogeneous="yes", flexible="yes")
        certs += [
            Certificate("first type: no non-constant invertible function, so X is not K^*", st.TYPE_DICHOTOMY),
            Certificate("a quasi-affine homogeneous curve without invertible functions is A^1", st.CURVES),
        ]
        return _exact(Theta.TWO, certs, homogeneous="yes")
    if not d.quasi_affine and d.has_nonconstant_functions == "yes":
        certs.append(Certificate("X is not quasi-affine and K[X] != K", st.NON_QUASI_AFFINE))
        return _exact(Theta.ONE, certs, homogeneous="yes")
    if d.epimorphic == "yes" and d.complete != "yes":
        certs.append(Certificate("H is epimorphic: K[G/H] = K", st.EPIMORPHIC_OPEN))
        return Verdict(Theta.ONE, Theta.INF, homogeneous="yes", certificates=tuple(certs))
    return Verdict(Theta.ONE, Theta.INF, homogeneous="yes", certificates=tuple(certs))


def with_conjecture(v: Verdict, quasi_affine: bool, no_invertible: bool, dim: int) -> Verdict:
    """Attach the conjectured value to an inexact verdict where the conjecture applies."""
    if v.exact or not (quasi_affine and no_invertible and dim >= 2):
        return v
    cert = Certificate("conjectured value only; bounds unchanged", st.CONJECTURE)
    return replace(v, conjectural=Theta.INF, certificates=v.certificates + (cert,))
