"""Whitelisted statements that verdict certificates may cite.

Keys are the citation strings carried by certificates; values state the fact
being applied.  Entries whose key starts with ``structural:`` are facts about
the input data itself rather than theorems.
"""

DEFINITION = "definition: transitivity degree"
CURVES = "classification: homogeneous curves"
AFFINE_LINE = "affine line: affine transformations"
PROJECTIVE_LINE = "projective line: cross-ratio"
PROJECTIVE_SPACE = "projective space: collinear triples"
TWO_TRANSITIVE = "classification: 2-transitive algebraic group actions"
COMPLETE_TORIC = "criterion: complete homogeneous toric varieties"
PRODUCT_RULE = "rule: products of projective spaces"
INVERTIBLE = "theorem: invertible regular functions"
NON_QUASI_AFFINE = "proposition: not quasi-affine with nonconstant functions"
DEGENERATE = "fact: degenerate toric varieties split off a torus"
ENVELOPE = "fact: quasi-affine toric envelope"
TORIC_SMOOTH = "theorem: quasi-affine toric varieties (a)"
TORIC_FLEXIBLE = "theorem: quasi-affine toric varieties (b)"
TORIC_INFINITE = "theorem: quasi-affine toric varieties (c)"
FLEXIBLE_IT = "theorem: flexibility and infinite transitivity"
TYPE_DICHOTOMY = "lemma: first and second type"
FIRST_TYPE = "proposition: homogeneous spaces of the first type"
SECOND_TYPE = "proposition: homogeneous spaces of the second type"
HOMOGENEOUS_SPACE = "fact: homogeneous spaces are homogeneous varieties"
EPIMORPHIC_OPEN = "open problem: epimorphic subgroups"
CONJECTURE = "conjecture: quasi-affine homogeneous varieties"
CYCLIC_QUOTIENT = "example: cyclic quotient surfaces"
SURFACE_ISO = "criterion: isomorphism of cyclic quotient surfaces"
FAMILY_OPEN = "open question: hypersurfaces x_{n+1}^b = x_1...x_n"
SINGULAR = "structural: Aut preserves Sing(X)"
FAN_DATA = "structural: fan data"

STATEMENTS = {
    DEFINITION: "θ(X) is the largest m such that Aut(X) acts m-transitively on X; "
    "it is ∞ if that holds for all m and 0 if Aut(X) is not transitive.",
    CURVES: "A smooth curve with infinite automorphism group is P^1, A^1 or A^1\\{0}; "
    "each is a homogeneous space and θ(P^1) = 3, θ(A^1) = 2, θ(A^1\\{0}) = 1.",
    AFFINE_LINE: "Aut(A^1) is the group of affine maps x -> ax + b: every pair of distinct points "
    "can be sent to every other pair, while two fixed points force the identity.",
    PROJECTIVE_LINE: "PGL_2 sends any triple of distinct points of P^1 to any other triple and "
    "preserves the cross-ratio of four points.",
    PROJECTIVE_SPACE: "For n >= 2, PGL_{n+1} cannot send three collinear points of P^n to three "
    "non-collinear ones, so θ(P^n) = 2.",
    TWO_TRANSITIVE: "An algebraic group acting effectively with θ_G(X) >= 2 is PGL_{n+1} on P^n or an "
    "affine group L ⋉ G_a^n on A^n with L in {G_m (n = 1), SL_n, Sp_n} up to scalars.",
    COMPLETE_TORIC: "A complete toric variety is homogeneous exactly when it is a product "
    "P^{n_1} x ... x P^{n_k}.",
    PRODUCT_RULE: "For X = P^{n_1} x ... x P^{n_k}, θ(X) >= 2 holds exactly when k = 1.",
    INVERTIBLE: "An irreducible homogeneous variety with a non-constant invertible regular function "
    "has θ(X) = 1.",
    NON_QUASI_AFFINE: "An irreducible homogeneous variety that is not quasi-affine and has K[X] != K "
    "has θ(X) = 1.",
    DEGENERATE: "A toric variety has a non-constant invertible function iff its rays do not span N_Q, "
    "iff X = X' x (K^*)^k with X' non-degenerate.",
    ENVELOPE: "A quasi-affine toric variety X(Σ) is an open subset of the affine X(ω), ω = Cone(Σ(1)), "
    "with complement of codimension >= 2; Σ consists of faces of ω.",
    TORIC_SMOOTH: "A smooth quasi-affine toric variety is homogeneous.",
    TORIC_FLEXIBLE: "A non-degenerate quasi-affine toric variety is flexible.",
    TORIC_INFINITE: "A smooth, non-degenerate, quasi-affine toric variety of dimension >= 2 has θ(X) = ∞.",
    FLEXIBLE_IT: "For an irreducible quasi-affine variety of dimension >= 2, flexibility is equivalent to "
    "SAut(X) acting (infinitely) transitively on X_reg.",
    TYPE_DICHOTOMY: "A homogeneous space G/H is of the second type iff it carries a non-constant "
    "invertible regular function.",
    FIRST_TYPE: "A quasi-affine homogeneous space of the first type of dimension >= 2 has θ(X) = ∞.",
    SECOND_TYPE: "A homogeneous space of the second type has θ(X) = 1.",
    HOMOGENEOUS_SPACE: "A transitive algebraic group action acts by automorphisms, so a homogeneous "
    "space is a homogeneous variety and θ(X) >= 1.",
    EPIMORPHIC_OPEN: "For an epimorphic subgroup H of a connected linear group G, θ(G/H) is not known "
    "in general.",
    CONJECTURE: "Conjecturally, an irreducible homogeneous quasi-affine variety of dimension >= 2 with "
    "only constant invertible functions has θ(X) = ∞.",
    CYCLIC_QUOTIENT: "X_{a,b} is the quotient of A^2 by a cyclic group of order b; its smooth locus is "
    "homogeneous, and it is a homogeneous space SL_2/H iff the quotient weight is 1.",
    SURFACE_ISO: "X_{a,b} and X_{a',b'} are isomorphic iff b = b' and a = a' or aa' ≡ 1 mod b.",
    FAMILY_OPEN: "Which smooth loci X(n,b)_reg (n >= 3, b >= 2) are homogeneous spaces is an open question.",
    SINGULAR: "Automorphisms map the singular locus to itself, so a singular variety is not homogeneous "
    "and θ(X) = 0.",
    FAN_DATA: "Computed directly from the fan: completeness, smoothness, ray span, envelope test.",
}
