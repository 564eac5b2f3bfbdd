"""Exact toric geometry and transitivity-degree verdicts."""

__version__ = "0.1.0"

from .classify import (  # noqa: E402
    Certificate,
    SpaceDeclaration,
    Theta,
    Verdict,
    general_linear_group,
    special_linear_group,
    theta_homogeneous_space,
    theta_toric,
)
from .cone import Cone, RationalCone, dual_cone, faces, hilbert_basis, is_face_of, is_smooth_cone  # noqa: E402
from .cox import cox_presentation, divisor_class_group  # noqa: E402
from .errors import *  # noqa: E402,F401,F403
from .fan import (  # noqa: E402
    Fan,
    degenerate_split,
    detect_projective_product,
    is_complete,
    is_quasi_affine,
    is_smooth_fan,
    quasi_affine_envelope,
    smooth_locus_subfan,
    validate,
)
from .surfaces import SurfaceForm, cone_normal_form_2d, hypersurface_family, surface_report, surfaces_isomorphic  # noqa: E402
