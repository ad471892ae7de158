"""Exact-arithmetic faces of Weyl-orbit polytopes for the equal-rank
families sp(2n,R), so(2p,2q), so*(2n) and g2, with the Dirac cohomology of
the attached cohomologically induced modules read off as the k-dominant
vertices of each face."""

from .errors import (InternalConsistencyError, InvalidDescriptorError,
                     InvalidParameterError, ResourceLimitError)
from .faces import Face, dirac_cohomology, face_closed_form, face_from_wl, rho_prime_closed_form
from .oracle import (BijectionReport, Check, FaceReport, certify_bijection,
                     certify_face, face_by_argmax, orbit_of_rho)
from .parabolic import (Descriptor, Factor, LeviDecomposition, descriptor_consistency,
                        enumerate_admissible, h_from_descriptor, has_compact_simple_factor,
                        levi_from_h, validate_descriptor)
from .root_data import (FAMILIES, G2, G2_RHOS, SO_EVEN, SO_STAR, SP, Root,
                        RootDatum, Vector, build_root_datum, is_g_dominant,
                        is_k_dominant, pairing)
from .weyl import (Subgroup, WeylElement, apply, compose, generate_subgroup,
                   identity, inverse, is_w1, length, orbit, reflection,
                   simple_reflections, weyl_order)

__version__ = "0.1.0"

__all__ = [
    "FAMILIES", "SP", "SO_EVEN", "SO_STAR", "G2", "G2_RHOS",
    "Vector", "Root", "RootDatum", "build_root_datum",
    "pairing", "is_k_dominant", "is_g_dominant",
    "WeylElement", "identity", "apply", "compose", "inverse", "reflection",
    "simple_reflections", "orbit", "generate_subgroup", "Subgroup",
    "is_w1", "length", "weyl_order",
    "Descriptor", "validate_descriptor", "h_from_descriptor",
    "LeviDecomposition", "Factor", "levi_from_h", "has_compact_simple_factor",
    "enumerate_admissible", "descriptor_consistency",
    "Face", "rho_prime_closed_form", "face_closed_form", "face_from_wl",
    "dirac_cohomology",
    "face_by_argmax", "certify_face", "certify_bijection", "orbit_of_rho",
    "Check", "FaceReport", "BijectionReport",
    "InvalidParameterError", "InvalidDescriptorError", "ResourceLimitError",
    "InternalConsistencyError",
]
