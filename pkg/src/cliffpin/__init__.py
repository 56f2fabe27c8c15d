"""Exact Clifford algebra and the classification of Pin group double covers."""

from .algebra import COMPLEX, MINUS_FIRST, PLUS_FIRST, REAL, Multivector, Signature, volume_element
from .automorphisms import AutoKind, apply_auto, rev, revstar, star
from .classification import PinClassification, classify_even
from .dirac_hestenes import dirac_hestenes_check
from .errors import (
    ClassificationError,
    CliffordError,
    DimensionError,
    FieldError,
    GroupTooLarge,
    InvalidBasis,
    SignatureMismatch,
)
from .gaussian import GaussianRational
from .groups import GroupId, classify_group, closure
from .matrix import Matrix
from .quotient import QuotientReport, classify_odd, decompose_odd, epsilon_map
from .rep import RepBasis, constructed_basis, dirac_basis, matrix_C, matrix_E, matrix_W, spacetime_basis, validate_rep

__version__ = "0.1.0"
