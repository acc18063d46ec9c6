"""Exact arithmetic for Horadam octonions and verification of their identities."""

from .errors import (
    DegenerateRootsError,
    DiscriminantMismatchError,
    HoradamError,
    NonInvertibleError,
    NotRationalError,
    PoleError,
)
from .horadam_octonion import (
    PRESETS,
    HoradamOctonion,
    UnderlinedRoots,
    og_binet,
    og_cassini,
    og_genfun_coeffs,
    og_norm,
    og_sum,
    og_term,
    preset,
    underlined_roots,
)
from .octonion import MULTIPLICATION_TABLE, Octonion, build_table
from .report import IdentityReport
from .scalars import QuadExt, Rational, make_roots, reduce_to_rational
from .sequence import (
    HoradamParams,
    w_binet,
    w_cassini_check,
    w_genfun_coeffs,
    w_sum_closed,
    w_term,
)

__version__ = "0.1.0"
