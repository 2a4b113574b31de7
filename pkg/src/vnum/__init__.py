"""Exact v-numbers of monomial ideals, with closed-form checks for edge-ideal families."""
from .errors import GuardExceeded, InvalidInput, MethodInapplicable, NotProper, Undefined, VnumError
from .kernels import BACKEND
from .monomial import (
    Monomial,
    MonomialIdeal,
    PrimeFace,
    VarSet,
    alpha,
    colon,
    contains,
    ideal_sum,
    intersect,
    make_ideal,
    min_degree_outside,
    polarize,
    power,
    product,
)
from .vnumber import AssResult, Witness, associated_primes, v_number, v_number_localized

__all__ = [
    "BACKEND", "AssResult", "GuardExceeded", "InvalidInput", "MethodInapplicable", "Monomial",
    "MonomialIdeal", "NotProper", "PrimeFace", "Undefined", "VarSet", "VnumError", "Witness",
    "alpha", "associated_primes", "colon", "contains", "ideal_sum", "intersect", "make_ideal",
    "min_degree_outside", "polarize", "power", "product", "v_number", "v_number_localized",
]
