"""Kernel dispatch: compiled ``_speedups`` when importable, ``_pykernels`` otherwise.

Set ``VNUM_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
active implementation.  Bitmask kernels need at most 63 variables; wider
inputs always take the Python path.
"""
import os

from . import _pykernels as py

_MAX_BITS = 63

try:
    if os.environ.get("VNUM_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-python backend forced")
    from . import _speedups as _ext
    BACKEND = "cython"
except ImportError:
    _ext = None
    BACKEND = "python"

canonical_key = py.canonical_key
divides = py.divides
compositions = py.compositions
products = py.products
lcms = py.lcms


def use_python():
    """Context helper for benchmarks and tests: swap in the fallback."""
    global _ext, BACKEND
    saved = _ext, BACKEND
    _ext, BACKEND = None, "python"
    return saved


def restore(saved):
    global _ext, BACKEND
    _ext, BACKEND = saved


def minimalize(gens):
    if _ext is None:
        return py.minimalize(gens)
    gens = list(gens)
    if not gens:
        return []
    return sorted(_ext.minimalize(gens, len(gens[0])), key=canonical_key)


def in_ideal(f, gens):
    if _ext is None or not gens:
        return py.in_ideal(f, gens)
    return _ext.in_ideal(f, gens)


def filter_outside(cands, ideal):
    """Candidates that do not lie in the ideal generated by ``ideal``."""
    cands = list(cands)
    if _ext is None or not cands:
        return py.filter_outside(cands, ideal)
    return _ext.filter_outside(cands, list(ideal), len(cands[0]))


def lcm_outside(gens_a, gens_b, ideal, max_degree=-1):
    if _ext is None or not gens_a or not gens_b:
        return py.lcm_outside(gens_a, gens_b, ideal, max_degree)
    return _ext.lcm_outside(list(gens_a), list(gens_b), list(ideal), len(gens_a[0]), max_degree)


def colon_monomial(gens, f):
    if _ext is None or not gens:
        return py.colon_monomial(gens, f)
    return sorted(_ext.colon_monomial(list(gens), f, len(f)), key=canonical_key)


def prime_colon_mask(gens, f):
    if _ext is None or len(f) > _MAX_BITS:
        return py.prime_colon_mask(gens, f)
    return _ext.prime_colon_mask(gens, f)


def scan_witnesses(gens, caps, mode=0, target=-1, max_degree=-1):
    if _ext is None or len(caps) > _MAX_BITS:
        return py.scan_witnesses(gens, caps, mode, target, max_degree)
    return _ext.scan_witnesses(list(gens), list(caps), mode, target, max_degree)


def is_cover_stable(edges, a):
    if _ext is None or max(edges, default=0).bit_length() > _MAX_BITS:
        return py.is_cover_stable(edges, a)
    return _ext.is_cover_stable(list(edges), a)


def cover_stable_sets(nverts, edges, size, first_only=False):
    if _ext is None or nverts > _MAX_BITS:
        return py.cover_stable_sets(nverts, edges, size, first_only)
    return _ext.cover_stable_sets(nverts, list(edges), size, first_only)
