"""Associated primes and v-numbers of monomial ideals.

The v-number computed here is the monomial-witness v-number: the least degree
of a monomial f with (I : f) a prime ideal (every such prime is associated).
Three routes are provided and cross-checked in the tests:

* ``stable-set``: square-free ideals only, via stable sets A whose
  neighbourhood is a minimal vertex cover of the support clutter (f = t_A);
* ``colon``: ideals without embedded primes, as the least degree of
  (I : p) outside I over the associated primes p;
* ``witness``: a direct scan of monomials by increasing degree.

Witness search box.  (I : f) is generated by the monomials g / gcd(g, f), so
replacing f by min(f, caps) componentwise (caps = largest exponent of each
variable over the generators) leaves the colon unchanged and never raises
the degree.  Every colon value, and a minimum-degree witness of it, therefore
lives in the box 0 <= f <= caps, which is scanned in canonical order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels as K
from .clutter import iter_cover_stable_sets, min_cover_stable_set, minimal_vertex_covers
from .constructors import support_clutter
from .errors import GuardExceeded, InvalidInput, MethodInapplicable, NotProper
from .monomial import Monomial, MonomialIdeal, PrimeFace, colon, colon_outside, polarize

METHODS = ("auto", "stable-set", "colon", "witness")


@dataclass(frozen=True)
class Witness:
    f: Monomial
    prime: PrimeFace

    @property
    def degree(self) -> int:
        return self.f.degree


def certify(I: MonomialIdeal, f: Monomial) -> Witness:
    """Build a Witness after checking that (I : f) is the prime it claims."""
    mask = K.prime_colon_mask(I.gens, f.exponents)
    if mask < 0:
        raise InvalidInput(f"(I : {f.render(I.vars)}) is not a prime ideal")
    p = PrimeFace.from_mask(I.vars, mask)
    if colon(I, f) != p.ideal():
        raise AssertionError("colon kernel disagrees with the ideal-level colon")
    return Witness(f, p)


@dataclass(frozen=True)
class AssResult:
    primes: tuple[PrimeFace, ...]
    embedded: tuple[bool, ...] = field(default=())

    @classmethod
    def build(cls, primes) -> "AssResult":
        primes = tuple(sorted(set(primes), key=PrimeFace.sort_key))
        flags = tuple(any(q.members < p.members for q in primes) for p in primes)
        return cls(primes, flags)

    @property
    def has_embedded(self) -> bool:
        return any(self.embedded)

    def minimal(self) -> tuple[PrimeFace, ...]:
        return tuple(p for p, e in zip(self.primes, self.embedded) if not e)


def _require_proper(I: MonomialIdeal):
    if not I.is_proper():
        raise NotProper("v-numbers and associated primes need a proper nonzero ideal")


def associated_primes(I: MonomialIdeal, max_witness_degree: int | None = None) -> AssResult:
    _require_proper(I)
    if I.is_squarefree():
        return AssResult.build(PrimeFace(I.vars, c) for c in minimal_vertex_covers(support_clutter(I)))
    hits, complete = K.scan_witnesses(I.gens, I.caps(), 2, -1, _deg(max_witness_degree))
    if not complete:
        raise GuardExceeded(f"associated-prime scan exceeds witness degree {max_witness_degree}")
    return AssResult.build(PrimeFace.from_mask(I.vars, mask) for _, mask in hits)


def _deg(limit: int | None) -> int:
    return -1 if limit is None else limit


def v_number(I: MonomialIdeal, method: str = "auto", *, max_witness_degree: int | None = None,
             max_subsets: int | None = None) -> tuple[int, Witness]:
    _require_proper(I)
    if method not in METHODS:
        raise InvalidInput(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "auto":
        if I.is_squarefree():
            method = "stable-set"
        else:
            # the full scan for Ass already yields the minimal witness
            return _v_witness(I, max_witness_degree)
    if method == "stable-set":
        return _v_stable(I, max_subsets)
    if method == "colon":
        return _v_colon(I, max_witness_degree)
    return _v_witness(I, max_witness_degree)


def _v_stable(I: MonomialIdeal, max_subsets: int | None):
    if not I.is_squarefree():
        raise MethodInapplicable("the stable-set method needs a square-free ideal")
    C = support_clutter(I)
    hit = min_cover_stable_set(C, max_subsets)
    if hit is None:
        raise AssertionError("no stable set with a minimal-cover neighbourhood")
    A, _ = hit
    return len(A), certify(I, Monomial.from_support(I.nvars, A))


def _v_witness(I: MonomialIdeal, max_witness_degree: int | None):
    hits, _ = K.scan_witnesses(I.gens, I.caps(), 0, -1, _deg(max_witness_degree))
    if not hits:
        raise GuardExceeded(f"no witness up to degree {max_witness_degree}")
    f, _ = hits[0]
    w = certify(I, Monomial(f))
    return w.degree, w


def _v_colon(I: MonomialIdeal, max_witness_degree: int | None):
    ass = associated_primes(I, max_witness_degree)
    if ass.has_embedded:
        raise MethodInapplicable("the colon method needs an ideal without embedded primes")
    best = -1
    best_gens = []
    for p in ass.primes:
        # only generators of degree <= best can improve the minimum
        outside = colon_outside(I, p.ideal().gens, best)
        if outside:
            d = min(sum(h) for h in outside)
            if best < 0 or d < best:
                best = d
                best_gens = []
            best_gens.extend(h for h in outside if sum(h) == best)
    if best < 0:
        raise AssertionError("every (I : p) equals I")
    d = best
    # recover a certificate at degree d: the minimizing generators first, then the box
    for g in sorted(best_gens, key=K.canonical_key):
        if K.prime_colon_mask(I.gens, g) >= 0:
            return d, certify(I, Monomial(g))
    for f in K.compositions(d, I.caps()):
        if K.prime_colon_mask(I.gens, f) >= 0:
            return d, certify(I, Monomial(f))
    raise AssertionError(f"colon method found degree {d} but no certifying monomial")


def v_number_localized(I: MonomialIdeal, p: PrimeFace, max_witness_degree: int | None = None) -> int:
    """Least degree of f with (I : f) = p exactly."""
    _require_proper(I)
    ass = associated_primes(I, max_witness_degree)
    if p not in ass.primes:
        raise InvalidInput(f"{p} is not an associated prime")
    hits, _ = K.scan_witnesses(I.gens, I.caps(), 1, p.mask, _deg(max_witness_degree))
    if not hits:
        raise GuardExceeded(f"no witness for {p} up to degree {max_witness_degree}")
    return sum(hits[0][0])


def localized_witnesses(I: MonomialIdeal) -> dict[PrimeFace, Witness]:
    """Minimum-degree witness for every associated prime (first in canonical order)."""
    _require_proper(I)
    hits, _ = K.scan_witnesses(I.gens, I.caps(), 2, -1, -1)
    return {PrimeFace.from_mask(I.vars, mask): Witness(Monomial(f), PrimeFace.from_mask(I.vars, mask))
            for f, mask in hits}


def stable_set_witnesses(I: MonomialIdeal):
    """(A, N(A)) pairs of A_C for the support clutter, by size."""
    return iter_cover_stable_sets(support_clutter(I))


@dataclass(frozen=True)
class PolarizationCheck:
    v_pol: int
    v_orig: int
    has_embedded: bool

    @property
    def leq(self) -> bool:
        return self.v_pol <= self.v_orig

    @property
    def holds(self) -> bool:
        return self.leq and (self.has_embedded or self.v_pol == self.v_orig)


def polarization_vnumber_check(I: MonomialIdeal) -> PolarizationCheck:
    _require_proper(I)
    pol = polarize(I).ideal
    v_pol, _ = v_number(pol, "witness")
    v_orig, _ = v_number(I, "witness")
    return PolarizationCheck(v_pol, v_orig, associated_primes(I).has_embedded)
