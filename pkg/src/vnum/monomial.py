"""Monomials and monomial ideals over a fixed, ordered set of variables.

Coefficients are never represented: everything here is monomial
combinatorics and holds over any field.  A monomial is an exponent vector;
an ideal is stored as its antichain of minimal generators in canonical order
(total degree, then lex-descending with ``x1 > x2 > ...``), so equal ideals
compare and print identically.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels as K
from .errors import InvalidInput, Undefined

Exps = tuple[int, ...]


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InvalidInput(f"duplicate variable labels in {self.names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "VarSet":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def count(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidInput(f"unknown variable {name!r}") from None


@dataclass(frozen=True)
class Monomial:
    exponents: Exps

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise InvalidInput("negative exponent")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> "Monomial":
        e = [0] * n
        e[i] = 1
        return cls(tuple(e))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        e = [0] * n
        for i in support:
            e[i] = 1
        return cls(tuple(e))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return K.divides(self.exponents, other.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        return K.canonical_key(self.exponents)

    def render(self, vars: VarSet | None = None) -> str:
        names = vars.names if vars is not None else VarSet.standard(len(self.exponents)).names
        return render_exponents(self.exponents, names)

    def __str__(self):
        return self.render()


def render_exponents(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def _exps(f) -> Exps:
    return f.exponents if isinstance(f, Monomial) else tuple(f)


class MonomialIdeal:
    """Ideal generated by monomials, held as its minimal generators.

    ``gens`` is a tuple of exponent tuples; ``monomials`` wraps them.  The zero
    ideal has no generators and the unit ideal is generated by ``1``.
    """

    __slots__ = ("vars", "gens", "__weakref__")

    def __init__(self, vars: VarSet, gens: Iterable = ()):
        raw = [_exps(g) for g in gens]
        for g in raw:
            if len(g) != vars.count:
                raise InvalidInput(f"monomial of length {len(g)} in a ring with {vars.count} variables")
            if any(a < 0 for a in g):
                raise InvalidInput("negative exponent")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "gens", tuple(K.minimalize(raw)))

    @classmethod
    def _trusted(cls, vars: VarSet, minimal_gens) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vars", vars)
        object.__setattr__(obj, "gens", tuple(minimal_gens))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @property
    def nvars(self) -> int:
        return self.vars.count

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(g) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def caps(self) -> Exps:
        """Largest exponent of each variable over the minimal generators."""
        if not self.gens:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self.gens))

    def __contains__(self, f) -> bool:
        return K.in_ideal(_exps(f), self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.vars == other.vars and self.gens == other.gens

    def __hash__(self):
        return hash((self.vars, self.gens))

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    def render(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(render_exponents(g, self.vars.names) for g in self.gens) + ")"

    __str__ = render

    def __repr__(self):
        return f"MonomialIdeal{self.render()}"


@dataclass(frozen=True)
class PrimeFace:
    """Monomial prime generated by a set of variables, e.g. ``(x2, x4)``."""

    vars: VarSet
    members: frozenset[int]

    @classmethod
    def from_mask(cls, vars: VarSet, mask: int) -> "PrimeFace":
        return cls(vars, frozenset(i for i in range(vars.count) if mask >> i & 1))

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << i
        return m

    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def incidence(self) -> Exps:
        return tuple(1 if i in self.members else 0 for i in range(self.vars.count))

    def ideal(self) -> MonomialIdeal:
        n = self.vars.count
        return MonomialIdeal._trusted(
            self.vars, sorted((Monomial.var(n, i).exponents for i in self.members), key=K.canonical_key)
        )

    def render(self) -> str:
        return "(" + ", ".join(self.vars.names[i] for i in sorted(self.members)) + ")"

    __str__ = render


def make_ideal(vars: VarSet, raw: Iterable) -> MonomialIdeal:
    return MonomialIdeal(vars, raw)


def maximal_ideal(vars: VarSet) -> MonomialIdeal:
    return PrimeFace(vars, frozenset(range(vars.count))).ideal()


def _same_ring(*ideals: MonomialIdeal) -> VarSet:
    vs = ideals[0].vars
    for I in ideals[1:]:
        if I.vars != vs:
            raise InvalidInput("ideals live over different variable sets")
    return vs


def contains(I: MonomialIdeal, f) -> bool:
    return _exps(f) in I


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    vs = _same_ring(I, J)
    return MonomialIdeal._trusted(vs, K.minimalize(I.gens + J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    vs = _same_ring(I, J)
    return MonomialIdeal._trusted(vs, K.minimalize(
        [tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens]))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise InvalidInput(f"power exponent must be >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    vs = _same_ring(I, J)
    # a generator of one ideal lying in the other is already in the meet and
    # absorbs every lcm it takes part in
    only_i = K.filter_outside(I.gens, J.gens)
    only_j = K.filter_outside(J.gens, I.gens)
    out_i, out_j = set(only_i), set(only_j)
    shared = [g for g in I.gens if g not in out_i] + [h for h in J.gens if h not in out_j]
    lcms = K.lcm_outside(only_i, only_j, ()) if only_i and only_j else []
    return MonomialIdeal._trusted(vs, K.minimalize(shared + lcms))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise InvalidInput("empty intersection")
    # smallest first keeps the intermediate lcm sets small
    ordered = sorted(ideals, key=len)
    result = ordered[0]
    for J in ordered[1:]:
        result = intersect(result, J)
    return result


def colon(I: MonomialIdeal, J) -> MonomialIdeal:
    """``(I : J)``; ``J`` may be an ideal, a PrimeFace or a single monomial."""
    if isinstance(J, PrimeFace):
        J = J.ideal()
    if not isinstance(J, MonomialIdeal):
        f = _exps(J)
        if len(f) != I.nvars:
            raise InvalidInput("monomial length does not match the ring")
        return MonomialIdeal._trusted(I.vars, K.colon_monomial(I.gens, f))
    _same_ring(I, J)
    if J.is_zero():
        raise InvalidInput("colon by the zero ideal")
    rest = colon_outside(I, J.gens)
    return MonomialIdeal._trusted(I.vars, K.minimalize(list(I.gens) + rest))


def colon_outside(I: MonomialIdeal, J_gens, max_degree: int = -1) -> list:
    """Minimal generators of (I : J) that lie outside I, optionally degree-bounded.

    Every (I : g) contains I and monomial ideals form a distributive lattice,
    so (I : J) = I + (meet over g of the part of (I : g) outside I).  Taking
    lcms never lowers degree, which makes the degree bound safe to apply at
    every step.
    """
    parts = []
    for g in J_gens:
        part = K.filter_outside(K.colon_monomial(I.gens, g), I.gens)
        if max_degree >= 0:
            part = [h for h in part if sum(h) <= max_degree]
        parts.append(part)
    parts.sort(key=len)
    rest = parts[0]
    for part in parts[1:]:
        if not rest:
            break
        rest = K.minimalize(K.lcm_outside(rest, part, I.gens, max_degree))
    return rest


def alpha(I: MonomialIdeal) -> int:
    if I.is_zero():
        raise Undefined("alpha of the zero ideal")
    return min(sum(g) for g in I.gens)


def min_degree_outside(J: MonomialIdeal, I: MonomialIdeal) -> int | None:
    """alpha(J/I) for I contained in J; None when J == I.

    Any monomial of J outside I is a multiple of a generator of J that is
    itself outside I, so scanning the generators of J suffices.
    """
    _same_ring(I, J)
    if K.filter_outside(I.gens, J.gens):
        raise InvalidInput("min_degree_outside needs I contained in J")
    degrees = [sum(g) for g in K.filter_outside(J.gens, I.gens)]
    return min(degrees) if degrees else None


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return all(g in J for g in I.gens)


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    origin: dict[int, tuple[int, int]]  # new index -> (old index, copy number starting at 1)


def polarize(I: MonomialIdeal) -> Polarization:
    if I.is_zero():
        raise InvalidInput("polarization of the zero ideal")
    caps = I.caps()
    names = []
    origin = {}
    offset = []
    for i, r in enumerate(caps):
        offset.append(len(names))
        for j in range(1, r + 1):
            origin[len(names)] = (i, j)
            names.append(f"{I.vars.names[i]}_{j}")
    vs = VarSet(tuple(names))
    gens = []
    for g in I.gens:
        e = [0] * len(names)
        for i, a in enumerate(g):
            for j in range(a):
                e[offset[i] + j] = 1
        gens.append(tuple(e))
    return Polarization(MonomialIdeal(vs, gens), origin)


_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*")


def parse_monomial(vars: VarSet, text: str) -> Monomial:
    """Parse ``"x1^2*x3"`` (or ``"1"``) over ``vars``."""
    text = text.strip()
    e = [0] * vars.count
    if text == "1":
        return Monomial(tuple(e))
    for part in text.split("*"):
        m = _FACTOR.fullmatch(part)
        if not m:
            raise InvalidInput(f"bad monomial factor {part!r}")
        e[vars.index(m.group(1))] += int(m.group(2) or 1)
    return Monomial(tuple(e))
