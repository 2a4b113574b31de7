"""Ideal families: edge ideals, mixed product ideals, square-free and symbolic powers."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels as K
from .clutter import Clutter, induced, minimal_vertex_covers
from .errors import InvalidInput
from .monomial import (
    Monomial,
    MonomialIdeal,
    PrimeFace,
    VarSet,
    intersect_all,
)


def edge_ideal(C: Clutter) -> MonomialIdeal:
    return MonomialIdeal(C.vertices, [Monomial.from_support(C.n, e) for e in C.edges])


def support_clutter(I: MonomialIdeal) -> Clutter:
    """Clutter whose edges are the supports of the generators of a square-free ideal."""
    if not I.is_squarefree():
        raise InvalidInput("support clutter needs a square-free ideal")
    return Clutter(I.vars, tuple(frozenset(i for i, a in enumerate(g) if a) for g in I.gens))


def squarefree_veronese(vars: VarSet, block: range, q: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations(block, q):
        e = [0] * vars.count
        for i in combo:
            e[i] = 1
        out.append(tuple(e))
    return out


@dataclass(frozen=True)
class MixedSpec:
    """Sum of I_q J_r terms over x1..xn, y1..ym.

    A term (q, 0) is the pure summand I_q and (0, r) is J_r.  Two-block terms
    must have q strictly increasing and r strictly decreasing.
    """

    n: int
    m: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        if self.n < 1 or self.m < 0:
            raise InvalidInput("mixed ideal needs n >= 1 and m >= 0")
        if not self.terms:
            raise InvalidInput("mixed ideal needs at least one term")
        for q, r in self.terms:
            if q < 0 or r < 0 or (q == 0 and r == 0):
                raise InvalidInput(f"bad term ({q}, {r})")
            if q > self.n or r > self.m:
                raise InvalidInput(f"term ({q}, {r}) exceeds block sizes n={self.n}, m={self.m}")
        two = [t for t in self.terms if t[0] and t[1]]
        for (q1, r1), (q2, r2) in zip(two, two[1:]):
            if not (q1 < q2 and r1 > r2):
                raise InvalidInput("two-block terms need q increasing and r decreasing")

    @property
    def vars(self) -> VarSet:
        return VarSet(tuple(f"x{i}" for i in range(1, self.n + 1)) + tuple(f"y{j}" for j in range(1, self.m + 1)))

    def render(self) -> str:
        body = ",".join(f"[{q},{r}]" for q, r in self.terms)
        return f"mixed(n={self.n},m={self.m};{body})"


def mixed_ideal(spec: MixedSpec) -> MonomialIdeal:
    vs = spec.vars
    xs, ys = range(spec.n), range(spec.n, spec.n + spec.m)
    gens = []
    for q, r in spec.terms:
        left = squarefree_veronese(vs, xs, q) if q else [(0,) * vs.count]
        right = squarefree_veronese(vs, ys, r) if r else [(0,) * vs.count]
        gens.extend(tuple(a + b for a, b in zip(u, w)) for u in left for w in right)
    return MonomialIdeal(vs, gens)


def mixed_decomposition(spec: MixedSpec) -> list[MonomialIdeal]:
    """Prime components of a two-block mixed ideal (pure summands not allowed).

    For terms (q_1, r_1), ..., (q_s, r_s): all (X) with |X| = n - q_1 + 1, all
    (Y) with |Y| = m - r_s + 1, and all (X) + (Y) with |X| = n - q_{i+1} + 1,
    |Y| = m - r_i + 1 for i < s.
    """
    if any(q == 0 or r == 0 for q, r in spec.terms):
        raise InvalidInput("decomposition is for two-block terms only")
    vs = spec.vars
    xs, ys = range(spec.n), range(spec.n, spec.n + spec.m)
    qs = [q for q, _ in spec.terms]
    rs = [r for _, r in spec.terms]

    def subsets(block, size):
        if size > len(block) or size < 1:
            return []
        return [frozenset(c) for c in combinations(block, size)]

    faces = [X for X in subsets(xs, spec.n - qs[0] + 1)]
    faces += [Y for Y in subsets(ys, spec.m - rs[-1] + 1)]
    for i in range(len(qs) - 1):
        for X in subsets(xs, spec.n - qs[i + 1] + 1):
            for Y in subsets(ys, spec.m - rs[i] + 1):
                faces.append(X | Y)
    return [PrimeFace(vs, f).ideal() for f in faces]


def squarefree_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Ideal generated by the square-free monomials of I^k.

    Built by extending square-free partial products one generator at a time,
    so only square-free products are ever formed.
    """
    if k < 0:
        raise InvalidInput("square-free power needs k >= 0")
    n = I.nvars
    if k == 0:
        return MonomialIdeal._trusted(I.vars, [(0,) * n])
    # a square-free element of I^k is divisible by a product of k generators
    # with pairwise disjoint supports, each generator square-free
    sq = [g for g in I.gens if all(a <= 1 for a in g)]
    masks = [sum(1 << i for i, a in enumerate(g) if a) for g in sq]
    found = set()

    def rec(start: int, used: int, depth: int):
        if depth == k:
            found.add(used)
            return
        for i in range(start, len(masks)):
            if not masks[i] & used:
                rec(i + 1, used | masks[i], depth + 1)

    rec(0, 0, 0)
    gens = [tuple((m >> i) & 1 for i in range(n)) for m in found]
    return MonomialIdeal._trusted(I.vars, K.minimalize(gens))


def minimal_primes_squarefree(I: MonomialIdeal) -> list[PrimeFace]:
    C = support_clutter(I)
    return [PrimeFace(I.vars, c) for c in minimal_vertex_covers(C)]


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Intersection of the k-th powers of the minimal primes of a square-free I."""
    if k < 1:
        raise InvalidInput("symbolic power needs k >= 1")
    if not I.is_squarefree():
        raise InvalidInput("symbolic powers are only defined here for square-free ideals")
    if not I.is_proper():
        raise InvalidInput("symbolic power of a zero or unit ideal")
    primes = minimal_primes_squarefree(I)
    return intersect_all([prime_power(p, k) for p in primes])


def prime_power(p: PrimeFace, k: int) -> MonomialIdeal:
    """All degree-k monomials in the variables of p."""
    n = p.vars.count
    members = sorted(p.members)
    gens = []
    caps = [k] * len(members)
    for e in K.compositions(k, caps):
        v = [0] * n
        for i, a in zip(members, e):
            v[i] = a
        gens.append(tuple(v))
    return MonomialIdeal._trusted(p.vars, K.minimalize(gens))


def in_symbolic_power(primes: list[PrimeFace], k: int, f) -> bool:
    """x^a lies in the k-th symbolic power iff a . 1_P >= k for every minimal prime P."""
    e = f.exponents if isinstance(f, Monomial) else f
    return all(sum(e[i] for i in p.members) >= k for p in primes)


def forest_recursion_rhs(G, k: int) -> MonomialIdeal:
    """I(G1)^[k] + x_{n-1} x_n I(G2)^[k-1] for a forest whose last vertex is a leaf on x_{n-1}."""
    n = G.n
    if frozenset((n - 2, n - 1)) not in set(G.edges):
        raise InvalidInput("forest recursion needs x_{n-1} x_n to be an edge")
    I1 = squarefree_power(edge_ideal(induced(G, n - 1)), k)
    I2 = squarefree_power(edge_ideal(induced(G, n - 2)), k - 1)
    leaf = Monomial.from_support(n, (n - 2, n - 1))
    shifted = MonomialIdeal._trusted(G.vertices, K.minimalize(
        [tuple(a + b for a, b in zip(g, leaf.exponents)) for g in I2.gens]))
    return I1 + shifted
