"""Clutters and simple graphs on vertices ``x1..xn``.

Vertex sets are handled as frozensets of 0-based indices at the API surface
and as int bitmasks inside the enumerations.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from random import Random
from typing import Iterable, Iterator

from . import kernels as K
from .errors import GuardExceeded, InvalidInput
from .monomial import VarSet

VertexSet = frozenset


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _unmask(m: int) -> frozenset[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def _set_key(s) -> tuple:
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class Clutter:
    vertices: VarSet
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = self.vertices.count
        edges = sorted({frozenset(e) for e in self.edges}, key=_set_key)
        for e in edges:
            if not e:
                raise InvalidInput("empty hyperedge")
            if max(e) >= n or min(e) < 0:
                raise InvalidInput(f"edge {sorted(e)} uses a vertex outside 0..{n - 1}")
        for a, b in combinations(edges, 2):
            if a < b or b < a:
                raise InvalidInput("hyperedges must form an antichain")
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def n(self) -> int:
        return self.vertices.count

    @property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(_mask(e) for e in self.edges)

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def render(self) -> str:
        body = ",".join("-".join(str(v + 1) for v in sorted(e)) for e in self.edges)
        return f"graph{{n={self.n}; edges=[{body}]}}"


class Graph(Clutter):
    """Simple undirected graph: a clutter whose edges all have two vertices."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_graph():
            raise InvalidInput("graph edges must have exactly two distinct vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(VarSet.standard(n), tuple(frozenset(e) for e in edges))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidInput("path needs n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 2:
        raise InvalidInput("complete graph needs n >= 2")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} on x1..xa (one side) and x{a+1}..x{a+b}."""
    if a < 1 or b < 1:
        raise InvalidInput("complete bipartite graph needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_tree(n: int, seed: int) -> Graph:
    """Seeded random labelled tree whose last vertex is a leaf hanging off the second-to-last.

    That labelling is the one the forest recursion for square-free powers needs.
    """
    if n < 2:
        raise InvalidInput("tree needs n >= 2")
    rng = Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    leaf = max(v for v in range(n) if degree[v] == 1)
    parent = next(u if v == leaf else v for u, v in edges if leaf in (u, v))
    order = [v for v in range(n) if v not in (leaf, parent)] + [parent, leaf]
    return relabel(Graph.from_edges(n, edges), order)


def distances(G: Graph, source: int) -> list[float]:
    adj = G.adjacency()
    dist = [float("inf")] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == float("inf"):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_power(G: Graph, k: int) -> Graph:
    if k < 1:
        raise InvalidInput("graph power needs k >= 1")
    edges = []
    for u in range(G.n):
        d = distances(G, u)
        edges.extend((u, v) for v in range(u + 1, G.n) if 1 <= d[v] <= k)
    return Graph(G.vertices, tuple(frozenset(e) for e in edges))


def is_connected(G: Graph) -> bool:
    return G.n == 0 or all(d != float("inf") for d in distances(G, 0))


def diameter(G: Graph) -> float:
    return max(max(distances(G, u)) for u in range(G.n))


def is_stable(C: Clutter, A: Iterable[int]) -> bool:
    a = _mask(A)
    return all(m & ~a for m in C.edge_masks)


def neighborhood(C: Clutter, A: Iterable[int]) -> frozenset[int]:
    """Vertices v outside A such that A + v contains an edge."""
    a = _mask(A)
    nb = 0
    for m in C.edge_masks:
        rest = m & ~a
        if rest and rest & (rest - 1) == 0:
            nb |= rest
    return _unmask(nb)


def is_vertex_cover(C: Clutter, S: Iterable[int]) -> bool:
    s = _mask(S)
    return all(m & s for m in C.edge_masks)


def is_minimal_vertex_cover(C: Clutter, S: Iterable[int]) -> bool:
    s = _mask(S)
    masks = C.edge_masks
    if not all(m & s for m in masks):
        return False
    for v in S:
        bit = 1 << v
        if not any(m & s == bit for m in masks):
            return False
    return True


def minimal_vertex_covers(C: Clutter) -> list[frozenset[int]]:
    """All inclusion-minimal transversals, ordered by size then lexicographically.

    Branches on the vertices of the first uncovered edge; every minimal cover
    is reached, and non-minimal leaves are filtered.
    """
    return [_unmask(m) for m in _minimal_covers_masks(C.edge_masks)]


@lru_cache(maxsize=256)
def _minimal_covers_masks(masks: tuple[int, ...]) -> tuple[int, ...]:
    found: set[int] = set()

    def rec(chosen: int, forbidden: int):
        for e in masks:
            if not e & chosen:
                break
        else:
            found.add(chosen)
            return
        free = e & ~forbidden
        while free:
            bit = free & -free
            free ^= bit
            rec(chosen | bit, forbidden)
            # later branches exclude earlier choices on this edge
            forbidden |= bit

    rec(0, 0)
    minimal = [m for m in found if _is_minimal_cover_mask(masks, m)]
    return tuple(sorted(minimal, key=lambda m: _set_key(_unmask(m))))


def _is_minimal_cover_mask(masks, s: int) -> bool:
    m = s
    while m:
        bit = m & -m
        m ^= bit
        if not any(e & s == bit for e in masks):
            return False
    return True


def iter_cover_stable_sets(C: Clutter, max_subsets: int | None = None) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """Yield ``(A, N_C(A))`` for A in A_C, by size then lexicographically."""
    masks = C.edge_masks
    budget = max_subsets
    for size in range(C.n + 1):
        if budget is not None:
            budget -= comb(C.n, size)
            if budget < 0:
                raise GuardExceeded(f"stable-set scan exceeds {max_subsets} subsets")
        for a, nb in K.cover_stable_sets(C.n, masks, size):
            yield _unmask(a), _unmask(nb)


def stable_sets_with_cover_neighborhoods(C: Clutter) -> list[frozenset[int]]:
    return [A for A, _ in iter_cover_stable_sets(C)]


def min_cover_stable_set(C: Clutter, max_subsets: int | None = None) -> tuple[frozenset[int], frozenset[int]] | None:
    """First member of A_C of minimum size, with its neighborhood."""
    masks = C.edge_masks
    spent = 0
    for size in range(C.n + 1):
        spent += comb(C.n, size)
        if max_subsets is not None and spent > max_subsets:
            raise GuardExceeded(f"stable-set scan exceeds {max_subsets} subsets")
        hit = K.cover_stable_sets(C.n, masks, size, True)
        if hit:
            a, nb = hit[0]
            return _unmask(a), _unmask(nb)
    return None


def min_cover_stable_sets(C: Clutter) -> list[frozenset[int]]:
    """Every member of A_C of minimum size."""
    masks = C.edge_masks
    for size in range(C.n + 1):
        hits = K.cover_stable_sets(C.n, masks, size)
        if hits:
            return [_unmask(a) for a, _ in hits]
    return []


def matching_number(G: Graph) -> int:
    """Exact maximum matching size by branching on the lowest unmatched vertex."""
    adj = [_mask(s) for s in G.adjacency()]

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        # drop isolated vertices among the available ones
        while avail:
            v = (avail & -avail).bit_length() - 1
            if adj[v] & avail:
                break
            avail &= ~(1 << v)
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        top = best(rest)
        nbrs = adj[v] & rest
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            top = max(top, 1 + best(rest & ~bit))
        return top

    return best((1 << G.n) - 1)


def matchings(G: Graph, k: int) -> list[tuple[frozenset[int], ...]]:
    """All sets of k pairwise disjoint edges, in lexicographic order of edge positions."""
    out = []
    edges = G.edges

    def rec(start: int, used: int, chosen: list):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for i in range(start, len(edges)):
            m = _mask(edges[i])
            if not m & used:
                chosen.append(edges[i])
                rec(i + 1, used | m, chosen)
                chosen.pop()

    rec(0, 0, [])
    return out


def even_connection_graph(G: Graph, matching_edges: Iterable[Iterable[int]]) -> Graph:
    """Graph H on V(G) minus supp(mu) with ``I(H) = (I(G)^[s+1] : mu)``.

    ``u`` and ``v`` are joined when adjacent in G or joined by an alternating
    path u - p1 = p2 - ... = p2r - v whose '=' steps are distinct edges of mu.
    H keeps the full vertex labelling of G; vertices of supp(mu) are isolated.
    """
    mu = [frozenset(e) for e in matching_edges]
    edge_set = set(G.edges)
    partner: dict[int, int] = {}
    for e in mu:
        if e not in edge_set:
            raise InvalidInput(f"edge {sorted(e)} is not an edge of G")
        u, v = tuple(e)
        if u in partner or v in partner:
            raise InvalidInput("matching edges must be pairwise disjoint")
        partner[u], partner[v] = v, u
    adj = G.adjacency()
    outside = [v for v in range(G.n) if v not in partner]
    joined = set()
    for u in outside:
        for v in adj[u]:
            if v not in partner:
                joined.add(frozenset((u, v)))
        # depth-first over alternating paths; each mu-edge used at most once
        stack = [(u, frozenset())]
        while stack:
            cur, used = stack.pop()
            for p in adj[cur]:
                if p not in partner:
                    continue
                q = partner[p]
                e = frozenset((p, q))
                if e in used:
                    continue
                nused = used | {e}
                for w in adj[q]:
                    if w not in partner and w != u:
                        joined.add(frozenset((u, w)))
                stack.append((q, nused))
    return Graph(G.vertices, tuple(joined))


def relabel(G: Graph, order: list[int]) -> Graph:
    """Rename vertex ``order[i]`` to ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(G.n, [tuple(pos[v] for v in e) for e in G.edges])


def induced(G: Graph, n_keep: int) -> Graph:
    """Induced subgraph on the first ``n_keep`` vertices; the others stay as isolated vertices."""
    return Graph(G.vertices, tuple(e for e in G.edges if max(e) < n_keep))
