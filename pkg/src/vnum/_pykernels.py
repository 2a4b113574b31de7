"""Pure-Python implementations of the hot kernels.

Every function here has a twin in ``_speedups.pyx`` with the same signature
and the same output order.  Exponent vectors are plain tuples of ints; vertex
and variable sets are Python ints used as bitmasks.
"""
from itertools import combinations


def canonical_key(e):
    # degree first, then lex-descending (x1 > x2 > ...)
    return (sum(e), tuple(-a for a in e))


def divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def in_ideal(f, gens):
    for g in gens:
        for x, y in zip(g, f):
            if x > y:
                break
        else:
            return True
    return False


def minimalize(gens):
    """Divisibility-minimal elements of ``gens`` in canonical order."""
    ordered = sorted(set(gens), key=canonical_key)
    kept = []
    for g in ordered:
        if not in_ideal(g, kept):
            kept.append(g)
    return kept


def products(gens_a, gens_b):
    return minimalize([tuple(x + y for x, y in zip(a, b)) for a in gens_a for b in gens_b])


def lcms(gens_a, gens_b):
    return minimalize([tuple(x if x > y else y for x, y in zip(a, b)) for a in gens_a for b in gens_b])


def filter_outside(cands, ideal):
    return [c for c in cands if not in_ideal(c, ideal)]


def lcm_outside(gens_a, gens_b, ideal, max_degree=-1):
    """Distinct pairwise lcms outside ``ideal`` and of degree <= max_degree (unsorted)."""
    out = set()
    for a in gens_a:
        for b in gens_b:
            m = tuple(x if x > y else y for x, y in zip(a, b))
            if 0 <= max_degree < sum(m):
                continue
            if m not in out and not in_ideal(m, ideal):
                out.add(m)
    return list(out)


def colon_monomial(gens, f):
    return minimalize([tuple(x - y if x > y else 0 for x, y in zip(g, f)) for g in gens])


def prime_colon_mask(gens, f):
    """Bitmask of ``p`` when ``(I : f) = p`` is generated by variables, else -1."""
    if in_ideal(f, gens):
        return -1
    reduced = []
    var_mask = 0
    for g in gens:
        support = 0
        deg = 0
        last = -1
        for i, (x, y) in enumerate(zip(g, f)):
            if x > y:
                support |= 1 << i
                deg += x - y
                last = i
        if deg == 1:
            var_mask |= 1 << last
        reduced.append(support)
    if var_mask == 0:
        return -1
    for support in reduced:
        if not support & var_mask:
            return -1
    return var_mask


def compositions(d, caps):
    """Exponent vectors of degree ``d`` bounded by ``caps``, lex-descending."""
    n = len(caps)
    if n == 0:
        if d == 0:
            yield ()
        return
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    if suffix[0] < d:
        return
    e = [0] * n
    r = d
    for j in range(n):
        e[j] = min(caps[j], r)
        r -= e[j]
    yield tuple(e)
    while True:
        rem = e[n - 1]
        for i in range(n - 2, -1, -1):
            if e[i] > 0 and suffix[i + 1] >= rem + 1:
                e[i] -= 1
                r = rem + 1
                for j in range(i + 1, n):
                    e[j] = min(caps[j], r)
                    r -= e[j]
                break
            rem += e[i]
        else:
            return
        yield tuple(e)


def scan_witnesses(gens, caps, mode, target, max_degree):
    """Scan the capped exponent box by increasing degree.

    mode 0: stop at the first f whose colon is prime (v-number).
    mode 1: stop at the first f whose colon equals ``target`` (localized).
    mode 2: full scan, first witness per prime (associated primes).

    Returns ``(hits, exhausted)`` where hits is a list of ``(f, mask)`` in
    scan order and ``exhausted`` is False when ``max_degree`` cut the scan.
    """
    hits = []
    seen = set()
    top = sum(caps)
    limit = top if max_degree < 0 else min(top, max_degree)
    for d in range(limit + 1):
        for f in compositions(d, caps):
            mask = prime_colon_mask(gens, f)
            if mask < 0:
                continue
            if mode == 0:
                return [(f, mask)], True
            if mode == 1:
                if mask == target:
                    return [(f, mask)], True
                continue
            if mask not in seen:
                seen.add(mask)
                hits.append((f, mask))
    return hits, limit == top


def is_cover_stable(edges, a):
    """Neighborhood mask of stable ``a`` when it is a minimal vertex cover, else -1."""
    nb = 0
    for e in edges:
        rest = e & ~a
        if rest == 0:
            return -1
        if rest & (rest - 1) == 0:
            nb |= rest
    for e in edges:
        if not e & nb:
            return -1
    m = nb
    while m:
        v = m & -m
        m ^= v
        for e in edges:
            if e & nb == v:
                break
        else:
            return -1
    return nb


def cover_stable_sets(nverts, edges, size, first_only):
    """Members of A_C of a given size, in lexicographic order of index tuples."""
    out = []
    for combo in combinations(range(nverts), size):
        a = 0
        for i in combo:
            a |= 1 << i
        nb = is_cover_stable(edges, a)
        if nb >= 0:
            out.append((a, nb))
            if first_only:
                break
    return out
