"""Brute-force references that share no code with the library.

Monomials are exponent tuples.  Membership is divisibility by some generator;
colons, sums, products and intersections are compared pointwise on a box of
exponents, which decides equality once the box holds every minimal generator
of both sides.
"""
from itertools import combinations, product


def box(n, cap):
    return list(product(range(cap + 1), repeat=n))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def member(f, gens):
    return any(divides(g, f) for g in gens)


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def in_colon(h, I, J):
    return all(member(mul(h, g), I) for g in J)


def in_product(h, I, J):
    return any(divides(mul(a, b), h) for a in I for b in J)


def max_exp(gens):
    return max((max(g) for g in gens), default=1) or 1


def colon_prime(I, f, n, cap=None):
    """Variable indices P with (I : f) = (x_i : i in P), else None."""
    cap = max_exp(I) if cap is None else cap
    pts = box(n, cap)
    inside = {h for h in pts if member(mul(h, f), I)}
    P = {i for i in range(n) if member(mul(_unit(n, i), f), I)}
    if not P or tuple([0] * n) in inside:
        return None
    expect = {h for h in pts if any(h[i] for i in P)}
    return frozenset(P) if inside == expect else None


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def monomials_of_degree(n, d, cap):
    for e in product(range(min(d, cap) + 1), repeat=n):
        if sum(e) == d:
            yield e


def brute_v(I, n, max_degree=12):
    """(degree, prime) of the least-degree f, scanning exponents one past the largest generator exponent."""
    cap = max_exp(I) + 1
    for d in range(max_degree + 1):
        for f in monomials_of_degree(n, d, cap):
            P = colon_prime(I, f, n)
            if P is not None:
                return d, P
    raise AssertionError("no witness found")


def brute_ass(I, n):
    cap = max_exp(I)
    return {P for f in box(n, cap) if (P := colon_prime(I, f, n)) is not None}


def brute_v_localized(I, n, P, max_degree=12):
    cap = max_exp(I) + 1
    for d in range(max_degree + 1):
        for f in monomials_of_degree(n, d, cap):
            if colon_prime(I, f, n) == P:
                return d
    raise AssertionError("no localized witness found")


def min_covers(n, edges):
    covers = []
    for size in range(n + 1):
        for S in combinations(range(n), size):
            s = set(S)
            if all(s & e for e in edges) and not any(c <= s for c in covers):
                covers.append(frozenset(s))
    return covers


def matching_number(edges):
    edges = [frozenset(e) for e in edges]
    best = 0
    for k in range(1, len(edges) + 1):
        if any(all(not (a & b) for a, b in combinations(c, 2)) for c in combinations(edges, k)):
            best = k
        else:
            break
    return best
