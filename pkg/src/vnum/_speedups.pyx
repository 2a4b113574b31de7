# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pykernels`` exactly (same outputs, same order).

Bitmask kernels assume at most 63 variables; the dispatcher in ``kernels``
routes larger inputs to the pure-Python versions.
"""
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


cdef int* _pack(object gens, int n, int* count) except NULL:
    cdef int m = len(gens)
    cdef int* buf = <int*> malloc((m * n + 1) * sizeof(int))
    cdef int i, j
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        g = gens[i]
        for j in range(n):
            buf[i * n + j] = g[j]
    count[0] = m
    return buf


cdef inline bint _member(const int* gens, int m, int n, const int* f) nogil:
    cdef int i, j
    cdef bint ok
    for i in range(m):
        ok = True
        for j in range(n):
            if gens[i * n + j] > f[j]:
                ok = False
                break
        if ok:
            return True
    return False


cdef long long _prime_mask(const int* gens, int m, int n, const int* f, u64* scratch) nogil:
    cdef int i, j, x, deg, last
    cdef u64 support, var_mask = 0
    if _member(gens, m, n, f):
        return -1
    for i in range(m):
        support = 0
        deg = 0
        last = -1
        for j in range(n):
            x = gens[i * n + j] - f[j]
            if x > 0:
                support |= (<u64>1) << j
                deg += x
                last = j
        if deg == 1:
            var_mask |= (<u64>1) << last
        scratch[i] = support
    if var_mask == 0:
        return -1
    for i in range(m):
        if (scratch[i] & var_mask) == 0:
            return -1
    return <long long>var_mask


def prime_colon_mask(gens, f):
    cdef int n = len(f)
    cdef int m
    cdef int* buf = _pack(gens, n, &m)
    cdef int* fb = <int*> malloc((n + 1) * sizeof(int))
    cdef u64* scratch = <u64*> malloc((m + 1) * sizeof(u64))
    cdef int j
    cdef long long r
    try:
        for j in range(n):
            fb[j] = f[j]
        r = _prime_mask(buf, m, n, fb, scratch)
    finally:
        free(buf)
        free(fb)
        free(scratch)
    return r


def in_ideal(f, gens):
    cdef int n = len(f)
    cdef int m
    cdef int* buf = _pack(gens, n, &m)
    cdef int* fb = <int*> malloc((n + 1) * sizeof(int))
    cdef int j
    cdef bint r
    try:
        for j in range(n):
            fb[j] = f[j]
        r = _member(buf, m, n, fb)
    finally:
        free(buf)
        free(fb)
    return r


def filter_outside(cands, ideal, int n):
    cdef int mc, mi, i
    cdef int* A = _pack(cands, n, &mc)
    cdef int* C = _pack(ideal, n, &mi)
    out = []
    try:
        for i in range(mc):
            if not _member(C, mi, n, A + i * n):
                out.append(cands[i])
    finally:
        free(A)
        free(C)
    return out


def lcm_outside(gens_a, gens_b, ideal, int n, int max_degree=-1):
    cdef int ma, mb, mi
    cdef int* A = _pack(gens_a, n, &ma)
    cdef int* B = _pack(gens_b, n, &mb)
    cdef int* C = _pack(ideal, n, &mi)
    cdef int* tmp = <int*> malloc((n + 1) * sizeof(int))
    cdef int i, j, k, x, y, d
    out = set()
    try:
        for i in range(ma):
            for j in range(mb):
                d = 0
                for k in range(n):
                    x = A[i * n + k]
                    y = B[j * n + k]
                    tmp[k] = x if x > y else y
                    d += tmp[k]
                if max_degree >= 0 and d > max_degree:
                    continue
                if not _member(C, mi, n, tmp):
                    out.add(tuple([tmp[k] for k in range(n)]))
    finally:
        free(A)
        free(B)
        free(C)
        free(tmp)
    return list(out)


cdef list _minimal_rows(int* buf, int m, int n):
    """Indices of the divisibility-minimal distinct rows, by increasing degree."""
    cdef int* deg = <int*> malloc((m + 1) * sizeof(int))
    cdef int* order = <int*> malloc((m + 1) * sizeof(int))
    cdef int* kept = <int*> malloc((m * n + 1) * sizeof(int))
    cdef int* count
    cdef int i, j, d, maxdeg = 0, nk = 0, pos
    cdef list out = []
    try:
        for i in range(m):
            d = 0
            for j in range(n):
                d += buf[i * n + j]
            deg[i] = d
            if d > maxdeg:
                maxdeg = d
        count = <int*> malloc((maxdeg + 2) * sizeof(int))
        for d in range(maxdeg + 2):
            count[d] = 0
        for i in range(m):
            count[deg[i] + 1] += 1
        for d in range(1, maxdeg + 2):
            count[d] += count[d - 1]
        for i in range(m):
            order[count[deg[i]]] = i
            count[deg[i]] += 1
        free(count)
        for pos in range(m):
            i = order[pos]
            if not _member(kept, nk, n, buf + i * n):
                for j in range(n):
                    kept[nk * n + j] = buf[i * n + j]
                nk += 1
                out.append(i)
    finally:
        free(deg)
        free(order)
        free(kept)
    return out


def minimalize(gens, int n):
    """Minimal elements of an unsorted list (order of the result unspecified)."""
    cdef int m
    cdef int* buf
    if not gens:
        return []
    buf = _pack(gens, n, &m)
    try:
        return [gens[i] for i in _minimal_rows(buf, m, n)]
    finally:
        free(buf)


def colon_monomial(gens, f, int n):
    """Minimal generators of (I : f), unordered."""
    cdef int m, i, j, x
    cdef int* buf
    cdef list idx
    if not gens:
        return []
    buf = _pack(gens, n, &m)
    try:
        for i in range(m):
            for j in range(n):
                x = buf[i * n + j] - <int>f[j]
                buf[i * n + j] = x if x > 0 else 0
        idx = _minimal_rows(buf, m, n)
        return [tuple([buf[i * n + j] for j in range(n)]) for i in idx]
    finally:
        free(buf)


def scan_witnesses(gens, caps, int mode, long long target, int max_degree):
    cdef int n = len(caps)
    cdef int m
    cdef int* buf = _pack(gens, n, &m)
    cdef int* cap = <int*> malloc((n + 1) * sizeof(int))
    cdef int* e = <int*> malloc((n + 1) * sizeof(int))
    cdef int* suffix = <int*> malloc((n + 2) * sizeof(int))
    cdef u64* scratch = <u64*> malloc((m + 1) * sizeof(u64))
    cdef int i, j, d, r, rem, top, limit
    cdef long long mask
    cdef bint advanced
    hits = []
    seen = set()
    try:
        suffix[n] = 0
        for i in range(n - 1, -1, -1):
            cap[i] = caps[i]
            suffix[i] = suffix[i + 1] + cap[i]
        top = suffix[0]
        limit = top if max_degree < 0 else min(top, max_degree)
        for d in range(limit + 1):
            r = d
            for j in range(n):
                e[j] = cap[j] if cap[j] < r else r
                r -= e[j]
            while True:
                mask = _prime_mask(buf, m, n, e, scratch)
                if mask >= 0:
                    if mode == 0 or (mode == 1 and mask == target):
                        return [(tuple([e[j] for j in range(n)]), mask)], True
                    if mode == 2 and mask not in seen:
                        seen.add(mask)
                        hits.append((tuple([e[j] for j in range(n)]), mask))
                if n == 0:
                    break
                advanced = False
                rem = e[n - 1]
                for i in range(n - 2, -1, -1):
                    if e[i] > 0 and suffix[i + 1] >= rem + 1:
                        e[i] -= 1
                        r = rem + 1
                        for j in range(i + 1, n):
                            e[j] = cap[j] if cap[j] < r else r
                            r -= e[j]
                        advanced = True
                        break
                    rem += e[i]
                if not advanced:
                    break
        return hits, limit == top
    finally:
        free(buf)
        free(cap)
        free(e)
        free(suffix)
        free(scratch)


cdef long long _cover_stable(const u64* edges, int ne, u64 a) nogil:
    cdef int i
    cdef u64 rest, nb = 0, m, v
    cdef bint found
    for i in range(ne):
        rest = edges[i] & ~a
        if rest == 0:
            return -1
        if (rest & (rest - 1)) == 0:
            nb |= rest
    for i in range(ne):
        if (edges[i] & nb) == 0:
            return -1
    m = nb
    while m:
        v = m & (~m + 1)
        m ^= v
        found = False
        for i in range(ne):
            if (edges[i] & nb) == v:
                found = True
                break
        if not found:
            return -1
    return <long long>nb


def is_cover_stable(edges, a):
    cdef int ne = len(edges)
    cdef u64* eb = <u64*> malloc((ne + 1) * sizeof(u64))
    cdef int i
    cdef long long r
    try:
        for i in range(ne):
            eb[i] = edges[i]
        r = _cover_stable(eb, ne, a)
    finally:
        free(eb)
    return r


def cover_stable_sets(int nverts, edges, int size, bint first_only):
    cdef int ne = len(edges)
    cdef u64* eb = <u64*> malloc((ne + 1) * sizeof(u64))
    cdef int* idx = <int*> malloc((size + 1) * sizeof(int))
    cdef int i, j
    cdef u64 a
    cdef long long nb
    out = []
    try:
        for i in range(ne):
            eb[i] = edges[i]
        if size > nverts:
            return out
        for i in range(size):
            idx[i] = i
        while True:
            a = 0
            for i in range(size):
                a |= (<u64>1) << idx[i]
            nb = _cover_stable(eb, ne, a)
            if nb >= 0:
                out.append((<long long>a, nb))
                if first_only:
                    break
            i = size - 1
            while i >= 0 and idx[i] == nverts - size + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, size):
                idx[j] = idx[j - 1] + 1
        return out
    finally:
        free(eb)
        free(idx)
