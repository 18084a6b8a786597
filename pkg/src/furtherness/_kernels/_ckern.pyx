# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: word-packed mirrors of the functions in ``pure``.

Masks fit in one 64-bit word (the dispatcher routes larger spaces to the
pure backend), and every function reproduces the pure results bit for bit,
including iteration order and tie-breaking, so the two backends are
interchangeable and cross-checked by the test suite.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define FT_POPCNT(x) __builtin_popcountll((unsigned long long)(x))
    #define FT_CTZ(x) __builtin_ctzll((unsigned long long)(x))
    #else
    static int FT_POPCNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    static int FT_CTZ(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int FT_POPCNT(uint64_t x) nogil
    int FT_CTZ(uint64_t x) nogil


cdef inline uint64_t _full_mask(int n):
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef int _load_basis(int n, object basis, uint64_t *out) except -1:
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>basis[i]
    return 0


cdef int _class_ids_c(int n, uint64_t *b, int *cls):
    """First-occurrence class numbering; returns the class count."""
    cdef int i, j, nxt = 0
    cdef int hit
    for i in range(n):
        hit = -1
        for j in range(i):
            if b[j] == b[i]:
                hit = cls[j]
                break
        if hit < 0:
            hit = nxt
            nxt += 1
        cls[i] = hit
    return nxt


def class_ids(int n, basis):
    cdef uint64_t b[64]
    cdef int cls[64]
    cdef int i
    _load_basis(n, basis, b)
    _class_ids_c(n, b, cls)
    return tuple([cls[i] for i in range(n)])


def further_matrix(int n, basis):
    cdef uint64_t b[64]
    cdef uint64_t cls_open[64]
    cdef int cls[64]
    cdef uint64_t m, low, ci
    cdef int i, j
    _load_basis(n, basis, b)
    _class_ids_c(n, b, cls)
    for i in range(n):
        ci = 0
        m = b[i]
        while m:
            low = m & (~m + 1)
            ci |= (<uint64_t>1) << cls[FT_CTZ(low)]
            m ^= low
        cls_open[i] = ci
    flat = []
    for i in range(n):
        ci = cls_open[i]
        for j in range(n):
            flat.append(FT_POPCNT(cls_open[j] & ~ci))
    return tuple(flat)


def closure_mask(int n, basis, a):
    cdef uint64_t b[64]
    cdef uint64_t aa = <uint64_t>a
    cdef uint64_t out = 0
    cdef int y
    _load_basis(n, basis, b)
    for y in range(n):
        if b[y] & aa:
            out |= (<uint64_t>1) << y
    return out


def interior_mask(int n, basis, a):
    cdef uint64_t b[64]
    cdef uint64_t aa = <uint64_t>a
    cdef uint64_t rest = ~aa
    cdef uint64_t out = 0
    cdef int x
    _load_basis(n, basis, b)
    for x in range(n):
        if (aa >> x) & 1 and not (b[x] & rest):
            out |= (<uint64_t>1) << x
    return out


def minimal_open_mask(int n, basis, a):
    cdef uint64_t b[64]
    cdef uint64_t aa = <uint64_t>a
    cdef uint64_t out = 0, low
    _load_basis(n, basis, b)
    while aa:
        low = aa & (~aa + 1)
        out |= b[FT_CTZ(low)]
        aa ^= low
    return out


cdef int _load_row(int n, object flat, int x, long *row) except -1:
    cdef int j, base = x * n
    for j in range(n):
        row[j] = <long>flat[base + j]
    return 0


cdef long _point_to_set_c(int n, long *row, uint64_t target):
    cdef long best = -1, v
    cdef uint64_t low
    while target:
        low = target & (~target + 1)
        v = row[FT_CTZ(low)]
        if best < 0 or v < best:
            best = v
        target ^= low
    return best


def point_to_set(int n, flat, int x, target):
    """min over t in target of flat[x][t]; -1 when target is empty."""
    cdef uint64_t t = <uint64_t>target
    cdef long row[64]
    if not t:
        return -1
    _load_row(n, flat, x, row)
    return _point_to_set_c(n, row, t)


def set_to_set(int n, flat, a, b):
    """min over pairs; -1 when either side is empty."""
    cdef uint64_t aa = <uint64_t>a
    cdef uint64_t bb = <uint64_t>b
    cdef uint64_t low
    cdef long best = -1, v
    cdef long row[64]
    if not aa or not bb:
        return -1
    while aa:
        low = aa & (~aa + 1)
        _load_row(n, flat, FT_CTZ(low), row)
        v = _point_to_set_c(n, row, bb)
        if best < 0 or v < best:
            best = v
        aa ^= low
    return best


def center_radius(int n, flat, a, target):
    """Points of ``a`` furthest from ``target``, with that furthest value."""
    cdef uint64_t aa = <uint64_t>a
    cdef uint64_t tt = <uint64_t>target
    cdef uint64_t rest, low, center
    cdef long best = -1, v
    cdef long row[64]
    if not aa:
        return 0, -1
    if not tt:
        return a, -1
    center = 0
    rest = aa
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        _load_row(n, flat, FT_CTZ(low), row)
        v = _point_to_set_c(n, row, tt)
        if v > best:
            best = v
            center = low
        elif v == best:
            center |= low
    return center, best


def transitive_closure(int n, rows):
    cdef uint64_t out[64]
    cdef uint64_t acc, m, low
    cdef int x
    cdef bint changed = True
    for x in range(n):
        out[x] = (<uint64_t>rows[x]) | ((<uint64_t>1) << x)
    while changed:
        changed = False
        for x in range(n):
            acc = out[x]
            m = acc
            while m:
                low = m & (~m + 1)
                acc |= out[FT_CTZ(low)]
                m ^= low
            if acc != out[x]:
                out[x] = acc
                changed = True
    return tuple([out[x] for x in range(n)])


cdef void _extend(int i, int n, uint64_t full, uint64_t *rows, bint t0_only, list out):
    cdef uint64_t bit, m, rj
    cdef int j
    cdef bint ok
    if i == n:
        out.append(tuple([rows[j] for j in range(n)]))
        return
    bit = (<uint64_t>1) << i
    m = bit
    while True:
        if m & bit:
            ok = True
            for j in range(i):
                rj = rows[j]
                if (m >> j) & 1 and (rj & ~m):
                    ok = False
                    break
                if (rj >> i) & 1 and (m & ~rj):
                    ok = False
                    break
                if t0_only and m == rj:
                    ok = False
                    break
            if ok:
                rows[i] = m
                _extend(i + 1, n, full, rows, t0_only, out)
        if m == full:
            break
        m += 1


def enumerate_bases(int n, bint t0_only=False):
    """All minimal bases on points 0..n-1, lexicographic by row masks."""
    cdef uint64_t rows[64]
    cdef list out = []
    _extend(0, n, _full_mask(n), rows, t0_only, out)
    return out
