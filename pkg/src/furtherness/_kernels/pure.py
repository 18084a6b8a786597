"""Pure-Python kernels for word-level set algebra on finite spaces.

Point sets are bitmasks over point indices 0..n-1, and a space is handed to
the kernels as its minimal basis: a sequence ``basis`` where ``basis[i]`` is
the mask of the smallest open set containing point ``i``.  The compiled
backend in ``_ckern`` implements the same functions with identical results
and iteration order for n <= 64; this module is the reference and the
fallback for larger spaces.

Distance values reported by ``point_to_set`` / ``set_to_set`` /
``center_radius`` use -1 for "infinite" (an empty side); callers translate
that to ``math.inf`` at the API boundary.
"""

from __future__ import annotations


def class_ids(n, basis):
    """Indistinguishability class of each point, numbered by first occurrence.

    Two points share a class exactly when they have the same minimal open
    set.
    """
    seen: dict[int, int] = {}
    out = []
    for m in basis:
        c = seen.get(m)
        if c is None:
            c = len(seen)
            seen[m] = c
        out.append(c)
    return tuple(out)


def further_matrix(n, basis):
    """Flat row-major matrix of pairwise distances.

    Entry (x, y) counts the indistinguishability classes that meet
    ``basis[y]`` but not ``basis[x]``, which equals the least chain position
    at which y shows up when growing opens outward from ``basis[x]``.
    """
    cls = class_ids(n, basis)
    cls_open = []
    for i in range(n):
        acc = 0
        m = basis[i]
        while m:
            low = m & -m
            acc |= 1 << cls[low.bit_length() - 1]
            m ^= low
        cls_open.append(acc)
    flat = []
    for i in range(n):
        ci = cls_open[i]
        for j in range(n):
            flat.append((cls_open[j] & ~ci).bit_count())
    return tuple(flat)


def closure_mask(n, basis, a):
    out = 0
    for y in range(n):
        if basis[y] & a:
            out |= 1 << y
    return out


def interior_mask(n, basis, a):
    out = 0
    rest = ~a
    for x in range(n):
        if (a >> x) & 1 and not (basis[x] & rest):
            out |= 1 << x
    return out


def minimal_open_mask(n, basis, a):
    out = 0
    while a:
        low = a & -a
        out |= basis[low.bit_length() - 1]
        a ^= low
    return out


def point_to_set(n, flat, x, target):
    """min over t in target of flat[x][t]; -1 when target is empty."""
    if not target:
        return -1
    best = -1
    row = x * n
    while target:
        low = target & -target
        v = flat[row + low.bit_length() - 1]
        if best < 0 or v < best:
            best = v
        target ^= low
    return best


def set_to_set(n, flat, a, b):
    """min over pairs; -1 when either side is empty."""
    if not a or not b:
        return -1
    best = -1
    while a:
        low = a & -a
        v = point_to_set(n, flat, low.bit_length() - 1, b)
        if best < 0 or v < best:
            best = v
        a ^= low
    return best


def center_radius(n, flat, a, target):
    """Points of ``a`` furthest from ``target``, with that furthest value.

    Returns ``(center_mask, radius)``; radius is -1 (infinite) when
    ``target`` is empty, in which case every point of ``a`` is central.
    An empty ``a`` yields ``(0, -1)``.
    """
    if not a:
        return 0, -1
    if not target:
        return a, -1
    best = -1
    center = 0
    rest = a
    while rest:
        low = rest & -rest
        rest ^= low
        v = point_to_set(n, flat, low.bit_length() - 1, target)
        if v > best:
            best = v
            center = low
        elif v == best:
            center |= low
    return center, best


def transitive_closure(n, rows):
    """Reflexive-transitive saturation of down-set rows.

    ``rows[i]`` holds the points currently known to lie at or below point i;
    the result is the smallest family of rows containing it that is
    reflexive and closed under chaining, i.e. a valid minimal basis.
    """
    out = [rows[i] | (1 << i) for i in range(n)]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = out[x]
            m = acc
            while m:
                low = m & -m
                acc |= out[low.bit_length() - 1]
                m ^= low
            if acc != out[x]:
                out[x] = acc
                changed = True
    return tuple(out)


def enumerate_bases(n, t0_only=False):
    """All minimal bases on points 0..n-1, lexicographic by row masks.

    Row i ranges over masks containing bit i in ascending numeric order;
    partial rows are pruned against every fixed row in both directions, so
    each leaf is a valid basis with no final check.  With ``t0_only`` rows
    must be pairwise distinct.
    """
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []
    rows = [0] * n

    def extend(i):
        if i == n:
            out.append(tuple(rows))
            return
        bit = 1 << i
        for m in range(bit, full + 1):
            if not (m & bit):
                continue
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
                extend(i + 1)

    extend(0)
    return out
