"""Compiled in-place steppers over restricted growth strings.

Every kernel works on one-based arrays: ``a[1..n]`` holds the digits and
``b[1..n+1]`` the prefix maxima (``b[i] = max(a[1..i-1])``; slot ``n+1`` is
scratch).  Index 0 of both arrays is never touched.  Kernels return
``(moved, scans, writes, b_writes, fills)``: ``moved`` is ``False`` when the
enumeration is over (the arrays are then left untouched) and the rest is the
work the call did.

Digits are block labels starting at 0, so a string with ``k`` blocks has
largest digit ``k - 1``.  All comparisons against block counts go through
that offset.

Callers add the work into a ``cnt`` array (see the index constants below).
Returning it rather than storing it from inside the kernel keeps the tallies
in registers; a store per call into an array that might alias ``a`` costs
about a third of a W step.  Set
``NUMBA_DISABLE_JIT=1`` to run the same code as plain Python.
"""

from __future__ import annotations

import numpy as np
from numba import njit

DIGIT_WRITES = 0
B_WRITES = 1
SCAN_STEPS = 2
FILL_STEPS = 3
NEXT_CALLS = 4
PEAK_STEPS = 5
N_COUNTERS = 6

KIND_V = 0
KIND_W = 1
KIND_X = 2
KIND_Y = 3
KIND_Z = 4
KIND_Z_STAR = 5
KIND_U = 6
KIND_U_STAR = 7

KIND_NAMES = ("V", "W", "X", "Y", "Z", "Z*", "U", "U*")


# Kernels never allocate, so NRT is off: with it on, every call between
# kernels pays atomic refcount traffic on the array arguments.
kernel = njit(cache=True, inline="always", _nrt=False)


def new_counters():
    return np.zeros(N_COUNTERS, dtype=np.int64)


@kernel
def next_v(a, b, n):
    c = n
    while c > 1 and (a[c] == n - 1 or a[c] > b[c]):
        c -= 1
    if c == 1:
        return False, n, 0, 0, 0
    a[c] += 1
    for i in range(c + 1, n + 1):
        a[i] = 0
        b[i] = max(a[i - 1], b[i - 1])
    return True, n - c + 1, n - c + 1, n - c, n - c


@kernel
def next_w(a, b, n, k):
    c = n
    while c > 1 and (a[c] == k - 1 or a[c] > b[c]):
        c -= 1
    if c == 1:
        return False, n, 0, 0, 0
    a[c] += 1
    for i in range(c + 1, n + 1):
        a[i] = 0
        b[i] = max(a[i - 1], b[i - 1])
    return True, n - c + 1, n - c + 1, n - c, n - c


@kernel
def next_x(a, b, n, k):
    scans = writes = bw = fills = 0
    while True:
        moved, s, w, bb, f = next_w(a, b, n, k)
        scans += s
        writes += w
        bw += bb
        fills += f
        if not moved:
            return False, scans, writes, bw, fills
        if a[n] == k - 1 or b[n] == k - 1:
            return True, scans, writes, bw, fills


# not inlined: it runs rarely and keeping it out of line shrinks Y's hot loop
@njit(cache=True, _nrt=False)
def skip_to_k_blocks(a, b, n, k):
    """Jump from a string with too few blocks to the next one with ``k``.

    Walks leftward from the last digit, writing the descending labels
    ``k-1, k-2, ...`` until the prefix already holds the label needed.
    Returns the number of digits written.
    """
    i = n
    k0 = k - 1
    steps = 0
    while i >= 1 and k0 > b[i]:
        a[i] = k0
        b[i] = k0 - 1
        i -= 1
        k0 -= 1
        steps += 1
    return steps


@kernel
def next_y(a, b, n, k):
    moved, s, w, bb, f = next_w(a, b, n, k)
    if not moved or a[n] == k - 1 or b[n] == k - 1:
        return moved, s, w, bb, f
    steps = skip_to_k_blocks(a, b, n, k)
    return True, s, w + steps, bb + steps, f + steps


@kernel
def next_z(a, b, n, kmin, kmax):
    c = n
    scans = 1
    while c > 1 and (a[c] == kmax - 1 or a[c] > b[c]):
        c -= 1
        scans += 1
    if c == 1:
        return False, scans, 0, 0, 0
    a[c] += 1
    b[c + 1] = max(a[c], b[c])
    # zeros that still leave enough room to climb to label kmin - 1
    z = b[c + 1] + n - c - (kmin - 1)
    start = c
    c += 1
    while z > 0 and c <= n:
        a[c] = 0
        b[c + 1] = b[c]
        c += 1
        z -= 1
    while c <= n:
        a[c] = b[c] + 1
        b[c + 1] = a[c]
        c += 1
    return True, scans, n - start + 1, n - start + 1, n - start


@kernel
def next_z_star(a, b, n, kmin, kmax):
    c = n
    scans = 1
    # after a_c - 1 the prefix max stays b_c, so the tail can reach b_c + n - c
    while c > 1 and (a[c] == 0 or kmin - 1 - b[c] > n - c):
        c -= 1
        scans += 1
    if c == 1:
        return False, scans, 0, 0, 0
    a[c] -= 1
    b[c + 1] = max(a[c], b[c])
    start = c
    c += 1
    while c <= n and b[c] < kmax - 1:
        a[c] = b[c] + 1
        b[c + 1] = a[c]
        c += 1
    while c <= n:
        a[c] = kmax - 1
        b[c + 1] = kmax - 1
        c += 1
    return True, scans, n - start + 1, n - start + 1, n - start


@kernel
def _u_blocked(a, b, n, c, kmax, m):
    if a[c] == kmax - 1 or a[c] > b[c]:
        return True
    t = max(a[c] + 1, b[c])
    if t + 1 > kmax:
        return True
    return m[t + 1] - (t + 1) > n - c


@kernel
def next_u(a, b, n, kmax, m):
    """Successor whose block count is a member of the set encoded by ``m``.

    ``m[i]`` is the smallest allowed block count ``>= i`` for ``1 <= i <= kmax``.
    """
    c = n
    scans = 1
    while c > 1 and _u_blocked(a, b, n, c, kmax, m):
        c -= 1
        scans += 1
    if c == 1:
        return False, scans, 0, 0, 0
    a[c] += 1
    b[c + 1] = max(a[c], b[c])
    top = b[c + 1]
    z = n - c - (m[top + 1] - (top + 1))
    start = c
    c += 1
    while z > 0 and c <= n:
        a[c] = 0
        b[c + 1] = b[c]
        c += 1
        z -= 1
    while c <= n:
        a[c] = b[c] + 1
        b[c + 1] = a[c]
        c += 1
    return True, scans, n - start + 1, n - start + 1, n - start


@kernel
def _u_star_blocked(a, b, n, c, kmax, m):
    if a[c] == 0:
        return True
    t = b[c]
    if t + 1 > kmax:
        return True
    return m[t + 1] - (t + 1) > n - c


@kernel
def next_u_star(a, b, n, kmax, m, r):
    """Predecessor whose block count is allowed; ``r[i]`` is the largest
    allowed block count ``<= i``."""
    c = n
    scans = 1
    while c > 1 and _u_star_blocked(a, b, n, c, kmax, m):
        c -= 1
        scans += 1
    if c == 1:
        return False, scans, 0, 0, 0
    a[c] -= 1
    b[c + 1] = max(a[c], b[c])
    top = r[b[c + 1] + 1 + n - c] - 1
    start = c
    c += 1
    while c <= n and b[c] < top:
        a[c] = b[c] + 1
        b[c + 1] = a[c]
        c += 1
    while c <= n:
        a[c] = top
        b[c + 1] = top
        c += 1
    return True, scans, n - start + 1, n - start + 1, n - start


@kernel
def dispatch(kind, a, b, n, k1, k2, m, r):
    if kind == KIND_V:
        return next_v(a, b, n)
    if kind == KIND_W:
        return next_w(a, b, n, k1)
    if kind == KIND_X:
        return next_x(a, b, n, k1)
    if kind == KIND_Y:
        return next_y(a, b, n, k1)
    if kind == KIND_Z:
        return next_z(a, b, n, k1, k2)
    if kind == KIND_Z_STAR:
        return next_z_star(a, b, n, k1, k2)
    if kind == KIND_U:
        return next_u(a, b, n, k2, m)
    return next_u_star(a, b, n, k2, m, r)


@kernel
def step(kind, a, b, n, k1, k2, m, r, cnt):
    """One counted transition; also tracks the costliest transition seen."""
    moved, scans, writes, bw, fills = dispatch(kind, a, b, n, k1, k2, m, r)
    cnt[SCAN_STEPS] += scans
    cnt[DIGIT_WRITES] += writes
    cnt[B_WRITES] += bw
    cnt[FILL_STEPS] += fills
    cnt[NEXT_CALLS] += 1
    if scans + fills > cnt[PEAK_STEPS]:
        cnt[PEAK_STEPS] = scans + fills
    return moved


@kernel
def fill_batch(kind, a, b, n, k1, k2, m, r, cnt, out):
    """Write the current string and up to ``len(out) - 1`` successors.

    Returns ``(rows, exhausted)``.  When not exhausted the arrays hold the
    string in the last written row.
    """
    rows = out.shape[0]
    for j in range(n):
        out[0, j] = a[j + 1]
    for i in range(1, rows):
        if not step(kind, a, b, n, k1, k2, m, r, cnt):
            return i, True
        for j in range(n):
            out[i, j] = a[j + 1]
    return rows, False


@kernel
def _fingerprint(a, b, n):
    return a[n] * 7 + a[n - 1] * 131 + b[n] * 1031


# The drivers below branch on ``kind`` once, outside the loop.  Dispatching
# inside the loop costs about 2.5x on the W inner loop.

@njit(cache=True, _nrt=False)
def _tally(cnt, e, scans, writes, bw, fills):
    cnt[NEXT_CALLS] += e
    cnt[SCAN_STEPS] += scans
    cnt[DIGIT_WRITES] += writes
    cnt[B_WRITES] += bw
    cnt[FILL_STEPS] += fills


@njit(cache=True, _nrt=False)
def drain(kind, a, b, n, k1, k2, m, r, cnt):
    """Advance to exhaustion, returning the number of strings visited.

    ``cnt`` gains one next call per string (the last one is the exhausting
    call); the peak counter is only maintained by :func:`step`.
    """
    e = 1
    scans = writes = bw = fills = 0
    if kind == KIND_V:
        while True:
            moved, s, w, bb, f = next_v(a, b, n)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_W:
        while True:
            moved, s, w, bb, f = next_w(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_X:
        while True:
            moved, s, w, bb, f = next_x(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_Y:
        while True:
            moved, s, w, bb, f = next_y(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_Z:
        while True:
            moved, s, w, bb, f = next_z(a, b, n, k1, k2)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_Z_STAR:
        while True:
            moved, s, w, bb, f = next_z_star(a, b, n, k1, k2)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    elif kind == KIND_U:
        while True:
            moved, s, w, bb, f = next_u(a, b, n, k2, m)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    else:
        while True:
            moved, s, w, bb, f = next_u_star(a, b, n, k2, m, r)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
    _tally(cnt, e, scans, writes, bw, fills)
    return e


@njit(cache=True, _nrt=False)
def full_run(kind, a, b, n, k1, k2, m, r, cnt):
    """Like :func:`drain` but also folds each visited string into a checksum.

    The fingerprint is constant-size (last two digits and ``b[n]``), so two
    algorithms can be compared without an O(n) pass per string.
    """
    e = 1
    scans = writes = bw = fills = 0
    chk = _fingerprint(a, b, n)
    if kind == KIND_V:
        while True:
            moved, s, w, bb, f = next_v(a, b, n)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_W:
        while True:
            moved, s, w, bb, f = next_w(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_X:
        while True:
            moved, s, w, bb, f = next_x(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_Y:
        while True:
            moved, s, w, bb, f = next_y(a, b, n, k1)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_Z:
        while True:
            moved, s, w, bb, f = next_z(a, b, n, k1, k2)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_Z_STAR:
        while True:
            moved, s, w, bb, f = next_z_star(a, b, n, k1, k2)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    elif kind == KIND_U:
        while True:
            moved, s, w, bb, f = next_u(a, b, n, k2, m)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    else:
        while True:
            moved, s, w, bb, f = next_u_star(a, b, n, k2, m, r)
            scans += s
            writes += w
            bw += bb
            fills += f
            if not moved:
                break
            e += 1
            chk = chk * 1000003 + _fingerprint(a, b, n)
    _tally(cnt, e, scans, writes, bw, fills)
    return e, chk
