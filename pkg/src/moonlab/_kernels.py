"""Compiled inner loops shared by the counting, analysis, and iso modules.

Everything here operates on int64 adjacency rows (bit j of masks[i] set iff
arc i -> j) so a whole neighborhood is one word.  Counts stay in int64; the
callers enforce order guards under which every intermediate value is
provably below 2**63 (path counts are bounded by (n-1)! and 19! < 2**63),
so no kernel can overflow silently.

The canonical-form kernel packs the row-major pair bitstring into one int64
with earlier pairs more significant, which makes lexicographic comparison a
plain integer compare.  That packing caps the kernel at order 11 (55 pair
bits); larger orders take the pure-Python twin in iso.py.
"""
from __future__ import annotations

import numpy as np
from numba import njit

INT64 = np.int64

_M1 = 0x5555555555555555
_M2 = 0x3333333333333333
_M4 = 0x0F0F0F0F0F0F0F0F
_H01 = 0x0101010101010101


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & _M1)
    x = (x & _M2) + ((x >> 2) & _M2)
    x = (x + (x >> 4)) & _M4
    return (x * _H01) >> 56


@njit(cache=True, inline="always")
def _ctz(x):
    # index of the lowest set bit; x must be non-zero
    return _popcount((x & -x) - 1)


# -- circuit census ----------------------------------------------------


@njit(cache=True)
def census(n, masks):
    """Count circuits of every length; counts[ell] is the number of
    directed cycles on exactly ell vertices.

    One subset DP per anchor vertex a (the minimum vertex of each cycle):
    dp[mask*m + v] is the number of simple paths from a through exactly the
    local subset mask, ending at local vertex v, where the local universe
    is {a+1, ..., n-1}.
    """
    counts = np.zeros(n + 1, dtype=INT64)
    for a in range(n - 2):
        m = n - 1 - a
        lim = 1 << m
        adj = np.empty(m, dtype=INT64)
        back = INT64(0)
        for j in range(m):
            adj[j] = (masks[a + 1 + j] >> (a + 1)) & (lim - 1)
            if masks[a + 1 + j] >> a & 1:
                back |= INT64(1) << j
        dp = np.zeros(lim * m, dtype=INT64)
        start = (masks[a] >> (a + 1)) & (lim - 1)
        rem = start
        while rem:
            v = _ctz(rem)
            rem &= rem - 1
            dp[(1 << v) * m + v] = 1
        for mask in range(1, lim):
            base = mask * m
            size = _popcount(mask)
            scan = mask
            while scan:
                u = _ctz(scan)
                scan &= scan - 1
                c = dp[base + u]
                if c == 0:
                    continue
                if size >= 2 and (back >> u & 1):
                    counts[size + 1] += c
                ext = adj[u] & ~mask & (lim - 1)
                while ext:
                    v = _ctz(ext)
                    ext &= ext - 1
                    dp[(mask | (1 << v)) * m + v] += c
    return counts


@njit(cache=True, inline="always")
def _drop_bit(row, w):
    # remove column w, shifting higher columns down one
    return (row & ((INT64(1) << w) - 1)) | ((row >> (w + 1)) << w)


@njit(cache=True)
def census_through(n, masks, w):
    """Count circuits through vertex w, by length; same DP anchored at w."""
    counts = np.zeros(n + 1, dtype=INT64)
    m = n - 1
    if m < 2:
        return counts
    lim = 1 << m
    adj = np.empty(m, dtype=INT64)
    back = INT64(0)
    for j in range(m):
        g = j if j < w else j + 1
        adj[j] = _drop_bit(masks[g], w) & (lim - 1)
        if masks[g] >> w & 1:
            back |= INT64(1) << j
    start = _drop_bit(masks[w], w) & (lim - 1)
    dp = np.zeros(lim * m, dtype=INT64)
    rem = start
    while rem:
        v = _ctz(rem)
        rem &= rem - 1
        dp[(1 << v) * m + v] = 1
    for mask in range(1, lim):
        base = mask * m
        size = _popcount(mask)
        scan = mask
        while scan:
            u = _ctz(scan)
            scan &= scan - 1
            c = dp[base + u]
            if c == 0:
                continue
            if size >= 2 and (back >> u & 1):
                counts[size + 1] += c
            ext = adj[u] & ~mask & (lim - 1)
            while ext:
                v = _ctz(ext)
                ext &= ext - 1
                dp[(mask | (1 << v)) * m + v] += c
    return counts


@njit(cache=True)
def hamiltonian_paths(n, masks):
    """Total number of directed Hamiltonian paths (subset DP over all of V)."""
    if n == 1:
        return INT64(1)
    lim = 1 << n
    dp = np.zeros(lim * n, dtype=INT64)
    for v in range(n):
        dp[(1 << v) * n + v] = 1
    for mask in range(1, lim):
        base = mask * n
        scan = mask
        while scan:
            u = _ctz(scan)
            scan &= scan - 1
            c = dp[base + u]
            if c == 0:
                continue
            ext = masks[u] & ~mask
            while ext:
                v = _ctz(ext)
                ext &= ext - 1
                dp[(mask | (1 << v)) * n + v] += c
    total = INT64(0)
    base = (lim - 1) * n
    for v in range(n):
        total += dp[base + v]
    return total


# -- reachability, diameter, criticality -------------------------------


@njit(cache=True, inline="always")
def _forward_closure(masks, inside, seed):
    reach = seed
    frontier = seed
    while frontier:
        acc = INT64(0)
        while frontier:
            u = _ctz(frontier)
            frontier &= frontier - 1
            acc |= masks[u]
        frontier = acc & inside & ~reach
        reach |= frontier
    return reach


@njit(cache=True)
def is_strong_subset(n, masks, subset):
    """Strong connectivity of the sub-tournament induced on a vertex bitset."""
    size = _popcount(subset)
    if size <= 1:
        return size == 1
    seed = subset & -subset
    if _forward_closure(masks, subset, seed) != subset:
        return False
    # converse closure: grow the set of vertices that reach the seed
    reach = seed
    grew = True
    while grew:
        grew = False
        scan = subset & ~reach
        while scan:
            u = _ctz(scan)
            scan &= scan - 1
            if masks[u] & reach:
                reach |= INT64(1) << u
                grew = True
    return reach == subset


@njit(cache=True)
def subset_eccentricity(n, masks, subset, s):
    """BFS rounds needed for s to cover subset, or -1 if it cannot."""
    reach = INT64(1) << s
    frontier = reach
    rounds = INT64(0)
    while reach != subset:
        acc = INT64(0)
        while frontier:
            u = _ctz(frontier)
            frontier &= frontier - 1
            acc |= masks[u]
        frontier = acc & subset & ~reach
        if frontier == 0:
            return INT64(-1)
        reach |= frontier
        rounds += 1
    return rounds


@njit(cache=True)
def diameter_of_subset(n, masks, subset):
    """Diameter of the induced sub-tournament, or -1 if it is not strong."""
    worst = INT64(0)
    scan = subset
    while scan:
        s = _ctz(scan)
        scan &= scan - 1
        e = subset_eccentricity(n, masks, subset, s)
        if e < 0:
            return INT64(-1)
        if e > worst:
            worst = e
    return worst


@njit(cache=True)
def non_critical_mask(n, masks):
    """Bitset of vertices whose deletion keeps the tournament strong."""
    full = (INT64(1) << n) - 1
    ncr = INT64(0)
    for w in range(n):
        rest = full & ~(INT64(1) << w)
        if is_strong_subset(n, masks, rest):
            ncr |= INT64(1) << w
    return ncr


@njit(cache=True)
def deleted_diameters(n, masks, out):
    """out[w] = diameter of the tournament minus w, or -1 if that is not strong."""
    full = (INT64(1) << n) - 1
    for w in range(n):
        out[w] = diameter_of_subset(n, masks, full & ~(INT64(1) << w))


@njit(cache=True)
def strong_subset_counts(n, masks):
    """counts[ell] = number of vertex subsets of size ell inducing a strong
    sub-tournament.  Full 2**n scan; callers guard the order."""
    counts = np.zeros(n + 1, dtype=INT64)
    for subset in range(1, 1 << n):
        size = _popcount(subset)
        if size < 3:
            continue
        if is_strong_subset(n, masks, INT64(subset)):
            counts[size] += 1
    return counts


# -- canonical form ----------------------------------------------------
#
# The canonical code of an order-n tournament is the lexicographically
# smallest TRN pair string over all relabelings.  Search: assign labels
# 0, 1, ... one at a time, maintaining the ordered partition of unassigned
# vertices induced by the choices so far.  Each next label must come from
# the first cell; within one node all candidates share cell widths, so the
# minimal achievable row is decided by out-degree counts per cell and
# candidate rows compare as plain integers.  Global best-prefix pruning
# bounds the branching that partition refinement cannot kill (regular
# tournaments).


@njit(cache=True)
def _canon_level(n, masks, cells, ncells, cand, ccnt, cpos, pre, k):
    # fill the candidate set (argmin row) for level k and extend the prefix
    first = cells[k, 0]
    minr = INT64(1) << 62
    cnt = 0
    scan = first
    while scan:
        u = _ctz(scan)
        scan &= scan - 1
        r = INT64(0)
        for j in range(ncells[k]):
            cc = cells[k, j]
            if j == 0:
                cc &= ~(INT64(1) << u)
            w = _popcount(cc)
            o = _popcount(cc & masks[u])
            r = (r << w) | ((INT64(1) << o) - 1)
        if r < minr:
            minr = r
            cand[k, 0] = u
            cnt = 1
        elif r == minr:
            cand[k, cnt] = u
            cnt += 1
    ccnt[k] = cnt
    cpos[k] = 0
    pre[k + 1] = (pre[k] << (n - 1 - k)) | minr


@njit(cache=True)
def canon_code(n, masks, perm_out):
    """Canonical pair-string of the tournament, packed into an int64.

    Earlier pairs sit in more significant bits.  perm_out[k] receives the
    original vertex that takes label k; ties pick the first branch in
    ascending vertex order, so the permutation is deterministic.  Caller
    guarantees n <= 11.
    """
    if n == 1:
        perm_out[0] = 0
        return INT64(0)
    nbits = n * (n - 1) // 2
    full = (INT64(1) << n) - 1

    cells = np.zeros((n + 1, n + 1), dtype=INT64)
    ncells = np.zeros(n + 1, dtype=INT64)
    cand = np.zeros((n, n), dtype=INT64)
    ccnt = np.zeros(n, dtype=INT64)
    cpos = np.zeros(n, dtype=INT64)
    pre = np.zeros(n + 1, dtype=INT64)
    done_bits = np.zeros(n + 1, dtype=INT64)
    curperm = np.zeros(n, dtype=INT64)
    for k in range(n + 1):
        done_bits[k] = nbits - (n - k) * (n - k - 1) // 2

    best = (INT64(1) << nbits) - 1
    have = False

    cells[0, 0] = full
    ncells[0] = 1
    _canon_level(n, masks, cells, ncells, cand, ccnt, cpos, pre, 0)

    k = 0
    while k >= 0:
        if cpos[k] >= ccnt[k] or (
            have and pre[k + 1] > (best >> (nbits - done_bits[k + 1]))
        ):
            k -= 1
            continue
        u = cand[k, cpos[k]]
        cpos[k] += 1
        curperm[k] = u
        if k == n - 1:
            code = pre[n]
            if not have or code < best:
                best = code
                have = True
                for i in range(n):
                    perm_out[i] = curperm[i]
            continue
        # refine: split every cell into in-part then out-part of u
        idx = 0
        for j in range(ncells[k]):
            cc = cells[k, j]
            if j == 0:
                cc &= ~(INT64(1) << u)
            ins = cc & ~masks[u]
            outs = cc & masks[u]
            if ins:
                cells[k + 1, idx] = ins
                idx += 1
            if outs:
                cells[k + 1, idx] = outs
                idx += 1
        ncells[k + 1] = idx
        _canon_level(n, masks, cells, ncells, cand, ccnt, cpos, pre, k + 1)
        k += 1
    return best


@njit(cache=True)
def drop_vertex(n, masks, w, out_masks):
    """Adjacency rows of the sub-tournament with vertex w removed."""
    idx = 0
    for i in range(n):
        if i == w:
            continue
        out_masks[idx] = _drop_bit(masks[i], w)
        idx += 1


@njit(cache=True)
def children_codes(mp, parent_masks, parent_code):
    """Canonical codes of the accepted one-vertex extensions of a parent.

    Extends the canonical representative of an order-mp class by a new
    vertex in all 2**mp ways.  A child is accepted when deleting the vertex
    that its canonical form labels last reproduces parent_code, which makes
    every class of order mp+1 appear under exactly one parent.  Duplicates
    within the returned array are possible; the caller dedupes.
    """
    m = mp + 1
    child = np.empty(m, dtype=INT64)
    sub = np.empty(mp, dtype=INT64)
    perm = np.empty(m, dtype=INT64)
    perm_sub = np.empty(mp, dtype=INT64)
    out = np.empty(1 << mp, dtype=INT64)
    k = 0
    for bits in range(1 << mp):
        for i in range(mp):
            if bits >> i & 1:
                child[i] = parent_masks[i]
            else:
                child[i] = parent_masks[i] | (INT64(1) << mp)
        child[mp] = INT64(bits)
        code = canon_code(m, child, perm)
        last = perm[m - 1]
        if last == mp:
            # deleting the new vertex restores the parent rows verbatim
            accepted = True
        else:
            drop_vertex(m, child, last, sub)
            accepted = canon_code(mp, sub, perm_sub) == parent_code
        if accepted:
            out[k] = code
            k += 1
    return out[:k]


@njit(cache=True)
def delta_kinds(n, masks):
    """Bitmask over s of: the tournament splits into three cyclically
    dominating blocks with exactly s singleton blocks, every larger block
    being a strong sub-tournament of order >= 3 and diameter 2.

    Vertex 0 is pinned to the first block; rotating the three blocks maps
    valid splits to valid splits, so nothing is lost.  3**(n-1) assignments
    scanned with an odometer, domination checked before the block tests.
    """
    kinds = 0
    digit = np.zeros(n, dtype=INT64)  # digit[0] stays 0
    total = 1
    for _ in range(n - 1):
        total *= 3
    for _ in range(total):
        a = INT64(0)
        b = INT64(0)
        c = INT64(0)
        for v in range(n):
            if digit[v] == 0:
                a |= INT64(1) << v
            elif digit[v] == 1:
                b |= INT64(1) << v
            else:
                c |= INT64(1) << v
        if b != 0 and c != 0:
            ok = True
            scan = a
            while ok and scan:
                v = _ctz(scan)
                scan &= scan - 1
                if masks[v] & b != b:
                    ok = False
            scan = b
            while ok and scan:
                v = _ctz(scan)
                scan &= scan - 1
                if masks[v] & c != c:
                    ok = False
            scan = c
            while ok and scan:
                v = _ctz(scan)
                scan &= scan - 1
                if masks[v] & a != a:
                    ok = False
            if ok:
                singles = 0
                for blk in (a, b, c):
                    size = _popcount(blk)
                    if size == 1:
                        singles += 1
                    elif size == 2 or diameter_of_subset(n, masks, blk) != 2:
                        ok = False
                        break
                if ok:
                    kinds |= 1 << singles
        # odometer over digits 1..n-1
        pos = 1
        while pos < n:
            digit[pos] += 1
            if digit[pos] < 3:
                break
            digit[pos] = 0
            pos += 1
    return kinds
