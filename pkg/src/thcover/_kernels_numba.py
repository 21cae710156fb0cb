"""Numba-compiled hot loops.

Every function here has a pure-numpy twin of the same name and contract in
_kernels_numpy.py; thcover.backend picks one module at import time.  Witness
searches return the lexicographically first match as an int64 array, filled
with -1 when there is no match, so the two backends agree byte for byte.

Conventions shared by both backends:
  * nonadj is the irreflexive non-adjacency matrix (False diagonal), so any
    nonadj[u, v] test also enforces u != v.
  * cls is the n x n edge-class matrix: -1 for non-edges and the diagonal,
    0/1/2 for edges.  A cls[u, v] == c test with c >= 0 enforces u != v and
    adjacency at once.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def aux_dense(eu, ev, nonadj):
    """Dense adjacency of the conflict graph on edges.

    Edges i = ab and j = cd are adjacent iff they are the two edges of an
    alternating 4-cycle: bc and ad non-edges, or ac and bd non-edges.
    O(m^2) pair tests.
    """
    m = eu.shape[0]
    out = np.zeros((m, m), dtype=np.bool_)
    for i in range(m):
        a, b = eu[i], ev[i]
        for j in range(i + 1, m):
            c, d = eu[j], ev[j]
            if (nonadj[b, c] and nonadj[a, d]) or (nonadj[a, c] and nonadj[b, d]):
                out[i, j] = True
                out[j, i] = True
    return out


@njit(cache=True)
def aux_pairs(eu, ev, nonadj):
    """Sparse variant of aux_dense: arrays (i, j) with i < j, ascending."""
    m = eu.shape[0]
    cap = 1024
    ii = np.empty(cap, dtype=np.int64)
    jj = np.empty(cap, dtype=np.int64)
    cnt = 0
    for i in range(m):
        a, b = eu[i], ev[i]
        for j in range(i + 1, m):
            c, d = eu[j], ev[j]
            if (nonadj[b, c] and nonadj[a, d]) or (nonadj[a, c] and nonadj[b, d]):
                if cnt == cap:
                    cap *= 2
                    ii2 = np.empty(cap, dtype=np.int64)
                    jj2 = np.empty(cap, dtype=np.int64)
                    ii2[:cnt] = ii[:cnt]
                    jj2[:cnt] = jj[:cnt]
                    ii, jj = ii2, jj2
                ii[cnt] = i
                jj[cnt] = j
                cnt += 1
    return ii[:cnt].copy(), jj[:cnt].copy()


@njit(cache=True)
def first_ac4(eu, ev, nonadj):
    """First alternating 4-cycle over edge-index pairs (i < j).

    Returns (a, b, c, d) with ab, cd edges and bc, ad non-edges, or four -1.
    """
    m = eu.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for i in range(m):
        a, b = eu[i], ev[i]
        for j in range(i + 1, m):
            c, d = eu[j], ev[j]
            if nonadj[b, c] and nonadj[a, d]:
                out[0], out[1], out[2], out[3] = a, b, c, d
                return out
            if nonadj[a, c] and nonadj[b, d]:
                out[0], out[1], out[2], out[3] = b, a, c, d
                return out
    return out


@njit(cache=True)
def recolor_flags(cls, nonadj, f0u, f0v):
    """Pentagon flags per class-0 edge cd: bit 1 set iff some class-1
    pentagon (a, b, c, d, e) exists, bit 2 likewise for class 2.

    Search per edge and class: b, e run over common class-(3-i) neighbours
    of c and d, a over common class-i neighbours of b and e avoiding c, d.
    """
    n = cls.shape[0]
    k = f0u.shape[0]
    flags = np.zeros(k, dtype=np.uint8)
    for t in range(k):
        c, d = f0u[t], f0v[t]
        for i in range(1, 3):
            o = 3 - i
            found = False
            for b in range(n):
                if cls[b, c] != o or cls[b, d] != o:
                    continue
                for e in range(b + 1, n):
                    if cls[e, c] != o or cls[e, d] != o or not nonadj[b, e]:
                        continue
                    for a in range(n):
                        if (
                            cls[a, b] == i
                            and cls[a, e] == i
                            and nonadj[a, c]
                            and nonadj[a, d]
                        ):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                flags[t] |= i
    return flags


@njit(cache=True)
def find_pentagon(cls, nonadj, strict_only):
    """First pentagon (a, b, c, d, e) in lexicographic tuple order.

    Pentagon: ab, ae in class i; bc, bd, ec, ed in class 3-i; cd in class i
    (strict) or 0; ac, ad, be non-edges.  Returns (a, b, c, d, e, i, strict)
    or seven -1.  All distinctness is implied by the matrix tests.
    """
    n = cls.shape[0]
    out = np.full(7, -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            i = cls[a, b]
            if i < 1:
                continue
            o = 3 - i
            for c in range(n):
                if not nonadj[a, c] or cls[b, c] != o:
                    continue
                for d in range(n):
                    if not nonadj[a, d] or cls[b, d] != o:
                        continue
                    cd = cls[c, d]
                    if cd != i and (strict_only or cd != 0):
                        continue
                    for e in range(n):
                        if (
                            cls[a, e] == i
                            and nonadj[b, e]
                            and cls[e, c] == o
                            and cls[e, d] == o
                        ):
                            out[0], out[1], out[2] = a, b, c
                            out[3], out[4], out[5] = d, e, i
                            out[6] = 1 if cd == i else 0
                            return out
    return out


@njit(cache=True)
def find_switch_path(cls, nonadj, strict_only):
    """First switching path (x, y, z, w) in lexicographic tuple order.

    xy, zw in class i (strict) or i/0; yz in class 3-i; xw a non-edge.
    Returns (x, y, z, w, i, strict) or six -1.
    """
    n = cls.shape[0]
    out = np.full(6, -1, dtype=np.int64)
    for x in range(n):
        for y in range(n):
            cxy = cls[x, y]
            if cxy < 0:
                continue
            for z in range(n):
                o = cls[y, z]
                if o < 1:
                    continue
                i = 3 - o
                if cxy != i and (strict_only or cxy != 0):
                    continue
                for w in range(n):
                    if not nonadj[x, w]:
                        continue
                    czw = cls[z, w]
                    if czw != i and (strict_only or czw != 0):
                        continue
                    out[0], out[1], out[2], out[3] = x, y, z, w
                    out[4] = i
                    out[5] = 1 if (cxy == i and czw == i) else 0
                    return out
    return out


@njit(cache=True)
def find_switch_cycle(cls):
    """First switching cycle (a, b, c, d): all four pairs ab, bc, cd, da are
    edges; ab, cd in class i or 0; bc, ad in class 3-i.

    Returns (a, b, c, d, i) or five -1.
    """
    n = cls.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            cab = cls[a, b]
            if cab < 0:
                continue
            for c in range(n):
                o = cls[b, c]
                if o < 1:
                    continue
                i = 3 - o
                if cab != i and cab != 0:
                    continue
                for d in range(n):
                    if cls[a, d] != o:
                        continue
                    ccd = cls[c, d]
                    if ccd == i or ccd == 0:
                        out[0], out[1], out[2], out[3] = a, b, c, d
                        out[4] = i
                        return out
    return out


@njit(cache=True)
def find_hexagon(cls, nonadj):
    """First alternating hexagon: six distinct vertices v0..v5 with
    v0v1, v2v3, v4v5 edges of one class and v1v2, v3v4, v5v0 non-edges.

    Returns (v0..v5, class) or seven -1.  Only the three opposite pairs
    need explicit distinctness checks; the rest follow from the tests.
    """
    n = cls.shape[0]
    out = np.full(7, -1, dtype=np.int64)
    for v0 in range(n):
        for v1 in range(n):
            i = cls[v0, v1]
            if i < 1:
                continue
            for v2 in range(n):
                if not nonadj[v1, v2]:
                    continue
                for v3 in range(n):
                    if v3 == v0 or cls[v2, v3] != i:
                        continue
                    for v4 in range(n):
                        if v4 == v1 or not nonadj[v3, v4]:
                            continue
                        for v5 in range(n):
                            if (
                                v5 != v2
                                and cls[v4, v5] == i
                                and nonadj[v5, v0]
                            ):
                                out[0], out[1], out[2] = v0, v1, v2
                                out[3], out[4], out[5] = v3, v4, v5
                                out[6] = i
                                return out
    return out


@njit(cache=True)
def find_induced4(adj, prof):
    """First ordered 4-tuple of distinct vertices matching the adjacency
    profile exactly (induced copy), or four -1."""
    n = adj.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for v0 in range(n):
        for v1 in range(n):
            if v1 == v0 or adj[v0, v1] != prof[0, 1]:
                continue
            for v2 in range(n):
                if (
                    v2 == v0
                    or v2 == v1
                    or adj[v0, v2] != prof[0, 2]
                    or adj[v1, v2] != prof[1, 2]
                ):
                    continue
                for v3 in range(n):
                    if (
                        v3 != v0
                        and v3 != v1
                        and v3 != v2
                        and adj[v0, v3] == prof[0, 3]
                        and adj[v1, v3] == prof[1, 3]
                        and adj[v2, v3] == prof[2, 3]
                    ):
                        out[0], out[1], out[2], out[3] = v0, v1, v2, v3
                        return out
    return out


@njit(cache=True)
def find_induced5(adj, prof):
    """5-vertex variant of find_induced4."""
    n = adj.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    for v0 in range(n):
        for v1 in range(n):
            if v1 == v0 or adj[v0, v1] != prof[0, 1]:
                continue
            for v2 in range(n):
                if (
                    v2 == v0
                    or v2 == v1
                    or adj[v0, v2] != prof[0, 2]
                    or adj[v1, v2] != prof[1, 2]
                ):
                    continue
                for v3 in range(n):
                    if (
                        v3 == v0
                        or v3 == v1
                        or v3 == v2
                        or adj[v0, v3] != prof[0, 3]
                        or adj[v1, v3] != prof[1, 3]
                        or adj[v2, v3] != prof[2, 3]
                    ):
                        continue
                    for v4 in range(n):
                        if (
                            v4 != v0
                            and v4 != v1
                            and v4 != v2
                            and v4 != v3
                            and adj[v0, v4] == prof[0, 4]
                            and adj[v1, v4] == prof[1, 4]
                            and adj[v2, v4] == prof[2, 4]
                            and adj[v3, v4] == prof[3, 4]
                        ):
                            out[0], out[1], out[2] = v0, v1, v2
                            out[3], out[4] = v3, v4
                            return out
    return out
