"""Pure-numpy twins of the numba kernels.

Same names, same contracts, same witnesses: searches vectorize the inner
loops but keep the outer loops in lexicographic order, and np.argwhere is
row-major, so the first hit matches the numba scan exactly.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 512


def aux_dense(eu, ev, nonadj):
    m = eu.shape[0]
    out = np.zeros((m, m), dtype=np.bool_)
    for lo in range(0, m, _CHUNK):
        hi = min(lo + _CHUNK, m)
        a, b = eu[lo:hi, None], ev[lo:hi, None]
        c, d = eu[None, :], ev[None, :]
        t1 = nonadj[b, c] & nonadj[a, d]
        t2 = nonadj[a, c] & nonadj[b, d]
        out[lo:hi] = t1 | t2
    # shared-endpoint pairs and the diagonal never pass: one side of each
    # interleaving is an edge or a diagonal entry, and nonadj is irreflexive
    return out


def aux_pairs(eu, ev, nonadj):
    m = eu.shape[0]
    ii: list[np.ndarray] = []
    jj: list[np.ndarray] = []
    for i in range(m):
        a, b = eu[i], ev[i]
        c, d = eu[i + 1 :], ev[i + 1 :]
        hit = (nonadj[b, c] & nonadj[a, d]) | (nonadj[a, c] & nonadj[b, d])
        js = np.flatnonzero(hit) + i + 1
        if js.size:
            ii.append(np.full(js.size, i, dtype=np.int64))
            jj.append(js.astype(np.int64))
    if not ii:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(ii), np.concatenate(jj)


def first_ac4(eu, ev, nonadj):
    m = eu.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for i in range(m):
        a, b = eu[i], ev[i]
        c, d = eu[i + 1 :], ev[i + 1 :]
        t1 = nonadj[b, c] & nonadj[a, d]
        t2 = nonadj[a, c] & nonadj[b, d]
        hit = np.flatnonzero(t1 | t2)
        if hit.size:
            j = int(hit[0]) + i + 1
            if t1[j - i - 1]:
                out[:] = (a, b, eu[j], ev[j])
            else:
                out[:] = (b, a, eu[j], ev[j])
            return out
    return out


def recolor_flags(cls, nonadj, f0u, f0v):
    k = f0u.shape[0]
    flags = np.zeros(k, dtype=np.uint8)
    for t in range(k):
        c, d = int(f0u[t]), int(f0v[t])
        for i in (1, 2):
            o = 3 - i
            bs = np.flatnonzero((cls[:, c] == o) & (cls[:, d] == o))
            if bs.size < 2:
                continue
            avs = np.flatnonzero(nonadj[:, c] & nonadj[:, d])
            if avs.size == 0:
                continue
            m = (cls[np.ix_(avs, bs)] == i).astype(np.uint8)
            nb = nonadj[np.ix_(bs, bs)].astype(np.uint8)
            # pentagon with legs b, e exists iff some row of m contains two
            # entries joined by a non-edge
            if np.any((m @ nb > 0) & m.astype(bool)):
                flags[t] |= i
    return flags


def find_pentagon(cls, nonadj, strict_only):
    n = cls.shape[0]
    out = np.full(7, -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            i = cls[a, b]
            if i < 1:
                continue
            o = 3 - i
            cd_ok = cls == i
            if not strict_only:
                cd_ok = cd_ok | (cls == 0)
            cs = nonadj[a] & (cls[b] == o)
            if not cs.any():
                continue
            es = (cls[a] == i) & nonadj[b]
            if not es.any():
                continue
            mo = cls == o
            t = (
                cs[:, None, None]
                & cs[None, :, None]
                & cd_ok[:, :, None]
                & es[None, None, :]
                & mo[:, None, :]
                & mo[None, :, :]
            )
            hits = np.argwhere(t)
            if hits.size:
                c, d, e = (int(x) for x in hits[0])
                out[:] = (a, b, c, d, e, i, 1 if cls[c, d] == i else 0)
                return out
    return out


def find_switch_path(cls, nonadj, strict_only):
    n = cls.shape[0]
    out = np.full(6, -1, dtype=np.int64)
    for x in range(n):
        for y in range(n):
            cxy = cls[x, y]
            if cxy < 0 or (cxy == 0 and strict_only):
                continue
            if cxy > 0:
                zs = cls[y] == 3 - cxy
            else:
                zs = cls[y] > 0
            if not zs.any():
                continue
            ivec = 3 - cls[y]
            w_ok = cls == ivec[:, None]
            if not strict_only:
                w_ok = w_ok | (cls == 0)
            t = zs[:, None] & nonadj[x][None, :] & w_ok
            hits = np.argwhere(t)
            if hits.size:
                z, w = int(hits[0][0]), int(hits[0][1])
                i = 3 - int(cls[y, z])
                strict = 1 if (cxy == i and cls[z, w] == i) else 0
                out[:] = (x, y, z, w, i, strict)
                return out
    return out


def find_switch_cycle(cls):
    n = cls.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            cab = cls[a, b]
            if cab < 0:
                continue
            cmask = cls[b] > 0
            if cab > 0:
                cmask = cmask & (cls[b] == 3 - cab)
            if not cmask.any():
                continue
            ovec = cls[b]
            ivec = 3 - ovec
            t = (
                cmask[:, None]
                & (cls[a][None, :] == ovec[:, None])
                & ((cls == ivec[:, None]) | (cls == 0))
            )
            hits = np.argwhere(t)
            if hits.size:
                c, d = int(hits[0][0]), int(hits[0][1])
                out[:] = (a, b, c, d, 3 - int(cls[b, c]))
                return out
    return out


def find_hexagon(cls, nonadj):
    n = cls.shape[0]
    out = np.full(7, -1, dtype=np.int64)
    ids = np.arange(n)
    for v0 in range(n):
        for v1 in range(n):
            i = cls[v0, v1]
            if i < 1:
                continue
            mi = cls == i
            for v2 in range(n):
                if not nonadj[v1, v2]:
                    continue
                v3s = (ids != v0) & mi[v2]
                if not v3s.any():
                    continue
                v5s = (ids != v2) & nonadj[:, v0]
                t = (
                    v3s[:, None, None]
                    & (ids != v1)[None, :, None]
                    & nonadj[:, :, None]
                    & mi[None, :, :]
                    & v5s[None, None, :]
                )
                hits = np.argwhere(t)
                if hits.size:
                    v3, v4, v5 = (int(x) for x in hits[0])
                    out[:] = (v0, v1, v2, v3, v4, v5, i)
                    return out
    return out


def find_induced4(adj, prof):
    n = adj.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    ids = np.arange(n)
    off = ~np.eye(n, dtype=np.bool_)
    for v0 in range(n):
        for v1 in range(n):
            if v1 == v0 or adj[v0, v1] != prof[0, 1]:
                continue
            m2 = (ids != v0) & (ids != v1) & (adj[v0] == prof[0, 2]) & (adj[v1] == prof[1, 2])
            if not m2.any():
                continue
            m3 = (ids != v0) & (ids != v1) & (adj[v0] == prof[0, 3]) & (adj[v1] == prof[1, 3])
            t = m2[:, None] & m3[None, :] & (adj == prof[2, 3]) & off
            hits = np.argwhere(t)
            if hits.size:
                out[:] = (v0, v1, int(hits[0][0]), int(hits[0][1]))
                return out
    return out


def find_induced5(adj, prof):
    n = adj.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    ids = np.arange(n)
    off = ~np.eye(n, dtype=np.bool_)
    for v0 in range(n):
        for v1 in range(n):
            if v1 == v0 or adj[v0, v1] != prof[0, 1]:
                continue
            base = (ids != v0) & (ids != v1)
            m2 = base & (adj[v0] == prof[0, 2]) & (adj[v1] == prof[1, 2])
            if not m2.any():
                continue
            m3 = base & (adj[v0] == prof[0, 3]) & (adj[v1] == prof[1, 3])
            m4 = base & (adj[v0] == prof[0, 4]) & (adj[v1] == prof[1, 4])
            p23 = (adj == prof[2, 3]) & off
            p24 = (adj == prof[2, 4]) & off
            p34 = (adj == prof[3, 4]) & off
            t = (
                m2[:, None, None]
                & m3[None, :, None]
                & m4[None, None, :]
                & p23[:, :, None]
                & p24[:, None, :]
                & p34[None, :, :]
            )
            hits = np.argwhere(t)
            if hits.size:
                out[:] = (v0, v1, *(int(x) for x in hits[0]))
                return out
    return out
