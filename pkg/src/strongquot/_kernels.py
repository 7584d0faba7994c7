"""Hot loops for submonoid enumeration and denominator filtering.

Two implementations of every kernel are kept: a numba one working on
``uint64`` masks (rings with at most 64 elements) and a pure-Python one on
arbitrary-precision ints.  The Python versions serve larger rings and act as
the reference in tests.
"""
from __future__ import annotations

import numba as nb
import numpy as np

WORD = 64


# --------------------------------------------------------------------------
# submonoid lattice: BFS over closures of M ∪ {x}
# --------------------------------------------------------------------------


@nb.njit(cache=True)
def _lattice_u64(mul, zero, one):
    n = mul.shape[0]
    cap = 1024
    masks = np.zeros(cap, np.uint64)
    parent = np.full(cap, -1, np.int64)
    gen = np.full(cap, -1, np.int64)
    trans = np.full((cap, n), -1, np.int32)
    index = dict()
    masks[0] = np.uint64(1) << np.uint64(one)
    index[masks[0]] = 0
    count = 1
    head = 0
    members = np.empty(n, np.int64)
    while head < count:
        m = masks[head]
        k = 0
        for i in range(n):
            if (m >> np.uint64(i)) & np.uint64(1):
                members[k] = i
                k += 1
        base_k = k
        for x in range(n):
            if (m >> np.uint64(x)) & np.uint64(1):
                trans[head, x] = head
                continue
            if x == zero:
                continue
            cur = m | (np.uint64(1) << np.uint64(x))
            k = base_k
            members[k] = x
            k += 1
            ptr = base_k
            failed = False
            while ptr < k and not failed:
                y = members[ptr]
                ptr += 1
                kk = k
                for j in range(kk):
                    z = members[j]
                    for p in (mul[y, z], mul[z, y]):
                        if not (cur >> np.uint64(p)) & np.uint64(1):
                            if p == zero:
                                failed = True
                                break
                            cur |= np.uint64(1) << np.uint64(p)
                            members[k] = p
                            k += 1
                    if failed:
                        break
            if failed:
                continue
            if cur in index:
                trans[head, x] = index[cur]
                continue
            if count == cap:
                cap *= 2
                nm = np.zeros(cap, np.uint64)
                nm[:count] = masks[:count]
                masks = nm
                npa = np.full(cap, -1, np.int64)
                npa[:count] = parent[:count]
                parent = npa
                ng = np.full(cap, -1, np.int64)
                ng[:count] = gen[:count]
                gen = ng
                nt = np.full((cap, n), -1, np.int32)
                nt[:count] = trans[:count]
                trans = nt
            masks[count] = cur
            parent[count] = head
            gen[count] = x
            index[cur] = count
            trans[head, x] = count
            count += 1
        head += 1
    return masks[:count].copy(), parent[:count].copy(), gen[:count].copy(), trans[:count].copy()


def _closure_add(mul: list, zero: int, base: int, base_members: list, x: int) -> int | None:
    """Closure of a closed set ``base`` together with ``x``; None when zero appears."""
    cur = base | (1 << x)
    members = list(base_members)
    members.append(x)
    ptr = len(base_members)
    while ptr < len(members):
        y = members[ptr]
        ptr += 1
        row = mul[y]
        for z in members[:len(members)]:
            for p in (row[z], mul[z][y]):
                if not (cur >> p) & 1:
                    if p == zero:
                        return None
                    cur |= 1 << p
                    members.append(p)
    return cur


def _lattice_py(mul: list, zero: int, one: int):
    n = len(mul)
    masks = [1 << one]
    parent = [-1]
    gen = [-1]
    trans_rows = []
    index = {masks[0]: 0}
    head = 0
    while head < len(masks):
        m = masks[head]
        members = [i for i in range(n) if (m >> i) & 1]
        row = [-1] * n
        for x in range(n):
            if (m >> x) & 1:
                row[x] = head
                continue
            if x == zero:
                continue
            cur = _closure_add(mul, zero, m, members, x)
            if cur is None:
                continue
            idx = index.get(cur)
            if idx is None:
                idx = len(masks)
                index[cur] = idx
                masks.append(cur)
                parent.append(head)
                gen.append(x)
            row[x] = idx
        trans_rows.append(row)
        head += 1
    return (masks, np.array(parent, np.int64), np.array(gen, np.int64),
            np.array(trans_rows, np.int32).reshape(len(masks), n))


def submonoid_lattice(mul: np.ndarray, zero: int, one: int, use_numba: bool = True):
    """All submonoids of ``(R,·)`` avoiding zero, discovered breadth first.

    Returns ``(masks, parent, gen, trans)``: ``masks`` is a list of int
    bitmasks, ``gen[i]`` the element adjoined to ``parent[i]`` to reach set
    ``i`` and ``trans[i, x]`` the id of the closure of set ``i`` with ``x``
    (``-1`` when that closure contains zero).
    """
    n = mul.shape[0]
    if use_numba and n <= WORD:
        m, p, g, t = _lattice_u64(np.ascontiguousarray(mul, dtype=np.int64), zero, one)
        return [int(v) for v in m], p, g, t
    return _lattice_py(mul.tolist(), zero, one)


def generator_chains(parent: np.ndarray, gen: np.ndarray) -> np.ndarray:
    """``chains[i]`` lists the BFS generators of set ``i`` padded with -1."""
    N = len(parent)
    depth = np.zeros(N, np.int64)
    for i in range(1, N):
        depth[i] = depth[parent[i]] + 1
    D = max(int(depth.max()) if N else 0, 1)
    chains = np.full((N, D), -1, np.int64)
    for i in range(1, N):
        j, k = i, depth[i] - 1
        while j > 0:
            chains[i, k] = gen[j]
            j = parent[j]
            k -= 1
    return chains


def join_id(trans: np.ndarray, chains: np.ndarray, a: int, b: int) -> int:
    """Lattice id of the submonoid generated by sets ``a`` and ``b`` (-1 if it meets 0)."""
    cur = a
    for x in chains[b]:
        if x < 0:
            break
        cur = int(trans[cur, x])
        if cur < 0:
            return -1
    return cur


# --------------------------------------------------------------------------
# denominator flags
# --------------------------------------------------------------------------


@nb.njit(cache=True)
def _den_flags_u64(mul, zero, masks):
    n = mul.shape[0]
    lideal = np.zeros(n, np.uint64)
    lann = np.zeros(n, np.uint64)
    rann = np.zeros(n, np.uint64)
    for s in range(n):
        for r in range(n):
            lideal[s] |= np.uint64(1) << np.uint64(mul[r, s])
            if mul[r, s] == zero:
                lann[s] |= np.uint64(1) << np.uint64(r)
            if mul[s, r] == zero:
                rann[s] |= np.uint64(1) << np.uint64(r)
    N = masks.shape[0]
    ore = np.zeros(N, np.bool_)
    den = np.zeros(N, np.bool_)
    ass = np.zeros(N, np.uint64)
    mem = np.empty(n, np.int64)
    for idx in range(N):
        m = masks[idx]
        k = 0
        a = np.uint64(0)
        la = np.uint64(0)
        for i in range(n):
            if (m >> np.uint64(i)) & np.uint64(1):
                mem[k] = i
                k += 1
                a |= rann[i]
                la |= lann[i]
        ass[idx] = a
        ok = True
        for r in range(n):
            sr = np.uint64(0)
            for j in range(k):
                sr |= np.uint64(1) << np.uint64(mul[mem[j], r])
            for j in range(k):
                if not (sr & lideal[mem[j]]):
                    ok = False
                    break
            if not ok:
                break
        ore[idx] = ok
        den[idx] = ok and not (la & ~a)
    return ore, den, ass


def _den_flags_py(mul: list, zero: int, masks: list):
    n = len(mul)
    lideal = [0] * n
    lann = [0] * n
    rann = [0] * n
    for s in range(n):
        for r in range(n):
            lideal[s] |= 1 << mul[r][s]
            if mul[r][s] == zero:
                lann[s] |= 1 << r
            if mul[s][r] == zero:
                rann[s] |= 1 << r
    ore, den, ass = [], [], []
    for m in masks:
        mem = [i for i in range(n) if (m >> i) & 1]
        a = la = 0
        for i in mem:
            a |= rann[i]
            la |= lann[i]
        ok = True
        for r in range(n):
            sr = 0
            for t in mem:
                sr |= 1 << mul[t][r]
            if any(not (sr & lideal[s]) for s in mem):
                ok = False
                break
        ore.append(ok)
        den.append(ok and not (la & ~a))
        ass.append(a)
    return np.array(ore, np.bool_), np.array(den, np.bool_), ass


def denominator_flags(mul: np.ndarray, zero: int, masks: list, use_numba: bool = True):
    """Left Ore flags, left denominator flags and ``ass`` masks for each submonoid.

    Pass the transposed table to obtain the right-sided flags.
    """
    n = mul.shape[0]
    if use_numba and n <= WORD:
        arr = np.array(masks, dtype=np.uint64)
        ore, den, ass = _den_flags_u64(np.ascontiguousarray(mul, dtype=np.int64), zero, arr)
        return ore, den, [int(v) for v in ass]
    return _den_flags_py(mul.tolist(), zero, masks)


# --------------------------------------------------------------------------
# all-pairs scan: products of denominator sets and the maximality criterion
# --------------------------------------------------------------------------


@nb.njit(cache=True)
def _pair_scan_nb(trans, chains, den_idx, is_den):
    d = den_idx.shape[0]
    depth = chains.shape[1]
    has_ext = np.zeros(d, np.bool_)
    bad = 0
    bs = -1
    bt = -1
    for a in range(d):
        s = den_idx[a]
        for b in range(a + 1, d):
            t = den_idx[b]
            cur = s
            for g in range(depth):
                x = chains[t, g]
                if x < 0:
                    break
                cur = trans[cur, x]
                if cur < 0:
                    break
            if cur < 0:
                continue
            if not is_den[cur]:
                bad += 1
                if bs < 0:
                    bs = s
                    bt = t
            # T ⊄ S exactly when the join is a strictly larger set than S
            if cur != s:
                has_ext[a] = True
            if cur != t:
                has_ext[b] = True
    return bad, bs, bt, has_ext


def _pair_scan_py(trans, chains, den_idx, is_den):
    d = len(den_idx)
    has_ext = np.zeros(d, np.bool_)
    bad, bs, bt = 0, -1, -1
    for a in range(d):
        s = int(den_idx[a])
        for b in range(a + 1, d):
            t = int(den_idx[b])
            cur = join_id(trans, chains, s, t)
            if cur < 0:
                continue
            if not is_den[cur]:
                bad += 1
                if bs < 0:
                    bs, bt = s, t
            if cur != s:
                has_ext[a] = True
            if cur != t:
                has_ext[b] = True
    return bad, bs, bt, has_ext


@nb.njit(cache=True)
def _row_scan_nb(trans, chains, s, den_idx):
    depth = chains.shape[1]
    for b in range(den_idx.shape[0]):
        t = den_idx[b]
        cur = s
        for g in range(depth):
            x = chains[t, g]
            if x < 0:
                break
            cur = trans[cur, x]
            if cur < 0:
                break
        if cur >= 0 and cur != s:
            return b
    return -1


def _row_scan_py(trans, chains, s, den_idx):
    for b, t in enumerate(den_idx):
        cur = join_id(trans, chains, s, int(t))
        if cur >= 0 and cur != s:
            return b
    return -1


def row_scan(trans, chains, s, den_idx, use_numba: bool = True) -> int:
    """Position in ``den_idx`` of the first ``T`` with ``0 ∉ ST`` and ``T ⊄ S``, or -1."""
    den_idx = np.asarray(den_idx, dtype=np.int64)
    if use_numba:
        return int(_row_scan_nb(trans, chains, int(s), den_idx))
    return _row_scan_py(trans, chains, int(s), den_idx)


def pair_scan(trans, chains, den_idx, is_den, use_numba: bool = True):
    """Scan every pair ``S, T`` of denominator sets.

    Returns ``(violations, S_id, T_id, extendable)`` where ``violations``
    counts zero-free products ``ST`` that are not denominator sets (first
    offender reported) and ``extendable[i]`` says some ``T ⊄ S_i`` has
    ``0 ∉ S_i T``.
    """
    den_idx = np.asarray(den_idx, dtype=np.int64)
    if use_numba:
        return _pair_scan_nb(trans, chains, den_idx, np.asarray(is_den, np.bool_))
    return _pair_scan_py(trans, chains, den_idx, is_den)
