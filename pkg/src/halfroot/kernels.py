"""Hot 0-1 matrix kernels.

Every kernel has two implementations: an ``@njit`` loop version and a
vectorised numpy version. ``HALFROOT_DISABLE_NUMBA=1`` (or numba not being
installed) selects the numpy path at import time. Both paths are always
importable as ``<name>_numba`` / ``<name>_numpy`` so they can be compared.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


USE_NUMBA = HAVE_NUMBA and os.environ.get("HALFROOT_DISABLE_NUMBA", "").strip().lower() not in (
    "1",
    "true",
    "yes",
    "on",
)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


@lru_cache(maxsize=None)
def permutation_table(k: int) -> np.ndarray:
    """All permutations of ``range(k)`` as an int64 array, lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(k))), dtype=np.int64)


def _u8(a) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=np.uint8))


# -- half-square product ------------------------------------------------------


@njit(cache=True)
def _half_square_numba(m):
    n, c = m.shape
    out = np.zeros((n, n), dtype=np.bool_)
    for u in range(n):
        for v in range(u + 1, n):
            for y in range(c):
                if m[u, y] and m[v, y]:
                    out[u, v] = True
                    out[v, u] = True
                    break
    return out


def half_square_adjacency_numba(m) -> np.ndarray:
    return _half_square_numba(_u8(m))


def half_square_adjacency_numpy(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.int32)
    out = (m @ m.T) > 0
    np.fill_diagonal(out, False)
    return out


# -- Gamma detection ------------------------------------------------------------
# Gamma: rows i < j, cols k < l with a[i,k] = a[i,l] = a[j,k] = 1 and a[j,l] = 0.


@njit(cache=True)
def _find_gamma_numba(a):
    r, c = a.shape
    for i in range(r):
        for j in range(i + 1, r):
            kmin = -1
            for k in range(c):
                if a[i, k] and a[j, k]:
                    kmin = k
                    break
            if kmin < 0:
                continue
            for l in range(c - 1, kmin, -1):
                if a[i, l] and not a[j, l]:
                    return np.array([i, j, kmin, l], dtype=np.int64)
    return np.array([-1, -1, -1, -1], dtype=np.int64)


def find_gamma_numba(a) -> tuple[int, int, int, int] | None:
    res = _find_gamma_numba(_u8(a))
    return None if res[0] < 0 else tuple(int(t) for t in res)


def find_gamma_numpy(a) -> tuple[int, int, int, int] | None:
    a = np.asarray(a, dtype=bool)
    r, c = a.shape
    if c == 0:
        return None
    idx = np.arange(c)
    for i in range(r - 1):
        rest = a[i + 1 :]
        both = a[i] & rest
        only = a[i] & ~rest
        has_both = both.any(axis=1)
        kmin = np.where(has_both, np.argmax(both, axis=1), c)
        lmax = np.where(only, idx, -1).max(axis=1)
        hit = np.nonzero(kmin < lmax)[0]
        if hit.size:
            t = int(hit[0])
            return i, i + 1 + t, int(kmin[t]), int(lmax[t])
    return None


# -- brute force: does any row/column ordering avoid Gamma? -------------------
# With the column order fixed, a Gamma between two rows depends only on which
# of them comes first, so a Gamma-free row order exists iff the forced
# precedences form an acyclic relation.


@njit(cache=True)
def _gamma_free_rows_exist(b):
    r, c = b.shape
    # before[i, j]: i must precede j
    before = np.zeros((r, r), dtype=np.bool_)
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            kmin = -1
            for k in range(c):
                if b[i, k] and b[j, k]:
                    kmin = k
                    break
            if kmin < 0:
                continue
            for l in range(c - 1, kmin, -1):
                if b[i, l] and not b[j, l]:
                    # i above j yields a Gamma, so j must precede i
                    if before[i, j]:
                        return False
                    before[j, i] = True
                    break
    indeg = np.zeros(r, dtype=np.int64)
    for i in range(r):
        for j in range(r):
            if before[i, j]:
                indeg[j] += 1
    done = np.zeros(r, dtype=np.bool_)
    for _ in range(r):
        pick = -1
        for v in range(r):
            if not done[v] and indeg[v] == 0:
                pick = v
                break
        if pick < 0:
            return False
        done[pick] = True
        for j in range(r):
            if before[pick, j]:
                indeg[j] -= 1
    return True


@njit(cache=True)
def _gamma_free_exists_numba(a, perms):
    r, c = a.shape
    b = np.empty((r, c), dtype=np.uint8)
    for p in range(perms.shape[0]):
        for i in range(r):
            for k in range(c):
                b[i, k] = a[i, perms[p, k]]
        if _gamma_free_rows_exist(b):
            return p
    return -1


def gamma_free_exists_numba(a) -> int:
    """Index into ``permutation_table(ncols)`` of a column order admitting a
    Gamma-free row order, or -1 when none exists."""
    a = _u8(a)
    return int(_gamma_free_exists_numba(a, permutation_table(a.shape[1])))


def _forced_order_acyclic(forb: np.ndarray) -> bool:
    # forb[i, j]: placing i above j creates a Gamma
    if np.any(forb & forb.T):
        return False
    before = forb.T.copy()
    alive = np.ones(forb.shape[0], dtype=bool)
    while alive.any():
        indeg = before[alive][:, alive].sum(axis=0)
        src = np.nonzero(indeg == 0)[0]
        if src.size == 0:
            return False
        alive[np.nonzero(alive)[0][src]] = False
    return True


def gamma_free_exists_numpy(a) -> int:
    a = np.asarray(a, dtype=bool)
    r, c = a.shape
    perms = permutation_table(c)
    if r < 2 or c < 2:
        return 0
    idx = np.arange(c)
    for p, perm in enumerate(perms):
        b = a[:, perm]
        both = b[:, None, :] & b[None, :, :]
        only = b[:, None, :] & ~b[None, :, :]
        kmin = np.where(both.any(axis=2), np.argmax(both, axis=2), c)
        lmax = np.where(only, idx, -1).max(axis=2)
        forb = kmin < lmax
        np.fill_diagonal(forb, False)
        if _forced_order_acyclic(forb):
            return p
    return -1


# -- brute force consecutive ones ---------------------------------------------


@njit(cache=True)
def _cop_exists_numba(a, perms):
    r, c = a.shape
    for p in range(perms.shape[0]):
        ok = True
        for i in range(r):
            runs = 0
            prev = 0
            for k in range(c):
                cur = a[i, perms[p, k]]
                if cur and not prev:
                    runs += 1
                prev = cur
            if runs > 1:
                ok = False
                break
        if ok:
            return p
    return -1


def cop_exists_numba(a) -> int:
    """Index into ``permutation_table(ncols)`` of a column order making every
    row contiguous, or -1."""
    a = _u8(a)
    return int(_cop_exists_numba(a, permutation_table(a.shape[1])))


def cop_exists_numpy(a) -> int:
    a = np.asarray(a, dtype=bool)
    r, c = a.shape
    perms = permutation_table(c)
    if r == 0 or c == 0:
        return 0
    b = a[:, perms]  # rows x perms x cols
    starts = b.copy()
    starts[:, :, 1:] &= ~b[:, :, :-1]
    ok = (starts.sum(axis=2) <= 1).all(axis=0)
    hit = np.nonzero(ok)[0]
    return int(hit[0]) if hit.size else -1


if USE_NUMBA:
    half_square_adjacency = half_square_adjacency_numba
    find_gamma = find_gamma_numba
    gamma_free_exists = gamma_free_exists_numba
    cop_exists = cop_exists_numba
else:
    half_square_adjacency = half_square_adjacency_numpy
    find_gamma = find_gamma_numpy
    gamma_free_exists = gamma_free_exists_numpy
    cop_exists = cop_exists_numpy
