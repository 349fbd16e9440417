"""Consecutive-ones and doubly lexical orderings of 0-1 matrices."""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .certificates import DoublyLexOrdering, Obstruction, SideOrdering


# -- consecutive ones -----------------------------------------------------------


def _overlap(a: frozenset, b: frozenset) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def _arrange_component(rows: list[frozenset[int]]) -> list[set[int]] | None:
    """Ordered column blocks for one overlap-connected family, or None.

    ``rows`` must be in an order where every row overlaps an earlier one.
    Within one overlap component the arrangement is forced up to reversal,
    so each new row has at most one legal placement.
    """
    blocks: list[set[int]] = [set(rows[0])]
    union = set(rows[0])
    for r in rows[1:]:
        s, new = r & union, r - union
        touched = [i for i, blk in enumerate(blocks) if blk & s]
        a, b = touched[0], touched[-1]
        if any(not blocks[i] <= s for i in range(a + 1, b)):
            return None
        last = len(blocks) - 1
        if new:
            if b == last and (a == b or blocks[b] <= s):
                blk = blocks[a]
                blocks[a : a + 1] = [p for p in (blk - s, blk & s) if p]
                blocks.append(set(new))
            elif a == 0 and (a == b or blocks[a] <= s):
                blk = blocks[b]
                blocks[b : b + 1] = [p for p in (blk & s, blk - s) if p]
                blocks.insert(0, set(new))
            else:
                return None
            union |= new
        else:
            if a == b:
                raise AssertionError("row inside a single class cannot overlap an earlier row")
            blk = blocks[b]
            blocks[b : b + 1] = [p for p in (blk & s, blk - s) if p]
            blk = blocks[a]
            blocks[a : a + 1] = [p for p in (blk - s, blk & s) if p]
    return blocks


def _overlap_components(rows: list[frozenset[int]]) -> list[list[int]]:
    m = len(rows)
    nbrs = [[j for j in range(m) if j != i and _overlap(rows[i], rows[j])] for i in range(m)]
    seen = [False] * m
    comps = []
    for s in range(m):
        if seen[s]:
            continue
        seen[s] = True
        order, queue = [], deque([s])
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in nbrs[i]:
                if not seen[j]:
                    seen[j] = True
                    queue.append(j)
        comps.append(order)
    return comps


def _cop_order(rows: Sequence[frozenset[int]], ncols: int) -> tuple[list[int] | None, list[int]]:
    """Column order or None; on failure also the row indices of the failing component prefix."""
    uniq: list[frozenset[int]] = []
    seen = set()
    for r in rows:
        if 2 <= len(r) < ncols and r not in seen:
            seen.add(r)
            uniq.append(r)
    comps = _overlap_components(uniq)
    arranged = []
    for comp in comps:
        members = [uniq[i] for i in comp]
        blocks = None
        # grow the prefix so a failure reports the smallest failing prefix
        blocks = _arrange_component(members)
        if blocks is None:
            for t in range(2, len(members) + 1):
                if _arrange_component(members[:t]) is None:
                    return None, [rows.index(r) for r in members[:t]]
            raise AssertionError("unreachable")
        union = frozenset().union(*members)
        arranged.append((union, len(comp) == 1, blocks))

    # parents before children: larger unions first, singleton rows win ties
    arranged.sort(key=lambda t: (-len(t[0]), not t[1], min(t[0])))
    children: dict[tuple[int, int], list[int]] = {}
    tops: list[int] = []
    for ci, (union, _, _) in enumerate(arranged):
        parent = None
        for pj in range(ci - 1, -1, -1):
            if arranged[pj][0] & union:
                parent = pj
                break
        if parent is None:
            tops.append(ci)
            continue
        pblocks = arranged[parent][2]
        slot = next((bi for bi, blk in enumerate(pblocks) if union <= blk), None)
        if slot is None:
            raise AssertionError("nested overlap component straddles several classes")
        children.setdefault((parent, slot), []).append(ci)

    def expand_comp(ci: int) -> list[int]:
        out: list[int] = []
        for bi, blk in enumerate(arranged[ci][2]):
            used: set[int] = set()
            for ch in sorted(children.get((ci, bi), []), key=lambda c: min(arranged[c][0])):
                out.extend(expand_comp(ch))
                used |= arranged[ch][0]
            out.extend(sorted(blk - used))
        return out

    order: list[int] = []
    placed: set[int] = set()
    for ci in sorted(tops, key=lambda c: min(arranged[c][0])):
        seg = expand_comp(ci)
        order.extend(seg)
        placed.update(seg)
    order.extend(c for c in range(ncols) if c not in placed)
    rev = order[::-1]
    if rev < order:
        order = rev
    return order, []


def is_consecutive(rows: Iterable[Iterable[int]], order: Sequence[int]) -> bool:
    pos = {c: i for i, c in enumerate(order)}
    for r in rows:
        ps = [pos[c] for c in r]
        if ps and max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def consecutive_ones(rows: Sequence[Iterable[int]], ncols: int) -> SideOrdering | Obstruction:
    """Order columns so that every row is a contiguous block.

    Parameters
    ----------
    rows : sequence of iterables of column ids in ``range(ncols)``
    ncols : number of columns

    Returns
    -------
    SideOrdering with ``side='col'`` on success. On failure an Obstruction of
    kind ``not_cop`` whose witness is a row-minimal set of row indices that
    already lacks the property.
    """
    sets = [frozenset(int(c) for c in r) for r in rows]
    for r in sets:
        if any(not 0 <= c < ncols for c in r):
            raise ValueError(f"row {sorted(r)} has a column outside range({ncols})")
    order, failing = _cop_order(sets, ncols)
    if order is not None:
        if not is_consecutive(sets, order):
            raise AssertionError("consecutive-ones arrangement failed self-check")
        return SideOrdering("col", tuple(order))
    # shrink to a row-minimal failing subset
    keep = list(failing)
    for idx in list(keep):
        trial = [i for i in keep if i != idx]
        if _cop_order([sets[i] for i in trial], ncols)[0] is None:
            keep = trial
    return Obstruction("not_cop", tuple(sorted(keep)), detail="rows without a consecutive arrangement")


# -- doubly lexical orderings ---------------------------------------------------


def doubly_lexical(matrix) -> DoublyLexOrdering:
    """Doubly lexical ordering of a 0-1 matrix, and whether it is Gamma-free.

    Convention: under the returned permutations every row and every column,
    read as a 0-1 vector with the last position most significant, is
    nondecreasing. Gamma is rows i < j, cols k < l with ones at (i,k), (i,l),
    (j,k) and a zero at (j,l).

    Rows and columns are alternately stable-sorted (descending, first position
    most significant) until neither moves, then both orders are reversed. Each
    sort that moves something strictly increases the row-major bit string, so
    the loop terminates.
    """
    a = np.asarray(matrix, dtype=np.uint8)
    if a.ndim != 2:
        raise ValueError("expected a 2-d 0-1 matrix")
    r, c = a.shape
    rp = list(range(r))
    cp = list(range(c))
    while True:
        sub = a[np.ix_(rp, cp)] if r and c else a
        row_keys = [sub[i].tobytes() for i in range(r)]
        new_rp = [rp[i] for i in sorted(range(r), key=row_keys.__getitem__, reverse=True)]
        sub = a[np.ix_(new_rp, cp)] if r and c else a
        colsT = np.ascontiguousarray(sub.T)
        col_keys = [colsT[k].tobytes() for k in range(c)]
        new_cp = [cp[k] for k in sorted(range(c), key=col_keys.__getitem__, reverse=True)]
        if new_rp == rp and new_cp == cp:
            break
        rp, cp = new_rp, new_cp
    rp.reverse()
    cp.reverse()
    # equal rows (columns) sit next to each other; list each such run by id
    rp = _ids_ascending_in_runs(rp, [a[i].tobytes() for i in rp])
    cp = _ids_ascending_in_runs(cp, [a[:, k].tobytes() for k in cp])
    ordered = a[np.ix_(rp, cp)] if r and c else a
    return DoublyLexOrdering(tuple(rp), tuple(cp), kernels.find_gamma(ordered) is None)


def _ids_ascending_in_runs(perm: list[int], keys: list[bytes]) -> list[int]:
    out: list[int] = []
    i = 0
    while i < len(perm):
        j = i
        while j + 1 < len(perm) and keys[j + 1] == keys[i]:
            j += 1
        out.extend(sorted(perm[i : j + 1]))
        i = j + 1
    return out


def is_doubly_lexical(matrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> bool:
    """Direct scan of the doubly lexical convention used by :func:`doubly_lexical`."""
    a = np.asarray(matrix, dtype=np.uint8)
    if sorted(row_perm) != list(range(a.shape[0])) or sorted(col_perm) != list(range(a.shape[1])):
        return False
    if a.size == 0:
        return True
    b = a[np.ix_(list(row_perm), list(col_perm))]
    rows = [tuple(b[i, ::-1]) for i in range(b.shape[0])]
    cols = [tuple(b[::-1, k]) for k in range(b.shape[1])]
    return all(x <= y for x, y in zip(rows, rows[1:])) and all(x <= y for x, y in zip(cols, cols[1:]))


def find_gamma(matrix, row_perm: Sequence[int] | None = None, col_perm: Sequence[int] | None = None):
    """First Gamma ``(i, j, k, l)`` in positional coordinates, or None."""
    a = np.asarray(matrix, dtype=np.uint8)
    if row_perm is not None and a.size:
        a = a[np.ix_(list(row_perm), list(col_perm))]
    if a.size == 0:
        return None
    return kernels.find_gamma(a)
