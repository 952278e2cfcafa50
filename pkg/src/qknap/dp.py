"""Exact frontier computation by dynamic programming over label sets.

The solver sweeps items in input order and, for every capacity budget
x in 0..W, maintains the set of non-dominated rank cardinality vectors
reachable with the items seen so far. Each vector is carried as a label
holding its suffix-sum form, its minimal achieving weight, and a chain
encoding one witness subset. Merging a cell with its extended
predecessor keeps exactly the labels that survive the suffix-sum
dominance test; equal vectors are collapsed to the lighter witness,
then to the lexicographically smallest id tuple.

Labels are stored internally as suffix-sum rows so dominance is a plain
componentwise comparison; witness subsets are parent-pointer chains so
extending a label is O(1). Reported cells never include the empty
selection's all-zero label.

Two drivers produce identical results: a per-cell numpy path that also
supports keeping the whole matrix, and a row-at-a-time JIT path for
large problems, where labels live in one contiguous block per row and
witness chains are indices into a parent arena. Ties that need the
id-tuple rule are rare and resolved outside the kernel either way.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .model import Instance, Label, canonical_key, validate_instance

__all__ = ["FrontierResult", "LabelMatrix", "SolveStats", "label_bound", "solve"]

# Problems with at least this many cells are worth the JIT warm-up.
_KERNEL_MIN_CELLS = 20_000
_UNSET = object()
_jit_row_kernel = _UNSET


@dataclass
class SolveStats:
    """Counters from one solver run; wall_time is the only nondeterministic field."""

    cells: int = 0
    max_cell: int = 0
    comparisons: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class LabelMatrix:
    """All DP cells, materialized: ``cells[i][x]`` for i in 0..n, x in 0..W."""

    cells: tuple[tuple[tuple[Label, ...], ...], ...]

    def cell(self, i: int, x: int) -> tuple[Label, ...]:
        return self.cells[i][x]

    @property
    def n_rows(self) -> int:
        return len(self.cells)

    @property
    def n_cols(self) -> int:
        return len(self.cells[0])


@dataclass(frozen=True)
class FrontierResult:
    """Non-dominated labels in canonical order, plus run counters."""

    labels: tuple[Label, ...]
    stats: SolveStats
    matrix: LabelMatrix | None = None

    @property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(lab.vector for lab in self.labels)


def label_bound(k: int, i: int) -> int:
    """Upper bound on a cell's nonzero label count: C(k+i, i) - 1, exactly."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    return math.comb(k + i, i) - 1


def solve(inst: Instance, keep_matrix: bool = False) -> FrontierResult:
    """Compute all non-dominated rank cardinality vectors of the instance.

    Returns the final label set in canonical order, each label carrying
    its minimal-weight witness subset. With ``keep_matrix`` every cell
    of the DP table is retained and materialized (memory grows with
    n*W; meant for small instances and debugging).
    """
    validate_instance(inst)
    t0 = time.perf_counter()
    n, W = len(inst.items), inst.capacity
    stats = SolveStats(cells=n * (W + 1))
    kernel = None
    if not keep_matrix and n * (W + 1) >= _KERNEL_MIN_CELLS:
        kernel = _load_jit_row_kernel()
    if kernel is not None:
        labels = _solve_rows_jit(inst, stats, kernel)
        matrix = None
    else:
        labels, matrix = _solve_cells_numpy(inst, stats, keep_matrix)
    stats.wall_time = time.perf_counter() - t0
    return FrontierResult(labels=labels, stats=stats, matrix=matrix)


def _suffix_row_to_vector(row, k: int) -> tuple[int, ...]:
    return tuple(int(row[j]) - int(row[j + 1]) for j in range(k - 1)) + (int(row[k - 1]),)


# --------------------------------------------------------------------------
# Reference driver: one numpy merge per cell, optional full matrix.


class _Node:
    """Witness-subset chain: one item id per link, root carries the empty tuple."""

    __slots__ = ("parent", "item_id", "_ids")

    def __init__(self, parent: "_Node | None", item_id: int | None) -> None:
        self.parent = parent
        self.item_id = item_id
        self._ids: tuple[int, ...] | None = None

    def ids(self) -> tuple[int, ...]:
        """Ascending id tuple of the subset; cached once materialized."""
        if self._ids is None:
            acc = []
            node = self
            while node._ids is None:
                acc.append(node.item_id)
                node = node.parent
            acc.extend(node._ids)
            self._ids = tuple(sorted(acc))
        return self._ids


_ROOT = _Node(None, None)
_ROOT._ids = ()


def _merge_numpy(Sa, wa, Sb0, wb0, level, wt):
    """Merge a cell (Sa, wa) with its predecessor (Sb0, wb0) extended by one item.

    Both sides are internally dominance-free. Returns packed survivor
    rows (A side first), each with its source row index, the (a, b)
    pairs equal in both vector and weight (their ranking needs the
    id-tuple rule, which lives outside; the B member is tentatively
    dropped), and the B survivor count. A label killed by an equal-
    vector twin may still kill others: dominance is transitive, so the
    surviving twin covers them.
    """
    Sb = Sb0.copy()
    Sb[:, :level] += 1  # one more item at `level` raises suffix sums up to it
    wb = wb0 + wt
    ge_ba = (Sb[:, None, :] >= Sa[None, :, :]).all(axis=2)  # (mb, ma)
    ge_ab = (Sa[:, None, :] >= Sb[None, :, :]).all(axis=2)  # (ma, mb)
    eq = ge_ba & ge_ab.T
    tie_mask = eq & (wb[:, None] == wa[None, :])
    kill_a = ((ge_ba & ~ge_ab.T) | (eq & (wb[:, None] < wa[None, :]))).any(axis=0)
    kill_b = (
        (ge_ab & ~ge_ba.T) | (eq.T & (wa[:, None] < wb[None, :])) | tie_mask.T
    ).any(axis=0)
    ties = np.argwhere(tie_mask)[:, ::-1]  # as (a, b)
    if len(ties):
        ties = ties[~kill_a[ties[:, 0]]]  # moot once A lost to a strict dominator
    keep_a = np.flatnonzero(~kill_a)
    keep_b = np.flatnonzero(~kill_b)
    S_out = np.concatenate((Sa[keep_a], Sb[keep_b]))
    w_out = np.concatenate((wa[keep_a], wb[keep_b]))
    idx = np.concatenate((keep_a, keep_b))
    return S_out, w_out, idx, ties, len(keep_b)


def _materialize_cell(cell) -> tuple[Label, ...]:
    """Reported view of a cell: zero label stripped, canonical order."""
    S, w, reps = cell
    k = S.shape[1]
    out = []
    for i in range(len(w)):
        weight = int(w[i])
        if weight == 0:
            continue
        out.append(
            Label(
                vector=_suffix_row_to_vector(S[i], k),
                weight=weight,
                items=reps[i].ids(),
            )
        )
    out.sort(key=canonical_key)
    return tuple(out)


def _solve_cells_numpy(inst, stats, keep_matrix):
    k, W = inst.k, inst.capacity
    zero_cell = (np.zeros((1, k), np.int64), np.zeros(1, np.int64), [_ROOT])
    prev = [zero_cell] * (W + 1)
    rows = [prev]
    for item in inst.items:
        wt, lvl, iid = item.weight, item.level, item.id
        cur = prev[: min(wt, W + 1)]
        for x in range(wt, W + 1):
            cell_a = prev[x]
            Sa, wa, ra = cell_a
            Sb0, wb0, rb0 = prev[x - wt]
            S_out, w_out, idx, ties, nb = _merge_numpy(Sa, wa, Sb0, wb0, lvl, wt)
            stats.comparisons += len(wa) * len(wb0)
            flips = []
            for a, b in ties:
                a, b = int(a), int(b)
                ids_b = tuple(sorted(rb0[b].ids() + (iid,)))
                if ids_b < ra[a].ids():
                    flips.append((a, b, ids_b))
            m = len(w_out)
            na = m - nb
            if nb == 0 and na == len(wa) and not flips:
                cur.append(cell_a)  # extension contributed nothing; share the cell
                continue
            reps = [None] * m
            for slot in range(na):
                reps[slot] = ra[idx[slot]]
            for slot in range(na, m):
                reps[slot] = _Node(rb0[idx[slot]], iid)
            for a, b, ids_b in flips:
                node = _Node(rb0[b], iid)
                node._ids = ids_b
                reps[int(np.searchsorted(idx[:na], a))] = node
            if not (m == 1 and w_out[0] == 0) and m > stats.max_cell:
                stats.max_cell = m
            cur.append((S_out, w_out, reps))
        prev = cur
        if keep_matrix:
            rows.append(cur)
    labels = _materialize_cell(prev[W])
    matrix = None
    if keep_matrix:
        matrix = LabelMatrix(tuple(tuple(_materialize_cell(c) for c in row) for row in rows))
    return labels, matrix


# --------------------------------------------------------------------------
# Large-problem driver: one JIT kernel call per row over contiguous storage.
#
# A row's labels live packed in (S, w, rep) blocks with off[x]:off[x+1]
# delimiting capacity x. Witness chains are arena entries: node i has
# parent par[i] and appended item itm[i]; node 0 is the empty root.


def _row_kernel_impl(S, w, rep, off, wt, level, iid, S_o, w_o, rep_o, off_o, ties, par, itm, top):
    W1 = off.shape[0] - 1  # W + 1 columns
    k = S.shape[1]
    pos = 0
    nt = 0
    comparisons = 0
    max_cell = 0
    for x in range(W1):
        off_o[x] = pos
        a0 = off[x]
        ma = off[x + 1] - a0
        if x < wt:
            for i in range(a0, a0 + ma):  # item does not fit: cell carries over
                for j in range(k):
                    S_o[pos, j] = S[i, j]
                w_o[pos] = w[i]
                rep_o[pos] = rep[i]
                pos += 1
            continue
        b0 = off[x - wt]
        mb = off[x - wt + 1] - b0
        comparisons += ma * mb
        kill_a = np.zeros(ma, np.bool_)
        kill_b = np.zeros(mb, np.bool_)
        cap = ma if ma < mb else mb
        tloc = np.empty((cap, 2), np.int64)
        ntloc = 0
        for ai in range(ma):
            for bi in range(mb):
                ge_ba = True
                ge_ab = True
                for j in range(k):
                    av = S[a0 + ai, j]
                    bv = S[b0 + bi, j] + (1 if j < level else 0)
                    if bv < av:
                        ge_ba = False
                        if not ge_ab:
                            break
                    if av < bv:
                        ge_ab = False
                        if not ge_ba:
                            break
                if ge_ba:
                    if ge_ab:
                        wbv = w[b0 + bi] + wt
                        if w[a0 + ai] < wbv:
                            kill_b[bi] = True
                        elif wbv < w[a0 + ai]:
                            kill_a[ai] = True
                        else:
                            tloc[ntloc, 0] = ai
                            tloc[ntloc, 1] = bi
                            kill_b[bi] = True  # tentative; caller may flip the witness
                            ntloc += 1
                    else:
                        kill_a[ai] = True
                elif ge_ab:
                    kill_b[bi] = True
        slot_of = np.full(ma, -1, np.int64)
        for ai in range(ma):
            if not kill_a[ai]:
                slot_of[ai] = pos
                for j in range(k):
                    S_o[pos, j] = S[a0 + ai, j]
                w_o[pos] = w[a0 + ai]
                rep_o[pos] = rep[a0 + ai]
                pos += 1
        for t in range(ntloc):
            ai = tloc[t, 0]
            if slot_of[ai] >= 0:  # moot once A lost to a strict dominator
                ties[nt, 0] = slot_of[ai]
                ties[nt, 1] = rep[a0 + ai]
                ties[nt, 2] = rep[b0 + tloc[t, 1]]
                nt += 1
        for bi in range(mb):
            if not kill_b[bi]:
                for j in range(k):
                    S_o[pos, j] = S[b0 + bi, j] + (1 if j < level else 0)
                w_o[pos] = w[b0 + bi] + wt
                par[top] = rep[b0 + bi]
                itm[top] = iid
                rep_o[pos] = top
                top += 1
                pos += 1
        m = pos - off_o[x]
        if m > max_cell and not (m == 1 and w_o[off_o[x]] == 0):
            max_cell = m
    off_o[W1] = pos
    return pos, top, nt, comparisons, max_cell


def _load_jit_row_kernel():
    global _jit_row_kernel
    if _jit_row_kernel is _UNSET:
        try:
            from numba import njit

            _jit_row_kernel = njit(cache=True)(_row_kernel_impl)
        except Exception:
            _jit_row_kernel = None
    return _jit_row_kernel


def _solve_rows_jit(inst, stats, kernel):
    k, W = inst.k, inst.capacity
    cols = W + 2
    # row 0: the all-zero label (empty subset, arena root 0) in every column
    m0 = W + 1
    S = np.zeros((m0, k), np.int64)
    w = np.zeros(m0, np.int64)
    rep = np.zeros(m0, np.int64)
    off = np.arange(cols, dtype=np.int64)
    arena_cap = 1 << 12
    par = np.empty(arena_cap, np.int64)
    itm = np.empty(arena_cap, np.int64)
    par[0] = -1
    itm[0] = 0
    top = 1
    ids_memo: dict[int, tuple[int, ...]] = {0: ()}

    def ids_of(node: int) -> tuple[int, ...]:
        got = ids_memo.get(node)
        if got is not None:
            return got
        acc = []
        cur = node
        while True:
            got = ids_memo.get(cur)
            if got is not None:
                acc.extend(got)
                break
            acc.append(int(itm[cur]))
            cur = int(par[cur])
        out = tuple(sorted(acc))
        ids_memo[node] = out
        return out

    ties = np.empty((m0, 3), np.int64)
    for item in inst.items:
        m = int(off[W + 1])
        need = 2 * m  # survivors of each column fit in ma + mb
        S_o = np.empty((need, k), np.int64)
        w_o = np.empty(need, np.int64)
        rep_o = np.empty(need, np.int64)
        off_o = np.empty(cols, np.int64)
        if len(ties) < m:
            ties = np.empty((m, 3), np.int64)
        if top + need > arena_cap:
            arena_cap = max(2 * arena_cap, top + 2 * need)
            par = np.concatenate((par, np.empty(arena_cap - len(par), np.int64)))
            itm = np.concatenate((itm, np.empty(arena_cap - len(itm), np.int64)))
        pos, top, nt, comps, mc = kernel(
            S, w, rep, off, item.weight, item.level, item.id,
            S_o, w_o, rep_o, off_o, ties, par, itm, top,
        )
        stats.comparisons += comps
        if mc > stats.max_cell:
            stats.max_cell = mc
        for t in range(nt):
            slot, a_node, b_parent = int(ties[t, 0]), int(ties[t, 1]), int(ties[t, 2])
            ids_b = tuple(sorted(ids_of(b_parent) + (item.id,)))
            if ids_b < ids_of(a_node):
                par[top] = b_parent
                itm[top] = item.id
                ids_memo[top] = ids_b
                rep_o[slot] = top
                top += 1
        S, w, rep, off = S_o[:pos], w_o[:pos], rep_o[:pos], off_o
    out = []
    for i in range(int(off[W]), int(off[W + 1])):
        weight = int(w[i])
        if weight == 0:
            continue
        out.append(
            Label(
                vector=_suffix_row_to_vector(S[i], k),
                weight=weight,
                items=ids_of(int(rep[i])),
            )
        )
    out.sort(key=canonical_key)
    return tuple(out)
