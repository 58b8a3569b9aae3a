"""Compiled sweep of the fast associativity test over a whole quasitrivial space.

``analysis.is_associative_fast`` costs tens of microseconds per table in
Python, which is far too slow for the 2**30 tables at k=2, n=5. The kernel
below makes the same decision in numba-compiled code while stepping through
the quasitrivial tables with an odometer, so each table costs a few cell
writes plus an early-exit check. The test suite ties it back to the Python
implementation table by table.
"""

from __future__ import annotations

from itertools import product

import numpy as np
from numba import njit

from .enumeration import ENUMERATION_BUDGET, _guard, cell_choices
from .tables import index_of


@njit(cache=True)
def _composes(G, t, tuples, k, n, size):
    for c in range(size):
        r = tuples[c, n - 1]
        for i in range(n - 2, -1, -1):
            r = G[tuples[c, i] * k + r]
        if r != t[c]:
            return False
    return True


@njit(cache=True)
def _a12_minus_q12(G, k):
    # neutral elements
    ne = 0
    e = -1
    for a in range(k):
        ok = True
        for x in range(k):
            if G[a * k + x] != x or G[x * k + a] != x:
                ok = False
                break
        if ok:
            ne += 1
            e = a
    if ne != 1:
        return False
    for a in range(k):
        for b in range(k):
            ab = G[a * k + b]
            for c in range(k):
                if G[ab * k + c] != G[a * k + G[b * k + c]]:
                    return False
    special = -1
    nspecial = 0
    for x in range(k):
        d = G[x * k + x]
        if d != x:
            if d != e:
                return False
            special = x
            nspecial += 1
    # a quasitrivial G would be Q12 instead
    if nspecial != 1:
        return False
    for x in range(k):
        for y in range(k):
            if x != y:
                v = G[x * k + y]
                if v != x and v != y:
                    return False
    for y in range(k):
        if y != special and y != e:
            if G[special * k + y] != y or G[y * k + special] != y:
                return False
    return True


@njit(cache=True)
def _kimura(G, k, cnt, all_first, all_second):
    for x in range(k):
        cnt[x] = 0
    for c in range(k * k):
        cnt[G[c]] += 1
    for c in range(k * k + 1):
        all_first[c] = True
        all_second[c] = True
    for x in range(k):
        for y in range(k):
            v = G[x * k + y]
            if cnt[x] != cnt[y]:
                w = x if cnt[x] > cnt[y] else y
                if v != w:
                    return False
            else:
                if v != x:
                    all_first[cnt[x]] = False
                if v != y:
                    all_second[cnt[x]] = False
    for x in range(k):
        b = cnt[x]
        if not (all_first[b] or all_second[b]):
            return False
    return True


@njit(cache=True)
def _fast(t, k, n, size, tuples, nidx, wn, cidx, G, comp, kim, order):
    ne = 0
    e1 = -1
    e2 = -1
    for e in range(k):
        ok = True
        for i in range(n):
            for x in range(k):
                if t[nidx[e, i, x]] != x:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            if ne == 0:
                e1 = e
            elif ne == 1:
                e2 = e
            ne += 1
    if ne >= 3:
        return False
    if ne == 2:
        if n % 2 == 0:
            return False
        for x in range(k):
            for y in range(k):
                G[x * k + y] = t[wn[e1, x, y]]
        if not _composes(G, t, tuples, k, n, size):
            return False
        if not _a12_minus_q12(G, k):
            return False
        for x in range(k):
            for y in range(k):
                G[x * k + y] = t[wn[e2, x, y]]
        return _a12_minus_q12(G, k)
    code = 0
    for x in range(k):
        for y in range(k):
            v = t[cidx[x, y]]
            if v != x and v != y:
                return False
            if x != y:
                code = 2 * code + (1 if v == y else 0)
    # quasitrivial candidate: its composition and form are tabulated by code
    if not kim[code]:
        return False
    for c in order:
        if t[c] != comp[code, c]:
            return False
    return True


@njit(cache=True)
def _sweep(start, stop, t, digits, free_idx, radix, choices, k, n, size, tuples, nidx, wn, cidx,
           comp, kim, order, out):
    G = np.empty(k * k, np.int64)
    nfree = free_idx.shape[0]
    found = 0
    for idx in range(start, stop):
        if _fast(t, k, n, size, tuples, nidx, wn, cidx, G, comp, kim, order):
            if found == out.shape[0]:
                return -1
            out[found] = idx
            found += 1
        j = nfree - 1
        while j >= 0:
            digits[j] += 1
            if digits[j] < radix[j]:
                t[free_idx[j]] = choices[j, digits[j]]
                break
            digits[j] = 0
            t[free_idx[j]] = choices[j, 0]
            j -= 1
    return found


@njit(cache=True)
def _tabulate_candidates(k, n, tuples):
    """Composition and projection/max check for every quasitrivial binary G.

    G is coded by its off-diagonal cells in index order, bit 1 meaning
    G(x, y) = y.
    """
    m = k * k - k
    size = tuples.shape[0]
    comp = np.empty((1 << m, size), np.int64)
    kim = np.empty(1 << m, np.bool_)
    G = np.empty(k * k, np.int64)
    cnt = np.empty(k, np.int64)
    fa = np.empty(k * k + 1, np.bool_)
    sa = np.empty(k * k + 1, np.bool_)
    for code in range(1 << m):
        bit = m - 1
        for x in range(k):
            for y in range(k):
                if x == y:
                    G[x * k + y] = x
                else:
                    G[x * k + y] = y if (code >> bit) & 1 else x
                    bit -= 1
        kim[code] = _kimura(G, k, cnt, fa, sa)
        for c in range(size):
            r = tuples[c, n - 1]
            for i in range(n - 2, -1, -1):
                r = G[tuples[c, i] * k + r]
            comp[code, c] = r
    return comp, kim


class SweepPlan:
    """Index tables shared by every chunk of one (k, n) sweep."""

    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.size = k**n
        ch = cell_choices(k, n)
        self.free_idx = np.array([c for c in range(self.size) if len(ch[c]) > 1], np.int64)
        self.radix = np.array([len(ch[c]) for c in self.free_idx], np.int64)
        self.choices = np.zeros((len(self.free_idx), k), np.int64)
        for j, c in enumerate(self.free_idx):
            self.choices[j, : len(ch[c])] = ch[c]
        self.base = np.array([c[0] for c in ch], np.int64)
        self.tuples = np.array(list(product(range(k), repeat=n)), np.int64).reshape(self.size, n)
        self.nidx = np.zeros((k, n, k), np.int64)
        for e in range(k):
            for i in range(n):
                for x in range(k):
                    xs = [e] * n
                    xs[i] = x
                    self.nidx[e, i, x] = index_of(k, xs)
        self.wn = np.zeros((k, k, k), np.int64)
        for e in range(k):
            for x in range(k):
                for y in range(k):
                    self.wn[e, x, y] = index_of(k, [x] + [e] * (n - 2) + [y])
        self.cidx = np.array(
            [[index_of(k, [x] + [y] * (n - 1)) for y in range(k)] for x in range(k)], np.int64
        )
        self.total = int(np.prod(self.radix)) if len(self.radix) else 1
        self.comp, self.kim = _tabulate_candidates(k, n, self.tuples)
        # free cells first: diagonal cells always agree with a quasitrivial candidate
        self.order = np.concatenate([self.free_idx, np.setdiff1d(np.arange(self.size), self.free_idx)])

    def state_at(self, index: int):
        digits = np.zeros(len(self.free_idx), np.int64)
        for j in range(len(digits) - 1, -1, -1):
            index, digits[j] = divmod(index, int(self.radix[j]))
        t = self.base.copy()
        t[self.free_idx] = self.choices[np.arange(len(digits)), digits]
        return t, digits

    def run(self, start: int, stop: int, capacity: int = 1 << 16) -> np.ndarray:
        t, digits = self.state_at(start)
        out = np.empty(capacity, np.int64)
        found = _sweep(
            start, stop, t, digits, self.free_idx, self.radix, self.choices,
            self.k, self.n, self.size, self.tuples, self.nidx, self.wn, self.cidx,
            self.comp, self.kim, self.order, out,
        )  # fmt: skip
        if found < 0:
            raise RuntimeError("sweep output buffer overflow; raise capacity")
        return out[:found].copy()


def sweep_fast(
    k: int,
    n: int,
    start: int = 0,
    stop: int | None = None,
    chunk: int = 1 << 24,
    budget: int = ENUMERATION_BUDGET,
) -> np.ndarray:
    """Indices (in quasitrivial enumeration order) of tables the fast test accepts.

    The range is processed in chunks; results do not depend on ``chunk``.
    """
    if n < 2:
        raise ValueError("associativity needs n >= 2")
    _guard(k, n, budget)
    plan = SweepPlan(k, n)
    stop = plan.total if stop is None else min(stop, plan.total)
    parts = [plan.run(s, min(s + chunk, stop)) for s in range(start, stop, chunk)]
    return np.concatenate(parts) if parts else np.empty(0, np.int64)
