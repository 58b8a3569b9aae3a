"""Backtracking search for associative quasitrivial tables.

Cells are filled one at a time, each from the components of its own tuple.
After every assignment, the identity instances touching the new cell are
re-checked wherever all cells they read are already fixed; a partial table
that violates one is abandoned. The pruning only discards tables that fail a
fully determined instance, so the surviving leaves are exactly the
associative quasitrivial tables.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

import numpy as np

from .tables import OperationTable, _diagonal_index


def _instances(k: int, n: int):
    """Window and outer-cell index arrays for all (2n-1)-tuples."""
    xs = np.array(list(product(range(k), repeat=2 * n - 1)), dtype=np.int64)
    pw = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    windows = np.stack([xs[:, j : j + n] @ pw for j in range(n)], axis=1)
    # outer cell for slot j is base[:, j] + value * pw[j]
    base = np.empty_like(windows)
    for j in range(n):
        outer = np.concatenate([xs[:, :j], np.zeros((len(xs), 1), np.int64), xs[:, j + n :]], 1)
        base[:, j] = outer @ pw
    return windows, base, pw


class PrunedSearch:
    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.windows, self.base, self.pw = _instances(k, n)
        size = k**n
        tuples = np.array(list(product(range(k), repeat=n)), dtype=np.int64).reshape(size, n)
        self.choices = [tuple(sorted(set(row.tolist()))) for row in tuples]
        self.free = [c for c in range(size) if len(self.choices[c]) > 1]
        # instance rows that read cell c, either as a window or as an outer cell
        touches = [set() for _ in range(size)]
        for r in range(len(self.windows)):
            for j in range(n):
                touches[self.windows[r, j]].add(r)
                for v in range(k):
                    touches[self.base[r, j] + v * self.pw[j]].add(r)
        self.rows = [np.array(sorted(t), dtype=np.int64) for t in touches]
        self.nodes = 0

    def _consistent(self, t: np.ndarray, cell: int) -> bool:
        rows = self.rows[cell]
        v = t[self.windows[rows]]
        known = v >= 0
        r = t[self.base[rows] + np.where(known, v, 0) * self.pw]
        r = np.where(known, r, -1)
        hi = r.max(1)
        lo = np.where(r >= 0, r, self.k).min(1)
        return not np.any((hi >= 0) & (hi != lo))

    def run(self) -> Iterator[OperationTable]:
        k, n = self.k, self.n
        t = np.full(k**n, -1, dtype=np.int64)
        for x in range(k):
            t[_diagonal_index(k, n, x)] = x
        yield from self._descend(t, 0)

    def _descend(self, t: np.ndarray, depth: int) -> Iterator[OperationTable]:
        self.nodes += 1
        if depth == len(self.free):
            yield OperationTable(self.k, self.n, tuple(t.tolist()))
            return
        cell = self.free[depth]
        for v in self.choices[cell]:
            t[cell] = v
            if self._consistent(t, cell):
                yield from self._descend(t, depth + 1)
        t[cell] = -1


def pruned_associative_tables(k: int, n: int) -> Iterator[OperationTable]:
    """Associative quasitrivial tables in the order of the full quasitrivial enumeration."""
    return PrunedSearch(k, n).run()
