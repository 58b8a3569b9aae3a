"""Finite n-ary operation tables and their pointwise predicates.

Elements are ``1..k`` at the public surface and ``0..k-1`` inside ``values``.
A table stores ``k**n`` outputs indexed by the argument tuple in lexicographic
order, last coordinate varying fastest, so ``(x_1, ..., x_n)`` (0-based) lives
at ``sum(x_i * k**(n-i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    ArityOrSizeInvalid,
    ArityTooSmall,
    CostLimitExceeded,
    LengthMismatch,
    NotAPermutation,
    SemigroupError,
    TupleArityMismatch,
    ValueOutOfRange,
)

BISYMMETRY_BUDGET = 10**8


@dataclass(frozen=True)
class OperationTable:
    k: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ArityOrSizeInvalid(f"need k >= 1 and n >= 1, got k={self.k}, n={self.n}")
        values = tuple(int(v) for v in self.values)
        if len(values) != self.k**self.n:
            raise LengthMismatch(f"expected {self.k ** self.n} entries, got {len(values)}")
        for v in values:
            if not 0 <= v < self.k:
                raise ValueOutOfRange(f"entry {v + 1} outside 1..{self.k}")
        object.__setattr__(self, "values", values)

    def __call__(self, *xs: int) -> int:
        return evaluate(self, xs)

    def entries(self) -> list[int]:
        """Outputs as 1-based integers, in index order."""
        return [v + 1 for v in self.values]

    def array(self) -> np.ndarray:
        """0-based outputs as an array of shape ``(k,) * n``."""
        return np.asarray(self.values, dtype=np.int64).reshape((self.k,) * self.n)

    def at(self, xs: Sequence[int]) -> int:
        # 0-based in, 0-based out; no validation
        return self.values[index_of(self.k, xs)]

    def key(self) -> bytes:
        return bytes([self.k, self.n]) + bytes(self.values)


def make_table(k: int, n: int, entries: Iterable[int]) -> OperationTable:
    """Validated table from 1-based entries listed in index order."""
    if k < 1 or n < 1:
        raise ArityOrSizeInvalid(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    entries = [int(v) for v in entries]
    if len(entries) != k**n:
        raise LengthMismatch(f"k={k}, n={n} needs {k ** n} entries, got {len(entries)}")
    bad = [v for v in entries if not 1 <= v <= k]
    if bad:
        raise ValueOutOfRange(f"entry {bad[0]} outside 1..{k}")
    return OperationTable(k, n, tuple(v - 1 for v in entries))


def table_from_function(k: int, n: int, f: Callable[..., int]) -> OperationTable:
    """Tabulate a 1-based Python function of n arguments."""
    return make_table(k, n, (f(*(x + 1 for x in xs)) for xs in all_tuples(k, n)))


def table_from_array(arr) -> OperationTable:
    arr = np.asarray(arr)
    k = arr.shape[0]
    return OperationTable(k, arr.ndim, tuple(arr.reshape(-1).tolist()))


def index_of(k: int, xs: Sequence[int]) -> int:
    i = 0
    for x in xs:
        i = i * k + x
    return i


def all_tuples(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """0-based argument tuples in index order."""
    return product(range(k), repeat=n)


def tuple_at(k: int, n: int, index: int) -> tuple[int, ...]:
    xs = []
    for _ in range(n):
        index, x = divmod(index, k)
        xs.append(x)
    return tuple(reversed(xs))


def evaluate(T: OperationTable, x: Sequence[int]) -> int:
    if len(x) != T.n:
        raise TupleArityMismatch(f"expected {T.n} arguments, got {len(x)}")
    for v in x:
        if not 1 <= v <= T.k:
            raise ValueOutOfRange(f"argument {v} outside 1..{T.k}")
    return T.values[index_of(T.k, [v - 1 for v in x])] + 1


def is_diagonal(xs: Sequence[int]) -> bool:
    return all(x == xs[0] for x in xs)


def _diagonal_index(k: int, n: int, x: int) -> int:
    return x * (k**n - 1) // (k - 1) if k > 1 else 0


def is_idempotent(T: OperationTable) -> bool:
    return all(T.values[_diagonal_index(T.k, T.n, x)] == x for x in range(T.k))


def is_quasitrivial(T: OperationTable) -> bool:
    return all(v in xs for xs, v in zip(all_tuples(T.k, T.n), T.values))


def is_symmetric(T: OperationTable) -> bool:
    k, vals = T.k, T.values
    return all(v == vals[index_of(k, sorted(xs))] for xs, v in zip(all_tuples(k, T.n), vals))


def is_associative_naive(T: OperationTable) -> bool:
    """Check the n-ary associativity identity on every (2n-1)-tuple.

    All n placements of the inner application must agree; that is the chain of
    identities for consecutive positions. Costs O(n * k**(2n-1)) lookups and
    stops at the first violation.
    """
    k, n, vals = T.k, T.n, T.values
    if n < 2:
        raise ArityTooSmall("associativity needs n >= 2")
    pw = [k ** (n - 1 - i) for i in range(n)]
    for xs in product(range(k), repeat=2 * n - 1):
        ref = -1
        for j in range(n):
            inner = vals[index_of(k, xs[j : j + n])]
            outer = index_of(k, xs[:j]) * pw[j] * k if j else 0
            outer += inner * pw[j] + index_of(k, xs[j + n :])
            r = vals[outer]
            if ref < 0:
                ref = r
            elif r != ref:
                return False
    return True


def is_bisymmetric(T: OperationTable, budget: int = BISYMMETRY_BUDGET) -> bool:
    """Row/column interchange law over all n-by-n matrices.

    There are ``k**(n*n)`` matrices, so this is only usable for tiny k and n;
    raises CostLimitExceeded past ``budget`` matrices.
    """
    k, n, vals = T.k, T.n, T.values
    cost = k ** (n * n)
    if cost > budget:
        raise CostLimitExceeded(cost, budget, "bisymmetry check")
    for m in product(range(k), repeat=n * n):
        rows = [vals[index_of(k, m[i * n : (i + 1) * n])] for i in range(n)]
        cols = [vals[index_of(k, m[j::n])] for j in range(n)]
        if vals[index_of(k, rows)] != vals[index_of(k, cols)]:
            return False
    return True


def neutral_elements(T: OperationTable) -> frozenset[int]:
    return frozenset(e + 1 for e in _neutral0(T))


def _neutral0(T: OperationTable) -> list[int]:
    k, n, vals = T.k, T.n, T.values
    found = []
    for e in range(k):
        base = _diagonal_index(k, n, e)
        ok = True
        for i in range(n):
            p = k ** (n - 1 - i)
            off = base - e * p
            if any(vals[off + x * p] != x for x in range(k)):
                ok = False
                break
        if ok:
            found.append(e)
    return found


def annihilator(T: OperationTable) -> int | None:
    """The element z with F(x) = z whenever z occurs in x, if there is one."""
    k = T.k
    for z in range(k):
        if all(v == z for xs, v in zip(all_tuples(k, T.n), T.values) if z in xs):
            return z + 1
    return None


def preimage_counts(T: OperationTable) -> tuple[int, ...]:
    """``|F^-1[x]|`` for x = 1..k (position x-1)."""
    counts = [0] * T.k
    for v in T.values:
        counts[v] += 1
    return tuple(counts)


@dataclass(frozen=True)
class PreimageSequence:
    counts: tuple[int, ...]

    def __post_init__(self):
        if list(self.counts) != sorted(self.counts):
            raise ValueError("preimage sequence must be nondecreasing")


def preimage_sequence(T: OperationTable) -> PreimageSequence:
    return PreimageSequence(tuple(sorted(preimage_counts(T))))


def max_preimage_bound(k: int, n: int) -> int:
    """Number of tuples in [k]^n containing a given element."""
    return k**n - (k - 1) ** n


@dataclass(frozen=True)
class ContourClass:
    value: int
    tuples: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ContourPartition:
    """Kernel classes of F, one per attained value (1-based throughout)."""

    k: int
    n: int
    classes: tuple[ContourClass, ...]

    def class_of(self, xs: Sequence[int]) -> ContourClass:
        for c in self.classes:
            if tuple(xs) in c.tuples:
                return c
        raise KeyError(xs)


def contour_components(T: OperationTable) -> ContourPartition:
    groups: dict[int, list[tuple[int, ...]]] = {}
    for xs, v in zip(all_tuples(T.k, T.n), T.values):
        groups.setdefault(v, []).append(tuple(x + 1 for x in xs))
    classes = tuple(ContourClass(v + 1, tuple(groups[v])) for v in sorted(groups))
    return ContourPartition(T.k, T.n, classes)


def is_quasitrivial_by_contour(T: OperationTable) -> bool:
    """Quasitriviality read off the contour plot.

    Idempotent, and every non-constant tuple is connected to the constant
    tuple of one of its own components.
    """
    if not is_idempotent(T):
        return False
    part = contour_components(T)
    value_of = {xs: c.value for c in part.classes for xs in c.tuples}
    for xs, v in value_of.items():
        if is_diagonal(xs):
            continue
        if not any(value_of[(x,) * T.n] == v for x in set(xs)):
            return False
    return True


def is_order_preserving(T: OperationTable, order: Sequence[int]) -> bool:
    """Monotonicity in every coordinate for the total order ``order``.

    ``order`` lists the elements of [k] from least to greatest. Comparing each
    tuple with its one-step successors in each coordinate suffices.
    """
    k, n, vals = T.k, T.n, T.values
    if sorted(order) != list(range(1, k + 1)):
        raise NotAPermutation(f"{list(order)} is not a permutation of 1..{k}")
    rank = [0] * k
    for r, x in enumerate(order):
        rank[x - 1] = r
    succ = [0] * k
    for r in range(k - 1):
        succ[order[r] - 1] = order[r + 1] - 1
    for idx, xs in enumerate(all_tuples(k, n)):
        here = rank[vals[idx]]
        for i, x in enumerate(xs):
            if rank[x] == k - 1:
                continue
            p = k ** (n - 1 - i)
            if rank[vals[idx + (succ[x] - x) * p]] < here:
                return False
    return True


def restrict(T: OperationTable, elements: Iterable[int]) -> OperationTable:
    """Restriction of T to a subset, relabelled 1..m in increasing order.

    The subset must be closed under T (always true for quasitrivial T).
    """
    elems = sorted(set(elements))
    if not elems:
        raise ArityOrSizeInvalid("cannot restrict to the empty set")
    pos = {x - 1: i for i, x in enumerate(elems)}
    out = []
    for xs in product([x - 1 for x in elems], repeat=T.n):
        v = T.at(xs)
        if v not in pos:
            raise SemigroupError(f"subset {elems} is not closed under the operation")
        out.append(pos[v])
    return OperationTable(len(elems), T.n, tuple(out))
