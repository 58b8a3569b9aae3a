"""Closed-form counts, generators, and brute-force counting oracles.

All counts are exact Python integers.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterator

from .errors import CostLimitExceeded, DomainError
from .orderings import build_kimura, kimura_specs, weak_orderings
from .tables import (
    OperationTable,
    all_tuples,
    is_associative_naive,
    is_symmetric,
    neutral_elements,
)

ENUMERATION_BUDGET = 2**31

ODD = "odd"
EVEN = "even"

OEIS = {
    "q2": "A292932",
    "q2_1": "A292933",
    "qn_0": "A308352",
    "qn_2": "A308354",
    "qn": "A308362",
    "a2_1": "A308351",
}

TABLE1_COLUMNS = ("q2", "q2_1", "qn_0", "qn_2", "qn", "a2_1")

# k = 1..6, as printed
_TABLE1 = {
    "q2": (1, 4, 20, 138, 1182, 12166),
    "q2_1": (1, 2, 12, 80, 690, 7092),
    "qn_0": (0, 2, 8, 58, 492, 5074),
    "qn_2": (0, 1, 3, 24, 200, 2070),
    "qn": (1, 5, 23, 162, 1382, 14236),
    "a2_1": (1, 4, 18, 128, 1090, 11232),
}


def table1_golden() -> dict[str, tuple[int, ...]]:
    """Published first values (k = 1..6) of the six counting sequences."""
    return dict(_TABLE1)


def parity_of(n: int) -> str:
    return ODD if n % 2 else EVEN


def _check_parity(parity: str) -> None:
    if parity not in (ODD, EVEN):
        raise DomainError(f"parity must be {ODD!r} or {EVEN!r}, got {parity!r}")


@lru_cache(maxsize=None)
def stirling2(k: int, l: int) -> int:
    """Set partitions of a k-set into l nonempty blocks (recurrence)."""
    if k < 0 or l < 0 or l > k:
        raise DomainError(f"need 0 <= l <= k, got k={k}, l={l}")
    if k == l:
        return 1
    if l == 0:
        return 0
    return l * stirling2(k - 1, l) + stirling2(k - 1, l - 1)


def stirling2_alternating(k: int, l: int) -> int:
    """The same numbers from the alternating-sum formula; kept as a cross-check."""
    if k < 0 or l < 0 or l > k:
        raise DomainError(f"need 0 <= l <= k, got k={k}, l={l}")
    total = sum((-1) ** (l - i) * comb(l, i) * i**k for i in range(l + 1))
    q, r = divmod(total, factorial(l))
    assert r == 0
    return q


@lru_cache(maxsize=None)
def count_q2(k: int) -> int:
    """Associative quasitrivial binary operations on [k]."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return sum(
        2**i
        * sum(
            (-1) ** l * comb(k, l) * stirling2(k - l, i) * factorial(i + l)
            for l in range(k - i + 1)
        )
        for i in range(k + 1)
    )


def count_q2_1(k: int) -> int:
    """... of those with a neutral element."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return k * count_q2(k - 1)


def count_a2_1(k: int) -> int:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1
    return k * count_q2(k - 1) + k * (k - 1) * count_q2(k - 2)


def count_qn_1(k: int) -> int:
    return count_q2_1(k)


def count_qn_0(k: int) -> int:
    return count_q2(k) - count_q2_1(k)


def count_qn_2(k: int, parity: str) -> int:
    _check_parity(parity)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k == 1 or parity == EVEN:
        return 0
    return comb(k, 2) * count_q2(k - 2)


def count_qn(k: int, parity: str) -> int:
    _check_parity(parity)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return count_q2(k) + count_qn_2(k, parity)


@dataclass(frozen=True)
class SymmetricCounts:
    qs2: int
    qsn_1: int
    qsn_2: int
    qsn: int
    as2_1: int


def count_qs_family(k: int, parity: str) -> SymmetricCounts:
    """Symmetric counts. The even-arity values have no two-neutral part."""
    _check_parity(parity)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    qs2 = factorial(k)
    if k == 1:
        as2_1 = 1
    elif k == 2:
        as2_1 = 4
    else:
        as2_1 = qs2 + k * factorial(k - 1)
    qsn_2 = 0 if parity == EVEN or k == 1 else factorial(k) // 2
    return SymmetricCounts(qs2, qs2, qsn_2, qs2 + qsn_2, as2_1)


@dataclass
class CountsReport:
    k: int
    parity: str | None
    source: str
    q2: int | None = None
    q2_1: int | None = None
    a2_1: int | None = None
    qn_0: int | None = None
    qn_1: int | None = None
    qn_2: int | None = None
    qn: int | None = None
    qs2: int | None = None
    qsn_1: int | None = None
    qsn_2: int | None = None
    qsn: int | None = None
    as2_1: int | None = None
    n: int | None = None
    oeis_ids: dict[str, str] = field(default_factory=lambda: dict(OEIS))

    COUNT_FIELDS = (
        "q2", "q2_1", "a2_1", "qn_0", "qn_1", "qn_2", "qn",
        "qs2", "qsn_1", "qsn_2", "qsn", "as2_1",
    )  # fmt: skip

    def counts(self) -> dict[str, int]:
        return {f: getattr(self, f) for f in self.COUNT_FIELDS if getattr(self, f) is not None}

    def to_json(self) -> dict:
        d = asdict(self)
        d["schema"] = 1
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def formula_counts(k: int, parity: str) -> CountsReport:
    sym = count_qs_family(k, parity)
    return CountsReport(
        k=k,
        parity=parity,
        source="formula",
        q2=count_q2(k),
        q2_1=count_q2_1(k),
        a2_1=count_a2_1(k),
        qn_0=count_qn_0(k),
        qn_1=count_qn_1(k),
        qn_2=count_qn_2(k, parity),
        qn=count_qn(k, parity),
        **asdict(sym),
    )


def table1_rows(ks=range(1, 7)) -> list[dict[str, int]]:
    """Table-1 columns recomputed from the formulas (n odd where it matters)."""
    rows = []
    for k in ks:
        r = formula_counts(k, ODD)
        rows.append({"k": k, **{c: getattr(r, c) for c in TABLE1_COLUMNS}})
    return rows


def table1_csv(rows: list[dict[str, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", *TABLE1_COLUMNS])
    for r in rows:
        w.writerow([r["k"], *(r[c] for c in TABLE1_COLUMNS)])
    w.writerow(["OEIS", *(OEIS[c] for c in TABLE1_COLUMNS)])
    return buf.getvalue()


def generate_quasitrivial_associative_binary(k: int) -> Iterator[OperationTable]:
    """Every associative quasitrivial binary table on [k], once each."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    seen: set[bytes] = set()
    for w in weak_orderings(k):
        for spec in kimura_specs(w):
            T = build_kimura(spec)
            key = T.key()
            if key not in seen:
                seen.add(key)
                yield T


def cell_choices(k: int, n: int) -> list[tuple[int, ...]]:
    """Allowed 0-based outputs of a quasitrivial table, per cell."""
    return [tuple(sorted(set(xs))) for xs in all_tuples(k, n)]


def quasitrivial_space_size(k: int, n: int) -> int:
    return prod(len(c) for c in cell_choices(k, n))


def _guard(k: int, n: int, budget: int) -> int:
    size = quasitrivial_space_size(k, n)
    if size > budget:
        raise CostLimitExceeded(size, budget, f"quasitrivial tables for k={k}, n={n}")
    return size


def generate_quasitrivial_tables(
    k: int, n: int, budget: int = ENUMERATION_BUDGET
) -> Iterator[OperationTable]:
    """All quasitrivial tables, last free cell varying fastest."""
    if k < 1 or n < 1:
        raise DomainError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    _guard(k, n, budget)
    for vals in product(*cell_choices(k, n)):
        yield OperationTable(k, n, vals)


def quasitrivial_table_at(k: int, n: int, index: int) -> OperationTable:
    """The table at position ``index`` of ``generate_quasitrivial_tables``."""
    choices = cell_choices(k, n)
    vals = [0] * len(choices)
    for i in range(len(choices) - 1, -1, -1):
        index, d = divmod(index, len(choices[i]))
        vals[i] = choices[i][d]
    if index:
        raise DomainError("index past the end of the quasitrivial space")
    return OperationTable(k, n, tuple(vals))


def quasitrivial_window(k: int, n: int, start: int, count: int) -> Iterator[tuple[int, OperationTable]]:
    """(index, table) for ``count`` consecutive positions from ``start``."""
    choices = cell_choices(k, n)
    free = [i for i, c in enumerate(choices) if len(c) > 1]
    vals = list(quasitrivial_table_at(k, n, start).values)
    digits = {i: choices[i].index(vals[i]) for i in free}
    for idx in range(start, start + count):
        yield idx, OperationTable(k, n, tuple(vals))
        for i in reversed(free):
            digits[i] += 1
            if digits[i] < len(choices[i]):
                vals[i] = choices[i][digits[i]]
                break
            digits[i] = 0
            vals[i] = choices[i][0]
        else:
            return


def quasitrivial_index(T: OperationTable) -> int:
    """Inverse of ``quasitrivial_table_at``."""
    idx = 0
    for c, v in zip(cell_choices(T.k, T.n), T.values):
        idx = idx * len(c) + c.index(v)
    return idx


BRUTE_METHODS = ("naive", "fast", "pruned", "sweep")


def associative_quasitrivial_tables(
    k: int, n: int, method: str = "naive", budget: int = ENUMERATION_BUDGET
) -> list[OperationTable]:
    """Exhaustively find the associative quasitrivial n-ary tables on [k].

    ``naive`` / ``fast`` filter the full quasitrivial space with the
    corresponding checker; ``pruned`` backtracks over cells and drops partial
    tables that already violate an identity instance; ``sweep`` runs the
    compiled fast test over the whole space. ``pruned`` and ``sweep`` results
    are confirmed with the fast test.
    """
    from .analysis import is_associative_fast

    if method not in BRUTE_METHODS:
        raise ValueError(f"unknown method {method!r}")
    _guard(k, n, budget)
    if n == 1:
        raise DomainError("associativity needs n >= 2")
    if method == "naive":
        return [T for T in generate_quasitrivial_tables(k, n, budget) if is_associative_naive(T)]
    if method == "fast":
        return [T for T in generate_quasitrivial_tables(k, n, budget) if is_associative_fast(T)]
    if method == "pruned":
        from .search import pruned_associative_tables

        found = list(pruned_associative_tables(k, n))
    else:
        from .sweep import sweep_fast

        found = [quasitrivial_table_at(k, n, int(i)) for i in sweep_fast(k, n)]
    for T in found:
        if not is_associative_fast(T):
            raise AssertionError(f"{method} search produced a non-associative table")
    return found


def tally(tables: list[OperationTable], k: int, n: int, source: str) -> CountsReport:
    """Neutral-element buckets and symmetric counts of a list of associative quasitrivial tables."""
    buckets = Counter(len(neutral_elements(T)) for T in tables)
    sym = Counter(len(neutral_elements(T)) for T in tables if is_symmetric(T))
    rep = CountsReport(k=k, parity=parity_of(n), source=source, n=n)
    rep.qn_0, rep.qn_1, rep.qn_2 = buckets[0], buckets[1], buckets[2]
    rep.qn = len(tables)
    rep.qsn_1, rep.qsn_2 = sym[1], sym[2]
    rep.qsn = sum(sym.values())
    if n == 2:
        rep.q2, rep.q2_1, rep.qs2 = rep.qn, rep.qn_1, rep.qsn
    extra = set(buckets) - {0, 1, 2}
    if extra:
        raise AssertionError(f"tables with {sorted(extra)} neutral elements")
    return rep


def brute_count(
    k: int, n: int, method: str = "naive", budget: int = ENUMERATION_BUDGET
) -> CountsReport:
    tables = associative_quasitrivial_tables(k, n, method, budget)
    return tally(tables, k, n, source=f"brute_force:{method}")
