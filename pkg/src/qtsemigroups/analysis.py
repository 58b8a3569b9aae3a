"""Decision procedures for quasitrivial n-ary operations and the aggregated report."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ArityTooSmall,
    CostLimitExceeded,
    InternalContradiction,
    NotAssociativeQuasitrivial,
    NotQuasitrivial,
    PreconditionViolated,
)
from .formats import format_table
from .orderings import WeakOrdering, kimura_form, max_n, ordering_from_preimages
from .reduction import (
    A12_MINUS_Q12,
    ReductionSet,
    _with_neutral,
    all_binary_reductions,
    candidate_reduction,
    classify_binary,
    composes_to,
)
from .tables import (
    BISYMMETRY_BUDGET,
    OperationTable,
    PreimageSequence,
    _neutral0,
    annihilator,
    is_associative_naive,
    is_bisymmetric,
    is_idempotent,
    is_quasitrivial,
    is_symmetric,
    neutral_elements,
    preimage_sequence,
)

SCHEMA = 1

MAX_TOTAL_ORDER = "max_total_order"
TWO_NEUTRAL = "two_neutral"
NOT_APPLICABLE = "not_applicable"


def is_associative_fast(F: OperationTable) -> bool:
    """Associativity of a quasitrivial table without the (2n-1)-tuple scan.

    Quasitrivial F has at most two neutral elements when associative. With
    two, F is associative iff n is odd, both G^e are in A12 minus Q12, and
    G^e composes back to F. With at most one, F is associative iff the
    candidate G(x, y) = F(x, y, ..., y) is quasitrivial, has the
    projection/max form for its preimage ordering, and composes back to F.
    Dominant cost is the O(n * k**n) composition.
    """
    if F.n < 2:
        raise ArityTooSmall("associativity needs n >= 2")
    if not is_quasitrivial(F):
        raise NotQuasitrivial("the fast associativity test needs a quasitrivial table")
    E = _neutral0(F)
    if len(E) >= 3:
        return False
    if len(E) == 2:
        if F.n % 2 == 0:
            return False
        G1, G2 = (_with_neutral(F, e) for e in E)
        return (
            classify_binary(G1).tag == A12_MINUS_Q12
            and classify_binary(G2).tag == A12_MINUS_Q12
            and composes_to(G1, F)
        )
    G = candidate_reduction(F)
    return is_quasitrivial(G) and kimura_form(G) is not None and composes_to(G, F)


@dataclass(frozen=True)
class UniredAssertions:
    reductions_idempotent: bool
    reductions_quasitrivial: bool
    at_most_one_reduction: bool
    at_most_one_neutral: bool
    swap_identity: bool

    def values(self) -> tuple[bool, ...]:
        return (
            self.reductions_idempotent,
            self.reductions_quasitrivial,
            self.at_most_one_reduction,
            self.at_most_one_neutral,
            self.swap_identity,
        )

    def all_equal(self) -> bool:
        return len(set(self.values())) == 1


def unired_equivalences(F: OperationTable) -> UniredAssertions:
    """Evaluate the five equivalent uniqueness conditions independently."""
    reds = all_binary_reductions(F)
    k, n, vals = F.k, F.n, F.values
    rep = sum(k**j for j in range(n - 1))
    top = k ** (n - 1)
    # F(x, ..., x, y) vs F(x, y, ..., y)
    swap = all(
        vals[x * rep * k + y] == vals[x * top + y * rep] for x in range(k) for y in range(k)
    )
    return UniredAssertions(
        reductions_idempotent=all(is_idempotent(G) for G in reds.tables()),
        reductions_quasitrivial=all(is_quasitrivial(G) for G in reds.tables()),
        at_most_one_reduction=len(reds) <= 1,
        at_most_one_neutral=len(reds.neutral_elements) <= 1,
        swap_identity=swap,
    )


@dataclass(frozen=True)
class SymmetricClass:
    kind: str
    ordering: WeakOrdering | None = None

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.ordering is not None:
            d["ordering"] = str(self.ordering)
        return d


def expected_max_preimages(k: int, n: int) -> tuple[int, ...]:
    return tuple(j**n - (j - 1) ** n for j in range(1, k + 1))


def symmetric_classification(F: OperationTable) -> SymmetricClass:
    """Either F is max_n for the total order read off its preimages, or it has two neutral elements."""
    if F.n < 2 or not (is_quasitrivial(F) and is_symmetric(F) and is_associative_fast(F)):
        raise PreconditionViolated("needs an associative, quasitrivial, symmetric table")
    if len(_neutral0(F)) == 2:
        return SymmetricClass(TWO_NEUTRAL)
    w = ordering_from_preimages(F)
    if (
        preimage_sequence(F).counts == expected_max_preimages(F.k, F.n)
        and w.is_total()
        and max_n(w, F.n) == F
    ):
        return SymmetricClass(MAX_TOTAL_ORDER, w)
    raise InternalContradiction("symmetric associative quasitrivial table is neither max nor two-neutral")


@dataclass(frozen=True)
class AnalysisReport:
    table: OperationTable
    idempotent: bool
    quasitrivial: bool
    symmetric: bool
    associative: bool
    bisymmetric: bool | None
    neutral_elements: frozenset[int]
    annihilator: int | None
    preimage_sequence: PreimageSequence
    reductions: ReductionSet | None
    kimura_ordering: WeakOrdering | None
    symmetric_class: SymmetricClass | None
    method: str

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "k": self.table.k,
            "n": self.table.n,
            "table": format_table(self.table),
            "method": self.method,
            "idempotent": self.idempotent,
            "quasitrivial": self.quasitrivial,
            "symmetric": self.symmetric,
            "associative": self.associative,
            "bisymmetric": self.bisymmetric,
            "neutral_elements": sorted(self.neutral_elements),
            "annihilator": self.annihilator,
            "preimage_sequence": list(self.preimage_sequence.counts),
            "reductions": None,
            "kimura_ordering": None if self.kimura_ordering is None else str(self.kimura_ordering),
            "symmetric_class": None if self.symmetric_class is None else self.symmetric_class.to_json(),
        }
        if self.reductions is not None:
            out["reductions"] = [
                {"origin": r.tag, "neutral": r.neutral, "table": format_table(r.table)}
                for r in self.reductions.reductions
            ]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def analyze(
    F: OperationTable,
    method: str = "fast",
    bisymmetry: bool = False,
    budget: int = BISYMMETRY_BUDGET,
) -> AnalysisReport:
    """Run every applicable predicate and construction on F.

    ``method="fast"`` uses the fast associativity test when F is quasitrivial
    and the naive scan otherwise; ``"naive"`` always scans. Bisymmetry is only
    computed on request and is left as None when over budget.
    """
    if method not in ("fast", "naive"):
        raise ValueError(f"unknown method {method!r}")
    quasi = is_quasitrivial(F)
    if F.n < 2:
        assoc = False
    elif method == "fast" and quasi:
        assoc = is_associative_fast(F)
    else:
        assoc = is_associative_naive(F)
    bisym = None
    if bisymmetry:
        try:
            bisym = is_bisymmetric(F, budget)
        except CostLimitExceeded:
            bisym = None
    sym = is_symmetric(F)
    reds = kimura = sclass = None
    if assoc and quasi:
        try:
            reds = all_binary_reductions(F)
        except NotAssociativeQuasitrivial as exc:
            raise InternalContradiction(f"associative verdicts disagree: {exc}") from None
        if len(reds.neutral_elements) <= 1:
            form = kimura_form(reds.reductions[0].table)
            kimura = None if form is None else form.ordering
        sclass = symmetric_classification(F) if sym else SymmetricClass(NOT_APPLICABLE)
    return AnalysisReport(
        table=F,
        idempotent=is_idempotent(F),
        quasitrivial=quasi,
        symmetric=sym,
        associative=assoc,
        bisymmetric=bisym,
        neutral_elements=neutral_elements(F),
        annihilator=annihilator(F),
        preimage_sequence=preimage_sequence(F),
        reductions=reds,
        kimura_ordering=kimura,
        symmetric_class=sclass,
        method=method,
    )
