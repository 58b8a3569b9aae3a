"""Binary and ternary reductions of n-ary operations.

``compose_binary`` / ``compose_ternary`` follow the recursive definition that
rewrites the last window first, so they are well defined (and deterministic)
even for non-associative inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import (
    ArityMismatch,
    ArityTooSmall,
    EvenTargetArity,
    InternalContradiction,
    NotANeutralElement,
    NotAssociativeQuasitrivial,
    NotReducible,
)
from .tables import (
    OperationTable,
    _neutral0,
    is_associative_naive,
    is_quasitrivial,
    neutral_elements,
    preimage_counts,
    restrict,
)

# Re-verify constructed reductions by composing them back. O(k**n) per call;
# the test suite switches this on.
DEBUG_CHECKS = False

Q12 = "Q12"
A12_MINUS_Q12 = "A12_minus_Q12"
QUASITRIVIAL_NO_NEUTRAL = "quasitrivial_no_neutral"
OTHER = "other"

FROM_NEUTRAL = "from-neutral"
IDEMPOTENT_CANDIDATE = "idempotent-candidate"


def compose_binary(G: OperationTable, n_target: int) -> OperationTable:
    """The n_target-ary operation G(x1, G(x2, ... G(x_{n-1}, x_n)))."""
    if G.n != 2:
        raise ArityMismatch(f"expected a binary table, got arity {G.n}")
    if n_target < 2:
        raise ArityTooSmall("target arity must be at least 2")
    k = G.k
    g = np.asarray(G.values, dtype=np.int64).reshape(k, k)
    r = np.arange(k)
    for _ in range(n_target - 1):
        r = g[np.arange(k).reshape((k,) + (1,) * r.ndim), r[None]]
    return OperationTable(k, n_target, tuple(r.reshape(-1).tolist()))


def composes_to(G: OperationTable, F: OperationTable) -> bool:
    """``compose_binary(G, F.n) == F``, stopping at the first differing cell."""
    if G.n != 2:
        raise ArityMismatch(f"expected a binary table, got arity {G.n}")
    if G.k != F.k:
        return False
    k, g = G.k, G.values
    for xs, v in zip(product(range(k), repeat=F.n), F.values):
        r = xs[-1]
        for x in xs[-2::-1]:
            r = g[x * k + r]
        if r != v:
            return False
    return True


def compose_ternary(H: OperationTable, n_target: int) -> OperationTable:
    """The n_target-ary operation H(x1, x2, H(x3, x4, ... H(x_{n-2}, x_{n-1}, x_n)))."""
    if H.n != 3:
        raise ArityMismatch(f"expected a ternary table, got arity {H.n}")
    if n_target < 3:
        raise ArityTooSmall("target arity must be at least 3")
    if n_target % 2 == 0:
        raise EvenTargetArity(f"ternary reductions only compose to odd arities, got {n_target}")
    k = H.k
    h = np.asarray(H.values, dtype=np.int64).reshape(k, k, k)
    r = h
    for _ in range((n_target - 3) // 2):
        tail = (1,) * r.ndim
        a = np.arange(k).reshape((k, 1) + tail)
        b = np.arange(k).reshape((1, k) + tail)
        r = h[a, b, r[None, None]]
    return OperationTable(k, n_target, tuple(r.reshape(-1).tolist()))


def reduction_from_neutral(F: OperationTable, e: int) -> OperationTable:
    """G^e(x, y) = F(x, e, ..., e, y) for a neutral element e (1-based)."""
    if e - 1 not in _neutral0(F):
        raise NotANeutralElement(f"{e} is not a neutral element")
    G = _with_neutral(F, e - 1)
    if DEBUG_CHECKS and F.n >= 2 and is_associative_naive(F):
        if compose_binary(G, F.n) != F:
            raise InternalContradiction(f"G^{e} does not compose back to F")
    return G


def _with_neutral(F: OperationTable, e0: int) -> OperationTable:
    k, n, vals = F.k, F.n, F.values
    if n < 2:
        raise ArityTooSmall("reductions need n >= 2")
    mid = sum(e0 * k**j for j in range(1, n - 1))
    return OperationTable(
        k, 2, tuple(vals[x * k ** (n - 1) + mid + y] for x in range(k) for y in range(k))
    )


def candidate_reduction(F: OperationTable) -> OperationTable:
    """G(x, y) = F(x, y, ..., y). Makes no claim that G is a reduction."""
    k, n, vals = F.k, F.n, F.values
    if n < 2:
        raise ArityTooSmall("reductions need n >= 2")
    rep = sum(k**j for j in range(n - 1))
    return OperationTable(
        k, 2, tuple(vals[x * k ** (n - 1) + y * rep] for x in range(k) for y in range(k))
    )


def ternary_reduction(F: OperationTable, e: int | None = None) -> OperationTable:
    """An associative quasitrivial ternary H with compose_ternary(H, n) == F.

    Uses G^e when e is given, the candidate reduction when F has at most one
    neutral element, and G^{min E_F} otherwise.
    """
    if F.n < 3 or F.n % 2 == 0:
        raise EvenTargetArity(f"ternary reductions need odd n >= 3, got {F.n}")
    if e is not None:
        G = reduction_from_neutral(F, e)
    else:
        E = sorted(neutral_elements(F))
        G = candidate_reduction(F) if len(E) <= 1 else reduction_from_neutral(F, E[0])
    H = compose_binary(G, 3)
    if compose_ternary(H, F.n) != F:
        raise NotReducible("composition check failed; F is not associative and quasitrivial")
    return H


@dataclass(frozen=True)
class Reduction:
    origin: str
    neutral: int | None
    table: OperationTable

    @property
    def tag(self) -> str:
        return f"{FROM_NEUTRAL}({self.neutral})" if self.origin == FROM_NEUTRAL else self.origin


@dataclass(frozen=True)
class ReductionSet:
    neutral_elements: frozenset[int]
    reductions: tuple[Reduction, ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.reductions)

    def tables(self) -> list[OperationTable]:
        return [r.table for r in self.reductions]


def all_binary_reductions(F: OperationTable) -> ReductionSet:
    """Every binary reduction of an associative quasitrivial F.

    With neutral elements, the reductions are exactly the G^e; without, the
    unique reduction is the candidate G(x, y) = F(x, y, ..., y).
    """
    from .analysis import is_associative_fast

    if F.n < 2 or not is_quasitrivial(F) or not is_associative_fast(F):
        raise NotAssociativeQuasitrivial("input must be associative and quasitrivial")
    E = sorted(neutral_elements(F))
    if E:
        reds = [Reduction(FROM_NEUTRAL, e, _with_neutral(F, e - 1)) for e in E]
    else:
        reds = [Reduction(IDEMPOTENT_CANDIDATE, None, candidate_reduction(F))]
    for r in reds:
        if compose_binary(r.table, F.n) != F:
            raise InternalContradiction(f"{r.tag} does not compose back to F")
    return ReductionSet(frozenset(E), tuple(reds), complete=True)


@dataclass(frozen=True)
class BinaryClass:
    tag: str
    neutral: int | None = None
    exceptional_pair: tuple[int, int] | None = None


def _a12_exceptional(G: OperationTable, e0: int) -> tuple[bool, int | None]:
    """Check the A^1_2 conditions around neutral e0 (0-based).

    Returns (conditions hold, the exceptional x with G(x, x) = e0 or None).
    """
    k, vals = G.k, G.values
    special = []
    for x in range(k):
        d = vals[x * k + x]
        if d not in (x, e0):
            return False, None
        if d != x:
            special.append(x)
    for x in range(k):
        for y in range(k):
            if x != y and vals[x * k + y] not in (x, y):
                return False, None
    if len(special) > 1:
        return False, None
    if special:
        x = special[0]
        for y in range(k):
            if y not in (x, e0) and (vals[x * k + y] != y or vals[y * k + x] != y):
                return False, None
        return True, x
    return True, None


def z2_pair_witness(G: OperationTable) -> tuple[int, int] | None:
    """The unique unordered pair {x, y} singled out by the Z_2 criterion.

    Conditions: G on {x, y} is isomorphic to (Z_2, +); G on the complement is
    associative and quasitrivial; every other z annihilates G on {x, y, z}.
    Returns the pair (1-based, ascending) if exactly one pair qualifies.
    """
    k, vals = G.k, G.values

    def g(a, b):
        return vals[a * k + b]

    hits = []
    for x, y in combinations(range(k), 2):
        z2 = any(
            g(u, u) == u and g(u, v) == v and g(v, u) == v and g(v, v) == u
            for u, v in ((x, y), (y, x))
        )
        if not z2:
            continue
        rest = [z for z in range(k) if z not in (x, y)]
        if rest:
            if any(g(a, b) not in (a, b) for a in rest for b in rest):
                continue
            if not is_associative_naive(restrict(G, [z + 1 for z in rest])):
                continue
        if all(g(z, w) == z and g(w, z) == z for z in rest for w in (x, y, z)):
            hits.append((x + 1, y + 1))
    return hits[0] if len(hits) == 1 else None


def classify_binary(G: OperationTable) -> BinaryClass:
    if G.n != 2:
        raise ArityMismatch(f"expected a binary table, got arity {G.n}")
    assoc = is_associative_naive(G)
    E = _neutral0(G)
    quasi = is_quasitrivial(G)
    if assoc and len(E) == 1:
        e0 = E[0]
        in_a12, x = _a12_exceptional(G, e0)
        singleton = preimage_counts(G)[e0] == 1
        if quasi:
            if not (in_a12 and singleton):
                raise InternalContradiction("Q12 table fails the A12 / singleton-preimage test")
            return BinaryClass(Q12, e0 + 1)
        if in_a12:
            if singleton or x is None:
                raise InternalContradiction("non-quasitrivial A12 table without exceptional element")
            witness = z2_pair_witness(G)
            if witness != tuple(sorted((x + 1, e0 + 1))):
                raise InternalContradiction(f"A12 exceptional pair {(x + 1, e0 + 1)} vs {witness}")
            return BinaryClass(A12_MINUS_Q12, e0 + 1, (x + 1, e0 + 1))
    if assoc and quasi and not E:
        return BinaryClass(QUASITRIVIAL_NO_NEUTRAL)
    return BinaryClass(OTHER, E[0] + 1 if len(E) == 1 else None)
