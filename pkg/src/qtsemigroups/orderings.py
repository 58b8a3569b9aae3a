"""Weak orderings on [k], the max operation, and the projection/max form of
associative quasitrivial binary operations (``build_kimura`` and friends).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import ParseError, PartialOperation
from .tables import OperationTable, all_tuples, preimage_counts

FIRST = "first"
SECOND = "second"


@dataclass(frozen=True)
class WeakOrdering:
    """Ordered partition of [k], least block first.

    Equality is on the canonical form (each block sorted ascending), which
    ``__post_init__`` enforces.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        elems = sorted(x for b in blocks for x in b)
        if any(not b for b in blocks) or elems != list(range(1, len(elems) + 1)):
            raise ValueError(f"{self.blocks} is not an ordered partition of [k]")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return sum(len(b) for b in self.blocks)

    def level(self, x: int) -> int:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise KeyError(x)

    def levels(self) -> list[int]:
        """Block index of each element, position x-1."""
        lv = [0] * self.k
        for i, b in enumerate(self.blocks):
            for x in b:
                lv[x - 1] = i
        return lv

    def leq(self, x: int, y: int) -> bool:
        return self.level(x) <= self.level(y)

    def is_total(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def elements(self) -> list[int]:
        return [x for b in self.blocks for x in b]

    def __str__(self) -> str:
        return " < ".join(" ~ ".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "WeakOrdering":
        try:
            blocks = [tuple(int(t) for t in part.split("~")) for part in text.split("<")]
            return cls(tuple(blocks))
        except ValueError as exc:
            raise ParseError(f"bad ordering {text!r}: {exc}") from None

    @classmethod
    def total(cls, order: Sequence[int]) -> "WeakOrdering":
        return cls(tuple((x,) for x in order))


def parse_element_order(text: str) -> list[int]:
    """Elements of an ordering string in order of appearance (for display)."""
    WeakOrdering.parse(text)
    return [int(t) for part in text.split("<") for t in part.split("~")]


def is_total(w: WeakOrdering) -> bool:
    return w.is_total()


def _set_partitions(elems: list[int]) -> Iterator[list[list[int]]]:
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest):
        yield [[first], *part]
        for i in range(len(part)):
            yield part[:i] + [[first, *part[i]]] + part[i + 1 :]


def weak_orderings(k: int) -> Iterator[WeakOrdering]:
    """Every ordered set partition of [k] once: by block count, then lexicographically."""
    if k == 0:
        yield WeakOrdering(())
        return
    by_size: dict[int, list[tuple[tuple[int, ...], ...]]] = {}
    for part in _set_partitions(list(range(1, k + 1))):
        blocks = [tuple(sorted(b)) for b in part]
        bucket = by_size.setdefault(len(blocks), [])
        bucket.extend(permutations(blocks))
    for m in sorted(by_size):
        for blocks in sorted(by_size[m]):
            yield WeakOrdering(blocks)


def total_orderings(k: int) -> Iterator[WeakOrdering]:
    for p in permutations(range(1, k + 1)):
        yield WeakOrdering.total(p)


def max_n(w: WeakOrdering, n: int) -> OperationTable:
    """n-ary maximum for w; raises PartialOperation where it is undefined."""
    lv = w.levels()
    out = []
    for xs in all_tuples(w.k, n):
        top = max(lv[x] for x in xs)
        winners = {x for x in xs if lv[x] == top}
        if len(winners) > 1:
            raise PartialOperation(tuple(x + 1 for x in xs))
        out.append(winners.pop())
    return OperationTable(w.k, n, tuple(out))


@dataclass(frozen=True)
class KimuraSpec:
    """A weak ordering plus a projection choice per block."""

    ordering: WeakOrdering
    choices: tuple[str, ...]

    def __post_init__(self):
        if len(self.choices) != len(self.ordering.blocks):
            raise ValueError("need one choice per block")
        if any(c not in (FIRST, SECOND) for c in self.choices):
            raise ValueError(f"choices must be {FIRST!r} or {SECOND!r}")
        norm = tuple(
            FIRST if len(b) == 1 else c for b, c in zip(self.ordering.blocks, self.choices)
        )
        object.__setattr__(self, "choices", norm)


def kimura_specs(w: WeakOrdering) -> Iterator[KimuraSpec]:
    """All specs over w, with singleton blocks fixed to FIRST."""
    options = [(FIRST,) if len(b) == 1 else (FIRST, SECOND) for b in w.blocks]
    for choice in product(*options):
        yield KimuraSpec(w, choice)


def build_kimura(spec: KimuraSpec) -> OperationTable:
    w = spec.ordering
    k = w.k
    lv = w.levels()
    out = []
    for x in range(k):
        for y in range(k):
            if lv[x] == lv[y]:
                out.append(x if spec.choices[lv[x]] == FIRST else y)
            else:
                out.append(x if lv[x] > lv[y] else y)
    return OperationTable(k, 2, tuple(out))


def matches_kimura(G: OperationTable, w: WeakOrdering) -> tuple[str, ...] | None:
    """Block choices if G has the projection/max form for w, else None."""
    if G.n != 2 or G.k != w.k:
        return None
    k, vals = G.k, G.values
    lv = w.levels()
    for x in range(k):
        for y in range(k):
            if lv[x] != lv[y]:
                if vals[x * k + y] != (x if lv[x] > lv[y] else y):
                    return None
    choices = []
    for b in w.blocks:
        cells = [(x - 1, y - 1) for x in b for y in b]
        if all(vals[x * k + y] == x for x, y in cells):
            choices.append(FIRST)
        elif all(vals[x * k + y] == y for x, y in cells):
            choices.append(SECOND)
        else:
            return None
    return tuple(choices)


def ordering_from_preimages(T: OperationTable) -> WeakOrdering:
    """Group elements by preimage size; smaller preimages rank lower."""
    counts = preimage_counts(T)
    levels = sorted(set(counts))
    return WeakOrdering(
        tuple(tuple(x + 1 for x in range(T.k) if counts[x] == c) for c in levels)
    )


def kimura_form(G: OperationTable) -> KimuraSpec | None:
    """Match G against the only candidate ordering, the preimage one."""
    w = ordering_from_preimages(G)
    choices = matches_kimura(G, w)
    return None if choices is None else KimuraSpec(w, choices)
