"""Run configurations for the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import ENUMERATION_BUDGET


@dataclass(frozen=True)
class BruteCountConfig:
    k: int
    n: int
    method: str = "pruned"
    budget: int = ENUMERATION_BUDGET


@dataclass(frozen=True)
class SweepConfig:
    """Compare the compiled fast test with the pruned search on whole spaces."""

    families: tuple[tuple[int, int], ...] = ((2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3), (2, 5))
    chunk: int = 1 << 24
    budget: int = ENUMERATION_BUDGET


@dataclass(frozen=True)
class Table1Config:
    ks: tuple[int, ...] = tuple(range(1, 7))
    out_csv: str | None = None
    extra_ks: tuple[int, ...] = field(default_factory=tuple)
