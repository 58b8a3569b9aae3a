"""Plain-text table format.

    # optional comment lines
    k n
    v_1 v_2 ... v_{k^n}

Values are 1-based, whitespace separated, in index order (last argument
fastest). Several tables in one stream are separated by a line ``---``.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .tables import OperationTable, make_table

SEPARATOR = "---"


def format_table(T: OperationTable, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{T.k} {T.n}")
    entries = T.entries()
    for i in range(0, len(entries), T.k):
        lines.append(" ".join(map(str, entries[i : i + T.k])))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> OperationTable:
    tokens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens.extend(line.split())
    if len(tokens) < 2:
        raise ParseError("missing 'k n' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    k, n = nums[0], nums[1]
    return make_table(k, n, nums[2:])


def parse_tables(text: str) -> list[OperationTable]:
    chunks, cur = [], []
    for line in text.splitlines():
        if line.strip() == SEPARATOR:
            chunks.append("\n".join(cur))
            cur = []
        else:
            cur.append(line)
    chunks.append("\n".join(cur))
    return [parse_table(c) for c in chunks if _has_content(c)]


def format_tables(tables: Iterable[OperationTable]) -> str:
    return (SEPARATOR + "\n").join(format_table(T) for T in tables)


def _has_content(chunk: str) -> bool:
    return any(l.strip() and not l.strip().startswith("#") for l in chunk.splitlines())
