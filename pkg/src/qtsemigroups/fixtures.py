"""Named reference tables used throughout the tests and docs."""

from .tables import OperationTable, table_from_function


def sum_mod2(n: int) -> OperationTable:
    """n-ary addition mod 2 on [2], with 1 standing for 0 and 2 for 1."""
    return table_from_function(2, n, lambda *xs: sum(x - 1 for x in xs) % 2 + 1)


def max_table(k: int, n: int) -> OperationTable:
    return table_from_function(k, n, lambda *xs: max(xs))


def projection(k: int, n: int, i: int = 1) -> OperationTable:
    """The i-th projection (1-based position)."""
    return table_from_function(k, n, lambda *xs: xs[i - 1])


def diff3() -> OperationTable:
    """F(x, y, z) = x - y + z mod 3 on [3]; idempotent and associative, not quasitrivial."""
    return table_from_function(3, 3, lambda x, y, z: ((x - 1) - (y - 1) + (z - 1)) % 3 + 1)
