"""Independent reference implementations used only by the tests.

These deliberately avoid the package's own index arithmetic: tables are
read through dictionaries keyed by 1-based tuples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb


def as_dict(T) -> dict[tuple[int, ...], int]:
    tuples = product(range(1, T.k + 1), repeat=T.n)
    return dict(zip(tuples, T.entries()))


def associative(T) -> bool:
    f, n, k = as_dict(T), T.n, T.k
    for xs in product(range(1, k + 1), repeat=2 * n - 1):
        vals = {
            f[xs[:i] + (f[xs[i : i + n]],) + xs[i + n :]] for i in range(n)
        }
        if len(vals) > 1:
            return False
    return True


def neutral(T) -> set[int]:
    f, n, k = as_dict(T), T.n, T.k
    out = set()
    for e in range(1, k + 1):
        if all(f[(e,) * i + (x,) + (e,) * (n - 1 - i)] == x for x in range(1, k + 1) for i in range(n)):
            out.add(e)
    return out


def compose(G, n: int) -> dict[tuple[int, ...], int]:
    g = as_dict(G)

    def fold(xs):
        if len(xs) == 2:
            return g[xs]
        return fold(xs[:-2] + (g[xs[-2:]],))

    return {xs: fold(xs) for xs in product(range(1, G.k + 1), repeat=n)}


@lru_cache(maxsize=None)
def fubini(k: int) -> int:
    """Ordered Bell numbers by the binomial recurrence."""
    if k == 0:
        return 1
    return sum(comb(k, i) * fubini(k - i) for i in range(1, k + 1))


def stirling_by_counting(k: int, l: int) -> int:
    """Surjections [k] -> [l] counted directly, divided by l!."""
    from math import factorial

    surj = sum(1 for f in product(range(l), repeat=k) if len(set(f)) == l)
    return surj // factorial(l) if l else int(k == 0)


def quasitrivial_binary(k: int):
    """Every quasitrivial binary operation on [k] as a dict."""
    off = [(x, y) for x in range(1, k + 1) for y in range(1, k + 1) if x != y]
    for picks in product((0, 1), repeat=len(off)):
        f = {(x, x): x for x in range(1, k + 1)}
        for (x, y), p in zip(off, picks):
            f[(x, y)] = (x, y)[p]
        yield f


def dict_associative(f, k: int) -> bool:
    r = range(1, k + 1)
    return all(f[(f[(a, b)], c)] == f[(a, f[(b, c)])] for a in r for b in r for c in r)
