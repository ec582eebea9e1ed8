"""Shared helpers: independent oracles the tests check the library against.

The oracles deliberately avoid the library's search engines and tables; they
are plain per-value digit loops so an engine bug cannot hide itself.
"""

from __future__ import annotations

import pytest

from digitfix.funcatalog import parse_spec

# Catalog specs used by the engine-equivalence suites (base 10, width 1).
CATALOG_SPEC_TEXTS = [
    "factorial",
    "subfactorial",
    "pow:2",
    "pow:3",
    "pow:4",
    "pow:5",
    "pow:6",
    "expbase:2",
    "expbase:3",
    "expbase:4",
    "selfpow",
]


def digits_of(n: int, base: int) -> list[int]:
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return out


def oracle_digit_sum(n: int, base: int) -> int:
    return sum(digits_of(n, base))


def oracle_hardy(fn_text: str, base: int, width: int, ceiling: int, zero_pow=1) -> list[int]:
    """Brute-force block-sum fixed points in [1, ceiling] by direct divmod loops."""
    spec = parse_spec(fn_text).with_zero_self_power(zero_pow)
    radix = base**width
    images = [spec(v) for v in range(radix)] if radix <= 4096 else None
    hits = []
    for n in range(1, ceiling + 1):
        v, total = n, 0
        while v:
            v, r = divmod(v, radix)
            total += images[r] if images else spec(r)
            if total > n:
                break
        if total == n:
            hits.append(n)
    return hits


@pytest.fixture(scope="session")
def corpus_report():
    from digitfix.corpus import corpus_check

    return corpus_check()
