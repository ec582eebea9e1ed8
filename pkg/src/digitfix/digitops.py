"""Exact digit manipulation for natural numbers in an arbitrary base.

Everything here is a pure function on Python integers, so results stay exact
at any size.  No operation uses floating point: digit counts are derived from
integer power comparisons, which keeps boundary cases like
``digit_count(b**m) == m + 1`` exact where a ``log`` would be off by one.

Digit and block sequences are stored least-significant first throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigurationError

__all__ = [
    "BlockVector",
    "DigitVector",
    "digit_count",
    "digit_sum",
    "from_blocks",
    "from_digits",
    "group_blocks",
    "reverse_digits",
    "to_digits",
]


def _check_base(base: int) -> None:
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")


def _check_natural(n: int) -> None:
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")


@dataclass(frozen=True)
class DigitVector:
    """Positional digits of a natural number, least-significant first.

    The canonical form produced by :func:`to_digits` has no leading zeros
    except for the value 0, which is represented as ``(0,)``.  Vectors with
    redundant leading zeros are accepted by :func:`from_digits` but never
    produced.
    """

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        _check_base(self.base)
        if not self.digits:
            raise ValueError("digit vector must hold at least one digit")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @property
    def is_canonical(self) -> bool:
        return self.digits == (0,) or self.digits[-1] != 0


@dataclass(frozen=True)
class BlockVector:
    """Width-``k`` digit blocks of a number, least-significant first.

    Each block is the value of ``k`` consecutive base-``base`` digits, so the
    blocks are the digits of the number in radix ``base**block_width``.
    """

    blocks: tuple[int, ...]
    base: int
    block_width: int

    def __post_init__(self) -> None:
        _check_base(self.base)
        if self.block_width < 1:
            raise ConfigurationError(
                f"block width must be at least 1, got {self.block_width}"
            )
        radix = self.base**self.block_width
        for v in self.blocks:
            if not 0 <= v < radix:
                raise ValueError(
                    f"block {v} out of range for base {self.base} width {self.block_width}"
                )

    @property
    def radix(self) -> int:
        return self.base**self.block_width


def _digits_lsb(n: int, base: int) -> list[int]:
    """Raw digit list used by the hot search paths; skips dataclass wrapping."""
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return out


def to_digits(n: int, base: int) -> DigitVector:
    """Canonical least-significant-first expansion of ``n`` in ``base``."""
    _check_base(base)
    _check_natural(n)
    return DigitVector(tuple(_digits_lsb(n, base)), base)


def from_digits(d: DigitVector) -> int:
    """Reassemble a digit vector: sum of ``digits[i] * base**i``.

    Exact inverse of :func:`to_digits` on canonical vectors; also accepts
    vectors with leading zeros.
    """
    value = 0
    for digit in reversed(d.digits):
        value = value * d.base + digit
    return value


def digit_sum(n: int, base: int) -> int:
    """Sum of the canonical digits of ``n`` in ``base``; ``digit_sum(0) == 0``."""
    _check_base(base)
    _check_natural(n)
    total = 0
    while n:
        n, r = divmod(n, base)
        total += r
    return total


def _floor_log(n: int, base: int) -> int:
    """Largest e with ``base**e <= n``, for n >= 1.  Pure integer arithmetic."""
    if n < base:
        return 0
    # Repeated squaring up, then binary descent: O(log e) bigint operations.
    squares = [(base, 1)]
    while True:
        p, e = squares[-1]
        if p * p > n:
            break
        squares.append((p * p, 2 * e))
    exponent = 0
    rest = n
    for p, e in reversed(squares):
        if p <= rest:
            rest //= p
            exponent += e
    return exponent


def digit_count(n: int, base: int) -> int:
    """Number of digits of ``n`` in ``base``: the m with ``b**(m-1) <= n < b**m``.

    By convention ``digit_count(0) == 1`` (zero is written as a single digit).
    Computed by integer power comparison, never by floating-point logarithm.
    """
    _check_base(base)
    _check_natural(n)
    if n == 0:
        return 1
    return _floor_log(n, base) + 1


def group_blocks(n: int, base: int, width: int) -> BlockVector:
    """Chunk the digits of ``n`` into width-``width`` blocks, least-significant first.

    The digit string is implicitly padded with leading zeros up to a multiple
    of ``width``; padding only extends the top block and never changes any
    block value or the reassembled number.
    """
    _check_base(base)
    _check_natural(n)
    if width < 1:
        raise ConfigurationError(f"block width must be at least 1, got {width}")
    radix = base**width
    if n == 0:
        return BlockVector((0,), base, width)
    blocks = []
    while n:
        n, r = divmod(n, radix)
        blocks.append(r)
    return BlockVector(tuple(blocks), base, width)


def from_blocks(bv: BlockVector) -> int:
    """Reassemble blocks with radix ``base**block_width``."""
    value = 0
    radix = bv.radix
    for block in reversed(bv.blocks):
        value = value * radix + block
    return value


def reverse_digits(n: int, base: int) -> int:
    """Number formed by reversing the canonical digits of ``n``.

    Leading zeros of the reversal drop, e.g. ``reverse_digits(100, 10) == 1``.
    Involutive exactly on numbers whose least significant digit is nonzero.
    """
    _check_base(base)
    _check_natural(n)
    out = 0
    if n == 0:
        return 0
    while n:
        n, r = divmod(n, base)
        out = out * base + r
    return out
