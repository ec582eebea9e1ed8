"""Constructive infinite families of digit identities, verified exactly.

Two generators:

* :func:`piezas_generate` - concatenated-square pairs over the Fermat primes
  17, 257 and 65537.  With fe = 2**(2**i) + 1 prime, a = 2**(2**(i-1)) and
  B = 10**(l*u) for l = (fe-1)/4 and u = 4t+3, the pair
  x = a(aB-1)/fe, y = a(a+B)/fe satisfies x*B + y = x**2 + y**2 because
  a**2 + 1 = fe makes both x**2 + y**2 and x*B + y collapse to
  a**2(B**2+1)/fe.  Divisibility by fe is exact for every admitted (i, t);
  a failed division would be a defect, not an input error.
* :func:`vitalis_generate` - the cube family seeded by 153: one followed by
  l sixes, five followed by l zeros, three followed by l threes; the cubes of
  the blocks sum to their concatenation for every l.

The x side always fills its digit field exactly; the y side is smaller than
the field by a fixed margin when a/fe < 1/10 (one digit for index 3, two for
index 4), so the concatenation reading pads y with leading zeros.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .digitops import digit_count
from .errors import ConfigurationError

__all__ = [
    "SEED_PAIRS",
    "ConcatSquarePair",
    "PiezasParams",
    "decimal_str",
    "elide_numeral",
    "piezas_generate",
    "reflect_pair",
    "verify_concat_square",
    "vitalis_generate",
]

FERMAT_PRIMES = {2: 17, 3: 257, 4: 65537}

# The two-digit pairs satisfying the concatenation identity; the Fermat-prime
# formula starts at twelve digits and never produces them.
SEED_PAIRS = ((12, 33, 2), (88, 33, 2))


@dataclass(frozen=True)
class PiezasParams:
    """Derived parameters of one member of the Fermat-prime family."""

    fermat_index: int
    t: int
    fe: int  # the Fermat prime 2**(2**i) + 1
    a: int  # 2**(2**(i-1)), one less than the previous Fermat number
    l: int  # (fe - 1) / 4
    u: int  # 4t + 3

    @classmethod
    def from_index(cls, fermat_index: int, t: int) -> "PiezasParams":
        if fermat_index not in FERMAT_PRIMES:
            raise ConfigurationError(
                f"fermat index must be one of {sorted(FERMAT_PRIMES)}, got {fermat_index}"
            )
        if t < 0:
            raise ConfigurationError(f"t must be a natural number, got {t}")
        fe = FERMAT_PRIMES[fermat_index]
        return cls(
            fermat_index=fermat_index,
            t=t,
            fe=fe,
            a=2 ** (2 ** (fermat_index - 1)),
            l=(fe - 1) // 4,
            u=4 * t + 3,
        )

    @property
    def block_length(self) -> int:
        return self.l * self.u


@dataclass(frozen=True)
class ConcatSquarePair:
    """Equal-field pair with x*10**block_length + y == x**2 + y**2."""

    x: int
    y: int
    block_length: int


def piezas_generate(fermat_index: int, t: int) -> ConcatSquarePair:
    """Generate and fully verify one Fermat-prime concatenated-square pair."""
    params = PiezasParams.from_index(fermat_index, t)
    big = 10**params.block_length
    x, rem_x = divmod(params.a * (params.a * big - 1), params.fe)
    y, rem_y = divmod(params.a * (params.a + big), params.fe)
    if rem_x or rem_y:
        raise RuntimeError(
            f"non-exact division by {params.fe} for index {fermat_index}, t={t}; "
            "this violates the family's divisibility invariant"
        )
    pair = ConcatSquarePair(x, y, params.block_length)
    if not verify_concat_square(x, y, params.block_length):
        raise RuntimeError(f"generated pair for index {fermat_index}, t={t} failed verification")
    if digit_count(x, 10) != params.block_length:
        raise RuntimeError("x side must fill its digit field exactly")
    return pair


def verify_concat_square(x: int, y: int, block_length: int) -> bool:
    """True exactly when x*10**block_length + y == x**2 + y**2."""
    field = 10**block_length
    if not (0 <= x < field and 0 <= y < field):
        raise ValueError(f"operands must have at most {block_length} digits")
    return x * field + y == x * x + y * y


def reflect_pair(x: int, block_length: int) -> int:
    """The field reflection 10**block_length - x of a pair's left side."""
    field = 10**block_length
    if not 1 <= x < field:
        raise ValueError(f"x must lie in [1, {field}), got {x}")
    return field - x


def vitalis_generate(l: int) -> tuple[int, int, int, int]:
    """The cube-family member with l repeated digits: (x, y, z, concatenation).

    x = 1 followed by l sixes, y = 5 followed by l zeros, z = 3 followed by
    l threes; returns (x, y, z, n) with n the concatenation and the identity
    x**3 + y**3 + z**3 == n checked before returning.
    """
    if l < 0:
        raise ConfigurationError(f"repeat count must be a natural number, got {l}")
    tens = 10**l
    repunit = (tens - 1) // 9
    x = tens + 6 * repunit
    y = 5 * tens
    z = 3 * (10 * repunit + 1)  # repdigit 3 of length l + 1
    width = 10 ** (l + 1)
    n = (x * width + y) * width + z
    if x**3 + y**3 + z**3 != n:
        raise RuntimeError(f"cube family identity failed at l={l}")
    return x, y, z, n


def decimal_str(n: int) -> str:
    """str(n) with CPython's int-to-decimal guard lifted for huge operands."""
    try:
        return str(n)
    except ValueError:
        sys.set_int_max_str_digits(max(digit_count(abs(n), 10) + 10, 640))
        return str(n)


def elide_numeral(n: int, threshold: int = 1000) -> str:
    """Decimal rendering that shortens anything longer than ``threshold`` digits.

    Long numerals print as head...tail with the exact digit count; head and
    tail are extracted arithmetically so no full decimal string is built.
    """
    digits = digit_count(n, 10)
    if digits <= threshold:
        return decimal_str(n)
    head = n // 10 ** (digits - 12)
    tail = n % 10**12
    return f"{head}...{tail:012d} ({digits} digits)"
