"""Catalog of the digit/argument functions the searches plug in.

A :class:`FunctionSpec` is a small declarative value describing one function
F: N -> N (a power, a self-power, an exponential with fixed base, factorial,
subfactorial, Fibonacci, or a rational-coefficient polynomial).  Evaluation is
exact big-integer arithmetic; each spec also carries growth metadata that the
bounds module uses to decide which finiteness argument applies.

Specs have a canonical text form (``pow:5``, ``selfpow``, ``expbase:4``,
``factorial``, ``subfactorial``, ``fib``, ``poly:1,0,0``) that round-trips
through :func:`parse_spec`.  Polynomial coefficients are listed leading-first,
so ``poly:1,0,0`` is x^2; coefficients may be fractions such as ``1/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import ConfigurationError

__all__ = [
    "FunctionSpec",
    "GrowthClass",
    "evaluate",
    "factorial",
    "fibonacci",
    "parse_spec",
    "subfactorial",
]

_KINDS = (
    "power",
    "self_power",
    "exp_base",
    "factorial",
    "subfactorial",
    "fibonacci",
    "polynomial",
)

# Metadata only; never used in a soundness decision (those are integer-exact).
_GOLDEN_RATIO = (1 + 5**0.5) / 2


@dataclass(frozen=True)
class GrowthClass:
    """How fast a catalog function grows; consumed by the bounds module."""

    kind: str  # polynomial | factorial_like | exponential | self_exponential
    degree: int | None = None  # polynomial only
    ratio: float | int | None = None  # exponential only


@dataclass(frozen=True)
class FunctionSpec:
    kind: str
    exponent: int | None = None  # power: F(x) = x**exponent
    expbase: int | None = None  # exp_base: F(x) = expbase**x
    coeffs: tuple[Fraction, ...] | None = None  # polynomial, leading first
    zero_self_power: int = 1  # value assigned to 0**0 for self_power

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ConfigurationError(f"unknown function kind {self.kind!r}")
        if self.kind == "power" and (self.exponent is None or self.exponent < 1):
            raise ConfigurationError("power exponent must be an integer >= 1")
        if self.kind == "exp_base" and (self.expbase is None or self.expbase < 2):
            raise ConfigurationError("exponential base must be an integer >= 2")
        if self.kind == "polynomial" and not self.coeffs:
            raise ConfigurationError("polynomial needs at least one coefficient")
        if self.zero_self_power not in (0, 1):
            raise ConfigurationError("zero_self_power must be 0 or 1")

    # -- constructors ------------------------------------------------------

    @classmethod
    def power(cls, exponent: int) -> "FunctionSpec":
        return cls("power", exponent=exponent)

    @classmethod
    def self_power(cls, zero_self_power: int = 1) -> "FunctionSpec":
        return cls("self_power", zero_self_power=zero_self_power)

    @classmethod
    def exp_base(cls, base: int) -> "FunctionSpec":
        return cls("exp_base", expbase=base)

    @classmethod
    def factorial(cls) -> "FunctionSpec":
        return cls("factorial")

    @classmethod
    def subfactorial(cls) -> "FunctionSpec":
        return cls("subfactorial")

    @classmethod
    def fibonacci(cls) -> "FunctionSpec":
        return cls("fibonacci")

    @classmethod
    def polynomial(cls, coeffs) -> "FunctionSpec":
        return cls("polynomial", coeffs=tuple(Fraction(c) for c in coeffs))

    # -- presentation ------------------------------------------------------

    @property
    def text(self) -> str:
        """Canonical text form; ``parse_spec(spec.text) == spec``."""
        if self.kind == "power":
            return f"pow:{self.exponent}"
        if self.kind == "self_power":
            return "selfpow"
        if self.kind == "exp_base":
            return f"expbase:{self.expbase}"
        if self.kind == "fibonacci":
            return "fib"
        if self.kind == "polynomial":
            return "poly:" + ",".join(str(c) for c in self.coeffs)
        return self.kind

    def term(self, x: int) -> str:
        """Render one summand F(x) for display, e.g. ``4!`` or ``5^5``."""
        if self.kind == "power":
            return f"{x}^{self.exponent}"
        if self.kind == "self_power":
            return f"{x}^{x}"
        if self.kind == "exp_base":
            return f"{self.expbase}^{x}"
        if self.kind == "factorial":
            return f"{x}!"
        if self.kind == "subfactorial":
            return f"!{x}"
        if self.kind == "fibonacci":
            return f"F({x})"
        return f"p({x})"

    @property
    def growth_class(self) -> GrowthClass:
        # Fixed mapping from kind; the search bounds dispatch on this.
        if self.kind == "power":
            return GrowthClass("polynomial", degree=self.exponent)
        if self.kind == "polynomial":
            return GrowthClass("polynomial", degree=len(self.coeffs) - 1)
        if self.kind in ("factorial", "subfactorial"):
            return GrowthClass("factorial_like")
        if self.kind == "exp_base":
            return GrowthClass("exponential", ratio=self.expbase)
        if self.kind == "fibonacci":
            return GrowthClass("exponential", ratio=_GOLDEN_RATIO)
        return GrowthClass("self_exponential")

    def with_zero_self_power(self, flag: int) -> "FunctionSpec":
        return replace(self, zero_self_power=flag)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)


def parse_spec(text: str) -> FunctionSpec:
    """Parse the canonical spec grammar; anything else raises ConfigurationError."""
    head, sep, arg = text.partition(":")
    try:
        if head == "pow" and sep:
            return FunctionSpec.power(int(arg))
        if head == "expbase" and sep:
            return FunctionSpec.exp_base(int(arg))
        if head == "poly" and sep:
            return FunctionSpec.polynomial(Fraction(part) for part in arg.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigurationError(f"bad function spec {text!r}: {exc}") from exc
    if sep == "":
        if head == "selfpow":
            return FunctionSpec.self_power()
        if head == "factorial":
            return FunctionSpec.factorial()
        if head == "subfactorial":
            return FunctionSpec.subfactorial()
        if head == "fib":
            return FunctionSpec.fibonacci()
    raise ConfigurationError(f"bad function spec {text!r}")


def factorial(x: int) -> int:
    """x! exactly; 0! == 1."""
    if x < 0:
        raise ValueError(f"factorial is defined for x >= 0, got {x}")
    return math.factorial(x)


# Derangement counts, extended on demand.  Appends of idempotent values are
# safe under concurrent readers; results are identical with or without reuse.
_SUBFACT: list[int] = [1, 0]


def subfactorial(x: int) -> int:
    """Derangement count !x via the recurrence !x = (x-1)(!(x-1) + !(x-2)).

    Stays in integer arithmetic throughout; equals the alternating-sum form
    x! * sum((-1)^i / i!) after clearing denominators.
    """
    if x < 0:
        raise ValueError(f"subfactorial is defined for x >= 0, got {x}")
    while len(_SUBFACT) <= x:
        k = len(_SUBFACT)
        _SUBFACT.append((k - 1) * (_SUBFACT[k - 1] + _SUBFACT[k - 2]))
    return _SUBFACT[x]


def _fib_pair(k: int) -> tuple[int, int]:
    """(F(k), F(k+1)) on the 0-indexed ladder F(0)=0, F(1)=1, by fast doubling."""
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if k & 1:
        return d, c + d
    return c, d


def fibonacci(x: int) -> int:
    """Fibonacci number with F(1) == F(2) == 1; x == 0 is out of domain."""
    if x < 1:
        raise ValueError(f"fibonacci is defined for x >= 1, got {x}")
    return _fib_pair(x)[0]


def evaluate(spec: FunctionSpec, x: int) -> int:
    """Exact value of the spec's function at ``x``.

    Raises ValueError when ``x`` lies outside the function's domain or when a
    polynomial leaves the naturals (negative or non-integer result).
    """
    if x < 0:
        raise ValueError(f"catalog functions take naturals, got {x}")
    kind = spec.kind
    if kind == "power":
        return x**spec.exponent
    if kind == "self_power":
        if x == 0:
            return spec.zero_self_power
        return x**x
    if kind == "exp_base":
        return spec.expbase**x
    if kind == "factorial":
        return factorial(x)
    if kind == "subfactorial":
        return subfactorial(x)
    if kind == "fibonacci":
        return fibonacci(x)
    # polynomial: Horner over exact rationals, then demand a natural result
    acc = Fraction(0)
    for c in spec.coeffs:
        acc = acc * x + c
    if acc.denominator != 1 or acc < 0:
        raise ValueError(f"polynomial value {acc} at x={x} is not a natural number")
    return int(acc)
