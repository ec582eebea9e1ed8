"""Derived search ceilings that make the exhaustive searches provably complete.

Every bound here is established with integer arithmetic only.  Where a real
constant is needed (Stirling's lower bound for the factorial cutoff), a
rational upper approximation is used so the comparison stays exact and the
resulting ceiling stays sound.

Three shapes of result:

* :func:`hardy_bound` - a block-count threshold M and value ceiling for the
  digit-block summation equation, from the geometric-versus-linear growth of
  ``b**(k(m-1))`` against ``m * s_k``.
* :func:`wells_cutoff` / :func:`dudeney_cutoff` - a cutoff N with a recorded
  certificate such that no fixed point exists at or above N.
* :func:`powersum_bound` - coarse ceiling ``b**(p*p)`` plus the largest digit
  sum ``s_max`` any fixed point of n = digitsum(n)**p can have.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digitops import digit_count
from .errors import ConfigurationError, UnsupportedFunctionError
from .funcatalog import FunctionSpec, evaluate, fibonacci, subfactorial

__all__ = [
    "BoundReport",
    "CutoffReport",
    "PowerSumBound",
    "dudeney_cutoff",
    "hardy_bound",
    "powersum_bound",
    "wells_cutoff",
]

# Upper rational bound on e = 2.71828182845904523536...; an over-approximation
# keeps the derived factorial cutoff on the sound side.
_E_HI = Fraction(271828182845904524, 10**17)

# Largest block value table we will enumerate to find max F over a block.
_POLY_MAX_SCAN = 1 << 16


@dataclass(frozen=True)
class BoundReport:
    """A derived ceiling for the block-summation search, with its derivation.

    ``s_k`` is the maximum of F over a single block, ``block_threshold`` the
    least block count M for which ``b**(k(m-1)) > m*s_k`` (so no solution has
    M or more blocks), and ``n_max = (M-1) * s_k`` the inclusive value ceiling.
    """

    s_k: int
    block_threshold: int
    n_max: int
    justification: tuple[str, ...]


@dataclass(frozen=True)
class CutoffReport:
    """A cutoff N: no fixed point of the family exists at or above N.

    ``witnesses`` holds (n, lhs, rhs) triples recorded at the decision
    boundary; their meaning depends on the family (documented at each call
    site).  Method ``analytic`` means a persistence certificate was checked in
    integer arithmetic; ``predicate_scan`` marks a plain windowed scan.
    """

    cutoff: int
    method: str
    witnesses: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class PowerSumBound:
    coarse: int  # the blunt analytic ceiling b**(p*p)
    s_max: int  # largest digit sum any fixed point can have


def _max_over_block(spec: FunctionSpec, radix: int) -> int:
    """Exact max of F over block values 0..radix-1.

    All catalog kinds except polynomials are nondecreasing from x = 2 on, so
    checking 0, 1 and the top value suffices.  Polynomials get a full scan,
    guarded so a huge block width cannot silently take forever.
    """
    if spec.kind == "fibonacci":
        raise UnsupportedFunctionError(
            "fibonacci starts at 1 and has no value for the digit 0; "
            "it cannot be summed over digit blocks"
        )
    if spec.kind == "polynomial":
        if radix > _POLY_MAX_SCAN:
            raise ConfigurationError(
                f"block range {radix} too large to locate a polynomial maximum"
            )
        return max(evaluate(spec, v) for v in range(radix))
    return max(evaluate(spec, 0), evaluate(spec, 1), evaluate(spec, radix - 1))


def hardy_bound(spec: FunctionSpec, base: int, width: int = 1) -> BoundReport:
    """Value ceiling for n = sum of F over the width-``width`` blocks of n.

    An m-block solution satisfies both n <= m*s_k and n >= b**(k(m-1)) (the
    top block is nonzero), so once the power passes m*s_k no solution with
    that many blocks exists.  The predicate persists: b**k >= 2 gives
    b**(km) >= 2*b**(k(m-1)) > 2m*s_k >= (m+1)*s_k for m >= 1.
    """
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    if width < 1:
        raise ConfigurationError(f"block width must be at least 1, got {width}")
    radix = base**width
    s_k = _max_over_block(spec, radix)
    lines = [f"s = max F(v) for v in [0, {radix}) = {s_k}"]
    m = 1
    while radix ** (m - 1) <= m * s_k:
        m += 1
    if m > 1:
        prev = m - 1
        lines.append(
            f"m = {prev}: {radix}^{prev - 1} = {radix ** (prev - 1)}"
            f" <= {prev}*{s_k} = {prev * s_k}"
        )
    lines.append(f"m = {m}: {radix}^{m - 1} = {radix ** (m - 1)} > {m}*{s_k} = {m * s_k}")
    n_max = (m - 1) * s_k
    lines.append(f"no solution has {m} or more blocks; ceiling = {m - 1}*{s_k} = {n_max}")
    return BoundReport(s_k=s_k, block_threshold=m, n_max=n_max, justification=tuple(lines))


# -- count-of-digits fixed points -------------------------------------------


def _wells_witnesses(spec: FunctionSpec, base: int, n: int, side: str):
    # side "ge": F(n) >= b**n holds at n, n+1; side "lt": F(n) < b**(n-1).
    out = []
    for v in (n, n + 1):
        rhs = base**v if side == "ge" else base ** (v - 1)
        out.append((v, evaluate(spec, v), rhs))
    return tuple(out)


def wells_cutoff(spec: FunctionSpec, base: int) -> CutoffReport:
    """Least established N with no n >= N satisfying n = digit_count(F(n)).

    Per kind, one of the two sufficient conditions is certified in integer
    arithmetic: either F(n) >= b**n from N on, or F(n) < b**(n-1) from N on.

    * self_power: n >= b implies n**n >= b**n, so N = b.
    * factorial: n! >= e*(n/e)**n, so n >= e*b implies n! >= b**n; N is the
      least integer above b*e computed against a rational upper bound on e.
    * subfactorial: scan for the least N >= b with !N >= b**N; persistence
      from !(n+1) = n*(!n + !(n-1)) >= n*!n >= b*b**n.
    * exp_base c: c >= b gives N = 1 (first condition holds everywhere);
      c < b scans for b*c**N < b**N, and the factor c/b < 1 persists.
    * fibonacci: two consecutive values below b**(n-1), b**(n-2) persist
      because each step at most doubles and b >= 2.
    * power / polynomial: majorant C*n**d with C the sum of absolute
      coefficient values; once (n+1)**d <= b*n**d (a ratio that only shrinks)
      and C*N**d < b**(N-1), the condition persists by induction.
    """
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    kind = spec.kind

    if kind == "self_power":
        n = base
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "ge"))

    if kind == "factorial":
        n = (base * _E_HI.numerator) // _E_HI.denominator + 1
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "ge"))

    if kind == "subfactorial":
        n = max(base, 2)
        power = base**n
        while subfactorial(n) < power:
            n += 1
            power *= base
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "ge"))

    if kind == "exp_base":
        c = spec.expbase
        if c >= base:
            return CutoffReport(1, "analytic", _wells_witnesses(spec, base, 1, "ge"))
        n = 1
        cn = c
        bn = base
        while base * cn >= bn:  # i.e. c**n >= b**(n-1)
            n += 1
            cn *= c
            bn *= base
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "lt"))

    if kind == "fibonacci":
        n = 2
        while not (
            fibonacci(n) < base ** (n - 1) and fibonacci(n + 1) < base**n
        ):
            n += 1
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "lt"))

    if kind in ("power", "polynomial"):
        if kind == "power":
            degree = spec.exponent
            cmaj = Fraction(1)
        else:
            degree = len(spec.coeffs) - 1
            cmaj = sum(abs(c) for c in spec.coeffs)
        n = 1
        while (n + 1) ** degree > base * n**degree:
            n += 1
        while cmaj * n**degree >= base ** (n - 1):
            n += 1
        return CutoffReport(n, "analytic", _wells_witnesses(spec, base, n, "lt"))

    raise UnsupportedFunctionError(
        f"no count-of-digits cutoff certificate for kind {kind!r}"
    )


# -- sum-of-digits fixed points ----------------------------------------------


def _poly_majorant(spec: FunctionSpec) -> tuple[Fraction, int]:
    """(C, d) with F(n) <= C * n**d for all n >= 1."""
    growth = spec.growth_class
    if growth.kind != "polynomial":
        raise UnsupportedFunctionError(
            f"{spec.text} grows too fast for a digit-sum cutoff; supply a cap"
        )
    if spec.kind == "power":
        return Fraction(1), spec.exponent
    return sum(abs(c) for c in spec.coeffs), len(spec.coeffs) - 1


def _digit_length_threshold(spec: FunctionSpec, base: int) -> int:
    """Smallest power of ``base`` above which n > (b-1)*digit_count(F(n)) always.

    For n of digit length L: n >= b**(L-1) while digit_count(F(n)) is at most
    D(ceil(C)) + d*L, since F(n) <= C*n**d < ceil(C)*b**(d*L).  Once the power
    beats (b-1)*(D_C + d*L) it keeps beating it (doubling per extra digit
    covers the +d on the right).  Returns b**(L0 - 1).
    """
    cmaj, degree = _poly_majorant(spec)
    c_int = -(-cmaj.numerator // cmaj.denominator)  # ceil of the majorant
    d_c = digit_count(max(c_int, 1), base)
    level = 1
    while base ** (level - 1) <= (base - 1) * (d_c + degree * level):
        level += 1
    return base ** (level - 1)


def dudeney_cutoff(spec: FunctionSpec, base: int, window: int = 50) -> CutoffReport:
    """Least N with n > (b-1)*digit_count(F(n)) for every n >= N.

    The inequality is the integer necessary condition for n = digitsum(F(n)):
    the digit sum of F(n) can reach at most (b-1) per digit.  Requires
    polynomial growth; everything above the analytic digit-length threshold is
    certified, and the region below it is scanned exhaustively, so the N
    returned is minimal and sound.  ``window`` successes after N are replayed
    into the witness list as an audit trail.
    """
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    threshold = _digit_length_threshold(spec, base)
    last_fail = 0
    for n in range(1, threshold):
        if n <= (base - 1) * digit_count(evaluate(spec, n), base):
            last_fail = n
    cutoff = last_fail + 1
    witnesses = []
    for n in range(max(1, cutoff - 1), cutoff + max(window, 2)):
        witnesses.append((n, n, (base - 1) * digit_count(evaluate(spec, n), base)))
    return CutoffReport(cutoff, "analytic", tuple(witnesses))


def powersum_bound(p: int, base: int) -> PowerSumBound:
    """Bounds for fixed points of n = digitsum(n)**p.

    ``coarse`` is the blunt analytic ceiling b**(p*p).  Every fixed point is
    s**p for s = digitsum(n), and s must satisfy s <= (b-1)*digit_count(s**p);
    ``s_max`` is the largest such s, found by exhaustive scan below the same
    certified digit-length threshold used for the digit-sum cutoff.  For tiny
    bases s_max**p can exceed ``coarse``; s_max**p is the ceiling that follows
    directly from the digit-count inequality, so searches rely on it.
    """
    if p < 2:
        raise ConfigurationError(f"power-sum exponent must be at least 2, got {p}")
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    spec = FunctionSpec.power(p)
    threshold = _digit_length_threshold(spec, base)
    s_max = 1
    for s in range(1, threshold):
        if s <= (base - 1) * digit_count(s**p, base):
            s_max = s
    return PowerSumBound(coarse=base ** (p * p), s_max=s_max)
