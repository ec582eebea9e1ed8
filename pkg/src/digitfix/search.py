"""Exhaustive, bound-pruned searches for each digit fixed-point family.

Two interchangeable engines back the block-summation search:

* ``scan`` tests every candidate value up to the derived ceiling.  Block
  F-sums come from a precomputed chunk table so the inner loop is a single
  list comprehension per table span.
* ``multiset`` (width 1 only) enumerates digit multisets per length instead
  of values: a candidate multiset is accepted exactly when the digit multiset
  of its F-sum equals the candidate.  This turns O(b**m) work into
  O(C(m+b-1, b-1)) and makes ten-digit ceilings searchable in seconds.

Every hit re-verifies its defining equation from raw digits when the hit
record is constructed; nothing is trusted from search state.  Output is
sorted ascending and independent of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .bounds import dudeney_cutoff, hardy_bound, powersum_bound, wells_cutoff
from .digitops import BlockVector, digit_count, digit_sum, group_blocks, reverse_digits
from .errors import ConfigurationError
from .funcatalog import FunctionSpec, evaluate

__all__ = [
    "ReversalHit",
    "SearchConfig",
    "SearchHit",
    "armstrong_hit",
    "armstrong_order_ceiling",
    "dudeney_hit",
    "hardy_hit",
    "powersum_hit",
    "reversal_hit",
    "search_armstrong",
    "search_dudeney",
    "search_hardy",
    "search_powersum",
    "search_reversal",
    "search_wells",
    "search_wells_reverse",
    "wells_hit",
    "wells_reverse_hit",
]

_TABLE_SPAN = 1 << 17  # max chunk-table length per (spec, base, width)
_CACHE_SLOTS = 3

# -- result records -----------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a block-summation search."""

    spec: FunctionSpec | None = None
    base: int = 10
    width: int = 1  # digits per block
    engine: str = "scan"  # scan | multiset | preimage
    cap: int | None = None  # hard ceiling overriding the derived bound
    include_zero: bool = False

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ConfigurationError(f"numeral base must be at least 2, got {self.base}")
        if self.width < 1:
            raise ConfigurationError(f"block width must be at least 1, got {self.width}")
        if self.engine not in ("scan", "multiset", "preimage"):
            raise ConfigurationError(f"unknown engine {self.engine!r}")
        if self.cap is not None and self.cap < 1:
            raise ConfigurationError(f"cap must be at least 1, got {self.cap}")


@dataclass(frozen=True)
class SearchHit:
    """A found number plus the decomposition that re-proves it.

    ``images`` holds the intermediate quantities of the family's equation:
    per-block F-values for the summation families, (F(n),) for count- and
    sum-of-digits fixed points, (digitsum(n),) for power-sum fixed points and
    (digit_count(n),) for the reversed count family.
    """

    value: int
    blocks: BlockVector
    images: tuple[int, ...]
    family: str
    fn: str | None


@dataclass(frozen=True)
class ReversalHit:
    """An n that is an integral multiple of its own digit reversal."""

    value: int
    multiplier: int
    reversal: int


def hardy_hit(value: int, base: int, width: int, spec: FunctionSpec) -> SearchHit:
    blocks = group_blocks(value, base, width)
    images = tuple(evaluate(spec, v) for v in blocks.blocks)
    if sum(images) != value:
        raise ValueError(f"{value} does not equal its block image sum {sum(images)}")
    return SearchHit(value, blocks, images, "hardy", spec.text)


def armstrong_hit(value: int, base: int, order: int) -> SearchHit:
    if digit_count(value, base) != order:
        raise ValueError(f"{value} does not have {order} digits in base {base}")
    blocks = group_blocks(value, base, 1)
    images = tuple(d**order for d in blocks.blocks)
    if sum(images) != value:
        raise ValueError(f"{value} is not an order-{order} digit-power sum")
    return SearchHit(value, blocks, images, "armstrong", f"pow:{order}")


def wells_hit(value: int, base: int, spec: FunctionSpec) -> SearchHit:
    image = evaluate(spec, value)
    # value 0 uses the zero-digit reading of zero: a hit exactly when F(0) = 0
    if value == 0:
        if image != 0:
            raise ValueError("0 is a count fixed point only when F(0) = 0")
    elif digit_count(image, base) != value:
        raise ValueError(f"digit_count(F({value})) = {digit_count(image, base)} != {value}")
    return SearchHit(value, group_blocks(value, base, 1), (image,), "wells", spec.text)


def wells_reverse_hit(value: int, base: int, spec: FunctionSpec) -> SearchHit:
    length = 0 if value == 0 else digit_count(value, base)
    if evaluate(spec, length) != value:
        raise ValueError(f"F({length}) does not reproduce {value}")
    return SearchHit(value, group_blocks(value, base, 1), (length,), "wells-reverse", spec.text)


def dudeney_hit(value: int, base: int, spec: FunctionSpec) -> SearchHit:
    image = evaluate(spec, value)
    if digit_sum(image, base) != value:
        raise ValueError(f"digit_sum(F({value})) = {digit_sum(image, base)} != {value}")
    return SearchHit(value, group_blocks(value, base, 1), (image,), "dudeney", spec.text)


def powersum_hit(value: int, base: int, p: int) -> SearchHit:
    s = digit_sum(value, base)
    if s**p != value:
        raise ValueError(f"digit_sum({value})**{p} = {s**p} != {value}")
    return SearchHit(value, group_blocks(value, base, 1), (s,), "powersum", f"pow:{p}")


def reversal_hit(value: int, base: int) -> ReversalHit:
    rev = reverse_digits(value, base)
    if rev == 0 or value % rev != 0:
        raise ValueError(f"{value} is not a multiple of its reversal {rev}")
    lam = value // rev
    if lam < 2:
        raise ValueError(f"{value} needs multiplier >= 2, got {lam}")
    if digit_count(value, base) != digit_count(rev, base):
        raise ValueError(f"{value} and its reversal differ in digit count")
    return ReversalHit(value, lam, rev)


# -- scan engine ---------------------------------------------------------------
#
# The chunk table maps every value below one table span to the F-sum of its
# radix-digits *padded to the full span depth*.  Padding adds F(0) once per
# missing leading block, so sums over the canonical (unpadded) expansion
# subtract that correction for the topmost chunk.

_scan_cache: dict = {}


def _tables(spec: FunctionSpec, base: int, width: int):
    key = (spec, base, width)
    cached = _scan_cache.get(key)
    if cached is not None:
        return cached
    radix = base**width
    f_vals = [evaluate(spec, v) for v in range(radix)]
    table = list(f_vals)
    span = radix
    depth = 1
    while span * radix <= _TABLE_SPAN:
        table = [fh + t for fh in f_vals for t in table]
        span *= radix
        depth += 1
    diff = [t - i for i, t in enumerate(table)]
    entry = (span, depth, radix, table, diff, f_vals[0])
    if len(_scan_cache) >= _CACHE_SLOTS:
        _scan_cache.pop(next(iter(_scan_cache)))
    _scan_cache[key] = entry
    return entry


def _chunk_length(v: int, radix: int) -> int:
    length = 1
    v //= radix
    while v:
        v //= radix
        length += 1
    return length


def _canonical_fsum(v: int, span: int, depth: int, radix: int, table, f0: int) -> int:
    """Block F-sum over the canonical expansion of v >= 1."""
    total = 0
    while True:
        v, r = divmod(v, span)
        if v:
            total += table[r]  # interior chunk: all depth blocks are real
        else:
            return total + table[r] - (depth - _chunk_length(r, radix)) * f0


def _scan_low(lo: int, hi: int, radix: int, depth: int, diff, f0: int, hits) -> None:
    # values below one span; group by block length so the padding correction
    # is constant per band
    band_lo, level = 1, 1
    while band_lo < hi:
        a, b = max(lo, band_lo), min(hi, band_lo * radix)
        if a < b:
            target = (depth - level) * f0
            sub = diff[a:b]
            hits.extend(a + i for i, dv in enumerate(sub) if dv == target)
        band_lo *= radix
        level += 1


def _scan_range(lo: int, hi: int, spec: FunctionSpec, base: int, width: int) -> list[int]:
    """Values n in [lo, hi), lo >= 1, equal to their canonical block F-sum."""
    radix = base**width
    if radix > _TABLE_SPAN:
        return [
            n
            for n in range(lo, hi)
            if sum(evaluate(spec, v) for v in group_blocks(n, base, width).blocks) == n
        ]
    span, depth, radix, table, diff, f0 = _tables(spec, base, width)
    hits: list[int] = []
    for q in range(lo // span, (hi - 1) // span + 1):
        seg_lo, seg_hi = max(lo, q * span), min(hi, (q + 1) * span)
        if q == 0:
            _scan_low(seg_lo, seg_hi, radix, depth, diff, f0, hits)
            continue
        offset = q * span
        target = offset - _canonical_fsum(q, span, depth, radix, table, f0)
        if seg_lo == offset and seg_hi == offset + span:
            hits.extend(offset + i for i, dv in enumerate(diff) if dv == target)
        else:
            sub = diff[seg_lo - offset : seg_hi - offset]
            hits.extend(seg_lo + i for i, dv in enumerate(sub) if dv == target)
    return hits


def _scan_worker(args) -> list[int]:
    return _scan_range(*args)


def _aligned_chunks(lo: int, hi: int, jobs: int, align: int) -> list[tuple[int, int]]:
    step = -(-(hi - lo) // jobs)
    step = -(-step // align) * align
    chunks = []
    a = lo
    while a < hi:
        b = min(hi, a + step)
        chunks.append((a, b))
        a = b
    return chunks


def _run_scan(lo: int, hi: int, spec: FunctionSpec, base: int, width: int, jobs: int) -> list[int]:
    if hi <= lo:
        return []
    if jobs <= 1:
        return _scan_range(lo, hi, spec, base, width)
    radix = base**width
    span = radix
    while span * radix <= _TABLE_SPAN:
        span *= radix
    chunks = _aligned_chunks(lo, hi, jobs, span)
    if len(chunks) == 1:
        return _scan_range(lo, hi, spec, base, width)
    with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
        parts = pool.map(_scan_worker, [(a, b, spec, base, width) for a, b in chunks])
        hits = [v for part in parts for v in part]
    hits.sort()
    return hits


# -- multiset engine -----------------------------------------------------------


def _digits_ascending(n: int, base: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    digs = []
    while n:
        n, r = divmod(n, base)
        digs.append(r)
    digs.sort()
    return tuple(digs)


def _multiset_length(f_vals: list[int], base: int, m: int, cap: int | None) -> list[int]:
    hits = []
    for combo in combinations_with_replacement(range(base), m):
        t = 0
        for d in combo:
            t += f_vals[d]
        if cap is not None and t > cap:
            continue
        if _digits_ascending(t, base) == combo:
            hits.append(t)
    return hits


def _multiset_search(spec: FunctionSpec, base: int, max_len: int, cap: int | None) -> list[int]:
    f_vals = [evaluate(spec, d) for d in range(base)]
    hits = []
    for m in range(1, max_len + 1):
        hits.extend(_multiset_length(f_vals, base, m, cap))
    return hits


# -- family searches -----------------------------------------------------------


def search_hardy(cfg: SearchConfig, jobs: int = 1) -> list[SearchHit]:
    """All n up to the derived ceiling (or cap) equal to the F-sum of their blocks."""
    if cfg.spec is None:
        raise ConfigurationError("a function spec is required")
    if cfg.engine == "preimage":
        raise ConfigurationError("the preimage engine applies to digit-sum searches only")
    if cfg.engine == "multiset" and cfg.width != 1:
        raise ConfigurationError("the multiset engine requires block width 1")
    if cfg.cap is not None:
        ceiling = cfg.cap
        bound = None
    else:
        bound = hardy_bound(cfg.spec, cfg.base, cfg.width)
        ceiling = bound.n_max
    if cfg.engine == "scan":
        values = _run_scan(1, ceiling + 1, cfg.spec, cfg.base, cfg.width, jobs)
    else:
        if bound is None:
            values = _multiset_search(cfg.spec, cfg.base, digit_count(ceiling, cfg.base), ceiling)
        else:
            values = _multiset_search(cfg.spec, cfg.base, bound.block_threshold - 1, None)
        values = [v for v in values if v >= 1]
    if cfg.include_zero and evaluate(cfg.spec, 0) == 0:
        values.append(0)
    values.sort()
    return [hardy_hit(v, cfg.base, cfg.width, cfg.spec) for v in values]


def armstrong_order_ceiling(base: int) -> int:
    """Least order m with base**(m-1) > m*(base-1)**m; no solutions at or above it."""
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    m = 1
    while base ** (m - 1) <= m * (base - 1) ** m:
        m += 1
    return m


def search_armstrong(base: int, max_order: int | None = None) -> list[SearchHit]:
    """All m-digit numbers equal to the sum of the m-th powers of their digits.

    Orders run from 2 up to the derived ceiling (or ``max_order``); order 1 is
    skipped because every single digit fixes itself trivially.  Each order
    reuses the multiset enumeration with F = x**m and an exact length match.
    """
    ceiling = armstrong_order_ceiling(base)
    top = ceiling - 1 if max_order is None else min(max_order, ceiling - 1)
    hits = []
    for order in range(2, top + 1):
        f_vals = [d**order for d in range(base)]
        for value in _multiset_length(f_vals, base, order, None):
            hits.append(armstrong_hit(value, base, order))
    hits.sort(key=lambda h: h.value)
    return hits


def search_wells(
    spec: FunctionSpec, base: int, cap: int | None = None, include_zero: bool = False
) -> list[SearchHit]:
    """All n below the cutoff (or up to cap) with digit_count(F(n)) == n."""
    if cap is None:
        n_hi = wells_cutoff(spec, base).cutoff
    elif cap < 1:
        raise ConfigurationError(f"cap must be at least 1, got {cap}")
    else:
        n_hi = cap + 1
    values = []
    if include_zero and _zero_image(spec) == 0:
        values.append(0)
    power = 1  # base**(n-1), advanced alongside n
    for n in range(1, n_hi):
        fn = evaluate(spec, n)
        if power <= fn < power * base:
            values.append(n)
        power *= base
    return [wells_hit(v, base, spec) for v in values]


def search_wells_reverse(
    spec: FunctionSpec, base: int, cap: int, include_zero: bool = False
) -> list[SearchHit]:
    """All n <= cap with n = F(digit_count(n)).

    At most one candidate exists per digit length, so the cap alone makes the
    search finite: check F(length) for each length the cap admits.
    """
    if cap is None or cap < 1:
        raise ConfigurationError("an explicit cap >= 1 is required")
    values = []
    if include_zero and _zero_image(spec) == 0:
        values.append(0)
    for length in range(1, digit_count(cap, base) + 1):
        v = evaluate(spec, length)
        if v <= cap and digit_count(v, base) == length:
            values.append(v)
    values.sort()
    return [wells_reverse_hit(v, base, spec) for v in values]


def search_dudeney(
    spec: FunctionSpec,
    base: int,
    cap: int | None = None,
    engine: str = "scan",
    include_zero: bool = False,
) -> list[SearchHit]:
    """All n below the cutoff (or up to cap) with digit_sum(F(n)) == n.

    The ``preimage`` engine is the power-kind shortcut: candidates are capped
    by the largest admissible digit sum from :func:`powersum_bound`, which for
    a pure power coincides with the digit-sum cutoff.
    """
    if engine not in ("scan", "preimage"):
        raise ConfigurationError(f"unknown digit-sum engine {engine!r}")
    if engine == "preimage":
        if spec.kind != "power":
            raise ConfigurationError("the preimage engine needs a pure power function")
        n_hi = powersum_bound(spec.exponent, base).s_max + 1
        if cap is not None:
            n_hi = min(n_hi, cap + 1)
    elif cap is not None:
        if cap < 1:
            raise ConfigurationError(f"cap must be at least 1, got {cap}")
        n_hi = cap + 1
    else:
        n_hi = dudeney_cutoff(spec, base).cutoff
    values = []
    if include_zero and _zero_image(spec) == 0:
        values.append(0)
    for n in range(1, n_hi):
        if digit_sum(evaluate(spec, n), base) == n:
            values.append(n)
    return [dudeney_hit(v, base, spec) for v in values]


def _zero_image(spec: FunctionSpec) -> int | None:
    try:
        return evaluate(spec, 0)
    except ValueError:
        return None


_digitsum_cache: dict[int, tuple[int, list[int]]] = {}


def _digitsum_table(base: int) -> tuple[int, list[int]]:
    """Digit sums of every value below one table span.

    Unlike the block F-sum table, no canonical correction is needed: padded
    leading zeros contribute nothing to a digit sum.
    """
    cached = _digitsum_cache.get(base)
    if cached is not None:
        return cached
    table = list(range(base))
    span = base
    while span * base <= _TABLE_SPAN:
        table = [dh + t for dh in range(base) for t in table]
        span *= base
    if len(_digitsum_cache) >= _CACHE_SLOTS:
        _digitsum_cache.pop(next(iter(_digitsum_cache)))
    _digitsum_cache[base] = (span, table)
    return span, table


def _powersum_scan_range(lo: int, hi: int, p: int, base: int, filtered: bool) -> list[int]:
    span, table = _digitsum_table(base)
    mod = base - 1
    residues = None
    if filtered and mod > 1:
        # digit_sum(n) = n (mod b-1), so a fixed point needs n**p = n (mod b-1)
        residues = sorted(r for r in range(mod) if (pow(r, p, mod) - r) % mod == 0)
    hits = []
    for q in range(lo // span, (hi - 1) // span + 1):
        seg_lo, seg_hi = max(lo, q * span), min(hi, (q + 1) * span)
        offset = q * span
        hs = 0
        v = q
        while v:
            v, r = divmod(v, span)
            hs += table[r]
        if residues is None:
            for n in range(seg_lo, seg_hi):
                if (hs + table[n - offset]) ** p == n:
                    hits.append(n)
        else:
            # visit only the admissible residue classes, stepping by mod
            for r0 in residues:
                first = seg_lo + (r0 - seg_lo) % mod
                for n in range(first, seg_hi, mod):
                    if (hs + table[n - offset]) ** p == n:
                        hits.append(n)
    hits.sort()
    return hits


def _powersum_worker(args) -> list[int]:
    return _powersum_scan_range(*args)


def search_powersum(
    p: int,
    base: int,
    engine: str = "preimage",
    cap: int | None = None,
    include_zero: bool = False,
    jobs: int = 1,
    congruence_filter: bool = True,
) -> list[SearchHit]:
    """All n with digit_sum(n)**p == n.

    The preimage engine enumerates candidate digit sums s and keeps s**p when
    its digit sum comes back to s.  The scan engine walks candidate values up
    to s_max**p (or cap): every fixed point is s**p for an admissible s, so
    nothing lies beyond that, and unlike the coarse b**(p*p) ceiling the bound
    follows directly from the digit-count necessary condition even for tiny
    bases.  Both engines return identical hit sets.
    """
    bound = powersum_bound(p, base)
    values = []
    if include_zero:
        values.append(0)  # digit_sum(0)**p == 0 under the canonical zero digit
    if engine == "preimage":
        for s in range(1, bound.s_max + 1):
            n = s**p
            if cap is not None and n > cap:
                break
            if digit_sum(n, base) == s:
                values.append(n)
    elif engine == "scan":
        ceiling = bound.s_max**p
        if cap is not None:
            ceiling = min(ceiling, cap)
        if jobs <= 1:
            values.extend(_powersum_scan_range(1, ceiling + 1, p, base, congruence_filter))
        else:
            chunks = _aligned_chunks(1, ceiling + 1, jobs, 1)
            with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
                parts = pool.map(
                    _powersum_worker, [(a, b, p, base, congruence_filter) for a, b in chunks]
                )
                values.extend(v for part in parts for v in part)
    else:
        raise ConfigurationError(f"unknown power-sum engine {engine!r}")
    values.sort()
    return [powersum_hit(v, base, p) for v in values]


def _reversal_scan_range(lo: int, hi: int, base: int) -> list[tuple[int, int]]:
    found = []
    if base == 10:
        # string reversal is exact and much faster than per-digit divmod here
        for n in range(lo, hi):
            if n % 10 == 0:
                continue
            r = int(str(n)[::-1])
            if r < n and n % r == 0:
                found.append((n, n // r))
    else:
        for n in range(lo, hi):
            if n % base == 0:
                continue
            r = reverse_digits(n, base)
            if r < n and n % r == 0:
                found.append((n, n // r))
    return found


def _reversal_worker(args) -> list[tuple[int, int]]:
    return _reversal_scan_range(*args)


def search_reversal(base: int, num_digits: int, jobs: int = 1) -> list[ReversalHit]:
    """All ``num_digits``-digit n (last digit nonzero) with n a multiple >= 2 of its reversal."""
    if base < 2:
        raise ConfigurationError(f"numeral base must be at least 2, got {base}")
    if num_digits < 2:
        raise ConfigurationError(f"reversal search needs at least 2 digits, got {num_digits}")
    lo, hi = base ** (num_digits - 1), base**num_digits
    if jobs <= 1:
        pairs = _reversal_scan_range(lo, hi, base)
    else:
        chunks = _aligned_chunks(lo, hi, jobs, 1)
        with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
            parts = pool.map(_reversal_worker, [(a, b, base) for a, b in chunks])
            pairs = [pair for part in parts for pair in part]
    pairs.sort()
    return [reversal_hit(n, base) for n, _ in pairs]
