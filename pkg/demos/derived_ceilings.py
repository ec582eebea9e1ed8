"""
Why the searches are complete
=============================

Each search family carries a derived ceiling with the inequality trail that
justifies it.  This script prints those derivations.

    python demos/derived_ceilings.py
"""

from digitfix import dudeney_cutoff, hardy_bound, parse_spec, powersum_bound, wells_cutoff

# -- block-summation ceiling ----------------------------------------------------

# An m-block solution n satisfies n <= m * s (s = max image of one block) and
# n >= b^(m-1) (top block nonzero).  The power eventually beats m*s for good.
for fn in ("factorial", "pow:5", "selfpow"):
    report = hardy_bound(parse_spec(fn), 10, 1)
    print(f"{fn}:")
    for line in report.justification:
        print(f"  {line}")
    print()

# -- count-of-digits cutoffs ------------------------------------------------------

# For n to equal the digit count of F(n), F(n) must have exactly n digits.
# Once F(n) provably clears b^n (or drops below b^(n-1)) forever, no more
# fixed points can exist.  The certificates are pure integer arithmetic.
for fn in ("factorial", "selfpow", "subfactorial", "pow:4", "fib"):
    report = wells_cutoff(parse_spec(fn), 10)
    n, lhs, rhs = report.witnesses[0]
    print(f"{fn:13s} no digit-count fixed point at or above {report.cutoff}"
          f"  (witness at n={n})")

# -- sum-of-digits cutoffs ---------------------------------------------------------

# digit_sum(F(n)) can reach at most 9 per digit of F(n), so n = digit_sum(F(n))
# forces n <= 9 * digit_count(F(n)).  For polynomial growth that fails forever
# past a point found exactly.
print()
for fn in ("pow:2", "pow:3", "poly:1,0,0,0"):
    report = dudeney_cutoff(parse_spec(fn), 10)
    print(f"{fn:12s} digit-sum cutoff {report.cutoff}")

bound = powersum_bound(3, 10)
print(f"\npower-sum p=3: any fixed point is s^3 with s <= {bound.s_max}, "
      f"so nothing beyond {bound.s_max ** 3}")
print(f"(the blunt analytic ceiling would be b^(p*p) = {bound.coarse})")
