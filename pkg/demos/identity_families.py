"""
Infinite identity families, verified exactly
============================================

Two constructions produce arbitrarily large members of digit identities; every
generated value is re-verified with exact big-integer arithmetic.

    python demos/identity_families.py
"""

from digitfix import piezas_generate, reflect_pair, verify_concat_square, vitalis_generate
from digitfix.families import elide_numeral

# -- concatenated squares: xy = x^2 + y^2 ---------------------------------------

# the two-digit seeds, related by reflecting x in its digit field
print("12^2 + 33^2 =", 12**2 + 33**2, " and 10^2 - 12 =", reflect_pair(12, 2))
print("88^2 + 33^2 =", 88**2 + 33**2)

# the Fermat prime 17 generates an infinite family (block lengths 12, 28, 44...)
for t in (0, 1):
    pair = piezas_generate(2, t)
    print(f"\nt={t}: {pair.x} {pair.y}")
    assert verify_concat_square(pair.x, pair.y, pair.block_length)

# the primes 257 and 65537 work the same way, just bigger; note the y side
# no longer fills its field, so the concatenation pads it with leading zeros
pair = piezas_generate(3, 0)
print(f"\nFermat 257, t=0 (block length {pair.block_length}):")
print("x =", elide_numeral(pair.x, 60))
print("y =", elide_numeral(pair.y, 60))

# the 65537 member has 49152-digit sides; squaring and checking is instant
pair = piezas_generate(4, 0)
print(f"\nFermat 65537, t=0 (block length {pair.block_length}):")
print("x =", elide_numeral(pair.x, 60))
print("y =", elide_numeral(pair.y, 60))
print("identity verified exactly")

# -- the cube family seeded by 153 ----------------------------------------------

print()
for l in range(4):
    x, y, z, n = vitalis_generate(l)
    print(f"{x}^3 + {y}^3 + {z}^3 = {n}")

# it never stops working
x, y, z, n = vitalis_generate(50)
print(f"\nl=50: {elide_numeral(n, 40)} still equals the sum of the three cubes")
