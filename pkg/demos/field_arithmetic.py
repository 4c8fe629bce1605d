"""
Arithmetic in GF(2^m)
=====================

Elements are plain integers whose bit i is the coefficient of x^i.
"""

# A field is fixed by its degree and reduction polynomial.
from rserasure import field_preset, inverse, make_field, mul, mul_matrix, mul_ref, power
from rserasure.field import build_z_matrix, is_primitive, xor_cost_estimate

gf16 = make_field(4, "[4,1,0]")
print(gf16)

# Addition is XOR, so every element is its own negative.
print("0x5 + 0x5 =", hex(0x5 ^ 0x5))

# x^3 * x = x^4, which reduces to x + 1 modulo x^4 + x + 1.
print("0x8 * 0x2 =", hex(mul_ref(0x8, 0x2, gf16)))

# The matrix multiplier builds an m-by-m bit matrix Z(A) so that C = Z(A) B.
z = build_z_matrix(0x8, gf16)
print(z.entries)
print("Z(0x8) @ 0x2 =", hex(z.apply(0x2)))

# Every nonzero element has an inverse; x generates the whole group.
print("inverse(0x2) =", hex(inverse(0x2, gf16)), " x^15 =", power(2, 15, gf16))
print("x^4 + x + 1 primitive:", is_primitive(gf16))
print("x^4 + x^3 + x^2 + x + 1 primitive:", is_primitive(make_field(4, "[4,3,2,1,0]")))

# The 32-bit field uses a pentanomial because no primitive trinomial of degree 32 exists.
gf32 = field_preset("gf32")
a, b = 0xDEADBEEF, 0x12345678
print(gf32, hex(mul(a, b, gf32)), mul(a, b, gf32) == mul_matrix(a, b, gf32))

# Denser polynomials need more XOR terms in the combinational multiplier.
for poly in ("[9,4,0]", "[9,4,3,1,0]"):
    rep = xor_cost_estimate(make_field(9, poly))
    print(f"{poly:>14}: {rep.xor_term_count} XOR terms, depth {rep.depth_estimate}")
