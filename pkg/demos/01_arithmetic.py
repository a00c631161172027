"""
Exact split-octonion arithmetic over a small prime field
=========================================================

The algebra lives on pairs of 2x2 matrices over F_p: coordinates 0-3 are
the matrix part (E11, E12, E21, E22), coordinates 4-7 the same units on
the doubled half.  Everything below is exact integer arithmetic mod p.
"""

from splitoct import Isotope, algebra, double
from splitoct.algebra import field_table, octonion_table, quaternion_table

ctx = algebra(3)

# named elements: the identity, the doubling unit w with w*w = 1, and the
# four matrix units of the 2x2 part
print("1  =", ctx.one)
print("w  =", ctx.w)
print("w*w =", ctx.w * ctx.w)
print("E12 * E21 =", ctx.n0 * ctx.nbar0)
print("E21 * E12 =", ctx.nbar0 * ctx.n0)

# the norm is multiplicative and the involution reverses products
x = ctx.octonion((1, 2, 0, 1, 0, 1, 2, 0))
y = ctx.octonion((0, 1, 1, 1, 2, 0, 0, 1))
print("\nN(x) =", ctx.norm(x.coords), " N(y) =", ctx.norm(y.coords),
      " N(xy) =", ctx.norm((x * y).coords))
print("k(xy) == k(y)k(x):",
      ctx.conj((x * y).coords) == (y.conj() * x.conj()).coords)

# every element satisfies its degree-2 equation  x^2 - tr(x) x + N(x) = 0
sq = x * x
lhs = ctx.subv(sq.coords, ctx.smul(ctx.trace(x.coords), x.coords))
print("x^2 - tr(x)x = -N(x)*1:",
      lhs == ctx.smul(-ctx.norm(x.coords), ctx.one.coords))

# the doubling construction: doubling the split quaternions with mu = -1
# reproduces the split octonions on the nose
doubled = double(quaternion_table(3), -1 % 3)
print("\ndouble(quaternions, -1) == octonions:",
      doubled.struct == octonion_table(3).struct)

# over an odd prime, doubling the base field twice already gives the
# (associative) split quaternions; a third doubling loses associativity
chain = field_table(3)
for step in range(3):
    chain = double(chain, -1 % 3)
    print(f"after {step + 1} doublings: dim {chain.dim}")

# isotopes: twisting the product by two invertible elements keeps a
# (scaled) multiplicative norm and moves the identity
iso = Isotope(ctx, ctx.w.coords, ctx.one.coords)
print("\nisotope neutral element:", iso.neutral)
print("isotope norm scale:", iso.norm_scale)
