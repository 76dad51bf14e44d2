"""
Moments from cumulants, four ways
=================================

Print the first moments as polynomials in formal cumulants for each flavour,
then push the standard Gaussian and semicircle data through.
"""

from fractions import Fraction

from cumulant_kit import moments as mm

N = 4

# symbolic tables: every entry is checked along independent routes before it is printed
for flavor in mm.FLAVORS:
    print(f"-- {flavor}")
    for n, m in enumerate(mm.symbolic_table(flavor, N), start=1):
        print(f"  m{n} = {m.to_string('k')}")

# and back: free cumulants in terms of moments
print("-- free cumulants")
for n, k in enumerate(mm.symbolic_table("free", N, "cumulants"), start=1):
    print(f"  k{n} = {k.to_string('m', ascending=True)}")

# variance one, nothing else: the Gaussian (classical), the semicircle (free),
# the symmetric Bernoulli (boolean) and the arcsine law (monotone)
data = [0, 1, 0, 0, 0, 0]
for flavor in mm.FLAVORS:
    print(f"{flavor:>10}:", [str(Fraction(x)) for x in mm.moments(flavor, data)])

# classical cumulants become free cumulants by summing over "connected" partitions
c = [Fraction(1, 2), 2, -1, 3, 0, 1]
k = mm.free_from_classical(c)
print("classical c  :", [str(x) for x in c])
print("free k       :", [str(x) for x in k])
print("same moments :", mm.classical_moments(c) == mm.free_moments(k))
