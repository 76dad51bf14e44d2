"""
The Möbius function on noncrossing partitions
=============================================

On the stick partitions J_n the Möbius function of the noncrossing lattice is
a signed Catalan number.  We get it three ways and compare.
"""

from cumulant_kit import characters as ch
from cumulant_kit.bialgebra_block import lattice_moebius
from cumulant_kit.partitions import I, J, cat, enumerate_noncrossing_partitions

N = 8

inverse = ch.convolution_inverse(ch.to_block(ch.psi_prec(N)))
print(" n  closed  inverse  lattice  (-1)^(n+1) cat_n")
for n in range(1, N + 1):
    row = (ch.psi_prec_inverse_closed(J(n)), inverse((J(n),)), lattice_moebius(J(n), I(n)),
           (-1) ** (n + 1) * cat(n))
    print(f"{n:>2}" + "".join(f"{str(v):>9}" for v in row))

# the whole table in degree 4
mu = ch.moebius(True, 4)
for P in enumerate_noncrossing_partitions(4):
    print(f"mu({P}) = {mu((P,))}")

# the other universal characters have sparse inverses
forms = ch.mixed_inverse_products(5)
for name, form in forms.items():
    support = [str(P) for P in enumerate_noncrossing_partitions(4) if form((P,))]
    print(name, "is nonzero on", len(support), "of 14 partitions of [4]")
