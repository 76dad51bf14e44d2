"""
Gap insertion, cuts and the refinement coaction
===============================================

A partition of [n] has n + 1 gaps.  Cutting out a lowerset of its blocks
leaves the rest of the partition sitting in those gaps, which is the
coproduct of the gap bialgebra.
"""

from cumulant_kit.bialgebra_gap import delta0, delta_prec, delta_succ
from cumulant_kit.comodule import comodule_sides, rho
from cumulant_kit.gap_operad import compose_full, compose_partial
from cumulant_kit.partitions import I, J, Partition


def word(w):
    return " ".join(str(P) for P in w) or "1"


# insert {{1,2}} between 2 and 3 of {{1,2,3}}
print(compose_partial(I(3), 3, I(2)))
print(compose_full(I(3), [Partition.from_blocks([[1], [2, 3]]), I(2), J(2), I(4)]))

P = Partition.from_blocks([[1, 4], [2, 3], [5]])
print(f"cuts of {P}:")
for (low, gaps), c in delta0((P,)).items():
    print(f"  {c} x {word(low)}  |  {word(gaps)}")

# the two halves split by which side keeps the block of 1
print("prec terms:", len(delta_prec((P,))), " succ terms:", len(delta_succ((P,))))

# the refinement coaction: coarsenings with their fibres
for (w, fib), c in rho(P).items():
    print(f"  rho: {word(w)}  (x)  {word(fib)}")

lhs, rhs = comodule_sides((P,), delta0, True)
print("comodule identity holds on", P, ":", lhs == rhs, f"({len(lhs)} terms)")
