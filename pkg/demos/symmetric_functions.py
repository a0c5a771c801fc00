"""Schur polynomials in loop variables and their constant-term orthonormality."""

from levelzero.qsymbolic import (Laurent, PartitionTuple, RatFunc, gauss_binomial, macdonald_pair, partitions,
                                 schur_product)

q = RatFunc(Laurent.monomial(1))
print("[4 choose 2]_q =", gauss_binomial(4, 2))
print("(q - q^-1)/(q^2 - q^-2) =", (q - q.inverse()) / (q * q - (q * q).inverse()))

shape = {1: 2, 2: 1}
tuples = [PartitionTuple({1: a, 2: b}) for a in partitions(2, 2) for b in partitions(1, 1)]
polys = [schur_product(c, shape) for c in tuples]
for c, p in zip(tuples, polys):
    print(f"s_{c} =", p)
print("Gram matrix of the constant-term pairing:")
for f in polys:
    print("  ", [str(macdonald_pair(f, g, shape)) for g in polys])
