"""
Finite fields and conference matrices
=====================================

"""

import numpy as np

from hadamard_forge import field, seeds
from hadamard_forge.matrix import all_ones, identity

# GF(9) is built over the smallest monic irreducible, here x^2 + 1
f9 = field.make_field(3, 2)
print("GF(9) modulus (low coefficient first):", f9.modulus)
print("elements:", f9.elements)

x = f9([0, 1])
print("x * x =", (x * x).index, "which is", f9.elements[(x * x).index])

# the quadratic character: +1 on nonzero squares, -1 elsewhere
print("chi over GF(9):", f9.character_table.tolist())

# C[i, j] = chi(a_j - a_i)
for q in (5, 7, 9):
    c = seeds.conference_of_order(q)
    gram_ok = c.matrix @ c.matrix.T == q * identity(q) - all_ones(q)
    print(f"q={q}: {c.symmetry.value}, circulant={c.circulant}, C C^T = qI - J: {gram_ok}")

print(seeds.conference_of_order(7).matrix.entries)

# Q = C + I has row sums 1
q7 = seeds.q_matrix(seeds.conference_of_order(7))
print("row sums of Q:", np.unique(q7.entries.sum(axis=1)))
