"""
Skew Hadamard seeds
===================

"""

import time

from hadamard_forge import seeds, verify

h = seeds.paley_of_order(7)
print(h.provenance, "order", h.n)
print(h.matrix.entries)
print(verify.is_skew_hadamard(h.matrix).summary())

# doubling: [[S+I, S+I], [S-I, -S+I]]
t0 = time.perf_counter()
h = seeds.paley_of_order(3)
while h.n < 2048:
    h = seeds.skew_double(h)
print(h.provenance)
print(verify.is_skew_hadamard(h.matrix, method="packed").summary(),
      f"({time.perf_counter() - t0:.2f}s including construction)")

# order 36 has no Paley root along any doubling chain
try:
    seeds.skew_provider(36)
except Exception as exc:
    print(type(exc).__name__, exc)

# the provider prefers a direct Paley matrix
for n in (8, 16, 24, 48):
    print(n, seeds.skew_provider(n).provenance)
