"""
Derived curves and beta
=======================

Deriving a curve J means cutting the surface with a surface bounded by J.
Repeating after each push-off gives a sequence of classes, and linking the
two families produces the beta invariants.
"""

import random

from seifertkit import Matrix, random_knot_matrix
from seifertkit.derivation import (
    beta,
    beta_via_derivatives,
    iterated_derivative,
    iterated_derivative_recursive,
)

M = Matrix([[-1, 1], [0, -1]])
V = [1, 0]

for n in range(1, 5):
    print(f"D^{n}(J) =", iterated_derivative(M, V, n).rows[0],
          " recursion:", iterated_derivative_recursive(M, V, n).rows[0])

# beta only depends on k + l, with a sign
print([[beta(M, k, l, V, V) for l in range(4)] for k in range(1, 4)])

# %%
# Closed form against the geometric recursion on a random genus 3 surface

rng = random.Random(5)
M3 = random_knot_matrix(rng, 3)
V1 = [rng.randint(-2, 2) for _ in range(6)]
V2 = [rng.randint(-2, 2) for _ in range(6)]
table = [(beta(M3, k, l, V1, V2), beta_via_derivatives(M3, k, l, V1, V2))
         for k in range(1, 4) for l in range(3)]
print(table)
