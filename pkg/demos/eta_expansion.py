"""
Expanding eta near t = 1
========================

eta(t) = (1 - t) V (tM - M^T)^{-1} V^T expands in x = (t - 1)(1/t - 1)
with coefficients given by self-linkings of derived curves.
"""

from seifertkit import eta_function, series_of_ratfunc, verify_eta_cochran
from seifertkit.invariants import derived_self_linking

M = [[-1, 1], [0, -1]]
V = [1, 0]

eta = eta_function(M, V)
print("eta        =", eta)
print("series     =", series_of_ratfunc(eta, 10))
print("l_1..l_4   =", derived_self_linking(M, V, 4))

rep = verify_eta_cochran(M, V, 4, order=10)
for line in rep.lines():
    print(line)
