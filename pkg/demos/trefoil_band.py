"""
A trefoil with one band
=======================

The smallest interesting input: a genus one surface for the trefoil and a
single extra band whose core links the first symplectic generator once.
"""

from seifertkit import (
    alexander_polynomial,
    alpha,
    conway_knot,
    conway_link,
    pairing,
    taylor_pairing,
    validate,
)

# M is the trefoil's Seifert matrix; V records how the band links p and q
d = validate(1, 1, [[-1, 1], [0, -1]], [[1, 0]], [[0]])

print("Delta_K      =", alexander_polynomial(d.M))
print("nabla_K      =", conway_knot(d.M))
print("nabla_L      =", conway_link(d))

# the linking pairing is a rational function in t
p = pairing(d, 1, 1)
print("p_11         =", p)

# expanded at t = 1 + u it has integer coefficients
print("p_11 series  =", taylor_pairing(d, 1, 1, 8))

# and those coefficients are the alpha invariants, up to sign
print("alpha^0..5   =", [alpha(d, n, 1, 1) for n in range(6)])
