"""
Polynomials, Groebner bases and radical membership
==================================================

"""

# polynomials live in Q[x1..xN] unless a prime modulus is given
from binedge.polyring import parse_polynomial
from binedge.groebner import Ideal, buchberger, ideal_member, radical_member

f12 = parse_polynomial("x1*x5 - x2*x4", 6)
f13 = parse_polynomial("x1*x6 - x3*x4", 6)
f23 = parse_polynomial("x2*x6 - x3*x5", 6)
I = Ideal([f12, f13, f23])

# the 2x2 minors of a generic 2x3 matrix are already a reduced basis
gb = buchberger(I)
for g in gb.basis:
    print(g)

# normal forms decide ideal membership
print(ideal_member(f12 + f23, I))
print(gb.normal_form(parse_polynomial("x1*x2*x6", 6)))

# two polynomials cannot cut out the 2x2 minors: the third stays outside the radical
J = Ideal([f12, f13 + f23])
res = radical_member(f23, J, max_power=3)
print(res.member, res.exponent, res.method)
