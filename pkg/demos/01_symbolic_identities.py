"""
The symbolic representation and its exact identities
====================================================

Everything lives over Z[q,q^-1] with the involution q -> q^-1 and, where
needed, the localization at (q+1).  No floating point, no modular tricks:
each identity below is an equality of Laurent polynomials.
"""

from charquot import burau
from charquot.laurent import render_laurent

# the braid generator images and the two free generators x = s1 s3^-1,
# y = s2 x s2^-1
print("rho(x) =")
for row in burau.X.rows():
    print("   ", [repr(e) for e in row])
print("rho(y) =")
for row in burau.Y.rows():
    print("   ", [repr(e) for e in row])

# braid relations hold on the nose
assert burau.eval_braid((1, 2, 1)) == burau.eval_braid((2, 1, 2))
assert burau.eval_braid((1, 3)) == burau.eval_braid((3, 1))
print("\nbraid relations: OK")

# the Hermitian form: H is Hermitian and the generators are isometries
assert burau.H.transpose() == burau.H.involve()
for m in (burau.S1, burau.S2, burau.S3):
    assert m.transpose() * burau.H * m.involve() == burau.H
print("form preserved by every generator: OK")
print("det H =", repr(burau.H.det().normalize()))

# the eigenbasis of X diagonalizes the form
d_mat = burau.O.transpose() * burau.H * burau.O.involve()
assert d_mat == burau.D
print("Gram matrix in the eigenbasis: diag("
      + ", ".join(repr(burau.D[i, i]) for i in range(3)) + ")")

# the mirror automorphism x -> x^-1, y -> y is realized on matrices
assert burau.alpha_bar(burau.X) == burau.X_INV
assert burau.alpha_bar(burau.Y) == burau.Y
print("alpha_bar(X) = X^-1 and alpha_bar(Y) = Y: OK")

# ... but it cannot be inner: it does not preserve traces
w = burau.parse_free_word("x y x^-2 y^2")
t1 = burau.eval_fword(w).trace().as_laurent()
t2 = burau.eval_fword(burau.alpha_free(w)).trace().as_laurent()
print("\ntr rho(x y x^-2 y^2)      =", render_laurent(t1))
print("tr rho(alpha(x y x^-2 y^2)) =", render_laurent(t2))
assert t1 != t2

# adjoint traces pin down q^3 + q^-3
ta = burau.trace_ad((1,))
ta2 = burau.trace_ad((1, 1))
combo = ta * ta - ta2 - 6 * ta
print("\ntr Ad rho(x)  =", render_laurent(ta))
print("tr Ad rho(x^2) =", render_laurent(ta2))
print("(tr Ad x)^2 - tr Ad x^2 - 6 tr Ad x =", render_laurent(combo))
