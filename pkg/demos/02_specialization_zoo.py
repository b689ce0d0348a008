"""
Specializing at s = t + t^-1 over a finite field
================================================

The fiber of the unitary group scheme over s depends on how T^2 - sT + 1
behaves over k0: split gives SL3(k0), inert gives SU3(k0) (unless t is a
primitive 4th root of unity, where the form degenerates), and a double
root gives a non-reductive group.  The value s = -1 (i.e. t a cube root
of unity) walks through all three as p varies mod 3.
"""

from charquot import gf, speckit

print("the cube-root point s = -1 over small prime fields:")
for p in (7, 5, 3):
    k = gf.field(p)
    spec = speckit.specialize(k, k.of_int(-1))
    print(f"  F_{p}: T^2+T+1 is {spec.ext.kind:9s} -> fiber {spec.target}"
          f"   (p = {p % 3} mod 3)")

print("\nfull classification over F_13 (s = -2 excluded: q+1 not invertible):")
k = gf.field(13)
for s in k.elements():
    if s == k.of_int(-2):
        continue
    spec = speckit.specialize(k, s)
    print(f"  s = {k.render(s):9s} {spec.ext.kind:9s} -> {spec.target:14s}"
          f" det h {'nonzero' if spec.det_h_nonzero() else 'ZERO'}")

print("\norder recipes (split wants ord(-t) = Q-1, unitary wants Q+1):")
for kind, qs in (("SL3", (7, 8, 9, 11, 13)), ("SU3", (4, 5, 7, 8, 9, 11))):
    for q in qs:
        k0 = gf.field(q)
        ch = speckit.choose_s(k0, kind)
        print(f"  {kind} over F_{q:<2}: s = {k0.render(ch.s):9s} ord(-t) = {ch.t_order:3d}"
              f"  [{ch.source}]")
