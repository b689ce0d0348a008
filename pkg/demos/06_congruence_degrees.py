"""
Congruence degrees of stabilizers in SL2(Z)
===========================================

The determinant-1 outer automorphisms of F2 form a copy of SL2(Z); the
stabilizer of a surjection class F2 ->> G is a finite-index subgroup.
For abelian G these stabilizers are congruence subgroups (the classical
modular-curve picture); for the small nonsolvable groups they are not
even close: their congruence closure is all of SL2(Z).

The congruence degree is the index of the congruence closure, computed
from Schreier generators of the stabilizer reduced modulo the generalized
level (the lcm of the cusp widths).
"""

from charquot import congruence
from charquot.smallgrp import builtin_group

print("abelian targets: every class is congruence")
for n in (2, 3, 4, 5, 6, 7, 8):
    rep = congruence.congruence_report(builtin_group(f"c{n}"))
    orb = rep["orbits"][0]
    print(f"  Z/{n}: index {orb['index']:3d}  level {orb['level']:2d}  "
          f"degree {orb['degree']:3d}  {orb['verdict']}")

print("\nnonsolvable targets: every class is noncongruence")
for name in ("a5", "psl2_7"):
    rep = congruence.congruence_report(builtin_group(name))
    for orb in rep["orbits"]:
        print(f"  {name}: index {orb['index']:3d}  level {orb['level']:3d}  "
              f"degree {orb['degree']}  {orb['verdict']}")

print("\n(each degree divides its index; S^4 and (ST)^6 act trivially in "
      "every orbit, as they must)")
