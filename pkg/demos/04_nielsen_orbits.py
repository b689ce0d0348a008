"""
Nielsen moves on generating pairs of small groups
=================================================

Surjections F2 ->> G up to Aut(G) are generating pairs up to the graph-
subgroup equivalence; the moves r: (a,b) -> (a^-1,b), s: (a,b) -> (b,a),
t: (a,b) -> (a^-1,ab) generate the Aut(F2)-action on classes.  A fixed
class is a characteristic quotient.

A5 is the classical example of a NON-transitive action (two orbits); the
Klein four group shows a genuine fixed class (the mod-2 abelianization);
and none of the small linear/unitary groups below SU3(F_4) has one.
"""

from charquot.smallgrp import builtin_group

for name in ("a5", "v4", "c2", "psl3_2", "psu3_2"):
    g = builtin_group(name)
    s = g.summary()
    print(f"{name} (order {s['order']}):")
    print(f"  generating pairs:        {s['pair_count']}")
    print(f"  classes mod Inn / Aut:   {s['modinn_class_count']} / {s['modaut_class_count']}")
    print(f"  orbits of r, s, t:       {s['orbit_count']}")
    print(f"  fixed classes:           {s['fixed_classes'] or 'none'}\n")

print("orbit sizes for A5:", [len(o) for o in builtin_group("a5").aut_f2_analysis()["orbits"]])
print("(the classical two T-systems of A5)")
