"""
Certifying finite simple characteristic quotients of F2
=======================================================

A certificate has three parts, each verified by exact computation:

1. braid witnesses: the images of x and y transform under conjugation by
   the braid generators exactly as the free-group automorphisms dictate
   (this covers every determinant-1 automorphism of F2);
2. the mirror witness: an explicit matrix automorphism sends X -> X^-1
   and fixes Y (the determinant -1 coset);
3. surjectivity: the breadth-first closure of <X, Y> is counted exactly
   and compared with the classical order formula of SL3/SU3(F_q).

SU3(F_4), of order 62400, is the smallest finite simple group arising
this way.
"""

import time

from charquot import gf, mgroup, speckit

for q, kind in ((4, "SU3"), (5, "SU3"), (7, "SL3"), (7, "SU3")):
    k0 = gf.field(q)
    s = speckit.choose_s(k0, kind).s
    t0 = time.time()
    cert = mgroup.certify_characteristic(k0, s)
    dt = time.time() - t0
    print(f"{kind}(F_{q}): s = {k0.render(s)}")
    print(f"  braid witnesses verified: {cert.braid_ok}")
    print(f"  mirror witness verified:  {cert.alpha_ok}")
    print(f"  closure order = {cert.closure_order:,} "
          f"(target {cert.target_order:,}) in {dt:.1f}s")
    print(f"  verdict: {cert.verdict}\n")

# past the default cap the verdict is honest about what was not computed
k11 = gf.field(11)
cert11 = mgroup.certify_characteristic(k11, speckit.choose_s(k11, "SU3").s)
print(f"SU3(F_11): verdict {cert11.verdict} -- {cert11.note}")
