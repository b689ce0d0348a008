"""The SL2 character variety of F2 over finite fields, in trace coordinates.

A representation class is the triple (tr A, tr B, tr AB) in F_q^3; the
outer action of the free group's automorphisms is generated by

    r: (x, y, z) -> (x, y, xy - z)
    s: (x, y, z) -> (y, x, z)
    t: (x, y, z) -> (x, z, y)

and V = Z/2 x Z/2 negates two coordinates at a time (the choice of lifts
to SL2 of a representation into PSL2).  Triples on the surface
x^2 + y^2 + z^2 - xyz = 4 are the non-absolutely-irreducible ones.  The
scan below shows that the only V-orbits in F_q^3 fixed by all three
generators are those of (0,0,0) and (2,2,2), and that neither corresponds
to a surjection onto PSL2(F_q), for every field in range: PSL2(F_q) is
never a characteristic quotient of F2.
"""

from __future__ import annotations

import numpy as np

from . import gf
from .errors import CapExceeded

DEFAULT_SCAN_CAP = 1 << 10

VERDICT_NO_PSL2 = "NoCharacteristicPSL2Quotient"


def apply_generator(k, name, triple):
    x, y, z = triple
    if name == "r":
        return (x, y, k.sub(k.mul(x, y), z))
    if name == "s":
        return (y, x, z)
    if name == "t":
        return (x, z, y)
    raise ValueError(f"unknown generator {name!r}")


def on_fricke_surface(k, triple):
    """x^2 + y^2 + z^2 - xyz = 4, the locus of reducible trace triples."""
    x, y, z = triple
    lhs = k.add(k.add(k.mul(x, x), k.mul(y, y)), k.mul(z, z))
    lhs = k.sub(lhs, k.mul(k.mul(x, y), z))
    return lhs == k.of_int(4)


def v_orbit(k, triple):
    x, y, z = triple
    nx, ny, nz = k.neg(x), k.neg(y), k.neg(z)
    return {(x, y, z), (x, ny, nz), (nx, y, nz), (nx, ny, z)}


def canonical_triple(k, triple):
    """Lexicographically least member of the V-orbit (indices as integers)."""
    return min(v_orbit(k, triple))


class _FieldTables:
    def __init__(self, k):
        q = k.q
        self.q = q
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                mul[a, b] = k.mul(a, b)
        self.mul = mul
        self.neg = np.array([k.neg(a) for a in range(q)], dtype=np.int64)
        self.sub = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            self.sub[a] = [k.sub(a, b) for b in range(q)]


def scan_fixed_orbits(q, cap=DEFAULT_SCAN_CAP):
    """Canonical representatives of the V-orbits fixed by all of r, s, t.

    Enumerates the whole cube F_q^3 (vectorized over element indices); the
    expected outcome is exactly the orbits of (0,0,0) and (2,2,2), which
    coincide in characteristic 2.
    """
    if q > cap:
        raise CapExceeded(f"q = {q} exceeds scan cap {cap}")
    k = gf.field(q)
    tb = _FieldTables(k)
    idx = np.arange(q ** 3)
    x = idx // (q * q)
    y = (idx // q) % q
    z = idx % q

    def enc(a, b, c):
        return (a * q + b) * q + c

    # canonical V-orbit representative of every triple
    cands = np.stack([
        enc(x, y, z),
        enc(x, tb.neg[y], tb.neg[z]),
        enc(tb.neg[x], y, tb.neg[z]),
        enc(tb.neg[x], tb.neg[y], z),
    ])
    canon = cands.min(axis=0)

    r_img = enc(x, y, tb.sub[tb.mul[x, y], z])
    s_img = enc(y, x, z)
    t_img = enc(x, z, y)
    fixed = (canon[r_img] == canon) & (canon[s_img] == canon) & (canon[t_img] == canon)

    reps = np.unique(canon[fixed])
    out = []
    for v in reps.tolist():
        out.append((v // (q * q), (v // q) % q, v % q))
    return out


def _trace_zero_pair(k):
    """An SL2(F_q) pair with all three traces zero (odd characteristic)."""
    a_mat = ((0, 1), (k.neg(1), 0))
    minus1 = k.neg(1)
    for a in k.elements():
        b = k.sub(minus1, k.mul(a, a))
        # need a^2 + b^2 = -1
        for bb in k.elements():
            if k.mul(bb, bb) == b:
                m = ((a, bb), (bb, k.neg(a)))
                return a_mat, m
    raise AssertionError("-1 is always a sum of two squares in a finite field")


def _psl2_image_order(k, mats, cap=64):
    """Order of the subgroup of PSL2 generated by the images of ``mats``."""
    from . import matops

    def norm(m):
        # PSL2 representative: first nonzero entry of (m, -m) made canonical
        neg = tuple(tuple(k.neg(x) for x in row) for row in m)
        return min(m, neg)

    ident = norm(matops.identity(k, 2))
    seen = {ident}
    stack = [ident]
    while stack:
        cur = stack.pop()
        for g in mats:
            nxt = norm(matops.mat_mul(k, cur, g))
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"PSL2 image closure exceeded {cap}")
                seen.add(nxt)
                stack.append(nxt)
    return len(seen)


def classify_fixed(q):
    """Why each fixed orbit fails to be a surjection onto PSL2(F_q)."""
    k = gf.field(q)
    fixed = scan_fixed_orbits(q)
    entries = []
    for rep in fixed:
        entry = {"triple": rep, "on_surface": on_fricke_surface(k, rep)}
        if entry["on_surface"]:
            entry["reason"] = "reducible (on the Fricke surface), hence not surjective"
        else:
            # the off-surface fixed orbit is (0,0,0) in odd characteristic
            assert rep == (0, 0, 0)
            a, b = _trace_zero_pair(k)
            order = _psl2_image_order(k, [a, b])
            entry["psl2_image_order"] = order
            entry["reason"] = (f"trace-zero pair generates a group of order {order} "
                               f"in PSL2(F_{q}) (Klein four), hence not surjective")
            assert order <= 4
        entries.append(entry)
    return {"q": q, "fixed_orbits": [list(e["triple"]) for e in entries],
            "surface_flags": [e["on_surface"] for e in entries],
            "details": entries, "verdict": VERDICT_NO_PSL2}


def expected_fixed_orbits(q):
    """The orbits of (0,0,0) and (2,2,2), merged when 2 = 0."""
    k = gf.field(q)
    zero = (0, 0, 0)
    two = tuple([k.of_int(2)] * 3)
    reps = {canonical_triple(k, zero), canonical_triple(k, two)}
    return sorted(reps)
