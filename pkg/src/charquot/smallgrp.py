"""Brute-force Nielsen/T-system analysis of surjections from F2 onto small groups.

A PermGroup caches its element list and full Cayley table (numpy uint16),
which makes the three expensive primitives cheap and index-based:

* generation tests (breadth-first closure with early exit past |G|/2),
* conjugacy machinery (classes, witnesses, centralizers, and per-class
  canonical forms of second coordinates under centralizer conjugation,
  which together canonicalize a generating pair modulo inner automorphisms),
* the graph-subgroup trick: two generating pairs are equivalent modulo
  Aut(G) iff the subgroup of G x G generated by the paired-up generators
  has order exactly |G|.  Aut(G) itself is never constructed.

Surjection classes modulo Inn(G) are enumerated with the first coordinate
fixed to one representative per conjugacy class and the second reduced to
centralizer-orbit representatives; raw pair counts are recovered from
class and orbit sizes (cross-checked against full enumeration for small
groups in the tests).

The moves r: (a,b) -> (a^-1, b), s: (a,b) -> (b, a), t: (a,b) -> (a^-1, ab)
generate the relevant outer action on classes; a class forming a singleton
orbit has a characteristic kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import gf
from .errors import CapExceeded

DEFAULT_GROUP_CAP = 10_000

MOD_INN = "inn"
MOD_AUT = "aut"

NIELSEN_MOVES = ("r", "s", "t")


# ---------------------------------------------------------------------------
# permutations and cycle notation
# ---------------------------------------------------------------------------

def perm_from_cycles(degree, cycles):
    """Permutation tuple from 1-based cycles like [(1,2,3),(4,5)]."""
    img = list(range(degree))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            img[a - 1] = b - 1
    return tuple(img)


def parse_cycles(text):
    """Parse cycle notation ``(1,2,3)(4,5)`` (1-based points)."""
    cycles = []
    text = text.strip()
    if text in ("()", "", "e", "id"):
        return []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
            cur = ""
        elif ch == ")":
            depth -= 1
            pts = [int(x) for x in cur.replace(",", " ").split()]
            if len(pts) > 1:
                cycles.append(tuple(pts))
        elif depth:
            cur += ch
    return cycles


def cycles_of(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


def format_cycles(perm):
    cycs = cycles_of(perm)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in cycs)


def _compose(a, b):
    """a * b with b applied first: (a*b)(x) = a[b[x]]."""
    return tuple(a[x] for x in b)


def _perm_order(perm):
    out = 1
    for cyc in cycles_of(perm):
        out = out * len(cyc) // gcd(out, len(cyc))
    return out


# ---------------------------------------------------------------------------
# the cached group
# ---------------------------------------------------------------------------

class PermGroup:
    """A finite permutation group with cached elements and Cayley table."""

    def __init__(self, degree, gens, name="group", cap=DEFAULT_GROUP_CAP):
        self.degree = degree
        self.name = name
        ident = tuple(range(degree))
        gens = [tuple(g) for g in gens]
        for g in gens:
            assert sorted(g) == list(range(degree)), "generator is not a permutation"

        elements = [ident]
        index = {ident: 0}
        links = {}  # element idx -> (parent idx, generator slot)
        queue = [0]
        while queue:
            cur = queue.pop(0)
            cur_perm = elements[cur]
            for slot, g in enumerate(gens):
                new = _compose(cur_perm, g)
                if new not in index:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            f"group order exceeds cap {cap}", partial=len(elements))
                    index[new] = len(elements)
                    elements.append(new)
                    links[index[new]] = (cur, slot)
                    queue.append(index[new])
        self.elements = elements
        self.index = index
        self.n = len(elements)
        self.gen_idx = [index[g] for g in gens]

        self._build_table(links)
        self.inv = np.array([index[self._invert(p)] for p in elements], dtype=np.int64)
        self.orders = np.array([_perm_order(p) for p in elements], dtype=np.int64)
        self._conjugacy()
        self._canon_cache = {}
        self._modinn = None
        self._modaut = None

    @staticmethod
    def _invert(perm):
        out = [0] * len(perm)
        for i, x in enumerate(perm):
            out[x] = i
        return tuple(out)

    def _build_table(self, links):
        n = self.n
        table = np.empty((n, n), dtype=np.uint16 if n < 65536 else np.uint32)
        table[:, 0] = np.arange(n)
        E = np.array(self.elements, dtype=np.int64)
        # bootstrap generator columns by composing every element with the generator
        for gi in dict.fromkeys(self.gen_idx):
            g_arr = np.array(self.elements[gi], dtype=np.int64)
            rows = E[:, g_arr]
            col = np.fromiter((self.index[tuple(r)] for r in rows.tolist()),
                              dtype=np.int64, count=n)
            table[:, gi] = col
        # remaining columns follow the BFS links: col(j) = col(g)[col(parent)]
        for j in range(1, n):
            if j in self.gen_idx:
                continue
            parent, slot = links[j]
            gcol = table[:, self.gen_idx[slot]]
            table[:, j] = gcol[table[:, parent]]
        self.table = table

    # -- elementary ops ----------------------------------------------------

    def mult(self, a, b):
        return int(self.table[a, b])

    def inv_of(self, a):
        return int(self.inv[a])

    def conj_by(self, g, x):
        """g x g^-1."""
        return int(self.table[g, self.table[x, self.inv[g]]])

    def order_of(self, a):
        return int(self.orders[a])

    def element_name(self, a):
        return format_cycles(self.elements[a])

    # -- conjugacy ----------------------------------------------------------

    def _conjugacy(self):
        n = self.n
        conj_maps = []
        for gi in dict.fromkeys(self.gen_idx):
            col = self.table[:, self.inv[gi]]
            conj_maps.append(np.asarray(self.table[gi])[col])
        class_of = np.full(n, -1, dtype=np.int64)
        witness = np.zeros(n, dtype=np.int64)  # witness[y] * rep * witness[y]^-1 = y
        reps = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            cid = len(reps)
            reps.append(x)
            class_of[x] = cid
            witness[x] = 0
            stack = [x]
            while stack:
                y = stack.pop()
                for gi, cmap in zip(dict.fromkeys(self.gen_idx), conj_maps):
                    z = int(cmap[y])
                    if class_of[z] < 0:
                        class_of[z] = cid
                        witness[z] = self.mult(gi, int(witness[y]))
                        stack.append(z)
        self.class_of = class_of
        self.class_reps = reps
        self.witness = witness
        self.classmin = np.array([reps[class_of[x]] for x in range(n)], dtype=np.int64)
        self.class_sizes = np.bincount(class_of, minlength=len(reps))

    def centralizer(self, c):
        mask = self.table[:, c] == np.asarray(self.table[c])
        return np.nonzero(mask)[0]

    def canon_map(self, c):
        """x -> min of the conjugation orbit of x under the centralizer of c."""
        cached = self._canon_cache.get(c)
        if cached is not None:
            return cached
        if c == 0:
            canon = self.classmin
        else:
            cent = self.centralizer(c)
            stack = np.empty((len(cent), self.n), dtype=np.int64)
            for i, z in enumerate(cent):
                col = self.table[:, self.inv[z]]
                stack[i] = np.asarray(self.table[z])[col]
            canon = stack.min(axis=0)
        self._canon_cache[c] = canon
        return canon

    # -- generation ----------------------------------------------------------

    def generates(self, a, b):
        """True iff <a, b> is the whole group (closure with early exit)."""
        n = self.n
        half = n // 2
        T = self.table
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            row = T[x]
            for g in (a, b):
                y = int(row[g])
                if y not in seen:
                    seen.add(y)
                    if len(seen) > half:
                        return True
                    stack.append(y)
        return len(seen) == n

    def generating_pairs(self):
        """All ordered generating pairs, by full enumeration (small groups)."""
        return [(a, b) for a in range(self.n) for b in range(self.n)
                if self.generates(a, b)]

    # -- pairs modulo Inn ------------------------------------------------------

    def canonical_pair(self, pair):
        """Canonical representative of the Inn(G)-orbit of a generating pair."""
        a, b = pair
        c = int(self.classmin[a])
        z = self.inv_of(int(self.witness[a]))
        v = self.conj_by(z, b)
        return (c, int(self.canon_map(c)[v]))

    def modinn_classes(self):
        """Surjection classes mod Inn(G): canonical pairs plus counting data."""
        if self._modinn is not None:
            return self._modinn
        reps = []
        sizes = []
        pair_count = 0
        for cid, c in enumerate(self.class_reps):
            canon = self.canon_map(c)
            orbit_reps, orbit_sizes = np.unique(canon, return_counts=True)
            csize = int(self.class_sizes[cid])
            for r, osize in zip(orbit_reps.tolist(), orbit_sizes.tolist()):
                if self.generates(c, r):
                    reps.append((c, r))
                    sizes.append(csize * osize)
                    pair_count += csize * osize
        self._modinn = {
            "reps": reps,
            "index": {p: i for i, p in enumerate(reps)},
            "orbit_sizes": sizes,
            "pair_count": pair_count,
        }
        return self._modinn

    # -- pairs modulo Aut --------------------------------------------------------

    def pair_invariant(self, pair):
        a, b = pair
        T = self.table
        ab = int(T[a, b])
        o = self.order_of
        comm = int(T[int(T[ab, self.inv[a]]), self.inv[b]])
        return (o(a), o(b), o(ab), o(int(T[a, self.inv[b]])), o(comm),
                o(int(T[a, ab])), o(int(T[ab, b])))

    def pair_isomorphic(self, pa, pb):
        """Does (pa -> pb) extend to an automorphism of the group?

        Both pairs must generate.  Decided by closing the subgroup of G x G
        generated by the paired generators: it is the graph of an
        automorphism iff its order is exactly |G|.
        """
        n = self.n
        T = self.table
        g1 = (pa[0], pb[0])
        g2 = (pa[1], pb[1])
        seen = {0}
        stack = [(0, 0)]
        count = 1
        while stack:
            u, v = stack.pop()
            ru, rv = T[u], T[v]
            for x, y in (g1, g2):
                nu, nv = int(ru[x]), int(rv[y])
                key = nu * n + nv
                if key not in seen:
                    seen.add(key)
                    count += 1
                    if count > n:
                        return False
                    stack.append((nu, nv))
        return count == n

    def pair_conjugate(self, pa, pb):
        """A witness g with g pa g^-1 = pb componentwise, or None."""
        if self.canonical_pair(pa) != self.canonical_pair(pb):
            return None
        a1, a2 = pa
        b1, b2 = pb
        c = int(self.classmin[a1])
        za = self.inv_of(int(self.witness[a1]))   # za a1 za^-1 = c
        zb = int(self.witness[b1])                # zb c zb^-1 = b1
        for z in self.centralizer(c).tolist():
            g = self.mult(zb, self.mult(int(z), za))
            if self.conj_by(g, a1) == b1 and self.conj_by(g, a2) == b2:
                return g
        return None

    def modaut_classes(self):
        """Deduplicate mod-Inn classes under pair_isomorphic (bucketed)."""
        if self._modaut is not None:
            return self._modaut
        modinn = self.modinn_classes()
        buckets = {}
        modaut_reps = []
        inn_to_aut = []
        for p in modinn["reps"]:
            key = self.pair_invariant(p)
            assigned = None
            for aid in buckets.get(key, ()):
                if self.pair_isomorphic(p, modaut_reps[aid]):
                    assigned = aid
                    break
            if assigned is None:
                assigned = len(modaut_reps)
                modaut_reps.append(p)
                buckets.setdefault(key, []).append(assigned)
            inn_to_aut.append(assigned)
        self._modaut = {"reps": modaut_reps, "inn_to_aut": inn_to_aut}
        return self._modaut

    def epi_classes(self, mode=MOD_AUT):
        """Representative pairs of Epi(F2, G) / (Inn or Aut)."""
        if mode == MOD_INN:
            return [EpiClass(self, p, MOD_INN) for p in self.modinn_classes()["reps"]]
        if mode == MOD_AUT:
            return [EpiClass(self, p, MOD_AUT) for p in self.modaut_classes()["reps"]]
        raise ValueError("mode must be 'inn' or 'aut'")

    # -- Nielsen moves and the fixed-class analysis --------------------------------

    def apply_move(self, move, pair):
        a, b = pair
        if move == "r":
            return (self.inv_of(a), b)
        if move == "s":
            return (b, a)
        if move == "t":
            return (self.inv_of(a), self.mult(a, b))
        raise ValueError(f"unknown move {move!r}")

    def nielsen_moves(self, pair):
        return [self.apply_move(m, pair) for m in NIELSEN_MOVES]

    def modaut_id_of_pair(self, pair):
        modinn = self.modinn_classes()
        modaut = self.modaut_classes()
        canon = self.canonical_pair(pair)
        return modaut["inn_to_aut"][modinn["index"][canon]]

    def aut_f2_analysis(self):
        """Orbits of the r, s, t moves on mod-Aut classes; singletons are fixed.

        A fixed class is a surjection whose kernel is a characteristic
        subgroup of F2.
        """
        modaut = self.modaut_classes()
        reps = modaut["reps"]
        move_images = []
        for p in reps:
            move_images.append(tuple(self.modaut_id_of_pair(self.apply_move(m, p))
                                     for m in NIELSEN_MOVES))
        seen = [False] * len(reps)
        orbits = []
        for start in range(len(reps)):
            if seen[start]:
                continue
            orbit = []
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                orbit.append(x)
                for y in move_images[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            orbits.append(sorted(orbit))
        fixed = [reps[o[0]] for o in orbits if len(o) == 1]
        return {
            "orbit_count": len(orbits),
            "orbits": orbits,
            "fixed_classes": [EpiClass(self, p, MOD_AUT) for p in fixed],
        }

    def summary(self):
        modinn = self.modinn_classes()
        modaut = self.modaut_classes()
        analysis = self.aut_f2_analysis()
        return {
            "name": self.name,
            "degree": self.degree,
            "order": self.n,
            "pair_count": modinn["pair_count"],
            "modinn_class_count": len(modinn["reps"]),
            "modaut_class_count": len(modaut["reps"]),
            "orbit_count": analysis["orbit_count"],
            "fixed_classes": [fc.describe() for fc in analysis["fixed_classes"]],
        }

    def __repr__(self):
        return f"PermGroup({self.name}, degree={self.degree}, order={self.n})"


@dataclass
class EpiClass:
    """A surjection class F2 ->> G, up to Inn(G) or Aut(G)."""

    group: PermGroup
    rep: tuple
    mode: str

    def describe(self):
        a, b = self.rep
        return (self.group.element_name(a), self.group.element_name(b))

    def same_class(self, other_pair):
        if self.mode == MOD_INN:
            return self.group.canonical_pair(other_pair) == self.group.canonical_pair(self.rep)
        return self.group.pair_isomorphic(self.rep, other_pair)


# ---------------------------------------------------------------------------
# the group library
# ---------------------------------------------------------------------------

def cyclic(n):
    return PermGroup(n, [perm_from_cycles(n, [tuple(range(1, n + 1))])] if n > 1 else [()],
                     name=f"c{n}") if n > 1 else PermGroup(1, [(0,)], name="c1")


def klein_four():
    return PermGroup(4, [perm_from_cycles(4, [(1, 2), (3, 4)]),
                         perm_from_cycles(4, [(1, 3), (2, 4)])], name="v4")


def alternating(n):
    if n % 2:
        cyc = tuple(range(1, n + 1))
    else:
        cyc = tuple(range(2, n + 1))
    return PermGroup(n, [perm_from_cycles(n, [(1, 2, 3)]), perm_from_cycles(n, [cyc])],
                     name=f"a{n}")


def symmetric(n):
    return PermGroup(n, [perm_from_cycles(n, [(1, 2)]),
                         perm_from_cycles(n, [tuple(range(1, n + 1))])], name=f"s{n}")


def psl2(q):
    """PSL2(q) acting on the projective line (point q is infinity)."""
    k = gf.field(q)
    pts = list(range(q)) + [q]
    z2 = k.mul(k.gen, k.gen)

    def moebius(f):
        return tuple(f(x) for x in pts)

    def t_map(x):
        return q if x == q else k.add(x, 1)

    def d_map(x):
        return q if x == q else k.mul(z2, x)

    def s_map(x):
        if x == q:
            return 0
        if x == 0:
            return q
        return k.neg(k.inv(x))

    g = PermGroup(q + 1, [moebius(t_map), moebius(d_map), moebius(s_map)],
                  name=f"psl2_{q}")
    expect = q * (q * q - 1) // gcd(2, q - 1)
    assert g.n == expect, (g.n, expect)
    return g


def _projective_points(k, vectors):
    """Normalized projective representatives (first nonzero coordinate 1)."""
    seen = []
    for v in vectors:
        lead = next((x for x in v if x != 0), None)
        if lead is None:
            continue
        inv = k.inv(lead)
        norm = tuple(k.mul(inv, x) for x in v)
        if norm not in seen:
            seen.append(norm)
    return seen


def _matrix_perm_group(k, gens, points, apply_vec, name, expect_order):
    idx = {pt: i for i, pt in enumerate(points)}

    def induced(m):
        out = []
        for pt in points:
            img = apply_vec(m, pt)
            lead = next(x for x in img if x != 0)
            inv = k.inv(lead)
            out.append(idx[tuple(k.mul(inv, x) for x in img)])
        return tuple(out)

    g = PermGroup(len(points), [induced(m) for m in gens], name=name)
    assert g.n == expect_order, (g.n, expect_order)
    return g


def psl3(p):
    """PSL3(p) = SL3(p) (p != 1 mod 3) on the projective plane."""
    k = gf.field(p)
    from . import matops
    vectors = [(a, b, c) for a in k.elements() for b in k.elements() for c in k.elements()]
    points = _projective_points(k, vectors)
    a = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    b = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    order = p ** 3 * (p * p - 1) * (p ** 3 - 1) // gcd(3, p - 1)
    return _matrix_perm_group(k, [a, b], points,
                              lambda m, v: matops.mat_vec(k, m, v),
                              f"psl3_{p}", order)


def psu3_2():
    """PSU3(2) = 3^2 : Q8, acting on the nine points of the affine plane over F3."""
    pts = [(x, y) for y in range(3) for x in range(3)]
    idx = {pt: i for i, pt in enumerate(pts)}

    def affine(mat, shift):
        out = []
        for (x, y) in pts:
            nx = (mat[0][0] * x + mat[0][1] * y + shift[0]) % 3
            ny = (mat[1][0] * x + mat[1][1] * y + shift[1]) % 3
            out.append(idx[(nx, ny)])
        return tuple(out)

    ident = ((1, 0), (0, 1))
    i_mat = ((0, -1), (1, 0))
    j_mat = ((1, 1), (1, -1))
    g = PermGroup(9, [affine(ident, (1, 0)), affine(ident, (0, 1)),
                      affine(i_mat, (0, 0)), affine(j_mat, (0, 0))], name="psu3_2")
    assert g.n == 72, g.n
    return g


def psu3_3():
    """PSU3(3) = SU3(3) acting on the 28 isotropic points of the Hermitian form.

    Uses the antidiagonal Gram matrix J, for which the upper unitriangular
    isometries are [[1,a,b],[0,1,-abar],[0,0,1]] with b + bbar = -a*abar;
    together with the Weyl reflection and a torus element these generate.
    """
    from . import matops
    k = gf.field(9)

    def bar(x):
        return k.pow(x, 3)

    def dagger(m):
        return tuple(tuple(bar(m[j][i]) for j in range(3)) for i in range(3))

    j_gram = ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def is_isometry(m):
        return matops.mat_mul(k, matops.mat_mul(k, dagger(m), j_gram), m) == j_gram

    a = 1
    rhs = k.neg(k.mul(a, bar(a)))
    b = next(x for x in k.elements() if k.add(x, bar(x)) == rhs)
    trans = ((1, a, b), (0, 1, k.neg(bar(a))), (0, 0, 1))
    weyl = ((0, 0, 1), (0, k.neg(1), 0), (1, 0, 0))
    g = k.gen
    torus = ((g, 0, 0), (0, k.mul(g, g), 0), (0, 0, k.pow(g, -3)))
    gens = [trans, weyl, torus]
    for m in gens:
        assert is_isometry(m) and matops.det(k, m) == 1

    vectors = [(x, y, z) for x in k.elements() for y in k.elements() for z in k.elements()]

    def h_norm(v):
        x, y, z = v
        return k.add(k.add(k.mul(x, bar(z)), k.mul(y, bar(y))), k.mul(z, bar(x)))

    isotropic = [v for v in vectors if any(v) and h_norm(v) == 0]
    points = _projective_points(k, isotropic)
    assert len(points) == 28, len(points)
    return _matrix_perm_group(k, gens, points,
                              lambda m, v: matops.mat_vec(k, m, v),
                              "psu3_3", 6048)


BUILTIN_GROUPS = {
    **{f"c{n}": (lambda n=n: cyclic(n)) for n in range(1, 13)},
    "v4": klein_four,
    "a5": lambda: alternating(5),
    "a6": lambda: alternating(6),
    "s5": lambda: symmetric(5),
    "psl2_7": lambda: psl2(7),
    "psl2_8": lambda: psl2(8),
    "psl2_11": lambda: psl2(11),
    "psl2_13": lambda: psl2(13),
    "psl3_2": lambda: psl3(2),   # ~ PSL2(7), on the 7 points of the Fano plane
    "psl3_3": lambda: psl3(3),
    "psu3_2": psu3_2,
    "psu3_3": psu3_3,
}

_GROUP_CACHE = {}


def builtin_group(name):
    if name not in BUILTIN_GROUPS:
        raise KeyError(f"unknown group {name!r}; known: {sorted(BUILTIN_GROUPS)}")
    if name not in _GROUP_CACHE:
        _GROUP_CACHE[name] = BUILTIN_GROUPS[name]()
    return _GROUP_CACHE[name]


# ---------------------------------------------------------------------------
# text format: first line the degree, then one generator per line in cycles
# ---------------------------------------------------------------------------

def load_group_file(path, name=None, cap=DEFAULT_GROUP_CAP):
    with open(path) as fh:
        lines = [l.strip() for l in fh if l.strip() and not l.strip().startswith("#")]
    degree = int(lines[0])
    gens = [perm_from_cycles(degree, parse_cycles(l)) for l in lines[1:]]
    return PermGroup(degree, gens, name=name or str(path), cap=cap)


def write_group_file(path, group):
    with open(path, "w") as fh:
        fh.write(f"{group.degree}\n")
        for gi in dict.fromkeys(group.gen_idx):
            fh.write(format_cycles(group.elements[gi]) + "\n")
