"""Stabilizers in SL2(Z) of surjection classes, their level and congruence degree.

The determinant-1 outer automorphisms of F2 form a copy of SL2(Z) (via the
abelianization), acting on surjection classes mod Inn(G).  The stabilizer
of a class is a finite-index subgroup; its generalized level is the lcm of
the cusp widths (cycle lengths of the T-permutation), its congruence
closure is generated together with the principal congruence subgroup of
that level, and the congruence degree is the index of that closure:

    degree = |SL2(Z/N)| / |image of the stabilizer mod N|

computed from Schreier generators of the stabilizer reduced mod N.  The
stabilizer is congruence exactly when degree equals the orbit size.

Composition convention, fixed once: a braid word acts on a pair through
the inverse automorphism (so that words act on the left), and the word ->
matrix map is then a homomorphism; ``st_words`` finds and verifies braid
words mapping to the standard S and T.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from . import burau
from .errors import LevelTooLarge, SearchFailed

S_MAT = ((0, -1), (1, 0))
T_MAT = ((1, 1), (0, 1))

VERDICT_CONGRUENCE = "Congruence"
VERDICT_NONCONGRUENCE = "Noncongruence"
VERDICT_TOTALLY_NONCONGRUENCE = "TotallyNoncongruence"

DEFAULT_SL2_CAP = 1 << 25

# free-word images (on x, y) of the extra mirror/swap/shear moves
_EXTRA_IMAGES = {
    "r": ((-1,), (2,)),
    "s": ((2,), (1,)),
    "t": ((-1,), (1, 2)),
}


def _letter_images(letter):
    if isinstance(letter, str):
        return _EXTRA_IMAGES[letter]
    return burau.XI_IMAGES[letter]


def abelianize_move(word):
    """2x2 integer matrix of the composed move on Z^2 (columns = images of x, y).

    ``word`` is a sequence of braid letters (+-1, +-2, +-3, acting through
    the conjugation action on F) and/or the symbols "r", "s", "t"; letters
    compose left to right as functions (rightmost applied first).
    """
    return _abelianized_matrix(*move_images(word))


def _abelianized_matrix(img_x, img_y):
    def expvec(w):
        ex = sum(1 if l == 1 else -1 if l == -1 else 0 for l in w)
        ey = sum(1 if l == 2 else -1 if l == -2 else 0 for l in w)
        return (ex, ey)

    cx = expvec(img_x)
    cy = expvec(img_y)
    return ((cx[0], cy[0]), (cx[1], cy[1]))


def _compose_images(outer, inner):
    """(outer o inner): substitute outer's letter images into inner's words."""
    ox, oy = outer
    ix, iy = inner
    return (burau.substitute(ix, ox, oy), burau.substitute(iy, ox, oy))


def move_images(word):
    """Images of (x, y) under the composed move (rightmost letter first)."""
    acc = ((1,), (2,))
    for letter in word:
        acc = _compose_images(acc, _letter_images(letter))
    return acc


def st_words(max_len=8):
    """Braid words whose abelianized action matrices are S and T.

    Bounded breadth-first search over words in the conjugation-action
    letters; raises SearchFailed if the bound is hit (it is not).
    """
    targets = {S_MAT: None, T_MAT: None}
    letters = (1, -1, 2, -2, 3, -3)
    frontier = [()]
    seen = set()
    for _ in range(max_len + 1):
        for w in frontier:
            m = abelianize_move(w)
            if m in targets and targets[m] is None:
                targets[m] = w
        if all(v is not None for v in targets.values()):
            return targets[S_MAT], targets[T_MAT]
        frontier = [w + (l,) for w in frontier for l in letters
                    if (w + (l,)) not in seen and not seen.add(w + (l,))]
    raise SearchFailed(f"no braid words for S, T within length {max_len}")


# -- fixed convention: words act through the inverse automorphism -------------

_ACT_TABLE = {
    # letter -> images of (x, y) under xi(letter)^-1, as free words
    1: ((1,), (2, 1)),
    -1: ((1,), (2, -1)),
    2: ((1, -2, 1), (1,)),
    -2: ((2,), (2, -1, 2)),
    3: ((1,), (1, 2)),
    -3: ((1,), (-1, 2)),
}


def act_letter(group, letter, pair):
    u, v = pair
    wx, wy = _ACT_TABLE[letter]

    def ev(word):
        out = 0  # identity index
        for l in word:
            g = u if abs(l) == 1 else v
            if l < 0:
                g = group.inv_of(g)
            out = group.mult(out, g)
        return out

    return (ev(wx), ev(wy))


def act_word(group, word, pair):
    """Left action of a braid word on a pair of group elements."""
    for letter in reversed(word):
        pair = act_letter(group, letter, pair)
    return pair


# ---------------------------------------------------------------------------
# 2x2 integer / mod-N matrices
# ---------------------------------------------------------------------------

def m2_mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def m2_inv_det1(a):
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def m2_mod(a, n):
    return ((a[0][0] % n, a[0][1] % n), (a[1][0] % n, a[1][1] % n))


IDENT2 = ((1, 0), (0, 1))


def sl2_order_mod(n):
    """|SL2(Z/n)| = n^3 prod_{p | n} (1 - p^-2)."""
    if n == 1:
        return 1
    out = n ** 3
    m = n
    for p in range(2, n + 1):
        if p * p > m:
            break
        if m % p == 0:
            out = out // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
    if m > 1:
        out = out // (m * m) * (m * m - 1)
    return out


def sl2_closure_mod(gens, n, cap=DEFAULT_SL2_CAP):
    """Subgroup of SL2(Z/n) generated by ``gens`` (matrices mod n).

    Generators are absorbed incrementally: ones already inside the closure
    so far cost a membership test only, so large Schreier families stay
    cheap.
    """
    if n == 1:
        return 1
    seen = {IDENT2}
    active = []
    for g in dict.fromkeys(m2_mod(g, n) for g in gens):
        if g in seen:
            continue
        active.append(g)
        active.append(m2_mod(m2_inv_det1(g), n))
        seen.add(g)
        stack = list(seen)
        while stack:
            cur = stack.pop()
            for a in active:
                nxt = m2_mod(m2_mul(cur, a), n)
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise LevelTooLarge(f"SL2(Z/{n}) closure exceeded cap {cap}",
                                            partial=len(seen))
                    seen.add(nxt)
                    stack.append(nxt)
    return len(seen)


# ---------------------------------------------------------------------------
# the class action and its congruence data
# ---------------------------------------------------------------------------

@dataclass
class ClassAction:
    """Orbit of a surjection class under S and T with Schreier data."""

    group: object
    classes: list          # canonical mod-Inn pairs in the orbit (position 0 = base)
    pi_s: tuple            # permutations of orbit positions
    pi_t: tuple
    coset_mats: list       # position -> SL2(Z) matrix mapping the base class there
    coset_words: list      # the same coset representatives as braid words
    word_s: tuple
    word_t: tuple

    @property
    def orbit_size(self):
        return len(self.classes)

    def relations_hold(self):
        n = self.orbit_size
        s, t = self.pi_s, self.pi_t

        def compose(p, q):  # p after q
            return tuple(p[q[i]] for i in range(n))

        s2 = compose(s, s)
        s4 = compose(s2, s2)
        st = compose(s, t)
        st6 = st
        for _ in range(5):
            st6 = compose(st6, st)
        ident = tuple(range(n))
        return s4 == ident and st6 == ident

    def minus_identity_acts_trivially(self):
        n = self.orbit_size
        s = self.pi_s
        return tuple(s[s[i]] for i in range(n)) == tuple(range(n))


def build_class_action(group, base, word_s=None, word_t=None):
    """Orbit of the mod-Inn class of ``base`` under the S and T moves."""
    if word_s is None or word_t is None:
        word_s, word_t = st_words()
    assert abelianize_move(word_s) == S_MAT and abelianize_move(word_t) == T_MAT

    base_c = group.canonical_pair(base)
    classes = [base_c]
    pos = {base_c: 0}
    coset = [IDENT2]
    coset_words = [()]
    moves = [(word_s, S_MAT), (word_t, T_MAT)]
    images = {w: [] for w, _ in moves}
    queue = [0]
    while queue:
        i = queue.pop(0)
        pair = classes[i]
        for w, mat in moves:
            img = group.canonical_pair(act_word(group, w, pair))
            j = pos.get(img)
            if j is None:
                j = len(classes)
                classes.append(img)
                pos[img] = j
                coset.append(m2_mul(mat, coset[i]))
                coset_words.append(w + coset_words[i])
                queue.append(j)
            while len(images[w]) <= i:
                images[w].append(None)
            images[w][i] = j
    n = len(classes)
    pi = {}
    for w, _ in moves:
        col = images[w] + [None] * (n - len(images[w]))
        for i in range(n):
            if col[i] is None:
                col[i] = pos[group.canonical_pair(act_word(group, w, classes[i]))]
        pi[w] = tuple(col)
    return ClassAction(group=group, classes=classes, pi_s=pi[word_s], pi_t=pi[word_t],
                       coset_mats=coset, coset_words=coset_words,
                       word_s=word_s, word_t=word_t)


def schreier_generators(ca):
    """Generators of the stabilizer of the base class, as SL2(Z) matrices."""
    gens = []
    for mat, pi in ((S_MAT, ca.pi_s), (T_MAT, ca.pi_t)):
        for i in range(ca.orbit_size):
            j = pi[i]
            h = m2_mul(m2_inv_det1(ca.coset_mats[j]), m2_mul(mat, ca.coset_mats[i]))
            if h != IDENT2:
                gens.append(h)
    return gens


def schreier_generator_words(ca):
    """The same stabilizer generators as braid words (matching order)."""
    def inv(word):
        return tuple(-l for l in reversed(word))

    words = []
    for word, pi in ((ca.word_s, ca.pi_s), (ca.word_t, ca.pi_t)):
        for i in range(ca.orbit_size):
            j = pi[i]
            h = m2_mul(m2_inv_det1(ca.coset_mats[j]),
                       m2_mul(abelianize_move(word), ca.coset_mats[i]))
            if h != IDENT2:
                words.append(inv(ca.coset_words[j]) + word + ca.coset_words[i])
    return words


def generalized_level(ca):
    """lcm of the cusp widths (cycle lengths of the T-permutation)."""
    n = ca.orbit_size
    seen = [False] * n
    level = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = ca.pi_t[j]
            length += 1
        level = lcm(level, length)
    return level


def congruence_degree(ca, cap=DEFAULT_SL2_CAP):
    """Index, level, congruence degree and verdict for the base stabilizer."""
    index = ca.orbit_size
    level = generalized_level(ca)
    gens = schreier_generators(ca)
    total = sl2_order_mod(level)
    if total > cap:
        raise LevelTooLarge(f"|SL2(Z/{level})| = {total} exceeds cap {cap}")
    image = sl2_closure_mod(gens, level, cap=cap) if level > 1 else 1
    assert total % image == 0
    degree = total // image
    assert index % degree == 0, "congruence degree must divide the index"
    if degree == index:
        verdict = VERDICT_CONGRUENCE
    elif degree == 1 and index > 1:
        verdict = VERDICT_TOTALLY_NONCONGRUENCE
    else:
        verdict = VERDICT_NONCONGRUENCE
    return {
        "index": index,
        "level": level,
        "degree": degree,
        "verdict": verdict,
        "schreier_count": len(gens),
        "relations_ok": ca.relations_hold(),
        "minus_identity_trivial": ca.minus_identity_acts_trivially(),
    }


def congruence_report(group, cap=DEFAULT_SL2_CAP):
    """Per-orbit congruence data covering every surjection class of the group."""
    word_s, word_t = st_words()
    modinn = group.modinn_classes()
    remaining = dict.fromkeys(modinn["reps"])
    orbits = []
    while remaining:
        base = next(iter(remaining))
        ca = build_class_action(group, base, word_s, word_t)
        for c in ca.classes:
            remaining.pop(c, None)
        data = congruence_degree(ca, cap=cap)
        data["base"] = group.element_name(base[0]), group.element_name(base[1])
        orbits.append(data)
    return {
        "group": group.name,
        "order": group.n,
        "modinn_class_count": len(modinn["reps"]),
        "modaut_class_count": len(group.modaut_classes()["reps"]),
        "orbit_count": len(orbits),
        "orbits": orbits,
    }
