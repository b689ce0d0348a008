"""Specializing the symbolic representation at s in k0.

A specialization substitutes q := t, the distinguished root of
T^2 - sT + 1 over k0, into the matrices of ``burau``.  The kind of the
quadratic algebra decides the fiber: split gives SL3(k0) (componentwise),
inert gives SU3(k0) unless t is a primitive 4th root of unity (degenerate
form), and the ramified case is a non-reductive group we only classify.

``choose_s`` realizes the two order-based recipes: split targets want
ord(-t) = Q - 1 with t in k0, unitary targets want ord(-t) = Q + 1 with t
in the quadratic extension; four small fields use pinned generator powers
(which is why the Conway normalization of Z(q) matters).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import burau, gf, matops
from .errors import BadParameter, Unsupported, WrongKind

TARGET_SL3 = "SL3"
TARGET_SU3 = "SU3"
TARGET_NONREDUCTIVE = "NonReductive"
TARGET_DEGENERATE = "DegenerateForm"

# pinned generator powers: (kind, Q) -> exponent k with t = Z(field)^k,
# the field being GF(Q) for the split entry and GF(Q^2) otherwise
EXPLICIT_T = {
    (TARGET_SL3, 7): ("small", 2),
    (TARGET_SU3, 7): ("big", 6),
    (TARGET_SU3, 8): ("big", 7),
    (TARGET_SU3, 5): ("big", 8),
}


@dataclass
class Specialization:
    """The evaluated matrices over k = k0[T]/(T^2 - sT + 1) and their fiber type."""

    ext: gf.QuadExtension
    s: int
    target: str
    X: tuple
    Y: tuple
    H: tuple
    braid_mats: dict          # +-1, +-2, +-3 -> specialized generator images
    det_h: tuple

    _free_mats: dict = dc_field(default=None, repr=False)

    @property
    def base(self):
        return self.ext.base

    @property
    def t(self):
        return self.ext.t

    def det_h_nonzero(self):
        return self.det_h != self.ext.zero_elt()

    def free_mats(self):
        if self._free_mats is None:
            ext = self.ext
            self._free_mats = {
                1: self.X, -1: matops.mat_inv(ext, self.X),
                2: self.Y, -2: matops.mat_inv(ext, self.Y),
            }
        return self._free_mats

    def eval_fword(self, word):
        mats = self.free_mats()
        m = matops.identity(self.ext)
        for l in word:
            m = matops.mat_mul(self.ext, m, mats[l])
        return m

    def eval_braid(self, word):
        m = matops.identity(self.ext)
        for l in word:
            m = matops.mat_mul(self.ext, m, self.braid_mats[l])
        return m


def specialize(k0, s):
    """Evaluate the representation at q := t for s = t + t^-1 in k0.

    Raises BadParameter at s = -2 (t = -1), where q + 1 fails to be
    invertible and the eigenbasis degenerates.
    """
    if s == k0.of_int(-2):
        raise BadParameter(f"s = -2 over GF({k0.q}): q + 1 is not invertible at t = -1")
    ext = gf.QuadExtension(k0, s)
    t = ext.t

    def ev(m):
        return m.subs_value(t, ext)

    x_spec = ev(burau.X)
    y_spec = ev(burau.Y)
    h_spec = ev(burau.H)
    braid = {l: ev(m) for l, m in burau.GENERATOR_MATS.items()}

    if ext.kind == gf.SPLIT:
        target = TARGET_SL3
    elif ext.kind == gf.RAMIFIED:
        target = TARGET_NONREDUCTIVE
    else:
        t_sq_plus_1 = ext.add(ext.mul(t, t), ext.one_elt())
        target = TARGET_DEGENERATE if t_sq_plus_1 == ext.zero_elt() else TARGET_SU3

    return Specialization(ext=ext, s=s, target=target, X=x_spec, Y=y_spec,
                          H=h_spec, braid_mats=braid, det_h=matops.det(ext, h_spec))


def preserves_form(ext, h, g):
    """g^t H conj(g) = H, membership in the unitary group of the form."""
    lhs = matops.mat_mul(ext, matops.mat_mul(ext, matops.transpose(g), h),
                         matops.mat_conj(ext, g))
    return lhs == h


@dataclass
class ChosenS:
    kind: str
    s: int
    t_order: int          # multiplicative order of -t in the extension
    source: str           # "table" or "recipe"
    q: int


def choose_s(k0, kind):
    """Pick s realizing the requested fiber with the advertised element orders.

    Split case: -t generates k0^x (order Q-1).  Unitary case: t lives in
    the quadratic extension with ord(-t) = Q+1, and s = t + t^Q lands in
    k0.  Four small fields use pinned table entries instead of the generic
    recipe; the remaining small fields are genuinely unsupported.
    """
    q = k0.q
    kind = kind.upper()
    if kind not in (TARGET_SL3, TARGET_SU3):
        raise ValueError("kind must be SL3 or SU3")
    if kind == TARGET_SL3 and q in (2, 3, 4, 5):
        raise Unsupported(f"no split-type generating specialization over GF({q})")
    if kind == TARGET_SU3 and q in (2, 3):
        raise Unsupported(f"no unitary-type generating specialization over GF({q})")

    table = EXPLICIT_T.get((kind, q))
    if table is not None:
        where, exp = table
        source = "table"
        if where == "small":
            t0 = k0.pow(k0.gen, exp)
            s = k0.add(t0, k0.inv(t0))
        else:
            big = gf.field(q * q)
            t_big = big.pow(big.gen, exp)
            s_big = big.add(t_big, big.pow(t_big, q))
            if big.pow(s_big, q) != s_big:
                raise AssertionError("t + t^Q escaped the base field")
            s = gf.subfield_section(big, k0, s_big)
    else:
        source = "recipe"
        if kind == TARGET_SL3:
            t0 = k0.neg(k0.gen)
            s = k0.add(t0, k0.inv(t0))
        else:
            big = gf.field(q * q)
            t_big = big.neg(big.pow(big.gen, q - 1))
            s_big = big.add(t_big, big.pow(t_big, q))
            if big.pow(s_big, q) != s_big:
                raise AssertionError("t' + t'^Q escaped the base field")
            s = gf.subfield_section(big, k0, s_big)

    ext = gf.QuadExtension(k0, s)
    expected_kind = gf.SPLIT if kind == TARGET_SL3 else gf.INERT
    if ext.kind != expected_kind:
        raise AssertionError(f"chosen s = {k0.render(s)} is {ext.kind}, wanted {expected_kind}")
    t = ext.t
    if ext.pow(t, 4) == ext.one_elt():
        raise AssertionError("chosen t has t^4 = 1")
    order = ext.element_order(ext.neg(t))
    want = q - 1 if kind == TARGET_SL3 else q + 1
    if order != want:
        raise AssertionError(f"ord(-t) = {order}, wanted {want}")
    return ChosenS(kind=kind, s=s, t_order=order, source=source, q=q)


def split_components(spec, g):
    """Componentwise images (g1, g2) of g under k ~ k0 x k0 (split case only).

    Verifies the defining relation g1^t H1 g2 = H1, so g1 alone carries the
    group: g2 = H1^-1 g1^-t H1.
    """
    ext = spec.ext if isinstance(spec, Specialization) else spec
    if ext.kind != gf.SPLIT:
        raise WrongKind("componentwise form only exists over a split extension")
    k0 = ext.base
    g1 = tuple(tuple(ext.split_values(x)[0] for x in row) for row in g)
    g2 = tuple(tuple(ext.split_values(x)[1] for x in row) for row in g)
    if isinstance(spec, Specialization):
        h1 = tuple(tuple(ext.split_values(x)[0] for x in row) for row in spec.H)
        lhs = matops.mat_mul(k0, matops.mat_mul(k0, matops.transpose(g1), h1), g2)
        if lhs != h1:
            raise AssertionError("split components do not satisfy g1^t H g2 = H")
    return g1, g2


def split_component_mats(spec):
    """First-component avatars of (X, Y) in SL3(k0)."""
    x1, _ = split_components(spec, spec.X)
    y1, _ = split_components(spec, spec.Y)
    return x1, y1


def check_alpha_bar_spec(spec):
    """True iff the specialized outer automorphism sends X -> X^-1 and Y -> Y."""
    ext = spec.ext
    t = ext.t

    o_spec = burau.O.subs_value(t, ext)
    o_inv_spec = burau.O_INV.subs_value(t, ext)
    d_spec = burau.DELTA.subs_value(t, ext)
    d_inv_spec = burau.DELTA_INV.subs_value(t, ext)

    def ab(m):
        inner = matops.mat_mul(ext, matops.mat_mul(ext, o_inv_spec, m), o_spec)
        inner = matops.mat_conj(ext, inner)
        out = matops.mat_mul(ext, matops.mat_mul(ext, o_spec, inner), o_inv_spec)
        return matops.mat_mul(ext, matops.mat_mul(ext, d_inv_spec, out), d_spec)

    x_ok = ab(spec.X) == matops.mat_inv(ext, spec.X)
    y_ok = ab(spec.Y) == spec.Y
    return x_ok and y_ok


def conway_model_iso(ext):
    """An isomorphism from an inert extension onto the Conway model of GF(q^2).

    Returns (big_field, phi) with phi a ring map sending the canonical root
    t to a root of T^2 - sT + 1 in the Conway model; useful for comparing
    against elements given as powers of Z(q^2).
    """
    if ext.kind != gf.INERT:
        raise WrongKind("only inert extensions embed in a field")
    k0 = ext.base
    big = gf.field(k0.q * k0.q)
    s_big = gf.embed_subfield(k0, big, ext.s)
    roots = [r for r in big.elements()
             if big.add(big.sub(big.mul(r, r), big.mul(s_big, r)), 1) == 0]
    assert len(roots) == 2
    tau = min(roots)

    def phi(u):
        a, b = u
        return big.add(gf.embed_subfield(k0, big, a),
                       big.mul(gf.embed_subfield(k0, big, b), tau))

    return big, phi


def spec_report(spec, alpha_ok=None):
    """JSON-ready summary of a specialization."""
    k0 = spec.base
    ext = spec.ext
    if alpha_ok is None and spec.target in (TARGET_SL3, TARGET_SU3):
        alpha_ok = check_alpha_bar_spec(spec)
    t_order = ext.element_order(ext.t) if ext.is_unit(ext.t) else None
    return {
        "p": k0.p,
        "d": k0.d,
        "s": k0.render(spec.s),
        "kind": ext.kind,
        "t_order": t_order,
        "target": spec.target,
        "alpha_bar_ok": alpha_ok,
        "det_h_nonzero": spec.det_h_nonzero(),
    }
