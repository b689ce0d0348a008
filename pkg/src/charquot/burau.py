"""The Burau representation of B4 restricted to the free subgroup F = <x, y>.

B4 acts on F by conjugation (x = s1*s3^-1, y = s2*x*s2^-1), inducing every
determinant-1 automorphism of F.  The 3x3 matrices below preserve the
Hermitian form with Gram matrix H relative to the involution q -> q^-1.
The non-inner automorphism x -> x^-1, y -> y is realized on matrices by
``alpha_bar``, conjugation by the real-structure flip J composed with a
correction matrix delta; in the eigenbasis O of X the J-conjugation is
just the entrywise involution.

Words: free letters are +-1 (x) and +-2 (y); braid letters +-1, +-2, +-3.
"""

from __future__ import annotations

from .laurent import LaurentPoly, LocalizedElt, Mat3, Q_PLUS_1, laurent

# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def reduce_word(letters):
    """Freely reduce a sequence of letters (cancel adjacent inverse pairs)."""
    out = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def concat(*words):
    out = []
    for w in words:
        for l in w:
            if out and out[-1] == -l:
                out.pop()
            else:
                out.append(l)
    return tuple(out)


def inverse_word(word):
    return tuple(-l for l in reversed(word))


def word_length(word):
    """Exponent sum; for braid words this is the abelianization B4 -> Z."""
    return sum(1 if l > 0 else -1 for l in word)


def _parse(text, names):
    out = []
    for tok in text.split():
        if "^" in tok:
            head, exp = tok.split("^")
            e = int(exp)
        else:
            head, e = tok, 1
        if head not in names:
            raise ValueError(f"unknown letter {head!r}")
        base = names[head]
        letter = base if e > 0 else -base
        out.extend([letter] * abs(e))
    return tuple(out)


def parse_free_word(text):
    """Parse strings like ``x y x^-2 y^2``."""
    return reduce_word(_parse(text, {"x": 1, "y": 2}))


def parse_braid_word(text):
    """Parse strings like ``s1 s3^-1 s2^2``."""
    return _parse(text, {"s1": 1, "s2": 2, "s3": 3})


def format_word(word, kind="free"):
    names = {1: "x", 2: "y"} if kind == "free" else {1: "s1", 2: "s2", 3: "s3"}
    toks = []
    i = 0
    while i < len(word):
        l = word[i]
        j = i
        while j < len(word) and word[j] == l:
            j += 1
        e = (j - i) if l > 0 else -(j - i)
        name = names[abs(l)]
        toks.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(toks) if toks else "1"


# ---------------------------------------------------------------------------
# the conjugation action xi of B4 on F
# ---------------------------------------------------------------------------

# letter -> (image of x, image of y), with inverses solved from the forward maps
XI_IMAGES = {
    1: ((1,), (2, -1)),          # x -> x,        y -> y x^-1
    -1: ((1,), (2, 1)),          # x -> x,        y -> y x
    2: ((2,), (2, -1, 2)),       # x -> y,        y -> y x^-1 y
    -2: ((1, -2, 1), (1,)),      # x -> x y^-1 x, y -> x
    3: ((1,), (-1, 2)),          # x -> x,        y -> x^-1 y
    -3: ((1,), (1, 2)),          # x -> x,        y -> x y
}


def substitute(word, img_x, img_y):
    table = {1: img_x, -1: inverse_word(img_x),
             2: img_y, -2: inverse_word(img_y)}
    return concat(*(table[l] for l in word))


def xi_letter(braid_letter, word):
    return substitute(word, *XI_IMAGES[braid_letter])


def xi_apply(braid_word, word):
    """Apply the free-group automorphism of the braid word (rightmost letter first)."""
    for l in reversed(braid_word):
        word = xi_letter(l, word)
    return word


def alpha_free(word):
    """The determinant -1 automorphism x -> x^-1, y -> y."""
    return substitute(word, (-1,), (2,))


# ---------------------------------------------------------------------------
# the matrices
# ---------------------------------------------------------------------------

def _m(rows):
    return Mat3([[laurent(x) if isinstance(x, dict) else x for x in row] for row in rows])


S1 = _m([[{1: -1}, 1, 0], [0, 1, 0], [0, 0, 1]])
S2 = _m([[1, 0, 0], [{1: 1}, {1: -1}, 1], [0, 0, 1]])
S3 = _m([[1, 0, 0], [0, 1, 0], [0, {1: 1}, {1: -1}]])

GENERATOR_MATS = {1: S1, 2: S2, 3: S3,
                  -1: S1.inverse(), -2: S2.inverse(), -3: S3.inverse()}

X = S1 * GENERATOR_MATS[-3]
Y = S2 * X * GENERATOR_MATS[-2]
X_INV = X.inverse()
Y_INV = Y.inverse()

H = _m([
    [{1: 1, 0: 2, -1: 1}, {1: -1, 0: -1}, 0],
    [{-1: -1, 0: -1}, {1: 1, 0: 2, -1: 1}, {1: -1, 0: -1}],
    [0, {-1: -1, 0: -1}, {1: 1, 0: 2, -1: 1}],
])

V1 = (LocalizedElt(1), LocalizedElt(Q_PLUS_1), LocalizedElt(laurent({1: 1})))
V2 = (LocalizedElt(1), LocalizedElt(0), LocalizedElt(0))
V3 = (LocalizedElt(0), LocalizedElt(0), LocalizedElt(1))

O = _m([[1, 1, 0], [{1: 1, 0: 1}, 0, 0], [{1: 1}, 0, 1]])
O_INV = O.inverse()

D = Mat3.diagonal(laurent({2: 1, 1: 2, 0: 2, -1: 2, -2: 1}),
                  laurent({1: 1, 0: 2, -1: 1}),
                  laurent({1: 1, 0: 2, -1: 1}))

DELTA = _m([[{-1: 1}, {-2: -1}, 0], [0, {-2: -1}, 0], [0, {-2: -1}, {-3: 1}]])
DELTA_INV = DELTA.inverse()

DET_H_CLOSED_FORM = LocalizedElt(
    Q_PLUS_1 ** 3 * laurent({3: 1, 2: 1, 1: 1, 0: 1}) * laurent({-3: 1}))


def eval_braid(word):
    """Product of the generator images; a homomorphism on braid words."""
    m = Mat3.identity()
    for l in word:
        m = m * GENERATOR_MATS[l]
    return m


FREE_MATS = {1: X, -1: X_INV, 2: Y, -2: Y_INV}


def eval_fword(word):
    """Image of a free word under the determinant-1 restriction to F."""
    m = Mat3.identity()
    for l in word:
        m = m * FREE_MATS[l]
    return m


def alpha_bar(m):
    """The outer automorphism with alpha_bar(X) = X^-1 and alpha_bar(Y) = Y.

    Computed as delta^-1 O conj(O^-1 m O) O^-1 delta: conjugating a linear
    map by the real-structure flip J equals the entrywise involution in the
    eigenbasis O, and delta is the X-centralizing correction.
    """
    return DELTA_INV * (O * (O_INV * m * O).involve() * O_INV) * DELTA


def trace_ad(word):
    """Trace of the conjugation action of the word's image on trace-0 matrices.

    Equals tr(M) * tr(M^-1) - 1; the 8-dimensional computation is kept in
    ``trace_ad_on_basis`` as an independent cross-check.
    """
    m = eval_fword(word)
    val = m.trace() * m.inverse().trace() - 1
    lp = val.as_laurent()
    assert lp is not None, "adjoint trace of a determinant-1 word is a Laurent polynomial"
    return lp


def _sl3_coords(z):
    """Coordinates of a trace-zero matrix against E11-E22, E22-E33, and E_ij."""
    return (z[0, 0], LocalizedElt(0) - z[2, 2],
            z[0, 1], z[0, 2], z[1, 0], z[1, 2], z[2, 0], z[2, 1])


def trace_ad_on_basis(word):
    """Independent route: sum the diagonal of Ad(M) on an explicit sl3 basis."""
    m = eval_fword(word)
    m_inv = m.inverse()
    basis = [
        Mat3.diagonal(1, -1, 0),
        Mat3.diagonal(0, 1, -1),
        _m([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
        _m([[0, 0, 1], [0, 0, 0], [0, 0, 0]]),
        _m([[0, 0, 0], [1, 0, 0], [0, 0, 0]]),
        _m([[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
        _m([[0, 0, 0], [0, 0, 0], [1, 0, 0]]),
        _m([[0, 0, 0], [0, 0, 0], [0, 1, 0]]),
    ]
    total = LocalizedElt(0)
    for i, b in enumerate(basis):
        image = m * b * m_inv
        total = total + _sl3_coords(image)[i]
    lp = total.as_laurent()
    assert lp is not None
    return lp


def scalar_of(m):
    """The scalar lambda if m = lambda * I, else None."""
    lam = m[0, 0]
    if m == Mat3.identity().scale(lam):
        return lam
    return None
