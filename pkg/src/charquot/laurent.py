"""Exact arithmetic in Z[q,q^-1], its localization at (q+1), and 3x3 matrices.

Everything here is immutable and exact: coefficients are Python ints, so
determinants and traces of long word evaluations never overflow.  The ring
carries the involution q -> q^-1 whose fixed subring is Z[q+q^-1]; elements
with denominator (q+1)^k are represented without reducing to lowest terms
(equality is decided by cross-multiplication).
"""

from __future__ import annotations

from .errors import NotAUnit


class LaurentPoly:
    """An element of Z[q,q^-1] as a finitely supported map exponent -> coeff."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self.c = c
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def monomial(coeff, exp=0):
        return LaurentPoly({exp: coeff})

    @staticmethod
    def const(n):
        return LaurentPoly({0: n})

    @staticmethod
    def from_pairs(pairs):
        """Build from (exponent, coefficient) pairs, summing repeats."""
        c = {}
        for e, v in pairs:
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    def to_pairs(self):
        """Canonical serialization: sorted (exponent, coefficient) pairs."""
        return sorted(self.c.items())

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _coerce(other) - self

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only via LocalizedElt/unit inversion")
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LocalizedElt):
            return LocalizedElt(self, 0) == other
        other = _coerce(other)
        return self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.c.items()))
        return self._hash

    def __bool__(self):
        return bool(self.c)

    # -- structure maps -----------------------------------------------

    def involve(self):
        """The involution q -> q^-1 (negates every exponent)."""
        return LaurentPoly({-e: v for e, v in self.c.items()})

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: v for e, v in self.c.items()})

    def subs_value(self, value_of_q, ring):
        """Evaluate at q := value_of_q, a unit of ``ring``.

        ``ring`` must provide mul/add/inv/one/zero on its elements.
        """
        if not self.c:
            return ring.zero_elt()
        lo = min(self.c)
        hi = max(self.c)
        # Horner on q^{-lo} * self, then multiply by value^{lo}.
        acc = ring.zero_elt()
        for e in range(hi, lo - 1, -1):
            acc = ring.mul(acc, value_of_q)
            v = self.c.get(e, 0)
            if v:
                acc = ring.add(acc, ring.of_int(v))
        if lo > 0:
            acc = ring.mul(acc, ring.pow(value_of_q, lo))
        elif lo < 0:
            acc = ring.mul(acc, ring.pow(ring.inv(value_of_q), -lo))
        return acc

    # -- (q+1) divisibility, used by the localization -------------------

    def eval_at_minus_one(self):
        return sum(v if e % 2 == 0 else -v for e, v in self.c.items())

    def divexact_q_plus_1(self):
        """Return self/(q+1) if exact, else None."""
        if not self.c:
            return self
        if self.eval_at_minus_one() != 0:
            return None
        lo = min(self.c)
        hi = max(self.c)
        # Synthetic division of the shifted ordinary polynomial by (q+1).
        quot = {}
        carry = 0
        for e in range(hi, lo - 1, -1):
            carry = self.c.get(e, 0) - carry
            if e > lo:
                quot[e - 1] = carry
        # carry now holds the remainder, zero by the check above.
        return LaurentPoly(quot)

    def unit_decompose(self):
        """Write self as sign * q^a * (q+1)^m, or return None if not of that shape."""
        if not self.c:
            return None
        f = self
        m = 0
        while True:
            g = f.divexact_q_plus_1()
            if g is None:
                break
            f = g
            m += 1
        if len(f.c) != 1:
            return None
        (a, coeff), = f.c.items()
        if coeff not in (1, -1):
            return None
        return coeff, a, m

    # -- rendering ------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render_laurent(self)


def render_laurent(poly):
    """Render as ``c_e*q^e`` terms in decreasing exponent order.

    Examples: ``3*q^2 - q + 5*q^-1``, ``0``, ``-2``.
    """
    if not poly.c:
        return "0"
    parts = []
    for e in sorted(poly.c, reverse=True):
        v = poly.c[e]
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = str(a)
        else:
            qpow = "q" if e == 1 else f"q^{e}"
            body = qpow if a == 1 else f"{a}*{qpow}"
        if not parts:
            parts.append(body if v > 0 else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} into Z[q,q^-1]")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
Q_PLUS_1 = LaurentPoly({1: 1, 0: 1})


def laurent(spec):
    """Convenience constructor: dict {exp: coeff}, int, or LaurentPoly."""
    if isinstance(spec, dict):
        return LaurentPoly(spec)
    return _coerce(spec)


class LocalizedElt:
    """numerator/(q+1)^denom_power in Z[q,q^-1][1/(q+1)].

    Not kept in lowest terms; ``normalize`` strips exact (q+1) factors
    for display and unit detection.
    """

    __slots__ = ("num", "k")

    def __init__(self, num, k=0):
        if isinstance(num, int):
            num = LaurentPoly({0: num})
        if k < 0:
            # fold negative denominator powers back into the numerator
            num = num * Q_PLUS_1 ** (-k)
            k = 0
        self.num = num
        self.k = int(k)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _loc(other)
        k = max(self.k, other.k)
        n = (self.num * Q_PLUS_1 ** (k - self.k)
             + other.num * Q_PLUS_1 ** (k - other.k))
        return LocalizedElt(n, k)

    def __neg__(self):
        return LocalizedElt(-self.num, self.k)

    def __sub__(self, other):
        return self + (-_loc(other))

    def __mul__(self, other):
        other = _loc(other)
        return LocalizedElt(self.num * other.num, self.k + other.k)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _loc(other) - self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return LocalizedElt(self.num ** n, self.k * n)

    def __eq__(self, other):
        other = _loc(other)
        return (self.num * Q_PLUS_1 ** other.k) == (other.num * Q_PLUS_1 ** self.k)

    def __hash__(self):
        return hash(self.normalize_pair())

    def __bool__(self):
        return bool(self.num)

    # -- structure maps ---------------------------------------------------

    def involve(self):
        """q -> q^-1, rewriting (q^-1+1)^k = q^-k (q+1)^k to stay localized."""
        return LocalizedElt(self.num.involve().shift(self.k), self.k)

    def normalize_pair(self):
        """Reduced (num, k) with all exact (q+1) factors divided out."""
        num, k = self.num, self.k
        while k > 0:
            g = num.divexact_q_plus_1()
            if g is None:
                break
            num, k = g, k - 1
        return num, k

    def normalize(self):
        return LocalizedElt(*self.normalize_pair())

    def as_laurent(self):
        """Return the underlying LaurentPoly if the denominator clears, else None."""
        num, k = self.normalize_pair()
        return num if k == 0 else None

    def inverse(self):
        """Inverse of a unit +-q^a (q+1)^b; raises NotAUnit otherwise."""
        dec = self.num.unit_decompose()
        if dec is None:
            raise NotAUnit(f"{self} is not a unit of Z[q,q^-1][1/(q+1)]")
        sign, a, m = dec
        # value = sign * q^a * (q+1)^(m-k); inverse = sign * q^-a * (q+1)^(k-m)
        b = self.k - m
        if b >= 0:
            return LocalizedElt(LaurentPoly({-a: sign}) * Q_PLUS_1 ** b, 0)
        return LocalizedElt(LaurentPoly({-a: sign}), -b)

    def is_unit(self):
        return self.num.unit_decompose() is not None

    def subs_value(self, value_of_q, ring):
        """Evaluate at q := value, requiring (value+1) invertible in ``ring``."""
        v = self.num.subs_value(value_of_q, ring)
        if self.k:
            den = ring.add(value_of_q, ring.one_elt())
            v = ring.mul(v, ring.pow(ring.inv(den), self.k))
        return v

    def __repr__(self):
        num, k = self.normalize_pair()
        if k == 0:
            return str(num)
        return f"({num})/(q+1)^{k}"


def _loc(x):
    if isinstance(x, LocalizedElt):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return LocalizedElt(_coerce(x), 0)
    raise TypeError(f"cannot coerce {type(x).__name__} into the localized ring")


L_ZERO = LocalizedElt(ZERO)
L_ONE = LocalizedElt(ONE)


class Mat3:
    """3x3 matrix over Z[q,q^-1][1/(q+1)], stored as a tuple of 9 entries."""

    __slots__ = ("e",)

    def __init__(self, rows):
        flat = []
        for row in rows:
            for x in row:
                flat.append(_loc(x))
        if len(flat) != 9:
            raise ValueError("Mat3 needs 3 rows of 3 entries")
        self.e = tuple(flat)

    @staticmethod
    def identity():
        return Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @staticmethod
    def diagonal(d0, d1, d2):
        return Mat3([[d0, 0, 0], [0, d1, 0], [0, 0, d2]])

    def __getitem__(self, ij):
        i, j = ij
        return self.e[3 * i + j]

    def rows(self):
        return [[self.e[3 * i + j] for j in range(3)] for i in range(3)]

    def __mul__(self, other):
        if isinstance(other, Mat3):
            a, b = self.e, other.e
            out = []
            for i in range(3):
                for j in range(3):
                    s = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
                    out.append(s)
            m = Mat3.__new__(Mat3)
            m.e = tuple(out)
            return m
        # column vector (length-3 sequence)
        v = [_loc(x) for x in other]
        return tuple(self.e[3 * i] * v[0] + self.e[3 * i + 1] * v[1] + self.e[3 * i + 2] * v[2]
                     for i in range(3))

    def scale(self, c):
        c = _loc(c)
        m = Mat3.__new__(Mat3)
        m.e = tuple(c * x for x in self.e)
        return m

    def __add__(self, other):
        m = Mat3.__new__(Mat3)
        m.e = tuple(x + y for x, y in zip(self.e, other.e))
        return m

    def __sub__(self, other):
        m = Mat3.__new__(Mat3)
        m.e = tuple(x - y for x, y in zip(self.e, other.e))
        return m

    def __eq__(self, other):
        return all(x == y for x, y in zip(self.e, other.e))

    def __hash__(self):
        return hash(tuple(x.normalize_pair() for x in self.e))

    def transpose(self):
        m = Mat3.__new__(Mat3)
        m.e = tuple(self.e[3 * j + i] for i in range(3) for j in range(3))
        return m

    def involve(self):
        """Entrywise q -> q^-1."""
        m = Mat3.__new__(Mat3)
        m.e = tuple(x.involve() for x in self.e)
        return m

    def det(self):
        e = self.e
        return (e[0] * (e[4] * e[8] - e[5] * e[7])
                - e[1] * (e[3] * e[8] - e[5] * e[6])
                + e[2] * (e[3] * e[7] - e[4] * e[6]))

    def trace(self):
        return self.e[0] + self.e[4] + self.e[8]

    def adjugate(self):
        e = self.e
        cof = [
            e[4] * e[8] - e[5] * e[7], -(e[1] * e[8] - e[2] * e[7]), e[1] * e[5] - e[2] * e[4],
            -(e[3] * e[8] - e[5] * e[6]), e[0] * e[8] - e[2] * e[6], -(e[0] * e[5] - e[2] * e[3]),
            e[3] * e[7] - e[4] * e[6], -(e[0] * e[7] - e[1] * e[6]), e[0] * e[4] - e[1] * e[3],
        ]
        m = Mat3.__new__(Mat3)
        m.e = tuple(cof)
        return m

    def inverse(self):
        """Adjugate/determinant; the determinant must be a unit."""
        d_inv = self.det().inverse()
        return self.adjugate().scale(d_inv)

    def power(self, n):
        if n < 0:
            return self.inverse().power(-n)
        out = Mat3.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs_value(self, value_of_q, ring):
        """Entrywise evaluation at q := value, returning a 3x3 tuple of ring elements."""
        return tuple(tuple(self.e[3 * i + j].subs_value(value_of_q, ring) for j in range(3))
                     for i in range(3))

    def __repr__(self):
        rows = self.rows()
        return "Mat3([\n" + "\n".join("  [" + ", ".join(repr(x) for x in row) + "]," for row in rows) + "\n])"
