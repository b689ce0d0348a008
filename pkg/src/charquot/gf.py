"""Finite fields GF(p^d), quadratic extensions k0[T]/(T^2-sT+1), and helpers.

Field elements are plain ints: the element with coefficient vector
(c0, c1, ..., c_{d-1}) against the power basis of the modulus root is the
index c0 + c1*p + ... .  For prime fields the index is the residue itself.

Moduli are Conway polynomials, so the designated generator Z matches the
standard normalization (GAP's Z(q)) and explicit elements given as powers
of Z(q) are reproducible bit for bit.  The shipped table is recomputed
from the defining minimality condition by ``tools`` code and cross-checked
in the test suite.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from importlib import resources

from .errors import WrongCharacteristic, ZeroElement

SPLIT = "Split"
INERT = "Inert"
RAMIFIED = "Ramified"

_DLOG_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# integer factorization (trial division + Pollard rho; inputs < 2^64)
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


def is_prime(n):
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    from math import gcd
    x0 = 2
    c = 1
    while True:
        x = y = x0
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n):
    """Prime factorization as a sorted dict prime -> multiplicity."""
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


def multiplicative_order(a, n_order, powfn):
    """Order of ``a`` in a group of exponent ``n_order``; powfn(a, k) -> a^k."""
    order = n_order
    for ell in factorize(n_order):
        while order % ell == 0 and powfn(a, order // ell) == powfn(a, 0):
            order //= ell
    return order


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (little-endian coefficient tuples)
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(tuple(out))


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        a.pop()
    return _ptrim(tuple(a))


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, e, m, p):
    out = (1,)
    a = _pmod(a, m, p)
    while e:
        if e & 1:
            out = _pmulmod(out, a, m, p)
        a = _pmulmod(a, a, m, p)
        e >>= 1
    return out


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def _psub(a, b, p):
    return _padd(a, tuple((-c) % p for c in b), p)


def _is_irreducible(f, p):
    d = len(f) - 1
    if d < 1:
        return False
    x = (0, 1)
    if _psub(_ppowmod(x, p ** d, f, p), x, p) != ():
        return False
    for ell in factorize(d):
        g = _psub(_ppowmod(x, p ** (d // ell), f, p), x, p)
        if len(_pgcd(g, f, p)) - 1 != 0:
            return False
    return True


def _is_primitive(f, p):
    """Root of irreducible f generates GF(p^d)^x."""
    d = len(f) - 1
    q1 = p ** d - 1
    x = (0, 1)
    for ell in factorize(q1):
        if _ppowmod(x, q1 // ell, f, p) == (1,):
            return False
    return True


def _conway_key(f, p):
    d = len(f) - 1
    return tuple((f[i] * (-1) ** (d - i)) % p for i in range(d - 1, -1, -1))


@lru_cache(maxsize=None)
def conway_polynomial(p, d):
    """Conway polynomial of GF(p^d), little-endian monic coefficient tuple.

    Looked up from the shipped table; recomputed from the definition
    (primitive, norm-compatible with all proper subfields, minimal in the
    standard ordering) when absent and p^d <= 2^16.  Beyond that the
    lexicographically least irreducible monic polynomial is used and the
    generator normalization no longer matches the standard tables.
    """
    table = _conway_table()
    if (p, d) in table:
        return table[(p, d)]
    if p ** d <= _DLOG_LIMIT:
        return compute_conway(p, d)
    warnings.warn(
        f"no Conway polynomial for GF({p}^{d}); using the lexicographically "
        f"least irreducible modulus, so Z({p}^{d}) differs from the standard tables")
    return _lex_least_irreducible(p, d)


def compute_conway(p, d):
    """Conway polynomial from the definition (no table lookup)."""
    if d == 1:
        for r in range(2, p):
            if multiplicative_order(r, p - 1, lambda a, k: pow(a, k, p)) == p - 1:
                return ((-r) % p, 1)
        return (1, 1) if p == 2 else None
    q1 = p ** d - 1
    sub = {e: conway_polynomial(p, e) for e in range(1, d) if d % e == 0}
    best = None
    best_key = None
    for idx in range(p ** d):
        tail = []
        m = idx
        for _ in range(d):
            tail.append(m % p)
            m //= p
        f = tuple(tail) + (1,)
        key = _conway_key(f, p)
        if best_key is not None and key >= best_key:
            continue
        if not _is_irreducible(f, p) or not _is_primitive(f, p):
            continue
        ok = True
        for e, fe in sub.items():
            y = _ppowmod((0, 1), q1 // (p ** e - 1), f, p)
            acc = ()
            for c in reversed(fe):
                acc = _pmulmod(acc, y, f, p)
                if c:
                    acc = _padd(acc, (c % p,), p)
            if acc != ():
                ok = False
                break
        if ok:
            best, best_key = f, key
    return best


def _lex_least_irreducible(p, d):
    for idx in range(p ** d):
        tail = []
        m = idx
        for _ in range(d):
            tail.append(m % p)
            m //= p
        f = tuple(tail) + (1,)
        if _is_irreducible(f, p):
            return f
    raise RuntimeError("unreachable: irreducible polynomial always exists")


@lru_cache(maxsize=1)
def _conway_table():
    table = {}
    try:
        text = resources.files("charquot").joinpath("conway.txt").read_text()
    except FileNotFoundError:
        return table
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        nums = [int(x) for x in line.split()]
        p, d, coeffs = nums[0], nums[1], tuple(nums[2:])
        assert len(coeffs) == d + 1 and coeffs[-1] == 1
        table[(p, d)] = coeffs
    return table


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^d) with a designated primitive generator Z (the modulus root)."""

    def __init__(self, p, d=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.d = d
        self.q = p ** d
        self.modulus = tuple(modulus) if modulus else conway_polynomial(p, d)
        if len(self.modulus) != d + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree d")
        if d <= 3:
            if any(self._poly_eval_int(r) == 0 for r in range(p)):
                if d > 1:
                    raise ValueError("modulus is reducible (has a root)")
        elif not _is_irreducible(self.modulus, p):
            raise ValueError("modulus is reducible")
        # x^d = reduction (little-endian, length d)
        self._red = tuple((-c) % p for c in self.modulus[:-1])
        self.gen = (p - self.modulus[0]) % p if d == 1 else p
        self._dlog_cache = None

    def _poly_eval_int(self, r):
        acc = 0
        for c in reversed(self.modulus):
            acc = (acc * r + c) % self.p
        return acc

    # -- element plumbing ------------------------------------------------

    def decode(self, a):
        p, d = self.p, self.d
        out = []
        for _ in range(d):
            out.append(a % p)
            a //= p
        return out

    def encode(self, coeffs):
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + (c % self.p)
        return a

    def elements(self):
        return range(self.q)

    # -- ring protocol (shared with QuadExtension) ------------------------

    def zero_elt(self):
        return 0

    def one_elt(self):
        return 1

    def of_int(self, m):
        return m % self.p

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        ca, cb = self.decode(a), self.decode(b)
        return self.encode([x + y for x, y in zip(ca, cb)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.decode(a)])

    def mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        p, d = self.p, self.d
        ca, cb = self.decode(a), self.decode(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for i, r in enumerate(self._red):
                    prod[k - d + i] += c * r
            prod[k] = 0
        return self.encode(prod[:d])

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible in GF({self.q})")
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def is_square(self, a):
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def element_order(self, a):
        if a == 0:
            raise ZeroElement("order of 0 is undefined")
        return multiplicative_order(a, self.q - 1,
                                    lambda x, k: self.pow(x, k))

    def dlog(self, a):
        """k with Z^k = a, for fields of order <= 2^16."""
        if a == 0:
            raise ZeroElement("dlog of 0 is undefined")
        if self.q > _DLOG_LIMIT:
            raise ValueError(f"dlog table too large for GF({self.q})")
        if self._dlog_cache is None:
            cache = {}
            z, x = self.gen, 1
            for k in range(self.q - 1):
                cache[x] = k
                x = self.mul(x, z)
            self._dlog_cache = cache
        return self._dlog_cache[a]

    def render(self, a):
        """Z(q)^k form when a discrete log is cheap, else the coefficient vector."""
        if a == 0:
            return "0"
        if self.q <= _DLOG_LIMIT:
            k = self.dlog(a)
            if k == 0:
                return "1"
            return f"Z({self.q})" + (f"^{k}" if k != 1 else "")
        return str(tuple(self.decode(a)))

    def parse(self, text):
        """Parse ``Z^k`` / ``Z(q)^k`` / integer expressions into an element."""
        text = text.strip()
        if text.upper().startswith("Z"):
            body = text[1:]
            if body.startswith("(") :
                close = body.index(")")
                if int(body[1:close]) != self.q:
                    raise ValueError(f"generator order mismatch in {text!r}")
                body = body[close + 1:]
            k = int(body[1:]) if body.startswith("^") else 1
            return self.pow(self.gen, k)
        n = int(text)
        return self.of_int(n)

    def __repr__(self):
        return f"GF({self.q})" if self.d > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.d, self.modulus) == (other.p, other.d, other.modulus))

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))


@lru_cache(maxsize=None)
def field(q):
    """The Conway model of GF(q), cached."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, d), = fac.items()
    return FiniteField(p, d)


def embed_subfield(small, big, a):
    """Image of ``a`` under the canonical embedding between Conway models."""
    if big.p != small.p or big.d % small.d:
        raise ValueError("not a subfield")
    if a == 0:
        return 0
    k = small.dlog(a)
    return big.pow(big.gen, k * (big.q - 1) // (small.q - 1))


def subfield_section(big, small, u):
    """Preimage in the small Conway model of a subfield element of the big one."""
    if u == 0:
        return 0
    step = (big.q - 1) // (small.q - 1)
    k = big.dlog(u)
    if k % step:
        raise ValueError("element does not lie in the subfield")
    return small.pow(small.gen, k // step)


# ---------------------------------------------------------------------------
# classification of T^2 - sT + 1 and the quadratic extension
# ---------------------------------------------------------------------------

def absolute_trace(k0, a):
    """Trace to F_2 of an element of a characteristic-2 field."""
    if k0.p != 2:
        raise WrongCharacteristic("absolute_trace is a characteristic-2 device")
    acc, x = 0, a
    for _ in range(k0.d):
        acc = k0.add(acc, x)
        x = k0.mul(x, x)
    return acc


def classify_quadratic(k0, s):
    """Behavior of T^2 - sT + 1 over k0: Split, Inert, or Ramified.

    Odd characteristic reads the discriminant s^2 - 4; characteristic 2
    reads Tr(s^-1), with s = 0 the (inseparable) square case.
    """
    if k0.p == 2:
        if s == 0:
            return RAMIFIED
        return SPLIT if absolute_trace(k0, k0.inv(s)) == 0 else INERT
    disc = k0.sub(k0.mul(s, s), k0.of_int(4))
    if disc == 0:
        return RAMIFIED
    return SPLIT if k0.is_square(disc) else INERT


class QuadExtension:
    """k = k0[T]/(T^2 - sT + 1) with the involution swapping the roots t, t^-1.

    Elements are pairs (a, b) of k0 elements meaning a + b*t.  The same
    coordinates serve all three kinds; only invertibility and the unit
    group exponent differ.  Conjugation is u -> (a + b*s, -b), since the
    other root is s - t.
    """

    def __init__(self, k0, s):
        self.base = k0
        self.s = s
        self.kind = classify_quadratic(k0, s)
        self.q = k0.q * k0.q
        self.t = (0, 1)
        if self.kind == SPLIT:
            roots = [r for r in k0.elements()
                     if k0.add(k0.sub(k0.mul(r, r), k0.mul(s, r)), 1) == 0]
            assert len(roots) == 2
            self.split_roots = tuple(sorted(roots))
        else:
            self.split_roots = None

    # -- ring protocol ----------------------------------------------------

    def zero_elt(self):
        return (0, 0)

    def one_elt(self):
        return (1, 0)

    def of_int(self, m):
        return (self.base.of_int(m), 0)

    def embed_base(self, a):
        return (a, 0)

    def in_base(self, u):
        return u[1] == 0

    def add(self, u, v):
        k0 = self.base
        return (k0.add(u[0], v[0]), k0.add(u[1], v[1]))

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def neg(self, u):
        k0 = self.base
        return (k0.neg(u[0]), k0.neg(u[1]))

    def mul(self, u, v):
        # (a+bt)(c+dt) with t^2 = st - 1
        k0 = self.base
        a, b = u
        c, d = v
        ac = k0.mul(a, c)
        bd = k0.mul(b, d)
        ad_bc = k0.add(k0.mul(a, d), k0.mul(b, c))
        return (k0.sub(ac, bd), k0.add(ad_bc, k0.mul(bd, self.s)))

    def conj(self, u):
        k0 = self.base
        a, b = u
        return (k0.add(a, k0.mul(b, self.s)), k0.neg(b))

    def norm(self, u):
        """u * conj(u), an element of k0."""
        prod = self.mul(u, self.conj(u))
        assert prod[1] == 0
        return prod[0]

    def trace_to_base(self, u):
        tot = self.add(u, self.conj(u))
        assert tot[1] == 0
        return tot[0]

    def is_unit(self, u):
        return self.norm(u) != 0

    def inv(self, u):
        n = self.norm(u)
        if n == 0:
            raise ZeroDivisionError(f"{u} is not a unit (norm 0) in the {self.kind} extension")
        ninv = self.base.inv(n)
        c = self.conj(u)
        return (self.base.mul(c[0], ninv), self.base.mul(c[1], ninv))

    def pow(self, u, n):
        if n < 0:
            u, n = self.inv(u), -n
        out = self.one_elt()
        while n:
            if n & 1:
                out = self.mul(out, u)
            u = self.mul(u, u)
            n >>= 1
        return out

    def unit_group_exponent(self):
        q0 = self.base.q
        if self.kind == SPLIT:
            return q0 - 1
        if self.kind == INERT:
            return q0 * q0 - 1
        e = q0 - 1
        return e * self.base.p

    def element_order(self, u):
        if not self.is_unit(u):
            raise ZeroElement(f"{u} is not a unit")
        return multiplicative_order(u, self.unit_group_exponent(),
                                    lambda x, k: self.pow(x, k))

    # -- coordinates --------------------------------------------------------

    def index(self, u):
        return u[0] + self.base.q * u[1]

    def from_index(self, i):
        return (i % self.base.q, i // self.base.q)

    def split_values(self, u):
        """(value at root t1, value at root t2) under k ~ k0 x k0 (Split only)."""
        from .errors import WrongKind
        if self.kind != SPLIT:
            raise WrongKind("componentwise values only exist in the split case")
        k0 = self.base
        a, b = u
        t1, t2 = self.split_roots
        return (k0.add(a, k0.mul(b, t1)), k0.add(a, k0.mul(b, t2)))

    def from_split_values(self, v1, v2):
        k0 = self.base
        t1, t2 = self.split_roots
        # solve a + b t1 = v1, a + b t2 = v2
        b = k0.mul(k0.sub(v1, v2), k0.inv(k0.sub(t1, t2)))
        a = k0.sub(v1, k0.mul(b, t1))
        return (a, b)

    def __repr__(self):
        return f"QuadExtension({self.base!r}, s={self.base.render(self.s)}, {self.kind})"


def quad_extension(k0, s):
    return QuadExtension(k0, s)


# ---------------------------------------------------------------------------
# Zsigmondy primitive prime divisors
# ---------------------------------------------------------------------------

def primitive_prime_divisor(a, d):
    """Smallest prime dividing a^d - 1 but no a^i - 1 for 1 <= i < d.

    Returns None exactly when no such prime exists, i.e. for (a, d) = (2, 6)
    and for d = 2 with a + 1 a power of 2.
    """
    if a < 2 or d < 2:
        raise ValueError("need a >= 2 and d >= 2")
    n = a ** d - 1
    smaller = [a ** i - 1 for i in range(1, d)]
    for ell in factorize(n):
        if all(m % ell for m in smaller):
            return ell
    return None
