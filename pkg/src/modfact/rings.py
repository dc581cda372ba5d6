"""Base rings, their distinguished element omega, and the twist automorphism.

Four concrete ring kinds are supported:

* ``IntegerRing(omega)``      -- the integers, omega any nonzero integer.
* ``PolyRing(p, omega)``      -- F_p[x], omega a nonzero polynomial.
* ``SkewPolyRing(p, e)``      -- F_{p^e}[x; Frob] with x*a = a^p * x, omega = x.
* ``GroupRing(n, p)``         -- Z[x]/(x^n - 1), omega = p a prime integer.

In every kind omega is regular (left/right multiplication by it is injective)
and normal, and the unique automorphism sigma with omega*a = sigma(a)*omega is
the identity except over the skew ring, where it is the coefficientwise
Frobenius fixing x.  sigma(omega) = omega in all four kinds.

Element encodings are canonical nested tuples/ints, so ``==`` and ``hash``
are structural.  All contexts are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

Element = Any  # kind-dependent encoding, documented per context class


class UnsupportedRing(Exception):
    """Raised when an operation is not available for a ring kind."""


# ---------------------------------------------------------------------------
# Euclidean base domains (used for scalar expansion and normal forms)
# ---------------------------------------------------------------------------


class IntegerDomain:
    """Arbitrary-precision integers as a Euclidean domain."""

    zero = 0
    one = 1
    name = "ZZ"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divmod(self, a, b):
        q, r = divmod(a, b)
        return q, r

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def normalize(self, a):
        # canonical associate is nonnegative
        if a < 0:
            return -a, -1
        return a, 1

    def height(self, a):
        return abs(a)

    def divides(self, b, a):
        return a % b == 0 if b != 0 else a == 0

    def fmt(self, a):
        return str(a)


def poly_trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class FpPolyDomain:
    """F_p[t]: tuples of ints in [0, p), ascending degree, no trailing zeros."""

    def __init__(self, p: int):
        self.p = p
        self.zero = ()
        self.one = (1,)
        self.name = f"GF({p})[t]"

    def __eq__(self, other):
        return isinstance(other, FpPolyDomain) and other.p == self.p

    def __hash__(self):
        return hash(("FpPolyDomain", self.p))

    def add(self, a, b):
        n = max(len(a), len(b))
        return poly_trim(
            ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p
            for i in range(n)
        )

    def neg(self, a):
        return tuple((-c) % self.p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % self.p
        return poly_trim(out)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(a)
        db = len(b) - 1
        lead_inv = pow(b[-1], self.p - 2, self.p)
        q = [0] * max(len(a) - db, 0)
        while len(r) - 1 >= db and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < db:
                break
            shift = len(r) - 1 - db
            c = (r[-1] * lead_inv) % self.p
            q[shift] = c
            for j, cb in enumerate(b):
                r[shift + j] = (r[shift + j] - c * cb) % self.p
        return poly_trim(q), poly_trim(r)

    def is_zero(self, a):
        return a == ()

    def is_unit(self, a):
        return len(a) == 1

    def normalize(self, a):
        # canonical associate is monic
        if not a:
            return (), (1,)
        u = pow(a[-1], self.p - 2, self.p)
        return self.mul((u,), a), (u,)

    def height(self, a):
        return len(a)  # 1 + degree; zero has height 0

    def divides(self, b, a):
        if self.is_zero(b):
            return self.is_zero(a)
        return self.divmod(a, b)[1] == ()

    def fmt(self, a):
        return fmt_poly_string([str(c) for c in a], "x") if a else "0"


def fmt_poly_string(coeff_strings, var):
    """Ascending, space-normalized polynomial string; zero terms omitted."""
    terms = []
    for k, cs in enumerate(coeff_strings):
        if cs in ("0", "(0+0*g)"):
            continue
        if k == 0:
            terms.append(cs)
        elif k == 1:
            terms.append(f"{cs}*{var}")
        else:
            terms.append(f"{cs}*{var}^{k}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Galois field F_{p^e} (fixed modulus per (p, e), Conway polynomials)
# ---------------------------------------------------------------------------

# modulus coefficients ascending: g^e = -(m0 + m1 g + ... + m_{e-1} g^{e-1})
GF_MODULI = {
    (2, 2): (1, 1, 1),  # g^2 + g + 1
    (3, 2): (2, 2, 1),  # g^2 + 2g + 2
}


class GFField:
    """F_{p^e} with elements encoded as length-e tuples over F_p."""

    def __init__(self, p: int, e: int):
        if (p, e) not in GF_MODULI:
            raise UnsupportedRing(f"no fixed modulus shipped for GF({p}^{e})")
        self.p = p
        self.e = e
        self.modulus = GF_MODULI[(p, e)]
        self.q = p**e
        self.zero = (0,) * e
        self.one = (1,) + (0,) * (e - 1)

    def elem(self, coeffs):
        cs = [c % self.p for c in coeffs]
        cs += [0] * (self.e - len(cs))
        return tuple(cs[: self.e])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        out = [0] * (2 * self.e - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % self.p
        # reduce modulo the fixed polynomial
        for i in range(len(out) - 1, self.e - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j, m in enumerate(self.modulus[:-1]):
                    out[i - self.e + j] = (out[i - self.e + j] - c * m) % self.p
        return tuple(out[: self.e])

    def pow(self, a, k):
        r = self.one
        b = a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in GF")
        return self.pow(a, self.q - 2)

    def frob(self, a):
        return self.pow(a, self.p)

    def frob_pow(self, a, k):
        k %= self.e
        for _ in range(k):
            a = self.frob(a)
        return a

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def all_elements(self):
        out = []
        for n in range(self.q):
            cs = []
            for _ in range(self.e):
                n, c = divmod(n, self.p)
                cs.append(c)
            out.append(tuple(cs))
        return out

    def fmt(self, a):
        inner = "+".join(
            (f"{c}" if k == 0 else f"{c}*g" if k == 1 else f"{c}*g^{k}")
            for k, c in enumerate(a)
        )
        return f"({inner})"


# ---------------------------------------------------------------------------
# Ring contexts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingContext:
    """Shared surface of the four concrete contexts (see subclasses)."""

    def __post_init__(self):
        self._check_omega()

    # subclasses set: kind, omega, zero, one
    def _check_omega(self):
        if not self.eq(self.sigma(self.omega), self.omega):
            raise ValueError("sigma(omega) != omega")

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sigma_pow(self, a, k: int):
        if k == 0:
            return a
        step = self.sigma if k > 0 else self.sigma_inv
        for _ in range(abs(k)):
            a = step(a)
        return a

    def left_divmod(self, a, b):
        raise UnsupportedRing(f"{self.kind}: no one-sided division")

    def normalize(self, a):
        raise UnsupportedRing(f"{self.kind}: no canonical associates")

    def height(self, a):
        raise UnsupportedRing(f"{self.kind}: no Euclidean height")

    # --- scalar expansion over the central base domain -------------------
    # expand/unexpand write ring elements in a finite free basis over the
    # base domain; the basis is central, so maps a |-> c * sigma^k(a) * c'
    # become base-linear in the coordinates.

    def int_scalar(self, n: int):
        """The image of the integer n in the ring."""
        out = self.zero
        one = self.one if n >= 0 else self.neg(self.one)
        for _ in range(abs(n)):
            out = self.add(out, one)
        return out

    def embed_base(self, c):
        """Image of a base-domain element in the ring (always central)."""
        raise UnsupportedRing(self.kind)


@dataclass(frozen=True)
class IntegerRing(RingContext):
    """The ring of integers; elements are ints."""

    omega: int
    kind = "integers"
    zero = 0
    one = 1

    def _check_omega(self):
        if self.omega == 0:
            raise ValueError("omega must be a nonzero integer")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def sigma(self, a):
        return a

    def sigma_inv(self, a):
        return a

    def reduce_mod_omega(self, a):
        return a % abs(self.omega)

    def left_divmod(self, a, b):
        return divmod(a, b)

    @property
    def base_domain(self):
        return IntegerDomain()

    base_rank = 1

    def expand(self, a):
        return [a]

    def unexpand(self, coords):
        return coords[0]

    def normalize(self, a):
        return (-a, -1) if a < 0 else (a, 1)

    def height(self, a):
        return abs(a)

    def random_element(self, rng, bound=5):
        return rng.randint(-bound, bound)

    def random_unit(self, rng):
        return rng.choice((1, -1))

    def embed_base(self, c):
        return c

    def fmt(self, a):
        return str(a)

    def to_params(self):
        return {"kind": "integers"}


@dataclass(frozen=True)
class PolyRing(RingContext):
    """F_p[x]; elements are coefficient tuples, ascending, no trailing zeros."""

    p: int
    omega: tuple
    kind = "poly"

    def _check_omega(self):
        if not _is_probable_prime(self.p):
            raise ValueError("p must be prime")
        if self.omega == ():
            raise ValueError("omega must be a nonzero polynomial")

    @property
    def dom(self):
        return FpPolyDomain(self.p)

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (1,)

    def add(self, a, b):
        return self.dom.add(a, b)

    def neg(self, a):
        return self.dom.neg(a)

    def mul(self, a, b):
        return self.dom.mul(a, b)

    def sigma(self, a):
        return a

    def sigma_inv(self, a):
        return a

    def reduce_mod_omega(self, a):
        return self.dom.divmod(a, self.omega)[1]

    def left_divmod(self, a, b):
        return self.dom.divmod(a, b)

    @property
    def base_domain(self):
        return self.dom

    base_rank = 1

    def expand(self, a):
        return [a]

    def unexpand(self, coords):
        return coords[0]

    def normalize(self, a):
        return self.dom.normalize(a)

    def height(self, a):
        return self.dom.height(a)

    def x(self, k=1):
        return (0,) * k + (1,)

    def random_element(self, rng, bound=3):
        deg = rng.randint(0, bound)
        return poly_trim(tuple(rng.randrange(self.p) for _ in range(deg + 1)))

    def random_unit(self, rng):
        return (rng.randrange(1, self.p),)

    def embed_base(self, c):
        return c

    def fmt(self, a):
        return fmt_poly_string([str(c) for c in a], "x")

    def to_params(self):
        return {"kind": "poly", "p": self.p}


@dataclass(frozen=True)
class SkewPolyRing(RingContext):
    """F_{p^e}[x; Frob] with x*a = a^p*x; omega = x.

    Elements are tuples of GF coefficients (each a length-e tuple),
    ascending in x, no trailing zero coefficients.  sigma applies the
    Frobenius to every coefficient and fixes x.
    """

    p: int
    e: int
    kind = "skew"

    def _check_omega(self):
        GFField(self.p, self.e)  # validates that a fixed modulus is shipped

    @property
    def gf(self):
        return GFField(self.p, self.e)

    @property
    def omega(self):
        return (self.gf.zero, self.gf.one)  # the element x

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.gf.one,)

    def _trim(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == self.gf.zero:
            cs.pop()
        return tuple(cs)

    def add(self, a, b):
        gf = self.gf
        n = max(len(a), len(b))
        return self._trim(
            gf.add(
                a[i] if i < len(a) else gf.zero,
                b[i] if i < len(b) else gf.zero,
            )
            for i in range(n)
        )

    def neg(self, a):
        return tuple(self.gf.neg(c) for c in a)

    def mul(self, a, b):
        # (a_i x^i)(b_j x^j) = a_i * Frob^i(b_j) x^{i+j}
        gf = self.gf
        if not a or not b:
            return ()
        out = [gf.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca != gf.zero:
                for j, cb in enumerate(b):
                    out[i + j] = gf.add(out[i + j], gf.mul(ca, gf.frob_pow(cb, i)))
        return self._trim(out)

    def sigma(self, a):
        return tuple(self.gf.frob(c) for c in a)

    def sigma_inv(self, a):
        return tuple(self.gf.frob_pow(c, self.e - 1) for c in a)

    def reduce_mod_omega(self, a):
        # A/(x) = F_{p^e}: keep the constant term
        return (a[0],) if a and a[0] != self.gf.zero else ()

    def left_divmod(self, a, b):
        # a = q*b + r with deg r < deg b; quotient acts from the left
        gf = self.gf
        if not b:
            raise ZeroDivisionError("skew division by zero")
        r = list(a)
        db = len(b) - 1
        q = [gf.zero] * max(len(a) - db, 0)
        while len(r) - 1 >= db:
            while r and r[-1] == gf.zero:
                r.pop()
            if len(r) - 1 < db:
                break
            d = len(r) - 1 - db
            c = gf.mul(r[-1], gf.inv(gf.frob_pow(b[-1], d)))
            q[d] = c
            term = self.mul(((gf.zero,) * d + (c,)), b)
            for k, tc in enumerate(term):
                r[k] = gf.add(r[k], gf.neg(tc)) if k < len(r) else gf.neg(tc)
        return self._trim(q), self._trim(r)

    @property
    def base_domain(self):
        return FpPolyDomain(self.p)

    @property
    def base_rank(self):
        # central basis g^j x^i, 0 <= j, i < e, over F_p[y] with y = x^e
        return self.e * self.e

    def expand(self, a):
        e = self.e
        coords = [[] for _ in range(e * e)]
        for i, coeff in enumerate(a):
            ydeg, i0 = divmod(i, e)
            for j, c in enumerate(coeff):
                if c:
                    slot = coords[j * e + i0]
                    while len(slot) <= ydeg:
                        slot.append(0)
                    slot[ydeg] = c
        return [poly_trim(slot) for slot in coords]

    def unexpand(self, coords):
        e = self.e
        gf = self.gf
        max_y = max((len(c) for c in coords), default=0)
        out = [list(gf.zero) for _ in range(max_y * e + e)]
        for t, poly in enumerate(coords):
            j, i0 = divmod(t, e)
            for ydeg, c in enumerate(poly):
                if c:
                    xdeg = ydeg * e + i0
                    cur = list(out[xdeg])
                    cur[j] = (cur[j] + c) % self.p
                    out[xdeg] = cur
        return self._trim(tuple(tuple(c) for c in out))

    def normalize(self, a):
        # monic via left multiplication by the inverse of the lead coefficient
        if not a:
            return (), self.one
        u = (self.gf.inv(a[-1]),)
        return self.mul(u, a), u

    def height(self, a):
        return len(a)

    def x(self, k=1):
        return (self.gf.zero,) * k + (self.gf.one,)

    def const(self, coeffs):
        c = self.gf.elem(coeffs)
        return (c,) if c != self.gf.zero else ()

    def random_element(self, rng, bound=2):
        gf = self.gf
        deg = rng.randint(0, bound)
        cs = tuple(
            tuple(rng.randrange(self.p) for _ in range(self.e))
            for _ in range(deg + 1)
        )
        return self._trim(cs)

    def random_unit(self, rng):
        gf = self.gf
        while True:
            c = tuple(rng.randrange(self.p) for _ in range(self.e))
            if c != gf.zero:
                return (c,)

    def embed_base(self, c):
        # a polynomial in y = x^e lands centrally as sum c_k x^{e k}
        gf = self.gf
        out = []
        for k, ck in enumerate(c):
            while len(out) <= k * self.e:
                out.append(gf.zero)
            out[k * self.e] = gf.elem((ck,))
        return self._trim(out)

    def fmt(self, a):
        return fmt_poly_string([self.gf.fmt(c) for c in a], "x")

    def to_params(self):
        return {"kind": "skew", "p": self.p, "e": self.e}


@dataclass(frozen=True)
class GroupRing(RingContext):
    """Z[x]/(x^n - 1) with omega = p, a prime integer.

    Elements are integer tuples of length exactly n (coefficients of
    1, x, ..., x^{n-1}); omega is central, so sigma is the identity.
    """

    n: int
    p: int
    kind = "group"

    def _check_omega(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not _is_probable_prime(self.p):
            raise ValueError("omega must be a prime integer")

    @property
    def omega(self):
        return (self.p,) + (0,) * (self.n - 1)

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [0] * self.n
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[(i + j) % self.n] += ca * cb
        return tuple(out)

    def sigma(self, a):
        return a

    def sigma_inv(self, a):
        return a

    def reduce_mod_omega(self, a):
        return tuple(c % self.p for c in a)

    @property
    def base_domain(self):
        return IntegerDomain()

    @property
    def base_rank(self):
        return self.n

    def expand(self, a):
        return list(a)

    def unexpand(self, coords):
        return tuple(coords)

    def x_power(self, k):
        out = [0] * self.n
        out[k % self.n] = 1
        return tuple(out)

    def int_scalar(self, m):
        return (m,) + (0,) * (self.n - 1)

    def random_element(self, rng, bound=3):
        return tuple(rng.randint(-bound, bound) for _ in range(self.n))

    def random_unit(self, rng):
        # trivial units +- x^k
        s = rng.choice((1, -1))
        out = [0] * self.n
        out[rng.randrange(self.n)] = s
        return tuple(out)

    def embed_base(self, c):
        return self.int_scalar(c)

    def fmt(self, a):
        return list(a)

    def to_params(self):
        return {"kind": "group", "n": self.n}


def _is_probable_prime(m: int) -> bool:
    if m < 2:
        return False
    for d in range(2, int(m**0.5) + 1):
        if m % d == 0:
            return False
    return True


def context_from_params(params: dict, omega) -> RingContext:
    """Rebuild a context from CLI/document parameters plus a parsed omega."""
    kind = params["kind"]
    if kind == "integers":
        return IntegerRing(omega)
    if kind == "poly":
        return PolyRing(params["p"], omega)
    if kind == "skew":
        ctx = SkewPolyRing(params["p"], params["e"])
        if omega is not None and omega != ctx.omega:
            raise ValueError("skew contexts require omega = x")
        return ctx
    if kind == "group":
        n = params["n"]
        if isinstance(omega, tuple):
            p = omega[0]
            if omega != (p,) + (0,) * (n - 1):
                raise ValueError("group-ring omega must be a prime integer")
        else:
            p = omega
        return GroupRing(n, p)
    raise UnsupportedRing(f"unknown ring kind {kind!r}")
