"""Exact coefficient rings.

Every computation in this package is exact; there is no floating point
anywhere.  A ring is an object exposing arithmetic on *payloads*:

=================  =========================================================
ring               payload
=================  =========================================================
ZZ                 Python int
QQ                 fractions.Fraction (lowest terms, positive denominator)
PrimeField(p)      int in range(p)
ExtensionField     tuple of k ints, coefficients of 1, a, ..., a^(k-1)
                   modulo a fixed monic irreducible polynomial over GF(p)
DualNumbers(R)     pair (a, b) of R-payloads, representing a + b*eps with
                   eps^2 = 0
LocalRing(R)       tuple of R-payloads, a polynomial c0 + c1*t + ... in the
                   local parameter t (trailing zeros stripped, () is zero)
=================  =========================================================

Payloads are plain immutable Python values, so ``==`` and hashing behave;
the ring object supplies add/mul/inv and friends.  Rings compare equal
structurally, which is what the polynomial layer uses to reject mixed-ring
arithmetic.

Field spec strings, as accepted by the command line and ``ring_from_spec``:
``Q``, ``Z``, ``Fp:<p>``, ``Fpk:<p>:<k>``, ``dual:<base>``,
``local-t:<base>``.
"""

from fractions import Fraction


class RingError(ValueError):
    pass


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Common behaviour; subclasses fill in the payload arithmetic."""

    is_field = False
    characteristic = 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def is_one(self, a):
        return self.eq(a, self.one)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def exact_div(self, a, b):
        """a/b when b divides a exactly; default works for fields."""
        return self.div(a, b)

    def is_invertible(self, a):
        if self.is_field:
            return not self.is_zero(a)
        raise NotImplementedError

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def __ne__(self, other):
        return not self.__eq__(other)


class IntegerRing(Ring):
    spec = "Z"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a in (1, -1):
            return a
        raise RingError("not a unit in Z: %r" % (a,))

    def is_invertible(self, a):
        return a in (1, -1)

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise RingError("inexact integer division %r / %r" % (a, b))
        return q

    def from_int(self, n):
        return n

    def format(self, a):
        return str(a)

    def parse(self, s):
        return int(s)

    def random(self, rng):
        return rng.randrange(-20, 21)

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash("Z")

    def __repr__(self):
        return "ZZ"


class RationalField(Ring):
    spec = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def format(self, a):
        return str(a)

    def parse(self, s):
        return Fraction(s)

    def random(self, rng):
        return Fraction(rng.randrange(-12, 13), rng.randrange(1, 8))

    def __eq__(self, other):
        return type(other) is RationalField

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


class PrimeField(Ring):
    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise RingError("modulus %r is not prime" % (p,))
        self.p = p
        self.characteristic = p
        self.spec = "Fp:%d" % p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n):
        return pow(a, n, self.p) if n >= 0 else pow(self.inv(a), -n, self.p)

    def from_int(self, n):
        return n % self.p

    def format(self, a):
        return str(a)

    def parse(self, s):
        return int(s) % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class ExtensionField(Ring):
    """GF(p^k) as GF(p)[a]/(modulus), modulus a monic irreducible tuple.

    The modulus is given low-to-high, length k+1, with modulus[k] == 1.
    """

    is_field = True

    def __init__(self, p, modulus):
        if not is_prime(p):
            raise RingError("modulus %r is not prime" % (p,))
        modulus = tuple(c % p for c in modulus)
        if len(modulus) < 3 or modulus[-1] != 1:
            raise RingError("extension modulus must be monic of degree >= 2")
        self.p = p
        self.characteristic = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.spec = "Fpk:%d:%d" % (p, self.degree)
        k = self.degree
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.gen = ((0, 1) + (0,) * (k - 2)) if k >= 2 else (1,)
        # x^(k+j) mod modulus, for reducing degree < 2k-1 products
        red = []
        cur = [(-modulus[i]) % p for i in range(k)]
        red.append(tuple(cur))
        for _ in range(k - 2):
            cur = [0] + cur
            lead = cur.pop()
            if lead:
                cur = [(cur[i] - lead * modulus[i]) % p for i in range(k)]
            red.append(tuple(cur))
        self._red = red

    def base(self):
        return PrimeField(self.p)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [c % p for c in prod[:k]]
        for j in range(k - 1):
            c = prod[k + j] % p
            if c:
                rj = self._red[j]
                for i in range(k):
                    out[i] = (out[i] + c * rj[i]) % p
        return tuple(out)

    def inv(self, a):
        p = self.p
        r0, r1 = list(self.modulus), _fpd_strip([c % p for c in a])
        if not r1:
            raise ZeroDivisionError("inverse of 0 in GF(%d^%d)" % (self.p, self.degree))
        t0, t1 = [], [1]
        while r1:
            q, r = _fpd_divmod(p, r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _fpd_sub(p, t0, _fpd_mul(p, q, t1))
        c = pow(r0[0], p - 2, p)
        k = self.degree
        out = [0] * k
        for i, v in enumerate(t0):
            out[i] = v * c % p
        return tuple(out)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.degree - 1)

    def from_base(self, a):
        return (a % self.p,) + (0,) * (self.degree - 1)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def in_base(self, a):
        """Return the GF(p) payload if a is in the prime field, else None."""
        if any(a[1:]):
            return None
        return a[0]

    def format(self, a):
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("a" if c == 1 else "%d*a" % c)
            else:
                parts.append("a^%d" % i if c == 1 else "%d*a^%d" % (c, i))
        if not parts:
            return "0"
        return "+".join(parts)

    def parse(self, s):
        s = s.replace(" ", "")
        if not s:
            raise RingError("empty field element")
        acc = self.zero
        for term in s.replace("-", "+-").split("+"):
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "a" not in term:
                c, e = int(term), 0
            else:
                head, _, tail = term.partition("a")
                c = int(head.rstrip("*")) if head.rstrip("*") else 1
                e = int(tail[1:]) if tail.startswith("^") else (1 if not tail else int(tail))
            val = self.mul(self.from_int(-c if neg else c), self.pow(self.gen, e))
            acc = self.add(acc, val)
        return acc

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def elements(self):
        def rec(i):
            if i == self.degree:
                yield ()
                return
            for rest in rec(i + 1):
                for c in range(self.p):
                    yield (c,) + rest
        return rec(0)

    def __eq__(self, other):
        return (type(other) is ExtensionField and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fpk", self.p, self.modulus))

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.degree)


class DualNumbers(Ring):
    """R[eps]/(eps^2); payload (a, b) means a + b*eps."""

    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic
        self.spec = "dual:%s" % base.spec
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        self.eps = (base.zero, base.one)

    def add(self, a, b):
        R = self.base
        return (R.add(a[0], b[0]), R.add(a[1], b[1]))

    def neg(self, a):
        R = self.base
        return (R.neg(a[0]), R.neg(a[1]))

    def mul(self, a, b):
        R = self.base
        return (R.mul(a[0], b[0]),
                R.add(R.mul(a[0], b[1]), R.mul(a[1], b[0])))

    def inv(self, a):
        R = self.base
        c = R.inv(a[0])
        return (c, R.neg(R.mul(R.mul(c, c), a[1])))

    def is_invertible(self, a):
        return self.base.is_invertible(a[0])

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def from_base(self, a):
        return (a, self.base.zero)

    def format(self, a):
        R = self.base
        if R.is_zero(a[1]):
            return R.format(a[0])
        return "(%s)+(%s)*eps" % (R.format(a[0]), R.format(a[1]))

    def random(self, rng):
        return (self.base.random(rng), self.base.random(rng))

    def __eq__(self, other):
        return type(other) is DualNumbers and other.base == self.base

    def __hash__(self):
        return hash(("dual", self.base))

    def __repr__(self):
        return "Dual(%r)" % (self.base,)


class LocalRing(Ring):
    """Polynomials in a local parameter t over a base ring.

    Units are the elements with invertible constant term and no other
    term; general localization is deliberately not modelled, only the
    reduction map implemented by :func:`t_reduce` and the polynomial-level
    ``k_reduction``.
    """

    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic
        self.spec = "local-t:%s" % base.spec
        self.zero = ()
        self.one = (base.one,)
        self.t = (base.zero, base.one)

    def _strip(self, coeffs):
        n = len(coeffs)
        while n and self.base.is_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    def add(self, a, b):
        R = self.base
        n = max(len(a), len(b))
        out = [R.zero] * n
        for i, c in enumerate(a):
            out[i] = c
        for i, c in enumerate(b):
            out[i] = R.add(out[i], c)
        return self._strip(out)

    def neg(self, a):
        R = self.base
        return tuple(R.neg(c) for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        R = self.base
        out = [R.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if R.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = R.add(out[i + j], R.mul(x, y))
        return self._strip(out)

    def inv(self, a):
        if len(a) == 1:
            return (self.base.inv(a[0]),)
        raise RingError("only t-free units are invertible in the local ring")

    def is_invertible(self, a):
        return len(a) == 1 and self.base.is_invertible(a[0])

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in local ring")
        if not a:
            return ()
        R = self.base
        rem = list(a)
        out = [R.zero] * (len(a) - len(b) + 1)
        for i in range(len(a) - len(b), -1, -1):
            c = R.exact_div(rem[i + len(b) - 1], b[-1])
            out[i] = c
            if not R.is_zero(c):
                for j, y in enumerate(b):
                    rem[i + j] = R.sub(rem[i + j], R.mul(c, y))
        if any(not R.is_zero(c) for c in rem):
            raise RingError("inexact division in local ring")
        return self._strip(out)

    def from_int(self, n):
        c = self.base.from_int(n)
        return (c,) if not self.base.is_zero(c) else ()

    def from_base(self, a):
        return (a,) if not self.base.is_zero(a) else ()

    def t_valuation(self, a):
        """Largest power of t dividing a; None for the zero element."""
        if not a:
            return None
        for i, c in enumerate(a):
            if not self.base.is_zero(c):
                return i
        return None

    def format(self, a):
        R = self.base
        if not a:
            return "0"
        parts = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if R.is_zero(c):
                continue
            cs = R.format(c)
            if i == 0:
                parts.append(cs)
            else:
                tp = "t" if i == 1 else "t^%d" % i
                parts.append(tp if cs == "1" else "%s*%s" % (cs, tp))
        return "+".join(parts).replace("+-", "-")

    def random(self, rng):
        return self._strip([self.base.random(rng) for _ in range(rng.randrange(4))])

    def __eq__(self, other):
        return type(other) is LocalRing and other.base == self.base

    def __hash__(self):
        return hash(("local", self.base))

    def __repr__(self):
        return "Local(%r)" % (self.base,)


# ---------------------------------------------------------------------------
# dense-list polynomial helpers over GF(p), used for extension construction


def _fpd_strip(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _fpd_sub(p, u, v):
    out = [0] * max(len(u), len(v))
    for i, c in enumerate(u):
        out[i] = c
    for i, c in enumerate(v):
        out[i] = (out[i] - c) % p
    return _fpd_strip(out)


def _fpd_mul(p, u, v):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] = (out[i + j] + x * y) % p
    return _fpd_strip(out)


def _fpd_divmod(p, u, v):
    u = _fpd_strip([c % p for c in u])
    q = [0] * max(0, len(u) - len(v) + 1)
    invl = pow(v[-1], p - 2, p)
    while len(u) >= len(v):
        c = u[-1] * invl % p
        s = len(u) - len(v)
        q[s] = c
        if c:
            for i in range(len(v) - 1):
                u[s + i] = (u[s + i] - c * v[i]) % p
        u.pop()
    return q, _fpd_strip(u)


def _fpd_gcd(p, a, b):
    a = _fpd_strip([c % p for c in a])
    b = _fpd_strip([c % p for c in b])
    while b:
        a, b = b, _fpd_divmod(p, a, b)[1]
    return a


def _fp_modexp_x(p, modulus, e):
    """x^e modulo a monic dense-list polynomial over GF(p)."""
    r = [1]
    b = _fpd_divmod(p, [0, 1], modulus)[1]
    while e:
        if e & 1:
            r = _fpd_divmod(p, _fpd_mul(p, r, b), modulus)[1]
        b = _fpd_divmod(p, _fpd_mul(p, b, b), modulus)[1]
        e >>= 1
    return r


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(p, coeffs):
    """Rabin test for a monic dense-list polynomial over GF(p)."""
    k = len(coeffs) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x_qk = _fp_modexp_x(p, coeffs, p ** k)
    if x_qk != [0, 1]:
        return False
    for ell in _prime_factors(k):
        h = _fp_modexp_x(p, coeffs, p ** (k // ell))
        h = _fpd_sub(p, h, [0, 1])
        g = _fpd_gcd(p, h, list(coeffs))
        if len(g) != 1:
            return False
    return True


def make_extension(p, k):
    """GF(p^k) with a deterministic modulus.

    The modulus is the first monic irreducible of degree k when the
    candidate coefficient vectors (c0, c1, ..., c_{k-1}) are enumerated in
    lexicographic order, c0 varying fastest; repeated calls are identical.
    Degree 1 gives back the prime field itself.
    """
    if not is_prime(p):
        raise RingError("modulus %r is not prime" % (p,))
    if k < 1:
        raise RingError("extension degree must be positive")
    if k == 1:
        return PrimeField(p)
    for n in range(p ** k):
        coeffs, m = [], n
        for _ in range(k):
            m, r = divmod(m, p)
            coeffs.append(r)
        coeffs.append(1)
        if is_irreducible_mod_p(p, coeffs):
            return ExtensionField(p, tuple(coeffs))
    raise RingError("no irreducible polynomial found (impossible)")


# ---------------------------------------------------------------------------
# canonical maps


def embed(value, source, target):
    """Image of a payload under the canonical map source -> target.

    Supported maps: identity, Z into anything, the prime field into its
    extensions, an extension into a larger extension of the same
    characteristic, and any base ring into its dual numbers or local ring
    as constants.  Anything else is rejected.
    """
    if source == target:
        return value
    if isinstance(source, IntegerRing):
        return target.from_int(value)
    if isinstance(target, (DualNumbers, LocalRing)):
        return target.from_base(embed(value, source, target.base))
    if isinstance(source, PrimeField) and isinstance(target, ExtensionField):
        if target.p != source.p:
            raise RingError("no canonical map %r -> %r" % (source, target))
        return target.from_base(value)
    if isinstance(source, ExtensionField) and isinstance(target, ExtensionField):
        if source.p != target.p or target.degree % source.degree != 0:
            raise RingError("no canonical map %r -> %r" % (source, target))
        from .factor import extension_embedding
        return extension_embedding(source, target)(value)
    raise RingError("no canonical map %r -> %r" % (source, target))


def ring_from_spec(spec):
    """Parse a field spec string; see the module docstring for the forms."""
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec == "Z":
        return ZZ
    if spec.startswith("Fp:"):
        return PrimeField(int(spec[3:]))
    if spec.startswith("Fpk:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise RingError("bad field spec %r" % spec)
        return make_extension(int(parts[1]), int(parts[2]))
    if spec.startswith("dual:"):
        return DualNumbers(ring_from_spec(spec[5:]))
    if spec.startswith("local-t:"):
        return LocalRing(ring_from_spec(spec[8:]))
    raise RingError("bad field spec %r" % spec)
