"""Univariate factorization and root extraction over finite fields.

Polynomials are handled internally as dense lists of field payloads, low
degree first, with no trailing zeros.  The public entry points speak
:class:`~quartics.poly.Polynomial`.

Factorization is the classical chain: squarefree decomposition (with p-th
root recursion when the derivative vanishes), distinct-degree splitting by
Frobenius powers, then randomized equal-degree splitting.  The randomness
is driven entirely by the caller's seed, so results are reproducible; the
factor list is additionally sorted into a canonical order, so even the
seed only affects running time.
"""

import hashlib
import random

from .rings import ExtensionField, PrimeField, RingError, make_extension
from .poly import Polynomial, PolynomialError


def derive_seed(seed, *salt):
    """Deterministic 64-bit child seed from a parent seed and salt values."""
    text = repr((int(seed),) + tuple(salt)).encode()
    return int.from_bytes(hashlib.sha256(text).digest()[:8], "big")


def field_order(F):
    if isinstance(F, PrimeField):
        return F.p
    if isinstance(F, ExtensionField):
        return F.p ** F.degree
    raise RingError("%r is not a finite field" % (F,))


def field_degree(F):
    return F.degree if isinstance(F, ExtensionField) else 1


# -- dense list helpers ------------------------------------------------------


def u_strip(F, a):
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def u_deg(a):
    return len(a) - 1


def u_add(F, a, b):
    out = [F.zero] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return u_strip(F, out)


def u_sub(F, a, b):
    out = [F.zero] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return u_strip(F, out)


def u_scale(F, a, c):
    if F.is_zero(c):
        return []
    return [F.mul(c, x) for x in a]


def u_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return u_strip(F, out)


def u_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        s = len(a) - len(b)
        q[s] = c
        if not F.is_zero(c):
            for i in range(len(b) - 1):
                a[s + i] = F.sub(a[s + i], F.mul(c, b[i]))
        a.pop()
    return q, u_strip(F, a)


def u_mod(F, a, b):
    return u_divmod(F, a, b)[1]


def u_gcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, u_mod(F, a, b)
    return u_monic(F, a)


def u_monic(F, a):
    if not a or F.is_one(a[-1]):
        return list(a)
    return u_scale(F, a, F.inv(a[-1]))


def u_pow_mod(F, a, e, m):
    r = [F.one]
    a = u_mod(F, a, m)
    while e:
        if e & 1:
            r = u_mod(F, u_mul(F, r, a), m)
        a = u_mod(F, u_mul(F, a, a), m)
        e >>= 1
    return r


def u_deriv(F, a):
    out = [F.mul(c, F.from_int(i)) for i, c in enumerate(a)][1:]
    return u_strip(F, out)


def u_eval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def u_from_poly(f, name):
    """Dense list of a Polynomial that only involves ``name``."""
    i = f.variables.index(name)
    for m in f.terms:
        for j, e in enumerate(m):
            if e and j != i:
                raise PolynomialError("polynomial is not univariate in %r" % name)
    out = [f.ring.zero] * (f.degree_in(name) + 1)
    for m, c in f.terms.items():
        out[m[i]] = c
    return u_strip(F=f.ring, a=out)


def u_to_poly(F, a, variables, name):
    i = tuple(variables).index(name)
    terms = {}
    for e, c in enumerate(a):
        if not F.is_zero(c):
            mono = [0] * len(variables)
            mono[i] = e
            terms[tuple(mono)] = c
    return Polynomial(F, variables, terms)


def _payload_key(c):
    return c if isinstance(c, tuple) else (c,)


def u_sort_key(a):
    return (len(a), tuple(_payload_key(c) for c in a))


# -- factorization chain -----------------------------------------------------


def _pth_root(F, a):
    """Inverse Frobenius coefficient map applied to g(x^p) -> g'(x)."""
    p = F.characteristic
    q = field_order(F)
    out = []
    for i in range(0, len(a), p):
        c = a[i]
        out.append(F.pow(c, q // p))
    for i, c in enumerate(a):
        if i % p and not F.is_zero(c):
            raise PolynomialError("polynomial is not a p-th power")
    return u_strip(F, out)


def squarefree_decomposition(F, f):
    """[(monic squarefree factor, multiplicity)], factors pairwise coprime."""
    f = u_monic(F, f)
    if u_deg(f) < 1:
        return []
    p = F.characteristic
    df = u_deriv(F, f)
    parts = []
    if not df:
        for h, m in squarefree_decomposition(F, _pth_root(F, f)):
            parts.append((h, m * p))
        return parts
    c = u_gcd(F, f, df)
    w = u_divmod(F, f, c)[0]
    i = 1
    while u_deg(w) > 0:
        y = u_gcd(F, w, c)
        z = u_divmod(F, w, y)[0]
        if u_deg(z) > 0:
            parts.append((z, i))
        w = y
        c = u_divmod(F, c, y)[0]
        i += 1
    if u_deg(c) > 0:
        for h, m in squarefree_decomposition(F, _pth_root(F, c)):
            parts.append((h, m * p))
    return parts


def distinct_degree(F, f):
    """[(product of irreducibles of degree d, d)] for monic squarefree f."""
    q = field_order(F)
    out = []
    h = [F.zero, F.one]
    x = [F.zero, F.one]
    g = list(f)
    d = 0
    while u_deg(g) >= 1:
        d += 1
        if 2 * d > u_deg(g):
            out.append((g, u_deg(g)))
            break
        h = u_pow_mod(F, h, q, g)
        gd = u_gcd(F, g, u_sub(F, h, x))
        if u_deg(gd) > 0:
            out.append((gd, d))
            g = u_divmod(F, g, gd)[0]
            h = u_mod(F, h, g)
    return out


def _equal_degree_split_once(F, f, d, rng):
    """One random splitting attempt; returns a proper factor or None."""
    q = field_order(F)
    n = u_deg(f)
    h = [F.random(rng) for _ in range(n)]
    h = u_strip(F, h)
    if u_deg(h) < 1 and not h:
        return None
    if F.characteristic == 2:
        # trace map over GF(2^m): h + h^2 + h^4 + ... has gcd structure
        k = field_degree(F) * d
        t = list(h)
        acc = list(h)
        for _ in range(k - 1):
            t = u_mod(F, u_mul(F, t, t), f)
            acc = u_add(F, acc, t)
        g = u_gcd(F, f, acc)
    else:
        e = (q ** d - 1) // 2
        t = u_pow_mod(F, h, e, f)
        g = u_gcd(F, f, u_sub(F, t, [F.one]))
    if 0 < u_deg(g) < n:
        return g
    return None


def equal_degree_factor(F, f, d, rng):
    """All monic irreducible factors of f, each of degree d."""
    n = u_deg(f)
    if n == d:
        return [u_monic(F, f)]
    while True:
        g = _equal_degree_split_once(F, f, d, rng)
        if g is None:
            continue
        rest = u_divmod(F, f, g)[0]
        return equal_degree_factor(F, g, d, rng) + equal_degree_factor(F, rest, d, rng)


class FactoredUnivariate:
    """unit * product(factor^multiplicity); factors monic irreducible."""

    def __init__(self, unit, factors):
        self.unit = unit
        self.factors = list(factors)

    def expand(self, ring, variables, name):
        out = Polynomial.constant(ring, variables, self.unit)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __repr__(self):
        return "FactoredUnivariate(unit=%r, factors=%r)" % (self.unit, self.factors)


def factor_univariate(f, seed=0):
    """Complete factorization of a nonzero univariate over a finite field.

    Deterministic for a given seed; the factor list is sorted canonically
    by degree and then by coefficient sequence.
    """
    F = f.ring
    if not (isinstance(F, (PrimeField, ExtensionField))):
        raise PolynomialError("factorization needs a finite field")
    if f.is_zero():
        raise PolynomialError("cannot factor the zero polynomial")
    names = [n for n in f.variables if f.degree_in(n) > 0]
    if len(names) > 1:
        raise PolynomialError("polynomial is not univariate")
    if not names:
        return FactoredUnivariate(f.constant_value(), [])
    name = names[0]
    dense = u_from_poly(f, name)
    unit = dense[-1]
    rng = random.Random(derive_seed(seed, "factor", len(dense)))
    pairs = []
    for sqf, mult in squarefree_decomposition(F, dense):
        for block, d in distinct_degree(F, sqf):
            for irr in equal_degree_factor(F, block, d, rng):
                pairs.append((irr, mult))
    pairs.sort(key=lambda pm: u_sort_key(pm[0]))
    factors = [(u_to_poly(F, irr, f.variables, name), m) for irr, m in pairs]
    return FactoredUnivariate(unit, factors)


def roots_with_multiplicity(f, seed=0):
    """Roots of a univariate polynomial in its own coefficient field."""
    fac = factor_univariate(f, seed)
    name = next(n for n in f.variables if f.degree_in(n) > 0)
    F = f.ring
    out = []
    for g, m in fac.factors:
        if g.degree_in(name) == 1:
            c0 = g.coefficient_poly((name,), (0,)).constant_value()
            out.append((F.neg(c0), m))
    return out


# -- extension embeddings ----------------------------------------------------

_EMBED_CACHE = {}


def extension_embedding(src, dst):
    """Canonical ring map GF(p^d) -> GF(p^m) for d dividing m.

    The generator of ``src`` is sent to the smallest root (in coefficient
    tuple order) of the source modulus inside ``dst``, so the map is
    deterministic.
    """
    if isinstance(src, PrimeField):
        if src.p != dst.p:
            raise RingError("characteristic mismatch")
        return dst.from_base
    key = (src.p, src.modulus, dst.modulus)
    if key in _EMBED_CACHE:
        table = _EMBED_CACHE[key]
    else:
        if src.p != dst.p or dst.degree % src.degree != 0:
            raise RingError("no embedding %r -> %r" % (src, dst))
        mod = [dst.from_base(c) for c in src.modulus]
        roots = _roots_of_split_poly(dst, mod)
        if len(roots) != src.degree:
            raise RingError("embedding root search failed (%d roots)" % len(roots))
        r = min(roots)
        table = [dst.one]
        for _ in range(src.degree - 1):
            table.append(dst.mul(table[-1], r))
        _EMBED_CACHE[key] = table

    def phi(a):
        acc = dst.zero
        for c, power in zip(a, table):
            acc = dst.add(acc, dst.mul(dst.from_base(c), power))
        return acc

    return phi


def _roots_of_split_poly(F, dense):
    """All roots in F of a squarefree polynomial known to split over F."""
    rng = random.Random(derive_seed(0, "embed", field_degree(F), len(dense)))
    dense = u_monic(F, dense)
    out = []
    stack = [dense]
    while stack:
        g = stack.pop()
        n = u_deg(g)
        if n <= 0:
            continue
        if n == 1:
            out.append(F.neg(g[0]))
            continue
        h = None
        for _ in range(400):
            h = _equal_degree_split_once(F, g, 1, rng)
            if h is not None:
                break
        if h is None:
            raise RingError("root splitting did not converge")
        stack.append(h)
        stack.append(u_divmod(F, g, h)[0])
    return out


# -- homogeneous binary forms ------------------------------------------------


def binary_root_multiplicities(f, names=None, target=None, auto_extend=True, seed=0):
    """Projective roots with multiplicities of a homogeneous binary form.

    Returns ``(field, [((s, t), multiplicity), ...])`` with each projective
    root normalized so its first nonzero coordinate is one.  Multiplicities
    sum to the degree.  With ``auto_extend`` the coefficients are moved to
    the smallest extension of the coefficient field that splits the form;
    an explicit ``target`` field is used as-is and must be large enough.
    """
    F = f.ring
    if names is None:
        names = tuple(n for n in f.variables if f.degree_in(n) > 0)
        if len(names) == 1:
            names = (names[0], next(n for n in f.variables if n != names[0]))
    s_name, t_name = names
    d = f.homogeneous_degree()
    if d is None:
        raise PolynomialError("form must be homogeneous and nonzero")
    i_s = f.variables.index(s_name)
    i_t = f.variables.index(t_name)
    dense = [F.zero] * (d + 1)
    for m, c in f.terms.items():
        dense[m[i_t]] = c
    # multiplicity of the root [0:1] is the degree drop of f(1, t)
    g = u_strip(F, list(dense))
    inf_mult = d - u_deg(g) if g else d
    if target is not None:
        phi = extension_embedding(F, target) if target != F else (lambda c: c)
        E = target
        ge = [phi(c) for c in g]
    else:
        E, ge = F, list(g)
    fac_pairs = []
    if u_deg(ge) >= 1:
        Epoly = u_to_poly(E, ge, (t_name,), t_name)
        fac = factor_univariate(Epoly, seed)
        max_irred = max((gg.degree_in(t_name) for gg, _ in fac.factors), default=1)
        if max_irred > 1:
            if target is not None or not auto_extend:
                raise PolynomialError("roots do not lie in the requested field")
            degs = [gg.degree_in(t_name) for gg, _ in fac.factors]
            m = 1
            for dd in degs:
                m = m * dd // _gcd_int(m, dd)
            total = field_degree(F) * m
            E = make_extension(F.p, total)
            phi = extension_embedding(F, E)
            ge = [phi(c) for c in g]
            Epoly = u_to_poly(E, ge, (t_name,), t_name)
            fac = factor_univariate(Epoly, seed)
        for gg, mult in fac.factors:
            c0 = gg.coefficient_poly((t_name,), (0,)).constant_value()
            fac_pairs.append(((E.one, E.neg(c0)), mult))
    roots = []
    if inf_mult:
        roots.append(((E.zero, E.one), inf_mult))
    roots.extend(fac_pairs)
    assert sum(m for _, m in roots) == d
    return E, roots


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a
