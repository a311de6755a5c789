"""Sparse multivariate polynomial arithmetic over the exact rings.

A :class:`Polynomial` stores a ring, an ordered tuple of variable names and
a dict mapping exponent tuples to nonzero payloads.  Binary operations
require identical rings and identical variable tuples; use
:func:`merge_variables` and :meth:`Polynomial.extend` to align contexts
first.  All values are immutable in practice: no method mutates its
receiver.

Variable order.  The canonical names x, y, z, u, v, w, t, eps carry a fixed
precedence (x highest); any other names sort after them alphabetically.
The printed form lists terms in graded lexicographic order, highest first,
and is canonical: equal polynomials print identically, and the printer
output parses back to the same polynomial.

Text grammar: terms joined by + and -, coefficients as integers or a/b
fractions, monomials like ``x^3*y``; whitespace is insignificant.  Over an
extension field a coefficient may be written in parentheses as a polynomial
in the generator, e.g. ``(a^2+3)*x*y``.
"""

from .rings import LocalRing, RingError

_CANONICAL = ("x", "y", "z", "u", "v", "w", "t", "eps")
_PRECEDENCE = {n: i for i, n in enumerate(_CANONICAL)}


def variable_sort_key(name):
    return (0, _PRECEDENCE[name]) if name in _PRECEDENCE else (1, name)


def order_variables(names):
    return tuple(sorted(set(names), key=variable_sort_key))


def merge_variables(*tuples):
    seen = set()
    for t in tuples:
        seen.update(t)
    return order_variables(seen)


def _grlex_key(mono):
    return (sum(mono), mono)


class PolynomialError(ValueError):
    pass


class Polynomial:
    __slots__ = ("ring", "variables", "terms")

    def __init__(self, ring, variables, terms=None):
        self.ring = ring
        self.variables = tuple(variables)
        clean = {}
        if terms:
            for mono, c in terms.items():
                if not ring.is_zero(c):
                    clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring, variables):
        return cls(ring, variables, {})

    @classmethod
    def constant(cls, ring, variables, value):
        zero_mono = (0,) * len(variables)
        return cls(ring, variables, {zero_mono: value})

    @classmethod
    def from_int(cls, ring, variables, n):
        return cls.constant(ring, variables, ring.from_int(n))

    @classmethod
    def variable(cls, ring, variables, name, exponent=1):
        variables = tuple(variables)
        mono = [0] * len(variables)
        mono[variables.index(name)] = exponent
        return cls(ring, variables, {tuple(mono): ring.one})

    @classmethod
    def from_coeff_map(cls, ring, variables, mapping):
        """Build from {monomial tuple: int-or-payload}, coercing ints."""
        terms = {}
        for mono, c in mapping.items():
            if isinstance(c, int):
                c = ring.from_int(c)
            terms[tuple(mono)] = c
        return cls(ring, variables, terms)

    # -- basic structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self):
        """The payload of a constant polynomial (zero included)."""
        if not self.terms:
            return self.ring.zero
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant: %s" % self)
        return next(iter(self.terms.values()))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max((m[i] for m in self.terms), default=0)

    def homogeneous_degree(self):
        """Common total degree of every term, or None; zero gives None."""
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.zero)

    def iter_sorted(self):
        for mono in sorted(self.terms, key=_grlex_key, reverse=True):
            yield mono, self.terms[mono]

    def leading(self):
        """(monomial, coefficient) largest in graded-lex order."""
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    def _check(self, other):
        if self.ring != other.ring:
            raise PolynomialError("ring mismatch: %r vs %r" % (self.ring, other.ring))
        if self.variables != other.variables:
            raise PolynomialError(
                "variable mismatch: %r vs %r" % (self.variables, other.variables))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        R = self.ring
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = R.add(out[m], c)
                if R.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        p = Polynomial.__new__(Polynomial)
        p.ring, p.variables, p.terms = R, self.variables, out
        return p

    def __neg__(self):
        R = self.ring
        p = Polynomial.__new__(Polynomial)
        p.ring, p.variables = R, self.variables
        p.terms = {m: R.neg(c) for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        R = self.ring
        out = {}
        add, mul, is_zero = R.add, R.mul, R.is_zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = mul(c1, c2)
                if m in out:
                    c = add(out[m], c)
                if is_zero(c):
                    out.pop(m, None)
                else:
                    out[m] = c
        p = Polynomial.__new__(Polynomial)
        p.ring, p.variables, p.terms = R, self.variables, out
        return p

    def __pow__(self, n):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        result = Polynomial.constant(self.ring, self.variables, self.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        R = self.ring
        if isinstance(c, int):
            c = R.from_int(c)
        p = Polynomial.__new__(Polynomial)
        p.ring, p.variables = R, self.variables
        p.terms = {}
        for m, v in self.terms.items():
            cv = R.mul(c, v)
            if not R.is_zero(cv):
                p.terms[m] = cv
        return p

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring == other.ring and self.variables == other.variables
                and self.terms == other.terms)

    def __ne__(self, other):
        res = self.__eq__(other)
        return NotImplemented if res is NotImplemented else not res

    # -- calculus and substitution ------------------------------------------

    def derivative(self, name):
        i = self.variables.index(name)
        R = self.ring
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            nc = R.mul(c, R.from_int(e))
            if R.is_zero(nc):
                continue
            nm = m[:i] + (e - 1,) + m[i + 1:]
            prev = out.get(nm)
            out[nm] = nc if prev is None else R.add(prev, nc)
        return Polynomial(R, self.variables, out)

    def substitute(self, assignment):
        """Simultaneous substitution name -> Polynomial.

        All assigned polynomials must share one ring and variable tuple;
        unassigned variables must exist in that target tuple.  Returns a
        polynomial in the target tuple.
        """
        if not assignment:
            return self
        target = next(iter(assignment.values()))
        tvars, R = target.variables, target.ring
        if R != self.ring:
            raise PolynomialError("substitution ring mismatch")
        images = {}
        for name in self.variables:
            if name in assignment:
                img = assignment[name]
                if img.variables != tvars or img.ring != R:
                    raise PolynomialError("assigned polynomials must share one context")
                images[name] = img
            else:
                images[name] = Polynomial.variable(R, tvars, name)
        powers = {name: {0: Polynomial.constant(R, tvars, R.one)} for name in images}
        result = Polynomial.zero(R, tvars)
        for m, c in self.terms.items():
            term = Polynomial.constant(R, tvars, c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                name = self.variables[i]
                cache = powers[name]
                if e not in cache:
                    k = max(cache)
                    acc = cache[k]
                    while k < e:
                        acc = acc * images[name]
                        k += 1
                        cache[k] = acc
                term = term * cache[e]
            result = result + term
        return result

    def partial_eval(self, values):
        """Substitute payloads for a subset of variables, keeping the tuple."""
        R = self.ring
        idx = {self.variables.index(n): v for n, v in values.items()}
        out = {}
        for m, c in self.terms.items():
            for i, val in idx.items():
                e = m[i]
                if e:
                    c = R.mul(c, R.pow(val, e))
            if R.is_zero(c):
                continue
            nm = tuple(0 if i in idx else e for i, e in enumerate(m))
            prev = out.get(nm)
            c2 = c if prev is None else R.add(prev, c)
            if R.is_zero(c2):
                out.pop(nm, None)
            else:
                out[nm] = c2
        return Polynomial(R, self.variables, out)

    def evaluate(self, values):
        """Full evaluation; every variable occurring must be assigned."""
        R = self.ring
        acc = R.zero
        order = [(i, values[n]) for i, n in enumerate(self.variables) if n in values]
        assigned = {i for i, _ in order}
        for m, c in self.terms.items():
            if any(e and i not in assigned for i, e in enumerate(m)):
                raise PolynomialError("unassigned variable in evaluation")
            for i, val in order:
                e = m[i]
                if e:
                    c = R.mul(c, R.pow(val, e))
            acc = R.add(acc, c)
        return acc

    # -- context changes ----------------------------------------------------

    def extend(self, new_variables):
        """Reinterpret in a larger variable tuple."""
        new_variables = tuple(new_variables)
        pos = []
        for n in self.variables:
            if n not in new_variables:
                raise PolynomialError("extend cannot drop variable %r" % n)
            pos.append(new_variables.index(n))
        out = {}
        for m, c in self.terms.items():
            nm = [0] * len(new_variables)
            for p, e in zip(pos, m):
                nm[p] = e
            out[tuple(nm)] = c
        return Polynomial(self.ring, new_variables, out)

    def drop_unused(self, keep=()):
        """Shrink the variable tuple to the variables actually present."""
        used = set(keep)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.variables[i])
        new_vars = tuple(n for n in self.variables if n in used)
        idx = [self.variables.index(n) for n in new_vars]
        out = {tuple(m[i] for i in idx): c for m, c in self.terms.items()}
        return Polynomial(self.ring, new_vars, out)

    def map_coefficients(self, func, new_ring):
        out = {}
        for m, c in self.terms.items():
            out[m] = func(c)
        return Polynomial(new_ring, self.variables, out)

    def change_ring(self, new_ring):
        from .rings import embed
        return self.map_coefficients(lambda c: embed(c, self.ring, new_ring), new_ring)

    def collect(self, names):
        """Group by the exponents of ``names``: {exponent tuple: coefficient poly}.

        The coefficient polynomials keep the full variable tuple with the
        collected variables zeroed out.
        """
        idx = [self.variables.index(n) for n in names]
        idxset = set(idx)
        groups = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idx)
            rest = tuple(0 if i in idxset else e for i, e in enumerate(m))
            groups.setdefault(key, {})[rest] = c
        return {k: Polynomial(self.ring, self.variables, t) for k, t in groups.items()}

    def coefficient_poly(self, names, exponents):
        """Coefficient of the given power product of ``names`` as a polynomial."""
        idx = [self.variables.index(n) for n in names]
        idxset = set(idx)
        want = tuple(exponents)
        out = {}
        for m, c in self.terms.items():
            if tuple(m[i] for i in idx) != want:
                continue
            rest = tuple(0 if i in idxset else e for i, e in enumerate(m))
            out[rest] = c
        return Polynomial(self.ring, self.variables, out)

    # -- division -----------------------------------------------------------

    def divide_by_monomial(self, names, exponents):
        """Exact division by a power product; raises if any term fails."""
        idx = [self.variables.index(n) for n in names]
        out = {}
        for m, c in self.terms.items():
            nm = list(m)
            for i, e in zip(idx, exponents):
                if nm[i] < e:
                    raise PolynomialError("monomial division is not exact")
                nm[i] -= e
            out[tuple(nm)] = c
        return Polynomial(self.ring, self.variables, out)

    def exact_div(self, other):
        """Quotient self/other when the division is exact; raises otherwise."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        R = self.ring
        rem = self
        quo = Polynomial.zero(R, self.variables)
        lm, lc = other.leading()
        while not rem.is_zero():
            rm, rc = rem.leading()
            qm = tuple(a - b for a, b in zip(rm, lm))
            if any(e < 0 for e in qm):
                raise PolynomialError("inexact polynomial division")
            qc = R.exact_div(rc, lc)
            qt = Polynomial(R, self.variables, {qm: qc})
            quo = quo + qt
            rem = rem - qt * other
        return quo

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        R = self.ring
        pieces = []
        for mono, c in self.iter_sorted():
            cs = R.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if any(ch in cs for ch in "+-*^("):
                cs = "(%s)" % cs
            factors = []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = cs + "*" + "*".join(factors)
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "<poly %s over %r>" % (self, self.ring)


# ---------------------------------------------------------------------------
# parsing


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise PolynomialError("%s at column %d" % (msg, self.pos + 1))

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_int(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def take_name(self):
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected name")
        return self.text[start:self.pos]

    def take_paren(self):
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    self.pos += 1
                    return self.text[start + 1:self.pos - 1]
            self.pos += 1
        self.error("unbalanced parenthesis")


def _scan_names(text):
    names, cur = set(), ""
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if depth == 0 and (ch.isalpha() or ch == "_" or (cur and ch.isdigit())):
            cur += ch
        else:
            if cur:
                names.add(cur)
            cur = ""
    if cur:
        names.add(cur)
    return names


def parse_polynomial(text, ring, variables=None, restrict=False):
    """Parse the text grammar; see the module docstring.

    With ``variables=None`` the variable tuple is inferred from the names
    appearing in the input.  ``restrict=True`` confines names to the
    canonical set, as the command line requires.
    """
    if variables is None:
        names = _scan_names(text)
        if restrict:
            bad = names - set(_CANONICAL)
            if bad:
                raise PolynomialError("unknown variable %s" % sorted(bad)[0])
        variables = order_variables(names)
    variables = tuple(variables)
    tok = _Tokenizer(text)
    result = Polynomial.zero(ring, variables)
    sign = 1
    first = True
    while True:
        ch = tok.peek()
        if ch is None:
            if first:
                raise PolynomialError("empty polynomial")
            break
        if ch == "+":
            tok.pos += 1
            sign = 1
            continue
        if ch == "-":
            tok.pos += 1
            sign = -sign
            continue
        first = False
        coeff = ring.one
        mono = [0] * len(variables)
        saw_factor = False
        while True:
            ch = tok.peek()
            if ch is None or ch in "+-":
                break
            if ch == "*":
                tok.pos += 1
                continue
            if ch == "(":
                inner = tok.take_paren()
                try:
                    val = ring.parse(inner)
                except (AttributeError, ValueError) as exc:
                    tok.error("cannot parse coefficient %r (%s)" % (inner, exc))
                coeff = ring.mul(coeff, val)
                saw_factor = True
                continue
            if ch.isdigit():
                num = tok.take_int()
                if tok.peek() == "/":
                    tok.pos += 1
                    den = tok.take_int()
                    try:
                        val = ring.exact_div(ring.from_int(num), ring.from_int(den))
                    except (RingError, ZeroDivisionError):
                        tok.error("coefficient %d/%d not in the ring" % (num, den))
                else:
                    val = ring.from_int(num)
                coeff = ring.mul(coeff, val)
                saw_factor = True
                continue
            if ch.isalpha() or ch == "_":
                name = tok.take_name()
                if name not in variables:
                    tok.error("unknown variable %r" % name)
                e = 1
                if tok.peek() == "^":
                    tok.pos += 1
                    e = tok.take_int()
                mono[variables.index(name)] += e
                saw_factor = True
                continue
            tok.error("unexpected character %r" % ch)
        if not saw_factor:
            tok.error("empty term")
        if sign < 0:
            coeff = ring.neg(coeff)
        result = result + Polynomial(ring, variables, {tuple(mono): coeff})
        sign = 1
    return result


# ---------------------------------------------------------------------------
# gcd machinery (field coefficients)


def _pseudo_rem(f, g, name):
    """Pseudo-remainder of f by g viewed as univariate in ``name``."""
    R = f.ring
    i = f.variables.index(name)
    dg = g.degree_in(name)
    lc_g = g.coefficient_poly((name,), (dg,))
    rem = f
    var = Polynomial.variable(R, f.variables, name)
    while not rem.is_zero() and rem.degree_in(name) >= dg:
        dr = rem.degree_in(name)
        lc_r = rem.coefficient_poly((name,), (dr,))
        rem = rem * lc_g - g * lc_r * var ** (dr - dg)
        if not rem.is_zero() and rem.degree_in(name) == dr:
            raise PolynomialError("pseudo-division failed to reduce degree")
    return rem


def _content(f, name):
    """gcd of the coefficients of f as a univariate in ``name``."""
    groups = f.collect((name,))
    cont = None
    for _, coeff in sorted(groups.items()):
        cont = coeff if cont is None else poly_gcd(cont, coeff)
    return cont


def poly_gcd(f, g):
    """gcd over a field coefficient ring, monic in graded-lex leading term.

    Recursive primitive PRS; intended for the small homogeneous forms this
    package manipulates, not for large random inputs.
    """
    if not f.ring.is_field:
        raise PolynomialError("poly_gcd needs field coefficients")
    if f.is_zero() and g.is_zero():
        return f
    if f.is_zero() or g.is_zero():
        h = g if f.is_zero() else f
        _, lc = h.leading()
        return h.scale(h.ring.inv(lc))
    active = [n for n in f.variables
              if f.degree_in(n) > 0 or g.degree_in(n) > 0]
    if not active:
        return Polynomial.constant(f.ring, f.variables, f.ring.one)
    name = active[0]
    if f.degree_in(name) == 0 and g.degree_in(name) == 0:
        raise AssertionError("unreachable")
    cf, cg = _content(f, name), _content(g, name)
    cont = poly_gcd(cf, cg)
    a, b = f.exact_div(cf), g.exact_div(cg)
    while not b.is_zero() and b.degree_in(name) > 0:
        r = _pseudo_rem(a, b, name)
        a, b = b, (r if r.is_zero() else r.exact_div(_content(r, name)))
    if not b.is_zero():
        prim = Polynomial.constant(f.ring, f.variables, f.ring.one)
    else:
        prim = a
    h = cont * prim
    _, lc = h.leading()
    return h.scale(h.ring.inv(lc))


def poly_gcd_many(polys):
    out = None
    for f in polys:
        out = f if out is None else poly_gcd(out, f)
        if out.is_constant() and not out.is_zero():
            break
    return out


def squarefree_part(f):
    """f with repeated factors collapsed, for field coefficients."""
    parts = [f.derivative(n) for n in f.variables if f.degree_in(n) > 0]
    g = poly_gcd_many([f] + parts)
    return f.exact_div(g)


# ---------------------------------------------------------------------------
# resultants


def sylvester_matrix(f, g, name):
    m, n = f.degree_in(name), g.degree_in(name)
    if m < 1 and n < 1:
        raise PolynomialError("variable %r absent from both inputs" % name)
    if m < 1 or n < 1:
        raise PolynomialError("resultant needs positive degree in %r for both inputs" % name)
    fc = [f.coefficient_poly((name,), (i,)) for i in range(m + 1)]
    gc = [g.coefficient_poly((name,), (i,)) for i in range(n + 1)]
    size = m + n
    zero = Polynomial.zero(f.ring, f.variables)
    rows = []
    for r in range(n):
        row = [zero] * size
        for i in range(m + 1):
            row[r + i] = fc[m - i]
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for i in range(n + 1):
            row[r + i] = gc[n - i]
        rows.append(row)
    return rows


def _det_bareiss(rows, ring, variables):
    """Fraction-free determinant; entries are polynomials over a domain."""
    n = len(rows)
    if n == 0:
        return Polynomial.constant(ring, variables, ring.one)
    M = [row[:] for row in rows]
    one = Polynomial.constant(ring, variables, ring.one)
    prev = one
    sign = 1
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(ring, variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
            M[i][k] = Polynomial.zero(ring, variables)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f, g, name):
    """Sylvester resultant eliminating ``name``; exact over any domain."""
    if f.ring != g.ring or f.variables != g.variables:
        raise PolynomialError("resultant inputs must share one context")
    rows = sylvester_matrix(f, g, name)
    return _det_bareiss(rows, f.ring, f.variables)


def resultant_univariate(ring, A, B):
    """Resultant of two payload coefficient lists over a field (low-to-high)."""
    A = list(A)
    B = list(B)
    while A and ring.is_zero(A[-1]):
        A.pop()
    while B and ring.is_zero(B[-1]):
        B.pop()
    if not A or not B:
        return ring.zero
    m, n = len(A) - 1, len(B) - 1
    if m == 0:
        return ring.pow(A[0], n)
    if n == 0:
        return ring.pow(B[0], m)
    size = m + n
    M = [[ring.zero] * size for _ in range(size)]
    for r in range(n):
        for i in range(m + 1):
            M[r][r + i] = A[m - i]
    for r in range(m):
        for i in range(n + 1):
            M[n + r][r + i] = B[n - i]
    det = ring.one
    sign = False
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if not ring.is_zero(M[r][col]):
                pivot = r
                break
        if pivot is None:
            return ring.zero
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = not sign
        pv = M[col][col]
        det = ring.mul(det, pv)
        inv = ring.inv(pv)
        for r in range(col + 1, size):
            c = M[r][col]
            if ring.is_zero(c):
                continue
            factor = ring.mul(c, inv)
            row, prow = M[r], M[col]
            for j in range(col, size):
                row[j] = ring.sub(row[j], ring.mul(factor, prow[j]))
    return ring.neg(det) if sign else det


# ---------------------------------------------------------------------------
# moving the special names t and eps between variables and coefficients


def absorb_parameter(f, name, target_ring):
    """Turn the variable ``name`` into coefficient structure.

    With a LocalRing target the powers of t become payload degrees; with a
    DualNumbers target eps-degree 0 and 1 become the two payload slots and
    higher eps powers vanish.  The input must live over the target's base
    ring.
    """
    from .rings import DualNumbers
    base = target_ring.base
    if f.ring != base:
        raise PolynomialError("polynomial must be over the base ring")
    if name not in f.variables:
        return f.map_coefficients(target_ring.from_base, target_ring)
    i = f.variables.index(name)
    new_vars = tuple(n for n in f.variables if n != name)
    grouped = {}
    for m, c in f.terms.items():
        nm = m[:i] + m[i + 1:]
        grouped.setdefault(nm, {})[m[i]] = c
    out = {}
    if isinstance(target_ring, DualNumbers):
        for nm, by_e in grouped.items():
            out[nm] = (by_e.get(0, base.zero), by_e.get(1, base.zero))
    else:
        for nm, by_e in grouped.items():
            coeffs = [base.zero] * (max(by_e) + 1)
            for e, c in by_e.items():
                coeffs[e] = c
            out[nm] = target_ring._strip(coeffs)
    return Polynomial(target_ring, new_vars, out)


def emit_parameter(f, name):
    """Inverse of :func:`absorb_parameter` for local-ring polynomials."""
    R = f.ring
    if not isinstance(R, LocalRing):
        raise PolynomialError("emit_parameter needs a local-ring polynomial")
    base = R.base
    new_vars = merge_variables(f.variables, (name,))
    i = new_vars.index(name)
    out = {}
    pos = [new_vars.index(n) for n in f.variables]
    for m, c in f.terms.items():
        for e, payload in enumerate(c):
            if base.is_zero(payload):
                continue
            nm = [0] * len(new_vars)
            for p, ex in zip(pos, m):
                nm[p] = ex
            nm[i] = e
            out[tuple(nm)] = payload
    return Polynomial(base, new_vars, out)


# ---------------------------------------------------------------------------
# the local-ring reduction map


def k_reduction(f):
    """Divide out the largest power of t and set t to zero.

    ``f`` is a polynomial over a LocalRing; the result lives over the base
    ring and is nonzero whenever f is nonzero.
    """
    R = f.ring
    if not isinstance(R, LocalRing):
        raise PolynomialError("k_reduction needs a local-ring polynomial")
    base = R.base
    if f.is_zero():
        return Polynomial.zero(base, f.variables)
    v = min(R.t_valuation(c) for c in f.terms.values())
    out = {}
    for m, c in f.terms.items():
        if len(c) > v and not base.is_zero(c[v]):
            out[m] = c[v]
    return Polynomial(base, f.variables, out)
