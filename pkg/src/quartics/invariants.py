"""Invariants and contravariants of binary and ternary quartic forms.

Binary quartics are polynomials homogeneous of degree 4 in a chosen pair
of variables, by default (y, z); ternary quartics live in (x, y, z).
Extra variables in the same polynomial act as exact symbolic parameters,
so every function here works simultaneously for concrete forms over a
finite field and for generic forms over Z with indeterminate
coefficients.

The two classical invariants of f = f0*y^4 + ... + f4*z^4 are

    S = 12 f0 f4 - 3 f1 f3 + f2^2
    T = 72 f0 f2 f4 - 27 f0 f3^2 - 27 f1^2 f4 + 9 f1 f2 f3 - 2 f2^3

and the pair (S, T) cuts out exactly the quartics with a triple root away
from characteristic 3.  The contravariants H (degree 4) and K (degree 6)
of a ternary quartic q are obtained by restricting q to the generic line
u*x + v*y + w*z = 0 and clearing denominators: with
g(y, z) = q(-v*y - w*z, u*y, u*z), S(g) is divisible by u^4 and T(g) by
u^6, and

    H(q) = S(g) / u^4,        K(q) = T(g) / u^6.

Restricting to a concrete line recovers S and T of the restricted binary
form up to a fourth, respectively sixth, power of a unit attached to the
parameterization.
"""

from math import factorial

from .poly import Polynomial, PolynomialError, merge_variables, parse_polynomial
from .rings import ZZ

TERNARY = ("x", "y", "z")
DUAL = ("u", "v", "w")

QUARTIC_EXPONENTS = tuple(
    (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1))

PAIRING_WEIGHTS = {
    (i, j, k): factorial(i) * factorial(j) * factorial(k) // 2
    for (i, j, k) in QUARTIC_EXPONENTS
}


def project(f, new_variables):
    """Reshape to a tuple that must contain every variable f uses."""
    new_variables = tuple(new_variables)
    idx = []
    for n in f.variables:
        if n in new_variables:
            idx.append((f.variables.index(n), new_variables.index(n)))
        elif f.degree_in(n) > 0:
            raise PolynomialError("cannot drop live variable %r" % n)
    out = {}
    for m, c in f.terms.items():
        nm = [0] * len(new_variables)
        for old, new in idx:
            nm[new] = m[old]
        out[tuple(nm)] = c
    return Polynomial(f.ring, new_variables, out)


def parameter_variables(f, reserved):
    return tuple(n for n in f.variables if n not in reserved)


# ---------------------------------------------------------------------------
# binary quartics


def binary_coefficients(f, names=("y", "z")):
    """[f0, ..., f4] of f = sum fi * y^(4-i) z^i, as parameter polynomials."""
    a, b = names
    ia, ib = f.variables.index(a), f.variables.index(b)
    for m in f.terms:
        if m[ia] + m[ib] != 4:
            raise PolynomialError("form is not a binary quartic in %s, %s" % names)
    return [f.coefficient_poly(names, (4 - i, i)) for i in range(5)]


def invariant_S(f, names=("y", "z")):
    c = binary_coefficients(f, names)
    return (c[0] * c[4]).scale(12) - (c[1] * c[3]).scale(3) + c[2] * c[2]


def invariant_T(f, names=("y", "z")):
    c = binary_coefficients(f, names)
    return ((c[0] * c[2] * c[4]).scale(72)
            - (c[0] * c[3] * c[3]).scale(27)
            - (c[1] * c[1] * c[4]).scale(27)
            + (c[1] * c[2] * c[3]).scale(9)
            - (c[2] * c[2] * c[2]).scale(2))


def invariant_S3(f, names=("y", "z")):
    """Degree-3 companion of S with 3*S3 = T + 2 f2 S identically."""
    c = binary_coefficients(f, names)
    return ((c[0] * c[2] * c[4]).scale(32)
            - (c[0] * c[3] * c[3]).scale(9)
            - (c[1] * c[1] * c[4]).scale(9)
            + c[1] * c[2] * c[3])


def invariant_S4(f, names=("y", "z")):
    """Degree-4 companion with 3*S4 = S3 f2 + S (f0 f4 - f1 f3) identically."""
    c = binary_coefficients(f, names)
    return ((c[0] * c[2] * c[2] * c[4]).scale(11)
            + (c[0] * c[0] * c[4] * c[4]).scale(4)
            - (c[0] * c[1] * c[3] * c[4]).scale(5)
            - (c[0] * c[2] * c[3] * c[3]).scale(3)
            - (c[1] * c[1] * c[2] * c[4]).scale(3)
            + c[1] * c[1] * c[3] * c[3])


def bilinear_S(f, g, names=("y", "z")):
    """Symmetric bilinear form with S(f+g) = S(f) + <f,g> + S(g)."""
    if f.ring != g.ring:
        raise PolynomialError("ring mismatch in bilinear form")
    a = binary_coefficients(f, names)
    b = binary_coefficients(g, names)
    return ((a[0] * b[4]).scale(12) - (a[1] * b[3]).scale(3)
            + (a[2] * b[2]).scale(2)
            - (a[3] * b[1]).scale(3) + (a[4] * b[0]).scale(12))


def transform_binary(f, M, names=("y", "z")):
    """f(a*y + b*z, c*y + d*z) for M = [[a, b], [c, d]]."""
    a, b = names
    R = f.ring
    tvars = f.variables
    ya = Polynomial.variable(R, tvars, a)
    zb = Polynomial.variable(R, tvars, b)

    def lin(row):
        return ya.scale(row[0]) + zb.scale(row[1])

    return f.substitute({a: lin(M[0]), b: lin(M[1])})


# ---------------------------------------------------------------------------
# ternary quartics and their contravariants


def check_ternary_quartic(q):
    ix = [q.variables.index(n) for n in TERNARY if n in q.variables]
    for m in q.terms:
        if sum(m[i] for i in ix) != 4:
            raise PolynomialError("form is not homogeneous of degree 4 in x, y, z")


def generic_line_restriction(q):
    """q(-v*y - w*z, u*y, u*z) in the variables (y, z, u, v, w) + parameters."""
    R = q.ring
    params = parameter_variables(q, TERNARY + DUAL)
    tvars = merge_variables(("y", "z") + DUAL, params)
    y = Polynomial.variable(R, tvars, "y")
    z = Polynomial.variable(R, tvars, "z")
    u = Polynomial.variable(R, tvars, "u")
    v = Polynomial.variable(R, tvars, "v")
    w = Polynomial.variable(R, tvars, "w")
    return q.substitute({"x": -(v * y) - (w * z), "y": u * y, "z": u * z})


def _cleared_contravariant(q, binary_invariant, power):
    check_ternary_quartic(q)
    g = generic_line_restriction(q)
    val = binary_invariant(g, ("y", "z"))
    try:
        val = val.divide_by_monomial(("u",), (power,))
    except PolynomialError as exc:
        raise PolynomialError(
            "contravariant clearing failed; this indicates an internal error") from exc
    params = parameter_variables(q, TERNARY + DUAL)
    return project(val, merge_variables(DUAL, params))


def harmonic_quartic(q):
    """The degree-4 contravariant H(q) in the dual variables (u, v, w)."""
    return _cleared_contravariant(q, invariant_S, 4)


def harmonic_sextic(q):
    """The degree-6 contravariant K(q) in the dual variables (u, v, w)."""
    return _cleared_contravariant(q, invariant_T, 6)


def bilinear_H(q, r):
    """Bilinear companion of H: H(q+r) = H(q) + <q,r> + H(r)."""
    if q.ring != r.ring:
        raise PolynomialError("ring mismatch in bilinear form")
    check_ternary_quartic(q)
    check_ternary_quartic(r)
    params = parameter_variables(q, TERNARY + DUAL) + parameter_variables(r, TERNARY + DUAL)
    gq = generic_line_restriction(q)
    gr = generic_line_restriction(r)
    tvars = merge_variables(gq.variables, gr.variables)
    val = bilinear_S(gq.extend(tvars), gr.extend(tvars), ("y", "z"))
    val = val.divide_by_monomial(("u",), (4,))
    return project(val, merge_variables(DUAL, params))


def is_totally_harmonic(q):
    return harmonic_quartic(q).is_zero()


def apolarity_pair(q, h):
    """Weighted coefficient pairing of a ternary quartic with a dual quartic.

    <x^i y^j z^k, u^i v^j w^k> = i! j! k! / 2, orthogonal across distinct
    exponent triples; the weights are integers and are reduced into the
    coefficient ring only after being formed.
    """
    if q.ring != h.ring:
        raise PolynomialError("ring mismatch in pairing")
    qc = {e: q.coefficient_poly(TERNARY, e) for e in QUARTIC_EXPONENTS}
    hc = {e: h.coefficient_poly(DUAL, e) for e in QUARTIC_EXPONENTS}
    params = merge_variables(parameter_variables(q, TERNARY + DUAL),
                             parameter_variables(h, TERNARY + DUAL))
    acc = Polynomial.zero(q.ring, params)
    for e in QUARTIC_EXPONENTS:
        a = qc[e]
        b = hc[e]
        if a.is_zero() or b.is_zero():
            continue
        term = (project(a, params) * project(b, params)).scale(PAIRING_WEIGHTS[e])
        acc = acc + term
    return acc


def invariant_A(q):
    """The degree-3 invariant <q, H(q)>."""
    return apolarity_pair(q, harmonic_quartic(q))


def trilinear_t(q1, q2, q3):
    """<q1, <q2, q3>>; totally symmetric in its three arguments."""
    return apolarity_pair(q1, bilinear_H(q2, q3))


def transform_ternary(q, M):
    """q(M . (x, y, z)^t) for a 3x3 payload matrix M."""
    R = q.ring
    tvars = q.variables
    gens = [Polynomial.variable(R, tvars, n) for n in TERNARY]

    def lin(row):
        acc = Polynomial.zero(R, tvars)
        for c, g in zip(row, gens):
            acc = acc + g.scale(c)
        return acc

    return q.substitute({n: lin(M[i]) for i, n in enumerate(TERNARY)})


def transform_dual(h, M):
    """h(M . (u, v, w)^t) for a 3x3 payload matrix M."""
    R = h.ring
    tvars = h.variables
    gens = [Polynomial.variable(R, tvars, n) for n in DUAL]

    def lin(row):
        acc = Polynomial.zero(R, tvars)
        for c, g in zip(row, gens):
            acc = acc + g.scale(c)
        return acc

    return h.substitute({n: lin(M[i]) for i, n in enumerate(DUAL)})


# ---------------------------------------------------------------------------
# the Lie algebra action


class LieOperator:
    """Element of gl_3 acting on forms as sum m[i][j] * var_i d/d(var_j)."""

    def __init__(self, ring, matrix):
        self.ring = ring
        self.matrix = [[c if not isinstance(c, int) else ring.from_int(c)
                        for c in row] for row in matrix]

    @classmethod
    def basis_element(cls, ring, xi, eta):
        m = [[0] * 3 for _ in range(3)]
        m[TERNARY.index(xi)][TERNARY.index(eta)] = 1
        return cls(ring, m)

    def trace(self):
        R = self.ring
        return R.sum(self.matrix[i][i] for i in range(3))

    def is_traceless(self):
        return self.ring.is_zero(self.trace())

    def apply(self, q):
        R = q.ring
        if R != self.ring:
            raise PolynomialError("operator ring mismatch")
        out = Polynomial.zero(R, q.variables)
        for i, xi in enumerate(TERNARY):
            xi_poly = Polynomial.variable(R, q.variables, xi)
            for j, eta in enumerate(TERNARY):
                c = self.matrix[i][j]
                if R.is_zero(c):
                    continue
                out = out + (xi_poly * q.derivative(eta)).scale(c)
        return out

    def __repr__(self):
        return "LieOperator(%r)" % (self.matrix,)


def lie_apply(g, q):
    return g.apply(q)


def sl3_standard_generators(ring):
    """The 8 usual generators: six off-diagonal and two diagonal differences."""
    gens = []
    for xi in TERNARY:
        for eta in TERNARY:
            if xi != eta:
                gens.append(LieOperator.basis_element(ring, xi, eta))
    d1 = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    d2 = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    gens.append(LieOperator(ring, d1))
    gens.append(LieOperator(ring, d2))
    return gens


def corollary_operator(ring, index):
    """The sl_3 element whose vanishing pairing gives the indexed identity."""
    if index == 1:
        return LieOperator(ring, [[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    if index == 2:
        return LieOperator.basis_element(ring, "y", "x")
    if index == 3:
        return LieOperator.basis_element(ring, "z", "x")
    if index == 4:
        return LieOperator(ring, [[0, 0, 0], [0, 1, 0], [0, 0, -1]])
    if index == 5:
        return LieOperator.basis_element(ring, "z", "y")
    if index == 6:
        return LieOperator.basis_element(ring, "x", "y")
    raise ValueError("identity index must be in 1..6")


def corollary_identity(index, q, h=None):
    """Left-hand side of the indexed coefficient identity; must vanish.

    The six identities are explicit weighted sums over the coefficients
    a_ijk of q and h_ijk of H(q); index 1 for instance is
    sum (i-j) (i!j!k!/2) a_ijk h_ijk.  They are evaluated here directly
    from the stated sums, independently of the Lie-operator route.
    """
    if h is None:
        h = harmonic_quartic(q)
    qc = {e: q.coefficient_poly(TERNARY, e) for e in QUARTIC_EXPONENTS}
    hc = {e: h.coefficient_poly(DUAL, e) for e in QUARTIC_EXPONENTS}
    params = merge_variables(parameter_variables(q, TERNARY + DUAL),
                             parameter_variables(h, TERNARY + DUAL))

    def a_at(e):
        if any(c < 0 or c > 4 for c in e) or sum(e) != 4:
            return None
        return qc[e]

    acc = Polynomial.zero(q.ring, params)
    for (i, j, k) in QUARTIC_EXPONENTS:
        w = PAIRING_WEIGHTS[(i, j, k)]
        if index == 1:
            coeff, a = (i - j) * w, a_at((i, j, k))
        elif index == 2:
            coeff, a = (i + 1) * w, a_at((i + 1, j - 1, k))
        elif index == 3:
            coeff, a = (i + 1) * w, a_at((i + 1, j, k - 1))
        elif index == 4:
            coeff, a = (j - k) * w, a_at((i, j, k))
        elif index == 5:
            coeff, a = (j + 1) * w, a_at((i, j + 1, k - 1))
        elif index == 6:
            coeff, a = (j + 1) * w, a_at((i - 1, j + 1, k))
        else:
            raise ValueError("identity index must be in 1..6")
        if a is None or coeff == 0 or a.is_zero():
            continue
        b = hc[(i, j, k)]
        if b.is_zero():
            continue
        acc = acc + (project(a, params) * project(b, params)).scale(coeff)
    return acc


def verify_lie_identity(g):
    """Residual of <g q, H(q)> on the generic integer quartic; zero passes.

    Raises for operators outside sl_3.  Returns the residual polynomial in
    the 15 generic coefficients, which is empty exactly when the identity
    holds.
    """
    if not g.is_traceless():
        raise PolynomialError("operator is not traceless")
    q = generic_ternary_quartic()
    gz = LieOperator(ZZ, [[int(c) for c in row] for row in g.matrix])
    gq = gz.apply(q)
    return apolarity_pair(gq, harmonic_quartic(q))


# ---------------------------------------------------------------------------
# generic forms and the coefficient table for H


def coefficient_name(prefix, e):
    return "%s%d%d%d" % (prefix, e[0], e[1], e[2])


def generic_ternary_quartic(ring=ZZ, prefix="a"):
    """sum a_ijk x^i y^j z^k with indeterminate integer coefficients."""
    names = [coefficient_name(prefix, e) for e in QUARTIC_EXPONENTS]
    tvars = merge_variables(TERNARY, names)
    acc = Polynomial.zero(ring, tvars)
    for e in QUARTIC_EXPONENTS:
        mono = [0] * len(tvars)
        for n, exp in zip(TERNARY, e):
            mono[tvars.index(n)] = exp
        mono[tvars.index(coefficient_name(prefix, e))] = 1
        acc = acc + Polynomial(ring, tvars, {tuple(mono): ring.one})
    return acc


_GENERIC_H_TABLE = None


def generic_harmonic_table():
    """{(i,j,k): h_ijk} for the generic quartic, as integer polynomials.

    Cached after the first call; used as an independent second route to H
    for cross-checking the cleared-denominator computation.
    """
    global _GENERIC_H_TABLE
    if _GENERIC_H_TABLE is None:
        q = generic_ternary_quartic()
        H = harmonic_quartic(q)
        _GENERIC_H_TABLE = {e: H.coefficient_poly(DUAL, e) for e in QUARTIC_EXPONENTS}
    return _GENERIC_H_TABLE


def harmonic_quartic_via_table(q):
    """Evaluate the cached generic coefficient table at a concrete quartic."""
    check_ternary_quartic(q)
    if parameter_variables(q, TERNARY):
        raise PolynomialError("table route needs a concrete quartic")
    R = q.ring
    table = generic_harmonic_table()
    values = {}
    for e in QUARTIC_EXPONENTS:
        values[coefficient_name("a", e)] = q.coefficient(_embed_mono(q, e))
    out = {}
    for e, hpoly in table.items():
        acc = R.zero
        for m, c in hpoly.terms.items():
            term = R.from_int(c)
            for name, exp in zip(hpoly.variables, m):
                if exp:
                    term = R.mul(term, R.pow(values[name], exp))
            acc = R.add(acc, term)
        if not R.is_zero(acc):
            out[e] = acc
    return Polynomial.from_coeff_map(R, DUAL, out)


def _embed_mono(q, e):
    mono = [0] * len(q.variables)
    for n, exp in zip(TERNARY, e):
        if exp:
            mono[q.variables.index(n)] = exp
    return tuple(mono)


# ---------------------------------------------------------------------------
# the characteristic-3 square formula


def harmonic_char3_square(q):
    """H(q) through the characteristic-3 square formula.

    In characteristic 3 the invariant S degenerates to f2^2, which makes
    H(q) a perfect square; writing q1 for the x^2yz, xy^2z, xyz^2 part of
    q and q2 for the x^2y^2, x^2z^2, y^2z^2 part,

        H(q) = ((q2(vw, uw, uv) - q1(vw, uw, uv)) / (uvw)^2)^2.
    """
    R = q.ring
    if R.characteristic != 3:
        raise PolynomialError("the square formula needs characteristic 3")
    check_ternary_quartic(q)
    params = parameter_variables(q, TERNARY + DUAL)
    part1 = Polynomial.zero(R, q.variables)
    part2 = Polynomial.zero(R, q.variables)
    for e, sel in (((2, 1, 1), 1), ((1, 2, 1), 1), ((1, 1, 2), 1),
                   ((2, 2, 0), 2), ((2, 0, 2), 2), ((0, 2, 2), 2)):
        coeff = q.coefficient_poly(TERNARY, e)
        if coeff.is_zero():
            continue
        mono = Polynomial(R, q.variables, {_embed_mono(q, e): R.one})
        if sel == 1:
            part1 = part1 + coeff * mono
        else:
            part2 = part2 + coeff * mono
    tvars = merge_variables(DUAL, params)
    u = Polynomial.variable(R, tvars, "u")
    v = Polynomial.variable(R, tvars, "v")
    w = Polynomial.variable(R, tvars, "w")
    img = {"x": v * w, "y": u * w, "z": u * v}
    num = part2.substitute(img) - part1.substitute(img)
    quad = num.divide_by_monomial(DUAL, (2, 2, 2))
    return quad * quad


# ---------------------------------------------------------------------------
# parsing helpers used across the package


def parse_ternary_quartic(text, ring):
    q = parse_polynomial(text, ring, None)
    q = q.extend(merge_variables(q.variables, TERNARY))
    check_ternary_quartic(q)
    return q


def parse_binary_quartic(text, ring):
    f = parse_polynomial(text, ring, None)
    f = f.extend(merge_variables(f.variables, ("y", "z")))
    return f
