"""Inflection-line geometry of plane quartics.

The inflection scheme of a quartic curve q = 0 is the intersection of the
two contravariants H(q) and K(q) in the dual plane; for a quartic whose
singular points are at worst isolated double points it is finite of total
multiplicity 24.  This module computes that configuration exactly over a
prime field, classifies each line by its contact behaviour, and provides
the curve-side singularity analysis that feeds the classification.

Lines found by elimination live in per-orbit extension fields: each Galois
orbit of intersection points is presented over GF(p)[a]/(h) where h is the
matching irreducible factor of the eliminant, and the generator itself is
the computed root.  A configuration can be unified into one ambient
extension on demand, at the cost of deterministic root-finding for the
embeddings.

Elimination is seeded: a random invertible change of dual coordinates puts
the system in general position (scalar leading coefficients, one point per
fiber), and failures re-draw the matrix deterministically from the seed,
up to 32 attempts.
"""

import random

from .rings import ExtensionField, PrimeField, RingError, make_extension
from .poly import (
    Polynomial, PolynomialError, k_reduction, merge_variables, parse_polynomial,
    poly_gcd, poly_gcd_many,
)
from .factor import (
    derive_seed, extension_embedding, factor_univariate, field_degree,
    u_deg, u_from_poly, u_gcd, u_monic, u_strip,
)
from .linalg import mat_inv, mat_vec, random_invertible
from .invariants import (
    DUAL, TERNARY, check_ternary_quartic, harmonic_quartic, harmonic_sextic,
    invariant_S, is_totally_harmonic, parse_ternary_quartic, project,
    transform_dual, transform_ternary,
)

# classification of a single inflection line
SIMPLE = "simple"
HYPERINFLECTION = "hyperinflection"
THROUGH_SINGULAR = "through-singular"
CONTAINED = "contained-in-curve"
UNCLASSIFIED = "unclassified"

# rows of the dimension table for the inflection scheme
ISOLATED_DOUBLE_POINTS = "isolated double points / dim 0"
DOUBLE_CONIC = "double conic / dim >= 1"
TRIPLE_POINT = "triple point / dim >= 1"
LINE_MULTIPLICITY_3 = "line with multiplicity at least 3 / dim 2"

MAX_RETRIES = 32


class GeometryError(ValueError):
    pass


class NonFiniteInflectionScheme(GeometryError):
    def __init__(self, row):
        self.row = row
        super().__init__("inflection scheme is not finite: %s" % row)


class NonIsolatedSingularLocus(GeometryError):
    def __init__(self, factor):
        self.factor = factor
        super().__init__("non-isolated singular locus along %s" % factor)


def normalize_projective(R, coords):
    coords = tuple(coords)
    for c in coords:
        if not R.is_zero(c):
            inv = R.inv(c)
            return tuple(R.mul(inv, x) for x in coords)
    raise GeometryError("zero vector is not a projective point")


class ProjectiveLine:
    """A line of the plane, stored by normalized dual coordinates [u:v:w]."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = normalize_projective(field, coords)

    def __eq__(self, other):
        return (isinstance(other, ProjectiveLine) and self.field == other.field
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.field.spec, self.coords))

    def contains(self, point):
        R = self.field
        return R.is_zero(R.sum(R.mul(a, b) for a, b in zip(self.coords, point)))

    def __repr__(self):
        return "ProjectiveLine[%s]" % (":".join(self.field.format(c) for c in self.coords))


# the cyclic chart rotation: dual (u,v,w) -> (v,w,u), plane x -> P . x
_ROT_PLANE = ((0, 0, 1), (1, 0, 0), (0, 1, 0))


def _rotate_dual(coords, k):
    for _ in range(k):
        coords = (coords[1], coords[2], coords[0])
    return coords


def _rotate_plane_matrix(R, k):
    M = [[R.one if i == j else R.zero for j in range(3)] for i in range(3)]
    P = [[R.from_int(c) for c in row] for row in _ROT_PLANE]
    from .linalg import mat_mul
    for _ in range(k):
        M = mat_mul(R, M, P)
    return M


def restrict_to_line(q, line):
    """Restriction of a ternary quartic to a line, as a form in (y, z).

    The chart is determined by the first invertible dual coordinate; for a
    normalized line the parameterization makes the restriction agree
    exactly with the harmonic forms: S(q|line) = H(q)(line) and
    T(q|line) = K(q)(line).  Returns (binary quartic, chart) where
    chart(s, r) is the plane point of the parameter value.
    """
    R = q.ring
    if R != line.field:
        raise PolynomialError("line and form live over different rings")
    coords = line.coords
    k = next(i for i in range(3) if not R.is_zero(coords[i]))
    rot = _rotate_dual(coords, k)
    u0, v0, w0 = rot
    P = _rotate_plane_matrix(R, k)
    qp = transform_ternary(q, P)
    tvars = merge_variables(("y", "z"), tuple(
        n for n in q.variables if n not in TERNARY))
    y = Polynomial.variable(R, tvars, "y")
    z = Polynomial.variable(R, tvars, "z")
    restricted = qp.substitute({
        "x": (y.scale(v0) + z.scale(w0)).scale(R.neg(R.one)),
        "y": y.scale(u0),
        "z": z.scale(u0),
    })

    def chart(s, r):
        xp = R.neg(R.add(R.mul(v0, s), R.mul(w0, r)))
        prim = (xp, R.mul(u0, s), R.mul(u0, r))
        return tuple(mat_vec(R, P, list(prim)))

    return restricted, chart


class FlexClassification:
    __slots__ = ("kind", "contact_point", "contact_multiplicity")

    def __init__(self, kind, contact_point, contact_multiplicity):
        self.kind = kind
        self.contact_point = contact_point
        self.contact_multiplicity = contact_multiplicity

    def __repr__(self):
        return "FlexClassification(%s, point=%r, mult=%r)" % (
            self.kind, self.contact_point, self.contact_multiplicity)


def _binary_partial_gcd(f):
    """gcd of a binary form with its two partials (the repeated part)."""
    parts = [f]
    for n in ("y", "z"):
        d = f.derivative(n)
        if not d.is_zero():
            parts.append(d)
    return poly_gcd_many(parts)


def _linear_root(l, names=("y", "z")):
    """Projective root of a linear binary form alpha*y + beta*z."""
    R = l.ring
    a = l.coefficient_poly(names, (1, 0)).constant_value()
    b = l.coefficient_poly(names, (0, 1)).constant_value()
    return normalize_projective(R, (b, R.neg(a)))


def curve_is_smooth_at(q, point):
    R = q.ring
    vals = {n: c for n, c in zip(TERNARY, point)}
    return any(not R.is_zero(q.derivative(n).evaluate(vals)) for n in TERNARY)


def contact_analysis(q, line):
    """Classify one inflection line by its contact with the curve.

    Works over any field of characteristic coprime to 6: the restriction
    is analyzed through gcd chains, so no root extraction beyond a linear
    factor is ever needed.  Raises GeometryError when the line has no
    contact point of multiplicity at least 3.
    """
    R = q.ring
    if R.characteristic in (2, 3):
        raise GeometryError("contact analysis needs characteristic coprime to 6")
    f, chart = restrict_to_line(q, line)
    if f.is_zero():
        return FlexClassification(CONTAINED, None, None)
    # iterated gcd with the partials peels one multiplicity per step, so a
    # root of multiplicity m survives exactly m - 1 steps
    chain = [f]
    while chain[-1].total_degree() >= 1:
        chain.append(_binary_partial_gcd(chain[-1]))
    mult = len(chain) - 1
    if mult < 3:
        raise GeometryError("not an inflection line: maximal contact below 3")
    line_factor = chain[-2]
    if line_factor.total_degree() != 1:
        raise GeometryError("unexpected contact structure of a quartic restriction")
    s, r = _linear_root(line_factor)
    point = normalize_projective(R, chart(s, r))
    if not curve_is_smooth_at(q, point):
        return FlexClassification(THROUGH_SINGULAR, point, mult)
    return FlexClassification(HYPERINFLECTION if mult == 4 else SIMPLE, point, mult)


# ---------------------------------------------------------------------------
# resultants of dual forms by interpolation


def _field_sample_points(F, count):
    """Deterministic distinct field elements, extending the field if needed.

    Returns (field, points, lift) where lift maps payloads of F into the
    sample field.
    """
    import itertools
    if isinstance(F, PrimeField):
        size = F.p
    else:
        size = F.p ** F.degree
    if size >= count:
        if isinstance(F, PrimeField):
            return F, list(range(count)), lambda c: c
        pts = list(itertools.islice(F.elements(), count))
        return F, pts, lambda c: c
    # grow: smallest extension of the prime field containing F with room
    base_deg = field_degree(F)
    m = base_deg
    while F.p ** m < count:
        m += base_deg
    E = make_extension(F.p, m)
    phi = extension_embedding(F, E)
    pts = list(__import__("itertools").islice(E.elements(), count))
    return E, pts, phi


def resultant_eliminating(f, g, name, check_leading=True):
    """Resultant of two dual forms by specialize-and-interpolate.

    Both inputs must be homogeneous in (u, v, w) with scalar leading
    coefficients in the eliminated variable, which the seeded coordinate
    change arranges; the degree of the result is then the product of the
    degrees and the computation reduces to univariate resultants at
    interpolation nodes.
    """
    from .poly import resultant_univariate
    F = f.ring
    df, dg = f.homogeneous_degree(), g.homogeneous_degree()
    if df is None or dg is None:
        raise PolynomialError("interpolated resultant needs homogeneous inputs")
    if check_leading:
        for form, d in ((f, df), (g, dg)):
            lead = form.coefficient_poly((name,), (d,))
            if lead.is_zero() or not lead.is_constant():
                raise PolynomialError("leading coefficient in %s is not a scalar" % name)
    keep = [n for n in DUAL if n != name]
    D = df * dg
    E, nodes, lift = _field_sample_points(F, D + 1)
    fe = f if E == F else f.map_coefficients(lift, E)
    ge = g if E == F else g.map_coefficients(lift, E)
    values = []
    for c in nodes:
        spec_f = fe.partial_eval({keep[0]: E.one, keep[1]: c})
        spec_g = ge.partial_eval({keep[0]: E.one, keep[1]: c})
        A = [spec_f.coefficient_poly((name,), (i,)).constant_value() for i in range(df + 1)]
        B = [spec_g.coefficient_poly((name,), (i,)).constant_value() for i in range(dg + 1)]
        values.append(resultant_univariate(E, A, B))
    coeffs = _lagrange_interpolate(E, nodes, values)
    coeffs += [E.zero] * (D + 1 - len(coeffs))
    out = {}
    for i, c in enumerate(coeffs):
        if E.is_zero(c):
            continue
        if E != F:
            cb = E.in_base(c) if isinstance(E, ExtensionField) else None
            if cb is None:
                raise PolynomialError("interpolated resultant left the base field")
            c = cb if isinstance(F, PrimeField) else c
        mono = {keep[0]: D - i, keep[1]: i}
        out[tuple(mono.get(n, 0) for n in DUAL)] = c
    return Polynomial(F, DUAL, out)


def _lagrange_interpolate(F, xs, ys):
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    coeffs = [F.zero] * n
    for i in range(n):
        # basis polynomial prod_{j != i} (X - xj) / (xi - xj)
        num = [F.one]
        denom = F.one
        for j in range(n):
            if j == i:
                continue
            num = _poly_mul_linear(F, num, F.neg(xs[j]))
            denom = F.mul(denom, F.sub(xs[i], xs[j]))
        scale = F.mul(ys[i], F.inv(denom))
        for k in range(len(num)):
            coeffs[k] = F.add(coeffs[k], F.mul(scale, num[k]))
    return coeffs


def _poly_mul_linear(F, poly, c0):
    """poly * (X + c0) on dense lists."""
    out = [F.zero] * (len(poly) + 1)
    for i, a in enumerate(poly):
        out[i] = F.add(out[i], F.mul(a, c0))
        out[i + 1] = F.add(out[i + 1], a)
    return out


# ---------------------------------------------------------------------------
# the inflection configuration


class FlexEntry:
    __slots__ = ("field", "line", "multiplicity", "tag", "contact_point",
                 "contact_multiplicity")

    def __init__(self, field, line, multiplicity, tag, contact_point,
                 contact_multiplicity):
        self.field = field
        self.line = line
        self.multiplicity = multiplicity
        self.tag = tag
        self.contact_point = contact_point
        self.contact_multiplicity = contact_multiplicity

    def __repr__(self):
        return "FlexEntry(%s, mult=%d, %s)" % (self.line, self.multiplicity, self.tag)


class InflectionConfiguration:
    """The multiset of inflection lines of a quartic, with classification.

    Entries may live over different extension fields (one per Galois orbit
    of the elimination); ``unify`` rewrites everything over a single
    ambient extension when its degree stays manageable.
    """

    def __init__(self, base_field, entries, table_row):
        self.base_field = base_field
        self.entries = list(entries)
        self.table_row = table_row

    def total_multiplicity(self):
        return sum(e.multiplicity for e in self.entries)

    def count_by_tag(self, tag):
        return sum(1 for e in self.entries if e.tag == tag)

    def ambient_degree(self):
        L = 1
        for e in self.entries:
            d = field_degree(e.field)
            L = L * d // _igcd(L, d)
        return L

    def unify(self, max_degree=24):
        L = self.ambient_degree()
        if L > max_degree:
            raise GeometryError(
                "ambient extension degree %d exceeds the cap %d" % (L, max_degree))
        p = self.base_field.p
        E = self.base_field if L == 1 else make_extension(p, L)
        out = []
        for e in self.entries:
            phi = (lambda c: c) if e.field == E else extension_embedding(e.field, E)
            line = normalize_projective(E, tuple(phi(c) for c in e.line.coords))
            pt = None
            if e.contact_point is not None:
                pt = normalize_projective(E, tuple(phi(c) for c in e.contact_point))
            out.append(FlexEntry(E, ProjectiveLine(E, line), e.multiplicity,
                                 e.tag, pt, e.contact_multiplicity))
        return E, out

    def to_json(self, max_degree=24):
        E, entries = self.unify(max_degree)
        if isinstance(E, ExtensionField):
            ext = {"p": str(E.p), "modulus": _modulus_string(E)}
            fmt = E.format
        else:
            ext = {"p": str(E.p), "modulus": "a"}
            fmt = E.format
        items = []
        for e in entries:
            item = {
                "line": [fmt(c) for c in e.line.coords],
                "multiplicity": e.multiplicity,
                "tag": e.tag,
            }
            if e.contact_point is not None:
                item["contact_point"] = [fmt(c) for c in e.contact_point]
            items.append(item)
        items.sort(key=lambda it: (it["line"], it["tag"]))
        return {"extension": ext, "entries": items,
                "table_row": self.table_row}


def _modulus_string(E):
    parts = []
    for i in range(E.degree, -1, -1):
        c = E.modulus[i] if i < len(E.modulus) else 0
        if i == E.degree:
            parts.append("a^%d" % i if i > 1 else "a")
            continue
        if c:
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("a" if c == 1 else "%d*a" % c)
            else:
                parts.append("a^%d" % i if c == 1 else "%d*a^%d" % (c, i))
    return "+".join(parts)


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


def inflection_configuration(q, seed=0):
    """The length-24 inflection configuration of a quartic over GF(p).

    Requires p coprime to 6 and a curve with at worst isolated double
    points (anything else makes the scheme positive-dimensional and is
    rejected with its dimension-table row).  Deterministic for a given
    seed.
    """
    F = q.ring
    if not isinstance(F, PrimeField):
        raise GeometryError("inflection configurations are computed over prime fields")
    if F.p in (2, 3):
        raise GeometryError("characteristic must be coprime to 6")
    check_ternary_quartic(q)
    row = classify_inflection_dimension(q, seed=derive_seed(seed, "classify"))
    if row != ISOLATED_DOUBLE_POINTS:
        raise NonFiniteInflectionScheme(row)
    H = harmonic_quartic(q)
    K = harmonic_sextic(q)
    last_error = None
    for attempt in range(MAX_RETRIES):
        rng = random.Random(derive_seed(seed, "config", attempt))
        M = random_invertible(F, 3, rng)
        try:
            entries = _configuration_attempt(q, H, K, M)
        except _RetryElimination as exc:
            last_error = exc
            continue
        total = sum(e.multiplicity for e in entries)
        if total != 24:
            raise GeometryError("configuration multiplicities sum to %d" % total)
        return InflectionConfiguration(F, entries, row)
    raise GeometryError(
        "elimination failed after %d attempts (%s); the base field is too small"
        % (MAX_RETRIES, last_error))


class _RetryElimination(Exception):
    pass


def _configuration_attempt(q, H, K, M):
    F = q.ring
    Hm = transform_dual(H, M)
    Km = transform_dual(K, M)
    lead_h = Hm.coefficient_poly(("w",), (4,))
    lead_k = Km.coefficient_poly(("w",), (6,))
    if lead_h.is_zero() or not lead_h.is_constant():
        raise _RetryElimination("H leading coefficient")
    if lead_k.is_zero() or not lead_k.is_constant():
        raise _RetryElimination("K leading coefficient")
    R = resultant_eliminating(Hm, Km, "w")
    if R.is_zero():
        raise _RetryElimination("zero resultant")
    cross = _CrossEliminant(Hm, Km)
    entries = []
    for Kd, u0, v0, mult, orbit in _eliminant_orbits(F, R):
        phi = (lambda c: c) if Kd == F else Kd.from_base
        Hd = Hm.map_coefficients(phi, Kd) if Kd != F else Hm
        Kdm = Km.map_coefficients(phi, Kd) if Kd != F else Km
        spec_h = Hd.partial_eval({"u": u0, "v": v0})
        spec_k = Kdm.partial_eval({"u": u0, "v": v0})
        A = u_strip(Kd, [spec_h.coefficient_poly(("w",), (i,)).constant_value()
                         for i in range(5)])
        B = u_strip(Kd, [spec_k.coefficient_poly(("w",), (i,)).constant_value()
                         for i in range(7)])
        g = u_gcd(Kd, A, B)
        k = u_deg(g)
        if k < 1:
            raise _RetryElimination("empty fiber under a resultant root")
        if k == 1:
            # clean fiber: one point carrying the full eliminant multiplicity
            w0 = Kd.neg(g[0])
            Mlift = [[phi(c) for c in row] for row in M]
            base_line = mat_vec(Kd, Mlift, [u0, v0, w0])
            entries.extend(_orbit_entries(q, Kd, base_line, mult, orbit))
            continue
        # several points share this ratio; split the fiber gcd into
        # orbits over Kd and apportion the multiplicity budget
        gpoly = Polynomial(Kd, ("w",), {(i,): c for i, c in enumerate(g)
                                        if not Kd.is_zero(c)})
        factors = factor_univariate(gpoly, seed=0).factors
        if any(fm != 1 for _, fm in factors):
            raise _RetryElimination("non-reduced fiber gcd")
        parts = []
        for hw, _ in factors:
            e = hw.degree_in("w")
            if e > 1 and Kd != F:
                raise _RetryElimination("nested extension fiber")
            parts.append((hw, e))
        if mult == k:
            budget = {i: 1 for i in range(len(parts))}
        elif len(parts) == 1:
            e = parts[0][1]
            if mult % (e if e else 1):
                raise _RetryElimination("indivisible fiber budget")
            budget = {0: mult // e}
        else:
            budget = {}
            for i, (hw, e) in enumerate(parts):
                roots_w = _linear_factor_root(hw)
                if roots_w is None:
                    raise _RetryElimination("mixed fiber with nonlinear factors")
                budget[i] = cross.multiplicity_at(Kd, u0, roots_w, v0)
            if sum(budget[i] * parts[i][1] for i in budget) != mult:
                raise _RetryElimination("cross-eliminant budget mismatch")
        for i, (hw, e) in enumerate(parts):
            if e == 1:
                K2 = Kd
                w0 = _linear_factor_root(hw)
                lift2 = phi
            else:
                modulus = tuple(hw.coefficient_poly(("w",), (i2,)).constant_value()
                                for i2 in range(e + 1))
                K2 = ExtensionField(F.p, modulus)
                w0 = K2.gen
                lift2 = K2.from_base
            Ml2 = [[lift2(c) for c in row] for row in M]
            u2 = lift2(u0) if K2 != Kd else u0
            v2 = lift2(v0) if K2 != Kd else v0
            base_line = mat_vec(K2, Ml2, [u2, v2, w0])
            entries.extend(_orbit_entries(q, K2, base_line, budget[i],
                                          e if K2 != Kd else orbit))
    return entries


def _linear_factor_root(hw):
    if hw.degree_in("w") != 1:
        return None
    c0 = hw.coefficient_poly(("w",), (0,)).constant_value()
    return hw.ring.neg(c0)


class _CrossEliminant:
    """Lazy v-direction eliminant used to split ambiguous w-fibers.

    The multiplicity of an isolated intersection point survives in the
    (u : w) eliminant as long as the point is alone above its (u : w)
    ratio, which the fiber-gcd check certifies.
    """

    def __init__(self, Hm, Km):
        self.Hm = Hm
        self.Km = Km
        self._R = None

    def _eliminant(self):
        if self._R is None:
            lead_h = self.Hm.coefficient_poly(("v",), (4,))
            lead_k = self.Km.coefficient_poly(("v",), (6,))
            if lead_h.is_zero() or not lead_h.is_constant():
                raise _RetryElimination("H leading coefficient (cross)")
            if lead_k.is_zero() or not lead_k.is_constant():
                raise _RetryElimination("K leading coefficient (cross)")
            self._R = resultant_eliminating(self.Hm, self.Km, "v")
        return self._R

    def multiplicity_at(self, Kd, u0, w0, v_expected):
        R = self._eliminant()
        F = R.ring
        phi = (lambda c: c) if Kd == F else Kd.from_base
        if Kd.is_zero(u0):
            raise _RetryElimination("cross fiber at infinity")
        inv_u = Kd.inv(u0)
        w_ratio = Kd.mul(w0, inv_u)
        d_total = R.homogeneous_degree()
        dense = [phi(R.coefficient_poly(("u", "w"), (d_total - i, i)).constant_value())
                 for i in range(d_total + 1)]
        mult = _root_order(Kd, dense, w_ratio)
        if mult == 0:
            raise _RetryElimination("cross eliminant misses the point")
        # the point must be alone above its (u : w) ratio
        Hd = self.Hm.map_coefficients(phi, Kd) if Kd != F else self.Hm
        Kdm = self.Km.map_coefficients(phi, Kd) if Kd != F else self.Km
        spec_h = Hd.partial_eval({"u": Kd.one, "w": w_ratio})
        spec_k = Kdm.partial_eval({"u": Kd.one, "w": w_ratio})
        A = u_strip(Kd, [spec_h.coefficient_poly(("v",), (i,)).constant_value()
                         for i in range(5)])
        B = u_strip(Kd, [spec_k.coefficient_poly(("v",), (i,)).constant_value()
                         for i in range(7)])
        g = u_gcd(Kd, A, B)
        if u_deg(g) != 1:
            raise _RetryElimination("cross fiber not clean")
        v_found = Kd.neg(g[0])
        if not Kd.eq(v_found, Kd.mul(v_expected, inv_u)):
            raise _RetryElimination("cross fiber disagrees")
        return mult


def _root_order(F, dense, x0):
    """Order of x0 as a root of a dense-list polynomial by peeling.

    Synthetic division by (x - x0) repeated while the value vanishes;
    exact in every characteristic.
    """
    coeffs = list(dense)
    order = 0
    while len(coeffs) > 0:
        acc = F.zero
        out = []
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, x0), c)
            out.append(acc)
        if not F.is_zero(acc):
            break
        out.pop()
        coeffs = list(reversed(out))
        order += 1
    return order


def _orbit_entries(q, Kd, base_line, mult, orbit):
    F = q.ring
    phi = (lambda c: c) if Kd == F else Kd.from_base
    qK = q.map_coefficients(phi, Kd) if Kd != F else q
    out = []
    line_coords = list(base_line)
    for j in range(orbit):
        if j:
            line_coords = [Kd.frobenius(c) for c in line_coords]
        line = ProjectiveLine(Kd, tuple(line_coords))
        cls = contact_analysis(qK, line)
        out.append(FlexEntry(Kd, line, mult, cls.kind,
                             cls.contact_point, cls.contact_multiplicity))
    return out


def _eliminant_orbits(F, R):
    """Orbit data (field, u0, v0, multiplicity, orbit size) of a binary form.

    Each irreducible factor of R over GF(p) contributes one entry whose
    field is GF(p)[a]/(factor) and whose representative root is the class
    of a itself; the caller walks Frobenius conjugates.
    """
    d_total = R.homogeneous_degree()
    r = [R.coefficient_poly(("u", "v"), (d_total - i, i)).constant_value()
         for i in range(d_total + 1)]
    dense = u_strip(F, list(r))
    inf_mult = d_total - u_deg(dense)
    out = []
    if inf_mult:
        out.append((F, F.zero, F.one, inf_mult, 1))
    if u_deg(dense) >= 1:
        poly = Polynomial(F, ("v",), {(i,): c for i, c in enumerate(dense)
                                      if not F.is_zero(c)})
        fac = factor_univariate(poly, seed=0)
        for gpoly, mult in fac.factors:
            d = gpoly.degree_in("v")
            if d == 1:
                c0 = gpoly.coefficient_poly(("v",), (0,)).constant_value()
                out.append((F, F.one, F.neg(c0), mult, 1))
            else:
                modulus = tuple(
                    gpoly.coefficient_poly(("v",), (i,)).constant_value()
                    for i in range(d + 1))
                Kd = ExtensionField(F.p, modulus)
                out.append((Kd, Kd.one, Kd.gen, mult, d))
    return out


# ---------------------------------------------------------------------------
# dimension classification


def _homogeneous_square_root(f):
    """c with c*c == f, or None.  Field coefficients."""
    R = f.ring
    if f.is_zero():
        return f
    if R.characteristic == 2:
        out = {}
        for m, c in f.terms.items():
            if any(e % 2 for e in m):
                return None
            out[tuple(e // 2 for e in m)] = _payload_sqrt(R, c)
            if out[tuple(e // 2 for e in m)] is None:
                return None
        return Polynomial(R, f.variables, out)
    lm, lc = f.leading()
    if any(e % 2 for e in lm):
        return None
    s = _payload_sqrt(R, lc)
    if s is None:
        return None
    half_m = tuple(e // 2 for e in lm)
    root = Polynomial(R, f.variables, {half_m: s})
    two_lead = Polynomial(R, f.variables, {half_m: R.mul(R.from_int(2), s)})
    for _ in range(len(f.terms) + 2):
        rem = f - root * root
        if rem.is_zero():
            return root
        rm, rc = rem.leading()
        qm = tuple(a - b for a, b in zip(rm, half_m))
        if any(e < 0 for e in qm):
            return None
        qc = R.div(rc, R.mul(R.from_int(2), s))
        root = root + Polynomial(R, f.variables, {qm: qc})
    return root if (f - root * root).is_zero() else None


def _payload_sqrt(R, c):
    """A square root of c in the field R, or None."""
    from fractions import Fraction
    from math import isqrt
    if R.is_zero(c):
        return R.zero
    if isinstance(c, Fraction):
        n, d = c.numerator, c.denominator
        if n < 0:
            return None
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None
    if isinstance(R, PrimeField):
        if R.p == 2:
            return c
        if pow(c, (R.p - 1) // 2, R.p) != 1:
            return None
        for candidate in range(R.p):
            if candidate * candidate % R.p == c:
                return candidate
        return None
    if isinstance(R, ExtensionField):
        if R.p == 2:
            return R.pow(c, R.p ** R.degree // 2)
        x2 = Polynomial(R, ("T",), {(2,): R.one, (0,): R.neg(c)})
        roots = [r for r, _ in _factor_linear_roots(x2)]
        return min(roots) if roots else None
    return None


def _factor_linear_roots(f):
    fac = factor_univariate(f, seed=0)
    name = next(n for n in f.variables if f.degree_in(n) > 0)
    out = []
    for g, m in fac.factors:
        if g.degree_in(name) == 1:
            c0 = g.coefficient_poly((name,), (0,)).constant_value()
            out.append((f.ring.neg(c0), m))
    return out


def _linear_multiplicity(q, line_form):
    """How many times a linear form divides q."""
    count = 0
    cur = q
    while True:
        try:
            cur = cur.exact_div(line_form)
            count += 1
        except (PolynomialError, RingError, ZeroDivisionError):
            return count
        if cur.is_constant():
            return count


def _conic_is_smooth(c):
    """Smoothness of the conic c = 0 over the algebraic closure."""
    R = c.ring
    grads = [c.derivative(n) for n in TERNARY]
    rows = []
    for g in grads:
        rows.append([g.coefficient_poly(TERNARY, tuple(1 if m == n else 0 for m in TERNARY))
                     .constant_value() for n in TERNARY])
    kernel = _matrix_kernel(R, rows)
    if not kernel:
        return True
    if len(kernel) >= 2:
        return False
    pt = kernel[0]
    val = c.evaluate({n: x for n, x in zip(TERNARY, pt)})
    return not R.is_zero(val)


def _matrix_kernel(R, rows):
    n = len(rows[0])
    M = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(M)) if not R.is_zero(M[r][col])), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = R.inv(M[rank][col])
        M[rank] = [R.mul(inv, c) for c in M[rank]]
        for r in range(len(M)):
            if r != rank and not R.is_zero(M[r][col]):
                c = M[r][col]
                M[r] = [R.sub(a, R.mul(c, b)) for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [R.zero] * n
        vec[fc] = R.one
        for r, pc in enumerate(pivots):
            vec[pc] = R.neg(M[r][fc])
        basis.append(tuple(vec))
    return basis


def classify_inflection_dimension(q, seed=0):
    """Dimension-table row of the inflection scheme, from the curve side.

    Repeated-line components with multiplicity at least 3 give the
    2-dimensional row; double conics and curves with a point of
    multiplicity at least 3 give positive dimension; everything else
    (smooth curves included) has at worst isolated double points and a
    finite scheme.
    """
    if q.is_zero():
        raise GeometryError("the zero form has no inflection scheme")
    R = q.ring
    if not R.is_field:
        from .rings import QQ, ZZ
        if R == ZZ:
            q = q.change_ring(QQ)
            R = QQ
        else:
            raise GeometryError("classification needs field coefficients")
    check_ternary_quartic(q)
    partials = [q.derivative(n) for n in TERNARY]
    g = poly_gcd_many([q] + [d for d in partials if not d.is_zero()])
    deg_g = g.total_degree()
    if deg_g == 0:
        return _classify_squarefree(q, seed)
    if deg_g == 3:
        # q = l^4, or l^3 m in characteristic 3
        line = _squarefree_line_of(g)
        if line is not None and _linear_multiplicity(q, line) >= 3:
            return LINE_MULTIPLICITY_3
        return TRIPLE_POINT
    if deg_g == 2:
        sq = _homogeneous_square_root(g)
        if sq is not None and sq.total_degree() == 1:
            if _linear_multiplicity(q, sq) >= 3:
                return LINE_MULTIPLICITY_3
            return TRIPLE_POINT
        # g is a conic: either irreducible (q = g^2) or two distinct lines
        if _conic_is_smooth(g):
            return DOUBLE_CONIC
        return TRIPLE_POINT
    # deg 1: a double line times a coprime quadratic; the two points where
    # the residual conic meets the line have multiplicity 3
    return TRIPLE_POINT


def _squarefree_line_of(g):
    """The linear form whose power g is, if it is one."""
    parts = [g] + [g.derivative(n) for n in TERNARY if not g.derivative(n).is_zero()]
    rad = poly_gcd_many(parts)
    cand = g.exact_div(rad) if rad.total_degree() > 0 else g
    while cand.total_degree() > 1:
        nxt = poly_gcd(cand, poly_gcd_many(
            [cand.derivative(n) for n in TERNARY if not cand.derivative(n).is_zero()]
            or [cand]))
        if nxt.total_degree() >= cand.total_degree():
            return None
        cand = cand.exact_div(nxt) if nxt.total_degree() > 0 else cand
        if cand.total_degree() <= 1:
            break
    return cand if cand.total_degree() == 1 else None


def _classify_squarefree(q, seed):
    R = q.ring
    if isinstance(R, (PrimeField, ExtensionField)):
        pts = curve_singular_points(q, seed=seed)
        if any(m >= 3 for _, _, m in pts):
            return TRIPLE_POINT
        return ISOLATED_DOUBLE_POINTS
    # over Q a point of multiplicity >= 3 on a squarefree quartic is unique,
    # hence rational, so a rational search over the second partials decides
    if _rational_triple_point(q) is not None:
        return TRIPLE_POINT
    return ISOLATED_DOUBLE_POINTS


def point_multiplicity(q, point):
    """Order of vanishing of q at a projective point."""
    R = q.ring
    point = normalize_projective(R, point)
    k = next(i for i in range(3) if not R.is_zero(point[i]))
    basis = [list(point)]
    for i in range(3):
        if i != k:
            e = [R.zero] * 3
            e[i] = R.one
            basis.append(e)
    N = [[basis[j][i] for j in range(3)] for i in range(3)]
    qt = transform_ternary(q, N)
    groups = qt.collect(("y", "z"))
    degs = [sum(e) for e, c in groups.items() if not c.is_zero()]
    return min(degs) if degs else None


def _rational_triple_point(q):
    """A rational point where all second partials vanish, or None."""
    R = q.ring
    second = []
    for i, n1 in enumerate(TERNARY):
        for n2 in TERNARY[i:]:
            d = q.derivative(n1).derivative(n2)
            if not d.is_zero():
                second.append(d)
    if not second:
        return None
    # eliminate z pairwise, collect candidate (x : y) rational roots
    cands = set()
    base = second[0]
    from .poly import resultant
    pair_res = []
    for other in second[1:]:
        if base.degree_in("z") >= 1 and other.degree_in("z") >= 1:
            pair_res.append(resultant(base, other, "z"))
    pair_res = [r for r in pair_res if not r.is_zero()]
    if pair_res:
        g = pair_res[0]
        for r in pair_res[1:]:
            g = poly_gcd(g, r)
            if g.is_constant():
                break
        for (s, t) in _rational_binary_roots(g, ("x", "y")):
            for z0 in _rational_fiber(second, s, t):
                pt = (s, t, z0)
                m = point_multiplicity(q, pt)
                if m is not None and m >= 3:
                    return normalize_projective(R, pt)
    # candidates with x = y = 0
    pt = (R.zero, R.zero, R.one)
    vals = {n: c for n, c in zip(TERNARY, pt)}
    if all(R.is_zero(d.evaluate(vals)) for d in second):
        m = point_multiplicity(q, pt)
        if m is not None and m >= 3:
            return pt
    return None


def _rational_binary_roots(g, names):
    """Rational projective roots of a binary form over Q."""
    from fractions import Fraction
    R = g.ring
    a, b = names
    d = g.total_degree()
    dense = [g.coefficient_poly(names, (d - i, i)).constant_value()
             for i in range(d + 1)]
    # clear denominators to integer coefficients
    from math import lcm
    den = 1
    for c in dense:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in dense]
    while ints and ints[-1] == 0:
        ints.pop()
    out = set()
    if len(ints) - 1 < d:
        out.add((R.zero, R.one))
    if not ints:
        return out
    lead, trail = ints[-1], next((c for c in ints if c), 0)
    shift = next(i for i, c in enumerate(ints) if c)
    if shift:
        out.add((R.one, R.zero))
    ints = ints[shift:]
    trail = ints[0]
    for pnum in _divisors(abs(trail)):
        for qden in _divisors(abs(ints[-1])):
            for sign in (1, -1):
                t = Fraction(sign * pnum, qden)
                val = sum(Fraction(c) * t ** i for i, c in enumerate(ints))
                if val == 0:
                    out.add((R.one, t))
    return out


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _rational_fiber(forms, s, t):
    """Common rational roots in z of forms specialized at (x, y) = (s, t)."""
    R = forms[0].ring
    specs = []
    for f in forms:
        spec = f.partial_eval({"x": s, "y": t})
        if spec.is_zero():
            continue
        if spec.degree_in("z") == 0:
            return []
        specs.append(spec)
    if not specs:
        return [R.zero, R.one]
    g = specs[0]
    for other in specs[1:]:
        g = poly_gcd(g, other)
        if g.is_constant():
            return []
    # g univariate in z over Q; find rational roots directly
    out = []
    d = g.degree_in("z")
    dense = [g.coefficient_poly(("z",), (i,)).constant_value() for i in range(d + 1)]
    from fractions import Fraction
    from math import lcm
    den = 1
    for c in dense:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in dense]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []
    if ints[0] == 0:
        out.append(R.zero)
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return out
    for pnum in _divisors(abs(ints[0])):
        for qden in _divisors(abs(ints[-1])):
            for sign in (1, -1):
                z0 = Fraction(sign * pnum, qden)
                if sum(Fraction(c) * z0 ** i for i, c in enumerate(ints)) == 0:
                    out.append(z0)
    return out


# ---------------------------------------------------------------------------
# singular points over finite fields


def curve_singular_points(q, seed=0):
    """Singular points of the curve q = 0 with their local multiplicities.

    Returns a list of (field, point, multiplicity); points in one Galois
    orbit are all listed over the orbit's field.  A repeated factor makes
    the singular locus positive-dimensional and raises
    NonIsolatedSingularLocus with the factor.
    """
    F = q.ring
    if q.is_zero():
        raise GeometryError("the zero form has no curve")
    if not isinstance(F, (PrimeField, ExtensionField)):
        raise GeometryError("singular-point search needs a finite field")
    if not isinstance(F, PrimeField):
        raise GeometryError("singular-point search is implemented over prime fields")
    check_ternary_quartic(q)
    partials = [q.derivative(n) for n in TERNARY]
    live = [d for d in partials if not d.is_zero()]
    rad = poly_gcd_many([q] + live)
    if rad.total_degree() >= 1:
        raise NonIsolatedSingularLocus(rad)
    last = None
    for attempt in range(MAX_RETRIES):
        rng = random.Random(derive_seed(seed, "singular", attempt))
        M = random_invertible(F, 3, rng)
        try:
            return _singular_attempt(q, M)
        except _RetryElimination as exc:
            last = exc
    raise GeometryError("singular-point elimination failed (%s)" % last)


def _singular_attempt(q, M):
    from .poly import resultant
    F = q.ring
    qm = transform_ternary(q, M)
    f1, f2, f3 = (qm.derivative(n) for n in TERNARY)
    for f in (f1, f2, f3):
        lead = f.coefficient_poly(("z",), (f.total_degree(),)) if not f.is_zero() else None
        if f.is_zero():
            raise _RetryElimination("vanishing partial")
        if f.degree_in("z") != f.total_degree() or not lead.is_constant() or lead.is_zero():
            raise _RetryElimination("partial not z-regular")
    r12 = resultant(f1, f2, "z")
    r13 = resultant(f1, f3, "z")
    if r12.is_zero() or r13.is_zero():
        raise _RetryElimination("zero resultant")
    g = poly_gcd(r12, r13)
    out = []
    if g.total_degree() >= 1:
        for Kd, x0, y0, _, orbit in _eliminant_orbits_xy(F, g):
            phi = (lambda c: c) if Kd == F else Kd.from_base
            parts = []
            for f in (f1, f2, f3):
                fK = f.map_coefficients(phi, Kd) if Kd != F else f
                spec = fK.partial_eval({"x": x0, "y": y0})
                dense = u_strip(Kd, [
                    spec.coefficient_poly(("z",), (i,)).constant_value()
                    for i in range(spec.degree_in("z") + 1)]) if not spec.is_zero() else []
                if not dense:
                    continue
                parts.append(dense)
            if not parts:
                raise _RetryElimination("indeterminate fiber")
            gz = parts[0]
            for other in parts[1:]:
                gz = u_gcd(Kd, gz, other)
            if u_deg(gz) == 0:
                continue
            if u_deg(gz) != 1:
                raise _RetryElimination("fiber gcd degree %d" % u_deg(gz))
            z0 = Kd.neg(gz[0])
            Mlift = [[phi(c) for c in row] for row in M]
            qK = q.map_coefficients(phi, Kd) if Kd != F else q
            base_pt = mat_vec(Kd, Mlift, [x0, y0, z0])
            for j in range(orbit):
                if j:
                    base_pt = [Kd.frobenius(c) for c in base_pt]
                pt = normalize_projective(Kd, tuple(base_pt))
                if curve_is_smooth_at(qK, pt):
                    continue
                mult = point_multiplicity(qK, pt)
                out.append((Kd, pt, mult))
    # the fiber over (x : y) = (0 : 0) is the point (0, 0, 1)
    pt = (F.zero, F.zero, F.one)
    ptM = tuple(mat_vec(F, M, list(pt)))
    vals = {n: c for n, c in zip(TERNARY, ptM)}
    if all(F.is_zero(d.evaluate(vals)) for d in
           (q.derivative(n) for n in TERNARY)):
        p0 = normalize_projective(F, ptM)
        out.append((F, p0, point_multiplicity(q, p0)))
    return out


def _eliminant_orbits_xy(F, g):
    """Orbit data of a binary form in (x, y), like _eliminant_orbits."""
    d_total = g.homogeneous_degree()
    dense = u_strip(F, [g.coefficient_poly(("x", "y"), (d_total - i, i)).constant_value()
                        for i in range(d_total + 1)])
    out = []
    inf_mult = d_total - u_deg(dense)
    if inf_mult:
        out.append((F, F.zero, F.one, inf_mult, 1))
    if u_deg(dense) >= 1:
        poly = Polynomial(F, ("y",), {(i,): c for i, c in enumerate(dense)
                                      if not F.is_zero(c)})
        fac = factor_univariate(poly, seed=0)
        for gpoly, mult in fac.factors:
            d = gpoly.degree_in("y")
            if d == 1:
                c0 = gpoly.coefficient_poly(("y",), (0,)).constant_value()
                out.append((F, F.one, F.neg(c0), mult, 1))
            else:
                modulus = tuple(gpoly.coefficient_poly(("y",), (i,)).constant_value()
                                for i in range(d + 1))
                Kd = ExtensionField(F.p, modulus)
                out.append((Kd, Kd.one, Kd.gen, mult, d))
    return out


# ---------------------------------------------------------------------------
# derived checks on configurations


def concurrency_bound_check(config, max_degree=24):
    """No pencil of lines carries total multiplicity above 8.

    Every pencil spanned by two configuration points is inspected; the
    configuration is first unified over one ambient extension.  Returns
    (ok, worst) with the extremal pencil load.
    """
    E, entries = config.unify(max_degree)
    worst = 0
    seen = set()
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            li, lj = entries[i].line.coords, entries[j].line.coords
            if li == lj:
                continue
            p = _cross(E, li, lj)
            p = normalize_projective(E, p)
            if p in seen:
                continue
            seen.add(p)
            load = 0
            for e in entries:
                dot = E.sum(E.mul(a, b) for a, b in zip(p, e.line.coords))
                if E.is_zero(dot):
                    load += e.multiplicity
            worst = max(worst, load)
    return worst <= 8, worst


def _cross(R, a, b):
    return (R.sub(R.mul(a[1], b[2]), R.mul(a[2], b[1])),
            R.sub(R.mul(a[2], b[0]), R.mul(a[0], b[2])),
            R.sub(R.mul(a[0], b[1]), R.mul(a[1], b[0])))


def pencil_load_at_point(config, point, max_degree=24):
    """Total multiplicity of configuration lines through a plane point."""
    E, entries = config.unify(max_degree)
    pt = normalize_projective(E, tuple(
        E.from_base(c) if isinstance(E, ExtensionField) and isinstance(c, int) else c
        for c in point))
    load = 0
    for e in entries:
        dot = E.sum(E.mul(a, b) for a, b in zip(pt, e.line.coords))
        if E.is_zero(dot):
            load += e.multiplicity
    return load


def hyperflex_tangent_matches_pencil(q, entry):
    """At a hyperflex, the tangent line of H at the dual point is the
    pencil of lines through the contact point."""
    Kd = entry.field
    H = harmonic_quartic(q)
    phi = (lambda c: c) if Kd == q.ring else Kd.from_base
    Hk = H.map_coefficients(phi, Kd) if Kd != q.ring else H
    vals = {n: c for n, c in zip(DUAL, entry.line.coords)}
    grad = tuple(Hk.derivative(n).evaluate(vals) for n in DUAL)
    if all(Kd.is_zero(c) for c in grad):
        return False
    return normalize_projective(Kd, grad) == normalize_projective(
        Kd, entry.contact_point)


def verify_normal_forms_totally_harmonic():
    """Check H = 0 for each totally harmonic normal form, H != 0 controls.

    Returns a list of (description, observed, expected) triples.
    """
    from .rings import QQ
    cases = []

    def add(desc, ring, text, expect_zero):
        q = parse_ternary_quartic(text, ring)
        cases.append((desc, is_totally_harmonic(q), expect_zero))

    add("y^4 - y*z^3 over Q (S = 0 binary form)", QQ, "y^4 - y*z^3", True)
    add("y^4 - y*z^3 over GF(5)", PrimeField(5), "y^4 - y*z^3", True)
    add("y^4 + z^4 over GF(3) (S = 0 in char 3)", PrimeField(3), "y^4 + z^4", True)
    add("y^3*z (triple root)", QQ, "y^3*z", True)
    add("y^4 (quadruple root)", QQ, "y^4", True)
    add("x^4 + y^3*z over GF(2)", PrimeField(2), "x^4 + y^3*z", True)
    add("x^4 + y^3*z over GF(3)", PrimeField(3), "x^4 + y^3*z", True)
    add("x*(x^2*y + z^3) over GF(3)", PrimeField(3), "x^3*y + x*z^3", True)
    add("x^4 + y^4 + z^4 over GF(3)", PrimeField(3), "x^4 + y^4 + z^4", True)
    add("x^4 + y^3*z over GF(5) (control)", PrimeField(5), "x^4 + y^3*z", False)
    add("Klein over Q (control)", QQ, "x^3*y + y^3*z + z^3*x", False)
    add("nodal example over Q (control)", QQ,
        "x^2*y*z + x*y^3 + x*z^3 + y^4", False)
    return cases


def tangent_condition_check(q_curve, line, direction, contact_point=None):
    """First-order test at a hyperflex: the restricted invariant S of the
    deformed curve vanishes over the dual numbers exactly when the
    deformation direction vanishes at the contact point.

    Returns the pair of booleans; they agree for every direction.
    """
    from .rings import DualNumbers
    F = q_curve.ring
    cls = contact_analysis(q_curve, line)
    if cls.kind != HYPERINFLECTION:
        raise GeometryError("line is not a hyperinflection line of the curve")
    p = cls.contact_point if contact_point is None else contact_point
    D = DualNumbers(F)
    lift = lambda poly: poly.map_coefficients(D.from_base, D)
    qd = lift(q_curve) + lift(direction).scale(D.eps)
    # restrict by hand: dual numbers are a local ring, not a field, so the
    # ProjectiveLine normalization does not apply
    restricted = _restrict_over_dual(qd, tuple(D.from_base(c) for c in line.coords), D)
    s_val = invariant_S(restricted, ("y", "z")).constant_value()
    first = D.is_zero(s_val)
    second = F.is_zero(direction.evaluate({n: c for n, c in zip(TERNARY, p)}))
    return first, second


def _restrict_over_dual(qd, coords, D):
    k = next(i for i in range(3) if D.base.is_invertible(coords[i][0]))
    rot = _rotate_dual(coords, k)
    u0, v0, w0 = rot
    P = _rotate_plane_matrix(D, k)
    qp = transform_ternary(qd, P)
    tvars = merge_variables(("y", "z"), tuple(
        n for n in qd.variables if n not in TERNARY))
    y = Polynomial.variable(D, tvars, "y")
    z = Polynomial.variable(D, tvars, "z")
    return qp.substitute({
        "x": (y.scale(v0) + z.scale(w0)).scale(D.neg(D.one)),
        "y": y.scale(u0),
        "z": z.scale(u0),
    })
