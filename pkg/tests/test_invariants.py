import random

import pytest

from quartics.rings import QQ, ZZ, PrimeField, make_extension
from quartics.poly import Polynomial, PolynomialError, merge_variables, parse_polynomial
from quartics.linalg import mat_inv, random_special_linear, transpose
from quartics.invariants import (
    DUAL, TERNARY, LieOperator, apolarity_pair, bilinear_H, bilinear_S,
    binary_coefficients, corollary_identity, corollary_operator,
    generic_harmonic_table, generic_ternary_quartic, harmonic_char3_square,
    harmonic_quartic, harmonic_quartic_via_table, harmonic_sextic,
    invariant_A, invariant_S, invariant_S3, invariant_S4, invariant_T,
    is_totally_harmonic, lie_apply, parse_binary_quartic,
    parse_ternary_quartic, project, sl3_standard_generators,
    transform_binary, transform_dual, transform_ternary, trilinear_t,
)


def B(text, ring=QQ):
    return parse_binary_quartic(text, ring)


def Tq(text, ring=QQ):
    return parse_ternary_quartic(text, ring)


def dual_poly(text, ring=QQ):
    f = parse_polynomial(text, ring, None)
    return f.extend(merge_variables(f.variables, DUAL))


def generic_binary(prefix, degree, ring=ZZ):
    names = ["%s%d" % (prefix, i) for i in range(degree + 1)]
    tvars = merge_variables(("y", "z"), names)
    acc = Polynomial.zero(ring, tvars)
    for i, n in enumerate(names):
        mono = [0] * len(tvars)
        mono[tvars.index("y")] = degree - i
        mono[tvars.index("z")] = i
        mono[tvars.index(n)] = 1
        acc = acc + Polynomial(ring, tvars, {tuple(mono): ring.one})
    return acc


# -- S and T -----------------------------------------------------------------

def test_S_and_T_of_y4_minus_yz3():
    f = B("y^4 - y*z^3")
    assert invariant_S(f).constant_value() == 0
    assert invariant_T(f).constant_value() == -27


def test_S_of_lambda_y2z2_symbolic():
    lam = "c"
    f = parse_polynomial("c*y^2*z^2", ZZ, None)
    f = f.extend(merge_variables(f.variables, ("y", "z")))
    S = invariant_S(f)
    expect = parse_polynomial("c^2", ZZ, f.variables)
    assert S == expect


def test_S_T_vanish_on_triple_root_locus_symbolically():
    # (a1*y - b1*z)^3 (a2*y - b2*z) over Z[a1, b1, a2, b2]
    ring = ZZ
    tvars = merge_variables(("y", "z"), ("a1", "b1", "a2", "b2"))
    term = lambda s: parse_polynomial(s, ring, tvars)
    f = (term("a1*y - b1*z") ** 3) * term("a2*y - b2*z")
    assert invariant_S(f).is_zero()
    assert invariant_T(f).is_zero()


def test_T_of_y4_is_zero():
    assert invariant_T(B("y^4")).constant_value() == 0


def test_clch3_relations_symbolic():
    f = generic_binary("f", 4)
    c = binary_coefficients(f)
    S, T = invariant_S(f), invariant_T(f)
    S3, S4 = invariant_S3(f), invariant_S4(f)
    assert S3.scale(3) == T + (c[2] * S).scale(2)
    assert S4.scale(3) == S3 * c[2] + S * (c[0] * c[4] - c[1] * c[3])


def test_S3_S4_vanish_on_triple_root():
    f = B("y^3*z")
    assert invariant_S3(f).constant_value() == 0
    assert invariant_S4(f).constant_value() == 0


def test_bilinear_S_polarization_symbolic():
    f = generic_binary("f", 4)
    g = generic_binary("g", 4)
    tvars = merge_variables(f.variables, g.variables)
    f, g = f.extend(tvars), g.extend(tvars)
    lhs = invariant_S(f + g)
    rhs = invariant_S(f) + bilinear_S(f, g) + invariant_S(g)
    assert lhs == rhs


def test_bilinear_S_examples():
    assert bilinear_S(B("y^4"), B("z^4")).constant_value() == 12
    rng = random.Random(1)
    F = PrimeField(13)
    for _ in range(50):
        f = Polynomial(F, ("y", "z"),
                       {(4 - i, i): F.random(rng) for i in range(5)})
        two_s = bilinear_S(f, f).constant_value()
        assert two_s == F.mul(2, invariant_S(f).constant_value())


def test_sl2_invariance_of_S_and_T():
    rng = random.Random(2)
    for p in (5, 7, 13, 31):
        F = PrimeField(p)
        for _ in range(50):
            f = Polynomial(F, ("y", "z"),
                           {(4 - i, i): F.random(rng) for i in range(5)})
            M = random_special_linear(F, 2, rng)
            g = transform_binary(f, M)
            assert invariant_S(g) == invariant_S(f)
            assert invariant_T(g) == invariant_T(f)


# -- contravariants ----------------------------------------------------------

def test_klein_contravariants_exact_over_Z():
    q = Tq("x^3*y + y^3*z + z^3*x", ZZ)
    H = harmonic_quartic(q)
    K = harmonic_sextic(q)
    assert H == dual_poly("3*u^3*v + 3*v^3*w + 3*w^3*u", ZZ)
    assert K == dual_poly(
        "27*u^5*w + 27*v^5*u + 27*w^5*v - 135*u^2*v^2*w^2", ZZ)


def test_harmonic_of_x2_quadratic():
    # H(x^2 q2(y,z)) = q2(-w, v)^2
    q = Tq("x^2*y*z")
    H = harmonic_quartic(q)
    # q2 = y*z -> q2(-w,v) = -w*v, squared: v^2w^2
    assert H == dual_poly("v^2*w^2")
    q = Tq("x^2*y^2")
    assert harmonic_quartic(q) == dual_poly("w^4")


def test_harmonic_smooth_quartic_with_singular_H():
    q = Tq("x^4 + y^4 + y*z^3")
    H = harmonic_quartic(q)
    assert H == dual_poly("12*w^4 - 12*v^3*w")


def test_harmonic_double_conic():
    conic = parse_polynomial("x*y - z^2", QQ, TERNARY)
    H = harmonic_quartic(conic * conic)
    expect = dual_poly("4*u*v - w^2")
    assert H == expect * expect


def test_harmonic_fermat_char3_vanishes():
    q = Tq("x^4 + y^4 + z^4", PrimeField(3))
    assert harmonic_quartic(q).is_zero()
    assert is_totally_harmonic(q)


def test_harmonic_quartic_of_x4_and_sextic_of_x4_vanish():
    assert harmonic_quartic(Tq("x^4")).is_zero()
    assert harmonic_sextic(Tq("x^4")).is_zero()


def test_klein_not_totally_harmonic_over_Q():
    assert not is_totally_harmonic(Tq("x^3*y + y^3*z + z^3*x"))


def test_harmonic_table_route_agrees():
    rng = random.Random(3)
    F = PrimeField(31)
    for _ in range(25):
        q = Polynomial(F, TERNARY,
                       {(i, j, 4 - i - j): F.random(rng)
                        for i in range(5) for j in range(5 - i)})
        assert harmonic_quartic_via_table(q) == harmonic_quartic(q)


def test_harmonic_polarization_symbolic():
    qa = generic_ternary_quartic(prefix="a")
    qb = generic_ternary_quartic(prefix="b")
    tvars = merge_variables(qa.variables, qb.variables)
    qa, qb = qa.extend(tvars), qb.extend(tvars)
    lhs = harmonic_quartic(qa + qb)
    rhs = harmonic_quartic(qa) + bilinear_H(qa, qb) + harmonic_quartic(qb)
    assert lhs == rhs


def test_sl3_contravariance_of_H():
    rng = random.Random(4)
    F = PrimeField(13)
    for _ in range(30):
        q = Polynomial(F, TERNARY,
                       {(i, j, 4 - i - j): F.random(rng)
                        for i in range(5) for j in range(5 - i)})
        M = random_special_linear(F, 3, rng)
        lhs = harmonic_quartic(transform_ternary(q, M))
        Minv_t = transpose(mat_inv(F, M))
        rhs = transform_dual(harmonic_quartic(q), Minv_t)
        assert lhs == rhs


def test_evaluation_identity_on_the_u_chart():
    # H(q)(u0,v0,w0) = u0^4 S(q restricted), with the chart substitution
    # x -> -v0 y - w0 z, y -> u0 y, z -> u0 z
    rng = random.Random(5)
    F = PrimeField(31)
    for _ in range(40):
        q = Polynomial(F, TERNARY,
                       {(i, j, 4 - i - j): F.random(rng)
                        for i in range(5) for j in range(5 - i)})
        u0 = F.random(rng)
        if F.is_zero(u0):
            continue
        v0, w0 = F.random(rng), F.random(rng)
        tv = ("y", "z")
        y = Polynomial.variable(F, tv, "y")
        z = Polynomial.variable(F, tv, "z")
        restricted = q.extend(merge_variables(TERNARY, tv)).substitute({
            "x": (y.scale(v0) + z.scale(w0)).scale(F.neg(F.one)),
            "y": y.scale(u0),
            "z": z.scale(u0),
        })
        S_val = invariant_S(restricted, ("y", "z")).constant_value()
        T_val = invariant_T(restricted, ("y", "z")).constant_value()
        H_val = harmonic_quartic(q).evaluate({"u": u0, "v": v0, "w": w0})
        K_val = harmonic_sextic(q).evaluate({"u": u0, "v": v0, "w": w0})
        # the chart scales the restriction by u0, so S picks up u0^4, T u0^6
        assert S_val == F.mul(F.pow(u0, 4), H_val)
        assert T_val == F.mul(F.pow(u0, 6), K_val)


# -- Table 1 ------------------------------------------------------------------

def x_power_times(form, a):
    xa = Polynomial.variable(form.ring, form.variables, "x", a) \
        if "x" in form.variables else None
    tvars = merge_variables(form.variables, ("x",))
    f = form.extend(tvars)
    return f * Polynomial.variable(form.ring, tvars, "x", a)


def sub_minus_w_v(binary_form):
    """q(-w, v) for a binary form in (y, z)."""
    tvars = merge_variables(binary_form.variables, DUAL)
    f = binary_form.extend(tvars)
    w = Polynomial.variable(f.ring, tvars, "w")
    v = Polynomial.variable(f.ring, tvars, "v")
    return f.substitute({"y": -w, "z": v})


def test_table_rows_symbolic():
    q1 = generic_binary("c", 1)
    q2 = generic_binary("d", 2)
    q3 = generic_binary("e", 3)
    q4 = generic_binary("f", 4)

    # row: <x^a q_(4-a), x^b q_(4-b)> = 0 when a + b >= 5
    for a, b in [(4, 1), (4, 2), (4, 3), (4, 4), (3, 2), (3, 3), (2, 3), (1, 4)]:
        qa = x_power_times(generic_binary("c", 4 - a), a)
        qb = x_power_times(generic_binary("d", 4 - b), b)
        tv = merge_variables(qa.variables, qb.variables)
        assert bilinear_H(qa.extend(tv), qb.extend(tv)).is_zero()

    # row: <x^4, q4> = 12 q4(-w, v)
    x4 = x_power_times(Polynomial.constant(ZZ, ("y", "z"), ZZ.one), 4)
    pair = bilinear_H(x4.extend(merge_variables(x4.variables, q4.variables)),
                      q4.extend(merge_variables(x4.variables, q4.variables)))
    expect = sub_minus_w_v(q4).scale(12)
    tv = merge_variables(pair.variables, expect.variables)
    assert pair.extend(tv) == project(expect, tv)

    # row: <x^3 q1, x q3> = -3 q1(-w,v) q3(-w,v)
    f31 = x_power_times(q1, 3)
    f13 = x_power_times(q3, 1)
    tv = merge_variables(f31.variables, f13.variables)
    pair = bilinear_H(f31.extend(tv), f13.extend(tv))
    e1, e3 = sub_minus_w_v(q1), sub_minus_w_v(q3)
    tv2 = merge_variables(e1.variables, e3.variables)
    expect = (e1.extend(tv2) * e3.extend(tv2)).scale(-3)
    tv3 = merge_variables(pair.variables, expect.variables)
    assert pair.extend(tv3) == project(expect, tv3)

    # row: <x^3 y, q4> = -3 u d/dv q4(-w, v)
    x3y = Tq("x^3*y", ZZ)
    tv = merge_variables(x3y.variables, q4.variables)
    pair = bilinear_H(x3y.extend(tv), q4.extend(tv))
    e = sub_minus_w_v(q4).derivative("v")
    tvv = merge_variables(e.variables, DUAL)
    expect = (e.extend(tvv) * Polynomial.variable(ZZ, tvv, "u")).scale(-3)
    tv3 = merge_variables(pair.variables, expect.variables)
    assert pair.extend(tv3) == project(expect, tv3)

    # row: H(x^2 q2) = q2(-w, v)^2
    f22 = x_power_times(q2, 2)
    H = harmonic_quartic(f22)
    expect = sub_minus_w_v(q2) ** 2
    tv3 = merge_variables(H.variables, expect.variables)
    assert H.extend(tv3) == project(expect, tv3)

    # row: <x^2 y^2, q4> = u^2 d^2/dv^2 q4(-w, v)
    x2y2 = Tq("x^2*y^2", ZZ)
    tv = merge_variables(x2y2.variables, q4.variables)
    pair = bilinear_H(x2y2.extend(tv), q4.extend(tv))
    e = sub_minus_w_v(q4).derivative("v").derivative("v")
    tvv = merge_variables(e.variables, DUAL)
    expect = e.extend(tvv) * Polynomial.variable(ZZ, tvv, "u", 2)
    tv3 = merge_variables(pair.variables, expect.variables)
    assert pair.extend(tv3) == project(expect, tv3)


# -- pairing, A, trilinear ----------------------------------------------------

def test_apolarity_weights():
    assert apolarity_pair(Tq("x^4", ZZ), dual_poly("u^4", ZZ)).constant_value() == 12
    assert apolarity_pair(Tq("x^2*y*z", ZZ), dual_poly("u^2*v*w", ZZ)).constant_value() == 1
    assert apolarity_pair(Tq("x^3*y", ZZ), dual_poly("u^3*w", ZZ)).constant_value() == 0
    assert apolarity_pair(Tq("x^2*y^2", ZZ), dual_poly("u^2*v^2", ZZ)).constant_value() == 2


def test_invariant_A_klein_and_x4():
    klein = Tq("x^3*y + y^3*z + z^3*x", ZZ)
    # oracle: pair the three matching monomials with weight 3 each against
    # the known H = 3(u^3 v + v^3 w + w^3 u)
    assert invariant_A(klein).constant_value() == 3 * (1 * 3) * 3
    assert invariant_A(Tq("x^4", ZZ)).constant_value() == 0


def test_invariant_A_sl3_invariance_and_cubic_scaling():
    rng = random.Random(6)
    F = PrimeField(31)
    for _ in range(20):
        q = Polynomial(F, TERNARY,
                       {(i, j, 4 - i - j): F.random(rng)
                        for i in range(5) for j in range(5 - i)})
        M = random_special_linear(F, 3, rng)
        assert invariant_A(transform_ternary(q, M)) == invariant_A(q)
        lam = F.random(rng)
        assert invariant_A(q.scale(lam)).constant_value() == \
            F.mul(F.pow(lam, 3), invariant_A(q).constant_value())


def test_trilinear_t_definition_and_x4_x4_y4():
    # polarization gives <q, q> = 2 H(q), so the diagonal of t is 2 A(q)
    rng = random.Random(7)
    F = PrimeField(13)
    for _ in range(10):
        q = Polynomial(F, TERNARY,
                       {(i, j, 4 - i - j): F.random(rng)
                        for i in range(5) for j in range(5 - i)})
        assert trilinear_t(q, q, q) == invariant_A(q).scale(2)
    assert trilinear_t(Tq("x^4", ZZ), Tq("x^4", ZZ), Tq("y^4", ZZ)).is_zero()


def test_trilinear_symmetry_spot_monomials():
    import itertools
    F = ZZ
    monos = [Tq(s, ZZ) for s in ("x^4", "x^3*y", "x^2*y*z", "y^2*z^2", "x*y*z^2")]
    for trip in itertools.product(monos, repeat=3):
        base = trilinear_t(*trip)
        for perm in itertools.permutations(trip):
            assert trilinear_t(*perm) == base


# -- Lie action ----------------------------------------------------------------

def test_lie_apply_basics():
    q = Tq("x^4", ZZ)
    g = LieOperator.basis_element(ZZ, "y", "x")
    assert lie_apply(g, q) == Tq("4*x^3*y", ZZ)
    g2 = LieOperator(ZZ, [[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    assert lie_apply(g2, Tq("x^3*y", ZZ)) == Tq("2*x^3*y", ZZ)
    g3 = LieOperator.basis_element(ZZ, "z", "y")
    assert lie_apply(g3, Tq("y^3*z", ZZ)) == Tq("3*y^2*z^2", ZZ)


def test_verify_lie_identity_all_generators():
    from quartics.invariants import verify_lie_identity
    for g in sl3_standard_generators(ZZ):
        assert verify_lie_identity(g).is_zero()


def test_verify_lie_identity_rejects_trace():
    from quartics.invariants import verify_lie_identity
    g = LieOperator(ZZ, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(PolynomialError):
        verify_lie_identity(g)


def test_corollary_identities_generic_and_concrete():
    q = generic_ternary_quartic()
    H = harmonic_quartic(q)
    for index in range(1, 7):
        assert corollary_identity(index, q, H).is_zero()
    klein = Tq("x^3*y + y^3*z + z^3*x", ZZ)
    assert corollary_identity(1, klein).is_zero()
    rng = random.Random(8)
    F = PrimeField(31)
    for _ in range(10):
        qq = Polynomial(F, TERNARY,
                        {(i, j, 4 - i - j): F.random(rng)
                         for i in range(5) for j in range(5 - i)})
        assert corollary_identity(5, qq).is_zero()
    with pytest.raises(ValueError):
        corollary_identity(7, klein)


def test_corollary_matches_lie_route():
    rng = random.Random(9)
    F = PrimeField(13)
    for index in range(1, 7):
        for _ in range(5):
            q = Polynomial(F, TERNARY,
                           {(i, j, 4 - i - j): F.random(rng)
                            for i in range(5) for j in range(5 - i)})
            H = harmonic_quartic(q)
            direct = corollary_identity(index, q, H)
            via_lie = apolarity_pair(lie_apply(corollary_operator(F, index), q), H)
            assert direct == via_lie


# -- characteristic 3 -----------------------------------------------------------

def test_char3_square_formula_agrees():
    rng = random.Random(10)
    for F in (PrimeField(3), make_extension(3, 3)):
        for _ in range(50):
            q = Polynomial(F, TERNARY,
                           {(i, j, 4 - i - j): F.random(rng)
                            for i in range(5) for j in range(5 - i)})
            assert harmonic_char3_square(q) == harmonic_quartic(q)


def test_char3_square_formula_rejects_wrong_characteristic():
    with pytest.raises(PolynomialError):
        harmonic_char3_square(Tq("x^4", PrimeField(5)))


def test_totally_harmonic_normal_forms():
    # x^3 times anything linear
    q = Tq("x^3*y + 2*x^3*z")
    assert is_totally_harmonic(q)
    assert is_totally_harmonic(Tq("x^4 + y^3*z", PrimeField(2)))
    assert is_totally_harmonic(Tq("x^4 + y^3*z", PrimeField(3)))
    assert not is_totally_harmonic(Tq("x^4 + y^3*z", PrimeField(5)))
    assert is_totally_harmonic(Tq("x^3*y + x*z^3", PrimeField(3)))  # x(x^2 y + z^3)
