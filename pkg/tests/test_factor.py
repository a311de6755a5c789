import random

import pytest

from quartics.rings import PrimeField, make_extension
from quartics.poly import Polynomial, PolynomialError, parse_polynomial
from quartics.factor import (
    binary_root_multiplicities, extension_embedding, factor_univariate,
    field_order, roots_with_multiplicity, u_from_poly,
)


def dense_to_poly(F, coeffs, name="x"):
    return Polynomial(F, (name,), {(i,): F.from_int(c) if isinstance(c, int) else c
                                   for i, c in enumerate(coeffs)
                                   if not F.is_zero(F.from_int(c) if isinstance(c, int) else c)})


def test_factor_x2_minus_1_over_f13():
    F = PrimeField(13)
    f = parse_polynomial("x^2 - 1", F, ("x",))
    fac = factor_univariate(f, seed=0)
    assert fac.unit == 1
    got = sorted(str(g) for g, m in fac.factors)
    assert got == ["x + 1", "x + 12"]
    assert all(m == 1 for _, m in fac.factors)


def test_factor_irreducible_cubic_over_f2():
    F = PrimeField(2)
    f = parse_polynomial("x^3 + x + 1", F, ("x",))
    fac = factor_univariate(f, seed=0)
    assert len(fac.factors) == 1
    g, m = fac.factors[0]
    assert m == 1 and g == f
    # oracle: no roots in GF(2) and degree 3 forces irreducibility
    assert all(f.evaluate({"x": c}) for c in (0, 1))


def test_factor_with_multiplicities_over_f7():
    F = PrimeField(7)
    lin = parse_polynomial("x - 2", F, ("x",))
    quad = parse_polynomial("x^2 + 1", F, ("x",))
    f = lin ** 3 * quad
    # oracle: x^2 + 1 has no root mod 7
    assert all(F.add(F.mul(a, a), 1) != 0 for a in range(7))
    fac = factor_univariate(f, seed=5)
    table = {str(g): m for g, m in fac.factors}
    assert table == {"x + 5": 3, "x^2 + 1": 1}


@pytest.mark.parametrize("p", [13, 31])
def test_factor_round_trip_random(p):
    F = PrimeField(p)
    rng = random.Random(1000 + p)
    for trial in range(250):
        deg = rng.randrange(1, 25)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
        f = dense_to_poly(F, coeffs)
        fac = factor_univariate(f, seed=trial)
        assert fac.expand(F, ("x",), "x") == f
        for g, _ in fac.factors:
            lead = g.coefficient_poly(("x",), (g.degree_in("x"),))
            assert lead.constant_value() == 1


def test_factor_round_trip_extension_field():
    F = make_extension(13, 2)
    rng = random.Random(77)
    for trial in range(60):
        deg = rng.randrange(1, 9)
        coeffs = [F.random(rng) for _ in range(deg)] + [F.one]
        f = Polynomial(F, ("x",), {(i,): c for i, c in enumerate(coeffs) if not F.is_zero(c)})
        fac = factor_univariate(f, seed=trial)
        assert fac.expand(F, ("x",), "x") == f


def test_factor_rejects_zero():
    F = PrimeField(5)
    with pytest.raises(PolynomialError):
        factor_univariate(Polynomial.zero(F, ("x",)), 0)


def test_factor_deterministic_given_seed():
    F = PrimeField(31)
    f = parse_polynomial("x^6 + 3*x^4 + x + 7", F, ("x",))
    a = factor_univariate(f, seed=123)
    b = factor_univariate(f, seed=123)
    assert [(str(g), m) for g, m in a.factors] == [(str(g), m) for g, m in b.factors]


def test_roots_with_multiplicity():
    F = PrimeField(13)
    f = parse_polynomial("x - 3", F, ("x",)) ** 2 * parse_polynomial("x - 5", F, ("x",))
    roots = dict(roots_with_multiplicity(f))
    assert roots == {3: 2, 5: 1}


def test_binary_roots_stated_factorization():
    F = PrimeField(13)
    # (2y - 3z)^3 (y - 5z), roots [3:2] and [5:1] after normalization
    f = (parse_polynomial("2*y - 3*z", F, ("y", "z")) ** 3
         * parse_polynomial("y - 5*z", F, ("y", "z")))
    E, roots = binary_root_multiplicities(f, names=("y", "z"))
    assert E == F
    table = {pt: m for pt, m in roots}
    # root of 2y - 3z is [y:z] = [3:2], normalized to (1, 2/3)
    want_triple = (1, F.mul(2, F.inv(3)))
    want_simple = (1, F.inv(5))
    assert table == {want_triple: 3, want_simple: 1}


def test_binary_roots_trailing_variable():
    F = PrimeField(7)
    f = parse_polynomial("y^2*z^2", F, ("y", "z"))
    E, roots = binary_root_multiplicities(f, names=("y", "z"))
    assert dict(roots) == {(F.zero, F.one): 2, (F.one, F.zero): 2}


def test_binary_roots_distinct_in_char7():
    F = PrimeField(7)
    f = parse_polynomial("y^4 - y*z^3", F, ("y", "z"))
    E, roots = binary_root_multiplicities(f, names=("y", "z"))
    assert sum(m for _, m in roots) == 4
    assert all(m == 1 for _, m in roots)
    assert len(roots) == 4
    # oracle: gcd of f(1, t) with its derivative is constant in char 7
    for pt, _ in roots:
        s, t = pt
        val = E.sub(E.pow(s, 4), E.mul(s, E.pow(t, 3)))
        assert E.is_zero(val)


def test_binary_roots_auto_extension():
    F = PrimeField(13)
    # y^4 + z^4: fourth roots of -1 do not lie in GF(13)
    f = parse_polynomial("y^4 + z^4", F, ("y", "z"))
    E, roots = binary_root_multiplicities(f, names=("y", "z"))
    assert field_order(E) == 13 ** 2
    assert sum(m for _, m in roots) == 4 and len(roots) == 4
    for (s, t), _ in roots:
        assert E.is_zero(E.add(E.pow(s, 4), E.pow(t, 4)))


def test_binary_roots_explicit_target_too_small():
    F = PrimeField(13)
    f = parse_polynomial("y^4 + z^4", F, ("y", "z"))
    with pytest.raises(PolynomialError):
        binary_root_multiplicities(f, names=("y", "z"), target=F)


def test_extension_embedding_is_ring_hom():
    F = make_extension(13, 2)
    E = make_extension(13, 4)
    phi = extension_embedding(F, E)
    rng = random.Random(55)
    for _ in range(60):
        a, b = F.random(rng), F.random(rng)
        assert phi(F.add(a, b)) == E.add(phi(a), phi(b))
        assert phi(F.mul(a, b)) == E.mul(phi(a), phi(b))
    assert phi(F.one) == E.one
    # the image of the generator is a root of the source modulus
    img = phi(F.gen)
    acc = E.zero
    for i, c in enumerate(F.modulus):
        acc = E.add(acc, E.mul(E.from_base(c), E.pow(img, i)))
    assert E.is_zero(acc)
