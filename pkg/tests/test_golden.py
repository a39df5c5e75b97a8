from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import golden_ints, nonzero_golden
from csl4.golden import (
    TAU,
    GoldenInt,
    GoldenRat,
    golden_gcd,
    golden_lcm,
    golden_norm,
    golden_sqrt,
    int_sqrt,
    is_associate,
    unit_normalize,
)


def test_tau_squared():
    assert TAU * TAU == TAU + 1


def test_norm_and_trace_examples():
    x = GoldenInt(2, 1)  # 2 + tau, a prime over 5
    assert x.field_norm() == 5
    assert x.trace() == 5
    assert x.conj() == GoldenInt(3, -1)
    assert golden_norm(GoldenInt(0, 1)) == 1


@given(golden_ints, golden_ints, golden_ints)
def test_ring_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(golden_ints, golden_ints)
def test_norm_multiplicative_and_conj_automorphism(x, y):
    assert (x * y).field_norm() == x.field_norm() * y.field_norm()
    assert (x * y).conj() == x.conj() * y.conj()
    assert x * x.conj() == GoldenInt(x.field_norm())


@given(golden_ints)
def test_embedding_matches_float_arithmetic(x):
    s1, s2 = x.embed()
    assert s1 * s2 == pytest.approx(x.field_norm(), abs=1e-9)
    assert s1 + s2 == pytest.approx(x.trace(), abs=1e-9)


@given(nonzero_golden, st.integers(-4, 4))
def test_unit_normalize_is_associate_invariant(x, k):
    u = TAU**abs(k)
    if k < 0:
        u = u.unit_inverse()
    n = unit_normalize(x)
    assert n == unit_normalize(x * u) == unit_normalize(-x * u)
    assert n.is_totally_positive()
    assert is_associate(x, n)


def test_unit_normalize_examples():
    assert unit_normalize(GoldenInt(0, 1)) == GoldenInt(1)
    assert unit_normalize(GoldenInt(-2)) == GoldenInt(2)
    assert unit_normalize(GoldenInt(1, -3)) == unit_normalize(GoldenInt(1, -3) * TAU)


@given(nonzero_golden, nonzero_golden)
def test_gcd_lcm(x, y):
    g = golden_gcd(x, y)
    assert g.divides(x) and g.divides(y)
    m = golden_lcm(x, y)
    assert x.divides(m) and y.divides(m)
    assert is_associate(g * m, x * y)


@given(nonzero_golden, nonzero_golden)
def test_divmod_round_shrinks_norm(a, b):
    q, r = a.divmod_round(b)
    assert a == q * b + r
    assert golden_norm(r) < golden_norm(b)


@given(golden_ints)
def test_sqrt_of_square(x):
    y = golden_sqrt(x * x)
    assert y is not None and y * y == x * x


def test_sqrt_rejects_non_squares():
    assert golden_sqrt(GoldenInt(2)) is None
    assert golden_sqrt(GoldenInt(0, 1)) is None  # tau is not totally positive
    assert golden_sqrt(GoldenInt(2, 1)) is None
    assert golden_sqrt(GoldenInt(1, 1)) == TAU


def test_int_sqrt():
    assert int_sqrt(49) == 7
    assert int_sqrt(50) is None
    assert int_sqrt(0) == 0


@given(st.fractions(max_denominator=12), st.fractions(max_denominator=12),
       st.fractions(max_denominator=12), st.fractions(max_denominator=12))
def test_golden_rat_field(a, b, c, d):
    x, y = GoldenRat.from_parts(a, b), GoldenRat.from_parts(c, d)
    assert x + y - y == x
    if y.num:
        assert (x / y) * y == x
    assert (x * y).conj() == x.conj() * y.conj()


def test_golden_rat_reduced_and_str():
    x = GoldenRat(GoldenInt(2, 4), 4)
    assert (x.num, x.den) == (GoldenInt(1, 2), 2)
    assert GoldenRat.coerce(Fraction(3, 6)).parts == (Fraction(1, 2), Fraction(0))
    with pytest.raises(ZeroDivisionError):
        GoldenRat(1, 0)
    with pytest.raises(ArithmeticError):
        GoldenRat(1, 2).to_golden_int()
