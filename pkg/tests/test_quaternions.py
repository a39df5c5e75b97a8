from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hurwitz, icosians
from csl4.golden import GoldenInt, GoldenRat
from csl4.quaternions import (
    HurwitzQuat,
    Icosian,
    RingMismatch,
    enumerate_norm_I,
    enumerate_norm_J,
    enumerate_trace_ball_I,
    format_quaternion,
    glcd,
    grcd,
    hurwitz_units,
    icosian_units,
    is_primitive,
    left_divmod,
    parse_quaternion,
    primitive_part,
    reduced_decompose,
    right_divmod,
    right_normalize,
    right_unit_orbits,
    twist,
)


def odd_divisor_sum(m: int) -> int:
    return sum(d for d in range(1, m + 1) if m % d == 0 and d % 2)


@pytest.mark.parametrize("m", range(1, 13))
def test_hurwitz_norm_counts_match_jacobi(m):
    # number of Hurwitz quaternions of norm m is 24 * (sum of odd divisors of m)
    pts = enumerate_norm_J(m)
    assert len(pts) == len(set(pts)) == 24 * odd_divisor_sum(m)
    assert all(q.norm() == m for q in pts)


def test_units():
    units = hurwitz_units()
    assert len(units) == 24
    assert {u * v for u in units for v in units} == set(units)
    iu = icosian_units()
    assert len(iu) == 120
    assert all(u.norm() == GoldenInt(1) for u in iu)
    one = Icosian(2, 0, 0, 0)
    assert all(u * u.conj() == one for u in iu)
    assert {u * v for u in iu[:10] for v in iu} == set(iu)


def test_icosian_norm_enumeration_against_trace_ball():
    ball = enumerate_trace_ball_I(6)
    by_norm = Counter(x.norm() for x in ball if x)
    for d, count in by_norm.items():
        assert len(enumerate_norm_I(d)) == count, d
    assert by_norm[GoldenInt(1)] == 120
    assert by_norm[GoldenInt(2)] == 600


@given(hurwitz(), hurwitz(), hurwitz())
def test_hurwitz_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conj() == b.conj() * a.conj()


@given(icosians(), icosians(), icosians())
def test_icosian_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conj() == b.conj() * a.conj()


@given(icosians(), icosians())
def test_twist_is_involutive_antiautomorphism(a, b):
    assert twist(twist(a)) == a
    assert twist(a * b) == twist(b) * twist(a)
    assert twist(a + b) == twist(a) + twist(b)


def test_icosian_membership():
    half = Fraction(1, 2)
    assert Icosian.from_coords(half, half, half, half) in icosian_units()
    with pytest.raises(ValueError):
        Icosian.from_coords(half, half, 0, 0)
    tau = GoldenRat(GoldenInt(0, 1))
    x = Icosian.from_coords(0, half, (tau - 1) * half, -tau * half)
    assert x.norm() == GoldenInt(1)
    assert Icosian.from_lambdas(x.lambdas()) == x


@given(icosians())
def test_primitive_part_icosian(x):
    if not x:
        return
    y, c = primitive_part(x)
    assert is_primitive(y)
    assert y.scale(c) == x


@given(hurwitz(), hurwitz())
def test_division_with_remainder(a, b):
    if not b:
        return
    q, r = left_divmod(a, b)
    assert a == q * b + r and r.norm() < b.norm()
    q, r = right_divmod(a, b)
    assert a == b * q + r and r.norm() < b.norm()


@given(hurwitz(), hurwitz())
def test_gcd_divides_and_is_bezout(a, b):
    if not a and not b:
        return
    g = glcd(a, b)
    assert right_divmod(a, g)[1].norm() == 0
    assert right_divmod(b, g)[1].norm() == 0
    h = grcd(a, b)
    assert left_divmod(a, h)[1].norm() == 0
    assert left_divmod(b, h)[1].norm() == 0


def test_glcd_with_integer():
    q = HurwitzQuat(2, 2, 2, 0)  # 1 + i + j, norm 3
    assert glcd(q, 3) == right_normalize(q)
    assert glcd(q, 5).norm() == 1


@given(hurwitz(-4, 4))
def test_reduced_decomposition(q):
    if not q or not is_primitive(q):
        return
    qr, s = reduced_decompose(q)
    assert qr * s == q
    assert qr.norm() % 2 == 1
    n = s.norm()
    assert n & (n - 1) == 0


def test_right_unit_orbits_partition_norm_shell():
    pts = [q for q in enumerate_norm_J(9) if is_primitive(q)]
    reps = right_unit_orbits(pts)
    assert len(reps) * 24 == len(pts)
    assert all(right_normalize(r) == r for r in reps)


@pytest.mark.parametrize(
    "text, ring",
    [("1,1,1,0", "J"), ("1/2,1/2,-1/2,1/2", "J"), ("0,1/2,1+t/2,-t/2", "I"), ("1+t,0,0,0", "I")],
)
def test_parse_format_roundtrip(text, ring):
    q = parse_quaternion(text, ring)
    assert parse_quaternion(format_quaternion(q), ring) == q


@pytest.mark.parametrize("bad", ["1,2,3", "1,x,0,0", "1/0,0,0,0", "1/2,0,0,0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_quaternion(bad, "J")


def test_parse_rejects_golden_in_hurwitz():
    with pytest.raises(ValueError):
        parse_quaternion("t,0,0,0", "J")


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        HurwitzQuat(2, 0, 0, 0) * Icosian(2, 0, 0, 0)
    with pytest.raises(RingMismatch):
        Icosian(2, 0, 0, 0) * HurwitzQuat(2, 0, 0, 0)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_hurwitz_parity_rule(a, b, c):
    with pytest.raises(ValueError):
        HurwitzQuat(2 * a, 2 * b + 1, 2 * c, 0)
