"""Counting functions f^rot and f (number of coincidence rotation classes / CSLs).

Both are multiplicative.  For D4* the prime-power values have closed forms;
Z4 is derived from D4* through the factors (1 + 2^{1-s}) and (1 + 2^{-s});
A4 and the icosian ring are defined by expanding their Euler products.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .coincidence import Family

# Polynomials in (x, p) as {(x_degree, p_degree): coefficient}, x = p^{-s}.
Poly = dict


def _poly(*terms: tuple[int, int, int]) -> Poly:
    out: Poly = {}
    for coef, k, a in terms:
        out[(k, a)] = out.get((k, a), 0) + coef
    return {key: c for key, c in out.items() if c}


def _pmul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for (k1, a1), c1 in f.items():
        for (k2, a2), c2 in g.items():
            key = (k1 + k2, a1 + a2)
            out[key] = out.get(key, 0) + c1 * c2
    return {key: c for key, c in out.items() if c}


def _binom(sign: int, p_deg: int, x_deg: int) -> Poly:
    """1 + sign * p^p_deg * x^x_deg."""
    return _poly((1, 0, 0), (sign, x_deg, p_deg))


def _substitute_square(f: Poly) -> Poly:
    """f(x, p) -> f(x^2, p^2)."""
    return {(2 * k, 2 * a): c for (k, a), c in f.items()}


@dataclass(frozen=True)
class EulerFactor:
    """Local factor numerator(x, p) / denominator(x, p) with x = p^{-s}."""

    numerator: Poly
    denominator: Poly
    name: str = ""

    def __post_init__(self) -> None:
        if self.numerator.get((0, 0)) != 1 or self.denominator.get((0, 0)) != 1:
            raise ValueError(f"Euler factor {self.name!r} must have constant term 1")

    def __mul__(self, other: "EulerFactor") -> "EulerFactor":
        return EulerFactor(_pmul(self.numerator, other.numerator),
                           _pmul(self.denominator, other.denominator),
                           f"{self.name}*{other.name}")

    def squared_variables(self) -> "EulerFactor":
        return EulerFactor(_substitute_square(self.numerator), _substitute_square(self.denominator),
                           f"{self.name}(x^2,p^2)")

    def local_series(self, p: int, r_max: int) -> list[int]:
        """Coefficients of x^0 .. x^r_max in the power-series expansion at prime ``p``."""
        num = _evaluate(self.numerator, p, r_max)
        den = _evaluate(self.denominator, p, r_max)
        out: list[int] = []
        for r in range(r_max + 1):
            v = Fraction(num[r]) - sum((den[k] * out[r - k] for k in range(1, r + 1)), 0)
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient in {self.name} at p={p}, r={r}")
            out.append(int(v))
        return out


def _evaluate(f: Poly, p: int, r_max: int) -> list[int]:
    coeffs = [0] * (r_max + 1)
    for (k, a), c in f.items():
        if k <= r_max:
            coeffs[k] += c * p**a
    return coeffs


ONE = EulerFactor({(0, 0): 1}, {(0, 0): 1}, "1")

D4_ROT = EulerFactor(
    _pmul(_binom(1, 0, 1), _binom(1, 1, 1)),
    _pmul(_binom(-1, 1, 1), _binom(-1, 2, 1)),
    "d4_rot",
)
D4_CSL = EulerFactor(
    _poly((1, 0, 0), (1, 1, 0), (2, 1, 1), (2, 2, 0), (1, 2, 1), (1, 3, 1)),
    _pmul(_binom(-1, 2, 1), _binom(-1, 1, 2)),
    "d4_csl",
)
Z4_ROT_2 = EulerFactor(_binom(1, 1, 1), {(0, 0): 1}, "1+2^{1-s}")
Z4_CSL_2 = EulerFactor(_binom(1, 0, 1), {(0, 0): 1}, "1+2^{-s}")

A4_ROT_RAMIFIED = EulerFactor(_binom(1, 1, 1), _binom(-1, 2, 1), "a4_rot_5")
A4_CSL_RAMIFIED = EulerFactor(  # 1 + (p+1) x / (1 - p^2 x)
    _poly((1, 0, 0), (1, 1, 0), (1, 1, 1), (-1, 1, 2)), _binom(-1, 2, 1), "a4_csl_5"
)
INERT_A4 = EulerFactor(_binom(1, 0, 1), _binom(-1, 2, 1), "a4_inert")

ICOSIAN_ROT_INERT = EulerFactor(
    _pmul(_binom(1, 0, 2), _binom(1, 2, 2)),
    _pmul(_binom(-1, 2, 2), _binom(-1, 4, 2)),
    "icosian_rot_inert",
)
ICOSIAN_CSL_INERT = D4_CSL.squared_variables()


def _is(p0: int) -> Callable[[int], bool]:
    return lambda p: p == p0


def _odd(p: int) -> bool:
    return p != 2


def _split(p: int) -> bool:
    return p % 5 in (1, 4)


def _inert(p: int) -> bool:
    return p % 5 in (2, 3)


FactorTable = Sequence[tuple[Callable[[int], bool], EulerFactor]]

EULER_PRODUCTS: dict[tuple[Family, str], FactorTable] = {
    (Family.D4STAR, "rot"): [(_odd, D4_ROT)],
    (Family.D4STAR, "csl"): [(_odd, D4_CSL)],
    (Family.Z4, "rot"): [(_is(2), Z4_ROT_2), (_odd, D4_ROT)],
    (Family.Z4, "csl"): [(_is(2), Z4_CSL_2), (_odd, D4_CSL)],
    (Family.A4, "rot"): [(_is(5), A4_ROT_RAMIFIED), (_split, D4_ROT), (_inert, INERT_A4)],
    (Family.A4, "csl"): [(_is(5), A4_CSL_RAMIFIED), (_split, D4_CSL), (_inert, INERT_A4)],
    (Family.ICOSIAN, "rot"): [(_is(5), D4_ROT), (_split, D4_ROT * D4_ROT), (_inert, ICOSIAN_ROT_INERT)],
    (Family.ICOSIAN, "csl"): [(_is(5), D4_CSL), (_split, D4_CSL * D4_CSL), (_inert, ICOSIAN_CSL_INERT)],
}


@dataclass
class DirichletCoeffs:
    """a_1 .. a_N of a Dirichlet series; ``coeffs[n]`` is a_n (index 0 unused)."""

    N: int
    coeffs: list[int] = field(repr=False)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(n)
        return self.coeffs[n]

    def as_list(self) -> list[int]:
        return self.coeffs[1:]


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _factor_for(table: FactorTable, p: int) -> EulerFactor:
    for pred, fac in table:
        if pred(p):
            return fac
    return ONE


def euler_expand(table: FactorTable, N: int) -> DirichletCoeffs:
    """Coefficients a_1..a_N of prod_p (local factor at p)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    a = [0] * (N + 1)
    a[1] = 1
    for p in primes_upto(N):
        r_max = 0
        pk = p
        while pk <= N:
            r_max += 1
            pk *= p
        local = _factor_for(table, p).local_series(p, r_max)
        # multiply the running series by the local factor, p-part last
        new = a[:]
        for m in range(1, N + 1):
            if a[m] == 0 or m % p == 0:
                continue
            pk, r = p, 1
            while m * pk <= N:
                new[m * pk] = a[m] * local[r]
                pk *= p
                r += 1
        a = new
    return DirichletCoeffs(N, a)


def series(family: Family, kind: str, N: int) -> DirichletCoeffs:
    return euler_expand(EULER_PRODUCTS[(family, kind)], N)


# closed forms -----------------------------------------------------------------


def d4_rot_prime_power(p: int, r: int) -> int:
    if r == 0:
        return 1
    if p == 2:
        return 0
    v = Fraction(p + 1, p - 1) * p ** (r - 1) * (p ** (r + 1) + p ** (r - 1) - 2)
    assert v.denominator == 1
    return int(v)


def d4_csl_prime_power(p: int, r: int) -> int:
    if r == 0:
        return 1
    if p == 2:
        return 0
    pref = Fraction((p + 1) ** 2, p**3 - 1)
    if r % 2:
        v = pref * (p ** (2 * r + 1) + p ** (2 * r - 2) - 2 * p ** ((r - 1) // 2))
    else:
        v = pref * (p ** (2 * r + 1) + p ** (2 * r - 2) - 2 * p ** (r // 2 - 1) * Fraction(1 + p * p, 1 + p))
    assert v.denominator == 1
    return int(v)


def _multiplicative(n: int, local: Callable[[int, int], int]) -> int:
    out = 1
    for p, r in factorize(n).items():
        out *= local(p, r)
        if not out:
            return 0
    return out


@lru_cache(maxsize=None)
def _local_table(family: Family, kind: str, p: int, r: int) -> int:
    return _factor_for(EULER_PRODUCTS[(family, kind)], p).local_series(p, r)[r]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("counting functions are defined for n >= 1")


def f_rot(family: Family, n: int) -> int:
    """Number of symmetry classes of coincidence rotations of index n."""
    _check_n(n)
    if family is Family.D4STAR:
        return _multiplicative(n, d4_rot_prime_power)
    if family is Family.Z4:
        if n % 2:
            return f_rot(Family.D4STAR, n)
        return 2 * f_rot(Family.D4STAR, n // 2) if n % 4 else 0
    return _multiplicative(n, lambda p, r: _local_table(family, "rot", p, r))


def f_csl(family: Family, n: int) -> int:
    """Number of distinct CSLs (CSMs) of index n."""
    _check_n(n)
    if family is Family.D4STAR:
        return _multiplicative(n, d4_csl_prime_power)
    if family is Family.Z4:
        if n % 2:
            return f_csl(Family.D4STAR, n)
        return f_csl(Family.D4STAR, n // 2) if n % 4 else 0
    return _multiplicative(n, lambda p, r: _local_table(family, "csl", p, r))


def spectrum_member(family: Family, n: int) -> bool:
    _check_n(n)
    if family is Family.D4STAR:
        return n % 2 == 1
    if family is Family.Z4:
        return n % 4 != 0
    if family is Family.A4:
        return True
    return all(r % 2 == 0 for p, r in factorize(n).items() if p % 5 in (2, 3))


def rotation_count(family: Family, n: int) -> int:
    return family.point_group_order * f_rot(family, n)


def isometry_count(family: Family, n: int) -> int:
    """Orientation-reversing coincidence isometries are as many as rotations."""
    return 2 * rotation_count(family, n)
