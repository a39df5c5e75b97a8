"""Exact arithmetic in Z[tau] and Q(sqrt 5), tau the golden mean.

Elements of Z[tau] are written ``a + b*tau`` with ``tau**2 == tau + 1``.
The algebraic conjugate sends ``tau`` to ``1 - tau``.  Anything that is only
defined up to units of Z[tau] is returned in the canonical form produced by
:func:`unit_normalize`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

SQRT5 = math.sqrt(5.0)
PHI = (1.0 + SQRT5) / 2.0
PSI = (1.0 - SQRT5) / 2.0

IntLike = Union[int, "GoldenInt"]


def int_sqrt(n: int) -> Optional[int]:
    """Exact square root of ``n`` or ``None`` if ``n`` is not a perfect square."""
    if n < 0:
        raise ValueError("int_sqrt of a negative number")
    r = math.isqrt(n)
    return r if r * r == n else None


def _sign_sqrt5(x: Fraction, y: Fraction) -> int:
    """Sign of x + y*sqrt(5), decided exactly."""
    if x >= 0 and y >= 0:
        return 0 if (x == 0 and y == 0) else 1
    if x <= 0 and y <= 0:
        return -1
    # opposite signs
    d = x * x - 5 * y * y
    if d == 0:
        return 0
    return (1 if x > 0 else -1) if d > 0 else (1 if y > 0 else -1)


class GoldenInt:
    """Element ``a + b*tau`` of the ring Z[tau]."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def coerce(cls, x: IntLike) -> "GoldenInt":
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to GoldenInt")

    # ring operations -------------------------------------------------
    def __add__(self, other: IntLike) -> "GoldenInt":
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> "GoldenInt":
        if isinstance(other, int):
            return GoldenInt(self.a - other, self.b)
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other: IntLike) -> "GoldenInt":
        return (-self) + other

    def __mul__(self, other: IntLike) -> "GoldenInt":
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if isinstance(other, GoldenInt):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            return GoldenInt(a * c + bd, a * d + b * c + bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GoldenInt":
        if k < 0:
            inv = self.unit_inverse()
            return inv ** (-k)
        result, base = GoldenInt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        tpart = {1: "t", -1: "-t"}.get(self.b, f"{self.b}t")
        if not self.a:
            return tpart
        return f"{self.a}{'' if tpart.startswith('-') else '+'}{tpart}"

    # field-theoretic data ----------------------------------------------
    def conj(self) -> "GoldenInt":
        return GoldenInt(self.a + self.b, -self.b)

    def field_norm(self) -> int:
        """Signed norm x * x'."""
        a, b = self.a, self.b
        return a * a + a * b - b * b

    def trace(self) -> int:
        return 2 * self.a + self.b

    def embed(self) -> tuple[float, float]:
        """Images under tau -> (1+sqrt5)/2 and tau -> (1-sqrt5)/2."""
        return self.a + self.b * PHI, self.a + self.b * PSI

    def sign1(self) -> int:
        return _sign_sqrt5(Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2))

    def sign2(self) -> int:
        return _sign_sqrt5(Fraction(2 * self.a + self.b, 2), Fraction(-self.b, 2))

    def is_totally_positive(self) -> bool:
        return self.sign1() > 0 and self.sign2() > 0

    def is_unit(self) -> bool:
        return abs(self.field_norm()) == 1

    def unit_inverse(self) -> "GoldenInt":
        n = self.field_norm()
        if abs(n) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of Z[tau]")
        return self.conj() * n

    def mod2(self) -> tuple[int, int]:
        return self.a & 1, self.b & 1

    # division ---------------------------------------------------------
    def divides(self, other: IntLike) -> bool:
        other = GoldenInt.coerce(other)
        if not self:
            return not other
        n = self.field_norm()
        num = other * self.conj()
        return num.a % n == 0 and num.b % n == 0

    def exact_div(self, other: IntLike) -> "GoldenInt":
        """``self / other``, raising ``ArithmeticError`` unless exact."""
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            if self.a % other or self.b % other:
                raise ArithmeticError(f"{other} does not divide {self}")
            return GoldenInt(self.a // other, self.b // other)
        other = GoldenInt.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        n = other.field_norm()
        num = self * other.conj()
        if num.a % n or num.b % n:
            raise ArithmeticError(f"{other} does not divide {self}")
        return GoldenInt(num.a // n, num.b // n)

    def divmod_round(self, other: "GoldenInt") -> tuple["GoldenInt", "GoldenInt"]:
        """Euclidean step: quotient rounded coordinate-wise, |Nr(rem)| < |Nr(other)|."""
        n = other.field_norm()
        num = self * other.conj()
        q = GoldenInt(_round_half_up(Fraction(num.a, n)), _round_half_up(Fraction(num.b, n)))
        return q, self - q * other


def _round_half_up(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


TAU = GoldenInt(0, 1)
TAU2 = GoldenInt(1, 1)  # tau**2, totally positive unit
TAU2_INV = GoldenInt(2, -1)  # tau**-2


def golden_conj(x: GoldenInt) -> GoldenInt:
    return x.conj()


def golden_norm(x: GoldenInt) -> int:
    """Absolute field norm |x x'|."""
    return abs(GoldenInt.coerce(x).field_norm())


def unit_normalize(x: IntLike) -> GoldenInt:
    """Canonical associate of ``x``.

    Among the associates ``x * (+-tau**k)`` pick the totally positive ones,
    then minimal trace, then the lexicographically smallest ``(a, b)``.
    """
    x = GoldenInt.coerce(x)
    if not x:
        return x
    if x.field_norm() < 0:
        x = x * TAU
    if x.sign1() < 0:
        x = -x
    t = x.trace()
    while True:
        up = x * TAU2
        if up.trace() < t:
            x, t = up, up.trace()
            continue
        down = x * TAU2_INV
        if down.trace() < t:
            x, t = down, down.trace()
            continue
        break
    best = (x.a, x.b)
    for cand in (x * TAU2, x * TAU2_INV):
        if cand.trace() == t and (cand.a, cand.b) < best:
            best = (cand.a, cand.b)
    return GoldenInt(*best)


def is_associate(x: IntLike, y: IntLike) -> bool:
    return unit_normalize(x) == unit_normalize(y)


def golden_gcd(x: IntLike, y: IntLike) -> GoldenInt:
    """Greatest common divisor in Z[tau], unit-normalized."""
    x, y = GoldenInt.coerce(x), GoldenInt.coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        _, r = x.divmod_round(y)
        x, y = y, r
    return unit_normalize(x)


def golden_lcm(x: IntLike, y: IntLike) -> GoldenInt:
    x, y = GoldenInt.coerce(x), GoldenInt.coerce(y)
    if not x or not y:
        raise ValueError("lcm with zero is undefined")
    return unit_normalize((x * y).exact_div(golden_gcd(x, y)))


def golden_sqrt(x: IntLike) -> Optional[GoldenInt]:
    """Square root in Z[tau], positive under tau -> (1+sqrt5)/2, or ``None``.

    Uses tr(y)**2 == tr(y*y) + 2*N(y): the trace and norm of a root are
    fixed up to sign by ``x``, leaving a quadratic for the coordinates.
    """
    x = GoldenInt.coerce(x)
    if not x:
        return GoldenInt(0)
    if x.sign1() < 0 or x.sign2() < 0:
        return None
    n = x.field_norm()
    m = int_sqrt(n) if n >= 0 else None
    if m is None:
        return None
    for nr in {m, -m}:
        t = int_sqrt(x.trace() + 2 * nr) if x.trace() + 2 * nr >= 0 else None
        if t is None:
            continue
        for tr in {t, -t}:
            for d in _solve_d(tr, x.a):
                y = GoldenInt((tr - d) // 2, d)
                if y * y == x:
                    return y if y.sign1() > 0 else -y
    return None


def _solve_d(tr: int, a: int) -> list[int]:
    # c = (tr - d)/2 and c^2 + d^2 = a  give  5d^2 - 2 tr d + tr^2 - 4a = 0
    disc = 4 * tr * tr - 20 * (tr * tr - 4 * a)
    if disc < 0:
        return []
    s = int_sqrt(disc)
    if s is None:
        return []
    return [num // 10 for num in {2 * tr + s, 2 * tr - s}
            if num % 10 == 0 and (tr - num // 10) % 2 == 0]


class GoldenRat:
    """Element of Q(sqrt 5) stored as ``GoldenInt / den`` in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLike, den: int = 1) -> None:
        num = GoldenInt.coerce(num)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.a, num.b, den)
        if g > 1:
            num, den = GoldenInt(num.a // g, num.b // g), den // g
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x: Union[int, Fraction, GoldenInt, "GoldenRat"]) -> "GoldenRat":
        if isinstance(x, GoldenRat):
            return x
        if isinstance(x, Fraction):
            return cls(GoldenInt(x.numerator), x.denominator)
        return cls(GoldenInt.coerce(x))

    @classmethod
    def from_parts(cls, a: Fraction, b: Fraction) -> "GoldenRat":
        """``a + b*tau`` for rationals ``a``, ``b``."""
        a, b = Fraction(a), Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        return cls(GoldenInt(int(a * d), int(b * d)), d)

    @property
    def parts(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.num.a, self.den), Fraction(self.num.b, self.den)

    def __add__(self, other):
        other = GoldenRat.coerce(other)
        return GoldenRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "GoldenRat":
        return GoldenRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-GoldenRat.coerce(other))

    def __rsub__(self, other):
        return GoldenRat.coerce(other) - self

    def __mul__(self, other):
        other = GoldenRat.coerce(other)
        return GoldenRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "GoldenRat":
        n = self.num.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GoldenRat(self.num.conj() * self.den, n)

    def __truediv__(self, other):
        return self * GoldenRat.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GoldenRat.coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, GoldenInt)):
            other = GoldenRat.coerce(other)
        if isinstance(other, GoldenRat):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num.a, self.num.b, self.den))

    def __repr__(self) -> str:
        return f"GoldenRat({self.num!r}, {self.den})"

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    def conj(self) -> "GoldenRat":
        return GoldenRat(self.num.conj(), self.den)

    def embed(self) -> tuple[float, float]:
        s1, s2 = self.num.embed()
        return s1 / self.den, s2 / self.den

    def is_integral(self) -> bool:
        return self.den == 1

    def to_golden_int(self) -> GoldenInt:
        if self.den != 1:
            raise ArithmeticError(f"{self} is not in Z[tau]")
        return self.num
