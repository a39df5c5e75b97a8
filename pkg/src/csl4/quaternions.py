"""Hurwitz and icosian quaternions.

Both rings store *doubled* coordinates: a Hurwitz quaternion is four
integers ``(D0, D1, D2, D3)`` standing for ``(D0 + D1 i + D2 j + D3 k) / 2``;
an icosian stores four elements of Z[tau] the same way (flattened to eight
ints internally for speed).
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .golden import (
    PHI,
    PSI,
    GoldenInt,
    GoldenRat,
    golden_gcd,
    int_sqrt,
    unit_normalize,
)

__all__ = [
    "HurwitzQuat",
    "Icosian",
    "hurwitz_units",
    "icosian_units",
    "twist",
    "is_primitive",
    "primitive_part",
    "is_reduced",
    "reduced_decompose",
    "left_divmod",
    "right_divmod",
    "glcd",
    "grcd",
    "right_normalize",
    "left_normalize",
    "enumerate_norm_J",
    "enumerate_norm_I",
    "enumerate_trace_ball_I",
    "right_unit_orbits",
    "parse_quaternion",
    "format_quaternion",
    "ICOSIAN_BASIS",
    "HURWITZ_BASIS",
]


class RingMismatch(TypeError):
    pass


# ---------------------------------------------------------------------------
# Hurwitz ring J
# ---------------------------------------------------------------------------


class HurwitzQuat:
    """Element of the Hurwitz ring, stored by doubled integer coordinates."""

    __slots__ = ("d",)

    def __init__(self, d0: int, d1: int, d2: int, d3: int) -> None:
        if not ((d0 - d1) % 2 == 0 and (d0 - d2) % 2 == 0 and (d0 - d3) % 2 == 0):
            raise ValueError(f"doubled coordinates {(d0, d1, d2, d3)} differ in parity")
        self.d = (d0, d1, d2, d3)

    @classmethod
    def from_coords(cls, *c: Union[int, Fraction]) -> "HurwitzQuat":
        dd = [Fraction(x) * 2 for x in c]
        if any(x.denominator != 1 for x in dd):
            raise ValueError(f"{c} is not in the Hurwitz ring")
        return cls(*(int(x) for x in dd))

    @classmethod
    def _raw(cls, d: tuple[int, int, int, int]) -> "HurwitzQuat":
        obj = object.__new__(cls)
        obj.d = d
        return obj

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.d)

    def __mul__(self, other):
        if isinstance(other, int):
            return HurwitzQuat._raw(tuple(x * other for x in self.d))
        if not isinstance(other, HurwitzQuat):
            if isinstance(other, Icosian):
                raise RingMismatch("cannot multiply Hurwitz and icosian quaternions")
            return NotImplemented
        a0, a1, a2, a3 = self.d
        b0, b1, b2, b3 = other.d
        r = (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
        return HurwitzQuat._raw(tuple(x // 2 for x in r))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __add__(self, other: "HurwitzQuat") -> "HurwitzQuat":
        return HurwitzQuat(*(x + y for x, y in zip(self.d, other.d)))

    def __sub__(self, other: "HurwitzQuat") -> "HurwitzQuat":
        return HurwitzQuat(*(x - y for x, y in zip(self.d, other.d)))

    def __neg__(self) -> "HurwitzQuat":
        return HurwitzQuat._raw(tuple(-x for x in self.d))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HurwitzQuat) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("J",) + self.d)

    def __bool__(self) -> bool:
        return any(self.d)

    def __repr__(self) -> str:
        return f"HurwitzQuat({format_quaternion(self)})"

    def conj(self) -> "HurwitzQuat":
        d0, d1, d2, d3 = self.d
        return HurwitzQuat._raw((d0, -d1, -d2, -d3))

    def norm(self) -> int:
        """Reduced norm |q|^2."""
        return sum(x * x for x in self.d) // 4

    def key(self) -> tuple:
        return self.d

    def exact_div_scalar(self, n: int) -> "HurwitzQuat":
        if any(x % n for x in self.d):
            raise ArithmeticError(f"{n} does not divide {self}")
        return HurwitzQuat(*(x // n for x in self.d))


HURWITZ_BASIS = (
    HurwitzQuat(2, 0, 0, 0),
    HurwitzQuat(0, 2, 0, 0),
    HurwitzQuat(0, 0, 2, 0),
    HurwitzQuat(1, 1, 1, 1),
)


def enumerate_norm_J(m: int) -> list[HurwitzQuat]:
    """All q in J with |q|^2 == m."""
    if m < 0:
        return []
    target = 4 * m
    bound = math.isqrt(target)
    out = []
    for d0 in range(-bound, bound + 1):
        r0 = target - d0 * d0
        b1 = math.isqrt(r0)
        for d1 in range(-b1, b1 + 1):
            if (d1 - d0) & 1:
                continue
            r1 = r0 - d1 * d1
            b2 = math.isqrt(r1)
            for d2 in range(-b2, b2 + 1):
                if (d2 - d0) & 1:
                    continue
                r2 = r1 - d2 * d2
                d3 = int_sqrt(r2)
                if d3 is None or (d3 - d0) & 1:
                    continue
                out.append(HurwitzQuat._raw((d0, d1, d2, d3)))
                if d3:
                    out.append(HurwitzQuat._raw((d0, d1, d2, -d3)))
    return out


@lru_cache(maxsize=None)
def hurwitz_units() -> tuple[HurwitzQuat, ...]:
    return tuple(sorted(enumerate_norm_J(1), key=HurwitzQuat.key))


# ---------------------------------------------------------------------------
# Icosian ring I
# ---------------------------------------------------------------------------


def _gm(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    bd = b * d
    return a * c + bd, a * d + b * c + bd


def _imul_raw(x: tuple, y: tuple) -> tuple:
    """Hamilton product on doubled coordinates, result still doubled."""
    a0, b0, a1, b1, a2, b2, a3, b3 = x
    c0, d0, c1, d1, c2, d2, c3, d3 = y
    p00 = _gm(a0, b0, c0, d0); p01 = _gm(a0, b0, c1, d1)
    p02 = _gm(a0, b0, c2, d2); p03 = _gm(a0, b0, c3, d3)
    p10 = _gm(a1, b1, c0, d0); p11 = _gm(a1, b1, c1, d1)
    p12 = _gm(a1, b1, c2, d2); p13 = _gm(a1, b1, c3, d3)
    p20 = _gm(a2, b2, c0, d0); p21 = _gm(a2, b2, c1, d1)
    p22 = _gm(a2, b2, c2, d2); p23 = _gm(a2, b2, c3, d3)
    p30 = _gm(a3, b3, c0, d0); p31 = _gm(a3, b3, c1, d1)
    p32 = _gm(a3, b3, c2, d2); p33 = _gm(a3, b3, c3, d3)
    r = (
        p00[0] - p11[0] - p22[0] - p33[0], p00[1] - p11[1] - p22[1] - p33[1],
        p01[0] + p10[0] + p23[0] - p32[0], p01[1] + p10[1] + p23[1] - p32[1],
        p02[0] - p13[0] + p20[0] + p31[0], p02[1] - p13[1] + p20[1] + p31[1],
        p03[0] + p12[0] - p21[0] + p30[0], p03[1] + p12[1] - p21[1] + p30[1],
    )
    if any(v & 1 for v in r):
        raise ArithmeticError("product left the icosian ring")
    return tuple(v >> 1 for v in r)


def _icosian_lambdas(raw: tuple) -> tuple[GoldenInt, ...] | None:
    """Coordinates over Z[tau] in ICOSIAN_BASIS, or None if not integral."""
    D0, D1, D2, D3 = (GoldenInt(raw[2 * i], raw[2 * i + 1]) for i in range(4))
    l3 = D2
    l4 = D3 - D2
    n1 = D0 - D2 - l4 * GoldenInt(1, -1)
    n2 = D1 - D2 - l4 * GoldenInt(0, 1)
    if n1.a & 1 or n1.b & 1 or n2.a & 1 or n2.b & 1:
        return None
    return GoldenInt(n1.a >> 1, n1.b >> 1), GoldenInt(n2.a >> 1, n2.b >> 1), l3, l4


class Icosian:
    """Element of the icosian ring; ``raw`` holds the eight doubled-coordinate ints."""

    __slots__ = ("raw",)

    def __init__(self, *doubled: Union[int, GoldenInt]) -> None:
        if len(doubled) != 4:
            raise ValueError("an icosian needs four doubled coordinates")
        raw = []
        for x in doubled:
            g = GoldenInt.coerce(x)
            raw += [g.a, g.b]
        raw = tuple(raw)
        if _icosian_lambdas(raw) is None:
            raise ValueError(f"{doubled} (doubled) is not in the icosian ring")
        self.raw = raw

    @classmethod
    def from_coords(cls, *c) -> "Icosian":
        """Build from actual coordinates (ints, Fractions, GoldenInt or GoldenRat)."""
        doubled = []
        for x in c:
            g = GoldenRat.coerce(x) * 2
            if not g.is_integral():
                raise ValueError(f"{c} is not in the icosian ring")
            doubled.append(g.num)
        return cls(*doubled)

    @classmethod
    def _raw(cls, raw: tuple) -> "Icosian":
        obj = object.__new__(cls)
        obj.raw = raw
        return obj

    @classmethod
    def from_lambdas(cls, lambdas: Sequence[Union[int, GoldenInt]]) -> "Icosian":
        acc = Icosian._raw((0,) * 8)
        for lam, e in zip(lambdas, ICOSIAN_BASIS):
            acc = acc + e.scale(GoldenInt.coerce(lam))
        return acc

    @property
    def doubled(self) -> tuple[GoldenInt, ...]:
        r = self.raw
        return tuple(GoldenInt(r[2 * i], r[2 * i + 1]) for i in range(4))

    @property
    def coords(self) -> tuple[GoldenRat, ...]:
        return tuple(GoldenRat(g, 2) for g in self.doubled)

    def lambdas(self) -> tuple[GoldenInt, ...]:
        lam = _icosian_lambdas(self.raw)
        assert lam is not None
        return lam

    def __mul__(self, other):
        if isinstance(other, Icosian):
            return Icosian._raw(_imul_raw(self.raw, other.raw))
        if isinstance(other, (int, GoldenInt)):
            return self.scale(GoldenInt.coerce(other))
        if isinstance(other, HurwitzQuat):
            raise RingMismatch("cannot multiply icosian and Hurwitz quaternions")
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GoldenInt)):
            return self.scale(GoldenInt.coerce(other))
        return NotImplemented

    def scale(self, g: GoldenInt) -> "Icosian":
        r = self.raw
        out = []
        for i in range(0, 8, 2):
            out += _gm(r[i], r[i + 1], g.a, g.b)
        return Icosian._raw(tuple(out))

    def __add__(self, other: "Icosian") -> "Icosian":
        return Icosian._raw(tuple(x + y for x, y in zip(self.raw, other.raw)))

    def __sub__(self, other: "Icosian") -> "Icosian":
        return Icosian._raw(tuple(x - y for x, y in zip(self.raw, other.raw)))

    def __neg__(self) -> "Icosian":
        return Icosian._raw(tuple(-x for x in self.raw))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Icosian) and self.raw == other.raw

    def __hash__(self) -> int:
        return hash(("I",) + self.raw)

    def __bool__(self) -> bool:
        return any(self.raw)

    def __repr__(self) -> str:
        return f"Icosian({format_quaternion(self)})"

    def conj(self) -> "Icosian":
        r = self.raw
        return Icosian._raw((r[0], r[1]) + tuple(-x for x in r[2:]))

    def norm(self) -> GoldenInt:
        """Reduced norm |q|^2 in Z[tau]."""
        r = self.raw
        a = b = 0
        for i in range(0, 8, 2):
            x, y = _gm(r[i], r[i + 1], r[i], r[i + 1])
            a += x
            b += y
        return GoldenInt(a // 4, b // 4)

    def trace_form(self) -> int:
        """tr(|x|^2), a positive definite integral quadratic form on I."""
        return self.norm().trace()

    def key(self) -> tuple:
        r = self.raw
        return tuple(k for i in range(0, 8, 2) for k in (2 * r[i] + r[i + 1], r[i], r[i + 1]))

    def exact_div_scalar(self, g: Union[int, GoldenInt]) -> "Icosian":
        lam = [x.exact_div(g) for x in self.lambdas()]
        return Icosian.from_lambdas(lam)


ICOSIAN_BASIS = (
    Icosian._raw((2, 0, 0, 0, 0, 0, 0, 0)),
    Icosian._raw((0, 0, 2, 0, 0, 0, 0, 0)),
    Icosian._raw((1, 0, 1, 0, 1, 0, 1, 0)),
    Icosian._raw((1, -1, 0, 1, 0, 0, 1, 0)),
)


def twist(x: Icosian) -> Icosian:
    """Conjugate every coordinate in Z[tau] and swap the last two."""
    r = x.raw
    c = lambda a, b: (a + b, -b)  # noqa: E731
    return Icosian._raw(c(r[0], r[1]) + c(r[2], r[3]) + c(r[6], r[7]) + c(r[4], r[5]))


def _golden_candidates(bound1: float, bound2: float) -> list[tuple[int, int]]:
    """All (a, b) with |a + b phi| <= bound1 and |a + b psi| <= bound2 (with slack)."""
    eps = 1e-9 * (1 + bound1 + bound2)
    vmax = int(math.floor((bound1 + bound2) / math.sqrt(5.0) + eps)) + 1
    out = []
    for b in range(-vmax, vmax + 1):
        lo = max(-bound1 - b * PHI, -bound2 - b * PSI) - eps
        hi = min(bound1 - b * PHI, bound2 - b * PSI) + eps
        for a in range(math.ceil(lo), math.floor(hi) + 1):
            out.append((a, b))
    return out


def _mod2_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a, b = _gm(x[0], x[1], y[0], y[1])
    return a & 1, b & 1


def enumerate_norm_I(d: Union[int, GoldenInt]) -> list[Icosian]:
    """All icosians x with |x|^2 == d.

    Walks doubled coordinates D2, D3, D0 over the box cut out by both real
    embeddings of 4d and resolves D1 from a table of squares; the ring's
    congruences mod 2 fix the residues of D0 and D1.
    """
    d = GoldenInt.coerce(d)
    if not d:
        return [Icosian._raw((0,) * 8)]
    if d.sign1() <= 0 or d.sign2() <= 0:
        return []
    t = d * 4
    T1, T2 = t.embed()
    cands = _golden_candidates(math.sqrt(T1), math.sqrt(T2))
    sq = {}
    emb = {}
    by_res: dict[tuple[int, int], list] = {}
    for g in cands:
        s = _gm(g[0], g[1], g[0], g[1])
        sq.setdefault(s, []).append(g)
        e1, e2 = g[0] + g[1] * PHI, g[0] + g[1] * PSI
        emb[g] = (e1 * e1, e2 * e2)
        by_res.setdefault((g[0] & 1, g[1] & 1), []).append(g)
    slack = 1e-7 * (1 + T1 + T2)
    one_minus_tau = (1, 1)  # 1 - tau mod 2
    tau = (0, 1)
    out = []
    for g2 in cands:
        e2 = emb[g2]
        for g3 in cands:
            e3 = emb[g3]
            s1, s2 = e2[0] + e3[0], e2[1] + e3[1]
            if s1 > T1 + slack or s2 > T2 + slack:
                continue
            r2 = (g2[0] & 1, g2[1] & 1)
            l4 = ((g3[0] - g2[0]) & 1, (g3[1] - g2[1]) & 1)
            x = _mod2_mul(l4, one_minus_tau)
            res0 = ((r2[0] + x[0]) & 1, (r2[1] + x[1]) & 1)
            y = _mod2_mul(l4, tau)
            res1 = ((r2[0] + y[0]) & 1, (r2[1] + y[1]) & 1)
            sq2 = _gm(g2[0], g2[1], g2[0], g2[1])
            sq3 = _gm(g3[0], g3[1], g3[0], g3[1])
            rest_a = t.a - sq2[0] - sq3[0]
            rest_b = t.b - sq2[1] - sq3[1]
            for g0 in by_res.get(res0, ()):
                e0 = emb[g0]
                if s1 + e0[0] > T1 + slack or s2 + e0[1] > T2 + slack:
                    continue
                sq0 = _gm(g0[0], g0[1], g0[0], g0[1])
                for g1 in sq.get((rest_a - sq0[0], rest_b - sq0[1]), ()):
                    if (g1[0] & 1, g1[1] & 1) != res1:
                        continue
                    out.append(Icosian._raw(g0 + g1 + g2 + g3))
    return out


@lru_cache(maxsize=None)
def icosian_units() -> tuple[Icosian, ...]:
    return tuple(sorted(enumerate_norm_I(1), key=Icosian.key))


def _z_basis_I() -> list[Icosian]:
    return [e for e in ICOSIAN_BASIS] + [e.scale(GoldenInt(0, 1)) for e in ICOSIAN_BASIS]


def enumerate_trace_ball_I(bound: int) -> list[Icosian]:
    """All x in I with tr(|x|^2) <= bound (Fincke-Pohst over exact rationals)."""
    if bound < 0:
        return []
    basis = _z_basis_I()
    n = len(basis)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            # polarization of the trace form
            s = (basis[i] + basis[j]).trace_form() - basis[i].trace_form() - basis[j].trace_form()
            gram[i][j] = Fraction(s, 2)
    # Q(y) = sum_i q[i][i] * (y_i + sum_{j>i} q[i][j] y_j)^2
    q = [row[:] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    out: list[Icosian] = []
    y = [0] * n
    B = Fraction(bound)

    def rec(i: int, remaining: Fraction) -> None:
        c = sum((q[i][j] * y[j] for j in range(i + 1, n)), Fraction(0))
        qi = q[i][i]
        s = math.sqrt(float(remaining / qi)) if remaining > 0 else 0.0
        lo = math.floor(-c - s) - 1
        hi = math.ceil(-c + s) + 1
        for v in range(lo, hi + 1):
            t = qi * (v + c) ** 2
            if t > remaining:
                continue
            y[i] = v
            if i == 0:
                x = Icosian._raw((0,) * 8)
                for coef, e in zip(y, basis):
                    if coef:
                        x = x + e.scale(GoldenInt(coef))
                out.append(x)
            else:
                rec(i - 1, remaining - t)
        y[i] = 0

    rec(n - 1, B)
    return out


# ---------------------------------------------------------------------------
# shared operations
# ---------------------------------------------------------------------------

Quaternion = Union[HurwitzQuat, Icosian]


def _units_for(q: Quaternion) -> tuple:
    return hurwitz_units() if isinstance(q, HurwitzQuat) else icosian_units()


def right_normalize(q: Quaternion) -> Quaternion:
    """Canonical representative of q*u over all units u (lexicographic minimum)."""
    if not q:
        return q
    return min((q * u for u in _units_for(q)), key=lambda x: x.key())


def left_normalize(q: Quaternion) -> Quaternion:
    if not q:
        return q
    return min((u * q for u in _units_for(q)), key=lambda x: x.key())


def right_unit_orbits(elements: Sequence[Quaternion]) -> list[Quaternion]:
    """Canonical representatives of the right-unit orbits among ``elements``."""
    seen = set()
    reps = []
    units = None
    for q in elements:
        if q in seen:
            continue
        units = units or _units_for(q)
        orbit = [q * u for u in units]
        seen.update(orbit)
        reps.append(min(orbit, key=lambda x: x.key()))
    reps.sort(key=lambda x: x.key())
    return reps


def primitive_part(q: Quaternion) -> tuple[Quaternion, Union[int, GoldenInt]]:
    """Split ``q = content * primitive`` with maximal scalar content."""
    if not q:
        raise ValueError("the zero quaternion has no primitive part")
    if isinstance(q, HurwitzQuat):
        best = 1
        for n in _divisors(math.gcd(*q.d)):
            dd = [x // n for x in q.d]
            if all((x - dd[0]) % 2 == 0 for x in dd):
                best = max(best, n)
        return HurwitzQuat(*(x // best for x in q.d)), best
    lam = q.lambdas()
    content = lam[0]
    for x in lam[1:]:
        content = golden_gcd(content, x) if (content or x) else content
    content = unit_normalize(content)
    return Icosian.from_lambdas([x.exact_div(content) for x in lam]), content


def _divisors(n: int) -> list[int]:
    small = [k for k in range(1, math.isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def is_primitive(q: Quaternion) -> bool:
    _, c = primitive_part(q)
    return c == 1


def is_reduced(q: HurwitzQuat) -> bool:
    if not is_primitive(q):
        raise ValueError(f"{q} is not primitive")
    return q.norm() % 2 == 1


_ONE_PLUS_I = HurwitzQuat(2, 2, 0, 0)


def reduced_decompose(q: HurwitzQuat) -> tuple[HurwitzQuat, HurwitzQuat]:
    """Write a primitive q as ``q_r * s`` with |q_r|^2 odd and |s|^2 a power of 2."""
    if not is_primitive(q):
        raise ValueError(f"{q} is not primitive")
    x = q
    k = 0
    conj_pi = _ONE_PLUS_I.conj()
    while x.norm() % 2 == 0:
        # q in J(1+i) since (1+i) generates the two-sided ideal above 2
        x = (x * conj_pi).exact_div_scalar(2)
        k += 1
    qr = right_normalize(x)
    # x = qr * u^{-1}
    u_inv = next(u.conj() for u in hurwitz_units() if x * u == qr)
    s = u_inv
    for _ in range(k):
        s = s * _ONE_PLUS_I
    return qr, s


# Euclidean division in J --------------------------------------------------


def _nearest_hurwitz(x: Sequence[Fraction]) -> HurwitzQuat:
    best = None
    best_key = None
    for half in (False, True):
        opts = []
        for c in x:
            if half:
                lo = math.floor(c - Fraction(1, 2)) + Fraction(1, 2)
            else:
                lo = Fraction(math.floor(c))
            opts.append((lo, lo + 1))
        for mask in range(16):
            t = [opts[i][(mask >> i) & 1] for i in range(4)]
            dist = sum((a - b) ** 2 for a, b in zip(x, t))
            dd = tuple(int(2 * v) for v in t)
            k = (dist, dd)
            if best_key is None or k < best_key:
                best_key, best = k, dd
    return HurwitzQuat(*best)


def _check_pair(a, b) -> None:
    if not (isinstance(a, HurwitzQuat) and isinstance(b, HurwitzQuat)):
        raise RingMismatch("Euclidean division is implemented for Hurwitz quaternions")


def left_divmod(a: HurwitzQuat, b: HurwitzQuat) -> tuple[HurwitzQuat, HurwitzQuat]:
    """``a = quot * b + rem`` with |rem|^2 < |b|^2."""
    _check_pair(a, b)
    if not b:
        raise ZeroDivisionError("division by the zero quaternion")
    n = b.norm()
    num = a * b.conj()
    quot = _nearest_hurwitz([Fraction(v, 2 * n) for v in num.d])
    return quot, a - quot * b


def right_divmod(a: HurwitzQuat, b: HurwitzQuat) -> tuple[HurwitzQuat, HurwitzQuat]:
    """``a = b * quot + rem`` with |rem|^2 < |b|^2."""
    _check_pair(a, b)
    if not b:
        raise ZeroDivisionError("division by the zero quaternion")
    n = b.norm()
    num = b.conj() * a
    quot = _nearest_hurwitz([Fraction(v, 2 * n) for v in num.d])
    return quot, a - b * quot


def _as_hurwitz(x: Union[int, HurwitzQuat]) -> HurwitzQuat:
    return HurwitzQuat(2 * x, 0, 0, 0) if isinstance(x, int) else x


def glcd(a: Union[int, HurwitzQuat], b: Union[int, HurwitzQuat]) -> HurwitzQuat:
    """Greatest common left divisor d (aJ + bJ = dJ), right-unit normalized."""
    a, b = _as_hurwitz(a), _as_hurwitz(b)
    if not a and not b:
        raise ValueError("glcd(0, 0) is undefined")
    while b:
        _, r = right_divmod(a, b)
        a, b = b, r
    return right_normalize(a)


def grcd(a: Union[int, HurwitzQuat], b: Union[int, HurwitzQuat]) -> HurwitzQuat:
    """Greatest common right divisor d (Ja + Jb = Jd), left-unit normalized."""
    a, b = _as_hurwitz(a), _as_hurwitz(b)
    if not a and not b:
        raise ValueError("grcd(0, 0) is undefined")
    while b:
        _, r = left_divmod(a, b)
        a, b = b, r
    return left_normalize(a)


# text format ---------------------------------------------------------------

_COMPONENT = re.compile(
    r"^\s*(?P<a>[+-]?\d+)?\s*(?:(?P<sign>[+-])?\s*(?P<b>\d*)\s*t)?\s*(?:/\s*(?P<den>\d+))?\s*$"
)


def _parse_component(text: str) -> GoldenRat:
    m = _COMPONENT.match(text)
    if not m or (m["a"] is None and m.group(0).find("t") < 0):
        raise ValueError(f"malformed quaternion component {text!r}")
    has_t = "t" in text
    if m["a"] is not None and has_t and m["sign"] is None:
        raise ValueError(f"malformed quaternion component {text!r}")
    a = int(m["a"]) if m["a"] is not None else 0
    b = 0
    if has_t:
        b = int(m["b"]) if m["b"] else 1
        if m["sign"] == "-":
            b = -b
    den = int(m["den"]) if m["den"] else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return GoldenRat(GoldenInt(a, b), den)


def parse_quaternion(text: str, ring: str = "J") -> Quaternion:
    """Parse ``"a,b,c,d"``; components are ``p/q`` or ``p+qt/r`` (``t`` = tau).

    ``ring`` is ``"J"`` (Hurwitz) or ``"I"`` (icosian).
    """
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated components, got {text!r}")
    comps = [_parse_component(p) for p in parts]
    if ring == "J":
        if any(c.num.b for c in comps):
            raise ValueError(f"{text!r} has irrational components; not a Hurwitz quaternion")
        return HurwitzQuat.from_coords(*(Fraction(c.num.a, c.den) for c in comps))
    if ring == "I":
        return Icosian.from_coords(*comps)
    raise ValueError(f"unknown ring {ring!r}")


def format_quaternion(q: Quaternion) -> str:
    return ",".join(str(c) for c in q.coords)


def iter_units(q: Quaternion) -> Iterator[Quaternion]:
    yield from _units_for(q)
