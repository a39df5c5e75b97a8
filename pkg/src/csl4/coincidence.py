"""Coincidence rotations, indices and coincidence site lattices/modules.

Four families are supported:

* ``D4STAR`` -- the centred hypercubic lattice, identified with the Hurwitz ring J;
* ``Z4`` -- the primitive hypercubic lattice, index 2 in J;
* ``A4`` -- the root lattice A4, realised as the twist-fixed part of the icosians;
* ``ICOSIAN`` -- the icosian ring I, a rank-8 Z-module in R^4.

A4 and icosian geometry lives in Q^8 through the golden embedding
``a + b tau -> (a, b)`` of each coordinate.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .golden import (
    GoldenInt,
    GoldenRat,
    golden_gcd,
    golden_lcm,
    golden_norm,
    golden_sqrt,
    int_sqrt,
    unit_normalize,
)
from .quaternions import (
    HURWITZ_BASIS,
    ICOSIAN_BASIS,
    HurwitzQuat,
    Icosian,
    _imul_raw,
    _icosian_lambdas,
    enumerate_norm_J,
    format_quaternion,
    glcd,
    hurwitz_units,
    icosian_units,
    is_primitive,
    primitive_part,
    reduced_decompose,
    twist,
)
from .zmodules import (
    FreeModule,
    apply_map,
    golden_embed_matrix,
    golden_embed_module,
    golden_embed_vector,
    index_in,
    module_intersect,
)

Quaternion = Union[HurwitzQuat, Icosian]


class NotAdmissible(ValueError):
    """The quaternion parameters do not describe a coincidence rotation."""


class Family(enum.Enum):
    D4STAR = "d4"
    Z4 = "z4"
    A4 = "a4"
    ICOSIAN = "icosian"

    @property
    def point_group_order(self) -> int:
        return {"d4": 576, "z4": 192, "a4": 120, "icosian": 7200}[self.value]

    @property
    def ring(self) -> str:
        return "J" if self in (Family.D4STAR, Family.Z4) else "I"

    @property
    def single_parameter(self) -> bool:
        return self is Family.A4

    @property
    def gamma(self) -> FreeModule:
        return _gamma(self)

    @classmethod
    def parse(cls, name: str) -> "Family":
        aliases = {
            "d4": cls.D4STAR, "d4star": cls.D4STAR, "d4*": cls.D4STAR, "j": cls.D4STAR,
            "z4": cls.Z4,
            "a4": cls.A4,
            "icosian": cls.ICOSIAN, "i": cls.ICOSIAN, "icosianring": cls.ICOSIAN,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown family {name!r}") from None


def _hurwitz_vec(q: HurwitzQuat) -> list[Fraction]:
    return list(q.coords)


def _icosian_vec(x: Icosian) -> list[Fraction]:
    return golden_embed_vector(x.coords)


A4_BASIS = (
    Icosian.from_coords(1, 0, 0, 0),
    Icosian.from_coords(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    Icosian.from_coords(0, -1, 0, 0),
    Icosian.from_coords(0, Fraction(1, 2), GoldenRat(GoldenInt(-1, 1), 2), GoldenRat(GoldenInt(0, -1), 2)),
)


def icosian_z_basis() -> list[Icosian]:
    return list(ICOSIAN_BASIS) + [e.scale(GoldenInt(0, 1)) for e in ICOSIAN_BASIS]


@lru_cache(maxsize=None)
def _gamma(family: Family) -> FreeModule:
    if family is Family.D4STAR:
        return FreeModule([_hurwitz_vec(b) for b in HURWITZ_BASIS], 4)
    if family is Family.Z4:
        return FreeModule([[int(i == j) for j in range(4)] for i in range(4)], 4)
    if family is Family.A4:
        return golden_embed_module([x.coords for x in A4_BASIS], tau_closure=False)
    return golden_embed_module([x.coords for x in ICOSIAN_BASIS], tau_closure=True)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotParam:
    """Quaternion parameters of a rotation: a pair ``(q, p)`` or, for A4, ``q`` alone.

    ``primitivized`` records that a scalar content was divided out on
    construction.
    """

    family: Family
    q: Quaternion
    p: Optional[Quaternion] = None
    primitivized: bool = False

    @classmethod
    def make(cls, family: Family, q: Quaternion, p: Optional[Quaternion] = None) -> "RotParam":
        ring_type = HurwitzQuat if family.ring == "J" else Icosian
        if family.single_parameter:
            if p is not None:
                raise ValueError("A4 rotations take a single quaternion")
            comps = [q]
        else:
            if p is None:
                raise ValueError(f"{family.name} rotations take a quaternion pair")
            comps = [q, p]
        flagged = False
        prim = []
        for x in comps:
            if not isinstance(x, ring_type):
                raise TypeError(f"{family.name} expects {ring_type.__name__} parameters")
            if not x:
                raise ValueError("zero quaternion is not a rotation parameter")
            y, c = primitive_part(x)
            flagged |= c != 1
            prim.append(y)
        return cls(family, prim[0], prim[1] if len(prim) > 1 else None, flagged)

    def __str__(self) -> str:
        text = f"q={format_quaternion(self.q)}"
        if self.p is not None:
            text += f" p={format_quaternion(self.p)}"
        return f"{self.family.value}({text})"

    def reduced_pair(self) -> tuple[HurwitzQuat, HurwitzQuat]:
        """``(q_r, p_r)`` from the reduced decompositions (Hurwitz families only)."""
        if self.family.ring != "J":
            raise ValueError("reduced pairs exist only for the Hurwitz families")
        return reduced_decompose(self.q)[0], reduced_decompose(self.p)[0]


ParamLike = Union[RotParam, Quaternion, tuple]


def as_param(family: Family, param: ParamLike) -> RotParam:
    if isinstance(param, RotParam):
        if param.family is not family:
            if {param.family, family} == {Family.D4STAR, Family.Z4}:
                return RotParam(family, param.q, param.p, param.primitivized)
            raise ValueError(f"parameter belongs to {param.family.name}, not {family.name}")
        return param
    if isinstance(param, tuple):
        return RotParam.make(family, *param)
    return RotParam.make(family, param)


# ---------------------------------------------------------------------------
# admissibility, matrices, alpha factors, indices
# ---------------------------------------------------------------------------


def _sqrt_norm_product(param: RotParam):
    """|qp| (|q q~| for A4) in the base ring, or None when it is not there."""
    fam = param.family
    if fam.ring == "J":
        return int_sqrt(param.q.norm() * param.p.norm())
    if fam is Family.A4:
        n = param.q.norm().field_norm()
        return int_sqrt(n) if n >= 0 else None
    return golden_sqrt(param.q.norm() * param.p.norm())


def is_admissible(family: Family, param: ParamLike) -> bool:
    param = as_param(family, param)
    comps = [param.q] if param.p is None else [param.q, param.p]
    if not all(is_primitive(x) for x in comps):
        raise ValueError("admissibility is defined for primitive parameters")
    return _sqrt_norm_product(param) is not None


def _require(param: RotParam):
    m = _sqrt_norm_product(param)
    if m is None:
        raise NotAdmissible(f"{param} is not admissible")
    return m


def rotation_matrix(family: Family, param: ParamLike) -> list[list]:
    """4x4 matrix of x -> q x p^bar / |qp| (A4: q x q~ / |q q~|), columns = images of 1, i, j, k.

    Entries are Fractions for the Hurwitz families and GoldenRat otherwise.
    """
    param = as_param(family, param)
    m = _require(param)
    if family.ring == "J":
        pb = param.p.conj()
        cols = []
        for e in ((2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)):
            img = param.q * HurwitzQuat(*e) * pb
            cols.append([Fraction(x, 2 * m) for x in img.d])
        return [[cols[j][i] for j in range(4)] for i in range(4)]
    right = twist(param.q) if family is Family.A4 else param.p.conj()
    inv = GoldenRat.coerce(m).inverse() if isinstance(m, GoldenInt) else GoldenRat(1, m)
    cols = []
    for i in range(4):
        e = [0] * 8
        e[2 * i] = 2
        img = Icosian._raw(_imul_raw(_imul_raw(param.q.raw, tuple(e)), right.raw))
        cols.append([c * inv for c in img.coords])
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def ambient_matrix(family: Family, param: ParamLike) -> list[list[Fraction]]:
    """The rotation acting on the module's ambient space (Q^4, or Q^8 via the golden embedding)."""
    R = rotation_matrix(family, param)
    return R if family.ring == "J" else golden_embed_matrix(R)


@dataclass(frozen=True)
class AlphaExt:
    alpha_q: Union[int, GoldenInt]
    alpha_p: Union[int, GoldenInt]
    q_alpha: Quaternion
    p_alpha: Quaternion


def reduced_extension(family: Family, param: ParamLike) -> AlphaExt:
    param = as_param(family, param)
    _require(param)
    if family.ring == "J":
        qr, pr = param.reduced_pair()
        nq, np_ = qr.norm(), pr.norm()
        g = math.gcd(nq, np_)
        aq, ap = int_sqrt(np_ // g), int_sqrt(nq // g)
        if aq is None or ap is None:
            raise ArithmeticError("alpha factor is not an integer; admissibility check is broken")
        return AlphaExt(aq, ap, qr * aq, pr * ap)
    if family is Family.A4:
        nq = param.q.norm()
        np_ = nq.conj()
    else:
        nq, np_ = param.q.norm(), param.p.norm()
    g = golden_gcd(nq, np_)
    aq = golden_sqrt(unit_normalize(np_.exact_div(g)))
    ap = golden_sqrt(unit_normalize(nq.exact_div(g)))
    if aq is None or ap is None:
        raise ArithmeticError("alpha factor is not in Z[tau]; admissibility check is broken")
    q_alpha = param.q.scale(aq)
    if family is Family.A4:
        return AlphaExt(aq, ap, q_alpha, twist(q_alpha))
    return AlphaExt(aq, ap, q_alpha, param.p.scale(ap))


def csl_brute(family: Family, param: ParamLike) -> FreeModule:
    """Gamma ∩ R Gamma by exact lattice intersection."""
    param = as_param(family, param)
    G = family.gamma
    return module_intersect(G, apply_map(G, ambient_matrix(family, param)))


def sigma(family: Family, param: ParamLike) -> int:
    """Coincidence index of the rotation."""
    param = as_param(family, param)
    _require(param)
    if family is Family.D4STAR:
        qr, pr = param.reduced_pair()
        a, b = qr.norm(), pr.norm()
        return a * b // math.gcd(a, b)
    if family is Family.Z4:
        s = index_in(csl_brute(family, param), family.gamma)
        s_d4 = sigma(Family.D4STAR, param)
        if s not in (s_d4, 2 * s_d4):
            raise ArithmeticError(f"Z4 index {s} is neither {s_d4} nor {2 * s_d4}")
        return s
    if family is Family.A4:
        d = param.q.norm()
        L = golden_lcm(d, d.conj())
        if L.b != 0:
            raise ArithmeticError(f"lcm {L} of |q|^2 and its conjugate is not rational")
        return L.a
    return golden_norm(golden_lcm(param.q.norm(), param.p.norm()))


def csl_closed(family: Family, param: ParamLike) -> FreeModule:
    """Coincidence site lattice/module from the closed-form generators."""
    param = as_param(family, param)
    if family is Family.Z4:
        # no closed form for Z4: intersect the D4* closed form with both copies of Z4
        G = family.gamma
        RG = apply_map(G, ambient_matrix(family, param))
        return module_intersect(module_intersect(csl_closed(Family.D4STAR, param), G), RG)
    ext = reduced_extension(family, param)
    if family is Family.D4STAR:
        pb = ext.p_alpha.conj()
        gens = [_hurwitz_vec(ext.q_alpha * b) for b in HURWITZ_BASIS]
        gens += [_hurwitz_vec(b * pb) for b in HURWITZ_BASIS]
        return FreeModule(gens, 4)
    zb = icosian_z_basis()
    right = ext.p_alpha if family is Family.A4 else ext.p_alpha.conj()
    gens = [_icosian_vec(ext.q_alpha * b) for b in zb] + [_icosian_vec(b * right) for b in zb]
    M = FreeModule(gens, 8)
    if family is Family.A4:
        return module_intersect(M, family.gamma)
    return M


def a4_csl_twisted_sum(param: ParamLike) -> FreeModule:
    """{q_a x + x~ q~_a : x in I}, the other closed form of an A4 CSL."""
    param = as_param(Family.A4, param)
    ext = reduced_extension(Family.A4, param)
    gens = []
    for b in icosian_z_basis():
        y = ext.q_alpha * b
        gens.append(_icosian_vec(y + twist(y)))
    return FreeModule(gens, 8)


@dataclass(frozen=True)
class CoinData:
    sigma: int
    csl: FreeModule
    alpha: AlphaExt


def coincidence_data(family: Family, param: ParamLike) -> CoinData:
    param = as_param(family, param)
    return CoinData(sigma(family, param), csl_closed(family, param), reduced_extension(family, param))


# ---------------------------------------------------------------------------
# glcd criterion for CSL equality (D4* only)
# ---------------------------------------------------------------------------


def glcd_invariants(param: ParamLike) -> tuple:
    """Invariants whose equality decides equality of D4* CSLs for reduced pairs."""
    param = as_param(Family.D4STAR, param)
    q, p = param.q, param.p
    if not (is_primitive(q) and is_primitive(p)):
        raise ValueError("criterion needs primitive quaternions")
    if q.norm() % 2 == 0 or p.norm() % 2 == 0:
        raise ValueError("criterion needs reduced quaternions")
    m = _require(param)
    nq, np_ = q.norm(), p.norm()
    return (m, nq * np_ // math.gcd(nq, np_), glcd(q, m).key(), glcd(p, m).key())


def theorem1_equal(pair1: ParamLike, pair2: ParamLike) -> bool:
    for x in (pair1, pair2):
        if isinstance(x, RotParam) and x.family not in (Family.D4STAR,):
            raise ValueError("the glcd criterion applies to the D4* family only")
    return glcd_invariants(pair1) == glcd_invariants(pair2)


def symmetry_related(family: Family, param1: ParamLike, param2: ParamLike) -> bool:
    """R1 Gamma == R2 Gamma, i.e. R2 = R1 Q for a point-group element Q."""
    G = family.gamma
    R1 = apply_map(G, ambient_matrix(family, as_param(family, param1)))
    R2 = apply_map(G, ambient_matrix(family, as_param(family, param2)))
    return R1 == R2


def rotated_gamma(family: Family, param: ParamLike) -> FreeModule:
    return apply_map(family.gamma, ambient_matrix(family, as_param(family, param)))


# ---------------------------------------------------------------------------
# point groups
# ---------------------------------------------------------------------------

_pg_lock = threading.Lock()
_pg_cache: dict = {}


def _matrix_key(R) -> tuple:
    return tuple(tuple(row) for row in R)


def _preserves(family: Family, M) -> bool:
    G = family.gamma
    for v in G.basis:
        w = [sum((M[i][j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for i in range(len(v))]
        if w not in G:
            return False
    return True  # orthogonal maps preserve covolume, so containment is equality


def _point_group_params(family: Family) -> list[RotParam]:
    if family.ring == "J":
        units = hurwitz_units()
        two = enumerate_norm_J(2)
        pairs = [(u, v) for u in units for v in units] + [(s, t) for s in two for t in two]
        return [RotParam(family, q, p) for q, p in pairs]
    units = icosian_units()
    if family is Family.A4:
        tau = GoldenInt(0, 1)
        return [RotParam(family, u) for u in units] + [RotParam(family, u.scale(tau)) for u in units]
    return [RotParam(family, u, v) for u in units for v in units]


def _compute_point_group(family: Family) -> list[tuple[RotParam, tuple]]:
    seen = {}
    if family is Family.ICOSIAN:
        basis_raw = [tuple(2 if k == 2 * i else 0 for k in range(8)) for i in range(4)]
        for prm in _point_group_params(family):
            vb = prm.p.conj().raw
            key = tuple(_imul_raw(_imul_raw(prm.q.raw, e), vb) for e in basis_raw)
            if key in seen:
                continue
            # u I v^bar is inside I for units; the lambda test is the exact check
            if all(_icosian_lambdas(_imul_raw(_imul_raw(prm.q.raw, b.raw), vb)) is not None
                   for b in icosian_z_basis()):
                seen[key] = prm
        return [(prm, key) for key, prm in seen.items()]
    for prm in _point_group_params(family):
        if family is Family.Z4 and not is_admissible(family, prm):
            continue
        R = rotation_matrix(family, prm)
        key = _matrix_key(R)
        if key in seen:
            continue
        if _preserves(family, ambient_matrix(family, prm)):
            seen[key] = prm
    return [(prm, key) for key, prm in seen.items()]


def point_group(family: Family) -> list[tuple[RotParam, tuple]]:
    """Point-group rotations as ``(parameters, matrix)`` pairs, computed once per family."""
    with _pg_lock:
        if family not in _pg_cache:
            _pg_cache[family] = _compute_point_group(family)
        return _pg_cache[family]


def point_group_rotations(family: Family) -> list:
    """Point-group rotations as 4x4 matrices (Fractions or GoldenRat entries)."""
    out = []
    for prm, key in point_group(family):
        if family is Family.ICOSIAN:
            cols = [[GoldenRat(GoldenInt(c[2 * i], c[2 * i + 1]), 2) for i in range(4)] for c in key]
            out.append([[cols[j][i] for j in range(4)] for i in range(4)])
        else:
            out.append([list(row) for row in key])
    return out


@lru_cache(maxsize=None)
def z4_coset_representatives() -> tuple[RotParam, ...]:
    """Q_1 = identity, Q_2, Q_3 with P(D4*) = Q_1 P(Z4) ∪ Q_2 P(Z4) ∪ Q_3 P(Z4)."""
    z4 = {key for _, key in point_group(Family.Z4)}
    d4 = point_group(Family.D4STAR)
    reps: list[tuple[RotParam, list]] = []
    covered: set = set()
    ident = next(x for x in d4 if x[1] == _matrix_key([[Fraction(int(i == j)) for j in range(4)] for i in range(4)]))
    ordered = [ident] + sorted(
        (x for x in d4 if x is not ident),
        key=lambda x: (x[0].q.norm(), x[0].q.key(), x[0].p.key()),
    )
    z4_mats = [[list(r) for r in key] for key in z4]
    for prm, key in ordered:
        if key in covered:
            continue
        Q = [list(r) for r in key]
        coset = {_matrix_key(_matmul(Q, P)) for P in z4_mats}
        covered |= coset
        reps.append((prm, Q))
    assert len(reps) == 3
    return tuple(RotParam(Family.Z4, prm.q, prm.p) for prm, _ in reps)


def _matmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def compose(param: RotParam, other: RotParam) -> RotParam:
    """Parameters of R(param) ∘ R(other)."""
    if param.family.single_parameter:
        return RotParam(param.family, param.q * other.q)
    return RotParam(param.family, param.q * other.q, param.p * other.p)


def a4_from_twist_fixed() -> tuple[FreeModule, FreeModule]:
    """(I ∩ {x = x~}, span{x + x~ : x in I}) as modules in Q^8."""
    zb = icosian_z_basis()
    I = Family.ICOSIAN.gamma
    # twist is Q-linear on Q^8; the fixed module is the kernel of (twist - 1) on I
    from .zmodules import integer_left_kernel

    diffs = []
    for b in zb:
        v = _icosian_vec(twist(b) - b)
        diffs.append([int(x * 2) for x in v])
    ker = integer_left_kernel(diffs, 8)
    fixed_gens = []
    for coefs in ker:
        acc = Icosian._raw((0,) * 8)
        for c, b in zip(coefs, zb):
            if c:
                acc = acc + b.scale(GoldenInt(c))
        fixed_gens.append(_icosian_vec(acc))
    fixed = module_intersect(FreeModule(fixed_gens, 8), I)
    sums = FreeModule([_icosian_vec(b + twist(b)) for b in zb], 8)
    return fixed, sums
