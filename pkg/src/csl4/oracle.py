"""Exhaustive enumeration of coincidence rotation classes and CSLs per index.

This is the ground truth the counting layer is audited against: classes are
told apart by the canonical form of ``R Gamma`` and CSLs by the canonical
form of the closed-form module, which is itself checked against the
brute-force intersection for every witness.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .coincidence import (
    Family,
    RotParam,
    compose,
    csl_brute,
    csl_closed,
    point_group,
    rotated_gamma,
    sigma,
    glcd_invariants,
    z4_coset_representatives,
)
from .counting import f_csl, f_rot
from .golden import GoldenInt, golden_lcm, golden_norm, golden_sqrt, unit_normalize
from .quaternions import (
    enumerate_norm_I,
    enumerate_norm_J,
    is_primitive,
    right_unit_orbits,
)
from .zmodules import index_in

DEFAULT_MAX_N = {Family.D4STAR: 25, Family.Z4: 20, Family.A4: 12, Family.ICOSIAN: 25}
BUDGET_ENV = "CSL4_MAX_N"


class BudgetExceeded(RuntimeError):
    """The requested index is beyond the enumeration budget."""


def max_n(family: Family) -> int:
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_N[family]


def _check_budget(family: Family, n: int, budget: int | None) -> None:
    limit = max_n(family) if budget is None else budget
    if n > limit:
        raise BudgetExceeded(
            f"{family.name} enumeration at n={n} exceeds the budget {limit} "
            f"(raise it with --max-n or ${BUDGET_ENV})"
        )


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def primitive_reps_J(m: int) -> tuple:
    return tuple(right_unit_orbits([q for q in enumerate_norm_J(m) if is_primitive(q)]))


@lru_cache(maxsize=None)
def primitive_reps_I(d: GoldenInt) -> tuple:
    return tuple(right_unit_orbits([q for q in enumerate_norm_I(d) if is_primitive(q)]))


def enum_pairs_d4(n: int) -> list[RotParam]:
    """One reduced pair (q, p) per symmetry class of D4* coincidence rotations with index n."""
    if n < 1 or n % 2 == 0:
        return []
    out = []
    for d1 in _divisors(n):
        for d2 in _divisors(n):
            if d1 * d2 // math.gcd(d1, d2) != n or math.isqrt(d1 * d2) ** 2 != d1 * d2:
                continue
            for q in primitive_reps_J(d1):
                for p in primitive_reps_J(d2):
                    out.append(RotParam(Family.D4STAR, q, p))
    return out


def enum_pairs_z4(n: int) -> list[RotParam]:
    """Z4 classes of index n: each D4* class splits into three Z4 classes."""
    if n < 1 or n % 4 == 0:
        return []
    base = n if n % 2 else n // 2
    out = []
    for prm in enum_pairs_d4(base):
        for Q in z4_coset_representatives():
            cand = compose(RotParam(Family.Z4, prm.q, prm.p), Q)
            if sigma(Family.Z4, cand) == n:
                out.append(cand)
    return out


def golden_divisors(n: int) -> list[GoldenInt]:
    """Unit-normalized divisors of the rational integer n in Z[tau]."""
    # a normalized totally positive x has trace <= sqrt(5 * Nr(x)) + 1 and Nr(x) <= n^2
    tmax = int(math.isqrt(5 * n * n)) + 2
    found = set()
    N = GoldenInt(n)
    for b in range(-tmax, tmax + 1):
        for a in range(-tmax, tmax + 1):
            x = GoldenInt(a, b)
            if x.trace() > tmax or x.trace() <= 0:
                continue
            if not x.is_totally_positive():
                continue
            if x.divides(N):
                found.add(unit_normalize(x))
    return sorted(found, key=lambda g: (g.trace(), g.a, g.b))


def enum_single_a4(n: int) -> list[RotParam]:
    """One primitive admissible q per symmetry class of A4 coincidence rotations with index n."""
    if n < 1:
        return []
    out = []
    N = GoldenInt(n)
    for d in golden_divisors(n):
        if math.isqrt(d.field_norm()) ** 2 != d.field_norm():
            continue
        if unit_normalize(golden_lcm(d, d.conj())) != N:
            continue
        for q in primitive_reps_I(d):
            out.append(RotParam(Family.A4, q))
    return out


def enum_pairs_icosian(n: int) -> list[RotParam]:
    """One primitive admissible pair per symmetry class of icosian coincidence rotations."""
    if n < 1:
        return []
    lcms = [g for g in golden_divisors(n) if golden_norm(g) == n]
    out = []
    for L in lcms:
        divs = [d for d in golden_divisors(n) if d.divides(L)]
        for d1 in divs:
            for d2 in divs:
                if golden_lcm(d1, d2) != L:
                    continue
                if golden_sqrt(unit_normalize(d1 * d2)) is None:
                    continue
                for q in primitive_reps_I(d1):
                    for p in primitive_reps_I(d2):
                        out.append(RotParam(Family.ICOSIAN, q, p))
    return out


def enumerate_classes(family: Family, n: int) -> list[RotParam]:
    if family is Family.D4STAR:
        return enum_pairs_d4(n)
    if family is Family.Z4:
        return enum_pairs_z4(n)
    if family is Family.A4:
        return enum_single_a4(n)
    return enum_pairs_icosian(n)


@dataclass
class EnumReport:
    family: Family
    n: int
    rotation_class_count: int
    distinct_csl_count: int
    witnesses: list[RotParam] = field(repr=False)
    elapsed: float
    witness_failures: list[str] = field(default_factory=list)
    expected_rot: int = 0
    expected_csl: int = 0

    @property
    def ok(self) -> bool:
        return (
            not self.witness_failures
            and self.rotation_class_count == self.expected_rot
            and self.distinct_csl_count == self.expected_csl
        )


def count_classes(family: Family, n: int, budget: int | None = None) -> EnumReport:
    """Enumerate every class of index n, dedupe by lattice images and by CSLs."""
    _check_budget(family, n, budget)
    t0 = time.perf_counter()
    params = enumerate_classes(family, n)
    G = family.gamma
    images = set()
    csls: dict = {}
    failures = []
    for prm in params:
        images.add(rotated_gamma(family, prm))
        closed = csl_closed(family, prm)
        brute = csl_brute(family, prm)
        if closed != brute:
            failures.append(f"closed form != brute force for {prm}")
        s = sigma(family, prm)
        idx = index_in(brute, G)
        if s != idx or s != n:
            failures.append(f"sigma {s}, index {idx}, expected {n} for {prm}")
        csls.setdefault(closed, prm)
    if len(images) != len(params):
        failures.append(f"{len(params)} enumerated classes but {len(images)} distinct lattice images")
    return EnumReport(
        family=family,
        n=n,
        rotation_class_count=len(images),
        distinct_csl_count=len(csls),
        witnesses=list(csls.values()),
        elapsed=time.perf_counter() - t0,
        witness_failures=failures,
        expected_rot=f_rot(family, n),
        expected_csl=f_csl(family, n),
    )


@dataclass
class GlcdCriterionReport:
    n: int
    pairs: int
    agree: bool
    shared_csl_not_symmetric: int


def glcd_criterion_report(n: int) -> GlcdCriterionReport:
    """Compare the glcd criterion with CSL equality over all class pairs of index n."""
    params = enum_pairs_d4(n)
    keys = [glcd_invariants(p) for p in params]
    csls = [csl_closed(Family.D4STAR, p) for p in params]
    by_key: dict = {}
    by_csl: dict = {}
    for i, (k, c) in enumerate(zip(keys, csls)):
        by_key.setdefault(k, set()).add(i)
        by_csl.setdefault(c, set()).add(i)
    agree = sorted(map(sorted, by_key.values())) == sorted(map(sorted, by_csl.values()))
    # enumerated params are pairwise non-symmetry-related, so any shared CSL counts
    shared = sum(len(s) * (len(s) - 1) // 2 for s in by_csl.values())
    return GlcdCriterionReport(n, len(params) * (len(params) - 1) // 2, agree, shared)


def verify_theorem1(n: int) -> bool:
    return glcd_criterion_report(n).agree


def verify_point_groups() -> dict[Family, tuple[int, bool]]:
    """Point-group sizes and whether every element has index 1."""
    out = {}
    for fam in Family:
        pg = point_group(fam)
        ok = len(pg) == fam.point_group_order
        if fam is not Family.ICOSIAN:
            G = fam.gamma
            ok = ok and all(index_in(csl_brute(fam, prm), G) == 1 for prm, _ in pg)
        out[fam] = (len(pg), ok)
    return out
