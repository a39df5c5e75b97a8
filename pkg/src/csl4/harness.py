"""Pass/fail table tying reference coefficients, closed forms, Euler products and enumeration together."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .coincidence import Family
from .counting import f_csl, f_rot, series, spectrum_member
from .oracle import count_classes, glcd_criterion_report, verify_point_groups
from .reference_values import ORACLE_INDICES, POINT_GROUP_ORDERS, REFERENCE


@dataclass(frozen=True)
class Check:
    family: str
    n: Optional[int]
    check: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": "" if self.n is None else str(self.n),
            "check": self.check,
            "expected": self.expected,
            "actual": self.actual,
            "pass": "pass" if self.passed else "FAIL",
        }


def reference_checks(families: Iterable[Family]) -> Iterator[Check]:
    """Reference coefficients against both the Euler expansion and f_rot / f_csl."""
    for fam in families:
        for kind, f in (("rot", f_rot), ("csl", f_csl)):
            table = REFERENCE[(fam, kind)]
            coeffs = series(fam, kind, max(table))
            for n, want in sorted(table.items()):
                yield Check(fam.value, n, f"reference {kind} (euler)", str(want), str(coeffs[n]))
                yield Check(fam.value, n, f"reference {kind} (f_{kind})", str(want), str(f(fam, n)))


def enumeration_checks(fam: Family, indices: Iterable[int], budget: Optional[int] = None) -> Iterator[Check]:
    for n in indices:
        rep = count_classes(fam, n, budget=budget)
        yield Check(fam.value, n, "enumerated rotation classes", str(rep.expected_rot), str(rep.rotation_class_count))
        yield Check(fam.value, n, "enumerated CSLs", str(rep.expected_csl), str(rep.distinct_csl_count))
        yield Check(fam.value, n, "witness closed form/brute force/sigma", "0 failures",
                    f"{len(rep.witness_failures)} failures")


def point_group_checks() -> Iterator[Check]:
    for fam, (size, ok) in verify_point_groups().items():
        yield Check(fam.value, 1, "point group order", str(POINT_GROUP_ORDERS[fam]), str(size))
        yield Check(fam.value, 1, "point group preserves lattice", "True", str(ok))


def glcd_checks(indices: Iterable[int] = (1, 3, 5, 7, 9)) -> Iterator[Check]:
    for n in indices:
        rep = glcd_criterion_report(n)
        yield Check(Family.D4STAR.value, n, "glcd criterion matches CSL equality", "True", str(rep.agree))
    rep = glcd_criterion_report(9)
    yield Check(Family.D4STAR.value, 9, "inequivalent classes sharing a CSL exist", "True",
                str(rep.shared_csl_not_symmetric > 0))


def spectrum_checks(families: Iterable[Family], limit: int = 100) -> Iterator[Check]:
    for fam in families:
        bad = [n for n in range(1, limit + 1) if (f_rot(fam, n) > 0) != spectrum_member(fam, n)]
        yield Check(fam.value, limit, "spectrum matches support of f_rot", "[]", str(bad))


def default_indices(fam: Family, max_n: Optional[int]) -> tuple[int, ...]:
    if max_n is None:
        return ORACLE_INDICES[fam]
    return tuple(range(1, max_n + 1))


def run_checks(families: Iterable[Family], max_n: Optional[int] = None, everything: bool = False) -> list[Check]:
    """Enumeration checks for ``families``; with ``everything`` also all other suites."""
    families = list(families)
    rows: list[Check] = []
    if everything:
        rows += reference_checks(families)
    for fam in families:
        rows += enumeration_checks(fam, default_indices(fam, max_n), budget=max_n)
    if everything:
        rows += point_group_checks()
        rows += glcd_checks()
        rows += spectrum_checks(families)
    return rows
