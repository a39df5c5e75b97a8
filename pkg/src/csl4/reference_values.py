"""Reference Dirichlet coefficients used as regression targets.

Each table maps an index n to its expected coefficient; entries not listed
are not pinned.  ``ICOSIAN_ROT[19]`` is kept at its tabulated 400 even
though the Euler product and the enumeration both give 800.
"""
from __future__ import annotations

from .coincidence import Family

D4_ROT = {3: 16, 5: 36, 7: 64, 9: 168, 11: 144, 13: 196, 15: 576, 17: 324}
D4_CSL = {**D4_ROT, 9: 152}

Z4_ROT = {2: 2, 3: 16, 5: 36, 6: 32, 7: 64, 9: 168, 10: 72, 11: 144, 13: 196, 14: 128, 15: 576, 17: 324}
Z4_CSL = {**Z4_ROT, 2: 1, 6: 16, 10: 36, 14: 64, 9: 152}

A4_ROT = dict(enumerate([1, 5, 10, 20, 30, 50, 50, 80, 90, 150, 144], start=1))
A4_CSL = {**A4_ROT, 5: 6, 10: 30}

ICOSIAN_ROT = {4: 25, 5: 36, 9: 100, 11: 288, 16: 440, 19: 400, 20: 900, 25: 960}
ICOSIAN_CSL = {**ICOSIAN_ROT, 16: 410, 25: 912}

REFERENCE = {
    (Family.D4STAR, "rot"): D4_ROT,
    (Family.D4STAR, "csl"): D4_CSL,
    (Family.Z4, "rot"): Z4_ROT,
    (Family.Z4, "csl"): Z4_CSL,
    (Family.A4, "rot"): A4_ROT,
    (Family.A4, "csl"): A4_CSL,
    (Family.ICOSIAN, "rot"): ICOSIAN_ROT,
    (Family.ICOSIAN, "csl"): ICOSIAN_CSL,
}

POINT_GROUP_ORDERS = {Family.D4STAR: 576, Family.Z4: 192, Family.A4: 120, Family.ICOSIAN: 7200}

# indices whose enumeration is pinned against the counting layer
ORACLE_INDICES = {
    Family.D4STAR: (1, 3, 5, 7, 9, 11, 13, 15, 17),
    Family.Z4: (1, 2, 3, 5, 6, 7, 9, 10),
    Family.A4: tuple(range(1, 12)),
    Family.ICOSIAN: (1, 4, 5, 9),
}
