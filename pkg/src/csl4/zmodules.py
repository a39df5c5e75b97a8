"""Free Z-modules in Q^n with a canonical Hermite normal form.

A module is stored as ``hnf / denom`` where ``hnf`` is an integer row-style
Hermite normal form (basis vectors are rows; leading entries positive,
entries above each pivot reduced into ``[0, pivot)``) and ``denom`` is the
least positive integer clearing all denominators.  Two modules are equal iff
their ``(ambient_dim, denom, hnf)`` triples are equal.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .golden import GoldenInt, GoldenRat

Number = Union[int, Fraction]
Matrix = Sequence[Sequence[Number]]

__all__ = [
    "FreeModule",
    "hnf_rows",
    "integer_left_kernel",
    "module_sum",
    "module_intersect",
    "index_in",
    "apply_map",
    "golden_embed_vector",
    "golden_embed_matrix",
    "golden_embed_module",
    "NotContained",
]


class NotContained(ValueError):
    """Raised when a module is not a finite-index submodule of another."""


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _reduce_column(rows: list[list[int]], r: int, col: int, aux: list[list[int]] | None) -> bool:
    """Make rows[r][col] the gcd of the column below row r; zero out the rest."""
    m = len(rows)
    while True:
        piv = None
        for i in range(r, m):
            v = rows[i][col]
            if v and (piv is None or abs(v) < abs(rows[piv][col])):
                piv = i
        if piv is None:
            return False
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            if aux is not None:
                aux[r], aux[piv] = aux[piv], aux[r]
        p = rows[r][col]
        done = True
        for i in range(r + 1, m):
            v = rows[i][col]
            if v:
                f = v // p
                ri, rr = rows[i], rows[r]
                rows[i] = [x - f * y for x, y in zip(ri, rr)]
                if aux is not None:
                    aux[i] = [x - f * y for x, y in zip(aux[i], aux[r])]
                if rows[i][col]:
                    done = False
        if done:
            if p < 0:
                rows[r] = [-x for x in rows[r]]
                if aux is not None:
                    aux[r] = [-x for x in aux[r]]
            return True


def hnf_rows(rows: Iterable[Sequence[int]], n: int) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by integer ``rows`` in Z^n."""
    A = [list(r) for r in rows if any(r)]
    r = 0
    pivots = []
    for col in range(n):
        if r >= len(A):
            break
        if _reduce_column(A, r, col, None):
            p = A[r][col]
            for i in range(r):
                f = A[i][col] // p
                if f:
                    A[i] = [x - f * y for x, y in zip(A[i], A[r])]
            pivots.append(col)
            r += 1
    return [row for row in A[:r]]


def integer_left_kernel(rows: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Basis of {x in Z^m : sum_i x_i rows[i] == 0}."""
    A = [list(r) for r in rows]
    m = len(A)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for col in range(n):
        if r >= m:
            break
        if _reduce_column(A, r, col, U):
            r += 1
    return [U[i] for i in range(r, m)]


class FreeModule:
    """Finitely generated free Z-module in Q^n, canonicalized on construction."""

    __slots__ = ("ambient_dim", "denom", "hnf", "_pivots")

    def __init__(self, generators: Iterable[Sequence[Number]], ambient_dim: int) -> None:
        gens = [[Fraction(x) for x in g] for g in generators]
        for g in gens:
            if len(g) != ambient_dim:
                raise ValueError(f"generator of length {len(g)} in ambient dimension {ambient_dim}")
        D = 1
        for g in gens:
            for x in g:
                D = _lcm(D, x.denominator)
        ints = [[int(x * D) for x in g] for g in gens]
        self._set(hnf_rows(ints, ambient_dim), D, ambient_dim)

    @classmethod
    def _from_integer(cls, rows: Iterable[Sequence[int]], denom: int, n: int) -> "FreeModule":
        obj = object.__new__(cls)
        obj._set(hnf_rows(rows, n), denom, n)
        return obj

    def _set(self, H: list[list[int]], D: int, n: int) -> None:
        g = 0
        for row in H:
            for x in row:
                g = math.gcd(g, x)
        g = math.gcd(g, D) if H else D
        if g > 1:
            H = [[x // g for x in row] for row in H]
            D //= g
        self.ambient_dim = n
        self.denom = D
        self.hnf = tuple(tuple(row) for row in H)
        self._pivots = tuple(next(j for j, x in enumerate(row) if x) for row in self.hnf)

    @property
    def rank(self) -> int:
        return len(self.hnf)

    @property
    def basis(self) -> list[list[Fraction]]:
        return [[Fraction(x, self.denom) for x in row] for row in self.hnf]

    def canonical_key(self) -> tuple:
        return (self.ambient_dim, self.denom, self.hnf)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeModule) and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return f"FreeModule(rank={self.rank}, ambient_dim={self.ambient_dim}, denom={self.denom})"

    def covolume(self) -> Fraction:
        """Product of pivots / denom**rank; the lattice determinant when rank == ambient_dim."""
        prod = 1
        for row, j in zip(self.hnf, self._pivots):
            prod *= row[j]
        return Fraction(prod, self.denom**self.rank)

    def coordinates(self, v: Sequence[Number]) -> list[int] | None:
        """Integer coordinates of ``v`` in the canonical basis, or None if v is not in the module."""
        w = [Fraction(x) * self.denom for x in v]
        coeffs = []
        for row, j in zip(self.hnf, self._pivots):
            c = w[j] / row[j]
            if c.denominator != 1:
                return None
            c = int(c)
            coeffs.append(c)
            if c:
                w = [x - c * y for x, y in zip(w, row)]
        if any(w):
            return None
        return coeffs

    def __contains__(self, v: Sequence[Number]) -> bool:
        return self.coordinates(v) is not None

    def contains_module(self, other: "FreeModule") -> bool:
        return all(v in self for v in other.basis)

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "basis": [[str(x) for x in row] for row in self.basis],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Union[dict, str]) -> "FreeModule":
        if isinstance(obj, str):
            obj = json.loads(obj)
        mod = cls([[Fraction(x) for x in row] for row in obj["basis"]], int(obj["ambient_dim"]))
        if "rank" in obj and int(obj["rank"]) != mod.rank:
            raise ValueError("serialized rank disagrees with the basis")
        return mod


def _common_integer(*mods: FreeModule) -> tuple[int, list[list[list[int]]]]:
    D = 1
    for M in mods:
        D = _lcm(D, M.denom)
    return D, [[[x * (D // M.denom) for x in row] for row in M.hnf] for M in mods]


def _check_dims(A: FreeModule, B: FreeModule) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")


def module_sum(A: FreeModule, B: FreeModule) -> FreeModule:
    _check_dims(A, B)
    D, (a, b) = _common_integer(A, B)
    return FreeModule._from_integer(a + b, D, A.ambient_dim)


def module_intersect(A: FreeModule, B: FreeModule) -> FreeModule:
    """A ∩ B through the integer kernel of the stacked generators [A; -B]."""
    _check_dims(A, B)
    D, (a, b) = _common_integer(A, B)
    n = A.ambient_dim
    stacked = a + [[-x for x in row] for row in b]
    ker = integer_left_kernel(stacked, n)
    ka = len(a)
    gens = []
    for x in ker:
        v = [0] * n
        for coef, row in zip(x[:ka], a):
            if coef:
                v = [s + coef * t for s, t in zip(v, row)]
        gens.append(v)
    return FreeModule._from_integer(gens, D, n)


def index_in(sub: FreeModule, sup: FreeModule) -> int:
    """[sup : sub] for a full-rank submodule ``sub`` of ``sup``."""
    _check_dims(sub, sup)
    if sub.rank != sup.rank:
        raise NotContained(f"rank {sub.rank} in rank {sup.rank}: infinite index")
    if not sup.contains_module(sub):
        raise NotContained("module is not contained in the reference module")
    # Same Q-span, so both echelon forms share pivot columns; projecting onto
    # them is injective and the index is the ratio of pivot products.
    ratio = sub.covolume() / sup.covolume()
    assert ratio.denominator == 1
    return int(ratio)


def apply_map(M: FreeModule, R: Matrix) -> FreeModule:
    """Image ``R M`` for an invertible matrix acting on column vectors."""
    n = M.ambient_dim
    if len(R) != n or any(len(row) != n for row in R):
        raise ValueError("map dimension does not match the module")
    if _rank(R) != n:
        raise ValueError("singular map")
    Rf = [[Fraction(x) for x in row] for row in R]
    imgs = []
    for v in M.basis:
        imgs.append([sum((Rf[i][j] * v[j] for j in range(n) if v[j]), Fraction(0)) for i in range(n)])
    return FreeModule(imgs, n)


def _rank(R: Matrix) -> int:
    A = [[Fraction(x) for x in row] for row in R]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c] / A[rank][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


# golden embedding Q(sqrt5)^k -> Q^{2k} -----------------------------------


def golden_embed_vector(v: Sequence[Union[int, Fraction, GoldenInt, GoldenRat]]) -> list[Fraction]:
    """(a0 + b0 tau, ...) -> (a0, b0, a1, b1, ...)."""
    out = []
    for x in v:
        a, b = GoldenRat.coerce(x).parts
        out += [a, b]
    return out


def golden_embed_matrix(R: Sequence[Sequence[Union[int, Fraction, GoldenInt, GoldenRat]]]) -> list[list[Fraction]]:
    """Q(sqrt5)-matrix as a rational matrix; tau acts by [[0, 1], [1, 1]] on each pair."""
    k = len(R)
    out = [[Fraction(0)] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        for j in range(k):
            a, b = GoldenRat.coerce(R[i][j]).parts
            out[2 * i][2 * j] = a
            out[2 * i][2 * j + 1] = b
            out[2 * i + 1][2 * j] = b
            out[2 * i + 1][2 * j + 1] = a + b
    return out


def golden_embed_module(generators: Iterable[Sequence], tau_closure: bool = True) -> FreeModule:
    """Z-span of embedded generators; with ``tau_closure`` also of tau * g (a Z[tau]-module)."""
    gens = [list(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator to fix the dimension")
    k = len(gens[0])
    vecs = [golden_embed_vector(g) for g in gens]
    if tau_closure:
        t = GoldenRat(GoldenInt(0, 1))
        vecs += [golden_embed_vector([GoldenRat.coerce(x) * t for x in g]) for g in gens]
    return FreeModule(vecs, 2 * k)
