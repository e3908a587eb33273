"""Points and subspaces of PG(m-1, q).

Vectors are tuples of field-element indices.  A point is stored by its
normalized coordinate vector (first nonzero entry 1) and indexed by its
lexicographic rank among all normalized vectors.  A subspace is stored by
the reduced row-echelon form of any spanning set, which makes equality a
plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldTable, GF, NonPrime, prime_power

Vector = tuple[int, ...]


class AmbientMismatch(ValueError):
    pass


class KindDimensionMismatch(ValueError):
    pass


class NotASquare(ValueError):
    pass


# -- linear algebra over GF(q) ------------------------------------------------


def rref(rows: Iterable[Sequence[int]], F: FieldTable) -> tuple[Vector, ...]:
    """Reduced row-echelon form with zero rows dropped."""
    M = [list(r) for r in rows]
    if not M:
        return ()
    ncols = len(M[0])
    out_rows = 0
    for c in range(ncols):
        piv = next((i for i in range(out_rows, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[out_rows], M[piv] = M[piv], M[out_rows]
        inv = F.inv(M[out_rows][c])
        M[out_rows] = [F.mul(inv, x) for x in M[out_rows]]
        pr = M[out_rows]
        for i in range(len(M)):
            if i != out_rows and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], pr)]
        out_rows += 1
        if out_rows == len(M):
            break
    return tuple(tuple(r) for r in M[:out_rows])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, F: FieldTable) -> tuple[Vector, ...]:
    """Basis (in RREF) of {x : r . x = 0 for every row r}."""
    R = rref(rows, F)
    pivots = [next(j for j, x in enumerate(r) if x) for r in R]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, pc in zip(R, pivots):
            x[pc] = F.neg(r[f])
        basis.append(x)
    return rref(basis, F)


def dot_matrix(X: np.ndarray, Y: np.ndarray, F: FieldTable) -> np.ndarray:
    """All pairwise dot products: out[i, j] = sum_t X[i, t] * Y[j, t] in GF(q)."""
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    if F.is_prime:
        return (X @ Y.T) % F.p
    out = np.zeros((X.shape[0], Y.shape[0]), dtype=np.int64)
    for t in range(X.shape[1]):
        prod_t = F.mul_table[X[:, t][:, None], Y[:, t][None, :]]
        out = F.add_table[out, prod_t]
    return out


def matvec_rows(X: np.ndarray, M: np.ndarray, F: FieldTable) -> np.ndarray:
    """Row vectors times a matrix over GF(q): out = X @ M."""
    return dot_matrix(X, np.asarray(M, dtype=np.int64).T, F)


def normalize(vec: Sequence[int], F: FieldTable) -> Vector:
    for x in vec:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in vec)
    raise ValueError("zero vector does not define a point")


def num_points(proj_dim: int, q: int) -> int:
    """Number of points of a projective space of the given dimension."""
    if proj_dim < 0:
        return 0
    return (q ** (proj_dim + 1) - 1) // (q - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# -- points -------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPoint:
    coords: Vector
    index: int


class PointSet:
    """All points of PG(m-1, q) with coordinate array and reverse lookup."""

    def __init__(self, m: int, F: FieldTable):
        if m < 1:
            raise ValueError("m must be at least 1")
        self.m = m
        self.field = F
        vecs = []
        for lead in range(m):
            for tail in product(range(F.q), repeat=m - lead - 1):
                vecs.append((0,) * lead + (1,) + tail)
        vecs.sort()
        self.vectors: list[Vector] = vecs
        self.coords = np.array(vecs, dtype=np.int64).reshape(len(vecs), m)
        self.coords.setflags(write=False)
        self._index = {v: i for i, v in enumerate(vecs)}

    def __len__(self):
        return len(self.vectors)

    def index_of(self, vec: Sequence[int]) -> int:
        return self._index[normalize(vec, self.field)]

    def point(self, i: int) -> ProjPoint:
        return ProjPoint(self.vectors[i], i)


@lru_cache(maxsize=None)
def point_set(m: int, q: int) -> PointSet:
    return PointSet(m, GF(q))


def all_points(m: int, F: FieldTable) -> list[ProjPoint]:
    ps = point_set(m, F.q)
    return [ProjPoint(v, i) for i, v in enumerate(ps.vectors)]


# -- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    basis: tuple[Vector, ...]
    m: int
    field: FieldTable

    @classmethod
    def from_vectors(cls, vecs: Iterable[Sequence[int]], m: int, F: FieldTable) -> Subspace:
        vecs = [tuple(v) for v in vecs]
        for v in vecs:
            if len(v) != m:
                raise AmbientMismatch(f"vector {v} does not live in dimension {m}")
        return cls(rref(vecs, F), m, F)

    @classmethod
    def empty(cls, m: int, F: FieldTable) -> Subspace:
        return cls((), m, F)

    @classmethod
    def whole(cls, m: int, F: FieldTable) -> Subspace:
        return cls(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)), m, F)

    @classmethod
    def point(cls, vec: Sequence[int], m: int, F: FieldTable) -> Subspace:
        return cls.from_vectors([vec], m, F)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def proj_dim(self) -> int:
        return len(self.basis) - 1

    def _check(self, other: Subspace) -> None:
        if other.m != self.m or other.field != self.field:
            raise AmbientMismatch(f"PG({self.m - 1},{self.field.q}) vs PG({other.m - 1},{other.field.q})")

    def contains_vector(self, vec: Sequence[int]) -> bool:
        return len(rref(self.basis + (tuple(vec),), self.field)) == self.rank

    def __contains__(self, item) -> bool:
        if isinstance(item, ProjPoint):
            return self.contains_vector(item.coords)
        if isinstance(item, Subspace):
            return item <= self
        return self.contains_vector(item)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return span(self, other).rank == other.rank

    def __repr__(self):
        return f"Subspace(dim={self.proj_dim}, basis={list(self.basis)})"


def span(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    return Subspace(rref(a.basis + b.basis, a.field), a.m, a.field)


def annihilator(s: Subspace) -> tuple[Vector, ...]:
    """Basis of the dual-space annihilator under the standard dot product."""
    return nullspace(s.basis, s.m, s.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    ann = annihilator(a) + annihilator(b)
    return Subspace(nullspace(ann, a.m, a.field), a.m, a.field)


def points_of(s: Subspace) -> list[ProjPoint]:
    """Points of ``s`` sorted by global index."""
    ps = point_set(s.m, s.field.q)
    F = s.field
    out = set()
    r = s.rank
    for lead in range(r):
        for tail in product(range(F.q), repeat=r - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            vec = [0] * s.m
            for c, row in zip(coeffs, s.basis):
                if c:
                    vec = [F.add(x, F.mul(c, y)) for x, y in zip(vec, row)]
            out.add(ps.index_of(vec))
    return [ps.point(i) for i in sorted(out)]


def membership_mask(s: Subspace) -> np.ndarray:
    """Boolean membership mask of ``s`` over the full point list (vectorized)."""
    ps = point_set(s.m, s.field.q)
    ann = annihilator(s)
    if not ann:
        return np.ones(len(ps), dtype=bool)
    vals = dot_matrix(ps.coords, np.array(ann, dtype=np.int64), s.field)
    return ~vals.any(axis=1)


# -- counting formulas --------------------------------------------------------


def count_quadric(kind: str, proj_dim_ambient: int, q: int) -> int:
    """Size of a nonsingular quadric of the given type in PG(d, q)."""
    d = proj_dim_ambient
    if kind == "parabolic":
        if d < 0 or d % 2:
            raise KindDimensionMismatch(f"parabolic quadrics live in even dimension, got {d}")
        n = d // 2
        return (q ** (2 * n) - 1) // (q - 1)
    if kind in ("hyperbolic", "elliptic"):
        if d % 2 == 0 or d < -1:
            raise KindDimensionMismatch(f"{kind} quadrics live in odd dimension, got {d}")
        n = (d + 1) // 2
        if kind == "hyperbolic":
            if n == 0:
                return 0
            return (q ** (2 * n - 1) - 1) // (q - 1) + q ** (n - 1)
        if n < 1:
            raise KindDimensionMismatch("elliptic quadric undefined in PG(-1,q)")
        return (q ** (2 * n - 1) - 1) // (q - 1) - q ** (n - 1)
    raise KindDimensionMismatch(f"unknown quadric kind {kind!r}")


def count_hermitean(m: int, q: int) -> int:
    """Size of the nonsingular Hermitean variety H(m-1, q), q a square."""
    try:
        p, e = prime_power(q)
    except NonPrime as exc:
        raise NotASquare(str(exc)) from None
    if e % 2:
        raise NotASquare(f"{q} is not a square")
    r = p ** (e // 2)
    if m <= 1:
        return 0
    num = (r**m + (-1) ** (m + 1)) * (r ** (m - 1) + (-1) ** m)
    return num // (q - 1)
