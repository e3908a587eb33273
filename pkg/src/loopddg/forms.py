"""Polarities of PG(m-1, q) given by nondegenerate reflexive sesquilinear forms.

Canonical Gram matrices (coordinates 0..m-1):

* symplectic  -- blocks ``[[0, 1], [-1, 0]]`` on coordinate pairs (0,1), (2,3), ...
* pseudo      -- the identity matrix, q even
* orthogonal  -- hyperbolic planes ``[[0, 1], [1, 0]]`` on pairs (0,1), (2,3), ...;
  for m odd (parabolic) a trailing ``[1]``; for the elliptic variant the last
  pair is replaced by ``diag(1, -nu)`` with nu the first nonsquare of GF(q)
* unitary     -- the identity matrix with the form ``sum x_i * y_i^r``, q = r^2

Every polarity of a given type is projectively equivalent to the canonical one,
so counting results do not depend on this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .gf import FieldTable
from .projgeom import (
    AmbientMismatch,
    ProjPoint,
    Subspace,
    dot_matrix,
    matvec_rows,
    membership_mask,
    nullspace,
    point_set,
    rref,
    span,
)

KINDS = ("symplectic", "pseudo", "orthogonal", "unitary")
VARIANTS = ("none", "plus", "minus")


class KindConstraintViolated(ValueError):
    pass


class PolarityError(AssertionError):
    """A structural fact about the polarity failed to hold."""


@dataclass(frozen=True, eq=False)
class Polarity:
    gram: tuple[tuple[int, ...], ...]
    kind: str
    field: FieldTable
    variant: str = "none"

    def __post_init__(self):
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in self.gram))
        _validate(self)

    @property
    def m(self) -> int:
        return len(self.gram)

    @property
    def uses_conjugation(self) -> bool:
        return self.kind == "unitary"

    @property
    def label(self) -> str:
        return self.kind if self.variant == "none" else f"{self.kind}-{self.variant}"

    @cached_property
    def _gram_arr(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    @cached_property
    def _sigma(self) -> np.ndarray:
        if self.uses_conjugation:
            return self.field.conjugation_table()
        return np.arange(self.field.q, dtype=np.int64)

    def sigma(self, X) -> np.ndarray:
        """Apply the companion field automorphism entrywise (identity unless unitary)."""
        return self._sigma[np.asarray(X, dtype=np.int64)]

    def form_matrix(self, X, Y) -> np.ndarray:
        """out[i, j] = b(X[i], Y[j])."""
        X = np.atleast_2d(np.asarray(X, dtype=np.int64))
        Y = np.atleast_2d(np.asarray(Y, dtype=np.int64))
        return dot_matrix(matvec_rows(X, self._gram_arr, self.field), self.sigma(Y), self.field)

    def form(self, u: Sequence[int], v: Sequence[int]) -> int:
        return int(self.form_matrix([u], [v])[0, 0])

    def _check(self, s: Subspace) -> None:
        if s.m != self.m or s.field != self.field:
            raise AmbientMismatch("subspace and polarity live in different spaces")

    def perp(self, s: Subspace) -> Subspace:
        self._check(s)
        if not s.basis:
            return Subspace.whole(self.m, self.field)
        rows = matvec_rows(np.array(s.basis, dtype=np.int64), self._gram_arr, self.field)
        null = nullspace(rows.tolist(), self.m, self.field)
        return Subspace(rref(self.sigma(np.array(null, dtype=np.int64).reshape(len(null), self.m)).tolist(), self.field), self.m, self.field)

    @cached_property
    def absolute_mask(self) -> np.ndarray:
        P = point_set(self.m, self.field.q).coords
        U = matvec_rows(P, self._gram_arr, self.field)
        sp = self.sigma(P)
        F = self.field
        if F.is_prime:
            vals = (U * sp).sum(axis=1) % F.p
        else:
            vals = np.zeros(len(P), dtype=np.int64)
            for t in range(self.m):
                vals = F.add_table[vals, F.mul_table[U[:, t], sp[:, t]]]
        mask = vals == 0
        mask.setflags(write=False)
        return mask

    def absolute_points(self) -> list[ProjPoint]:
        ps = point_set(self.m, self.field.q)
        return [ps.point(int(i)) for i in np.flatnonzero(self.absolute_mask)]

    def is_absolute(self, vec: Sequence[int]) -> bool:
        return self.form(vec, vec) == 0

    def is_totally_isotropic(self, s: Subspace) -> bool:
        self._check(s)
        return s <= self.perp(s)

    def pseudo_special_point(self) -> Subspace:
        """The point (H*)^zeta of a pseudo-polarity, H* its hyperplane of absolute points.

        Checked against the parity rule: the point lies in H* exactly when m is even.
        """
        if self.kind != "pseudo":
            raise KindConstraintViolated("only pseudo-polarities have a special point")
        ps = point_set(self.m, self.field.q)
        H = Subspace.from_vectors([ps.vectors[i] for i in np.flatnonzero(self.absolute_mask)], self.m, self.field)
        if H.proj_dim != self.m - 2:
            raise PolarityError(f"absolute points of a pseudo-polarity span dimension {H.proj_dim}, not a hyperplane")
        x = self.perp(H)
        inside = x <= H
        if inside != (self.m % 2 == 0):
            raise PolarityError(f"special point containment {inside} contradicts parity of m={self.m}")
        return x

    def __repr__(self):
        return f"Polarity({self.label}, m={self.m}, GF({self.field.q}))"


def _validate(z: Polarity) -> None:
    F, G, m = z.field, z.gram, len(z.gram)
    if z.kind not in KINDS:
        raise KindConstraintViolated(f"unknown polarity kind {z.kind!r}")
    if any(len(row) != m for row in G):
        raise KindConstraintViolated("Gram matrix is not square")
    if len(rref(G, F)) != m:
        raise KindConstraintViolated("Gram matrix is degenerate")
    sym = all(G[i][j] == G[j][i] for i in range(m) for j in range(m))
    if z.kind == "symplectic":
        if m % 2:
            raise KindConstraintViolated("symplectic polarities need m even")
        if any(G[i][i] for i in range(m)) or any(G[i][j] != F.neg(G[j][i]) for i in range(m) for j in range(m)):
            raise KindConstraintViolated("symplectic Gram matrix must be alternating")
    elif z.kind == "pseudo":
        if F.p != 2:
            raise KindConstraintViolated("pseudo-polarities need q even")
        if not sym or not any(G[i][i] for i in range(m)):
            raise KindConstraintViolated("pseudo Gram matrix must be symmetric and not alternating")
    elif z.kind == "orthogonal":
        if F.p == 2:
            raise KindConstraintViolated("orthogonal polarities need q odd")
        if not sym:
            raise KindConstraintViolated("orthogonal Gram matrix must be symmetric")
    else:
        if F.e % 2:
            raise KindConstraintViolated("unitary polarities need q a square")
        if any(G[j][i] != F.conjugate(G[i][j]) for i in range(m) for j in range(m)):
            raise KindConstraintViolated("unitary Gram matrix must be conjugate-symmetric")
    if z.variant not in VARIANTS:
        raise KindConstraintViolated(f"unknown variant {z.variant!r}")
    if z.kind == "orthogonal" and m % 2 == 0 and z.variant == "none":
        raise KindConstraintViolated("orthogonal polarity with m even needs variant plus or minus")
    if z.variant != "none" and not (z.kind == "orthogonal" and m % 2 == 0):
        raise KindConstraintViolated("variant only applies to orthogonal polarities with m even")


def standard_polarity(kind: str, m: int, F: FieldTable, variant: str = "none") -> Polarity:
    G = [[0] * m for _ in range(m)]
    if kind == "symplectic":
        if m % 2:
            raise KindConstraintViolated("symplectic polarities need m even")
        for i in range(0, m, 2):
            G[i][i + 1] = 1
            G[i + 1][i] = F.neg(1)
    elif kind in ("pseudo", "unitary"):
        for i in range(m):
            G[i][i] = 1
    elif kind == "orthogonal":
        if F.p == 2:
            raise KindConstraintViolated("orthogonal polarities need q odd")
        npairs = m // 2
        if m % 2 == 0 and variant == "minus":
            npairs -= 1
        for t in range(npairs):
            G[2 * t][2 * t + 1] = G[2 * t + 1][2 * t] = 1
        if m % 2:
            G[m - 1][m - 1] = 1
        elif variant == "minus":
            G[m - 2][m - 2] = 1
            G[m - 1][m - 1] = F.neg(F.first_nonsquare())
    else:
        raise KindConstraintViolated(f"unknown polarity kind {kind!r}")
    return Polarity(tuple(map(tuple, G)), kind, F, variant)


def perp(s: Subspace, zeta: Polarity) -> Subspace:
    return zeta.perp(s)


def absolute_points(zeta: Polarity) -> list[ProjPoint]:
    return zeta.absolute_points()


def is_totally_isotropic(s: Subspace, zeta: Polarity) -> bool:
    return zeta.is_totally_isotropic(s)


def find_totally_isotropic(
    zeta: Polarity,
    target_proj_dim: int,
    containing: Optional[Sequence[int]] = None,
    avoiding: Optional[Sequence[int]] = None,
) -> Optional[Subspace]:
    """Greedy search for a totally isotropic subspace of the requested dimension.

    Starts from ``containing`` (if given) and repeatedly adds the first absolute
    point of the current perp that is not already inside.  With ``avoiding`` the
    result is kept off that point.  Returns None when the greedy chain stops
    short, which happens exactly when the target exceeds the maximum.
    """
    if target_proj_dim < 0:
        raise ValueError("target dimension must be nonnegative")
    F, m = zeta.field, zeta.m
    ps = point_set(m, F.q)
    S = Subspace.empty(m, F)
    if containing is not None:
        if not zeta.is_absolute(containing):
            return None
        S = Subspace.point(containing, m, F)
        if avoiding is not None and Subspace.point(avoiding, m, F) <= S:
            return None
    absolute = zeta.absolute_mask
    while S.proj_dim < target_proj_dim:
        cand = absolute & membership_mask(zeta.perp(S)) & ~membership_mask(S)
        if avoiding is not None:
            cand &= ~membership_mask(span(S, Subspace.point(avoiding, m, F)))
        idx = np.flatnonzero(cand)
        if idx.size == 0:
            return None
        S = span(S, Subspace.point(ps.vectors[int(idx[0])], m, F))
    return S


def max_isotropic_dim(zeta: Polarity, **kw) -> int:
    """Largest projective dimension reached by the greedy isotropic chain."""
    d = -1
    while find_totally_isotropic(zeta, d + 1, **kw) is not None:
        d += 1
    return d

