"""Exact eigenvalues of symmetric 0/1 matrices.

Two independent routes:

* :func:`charpoly_spectrum` factors the integer characteristic polynomial
  (python-flint) and reads eigenvalues off the linear and quadratic factors.
  Cost grows roughly like v**4, so it is reserved for small graphs.
* :func:`moment_spectrum` takes the eigenvalues of ``A @ A`` with their
  multiplicities (known exactly once an identity for ``A @ A`` has been
  checked) and recovers how each eigenspace of ``A @ A`` splits between
  ``+sqrt(c)`` and ``-sqrt(c)`` from the exact traces of A, A^3 and A^5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Mapping

import flint
import numpy as np

CHARPOLY_LIMIT = 400


class SpectrumError(ArithmeticError):
    pass


def squarefree_split(n: int) -> tuple[int, int]:
    """n = s**2 * r with r squarefree; returns (s, r)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    s, r, d = 1, n, 2
    while d * d <= r:
        while r % (d * d) == 0:
            r //= d * d
            s *= d
        d += 1
    return s, r


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@total_ordering
@dataclass(frozen=True)
class Surd:
    """The real number (a + b*sqrt(d)) / c in lowest terms, d squarefree, c > 0."""

    a: int
    b: int = 0
    d: int = 1
    c: int = 1

    def __post_init__(self):
        a, b, d, c = self.a, self.b, self.d, self.c
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 1:
            raise ValueError("radicand must be positive")
        s, d = squarefree_split(d)
        b *= s
        if d == 1:
            a, b = a + b, 0
        if b == 0:
            d = 1
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c)

    @classmethod
    def sqrt(cls, n: int, sign: int = 1) -> Surd:
        return cls(0, sign, n) if n else cls(0)

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.c == 1

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __lt__(self, other):
        return float(self) < float(other)

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d, self.c)

    def __str__(self):
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        rad = f"sqrt({self.d})"
        if self.a == 0:
            body = rad if self.b == 1 else "-" + rad if self.b == -1 else f"{self.b}*{rad}"
        else:
            sgn = "+" if self.b > 0 else "-"
            coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
            body = f"{self.a}{sgn}{coef}{rad}"
            if self.c != 1:
                body = f"({body})"
        return body if self.c == 1 else f"{body}/{self.c}"


def spectrum_string(spec: Mapping[Surd, int]) -> str:
    """``3^1 sqrt(3)^3 1^1 -1^2 -sqrt(3)^3``: descending value, value^multiplicity."""
    return " ".join(f"{s}^{spec[s]}" for s in sorted(spec, reverse=True) if spec[s])


def _factor_roots(coeffs: list[int]) -> list[Surd] | None:
    """Roots of an irreducible monic-up-to-sign integer polynomial of degree <= 2."""
    if len(coeffs) == 2:
        c0, c1 = coeffs
        return [Surd(-c0, 0, 1, c1)]
    if len(coeffs) == 3:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        return [Surd(-c1, 1, disc, 2 * c2), Surd(-c1, -1, disc, 2 * c2)]
    return None


def _to_fmpz_mat(A: np.ndarray) -> flint.fmpz_mat:
    return flint.fmpz_mat(np.asarray(A, dtype=np.int64).tolist())


def charpoly_factors(A: np.ndarray) -> list[tuple[list[int], int]]:
    """Irreducible factors of det(xI - A) as (coefficients low->high, multiplicity)."""
    if A.shape[0] == 0:
        return []
    p = _to_fmpz_mat(A).charpoly()
    _, facs = p.factor()
    return [([int(c) for c in f.coeffs()], int(e)) for f, e in facs]


def minpoly_factors(A: np.ndarray) -> list[list[int]]:
    if A.shape[0] == 0:
        return []
    p = _to_fmpz_mat(A).minpoly()
    _, facs = p.factor()
    return [[int(c) for c in f.coeffs()] for f, _ in facs]


def charpoly_spectrum(A: np.ndarray) -> dict[Surd, int]:
    """Eigenvalue -> multiplicity from the exact characteristic polynomial."""
    out: dict[Surd, int] = {}
    for coeffs, mult in charpoly_factors(A):
        roots = _factor_roots(coeffs)
        if roots is None:
            raise SpectrumError(f"irreducible factor of degree {len(coeffs) - 1} has no surd roots")
        for r in roots:
            out[r] = out.get(r, 0) + mult
    return out


def distinct_eigenvalue_count(A: np.ndarray) -> int:
    """Degree of the minimal polynomial; equals the number of distinct eigenvalues for symmetric A."""
    return sum(len(c) - 1 for c in minpoly_factors(A))


def exact_power_traces(A: np.ndarray, A2: np.ndarray | None = None) -> list[int]:
    """[tr(A^0), ..., tr(A^5)] as exact Python integers.

    Entries of A^3 are at most k^3 for a k-regular 0/1 matrix, comfortably
    inside the float64 exact-integer range for the graph sizes handled here.
    """
    v = A.shape[0]
    af = A.astype(np.float64)
    if A2 is None:
        A2 = np.rint(af @ af).astype(np.int64)
    A3 = af @ A2.astype(np.float64)
    if np.abs(A3).max(initial=0) >= 2.0**52:
        raise SpectrumError("A^3 entries exceed exact float range")
    A3 = np.rint(A3).astype(np.int64)
    A = A.astype(np.int64)
    tr = [v, int(np.trace(A)), int(np.trace(A2)), int((A * A2).sum())]
    tr.append(int((A2 * A2).sum(axis=1).astype(object).sum()))
    tr.append(int((A2 * A3).sum(axis=1).astype(object).sum()))
    return tr


def _solve_vandermonde(nodes: list[int], rhs: list[int]) -> list[Fraction]:
    n = len(nodes)
    M = [[Fraction(c) ** j for c in nodes] + [Fraction(rhs[j])] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def moment_spectrum(traces: list[int], square_eigs: Mapping[int, int]) -> dict[Surd, int]:
    """Spectrum of symmetric A from the spectrum of A^2 and the traces of odd powers.

    ``square_eigs`` maps each distinct eigenvalue c >= 0 of A^2 to its
    multiplicity.  For c > 0 the eigenspace splits into p eigenvectors for
    +sqrt(c) and r for -sqrt(c); writing t_c = (p - r) * sqrt(c),
    tr(A^(2j+1)) = sum_c t_c * c^j determines every t_c.
    """
    cs = sorted(c for c in square_eigs if square_eigs[c] and c != 0)
    if len(cs) > 3:
        raise SpectrumError("more than three nonzero eigenvalues of A^2")
    for j, target in ((0, traces[0]), (1, traces[2]), (2, traces[4])):
        if sum(mult * c**j for c, mult in square_eigs.items()) != target:
            raise SpectrumError(f"tr(A^{2 * j}) disagrees with the given spectrum of A^2")
    odd = [traces[1], traces[3], traces[5]][: len(cs)]
    t = _solve_vandermonde(cs, odd) if cs else []
    out: dict[Surd, int] = {}
    for c, tc in zip(cs, t):
        mult = square_eigs[c]
        if is_square(c):
            diff = tc / math.isqrt(c)
        elif tc == 0:
            diff = Fraction(0)
        else:
            raise SpectrumError(f"irrational pair +-sqrt({c}) with unequal multiplicities")
        if diff.denominator != 1 or (mult + diff.numerator) % 2 or abs(diff) > mult:
            raise SpectrumError(f"non-integral split {diff} of multiplicity {mult} at c={c}")
        plus = (mult + diff.numerator) // 2
        for val, k in ((Surd.sqrt(c), plus), (Surd.sqrt(c, -1), mult - plus)):
            if k:
                out[val] = out.get(val, 0) + k
    if square_eigs.get(0):
        out[Surd(0)] = square_eigs[0]
    return out
