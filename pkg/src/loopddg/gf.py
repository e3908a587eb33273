"""Small finite fields GF(p^e), p^e <= 32, backed by lookup tables.

An element is an integer in ``[0, q)``.  The integer is read as the base-p
digit string of the coefficient vector of a polynomial in the generator
``x`` modulo the field's Conway polynomial, lowest degree first.  So 0 is
zero, 1 is one, and ``p`` is the generator ``x``.  Addition is digit-wise
mod p; multiplication goes through log/antilog tables.

Conway polynomials used (coefficients listed from the constant term up)::

    GF(4)   x^2 + x + 1          [1, 1, 1]
    GF(8)   x^3 + x + 1          [1, 1, 0, 1]
    GF(16)  x^4 + x + 1          [1, 1, 0, 0, 1]
    GF(32)  x^5 + x^2 + 1        [1, 0, 1, 0, 0, 1]
    GF(9)   x^2 + 2x + 2         [2, 2, 1]
    GF(27)  x^3 + 2x + 1         [1, 2, 0, 1]
    GF(25)  x^2 + 4x + 2         [2, 4, 1]

For prime fields the generator used for the log table is the Conway root,
i.e. the smallest primitive root mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_ORDER = 32

CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


class FieldError(ValueError):
    pass


class NonPrime(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class NoSquareRootOfOrder(FieldError):
    """Raised when the involution x -> x^r is requested but q is not a square."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``p**e == q``; raise if impossible."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, rest = 0, q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1 or not is_prime(p):
                raise NonPrime(f"{q} is not a prime power")
            return p, e
    raise NonPrime(f"{q} is not a prime power")


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _poly_times_x(ds: list[int], poly: tuple[int, ...], p: int) -> list[int]:
    # multiply by x and reduce modulo the monic polynomial ``poly``
    e = len(ds)
    top = ds[-1]
    shifted = [0] + ds[:-1]
    return [(shifted[i] - top * poly[i]) % p for i in range(e)]


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        if len({pow(g, i, p) for i in range(p - 1)}) == p - 1:
            return g
    raise FieldError(f"no primitive root mod {p}")


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Precomputed arithmetic of GF(q).  Immutable; compare by order."""

    q: int
    p: int
    e: int
    primitive_poly: int
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)
    frobenius_pow_p: np.ndarray = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, FieldTable) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    @property
    def has_conjugation(self) -> bool:
        return self.e % 2 == 0

    @property
    def sqrt_order(self) -> int:
        """r with r*r == q; only defined when e is even."""
        if self.e % 2:
            raise NoSquareRootOfOrder(f"GF({self.q}) has odd degree {self.e}")
        return self.p ** (self.e // 2)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return int(self.exp_table[(int(self.log_table[a]) * k) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def squares(self) -> set[int]:
        return {self.mul(a, a) for a in range(1, self.q)}

    def first_nonsquare(self) -> int:
        sq = self.squares()
        for a in range(1, self.q):
            if a not in sq:
                return a
        raise FieldError(f"GF({self.q}) has no nonsquares")

    def conjugate(self, a: int) -> int:
        return conjugate(a, self)

    def conjugation_table(self) -> np.ndarray:
        r = self.sqrt_order
        return np.array([self.power(a, r) for a in range(self.q)], dtype=np.int64)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self)


@dataclass(frozen=True)
class FieldElement:
    """Thin operator wrapper around an element index; handy in tests and REPL."""

    value: int
    field: FieldTable = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of {self.field!r}")

    def _wrap(self, v) -> FieldElement:
        return FieldElement(int(v), self.field)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if self.field.e == 1 else other
        return NotImplemented

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._coerce(other)))

    def __pow__(self, k: int):
        if k < 0:
            return self._wrap(self.field.power(self.field.inv(self.value), -k))
        return self._wrap(self.field.power(self.value, k))

    def __int__(self):
        return self.value

    def conjugate(self) -> FieldElement:
        return self._wrap(conjugate(self.value, self.field))


@lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> FieldTable:
    """Build GF(p^e).  Tables are cached, so equal arguments share one object."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise FieldError("degree must be at least 1")
    q = p**e
    if q > MAX_ORDER:
        raise FieldTooLarge(f"GF({q}) exceeds the supported maximum {MAX_ORDER}")

    if e == 1:
        g = _primitive_root(p)
        poly = ((-g) % p, 1)
        exp = [1]
        for _ in range(q - 2):
            exp.append(exp[-1] * g % p)
        add = np.add.outer(np.arange(q), np.arange(q)) % p
    else:
        poly = CONWAY_POLYNOMIALS[(p, e)]
        exp = [1]
        cur = _digits(1, p, e)
        for _ in range(q - 2):
            cur = _poly_times_x(cur, poly, p)
            exp.append(_undigits(cur, p))
        digits = np.array([_digits(x, p, e) for x in range(q)])
        weights = p ** np.arange(e)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights

    prim = _undigits(list(poly), p)
    if len(set(exp)) != q - 1:
        raise FieldError(f"generator of GF({q}) is not primitive")

    exp_arr = np.array(exp + exp, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    for i, x in enumerate(exp):
        log[x] = i
    mul = np.zeros((q, q), dtype=np.int64)
    nz = np.arange(1, q)
    mul[1:, 1:] = exp_arr[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
    add = np.asarray(add, dtype=np.int64)
    neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)  # inv[0] is a placeholder; 0 has no inverse
    inv[1:] = exp_arr[(-log[nz]) % (q - 1)]
    frob = np.array([0] + [int(exp_arr[(log[a] * p) % (q - 1)]) for a in range(1, q)], dtype=np.int64)

    tables = [add, mul, neg, inv, exp_arr, log, frob]
    for t in tables:
        t.setflags(write=False)
    return FieldTable(q, p, e, prim, *tables)


def GF(q: int) -> FieldTable:
    p, e = prime_power(q)
    return field_new(p, e)


def conjugate(x: int, field: FieldTable) -> int:
    """The involution x -> x^r of GF(r^2)."""
    return field.power(x, field.sqrt_order)


def supported_orders() -> list[int]:
    return [q for q in range(2, MAX_ORDER + 1) if _is_prime_power(q)]


def _is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NonPrime:
        return False
    return True


def field_axioms(F: FieldTable) -> dict[str, bool]:
    """Check every field axiom exhaustively over all pairs/triples of elements."""
    A, M, q = F.add_table, F.mul_table, F.q
    x = np.arange(q)
    nz = x[1:]
    a, b, c = np.ix_(x, x, x)
    return {
        "add_commutative": bool((A == A.T).all()),
        "mul_commutative": bool((M == M.T).all()),
        "add_associative": bool((A[A[a, b], c] == A[a, A[b, c]]).all()),
        "mul_associative": bool((M[M[a, b], c] == M[a, M[b, c]]).all()),
        "distributive": bool((M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()),
        "additive_identity": bool((A[0] == x).all()),
        "multiplicative_identity": bool((M[1] == x).all()),
        "additive_inverse": bool((A[x, F.neg_table] == 0).all()),
        "multiplicative_inverse": bool((M[nz, F.inv_table[nz]] == 1).all()),
        "no_zero_divisors": bool((M[np.ix_(nz, nz)] != 0).all()),
        "characteristic_p": _char_ok(F),
    }


def _char_ok(F: FieldTable) -> bool:
    """1 added to itself p times is 0."""
    s = 0
    for _ in range(F.p):
        s = F.add(s, 1)
    return s == 0
