"""Builders for the LDDG families, each with a closed-form companion.

Family 1: for a totally isotropic subspace π (rank k) of a polarity ζ of
PG(m-1, q), the vertices are the points off π^ζ, x ~ y iff y ∈ x^ζ, and the
classes are the fibres of x -> <x, π>.

Family 2: for a non-absolute point x*, the vertices are the points off
(x*)^ζ ∪ {x*}, with the same adjacency, and the classes are the lines through
x* with x* and the point on (x*)^ζ removed.

Design blow-ups and unions of looped cliques and complete bipartite graphs
cover the λ1 = k case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

from .forms import KINDS, Polarity, find_totally_isotropic, standard_polarity
from .gf import GF, FieldTable
from .graph import LoopedGraph, Partition
from .lddg import LddgParams
from .projgeom import (
    Subspace,
    count_hermitean,
    count_quadric,
    membership_mask,
    normalize,
    point_set,
    rref,
    span,
)


class NotTotallyIsotropic(ValueError):
    pass


class AbsolutePoint(ValueError):
    pass


class InvalidConfig(ValueError):
    pass


class NotSymmetricMatrix(ValueError):
    pass


class NotADesign(ValueError):
    pass


class TooFewClasses(ValueError):
    pass


class Built(NamedTuple):
    graph: LoopedGraph
    partition: Partition


# -- family 1 -----------------------------------------------------------------


@dataclass(frozen=True)
class Family1Config:
    zeta: Polarity
    pi: Subspace

    @property
    def m(self) -> int:
        return self.zeta.m

    @property
    def q(self) -> int:
        return self.zeta.field.q

    @property
    def k(self) -> int:
        """Vector-space rank of π (projective dimension k - 1)."""
        return self.pi.rank

    def pi_contains_special_point(self) -> Optional[bool]:
        """For pseudo-polarities with m even, whether π contains (H*)^ζ."""
        if self.zeta.kind != "pseudo" or self.m % 2:
            return None
        return self.zeta.pseudo_special_point() <= self.pi

    @property
    def dim_label(self) -> str:
        label = str(self.pi.proj_dim)
        inside = self.pi_contains_special_point()
        if inside is not None:
            label += "+x*" if inside else "-x*"
        return label


def _check_family1(cfg: Family1Config) -> None:
    if cfg.m < 3:
        raise InvalidConfig("family 1 needs m >= 3")
    if cfg.k < 1:
        raise InvalidConfig("π must be nonempty")
    if not cfg.zeta.is_totally_isotropic(cfg.pi):
        raise NotTotallyIsotropic(f"{cfg.pi} is not totally isotropic for {cfg.zeta}")


def _classes_by_span(coords: np.ndarray, base: Subspace, F: FieldTable) -> Partition:
    """Group vertices by the subspace <x, base>; classes in order of first member."""
    labels: dict = {}
    out = []
    for x in coords:
        key = rref(base.basis + (tuple(int(c) for c in x),), F)
        out.append(labels.setdefault(key, len(labels)))
    return Partition.from_labels(out)


def _perp_graph(zeta: Polarity, coords: np.ndarray) -> LoopedGraph:
    return LoopedGraph(zeta.form_matrix(coords, coords) == 0)


def family1_vertices(cfg: Family1Config) -> np.ndarray:
    """Global point indices of the vertex set, in enumeration order."""
    return np.flatnonzero(~membership_mask(cfg.zeta.perp(cfg.pi)))


def build_family1(cfg: Family1Config) -> Built:
    _check_family1(cfg)
    verts = family1_vertices(cfg)
    coords = point_set(cfg.m, cfg.q).coords[verts]
    return Built(_perp_graph(cfg.zeta, coords), _classes_by_span(coords, cfg.pi, cfg.zeta.field))


def family1_params(q: int, m: int, k: int) -> LddgParams:
    if not 1 <= k <= m // 2:
        raise InvalidConfig(f"rank {k} outside 1..{m // 2}")
    d = q - 1
    return LddgParams(
        q ** (m - k) * (q**k - 1) // d,
        q ** (m - k - 1) * (q**k - 1) // d,
        q ** (m - k - 1) * (q ** (k - 1) - 1) // d,
        q ** (m - k - 2) * (q**k - 1) // d,
        (q ** (m - k) - q ** (m - 2 * k)) // d,
        q**k,
    )


def family1_complement_params(q: int, m: int, k: int) -> LddgParams:
    d = q - 1
    return LddgParams(
        q ** (m - k) * (q**k - 1) // d,
        q ** (m - k - 1) * (q**k - 1),
        q ** (m - 1) - q ** (m - 2) - q ** (m - k - 1),
        q ** (m - k - 2) * (q - 1) * (q**k - 1),
        (q ** (m - k) - q ** (m - 2 * k)) // d,
        q**k,
    )


def expected_family1_params(cfg: Family1Config) -> LddgParams:
    return family1_params(cfg.q, cfg.m, cfg.k)


def expected_family1_complement_params(cfg: Family1Config) -> LddgParams:
    return family1_complement_params(cfg.q, cfg.m, cfg.k)


def family1_loops(kind: str, q: int, m: int, k: int, variant: str = "none",
                  pi_contains_special: Optional[bool] = None) -> int:
    """Loop count of the family-1 graph for a polarity of the given type."""
    n = m // 2
    s = n - k
    if s < 0:
        raise InvalidConfig(f"rank {k} exceeds the isotropic bound for m={m}")
    if kind == "symplectic":
        return q ** (m - k) * (q**k - 1) // (q - 1)
    if kind == "pseudo":
        if m % 2:
            return (q ** (2 * n) - q ** (n + s)) // (q - 1)
        if pi_contains_special is None:
            raise InvalidConfig("pseudo with m even needs to know whether π contains the special point")
        if pi_contains_special:
            return (q ** (2 * n - 1) - q ** (n + s)) // (q - 1)
        if s < 1:
            raise InvalidConfig("a rank-n isotropic subspace always contains the special point")
        return (q ** (2 * n - 1) - q ** (n + s - 1)) // (q - 1)
    if kind == "orthogonal":
        if m % 2:
            return q ** (n + s) * (q ** (n - s) - 1) // (q - 1)
        if variant == "minus" and s < 1:
            raise InvalidConfig("elliptic quadrics have no isotropic subspace of rank m/2")
        return q ** (n + s - 1) * (q ** (n - s) - 1) // (q - 1)
    if kind == "unitary":
        r = GF(q).sqrt_order
        if m % 2:
            return r ** (2 * n + 2 * s + 1) * (r ** (2 * (n - s)) - 1) // (r * r - 1)
        return r ** (2 * n + 2 * s - 1) * (r ** (2 * (n - s)) - 1) // (r * r - 1)
    raise InvalidConfig(f"unknown kind {kind!r}")


def expected_family1_loops(cfg: Family1Config) -> int:
    return family1_loops(cfg.zeta.kind, cfg.q, cfg.m, cfg.k, cfg.zeta.variant, cfg.pi_contains_special_point())


def max_isotropic_rank(kind: str, m: int, variant: str = "none", avoid_special: bool = False) -> int:
    """Largest rank of a totally isotropic subspace (the Witt index)."""
    if kind in ("symplectic", "unitary"):
        return m // 2
    if kind == "pseudo":
        if m % 2 == 0 and avoid_special:
            return m // 2 - 1
        return m // 2
    if kind == "orthogonal":
        if m % 2:
            return (m - 1) // 2
        return m // 2 if variant == "plus" else m // 2 - 1
    raise InvalidConfig(f"unknown kind {kind!r}")


def isotropic_subspace(zeta: Polarity, rank: int, special: Optional[bool] = None) -> Subspace:
    """Greedy totally isotropic subspace of the given rank.

    ``special`` (pseudo, m even) forces π to contain (True) or avoid (False)
    the special point; None takes the plain greedy choice.
    """
    kw = {}
    if special is not None:
        x = zeta.pseudo_special_point().basis[0]
        kw = {"containing": x} if special else {"avoiding": x}
    pi = find_totally_isotropic(zeta, rank - 1, **kw)
    if pi is None:
        raise InvalidConfig(f"no totally isotropic subspace of rank {rank} for {zeta}")
    return pi


# -- family 2 -----------------------------------------------------------------


@dataclass(frozen=True)
class Family2Config:
    zeta: Polarity
    x_star: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "x_star", normalize(self.x_star, self.zeta.field))

    @property
    def m(self) -> int:
        return self.zeta.m

    @property
    def q(self) -> int:
        return self.zeta.field.q

    @property
    def dim_label(self) -> str:
        return f"x*={self.label}" if self.label else "x*=" + "".join(map(str, self.x_star))


def _check_family2(cfg: Family2Config) -> None:
    if cfg.m < 3 or cfg.q < 3:
        raise InvalidConfig("family 2 needs m >= 3 and q >= 3")
    if cfg.zeta.is_absolute(cfg.x_star):
        raise AbsolutePoint(f"{cfg.x_star} lies on its own polar hyperplane")


def family2_vertices(cfg: Family2Config) -> np.ndarray:
    ps = point_set(cfg.m, cfg.q)
    F = cfg.zeta.field
    hstar = cfg.zeta.perp(Subspace.point(cfg.x_star, cfg.m, F))
    mask = ~membership_mask(hstar)
    mask[ps.index_of(cfg.x_star)] = False
    return np.flatnonzero(mask)


def build_family2(cfg: Family2Config) -> Built:
    _check_family2(cfg)
    verts = family2_vertices(cfg)
    coords = point_set(cfg.m, cfg.q).coords[verts]
    F = cfg.zeta.field
    return Built(_perp_graph(cfg.zeta, coords), _classes_by_span(coords, Subspace.point(cfg.x_star, cfg.m, F), F))


def family2_params(q: int, m: int) -> LddgParams:
    return LddgParams(q ** (m - 1) - 1, q ** (m - 2), 0, q ** (m - 3), (q ** (m - 1) - 1) // (q - 1), q - 1)


def family2_complement_params(q: int, m: int) -> LddgParams:
    return LddgParams(
        q ** (m - 1) - 1,
        q ** (m - 1) - q ** (m - 2) - 1,
        q ** (m - 1) - 2 * q ** (m - 2) - 1,
        q ** (m - 3) * (q - 1) ** 2 - 1,
        (q ** (m - 1) - 1) // (q - 1),
        q - 1,
    )


def _det(G: Sequence[Sequence[int]], F: FieldTable) -> int:
    M = [list(r) for r in G]
    n, det = len(M), 1
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = F.mul(M[i][c], inv)
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[c])]
    return det


def expected_family2_loops(cfg: Family2Config) -> int:
    """Absolute points off (x*)^ζ ∪ {x*}, from the point counts of the absolute sets.

    pseudo      -- 0 if (x*)^ζ is the hyperplane of absolute points, else q^(m-2)
    orthogonal  -- |Q| minus the nonsingular section (x*)^ζ ∩ Q; for m = 2n+1 the
                   section is hyperbolic iff (-1)^n det(G) b(x*,x*) is a square
    unitary     -- |H(m-1,q)| - |H(m-2,q)|
    """
    z, q, m = cfg.zeta, cfg.q, cfg.m
    if z.kind == "pseudo":
        hstar = z.perp(Subspace.point(cfg.x_star, m, z.field))
        absolute_span = Subspace.from_vectors([point_set(m, q).vectors[i] for i in np.flatnonzero(z.absolute_mask)], m, z.field)
        return 0 if hstar == absolute_span else q ** (m - 2)
    if z.kind == "orthogonal":
        F = z.field
        if m % 2:
            n = (m - 1) // 2
            disc = F.mul(_det(z.gram, F), z.form(cfg.x_star, cfg.x_star))
            if n % 2:
                disc = F.neg(disc)
            section = "hyperbolic" if disc in F.squares() else "elliptic"
            return count_quadric("parabolic", m - 1, q) - count_quadric(section, m - 2, q)
        whole = "hyperbolic" if z.variant == "plus" else "elliptic"
        return count_quadric(whole, m - 1, q) - count_quadric("parabolic", m - 2, q)
    if z.kind == "unitary":
        return count_hermitean(m, q) - count_hermitean(m - 1, q)
    raise InvalidConfig(f"family 2 is not defined for {z.kind} polarities")


def family2_xstar_choices(zeta: Polarity) -> list[tuple[str, tuple[int, ...]]]:
    """One representative x* per loop-count regime, deterministic."""
    ps = point_set(zeta.m, zeta.field.q)
    nonabs = [ps.vectors[i] for i in np.flatnonzero(~zeta.absolute_mask)]
    if not nonabs:
        return []
    if zeta.kind == "pseudo":
        special = zeta.pseudo_special_point().basis[0]
        if zeta.is_absolute(special):
            return [("first", nonabs[0])]
        other = next(x for x in nonabs if x != special)
        return [("special", special), ("generic", other)]
    if zeta.kind == "orthogonal" and zeta.m % 2:
        sq = zeta.field.squares()
        out = []
        for label, want in (("square", True), ("nonsquare", False)):
            x = next((x for x in nonabs if (zeta.form(x, x) in sq) == want), None)
            if x is not None:
                out.append((label, x))
        return out
    return [("first", nonabs[0])]


def default_family2_config(zeta: Polarity) -> Family2Config:
    choices = family2_xstar_choices(zeta)
    if not choices:
        raise InvalidConfig(f"{zeta} has no non-absolute points")
    label, x = choices[0]
    return Family2Config(zeta, x, label)


# -- λ1 = k families ----------------------------------------------------------


def check_symmetric_design(incidence) -> tuple[int, int, int]:
    """Return (m, l1, l2) for a symmetric 0/1 design matrix with 0 < l2 < l1 < m."""
    M = np.asarray(incidence, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or not np.isin(M, (0, 1)).all():
        raise NotADesign("incidence must be a square 0/1 matrix")
    if not np.array_equal(M, M.T):
        raise NotSymmetricMatrix("incidence matrix is not symmetric")
    m = M.shape[0]
    rows = np.unique(M.sum(axis=1))
    inter = (M @ M.T)[~np.eye(m, dtype=bool)]
    if len(rows) != 1 or len(np.unique(inter)) != 1:
        raise NotADesign("block sizes or block intersections are not constant")
    l1, l2 = int(rows[0]), int(inter[0])
    if not 0 < l2 < l1 < m:
        raise NotADesign(f"need 0 < l2 < l1 < m, got l1={l1}, l2={l2}, m={m}")
    return m, l1, l2


def build_symmetric_design_lddg(incidence, n: int) -> Built:
    m, _, _ = check_symmetric_design(incidence)
    if n < 2:
        raise InvalidConfig("class size must be at least 2")
    M = np.asarray(incidence, dtype=bool)
    adj = np.kron(M, np.ones((n, n), dtype=bool))
    return Built(LoopedGraph(adj), Partition(tuple(tuple(range(i * n, (i + 1) * n)) for i in range(m))))


def symmetric_design_params(m: int, l1: int, l2: int, n: int) -> LddgParams:
    return LddgParams(m * n, l1 * n, l1 * n, l2 * n, m, n)


def fano_incidence() -> np.ndarray:
    """(7,3,1) design from the polarity x.y = 0 of PG(2,2): point i meets line i^perp."""
    z = standard_polarity("pseudo", 3, GF(2))
    P = point_set(3, 2).coords
    return (z.form_matrix(P, P) == 0).astype(np.int64)


def build_trivial_union(m1: int, m2: int, n: int) -> Built:
    if n < 2:
        raise InvalidConfig("class size must be at least 2")
    if m1 < 0 or m2 < 0 or m1 + 2 * m2 < 2:
        raise TooFewClasses(f"m1 + 2 m2 = {m1 + 2 * m2} < 2")
    v = (m1 + 2 * m2) * n
    adj = np.zeros((v, v), dtype=bool)
    classes = []
    for i in range(m1):
        blk = slice(i * n, (i + 1) * n)
        adj[blk, blk] = True
        classes.append(tuple(range(i * n, (i + 1) * n)))
    base = m1 * n
    for j in range(m2):
        a = slice(base + 2 * j * n, base + (2 * j + 1) * n)
        b = slice(base + (2 * j + 1) * n, base + (2 * j + 2) * n)
        adj[a, b] = adj[b, a] = True
        classes.append(tuple(range(a.start, a.stop)))
        classes.append(tuple(range(b.start, b.stop)))
    return Built(LoopedGraph(adj), Partition(tuple(classes)))


def trivial_union_params(m1: int, m2: int, n: int) -> LddgParams:
    m = m1 + 2 * m2
    return LddgParams(m * n, n, n, 0, m, n)


# -- involutory automorphisms -------------------------------------------------


def _apply_linear(zeta: Polarity, coords: np.ndarray, images) -> np.ndarray:
    """Global point index of the image of each row under a vector map."""
    ps = point_set(zeta.m, zeta.field.q)
    return np.array([ps.index_of(images(tuple(int(c) for c in x))) for x in coords], dtype=np.int64)


def transvection(zeta: Polarity, a: Sequence[int]):
    """x -> x + b(x, a) a; an involutory isometry when q is even and a is absolute."""
    F = zeta.field
    if F.p != 2:
        raise InvalidConfig("involutory transvections need q even")
    if not zeta.is_absolute(a):
        raise InvalidConfig("transvection centre must be absolute")
    a = tuple(a)

    def f(x):
        c = zeta.form(x, a)
        return tuple(F.add(xi, F.mul(c, ai)) for xi, ai in zip(x, a))

    return f


def reflection(zeta: Polarity, a: Sequence[int]):
    """x -> x - 2 b(x, a)/b(a, a) a for a non-absolute, q odd."""
    F = zeta.field
    if F.p == 2:
        raise InvalidConfig("reflections need q odd")
    baa = zeta.form(a, a)
    if baa == 0:
        raise InvalidConfig("reflection centre must be non-absolute")
    two_over = F.div(F.add(1, 1), baa)
    a = tuple(a)

    def f(x):
        c = F.mul(two_over, zeta.form(x, a))
        return tuple(F.sub(xi, F.mul(c, ai)) for xi, ai in zip(x, a))

    return f


def hyperbolic_pair_negation(zeta: Polarity, e: Sequence[int], f_: Sequence[int]):
    """Negate the span of a hyperbolic pair (b(e,f) != 0, e, f absolute) and fix its perp."""
    F = zeta.field
    bef = zeta.form(e, f_)
    bfe = zeta.form(f_, e)
    if bef == 0 or zeta.form(e, e) or zeta.form(f_, f_):
        raise InvalidConfig("need absolute e, f with b(e, f) != 0")
    e, f_ = tuple(e), tuple(f_)
    minus_two = F.neg(F.add(1, 1))

    def g(x):
        # projection onto <e,f>: x = (b(x,f)/b(e,f)) e + (b(x,e)/b(f,e)) f + rest
        ce = F.div(zeta.form(x, f_), bef)
        cf = F.div(zeta.form(x, e), bfe)
        return tuple(F.add(xi, F.mul(minus_two, F.add(F.mul(ce, ei), F.mul(cf, fi))))
                     for xi, ei, fi in zip(x, e, f_))

    return g


def vertex_permutation(zeta: Polarity, vertices: np.ndarray, vector_map) -> list[int]:
    """Local permutation of the vertex list induced by ``vector_map``; raises if V is not preserved."""
    ps = point_set(zeta.m, zeta.field.q)
    img = _apply_linear(zeta, ps.coords[vertices], vector_map)
    local = {int(g): i for i, g in enumerate(vertices)}
    try:
        return [local[int(g)] for g in img]
    except KeyError:
        raise InvalidConfig("map does not preserve the vertex set") from None


def family1_involutions(cfg: Family1Config, limit: int = 3) -> list[tuple[str, list[int]]]:
    """Involutory automorphisms fixing π, from polarity isometries centred in π^ζ."""
    z = cfg.zeta
    F = z.field
    ps = point_set(cfg.m, cfg.q)
    verts = family1_vertices(cfg)
    pi_perp = membership_mask(z.perp(cfg.pi))
    out: list[tuple[str, list[int]]] = []
    cands = np.flatnonzero(pi_perp)
    if F.p == 2:
        for i in cands:
            a = ps.vectors[int(i)]
            if z.is_absolute(a):
                out.append((f"transvection{a}", vertex_permutation(z, verts, transvection(z, a))))
            if len(out) >= limit:
                break
    elif z.kind == "orthogonal":
        for i in cands:
            a = ps.vectors[int(i)]
            if not z.is_absolute(a):
                out.append((f"reflection{a}", vertex_permutation(z, verts, reflection(z, a))))
            if len(out) >= limit:
                break
    elif z.kind == "symplectic":
        # hyperbolic pairs inside π^ζ meeting π trivially
        inside_pi = membership_mask(cfg.pi)
        for i in cands:
            if inside_pi[i]:
                continue
            e = ps.vectors[int(i)]
            fmask = pi_perp & ~inside_pi
            for j in np.flatnonzero(fmask):
                f_ = ps.vectors[int(j)]
                if z.form(e, f_) and span(cfg.pi, Subspace.from_vectors([e, f_], cfg.m, F)).rank == cfg.k + 2:
                    out.append((f"pair{e}{f_}", vertex_permutation(z, verts, hyperbolic_pair_negation(z, e, f_))))
                    break
            if len(out) >= limit:
                break
    return out


def family2_involutions(cfg: Family2Config, limit: int = 3) -> list[tuple[str, list[int]]]:
    """Involutory automorphisms fixing x*: centres on (x*)^ζ, plus the reflection in x* for q odd."""
    z = cfg.zeta
    F = z.field
    ps = point_set(cfg.m, cfg.q)
    verts = family2_vertices(cfg)
    hstar = membership_mask(z.perp(Subspace.point(cfg.x_star, cfg.m, F)))
    out: list[tuple[str, list[int]]] = []
    if F.p != 2:
        out.append(("reflection-x*", vertex_permutation(z, verts, reflection(z, cfg.x_star))))
    for i in np.flatnonzero(hstar):
        if len(out) >= limit:
            break
        a = ps.vectors[int(i)]
        if F.p == 2 and z.is_absolute(a):
            out.append((f"transvection{a}", vertex_permutation(z, verts, transvection(z, a))))
        elif F.p != 2 and z.kind == "orthogonal" and not z.is_absolute(a):
            out.append((f"reflection{a}", vertex_permutation(z, verts, reflection(z, a))))
    return out


def same_class_swap(p: Partition, class_index: int = 0) -> list[int]:
    """Transposition of the first two members of a class."""
    c = p.classes[class_index]
    perm = list(range(p.size))
    perm[c[0]], perm[c[1]] = c[1], c[0]
    return perm


# -- desk grid ----------------------------------------------------------------


def polarities(q: int, m: int, kinds: Sequence[str] = KINDS) -> Iterator[Polarity]:
    """All canonical polarities of PG(m-1, q) of the requested kinds, in fixed order."""
    F = GF(q)
    for kind in KINDS:
        if kind not in kinds:
            continue
        if kind == "symplectic" and m % 2:
            continue
        if kind == "pseudo" and F.p != 2:
            continue
        if kind == "orthogonal" and F.p == 2:
            continue
        if kind == "unitary" and F.e % 2:
            continue
        variants = ("plus", "minus") if kind == "orthogonal" and m % 2 == 0 else ("none",)
        for var in variants:
            yield standard_polarity(kind, m, F, var)


def family1_configs(q: int, m: int, kinds: Sequence[str] = KINDS) -> Iterator[Family1Config]:
    if m < 3:
        return
    for z in polarities(q, m, kinds):
        if z.kind == "pseudo" and m % 2 == 0:
            for rank in range(1, m // 2 + 1):
                yield Family1Config(z, isotropic_subspace(z, rank, special=True))
                if rank <= max_isotropic_rank("pseudo", m, avoid_special=True):
                    yield Family1Config(z, isotropic_subspace(z, rank, special=False))
        else:
            for rank in range(1, max_isotropic_rank(z.kind, m, z.variant) + 1):
                yield Family1Config(z, isotropic_subspace(z, rank))


def family2_configs(q: int, m: int, kinds: Sequence[str] = KINDS) -> Iterator[Family2Config]:
    if m < 3 or q < 3:
        return
    for z in polarities(q, m, kinds):
        for label, x in family2_xstar_choices(z):
            yield Family2Config(z, x, label)
