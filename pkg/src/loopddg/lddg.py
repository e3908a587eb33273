"""Divisible design graphs with loops: verification, spectra, recognizers, switching.

A graph Γ with a partition into m classes of size n is an LDDG with
parameters (v, k, λ1, λ2, m, n) when it is k-regular, two distinct vertices
of one class have λ1 common neighbours and two vertices of different classes
have λ2.  It is proper when m, n >= 2 and λ1 != λ2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from . import eigen
from .eigen import Surd, is_square
from .graph import (
    LoopedGraph,
    Partition,
    PartitionMismatch,
    check_permutation,
    common_neighbour_matrix,
    components,
    induced,
    is_automorphism,
    n_star,
)


class UnequalClassSizes(ValueError):
    pass


class NotRegular(ValueError):
    pass


class NegativeParameter(ValueError):
    pass


class InconsistentTrace(ArithmeticError):
    pass


class NotAutomorphism(ValueError):
    pass


class NotInvolution(ValueError):
    pass


class NotApplicable(ValueError):
    pass


class ComponentClassStraddle(ValueError):
    pass


# -- parameter records --------------------------------------------------------


@dataclass(frozen=True)
class LddgParams:
    v: int
    k: int
    lambda1: int
    lambda2: int
    m: int
    n: int
    L: Optional[int] = None
    n_star: Optional[int] = None

    def __post_init__(self):
        if self.v != self.m * self.n:
            raise ValueError(f"v={self.v} is not m*n={self.m}*{self.n}")
        if self.k * (self.k - 1) != (self.n - 1) * self.lambda1 + (self.m - 1) * self.n * self.lambda2:
            raise ValueError(f"k(k-1) = (n-1)l1 + (m-1)n l2 fails for {self.tuple()}")

    @property
    def proper(self) -> bool:
        return self.m >= 2 and self.n >= 2 and self.lambda1 != self.lambda2

    def tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.v, self.k, self.lambda1, self.lambda2, self.m, self.n)

    def to_json(self) -> dict:
        return {
            "v": self.v, "k": self.k, "lambda1": self.lambda1, "lambda2": self.lambda2,
            "m": self.m, "n": self.n, "proper": self.proper, "L": self.L, "n_star": self.n_star,
        }

    def __str__(self):
        return "(" + ",".join(map(str, self.tuple())) + ")"


@dataclass(frozen=True)
class Refutation:
    """Why (g, p) is not an LDDG.  ``pair`` is the lexicographically first offending pair."""

    reason: str
    pair: Optional[tuple[int, int]] = None
    expected: Optional[int] = None
    found: Optional[int] = None

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {"reason": self.reason, "pair": list(self.pair) if self.pair else None,
                "expected": self.expected, "found": self.found}


@dataclass(frozen=True)
class Improper:
    """Every two distinct vertices share the same number ``lam`` of neighbours."""

    v: int
    k: int
    lam: int


@dataclass(frozen=True)
class NotLddg:
    reason: str


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues mu0..mu4 with multiplicities f0..f4.

    When mu1 = mu2 = 0 (k = l1) only ``f12`` is meaningful and f1, f2 are None;
    likewise f3, f4 when mu3 = mu4 = 0.
    """

    mu: tuple[Surd, Surd, Surd, Surd, Surd]
    f: tuple[int, Optional[int], Optional[int], Optional[int], Optional[int]]
    f12: int
    f34: int

    def multiset(self) -> dict[Surd, int]:
        out: dict[Surd, int] = {}

        def add(val: Surd, mult: int):
            if mult:
                out[val] = out.get(val, 0) + mult

        add(self.mu[0], self.f[0])
        if self.f[1] is None:
            add(Surd(0), self.f12)
        else:
            add(self.mu[1], self.f[1])
            add(self.mu[2], self.f[2])
        if self.f[3] is None:
            add(Surd(0), self.f34)
        else:
            add(self.mu[3], self.f[3])
            add(self.mu[4], self.f[4])
        return out

    def __str__(self):
        return eigen.spectrum_string(self.multiset())


# -- verification -------------------------------------------------------------


def _class_sizes_equal(p: Partition) -> int:
    sizes = set(p.class_sizes())
    if len(sizes) > 1:
        raise UnequalClassSizes(f"class sizes {sorted(sizes)}")
    return sizes.pop() if sizes else 0


def verify_lddg(g: LoopedGraph, p: Partition, cn: Optional[np.ndarray] = None) -> Union[LddgParams, Refutation]:
    """Brute-force check of the LDDG conditions for ``g`` with classes ``p``.

    ``cn`` may pass a precomputed common-neighbour matrix (A @ A).
    """
    n = _class_sizes_equal(p)
    if p.size != g.v:
        raise PartitionMismatch(f"partition covers {p.size} vertices, graph has {g.v}")
    lab = p.labels(g.v)
    m = p.m
    if n < 2:
        return Refutation("classes have fewer than 2 vertices")
    if m < 2:
        return Refutation("fewer than 2 classes")
    deg = g.degrees
    bad = np.flatnonzero(deg != deg[0])
    if bad.size:
        x = int(bad[0])
        return Refutation("not regular", (0, x), int(deg[0]), int(deg[x]))
    k = int(deg[0])
    C = common_neighbour_matrix(g) if cn is None else cn
    same = lab[:, None] == lab[None, :]
    upper = np.triu(np.ones((g.v, g.v), dtype=bool), 1)
    lam = {}
    first_bad = None
    for flag, name in ((True, "lambda1"), (False, "lambda2")):
        mask = upper & (same if flag else ~same)
        idx = np.flatnonzero(mask)  # row-major order = lexicographic order
        vals = C.ravel()[idx]
        lam[name] = int(vals[0])
        off = np.flatnonzero(vals != vals[0])
        if off.size:
            flat = int(idx[off[0]])
            cand = (divmod(flat, g.v), name, int(vals[0]), int(vals[off[0]]))
            if first_bad is None or cand[0] < first_bad[0]:
                first_bad = cand
    if first_bad is not None:
        (x, y), name, exp, got = first_bad
        return Refutation(f"{name} not constant", (x, y), exp, got)
    return LddgParams(g.v, k, lam["lambda1"], lam["lambda2"], m, n, g.loop_count, n_star(g, p))


def _pair_values(C: np.ndarray) -> np.ndarray:
    return np.unique(C[np.triu_indices(C.shape[0], 1)])


def find_canonical_partition(g: LoopedGraph) -> Union[tuple[Partition, LddgParams], NotLddg, Improper]:
    if not g.is_regular:
        raise NotRegular("graph is not regular")
    if g.v < 2:
        return NotLddg("fewer than two vertices")
    C = common_neighbour_matrix(g)
    vals = _pair_values(C)
    k = int(g.degrees[0])
    if len(vals) == 1:
        lam = int(vals[0])
        if k * (k - 1) != (g.v - 1) * lam:
            raise AssertionError(f"k(k-1) = (v-1)lambda fails for k={k}, v={g.v}, lambda={lam}")
        return Improper(g.v, k, lam)
    if len(vals) > 2:
        return NotLddg(f"{len(vals)} distinct common-neighbour counts")
    for lam1 in vals:
        rel = C == lam1
        np.fill_diagonal(rel, True)
        labels = rel.argmax(axis=1)
        if not np.array_equal(rel, labels[:, None] == labels[None, :]):
            continue
        p = Partition.from_labels(labels.tolist())
        if len(set(p.class_sizes())) != 1:
            continue
        res = verify_lddg(g, p, C)
        if isinstance(res, LddgParams) and res.proper:
            return p, res
    return NotLddg("neither common-neighbour count defines an equitable equivalence relation")


def complement_params(p: LddgParams) -> LddgParams:
    v = p.v
    k, l1, l2 = v - p.k, v - 2 * p.k + p.lambda1, v - 2 * p.k + p.lambda2
    if min(k, l1, l2) < 0:
        raise NegativeParameter(f"complement of {p} has a negative parameter")
    L = None if p.L is None else v - p.L
    ns = None if p.n_star is None else p.m * p.n * p.n - p.n_star
    return LddgParams(v, k, l1, l2, p.m, p.n, L, ns)


def parameter_checks(p: LddgParams) -> dict[str, bool]:
    """Counting identity and bounds that every proper LDDG satisfies."""
    k, v = p.k, p.v
    out = {
        "valency_identity": k * (k - 1) == (p.n - 1) * p.lambda1 + (p.m - 1) * p.n * p.lambda2,
        "valency_bounds": 2 <= k <= v - 2,
        "lambda1_bounds": 0 <= p.lambda1 <= k,
        "lambda2_bounds": 0 <= p.lambda2 <= k - 1 and p.lambda2 <= k * k // v,
    }
    if not p.proper:
        out = {"valency_identity": out["valency_identity"]}
    return out


# -- spectrum -----------------------------------------------------------------


def _split(total: int, diff_times_root: Fraction, radicand: int, what: str) -> tuple[int, int]:
    """Solve a + b = total, (a - b) sqrt(radicand) = diff_times_root in nonnegative integers."""
    if is_square(radicand):
        diff = diff_times_root / math.isqrt(radicand)
    elif diff_times_root == 0:
        diff = Fraction(0)
    else:
        raise InconsistentTrace(f"{what}: irrational sqrt({radicand}) needs a zero trace defect, got {diff_times_root}")
    if diff.denominator != 1 or (total + diff.numerator) % 2 or abs(diff.numerator) > total:
        raise InconsistentTrace(f"{what}: cannot split {total} with difference {diff}")
    a = (total + diff.numerator) // 2
    return a, total - a


def spectrum_from_params(p: LddgParams) -> Spectrum:
    if p.L is None or p.n_star is None:
        raise ValueError("spectrum needs the loop count L and N*")
    k, v, m, n = p.k, p.v, p.m, p.n
    d1, d3 = k - p.lambda1, k * k - p.lambda2 * v
    if d1 < 0 or d3 < 0:
        raise InconsistentTrace(f"negative radicand: k-l1={d1}, k^2-l2 v={d3}")
    mu = (Surd(k), Surd.sqrt(d1), Surd.sqrt(d1, -1), Surd.sqrt(d3), Surd.sqrt(d3, -1))
    f12, f34 = m * (n - 1), m - 1
    class_defect = Fraction(p.n_star, n) - k
    loop_defect = p.L - Fraction(p.n_star, n)
    if d3 == 0:
        if class_defect != 0:
            raise InconsistentTrace(f"k^2 = l2 v forces N* = kn, got N*={p.n_star}")
        f3 = f4 = None
    else:
        f3, f4 = _split(f34, class_defect, d3, "f3/f4")
    if d1 == 0:
        if loop_defect != 0:
            raise InconsistentTrace(f"k = l1 forces L = N*/n, got L={p.L}")
        f1 = f2 = None
    else:
        f1, f2 = _split(f12, loop_defect, d1, "f1/f2")
    return Spectrum(mu, (1, f1, f2, f3, f4), f12, f34)


def spectrum_checks(p: LddgParams, s: Spectrum) -> dict[str, bool]:
    """Trace relations tying L and N* to the multiplicities."""
    k, v, m, n = p.k, p.v, p.m, p.n
    d1, d3 = k - p.lambda1, k * k - p.lambda2 * v
    f0, f1, f2, f3, f4 = s.f
    t1 = 0 if f1 is None else f1 - f2
    t3 = 0 if f3 is None else f3 - f4
    sq1, sq3 = is_square(d1), is_square(d3)
    # (f_i - f_j) * sqrt(d) as an exact rational; an irrational root must carry t = 0
    w1 = Fraction(t1 * math.isqrt(d1)) if sq1 else (Fraction(0) if t1 == 0 else None)
    w3 = Fraction(t3 * math.isqrt(d3)) if sq3 else (Fraction(0) if t3 == 0 else None)
    per_class = Fraction(p.n_star, n)
    out = {
        "multiplicities_sum": f0 + s.f12 + s.f34 == v,
        "loop_trace": w1 is not None and w3 is not None and k + w1 + w3 == p.L,
        "class_trace": w3 is not None and w3 == per_class - k,
        "loop_class_trace": w1 is not None and p.L == per_class + w1,
    }
    if not sq3:
        out["irrational_class_eigenvalues"] = m % 2 == 1 and f3 == f4 and p.n_star == k * n
    if not sq1:
        out["irrational_fibre_eigenvalues"] = s.f12 % 2 == 0 and f1 == f2 and p.n_star == n * p.L
    if not sq1 and not sq3:
        out["irrational_loops_equal_valency"] = p.L == k
    return out


def verify_a_squared_identity(g: LoopedGraph, p: Partition, params: LddgParams, cn: Optional[np.ndarray] = None) -> bool:
    """A^2 == (k-l1) I + l2 J + (l1-l2) K entrywise, K the class indicator."""
    if params.v != g.v:
        return False
    C = common_neighbour_matrix(g) if cn is None else cn
    same = p.same_class_matrix(g.v)
    k, l1, l2 = params.k, params.lambda1, params.lambda2
    expected = np.where(same, l1, l2).astype(np.int64)
    expected[np.diag_indices(g.v)] = k
    return bool(np.array_equal(C, expected))


def quotient_matrix(g: LoopedGraph, p: Partition) -> list[list[Fraction]]:
    """R[i][j] = N_ij / n where N_ij counts ordered adjacent pairs from class i to class j."""
    N = _class_counts(g, p)
    n = p.class_sizes()[0]
    return [[Fraction(int(x), n) for x in row] for row in N]


def _class_counts(g: LoopedGraph, p: Partition) -> np.ndarray:
    lab = p.labels(g.v)
    S = np.zeros((g.v, p.m), dtype=np.float64)
    S[np.arange(g.v), lab] = 1.0
    return np.rint(S.T @ g.adj.astype(np.float64) @ S).astype(np.int64)


def verify_quotient_identity(g: LoopedGraph, p: Partition, params: LddgParams) -> bool:
    """R^2 == (k^2 - l2 v) I + l2 n J over the rationals."""
    m, n = params.m, params.n
    if p.m != m or set(p.class_sizes()) != {n}:
        return False
    # n^2 R^2 = N^2 keeps the check in exact integers
    N = _class_counts(g, p).astype(object)
    lhs = N.dot(N)
    c0 = params.k ** 2 - params.lambda2 * params.v
    rhs = np.full((m, m), params.lambda2 * n * n * n, dtype=object)
    rhs[np.diag_indices(m)] += c0 * n * n
    return bool((lhs == rhs).all())


def exact_spectrum(g: LoopedGraph, p: Optional[Partition] = None, params: Optional[LddgParams] = None,
                   cn: Optional[np.ndarray] = None, method: str = "auto") -> tuple[dict[Surd, int], str]:
    """Exact eigenvalue multiset of A, independent of the closed forms.

    Small graphs: factor the integer characteristic polynomial.  Larger LDDGs:
    once A^2 = (k-l1) I + l2 J + (l1-l2) K is confirmed, A^2 has eigenvalues
    k^2, k-l1, k^2-l2 v with multiplicities 1, m(n-1), m-1, and the odd
    power traces fix how each eigenspace splits between +root and -root.
    ``method`` forces "charpoly" or "moments"; "auto" picks by size.
    """
    if method not in ("auto", "charpoly", "moments"):
        raise ValueError(f"unknown method {method!r}")
    A = g.matrix()
    if method == "moments" and (p is None or params is None):
        raise ValueError("the moment route needs the partition and parameters")
    if method == "charpoly" or (method == "auto" and (g.v <= eigen.CHARPOLY_LIMIT or p is None or params is None)):
        return eigen.charpoly_spectrum(A), "charpoly"
    C = common_neighbour_matrix(g) if cn is None else cn
    if not verify_a_squared_identity(g, p, params, C):
        raise eigen.SpectrumError("A^2 identity fails; moment route unavailable")
    k, v, m, n = params.k, params.v, params.m, params.n
    sq: dict[int, int] = {}
    for c, mult in ((k * k, 1), (k - params.lambda1, m * (n - 1)), (k * k - params.lambda2 * v, m - 1)):
        sq[c] = sq.get(c, 0) + mult
    return eigen.moment_spectrum(eigen.exact_power_traces(A, C), sq), "moments"


# -- certificate --------------------------------------------------------------


def certificate(g: LoopedGraph, p: Partition, exact: bool = True) -> dict:
    """Run every check on (g, p) and collect results in a JSON-ready dict."""
    C = common_neighbour_matrix(g)
    res = verify_lddg(g, p, C)
    if isinstance(res, Refutation):
        return {"passed": False, "refutation": res.to_json(), "checks": {}}
    checks = dict(parameter_checks(res))
    A = g.matrix()
    checks["trace_equals_loops"] = int(np.trace(A)) == res.L
    checks["trace_square_equals_vk"] = int(np.trace(C)) == res.v * res.k
    cert: dict = {"params": res.to_json()}
    if res.proper:
        checks["a_squared_identity"] = verify_a_squared_identity(g, p, res, C)
        checks["quotient_identity"] = verify_quotient_identity(g, p, res)
        try:
            spec = spectrum_from_params(res)
        except InconsistentTrace as exc:
            checks["spectrum_from_params"] = False
            cert["spectrum_error"] = str(exc)
        else:
            checks.update(spectrum_checks(res, spec))
            cert["spectrum"] = str(spec)
            cert["multiplicities"] = {"f": list(spec.f), "f12": spec.f12, "f34": spec.f34}
            if exact:
                try:
                    ex, method = exact_spectrum(g, p, res, C)
                except eigen.SpectrumError as exc:
                    checks["spectrum_exact"] = False
                    cert["spectrum_error"] = str(exc)
                else:
                    checks["spectrum_exact"] = ex == spec.multiset()
                    cert["spectrum_method"] = method
    cert["checks"] = checks
    cert["passed"] = all(checks.values())
    return cert


# -- dual Seidel switching ----------------------------------------------------


@dataclass(frozen=True)
class SwitchCounts:
    N: int
    A1: int
    A2: int

    @property
    def predicted_loops(self) -> int:
        return self.N + self.A1 - self.A2


def _check_switch(g: LoopedGraph, theta: Sequence[int]) -> np.ndarray:
    t = check_permutation(theta, g.v)
    if not np.array_equal(t[t], np.arange(g.v)):
        raise NotInvolution("theta composed with itself is not the identity")
    if not is_automorphism(g, t):
        raise NotAutomorphism("theta does not preserve adjacency")
    return t


def switch_counts(g: LoopedGraph, theta: Sequence[int]) -> SwitchCounts:
    """N = loops; A1 = loopless x with theta(x) ~ x; A2 = looped x with theta(x) !~ x."""
    t = _check_switch(g, theta)
    loops = np.diag(g.adj)
    hit = g.adj[t, np.arange(g.v)]
    return SwitchCounts(int(loops.sum()), int((~loops & hit).sum()), int((loops & ~hit).sum()))


def dual_seidel_switch(g: LoopedGraph, theta: Sequence[int]) -> LoopedGraph:
    """Γ_θ: x ~ y in Γ_θ iff θ(x) ~ y in Γ."""
    t = _check_switch(g, theta)
    return LoopedGraph(g.adj[t, :])


# -- recognizers --------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricDesignStructure:
    m: int
    l1: int
    l2: int
    incidence: tuple[tuple[int, ...], ...]
    fixed_points: int


@dataclass(frozen=True)
class TrivialUnionStructure:
    m1: int
    m2: int
    n: int


def recognize_lambda1_equals_k(g: LoopedGraph, p: Partition, params: Optional[LddgParams] = None):
    if params is None:
        params = verify_lddg(g, p)
        if isinstance(params, Refutation):
            raise NotApplicable(f"not an LDDG: {params.reason}")
    if params.lambda1 != params.k:
        raise NotApplicable(f"lambda1={params.lambda1} differs from k={params.k}")
    reps = [c[0] for c in p.classes]
    M = g.adj[np.ix_(reps, reps)].astype(int)
    n = params.n
    l1, l2 = params.k // n, params.lambda2 // n
    if params.k % n or params.lambda2 % n:
        raise AssertionError("k and lambda2 must be multiples of n when lambda1 = k")
    if (M.sum(axis=1) != l1).any():
        raise AssertionError("block sizes are not constant")
    inter = M @ M.T
    off = inter[~np.eye(len(reps), dtype=bool)]
    if (off != l2).any():
        raise AssertionError("block intersections are not constant")
    if l2 == 0:
        # blocks partition the classes into singletons (looped K_n) and swapped pairs (K_{n,n})
        m1 = int(np.trace(M))
        return TrivialUnionStructure(m1, (len(reps) - m1) // 2, n)
    return SymmetricDesignStructure(len(reps), l1, l2, tuple(map(tuple, M.tolist())), int(np.trace(M)))


@dataclass(frozen=True)
class Classification:
    """Shape of a regular graph with few distinct eigenvalues.

    ``shape`` is one of: empty, loops_only, two_eigenvalues, srg, modified_srg,
    complete_multipartite, looped_complete_multipartite, disconnected,
    unclassified.  ``case`` refines two_eigenvalues ("a".."e") and
    disconnected ("1", "2", or None if neither applies).
    """

    s: int
    shape: str
    case: Optional[str] = None
    eigenvalues: tuple[Surd, ...] = ()
    srg: Optional[tuple[int, int, int, int]] = None
    details: dict = field(default_factory=dict, compare=False)


def _srg_shape(g: LoopedGraph) -> Optional[tuple[str, tuple[int, int, int, int]]]:
    """SRG or looped SRG parameters of a connected regular graph, or None."""
    loops = np.diag(g.adj)
    if loops.any() and not loops.all():
        return None
    looped = bool(loops.all())
    C = common_neighbour_matrix(g)
    off = ~np.eye(g.v, dtype=bool)
    adj_vals = np.unique(C[g.adj & off])
    non_vals = np.unique(C[~g.adj & off])
    if len(adj_vals) > 1 or len(non_vals) != 1:
        return None
    a2 = int(adj_vals[0]) if len(adj_vals) else 0
    a3 = int(non_vals[0])
    k = int(g.degrees[0])
    if looped:
        return "modified_srg", (g.v, k - 1, a2 - 2, a3)
    return "srg", (g.v, k, a2, a3)


def _is_complete_multipartite(g: LoopedGraph) -> Optional[tuple[int, int]]:
    """(parts, part size) if non-adjacency among distinct vertices is an equivalence with equal classes."""
    rel = ~g.adj.copy()
    np.fill_diagonal(rel, True)
    labels = rel.argmax(axis=1)
    if not np.array_equal(rel, labels[:, None] == labels[None, :]):
        return None
    sizes = np.unique(np.bincount(labels)[np.unique(labels)])
    if len(sizes) != 1:
        return None
    return len(np.unique(labels)), int(sizes[0])


def _component_kind(h: LoopedGraph) -> tuple[str, tuple]:
    loops = np.diag(h.adj)
    if h.v == 1:
        return ("looped_vertex" if loops[0] else "vertex"), ()
    if h.adj.all():
        return "looped_complete", (h.v,)
    if not loops.any() and np.array_equal(h.adj, ~np.eye(h.v, dtype=bool)):
        return "complete", (h.v,)
    mp = _is_complete_multipartite(h) if not loops.any() else None
    if mp and mp[0] == 2:
        return "complete_bipartite", (mp[1],)
    sh = _srg_shape(h)
    if sh:
        return sh
    return "other", ()


def classify_small_spectrum(g: LoopedGraph) -> Classification:
    """Classify by the number s of distinct eigenvalues (exact minimal polynomial).

    Graphs with at most two eigenvalues are accepted even if not regular, since
    two of the five two-eigenvalue shapes mix looped and loopless vertices.
    """
    A = g.matrix()
    s = eigen.distinct_eigenvalue_count(A)
    if s >= 3 and not g.is_regular:
        raise NotRegular("classification with three or more eigenvalues needs a regular graph")
    if s >= 4:
        return Classification(s, "unclassified")
    eig = tuple(sorted(eigen.charpoly_spectrum(A), reverse=True))
    comps = [induced(g, c) for c in components(g)]
    kinds = [_component_kind(h) for h in comps]
    names = {kd for kd, _ in kinds}
    if s == 1:
        return Classification(s, "loops_only" if g.loop_count else "empty", eigenvalues=eig)
    if s == 2:
        if names == {"vertex", "looped_vertex"}:
            case = "a"
        elif "vertex" in names and "looped_complete" in names:
            case = "b"
        elif "looped_vertex" in names and "complete" in names:
            case = "c"
        elif names == {"complete"}:
            case = "d"
        elif names == {"looped_complete"}:
            case = "e"
        else:
            raise AssertionError(f"two eigenvalues but components {sorted(names)}")
        return Classification(s, "two_eigenvalues", case, eig, details={"components": [k for k, _ in kinds]})
    if len(comps) == 1:
        sh = _srg_shape(g)
        if sh is None:
            raise AssertionError("connected regular graph with three eigenvalues is not (modified) strongly regular")
        shape, params = sh
        mp = _is_complete_multipartite(g if shape == "srg" else LoopedGraph(g.adj & ~np.eye(g.v, dtype=bool)))
        details = {}
        if mp:
            details["parts"], details["part_size"] = mp
            shape = "complete_multipartite" if shape == "srg" else "looped_complete_multipartite"
        return Classification(s, shape, None, eig, params, details)
    details = {"components": [list(x) for x in kinds]}
    if names <= {"complete_bipartite", "looped_complete"} and "complete_bipartite" in names:
        sizes = {a[0] for kd, a in kinds}
        if len(sizes) == 1:
            return Classification(s, "disconnected", "1", eig, details=details)
    if names <= {"srg", "modified_srg"} and len(comps) >= 2:
        ok, ls, ks = True, set(), set()
        for kd, (v, kk, lam, mu) in kinds:
            if kd == "srg":
                ok &= lam == mu
                ks.add(kk)
            else:
                ok &= lam == mu - 2
                ks.add(kk + 1)
            ls.add(mu)
        if ok and len(ls) == 1 and len(ks) == 1:
            return Classification(s, "disconnected", "2", eig, details=details)
    return Classification(s, "disconnected", None, eig, details=details)


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    classes: tuple[int, ...]
    family: str  # "F1": the component is one class; "F2": a union of at least two classes


@dataclass(frozen=True)
class Decomposition:
    lam: int
    components: tuple[ComponentInfo, ...]


def decompose_disconnected(g: LoopedGraph, p: Partition, params: Optional[LddgParams] = None) -> Decomposition:
    if params is None:
        params = verify_lddg(g, p)
        if isinstance(params, Refutation):
            raise ValueError(f"not an LDDG: {params.reason}")
    if not params.proper:
        raise ValueError("decomposition needs a proper LDDG")
    comps = components(g)
    if len(comps) < 2:
        raise ValueError("graph is connected")
    if params.lambda2 != 0:
        raise AssertionError(f"disconnected proper LDDG with lambda2={params.lambda2}")
    lab = p.labels(g.v)
    comp_of = np.empty(g.v, dtype=np.int64)
    for i, c in enumerate(comps):
        comp_of[c] = i
    for ci, cls in enumerate(p.classes):
        if len({int(comp_of[x]) for x in cls}) > 1:
            raise ComponentClassStraddle(f"class {ci} meets several components")
    out = []
    for c in comps:
        cls = tuple(sorted({int(lab[x]) for x in c}))
        out.append(ComponentInfo(tuple(c), cls, "F1" if len(cls) == 1 else "F2"))
    return Decomposition(params.lambda1, tuple(out))
