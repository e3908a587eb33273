"""Undirected graphs in which a vertex may be adjacent to itself.

Conventions: a loop adds exactly 1 to the degree of its vertex, and the
complement flips every adjacency entry including the diagonal, so that
``degree(g, x) + degree(complement(g), x) == v``.

JSON formats
------------
Graph::

    {"v": 5, "adj_rows": ["a8", ...]}

Row ``i`` is the hex encoding of ``ceil(v/8)`` bytes; bit ``j`` of the row
(adjacency of ``i`` and ``j``) is bit ``7 - j % 8`` of byte ``j // 8``, i.e.
most significant bit first (``numpy.packbits`` order).  Padding bits are 0.

Partition::

    {"classes": [[0, 1], [2, 3]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    pass


class PartitionMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LoopedGraph:
    adj: np.ndarray

    def __post_init__(self):
        a = np.array(self.adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphFormatError(f"adjacency must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise GraphFormatError("adjacency matrix is not symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @property
    def v(self) -> int:
        return self.adj.shape[0]

    def __eq__(self, other):
        return isinstance(other, LoopedGraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash(np.packbits(self.adj).tobytes())

    def __repr__(self):
        return f"LoopedGraph(v={self.v}, loops={self.loop_count})"

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitsets (bit j set iff adjacent to j)."""
        packed = np.packbits(self.adj, axis=1, bitorder="little")
        return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)

    @property
    def loop_count(self) -> int:
        return int(np.trace(self.adj))

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @property
    def is_regular(self) -> bool:
        return self.v == 0 or bool((self.degrees == self.degrees[0]).all())

    def matrix(self, dtype=np.int64) -> np.ndarray:
        return self.adj.astype(dtype)

    def neighbours(self, x: int) -> list[int]:
        return np.flatnonzero(self.adj[x]).tolist()

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> LoopedGraph:
        a = np.zeros((v, v), dtype=bool)
        for x, y in edges:
            a[x, y] = a[y, x] = True
        return cls(a)

    def to_json(self) -> dict:
        packed = np.packbits(self.adj, axis=1)
        return {"v": self.v, "adj_rows": [bytes(r).hex() for r in packed]}

    @classmethod
    def from_json(cls, data: dict) -> LoopedGraph:
        try:
            v = int(data["v"])
            rows = data["adj_rows"]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"malformed graph object: {exc}") from None
        if v < 0 or not isinstance(rows, list) or len(rows) != v:
            raise GraphFormatError("adj_rows must list exactly v rows")
        nbytes = (v + 7) // 8
        buf = []
        for r in rows:
            try:
                b = bytes.fromhex(r)
            except (TypeError, ValueError):
                raise GraphFormatError(f"row {r!r} is not hex") from None
            if len(b) != nbytes:
                raise GraphFormatError(f"row {r!r} should encode {nbytes} bytes")
            buf.append(np.frombuffer(b, dtype=np.uint8))
        if v == 0:
            return cls(np.zeros((0, 0), dtype=bool))
        bits = np.unpackbits(np.stack(buf), axis=1)
        if bits[:, v:].any():
            raise GraphFormatError("nonzero padding bits")
        return cls(bits[:, :v].astype(bool))


@dataclass(frozen=True)
class Partition:
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(int(x) for x in c) for c in self.classes))
        seen: set[int] = set()
        for c in self.classes:
            for x in c:
                if x in seen:
                    raise PartitionMismatch(f"vertex {x} occurs in two classes")
                seen.add(x)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def m(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def labels(self, v: int) -> np.ndarray:
        """Class number of each vertex; raises if the classes do not cover range(v)."""
        lab = np.full(v, -1, dtype=np.int64)
        for i, c in enumerate(self.classes):
            for x in c:
                if not 0 <= x < v:
                    raise PartitionMismatch(f"vertex {x} out of range for v={v}")
                lab[x] = i
        if (lab < 0).any():
            raise PartitionMismatch(f"vertices {np.flatnonzero(lab < 0).tolist()[:5]} not covered")
        return lab

    def same_class_matrix(self, v: int) -> np.ndarray:
        lab = self.labels(v)
        return lab[:, None] == lab[None, :]

    def to_json(self) -> dict:
        return {"classes": [list(c) for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> Partition:
        try:
            classes = data["classes"]
            return cls(tuple(tuple(int(x) for x in c) for c in classes))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"malformed partition object: {exc}") from None

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        """Classes ordered by first member."""
        order: dict[int, list[int]] = {}
        for x, lab in enumerate(labels):
            order.setdefault(lab, []).append(x)
        return cls(tuple(tuple(c) for c in order.values()))

    def relabel(self, perm: Sequence[int]) -> Partition:
        """Image of the partition under the vertex map ``x -> perm[x]``."""
        return Partition(tuple(tuple(sorted(perm[x] for x in c)) for c in self.classes))


def degree(g: LoopedGraph, x: int) -> int:
    return int(g.degrees[x])


def complement(g: LoopedGraph) -> LoopedGraph:
    return LoopedGraph(~g.adj)


def common_neighbours(g: LoopedGraph, x: int, y: int) -> int:
    return (g.rows[x] & g.rows[y]).bit_count()


def common_neighbour_matrix(g: LoopedGraph) -> np.ndarray:
    """A @ A as exact integers.

    0/1 products with v < 2**24 are exact in float32, and BLAS is far faster
    than integer matmul.
    """
    dt = np.float32 if g.v < (1 << 24) else np.float64
    a = g.adj.astype(dt)
    return np.rint(a @ a).astype(np.int64)


def n_star(g: LoopedGraph, p: Partition) -> int:
    """Ordered adjacent pairs (loops counted once) inside a single class."""
    if p.size != g.v:
        raise PartitionMismatch(f"partition covers {p.size} vertices, graph has {g.v}")
    same = p.same_class_matrix(g.v)
    return int((g.adj & same).sum())


def disjoint_union(gs: Sequence[LoopedGraph]) -> LoopedGraph:
    total = sum(g.v for g in gs)
    a = np.zeros((total, total), dtype=bool)
    off = 0
    for g in gs:
        a[off:off + g.v, off:off + g.v] = g.adj
        off += g.v
    return LoopedGraph(a)


def permute(g: LoopedGraph, perm: Sequence[int]) -> LoopedGraph:
    """Relabel: vertex x of ``g`` becomes vertex ``perm[x]``."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return LoopedGraph(g.adj[np.ix_(inv, inv)])


def check_permutation(theta: Sequence[int], v: int) -> np.ndarray:
    t = np.asarray(theta, dtype=np.int64)
    if t.shape != (v,) or not np.array_equal(np.sort(t), np.arange(v)):
        raise ValueError("not a permutation of the vertex set")
    return t


def is_automorphism(g: LoopedGraph, theta: Sequence[int]) -> bool:
    t = check_permutation(theta, g.v)
    return bool(np.array_equal(g.adj[np.ix_(t, t)], g.adj))


def components(g: LoopedGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = np.zeros(g.v, dtype=bool)
    out = []
    for s in range(g.v):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in np.flatnonzero(g.adj[x] & ~seen):
                seen[y] = True
                stack.append(int(y))
        out.append(sorted(comp))
    return out


def induced(g: LoopedGraph, vertices: Sequence[int]) -> LoopedGraph:
    idx = np.asarray(vertices, dtype=np.int64)
    return LoopedGraph(g.adj[np.ix_(idx, idx)])


def _refine(adj: np.ndarray, colors: list[int]) -> list[int]:
    while True:
        sig = [
            (colors[x], bool(adj[x, x]), tuple(sorted(colors[y] for y in np.flatnonzero(adj[x]) if y != x)))
            for x in range(len(colors))
        ]
        keys = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [keys[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def are_isomorphic(g: LoopedGraph, h: LoopedGraph) -> bool:
    """Isomorphism test by joint colour refinement plus backtracking; small graphs only."""
    if g.v != h.v or g.loop_count != h.loop_count or int(g.adj.sum()) != int(h.adj.sum()):
        return False
    v = g.v
    both = np.zeros((2 * v, 2 * v), dtype=bool)
    both[:v, :v] = g.adj
    both[v:, v:] = h.adj

    def search(colors: list[int]) -> bool:
        colors = _refine(both, colors)
        cg, ch = colors[:v], colors[v:]
        if sorted(cg) != sorted(ch):
            return False
        if len(set(cg)) == v:
            mapping = {c: i for i, c in enumerate(ch)}
            perm = [mapping[c] for c in cg]
            return bool(np.array_equal(h.adj[np.ix_(perm, perm)], g.adj))
        counts: dict[int, int] = {}
        for c in cg:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c in counts if counts[c] > 1), key=lambda c: (counts[c], c))
        x = cg.index(target)
        fresh = max(colors) + 1
        for y in [i for i, c in enumerate(ch) if c == target]:
            trial = list(colors)
            trial[x] = fresh
            trial[v + y] = fresh
            if search(trial):
                return True
        return False

    return search([0] * (2 * v))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=None, separators=(",", ":"))
