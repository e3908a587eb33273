"""Shared fixtures: small hand-built graphs and session-cached construction grids."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np
import pytest

from loopddg import constructions as C
from loopddg.graph import LoopedGraph, Partition, disjoint_union
from loopddg.lddg import LddgParams, certificate

FAMILY1_Q = (2, 3, 4, 5)
FAMILY1_M = (3, 4, 5, 6)
FAMILY2_Q = (3, 4, 5)
FAMILY2_M = (3, 4, 5)


# -- hand-built graphs --------------------------------------------------------


def looped_complete(n: int) -> LoopedGraph:
    return LoopedGraph(np.ones((n, n), dtype=bool))


def complete(n: int) -> LoopedGraph:
    return LoopedGraph(~np.eye(n, dtype=bool))


def complete_bipartite(n: int) -> LoopedGraph:
    a = np.zeros((2 * n, 2 * n), dtype=bool)
    a[:n, n:] = a[n:, :n] = True
    return LoopedGraph(a)


def complete_multipartite(parts: int, size: int, loops: bool = False) -> LoopedGraph:
    lab = np.repeat(np.arange(parts), size)
    a = lab[:, None] != lab[None, :]
    if loops:
        np.fill_diagonal(a, True)
    return LoopedGraph(a)


def single(loop: bool) -> LoopedGraph:
    return LoopedGraph(np.array([[loop]]))


def rook_4x4() -> LoopedGraph:
    """K4 x K4 line graph: strongly regular (16, 6, 2, 2)."""
    cells = list(product(range(4), repeat=2))
    return LoopedGraph(np.array([[a != b and (a[0] == b[0] or a[1] == b[1]) for b in cells] for a in cells]))


def clebsch(loops: bool = False) -> LoopedGraph:
    """Folded 5-cube: strongly regular (16, 5, 0, 2)."""
    a = np.array([[bin(x ^ y).count("1") in (1, 4) for y in range(16)] for x in range(16)])
    if loops:
        np.fill_diagonal(a, True)
    return LoopedGraph(a)


def petersen() -> LoopedGraph:
    from itertools import combinations
    pairs = list(combinations(range(5), 2))
    return LoopedGraph(np.array([[not set(a) & set(b) for b in pairs] for a in pairs]))


def components_partition(sizes) -> Partition:
    out, off = [], 0
    for s in sizes:
        out.append(tuple(range(off, off + s)))
        off += s
    return Partition(tuple(out))


def union_with_parts(*pieces: tuple[LoopedGraph, Partition]) -> tuple[LoopedGraph, Partition]:
    g = disjoint_union([h for h, _ in pieces])
    classes, off = [], 0
    for h, p in pieces:
        classes += [tuple(x + off for x in c) for c in p.classes]
        off += h.v
    return g, Partition(tuple(classes))


def kkn_parts(n: int) -> tuple[LoopedGraph, Partition]:
    return complete_bipartite(n), components_partition([n, n])


def ktn_parts(n: int) -> tuple[LoopedGraph, Partition]:
    return looped_complete(n), components_partition([n])


# -- grids --------------------------------------------------------------------


@dataclass
class GridEntry:
    family: str
    label: str
    config: object
    graph: LoopedGraph
    partition: Partition
    expected: LddgParams
    expected_complement: LddgParams
    expected_loops: int
    _cert: Optional[dict] = None

    @property
    def cert(self) -> dict:
        if self._cert is None:
            self._cert = certificate(self.graph, self.partition)
        return self._cert


def _family1_grid() -> list[GridEntry]:
    out = []
    for q in FAMILY1_Q:
        for m in FAMILY1_M:
            for cfg in C.family1_configs(q, m):
                g, p = C.build_family1(cfg)
                out.append(GridEntry("family1", f"{cfg.zeta.label} q={q} m={m} dim={cfg.dim_label}", cfg, g, p,
                                     C.expected_family1_params(cfg), C.expected_family1_complement_params(cfg),
                                     C.expected_family1_loops(cfg)))
    return out


def _family2_grid() -> list[GridEntry]:
    out = []
    for q in FAMILY2_Q:
        for m in FAMILY2_M:
            for cfg in C.family2_configs(q, m):
                g, p = C.build_family2(cfg)
                out.append(GridEntry("family2", f"{cfg.zeta.label} q={q} m={m} {cfg.dim_label}", cfg, g, p,
                                     C.family2_params(q, m), C.family2_complement_params(q, m),
                                     C.expected_family2_loops(cfg)))
    return out


@pytest.fixture(scope="session")
def family1_grid() -> list[GridEntry]:
    return _family1_grid()


@pytest.fixture(scope="session")
def family2_grid() -> list[GridEntry]:
    return _family2_grid()


@pytest.fixture(scope="session")
def all_grid(family1_grid, family2_grid) -> list[GridEntry]:
    return family1_grid + family2_grid


@pytest.fixture(scope="session")
def small_grid(family1_grid, family2_grid) -> list[GridEntry]:
    return [e for e in family1_grid + family2_grid if e.graph.v <= 130]


@pytest.fixture
def ex47():
    """Symplectic PG(3,2) with π a point: the (8,4,0,2,4,2) graph with a loop everywhere."""
    from loopddg.forms import standard_polarity
    from loopddg.gf import GF
    z = standard_polarity("symplectic", 4, GF(2))
    cfg = C.Family1Config(z, C.isotropic_subspace(z, 1))
    g, p = C.build_family1(cfg)
    return cfg, g, p
