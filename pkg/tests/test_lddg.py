from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loopddg import constructions as C
from loopddg.eigen import Surd, charpoly_spectrum
from loopddg.forms import standard_polarity
from loopddg.gf import GF
from loopddg.graph import LoopedGraph, Partition, complement, disjoint_union, permute
from loopddg.lddg import (
    ComponentClassStraddle,
    Improper,
    InconsistentTrace,
    LddgParams,
    NegativeParameter,
    NotApplicable,
    NotAutomorphism,
    NotInvolution,
    NotLddg,
    NotRegular,
    Refutation,
    SymmetricDesignStructure,
    TrivialUnionStructure,
    UnequalClassSizes,
    certificate,
    classify_small_spectrum,
    complement_params,
    decompose_disconnected,
    dual_seidel_switch,
    exact_spectrum,
    find_canonical_partition,
    quotient_matrix,
    recognize_lambda1_equals_k,
    spectrum_from_params,
    switch_counts,
    verify_a_squared_identity,
    verify_lddg,
    verify_quotient_identity,
)
from conftest import (
    clebsch,
    complete,
    complete_multipartite,
    components_partition,
    kkn_parts,
    ktn_parts,
    looped_complete,
    petersen,
    rook_4x4,
    single,
    union_with_parts,
)


def two_looped_k2():
    return union_with_parts(ktn_parts(2), ktn_parts(2))


def cycle(n: int) -> LoopedGraph:
    a = np.zeros((n, n), dtype=bool)
    for i in range(n):
        a[i, (i + 1) % n] = a[(i + 1) % n, i] = True
    return LoopedGraph(a)


# -- parameter records --------------------------------------------------------


def test_params_reject_bad_tuples():
    with pytest.raises(ValueError):
        LddgParams(8, 4, 0, 2, 3, 2)
    with pytest.raises(ValueError):
        LddgParams(8, 4, 1, 2, 4, 2)


def test_proper_flag():
    assert LddgParams(4, 2, 2, 0, 2, 2).proper
    assert not LddgParams(4, 3, 2, 2, 2, 2).proper
    assert not LddgParams(3, 2, 0, 1, 3, 1).proper


# -- verify_lddg --------------------------------------------------------------


def test_verify_two_looped_k2():
    g, p = two_looped_k2()
    res = verify_lddg(g, p)
    assert res.tuple() == (4, 2, 2, 0, 2, 2) and res.proper and res.L == 4


def test_verify_k22():
    g, p = kkn_parts(2)
    res = verify_lddg(g, p)
    assert res.tuple() == (4, 2, 2, 0, 2, 2) and res.proper and res.L == 0


def test_verify_k3_singleton_classes_refuted():
    res = verify_lddg(complete(3), components_partition([1, 1, 1]))
    assert isinstance(res, Refutation) and not res


def test_verify_single_class_refuted():
    res = verify_lddg(looped_complete(4), components_partition([4]))
    assert isinstance(res, Refutation)


def test_verify_unequal_class_sizes():
    with pytest.raises(UnequalClassSizes):
        verify_lddg(complete(3), components_partition([2, 1]))


def test_refutation_names_first_bad_pair():
    g, _ = kkn_parts(2)
    res = verify_lddg(g, Partition(((0, 2), (1, 3))))
    assert isinstance(res, Refutation)
    # within-class (0,2) has 0 common neighbours; cross pairs (0,1) = 2 and (0,3) = 0 disagree
    assert res.pair == (0, 3) and res.expected == 2 and res.found == 0
    assert res.to_json()["pair"] == [0, 3]


def test_refutation_for_non_regular():
    g = LoopedGraph(np.array([[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]], dtype=bool))
    res = verify_lddg(g, components_partition([2, 2]))
    assert res.reason == "not regular" and res.pair == (0, 1)


# -- canonical partition ------------------------------------------------------


def test_canonical_partition_example_graph(ex47):
    _, g, p = ex47
    found = find_canonical_partition(g)
    assert not isinstance(found, (NotLddg, Improper))
    q, params = found
    assert params.tuple() == (8, 4, 0, 2, 4, 2)
    assert sorted(q.classes) == sorted(p.classes)


def test_canonical_partition_k4_improper():
    assert find_canonical_partition(complete(4)) == Improper(4, 3, 2)
    assert find_canonical_partition(looped_complete(4)) == Improper(4, 4, 4)


def test_canonical_partition_path_not_regular():
    g = LoopedGraph(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool))
    with pytest.raises(NotRegular):
        find_canonical_partition(g)


def test_canonical_partition_petersen_not_lddg():
    assert isinstance(find_canonical_partition(petersen()), NotLddg)


def test_canonical_partition_hexagon_parity_classes():
    q, params = find_canonical_partition(cycle(6))
    assert params.tuple() == (6, 2, 1, 0, 2, 3)
    assert sorted(q.classes) == [(0, 2, 4), (1, 3, 5)]


def test_canonical_partition_on_grid(small_grid):
    for e in small_grid:
        found = find_canonical_partition(e.graph)
        assert not isinstance(found, (NotLddg, Improper)), e.label
        q, params = found
        assert params == verify_lddg(e.graph, e.partition), e.label
        assert sorted(q.classes) == sorted(e.partition.classes), e.label


# -- complements --------------------------------------------------------------


@pytest.mark.parametrize("params,expected", [
    ((8, 4, 0, 2, 4, 2), (8, 4, 0, 2, 4, 2)),
    ((4, 2, 2, 0, 2, 2), (4, 2, 2, 0, 2, 2)),
    ((14, 6, 6, 2, 7, 2), (14, 8, 8, 4, 7, 2)),
])
def test_complement_params_examples(params, expected):
    assert complement_params(LddgParams(*params)).tuple() == expected


def test_complement_params_of_design_graph_matches_graph():
    g, p = C.build_symmetric_design_lddg(C.fano_incidence(), 2)
    assert verify_lddg(complement(g), p) == complement_params(verify_lddg(g, p))


def test_complement_params_negative():
    with pytest.raises(NegativeParameter):
        complement_params(LddgParams(4, 3, 6, 0, 2, 2))


def test_complement_transport_on_grid(small_grid):
    for e in small_grid:
        params = verify_lddg(e.graph, e.partition)
        assert complement_params(complement_params(params)) == params
        assert verify_lddg(complement(e.graph), e.partition) == complement_params(params), e.label


# -- spectrum -----------------------------------------------------------------


def spec_of(params, L, ns):
    return spectrum_from_params(LddgParams(*params, L=L, n_star=ns)).multiset()


def test_spectrum_all_loops_example():
    assert spec_of((8, 4, 0, 2, 4, 2), 8, 8) == {Surd(4): 1, Surd(2): 3, Surd(0): 3, Surd(-2): 1}


def test_spectrum_loopless_example():
    assert spec_of((8, 4, 0, 2, 4, 2), 0, 8) == {Surd(4): 1, Surd(2): 1, Surd(0): 3, Surd(-2): 3}


def test_spectrum_irrational_example():
    # sqrt(3) pair splits evenly over the m(n-1) = 4 fibre dimensions
    spec = spectrum_from_params(LddgParams(8, 3, 0, 1, 4, 2, L=2, n_star=4))
    assert spec.f == (1, 2, 2, 1, 2)
    assert str(spec) == "3^1 sqrt(3)^2 1^1 -1^2 -sqrt(3)^2"


def test_spectrum_irrational_example_matches_graph():
    g, p = C.build_family2(C.default_family2_config(standard_polarity("orthogonal", 3, GF(3))))
    params = verify_lddg(g, p)
    assert params.tuple() == (8, 3, 0, 1, 4, 2)
    assert charpoly_spectrum(g.matrix()) == spectrum_from_params(params).multiset()


def test_spectrum_degenerate_merges():
    spec = spectrum_from_params(LddgParams(4, 2, 2, 0, 2, 2, L=4, n_star=8))
    assert spec.f[1] is None and spec.f12 == 2
    assert spec.multiset() == {Surd(2): 2, Surd(0): 2}


def test_spectrum_inconsistent_trace():
    with pytest.raises(InconsistentTrace):
        spectrum_from_params(LddgParams(8, 4, 0, 2, 4, 2, L=1, n_star=8))
    with pytest.raises(InconsistentTrace):
        spectrum_from_params(LddgParams(8, 3, 0, 1, 4, 2, L=3, n_star=4))


def test_spectrum_needs_loops():
    with pytest.raises(ValueError):
        spectrum_from_params(LddgParams(8, 4, 0, 2, 4, 2))


def test_spectrum_matches_charpoly_on_grid(small_grid):
    for e in small_grid:
        params = verify_lddg(e.graph, e.partition)
        assert charpoly_spectrum(e.graph.matrix()) == spectrum_from_params(params).multiset(), e.label


def test_exact_spectrum_methods_agree(ex47):
    _, g, p = ex47
    params = verify_lddg(g, p)
    a, ma = exact_spectrum(g, p, params, method="charpoly")
    b, mb = exact_spectrum(g, p, params, method="moments")
    assert (ma, mb) == ("charpoly", "moments") and a == b
    with pytest.raises(ValueError):
        exact_spectrum(g, method="moments")
    with pytest.raises(ValueError):
        exact_spectrum(g, method="svd")


# -- matrix identities ----------------------------------------------------------


def test_a_squared_identity_examples(ex47):
    _, g, p = ex47
    assert verify_a_squared_identity(g, p, verify_lddg(g, p))
    g2, p2 = two_looped_k2()
    assert verify_a_squared_identity(g2, p2, verify_lddg(g2, p2))
    k22, _ = kkn_parts(2)
    assert not verify_a_squared_identity(k22, Partition(((0, 2), (1, 3))), LddgParams(4, 2, 2, 0, 2, 2))
    assert not verify_a_squared_identity(petersen(), p, verify_lddg(g, p))


def test_quotient_identity_examples(ex47):
    _, g, p = ex47
    assert verify_quotient_identity(g, p, verify_lddg(g, p))
    k22, pk = kkn_parts(2)
    assert quotient_matrix(k22, pk) == [[0, 2], [2, 0]]
    assert verify_quotient_identity(k22, pk, verify_lddg(k22, pk))
    g2, p2 = two_looped_k2()
    assert quotient_matrix(g2, p2) == [[Fraction(2), 0], [0, Fraction(2)]]
    assert verify_quotient_identity(g2, p2, verify_lddg(g2, p2))


def test_certificate_refuted():
    cert = certificate(complete(3), components_partition([1, 1, 1]))
    assert cert["passed"] is False and cert["refutation"]["reason"]


def test_certificate_example(ex47):
    _, g, p = ex47
    cert = certificate(g, p)
    assert cert["passed"], cert["checks"]
    assert cert["spectrum"] == "4^1 2^3 0^3 -2^1"
    assert cert["params"]["L"] == 8 and cert["params"]["n_star"] == 8


# -- dual Seidel switching ------------------------------------------------------


def test_switch_identity_is_noop(ex47):
    _, g, _ = ex47
    assert dual_seidel_switch(g, list(range(g.v))) == g


def test_switch_k22_swap_within_part():
    g, _ = kkn_parts(2)
    assert dual_seidel_switch(g, [1, 0, 2, 3]) == g


def test_switch_transvection_example(ex47):
    cfg, g, p = ex47
    invs = C.family1_involutions(cfg)
    assert invs
    for name, theta in invs:
        counts = switch_counts(g, theta)
        h = dual_seidel_switch(g, theta)
        assert np.array_equal(h.adj, h.adj.T)
        res = verify_lddg(h, p)
        assert res.tuple() == (8, 4, 0, 2, 4, 2), name
        assert res.L == counts.predicted_loops == counts.N + counts.A1 - counts.A2


def test_switch_rejects_non_automorphism():
    g, _ = kkn_parts(2)
    with pytest.raises(NotAutomorphism):
        dual_seidel_switch(g, [2, 1, 0, 3])


def test_switch_rejects_non_involution():
    with pytest.raises(NotInvolution):
        dual_seidel_switch(looped_complete(3), [1, 2, 0])


def test_switch_swapping_looped_with_bipartite_classes():
    # swapping the two parts of K_{2,2} moves the graph onto twins: loops appear
    g, p = kkn_parts(2)
    theta = [2, 3, 0, 1]
    counts = switch_counts(g, theta)
    h = dual_seidel_switch(g, theta)
    assert (counts.N, counts.A1, counts.A2) == (0, 4, 0)
    assert h.loop_count == 4
    assert verify_lddg(h, p).tuple() == (4, 2, 2, 0, 2, 2)


@st.composite
def trivial_union_and_involution(draw):
    m1 = draw(st.integers(0, 3))
    m2 = draw(st.integers(0, 2))
    if m1 + 2 * m2 < 2:
        m1 = 2
    n = draw(st.integers(2, 4))
    g, p = C.build_trivial_union(m1, m2, n)
    theta = list(range(g.v))
    # swap twins inside classes, and optionally the two sides of each K_{n,n}
    for c in p.classes:
        if draw(st.booleans()):
            a, b = c[0], c[1]
            theta[a], theta[b] = theta[b], theta[a]
    for j in range(m2):
        if draw(st.booleans()):
            A, B = p.classes[m1 + 2 * j], p.classes[m1 + 2 * j + 1]
            for a, b in zip(A, B):
                theta[a], theta[b] = theta[b], theta[a]
    return g, p, theta


@settings(max_examples=60, deadline=None)
@given(trivial_union_and_involution())
def test_switch_preserves_parameters_random(gpt):
    g, p, theta = gpt
    t = np.array(theta)
    if not (np.array_equal(t[t], np.arange(g.v)) and np.array_equal(g.adj[np.ix_(t, t)], g.adj)):
        return
    before = verify_lddg(g, p)
    h = dual_seidel_switch(g, theta)
    after = verify_lddg(h, p)
    assert after.tuple() == before.tuple()
    assert after.L == switch_counts(g, theta).predicted_loops


# -- recognizers ----------------------------------------------------------------


def test_recognize_fano_design():
    g, p = C.build_symmetric_design_lddg(C.fano_incidence(), 2)
    s = recognize_lambda1_equals_k(g, p)
    assert isinstance(s, SymmetricDesignStructure)
    assert (s.m, s.l1, s.l2) == (7, 3, 1)
    assert np.array_equal(np.array(s.incidence), C.fano_incidence())


def test_recognize_trivial_examples():
    assert recognize_lambda1_equals_k(*two_looped_k2()) == TrivialUnionStructure(2, 0, 2)
    assert recognize_lambda1_equals_k(*kkn_parts(2)) == TrivialUnionStructure(0, 1, 2)


@pytest.mark.parametrize("m1,m2,n", [(2, 0, 2), (0, 1, 3), (1, 1, 2), (3, 2, 2), (0, 3, 4), (5, 0, 3)])
def test_recognize_all_trivial_unions(m1, m2, n):
    g, p = C.build_trivial_union(m1, m2, n)
    assert recognize_lambda1_equals_k(g, p) == TrivialUnionStructure(m1, m2, n)


def test_recognize_not_applicable(ex47):
    _, g, p = ex47
    with pytest.raises(NotApplicable):
        recognize_lambda1_equals_k(g, p)
    with pytest.raises(NotApplicable):
        recognize_lambda1_equals_k(complete(3), components_partition([1, 1, 1]))


# -- classification -------------------------------------------------------------


def test_classify_s1():
    assert classify_small_spectrum(LoopedGraph(np.zeros((3, 3), dtype=bool))).shape == "empty"
    c = classify_small_spectrum(LoopedGraph(np.eye(3, dtype=bool)))
    assert (c.s, c.shape) == (1, "loops_only")


TWO_EIGENVALUE_CASES = [
    ("a", lambda: disjoint_union([single(False), single(True)]), (1, 0)),
    ("b", lambda: disjoint_union([looped_complete(2), single(False)]), (2, 0)),
    ("c", lambda: disjoint_union([complete(2), single(True)]), (1, -1)),
    ("d", lambda: disjoint_union([complete(3), complete(3)]), (2, -1)),
    ("e", lambda: looped_complete(3), (3, 0)),
]


@pytest.mark.parametrize("case,build,eig", TWO_EIGENVALUE_CASES, ids=[c[0] for c in TWO_EIGENVALUE_CASES])
def test_classify_two_eigenvalue_shapes(case, build, eig):
    c = classify_small_spectrum(build())
    assert (c.s, c.shape, c.case) == (2, "two_eigenvalues", case)
    assert c.eigenvalues == tuple(Surd(x) for x in eig)


def test_classify_petersen_srg():
    c = classify_small_spectrum(petersen())
    assert (c.s, c.shape, c.srg) == (3, "srg", (10, 3, 0, 1))


def test_classify_looped_petersen_modified_srg():
    g = LoopedGraph(petersen().adj | np.eye(10, dtype=bool))
    c = classify_small_spectrum(g)
    assert (c.s, c.shape, c.srg) == (3, "modified_srg", (10, 3, 0, 1))


def test_classify_complete_tripartite():
    c = classify_small_spectrum(complete_multipartite(3, 2))
    assert (c.s, c.shape) == (3, "complete_multipartite")
    assert c.eigenvalues == (Surd(4), Surd(0), Surd(-2))
    assert c.details == {"parts": 3, "part_size": 2}


def test_classify_looped_complete_tripartite():
    c = classify_small_spectrum(complete_multipartite(3, 2, loops=True))
    assert (c.s, c.shape) == (3, "looped_complete_multipartite")
    assert c.eigenvalues == (Surd(5), Surd(1), Surd(-1))


def test_classify_disconnected_case_1():
    g, _ = union_with_parts(kkn_parts(2), ktn_parts(2))
    c = classify_small_spectrum(g)
    assert (c.s, c.shape, c.case) == (3, "disconnected", "1")


def test_classify_disconnected_case_2_mixed():
    # rook graph srg(16,6,2,2) beside the looped Clebsch graph: both 6-regular, mu = 2
    g = disjoint_union([rook_4x4(), clebsch(loops=True)])
    c = classify_small_spectrum(g)
    assert (c.s, c.shape, c.case) == (3, "disconnected", "2")
    assert c.eigenvalues == (Surd(6), Surd(2), Surd(-2))


def test_classify_disconnected_neither_case():
    c = classify_small_spectrum(disjoint_union([petersen(), petersen()]))
    assert (c.s, c.shape, c.case) == (3, "disconnected", None)


def test_classify_unclassified_and_not_regular():
    assert classify_small_spectrum(cycle(6)).shape == "unclassified"
    path = LoopedGraph(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool))
    with pytest.raises(NotRegular):
        classify_small_spectrum(path)


# -- disconnected decomposition -------------------------------------------------


DECOMPOSITION_FIXTURES = [
    ("k22+kt2", lambda: union_with_parts(kkn_parts(2), ktn_parts(2)), ["F2", "F1"]),
    ("3kt2", lambda: union_with_parts(ktn_parts(2), ktn_parts(2), ktn_parts(2)), ["F1", "F1", "F1"]),
    ("2k22", lambda: union_with_parts(kkn_parts(2), kkn_parts(2)), ["F2", "F2"]),
    ("trivial(2,1,3)", lambda: C.build_trivial_union(2, 1, 3), ["F1", "F1", "F2"]),
    ("kt3+k33+kt3", lambda: union_with_parts(ktn_parts(3), kkn_parts(3), ktn_parts(3)), ["F1", "F2", "F1"]),
]


@pytest.mark.parametrize("name,build,families", DECOMPOSITION_FIXTURES, ids=[d[0] for d in DECOMPOSITION_FIXTURES])
def test_decompose_fixture_unions(name, build, families):
    g, p = build()
    d = decompose_disconnected(g, p)
    assert [c.family for c in d.components] == families
    assert d.lam == verify_lddg(g, p).lambda1
    for c in d.components:
        assert len(c.classes) == (1 if c.family == "F1" else 2)


def test_decompose_errors(ex47):
    _, g, p = ex47
    with pytest.raises(ValueError):
        decompose_disconnected(g, p)
    g2, p2 = two_looped_k2()
    with pytest.raises(ComponentClassStraddle):
        decompose_disconnected(g2, Partition(((0, 2), (1, 3))), verify_lddg(g2, p2))


# -- properties over the grid -----------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_relabeling_preserves_certificate(small_grid, data):
    e = data.draw(st.sampled_from(small_grid))
    perm = data.draw(st.permutations(range(e.graph.v)))
    h, q = permute(e.graph, perm), e.partition.relabel(perm)
    assert verify_lddg(h, q) == verify_lddg(e.graph, e.partition)
    assert verify_a_squared_identity(h, q, verify_lddg(h, q))
    assert verify_quotient_identity(h, q, verify_lddg(h, q))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_trace_identities(small_grid, data):
    e = data.draw(st.sampled_from(small_grid))
    g = e.graph
    A = g.matrix().astype(np.int64)
    assert int(np.trace(A)) == g.loop_count
    assert int(np.trace(A @ A)) == g.v * int(g.degrees[0])
