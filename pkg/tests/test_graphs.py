import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussalg.exactcore import DimensionError, Monomial, det_exact
from gaussalg.gauss import algebra_dimension, gauss_generators, relation_report
from gaussalg.graphs import (
    SCAN_CAP,
    LoopedGraph,
    NoGuarantee,
    complete_bipartite,
    conjecture_scan,
    cycle_graph,
    delta_minor,
    edge_ring,
    exists_nonsingular_minor,
    forest_generator,
    from_networkx,
    gauss_from_forests,
    incidence_matrix,
    labeling_condition,
    labeling_order,
    lambda_recursion_table,
    nonbipartite_gauss_supports,
    odd_cycle_every_component,
    path_graph,
    path_lambda,
    rooted_spanning_forests,
    spanning_tree_count,
    spanning_trees,
    support_generator,
)
from gaussalg.reproduce import easy_cycle_listing, parse_set

TRIANGLE = ((1, 2), (2, 3), (1, 3))


@st.composite
def graphs(draw, max_d=6, loops=True):
    d = draw(st.integers(1, max_d))
    pairs = list(itertools.combinations(range(1, d + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    L = draw(st.sets(st.integers(1, d))) if loops else set()
    return LoopedGraph(d, tuple(edges), frozenset(L))


def test_graph_validation():
    with pytest.raises(ValueError):
        LoopedGraph(3, ((1, 4),), frozenset())
    with pytest.raises(ValueError):
        LoopedGraph(3, ((2, 2),), frozenset())
    G = LoopedGraph(3, ((2, 1), (3, 2)), frozenset())
    assert G.edges == ((1, 2), (2, 3))


def test_edge_ring_examples():
    assert edge_ring(LoopedGraph(3, TRIANGLE, frozenset())).gens == parse_set(3, "x1*x2", "x2*x3", "x1*x3")
    assert len(edge_ring(cycle_graph(4, [1]))) == 5
    assert len(edge_ring(complete_bipartite(2, 2, [1]))) == 5
    with pytest.raises(ValueError):
        edge_ring(LoopedGraph(2, (), frozenset()))


# -- odd cycles and minors ---------------------------------------------------


def test_odd_cycle_examples():
    assert odd_cycle_every_component(3, TRIANGLE)
    assert not odd_cycle_every_component(4, cycle_graph(4).edges)
    two = TRIANGLE + ((4, 5), (5, 6), (4, 6))
    assert odd_cycle_every_component(6, two)
    assert abs(det_exact(incidence_matrix(6, two))) == 4


def test_labeling_examples():
    assert labeling_condition({1, 3}, [(1, 2), (2, 3)])
    assert delta_minor({1, 3}, [(1, 2), (2, 3)]) != 0
    assert not labeling_condition({1, 2, 3}, TRIANGLE)
    assert abs(delta_minor({1, 2, 3}, TRIANGLE)) == 2
    assert labeling_condition(set(), [])
    with pytest.raises(ValueError):
        labeling_condition({1}, [])


def test_labeling_order_is_valid():
    V = {1, 3}
    order = labeling_order(V, [(2, 3), (1, 2)])
    covered = set()
    for k, e in enumerate(order, 1):
        covered |= V & set(e)
        assert len(covered) == k


def _all_graphs(max_d):
    for d in range(1, max_d + 1):
        pairs = list(itertools.combinations(range(1, d + 1), 2))
        for k in range(len(pairs) + 1):
            for E in itertools.combinations(pairs, k):
                yield d, E


def test_labeling_lemma_exhaustive():
    # labeling => nonzero minor; on bipartite graphs, the converse too
    for d, E in _all_graphs(4):
        bip = nx.is_bipartite(nx.Graph(list(E))) if E else True
        for k in range(min(d, len(E)) + 1):
            for V in itertools.combinations(range(1, d + 1), k):
                for F in itertools.combinations(E, k):
                    lab = labeling_condition(V, F)
                    nonzero = delta_minor(V, F) != 0
                    if lab:
                        assert nonzero
                    if bip:
                        assert lab == nonzero


def test_nonsingular_minor_examples():
    P3 = path_graph(3)
    E = exists_nonsingular_minor(P3, {2})
    assert E in {((1, 2),), ((2, 3),)}
    E = exists_nonsingular_minor(cycle_graph(4), {1, 3})
    assert E is not None and delta_minor({1, 3}, E) != 0
    with pytest.raises(NoGuarantee):
        exists_nonsingular_minor(P3, {1, 2, 3})
    # within the size bound, but V swallows a component
    with pytest.raises(NoGuarantee):
        exists_nonsingular_minor(LoopedGraph(3, ((1, 2),), frozenset()), {3})


@given(graphs(max_d=6, loops=False), st.data())
def test_nonsingular_minor_always_found(G, data):
    c = len(G.components())
    # keep one vertex of every component outside V
    outside = {data.draw(st.sampled_from(sorted(comp))) for comp in G.components()}
    V = data.draw(st.sets(st.sampled_from(sorted(set(range(1, G.d + 1)) - outside)), max_size=G.d - c)
                  if len(outside) < G.d else st.just(set()))
    E = exists_nonsingular_minor(G, V)
    assert E is not None
    assert len(E) == len(V) and delta_minor(V, E) != 0


def test_tree_nonroot_minor():
    T = path_graph(5)
    assert exists_nonsingular_minor(T, {2, 3, 4, 5}) is not None


# -- forests -------------------------------------------------------------------


def test_forest_examples():
    assert [c.T for c in rooted_spanning_forests(path_graph(3), {1})] == [((1, 2), (2, 3))]
    assert len(rooted_spanning_forests(cycle_graph(4), {1})) == 4
    assert len(rooted_spanning_forests(complete_bipartite(2, 2), {1})) == 4
    assert [c.T for c in rooted_spanning_forests(path_graph(3), {1, 2, 3})] == [()]
    with pytest.raises(ValueError):
        rooted_spanning_forests(path_graph(3), set())


@given(graphs(max_d=6, loops=False), st.data())
def test_forests_are_rooted_spanning_forests(G, data):
    V = data.draw(st.sets(st.integers(1, G.d), min_size=1))
    certs = rooted_spanning_forests(G, V)
    assert len({c.T for c in certs}) == len(certs)
    for c in certs:
        g = nx.Graph()
        g.add_nodes_from(range(1, G.d + 1))
        g.add_edges_from(c.T)
        assert nx.is_forest(g)
        assert all(len(comp & V) == 1 for comp in nx.connected_components(g))
    # brute force count
    want = 0
    for T in itertools.combinations(G.edges, G.d - len(V)):
        g = nx.Graph()
        g.add_nodes_from(range(1, G.d + 1))
        g.add_edges_from(T)
        if nx.is_forest(g) and all(len(comp & V) == 1 for comp in nx.connected_components(g)):
            want += 1
    assert len(certs) == want


def test_forest_generator_formula():
    assert forest_generator(3, {1}, [(1, 2), (2, 3)]) == Monomial((2, 1, 0)) * Monomial((0, 1, 1)) / Monomial((0, 1, 1))


def test_gauss_from_forests_examples():
    assert gauss_from_forests(complete_bipartite(2, 2, [1])) == parse_set(
        4, "x1^3*x3", "x1^3*x4", "x1^2*x2*x3", "x1^2*x2*x4"
    )
    assert gauss_from_forests(path_graph(3, [1, 3])) == parse_set(3, "x1^2*x2", "x2*x3^2", "x1*x3^2", "x1^2*x3")
    assert set(gauss_from_forests(cycle_graph(4, [1]))) == set(easy_cycle_listing(4))


def test_gauss_from_forests_errors():
    with pytest.raises(DimensionError):
        gauss_from_forests(path_graph(3))
    with pytest.raises(ValueError):
        gauss_from_forests(LoopedGraph(3, TRIANGLE, frozenset({1})))


@given(graphs(max_d=5))
def test_forests_match_brute_force(G):
    if not G.is_bipartite() or any(not comp & G.loops for comp in G.components()):
        return
    assert gauss_from_forests(G) == gauss_generators(edge_ring(G)).gens


@given(graphs(max_d=5))
def test_dimension_criterion(G):
    if not G.edges and not G.loops:
        return
    # a component needs a loop unless it carries an odd cycle
    full = all(comp & G.loops or not nx.is_bipartite(G.nx().subgraph(comp)) for comp in G.components())
    assert (algebra_dimension(edge_ring(G)) == G.d) == full


# -- non-bipartite -------------------------------------------------------------


def test_nonbipartite_examples():
    tri = LoopedGraph(3, TRIANGLE, frozenset())
    assert [set(E) for E in nonbipartite_gauss_supports(tri)] == [set(TRIANGLE)]
    assert support_generator(3, TRIANGLE) == Monomial((1, 1, 1))
    pend = LoopedGraph(4, TRIANGLE + ((3, 4),), frozenset())
    (E,) = nonbipartite_gauss_supports(pend)
    assert support_generator(4, E) == Monomial.parse("x1*x2*x3^2", 4)
    for bad in (cycle_graph(4), cycle_graph(3, [1]), LoopedGraph(4, TRIANGLE, frozenset())):
        with pytest.raises(ValueError):
            nonbipartite_gauss_supports(bad)


@pytest.mark.parametrize("g", [nx.complete_graph(4), nx.wheel_graph(5), nx.petersen_graph().subgraph(range(6))])
def test_nonbipartite_supports_match_brute_force(g):
    g = nx.convert_node_labels_to_integers(g, first_label=1)
    if not nx.is_connected(g):
        pytest.skip("disconnected")
    G = from_networkx(g)
    gens = {support_generator(G.d, E) for E in nonbipartite_gauss_supports(G)}
    assert sorted(gens, reverse=True) == list(gauss_generators(edge_ring(G)).gens)


# -- trees and lambda ------------------------------------------------------------


def test_tree_count_examples():
    assert spanning_tree_count(complete_bipartite(2, 2)) == 4
    assert spanning_tree_count(path_graph(5)) == 1
    assert spanning_tree_count(cycle_graph(4)) == 4
    assert spanning_tree_count(LoopedGraph(3, ((1, 2),), frozenset())) == 0


@given(graphs(max_d=6))
def test_matrix_tree_matches_enumeration(G):
    assert spanning_tree_count(G) == len(spanning_trees(G))


def test_lambda_values():
    assert [path_lambda(d) for d in range(1, 8)] == [1, 3, 8, 21, 55, 144, 377]
    with pytest.raises(ValueError):
        path_lambda(0)


def test_lambda_counts_forest_generators():
    for d in range(1, 6):
        assert path_lambda(d) == len(gauss_from_forests(path_graph(d, range(1, d + 1))))


def test_lambda_recursion_table():
    rows = lambda_recursion_table(12)
    assert all(pred is None or pred == lam for _, lam, pred in rows)


# -- scan -------------------------------------------------------------------------


def test_scan_small():
    report = conjecture_scan(5)
    assert not report.counterexamples
    hyp = {(r.d, r.edges) for r in report.rows if r.hypersurface_dim_d_minus_1}
    assert (4, cycle_graph(4).edges) in hyp
    def is_path(r):
        g = nx.Graph(list(r.edges))
        return nx.is_tree(g) and max(dict(g.degree).values()) <= 2

    paths = [r for r in report.rows if r.d >= 3 and is_path(r)]
    assert paths and not any(r.hypersurface_dim_d_minus_1 for r in paths)
    assert "even_cycle" in report.format().splitlines()[0]


def test_scan_cap():
    with pytest.raises(ValueError):
        conjecture_scan(SCAN_CAP + 1)


def test_odd_cycle_dim_d():
    rel = relation_report(gauss_generators(edge_ring(cycle_graph(5, [1]))).gens, witness=False)
    assert (rel.dim, rel.kernel_rank) == (5, 1)
