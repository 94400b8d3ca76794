"""
Comparación de la búsqueda con poda contra el oráculo sin poda sobre un
corpus fijo de grafos aleatorios conexos.
"""

import networkx as nx
import pytest
from hypothesis import given, settings

from resolvedim.graph.operations import all_pairs_distances, build_graph
from resolvedim.resolving.kernel import (
    is_adjacency_resolving_set,
    is_resolving_set,
)
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.mmd import min_strong_resolving_via_mmd
from resolvedim.solvers.search import naive_minimum, pruned_minimum, solve
from strategies import connected_graphs

CORPUS_SIZE = 200


def _corpus() -> list:
    graphs = []
    seed = 0
    while len(graphs) < CORPUS_SIZE:
        n = 4 + seed % 6
        nxg = nx.gnp_random_graph(n, 0.45, seed=seed)
        seed += 1
        if nx.is_connected(nxg):
            graphs.append(build_graph(n, nxg.edges))
    return graphs


CORPUS = _corpus()


@pytest.mark.slow
@pytest.mark.parametrize("kind", list(InvariantKind))
def test_pruned_search_matches_oracle(kind):
    for g in CORPUS:
        dm = all_pairs_distances(g)
        naive = naive_minimum(g, dm, kind)
        pruned = pruned_minimum(g, dm, kind)
        assert pruned.value == naive.value, g.edges
        assert tuple(pruned.witness) == tuple(naive.witness), g.edges


@pytest.mark.slow
def test_mmd_cover_matches_oracle():
    for g in CORPUS:
        dm = all_pairs_distances(g)
        assert min_strong_resolving_via_mmd(g, dm).value == naive_minimum(g, dm, InvariantKind.STRONG).value


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=8))
def test_invariant_chain(g):
    dm = all_pairs_distances(g)
    values = {kind: solve(g, kind, dm=dm).value for kind in InvariantKind}
    beta = values[InvariantKind.METRIC]
    assert values[InvariantKind.DOUBLY] >= beta
    assert values[InvariantKind.STRONG] >= beta
    assert values[InvariantKind.ADJACENCY] >= beta
    assert values[InvariantKind.ADJACENCY] <= g.vertex_count - 1


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=8))
def test_doubly_witness_is_resolving(g):
    dm = all_pairs_distances(g)
    witness = solve(g, InvariantKind.DOUBLY, dm=dm).witness
    assert is_resolving_set(g, dm, witness)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_vertices=3, max_vertices=8))
def test_diameter_two_adjacency_equals_metric(g):
    dm = all_pairs_distances(g)
    if dm.diameter != 2:
        return
    metric = solve(g, InvariantKind.METRIC, dm=dm)
    assert solve(g, InvariantKind.ADJACENCY).value == metric.value
    assert is_adjacency_resolving_set(g, metric.witness)
