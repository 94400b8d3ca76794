import pytest
from hypothesis import given, settings

from resolvedim.core.errors import GraphTooSmall, InvalidVertex, SetTooSmall
from resolvedim.families.generators import gen_complete
from resolvedim.graph.operations import all_pairs_distances, build_graph
from resolvedim.resolving.kernel import (
    adjacency_representation,
    are_twins,
    doubly_resolves,
    is_adjacency_resolving_set,
    is_doubly_resolving_set,
    is_resolving_set,
    is_strong_resolving_set,
    metric_representation,
    resolves_all_vertices,
    satisfies,
    strongly_resolves,
    twin_classes,
)
from resolvedim.resolving.schemas import InvariantKind
from strategies import graph_and_subset


# ==========================================================
# 📏 Resolución métrica
# ==========================================================

def test_metric_representation(jfg32, jfg32_dm):
    # hoja v_{1,1} (3) vista desde {3, 5, 7}
    assert metric_representation(jfg32, jfg32_dm, 4, [3, 5, 7]) == (2, 3, 3)
    assert metric_representation(jfg32, jfg32_dm, 3, [3, 5, 7]) == (0, 3, 3)


def test_jellyfish_resolving_examples(jfg32, jfg32_dm):
    assert is_resolving_set(jfg32, jfg32_dm, [3, 5, 7])
    assert not is_resolving_set(jfg32, jfg32_dm, [0, 1, 2])


def test_path_endpoint_resolves(path5):
    dm = all_pairs_distances(path5)
    assert is_resolving_set(path5, dm, [0])
    assert not is_resolving_set(path5, dm, [2])


def test_member_validation(jfg32, jfg32_dm):
    with pytest.raises(InvalidVertex):
        is_resolving_set(jfg32, jfg32_dm, [9])
    with pytest.raises(InvalidVertex):
        is_resolving_set(jfg32, jfg32_dm, [3, 3])


# ==========================================================
# ↔️ Resolución doble
# ==========================================================

def test_doubly_resolving_examples(jfg32, jfg32_dm):
    assert is_doubly_resolving_set(jfg32, jfg32_dm, range(3, 9))
    assert not is_doubly_resolving_set(jfg32, jfg32_dm, [3, 5, 7])


def test_doubly_resolves_pair(path5):
    dm = all_pairs_distances(path5)
    # los extremos distinguen doblemente cualquier par de un camino
    assert doubly_resolves(dm, 0, 4, 1, 2)
    assert not doubly_resolves(dm, 0, 1, 2, 3)


def test_doubly_resolving_guards(path5):
    dm = all_pairs_distances(path5)
    with pytest.raises(SetTooSmall):
        is_doubly_resolving_set(path5, dm, [0])
    single = build_graph(1, [])
    with pytest.raises(GraphTooSmall):
        is_doubly_resolving_set(single, all_pairs_distances(single), [0])


# ==========================================================
# 💪 Resolución fuerte
# ==========================================================

def test_strong_resolving_cycle(c4):
    dm = all_pairs_distances(c4)
    assert is_strong_resolving_set(c4, dm, [0, 1])
    assert not is_strong_resolving_set(c4, dm, [0, 2])
    assert strongly_resolves(dm, 0, 1, 2)
    assert not strongly_resolves(dm, 0, 1, 3)


def test_strong_resolving_jellyfish(jfg32, jfg32_dm):
    assert is_strong_resolving_set(jfg32, jfg32_dm, range(3, 8))
    assert not is_strong_resolving_set(jfg32, jfg32_dm, [3, 5, 7])


# ==========================================================
# 🔗 Resolución por adyacencia
# ==========================================================

def test_adjacency_representation(jfg32):
    assert adjacency_representation(jfg32, 0, [0, 1, 3, 5]) == (0, 1, 1, 2)


def test_complete_graph_adjacency(two_edges):
    k4 = gen_complete(4)
    assert is_adjacency_resolving_set(k4, [0, 1, 2])
    assert not is_adjacency_resolving_set(k4, [0, 1])
    # no requiere conexidad
    assert is_adjacency_resolving_set(two_edges, [0, 2])


def test_satisfies_dispatch(jfg32, jfg32_dm):
    assert satisfies(InvariantKind.METRIC, jfg32, jfg32_dm, [3, 5, 7])
    assert satisfies(InvariantKind.ADJACENCY, jfg32, None, range(3, 8))
    with pytest.raises(ValueError):
        satisfies(InvariantKind.STRONG, jfg32, None, [3])


# ==========================================================
# 👯 Gemelos
# ==========================================================

def test_twin_classes(jfg32, octahedron):
    assert twin_classes(jfg32) == [(3, 4), (5, 6), (7, 8)]
    assert twin_classes(octahedron) == [(0, 1), (2, 3), (4, 5)]
    assert twin_classes(gen_complete(4)) == [(0, 1, 2, 3)]
    assert are_twins(jfg32, 3, 4)
    assert not are_twins(jfg32, 0, 1)


# ==========================================================
# 🎲 Propiedades
# ==========================================================

@settings(max_examples=80, deadline=None)
@given(graph_and_subset())
def test_resolving_shortcut_matches_full_comparison(data):
    g, w = data
    dm = all_pairs_distances(g)
    assert is_resolving_set(g, dm, w) == resolves_all_vertices(g, dm, w)


@settings(max_examples=80, deadline=None)
@given(graph_and_subset())
def test_stronger_predicates_imply_resolving(data):
    g, w = data
    dm = all_pairs_distances(g)
    resolving = is_resolving_set(g, dm, w)
    if is_strong_resolving_set(g, dm, w) or is_adjacency_resolving_set(g, w):
        assert resolving
    if len(w) >= 2 and is_doubly_resolving_set(g, dm, w):
        assert resolving


@settings(max_examples=80, deadline=None)
@given(graph_and_subset())
def test_predicates_are_monotone(data):
    g, w = data
    dm = all_pairs_distances(g)
    everything = tuple(g.vertices)
    for kind in InvariantKind:
        if kind is InvariantKind.DOUBLY and len(w) < 2:
            continue
        if satisfies(kind, g, dm, w):
            assert satisfies(kind, g, dm, everything)
            extra = next((v for v in everything if v not in w), None)
            if extra is not None:
                assert satisfies(kind, g, dm, w + (extra,))
