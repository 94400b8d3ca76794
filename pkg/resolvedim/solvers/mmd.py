"""
solvers/mmd.py
--------------
Segunda vía para la dimensión métrica fuerte.

Un conjunto es fuertemente resolvente si y solo si cubre todas las aristas
del grafo de pares mutuamente más distantes (MMD), de modo que
sdim = cobertura de vértices mínima de ese grafo. La cobertura se calcula
con branch and bound exacto.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable

from resolvedim.core import config
from resolvedim.core.errors import GraphTooSmall, TooLargeForCover
from resolvedim.graph.operations import all_pairs_distances
from resolvedim.models.models import DistanceMatrix, Graph, VertexSet
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.schemas import SolveMethod, SolveResult

logger = logging.getLogger(__name__)


# ==========================================================
# 📐 Pares mutuamente más distantes
# ==========================================================

def is_mmd_pair(g: Graph, dm: DistanceMatrix, u: int, v: int) -> bool:
    d = dm.d
    distance = d[u, v]
    return all(d[x, v] <= distance for x in g.neighbors(u)) and all(
        d[u, y] <= distance for y in g.neighbors(v)
    )


def mmd_pairs(g: Graph, dm: DistanceMatrix) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in g.vertices
        for v in range(u + 1, g.vertex_count)
        if is_mmd_pair(g, dm, u, v)
    ]


def mmd_vertex_count(g: Graph, dm: DistanceMatrix) -> int:
    return len({v for pair in mmd_pairs(g, dm) for v in pair})


# ==========================================================
# 🌳 Cobertura de vértices mínima (branch and bound)
# ==========================================================

def _remove(adjacency: dict[int, set[int]], v: int) -> None:
    for w in adjacency.pop(v, set()):
        adjacency[w].discard(v)
        if not adjacency[w]:
            del adjacency[w]


def _matching_bound(adjacency: dict[int, set[int]]) -> int:
    # un emparejamiento maximal acota por abajo cualquier cobertura
    matched: set[int] = set()
    size = 0
    for u in sorted(adjacency):
        if u in matched:
            continue
        for w in sorted(adjacency[u]):
            if w not in matched:
                matched.update((u, w))
                size += 1
                break
    return size


def minimum_vertex_cover(edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], int]:
    """
    Cobertura de vértices mínima de un grafo dado por sus aristas.

    Retorna:
    - `(cobertura ordenada, nodos del árbol de búsqueda visitados)`.

    Errores:
    - `TooLargeForCover` si el grafo tiene más de `COVER_MAX_VERTICES` vértices
      no aislados.
    """
    adjacency: dict[int, set[int]] = {}
    for u, v in edges:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)

    limit = config.COVER_MAX_VERTICES
    if len(adjacency) > limit:
        raise TooLargeForCover(f"La cobertura exacta admite hasta {limit} vértices ({len(adjacency)})")

    best: list[int] = sorted(adjacency)
    nodes = 0

    def branch(adj: dict[int, set[int]], chosen: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1

        # Reducción de grado 1: conviene tomar al vecino de la hoja
        while True:
            leaf = next((v for v in sorted(adj) if len(adj[v]) == 1), None)
            if leaf is None:
                break
            (neighbor,) = adj[leaf]
            chosen = chosen + [neighbor]
            _remove(adj, neighbor)

        if not adj:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        if len(chosen) + _matching_bound(adj) >= len(best):
            return

        v = max(sorted(adj), key=lambda x: len(adj[x]))

        # Rama 1: v entra en la cobertura
        with_v = {x: set(nbrs) for x, nbrs in adj.items()}
        _remove(with_v, v)
        branch(with_v, chosen + [v])

        # Rama 2: v queda afuera, entran todos sus vecinos
        neighbors = sorted(adj[v])
        without_v = {x: set(nbrs) for x, nbrs in adj.items()}
        for w in neighbors:
            _remove(without_v, w)
        branch(without_v, chosen + neighbors)

    branch({x: set(nbrs) for x, nbrs in adjacency.items()}, [])
    return tuple(best), nodes


def min_strong_resolving_via_mmd(g: Graph, dm: DistanceMatrix | None = None) -> SolveResult:
    if g.vertex_count < 2:
        raise GraphTooSmall(f"Las invariantes requieren al menos 2 vértices (n={g.vertex_count})")
    dm = dm if dm is not None else all_pairs_distances(g)

    started = time.perf_counter()
    pairs = mmd_pairs(g, dm)
    cover, nodes = minimum_vertex_cover(pairs)
    elapsed_ms = (time.perf_counter() - started) * 1000
    logger.info(
        "sdim=%d por cobertura MMD (%d pares, %d nodos, %.1f ms)",
        len(cover), len(pairs), nodes, elapsed_ms,
    )
    return SolveResult(
        invariant=InvariantKind.STRONG,
        value=len(cover),
        witness=VertexSet(cover),
        method=SolveMethod.MMD_VERTEX_COVER,
        nodes_explored=nodes,
        elapsed_ms=elapsed_ms,
    )
