"""
graph/operations.py
-------------------
Construcción de grafos, distancias entre todos los pares y chequeos
estructurales que consumen los demás módulos.

Incluye:
- build_graph: valida y deduplica una lista de aristas.
- all_pairs_distances: matriz BFS exacta (solo grafos conexos).
- is_connected / is_bipartite: chequeos delegados a networkx.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

import networkx as nx
import numpy as np

from resolvedim.core.errors import DisconnectedGraph, InvalidVertex, SelfLoopRejected
from resolvedim.models.models import DistanceMatrix, Graph

logger = logging.getLogger(__name__)


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """
    Crea un `Graph` inmutable a partir de una lista de aristas.

    - `n`: número de vértices (índices 0..n-1).
    - `edges`: pares no ordenados; los repetidos se guardan una sola vez.
    - `labels`: nombre opcional para cada vértice.

    Errores:
    - `InvalidVertex` si algún extremo está fuera de 0..n-1.
    - `SelfLoopRejected` si aparece un par (v, v).
    """
    if n < 0:
        raise InvalidVertex(f"Número de vértices negativo: {n}")
    if labels is not None and len(labels) != n:
        raise InvalidVertex(f"Se esperaban {n} etiquetas, llegaron {len(labels)}")

    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"Arista ({u}, {v}) fuera de rango para n={n}")
        if u == v:
            raise SelfLoopRejected(f"Lazo rechazado en el vértice {u}")
        neighbors[u].add(v)
        neighbors[v].add(u)

    return Graph(
        vertex_count=n,
        adjacency=tuple(frozenset(nbrs) for nbrs in neighbors),
        labels=tuple(labels) if labels is not None else None,
    )


def is_connected(g: Graph) -> bool:
    # networkx no define conectividad para el grafo vacío
    if g.vertex_count <= 1:
        return True
    return nx.is_connected(g.to_networkx())


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.to_networkx())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """
    Calcula la distancia en saltos entre todos los pares de vértices.

    Retorna:
    - `DistanceMatrix` con la matriz de solo lectura y el diámetro.

    Errores:
    - `DisconnectedGraph` si el grafo no es conexo: las invariantes solo
      están definidas para grafos conexos.
    """
    if not is_connected(g):
        raise DisconnectedGraph(f"El grafo con {g.vertex_count} vértices no es conexo")

    n = g.vertex_count
    d = np.zeros((n, n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            d[source, target] = length
    d.setflags(write=False)

    diameter = int(d.max()) if n else 0
    logger.debug("Distancias calculadas: n=%d diámetro=%d", n, diameter)
    return DistanceMatrix(n=n, d=d, diameter=diameter)
