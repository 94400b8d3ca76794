"""
families/isomorphism.py
-----------------------
Prueba de isomorfismo por backtracking para grafos pequeños.

Solo se usa para confirmar que las realizaciones de Cayley son el
cocktail party; no es un algoritmo de etiquetado canónico.
"""

from __future__ import annotations

import logging

from resolvedim.core import config
from resolvedim.core.errors import DisconnectedGraph, TooLargeForIso
from resolvedim.graph.operations import is_connected
from resolvedim.models.models import Graph

logger = logging.getLogger(__name__)


def _search_order(g: Graph) -> list[int]:
    # BFS desde el vértice de mayor grado: cada vértice nuevo ya tiene
    # vecinos asignados y la consistencia poda antes
    start = max(g.vertices, key=lambda v: (g.degree(v), -v))
    order, seen = [start], {start}
    for v in order:
        for w in sorted(g.neighbors(v), key=lambda w: (-g.degree(w), w)):
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """
    Busca una biyección que preserve aristas y no-aristas.

    Retorna:
    - `dict` vértice de g1 → vértice de g2, o `None` si no existe.

    Errores:
    - `TooLargeForIso` si algún grafo supera `ISO_MAX_VERTICES`.
    - `DisconnectedGraph` si alguno no es conexo.
    """
    limit = config.ISO_MAX_VERTICES
    if max(g1.vertex_count, g2.vertex_count) > limit:
        raise TooLargeForIso(
            f"Isomorfismo limitado a {limit} vértices "
            f"({g1.vertex_count} y {g2.vertex_count})"
        )
    if not (is_connected(g1) and is_connected(g2)):
        raise DisconnectedGraph("La prueba de isomorfismo requiere grafos conexos")

    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if g1.degree_sequence != g2.degree_sequence:
        return None
    if g1.vertex_count == 0:
        return {}

    order = _search_order(g1)
    candidates = {
        u: [v for v in g2.vertices if g2.degree(v) == g1.degree(u)] for u in g1.vertices
    }
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(u: int, v: int) -> bool:
        for mapped_u, mapped_v in mapping.items():
            if g1.has_edge(u, mapped_u) != g2.has_edge(v, mapped_v):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        u = order[depth]
        for v in candidates[u]:
            if v in used or not consistent(u, v):
                continue
            mapping[u] = v
            used.add(v)
            if extend(depth + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    found = extend(0)
    logger.debug("Isomorfismo n=%d → %s", g1.vertex_count, "sí" if found else "no")
    return dict(mapping) if found else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
