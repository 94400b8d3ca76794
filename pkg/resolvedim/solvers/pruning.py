"""
solvers/pruning.py
------------------
Vértices obligatorios que reducen la búsqueda por subconjuntos.

- Gemelos: un par de gemelos solo lo distingue (en los cuatro sentidos)
  uno de sus propios miembros, así que todo conjunto válido contiene
  todos los vértices de cada clase menos uno. Intercambiar gemelos es un
  automorfismo, por lo que se fijan los de menor índice sin perder el
  testigo lexicográficamente mínimo.
- Diferencia colgante (solo ψ): si u tiene un vecino s con
  d(u, x) = d(s, x) + 1 para todo x ≠ u, el par (u, s) solo se resuelve
  doblemente usando u.
"""

from __future__ import annotations

import numpy as np

from resolvedim.models.models import DistanceMatrix, Graph
from resolvedim.resolving.kernel import twin_classes
from resolvedim.resolving.schemas import InvariantKind


def twin_prefix_members(g: Graph) -> set[int]:
    forced: set[int] = set()
    for cls in twin_classes(g):
        forced.update(cls[:-1])
    return forced


def pendant_difference_vertices(g: Graph, dm: DistanceMatrix) -> set[int]:
    forced: set[int] = set()
    d = dm.d
    for u in g.vertices:
        others = np.arange(g.vertex_count) != u
        for s in g.neighbors(u):
            if np.array_equal(d[u, others], d[s, others] + 1):
                forced.add(u)
                break
    return forced


def forced_members(g: Graph, dm: DistanceMatrix | None, kind: InvariantKind) -> tuple[int, ...]:
    forced = twin_prefix_members(g)
    if kind is InvariantKind.DOUBLY and dm is not None:
        forced |= pendant_difference_vertices(g, dm)
    return tuple(sorted(forced))
