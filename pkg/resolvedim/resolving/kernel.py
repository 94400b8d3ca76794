"""
resolving/kernel.py
-------------------
Representaciones y predicados de conjuntos resolventes.

Incluye:
- Representación métrica r(v|W) y de adyacencia r̂(v|W).
- Predicados: resolvente, doblemente resolvente, fuertemente resolvente
  y resolvente por adyacencia.
- Clases de gemelos, que cualquier conjunto resolvente debe cubrir
  salvo un vértice por clase.

Todas las funciones son puras sobre modelos inmutables, así que los
solvers las evalúan en paralelo sobre el mismo grafo.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from resolvedim.core.errors import GraphTooSmall, InvalidVertex, SetTooSmall
from resolvedim.models.models import DistanceMatrix, Graph
from resolvedim.resolving.schemas import InvariantKind, RepVector


def _members(n: int, w: Iterable[int]) -> list[int]:
    members = [int(v) for v in w]
    if len(set(members)) != len(members):
        raise InvalidVertex(f"Conjunto con vértices repetidos: {members}")
    for v in members:
        if not 0 <= v < n:
            raise InvalidVertex(f"Vértice {v} fuera de rango para n={n}")
    return members


def _check_vertex(n: int, *vertices: int) -> None:
    for v in vertices:
        if not 0 <= v < n:
            raise InvalidVertex(f"Vértice {v} fuera de rango para n={n}")


def _rows_distinct(rows: np.ndarray) -> bool:
    rows = np.ascontiguousarray(rows)
    return len({row.tobytes() for row in rows}) == len(rows)


# ==========================================================
# 📏 Resolución métrica
# ==========================================================

def metric_representation(g: Graph, dm: DistanceMatrix, v: int, w: Iterable[int]) -> RepVector:
    members = _members(g.vertex_count, w)
    _check_vertex(g.vertex_count, v)
    return tuple(int(dm.d[v, x]) for x in members)


def is_resolving_set(g: Graph, dm: DistanceMatrix, w: Iterable[int]) -> bool:
    """
    Verifica si W es un conjunto resolvente.

    Solo se comparan los vértices de V − W: cada w_i tiene un 0 en su propia
    coordenada, así que los miembros de W ya quedan distinguidos.
    """
    members = _members(g.vertex_count, w)
    outside = np.ones(g.vertex_count, dtype=bool)
    outside[members] = False
    return _rows_distinct(dm.d[np.ix_(outside, members)])


def resolves_all_vertices(g: Graph, dm: DistanceMatrix, w: Iterable[int]) -> bool:
    """Misma pregunta comparando las representaciones de todo V (oráculo de tests)."""
    members = _members(g.vertex_count, w)
    return _rows_distinct(dm.d[:, members])


# ==========================================================
# ↔️ Resolución doble
# ==========================================================

def doubly_resolves(dm: DistanceMatrix, x: int, y: int, u: int, v: int) -> bool:
    d = dm.d
    return int(d[u, x] - d[u, y]) != int(d[v, x] - d[v, y])


def is_doubly_resolving_set(g: Graph, dm: DistanceMatrix, z: Iterable[int]) -> bool:
    """
    Verifica si cada par de vértices distintos queda doblemente resuelto por Z.

    Un par u, v está resuelto por algún x, y ∈ Z exactamente cuando difieren
    los vectores (d(·, z) − d(·, z_0)) para z ∈ Z, con z_0 el primer miembro.

    Errores:
    - `GraphTooSmall` si el grafo tiene menos de 2 vértices.
    - `SetTooSmall` si |Z| < 2.
    """
    if g.vertex_count < 2:
        raise GraphTooSmall("La resolución doble requiere al menos 2 vértices")
    members = _members(g.vertex_count, z)
    if len(members) < 2:
        raise SetTooSmall(f"Un conjunto doblemente resolvente necesita |Z| >= 2 (|Z|={len(members)})")
    cols = dm.d[:, members]
    return _rows_distinct(cols - cols[:, :1])


# ==========================================================
# 💪 Resolución fuerte
# ==========================================================

def strongly_resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    d = dm.d
    return bool(d[v, w] == d[v, u] + d[u, w] or d[u, w] == d[u, v] + d[v, w])


def _strong_cover(dm: DistanceMatrix, w: int) -> np.ndarray:
    column = dm.d[:, w]
    # [u, v] verdadero si u está en un camino mínimo entre v y w
    on_path = column[np.newaxis, :] == dm.d + column[:, np.newaxis]
    return on_path | on_path.T


def is_strong_resolving_set(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> bool:
    members = _members(g.vertex_count, s)
    covered = np.eye(g.vertex_count, dtype=bool)
    for w in members:
        covered |= _strong_cover(dm, w)
        if covered.all():
            return True
    return bool(covered.all())


# ==========================================================
# 🔗 Resolución por adyacencia
# ==========================================================

def _adjacency_codes(g: Graph) -> np.ndarray:
    codes = np.where(g.adjacency_matrix, 1, 2)
    np.fill_diagonal(codes, 0)
    return codes


def adjacency_representation(g: Graph, v: int, w: Iterable[int]) -> RepVector:
    members = _members(g.vertex_count, w)
    _check_vertex(g.vertex_count, v)
    return tuple(0 if v == x else 1 if g.has_edge(v, x) else 2 for x in members)


def is_adjacency_resolving_set(g: Graph, w: Iterable[int]) -> bool:
    members = _members(g.vertex_count, w)
    return _rows_distinct(_adjacency_codes(g)[:, members])


# ==========================================================
# 🧭 Despacho y gemelos
# ==========================================================

def satisfies(
    kind: InvariantKind,
    g: Graph,
    dm: DistanceMatrix | None,
    members: Iterable[int],
) -> bool:
    """Evalúa el predicado que corresponde a `kind` (dm puede faltar para adyacencia)."""
    if kind is InvariantKind.ADJACENCY:
        return is_adjacency_resolving_set(g, members)
    if dm is None:
        raise ValueError(f"El predicado {kind.value} necesita la matriz de distancias")
    if kind is InvariantKind.METRIC:
        return is_resolving_set(g, dm, members)
    if kind is InvariantKind.DOUBLY:
        return is_doubly_resolving_set(g, dm, members)
    return is_strong_resolving_set(g, dm, members)


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.neighbors(u) - {v} == g.neighbors(v) - {u}


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """
    Clases de gemelos con al menos dos vértices, en orden de su menor índice.

    u y v son gemelos si N(u) − {v} = N(v) − {u}; la relación es de
    equivalencia, así que basta comparar con un representante por clase.
    """
    classes: list[list[int]] = []
    for v in g.vertices:
        for cls in classes:
            if are_twins(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [tuple(cls) for cls in classes if len(cls) > 1]
