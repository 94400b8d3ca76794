"""
models.py
---------
Modelos inmutables sobre los que opera todo el paquete.

Modelos incluidos:
- Graph: grafo simple no dirigido con vértices 0..n-1.
- DistanceMatrix: distancias (en saltos) entre todos los pares de vértices.
- VertexSet: subconjunto ordenado de vértices (candidato o testigo).

Ninguno se modifica después de construido: los predicados y los solvers
los comparten sin copiarlos.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np


@dataclass(frozen=True)
class Graph:
    """
    Modelo: Graph
    -------------
    Grafo simple, no dirigido y sin lazos.

    Campos:
        - vertex_count (int): número de vértices; los índices son 0..n-1.
        - adjacency (tuple[frozenset[int], ...]): vecinos de cada vértice.
        - labels (tuple[str, ...] | None): nombre para mostrar de cada vértice.

    Se construye con `resolvedim.graph.operations.build_graph`, que valida
    rangos y lazos; este modelo asume que la adyacencia ya es simétrica.
    """

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        # Pares canónicos (u < v) en orden lexicográfico
        return tuple(
            (u, v) for u in range(self.vertex_count) for v in sorted(self.adjacency[u]) if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(nbrs) for nbrs in self.adjacency), reverse=True))

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = True
        matrix.setflags(write=False)
        return matrix

    def to_networkx(self) -> nx.Graph:
        """Copia congelada en networkx (BFS, conectividad, bipartición)."""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return nx.freeze(g)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    Modelo: DistanceMatrix
    ----------------------
    Distancias BFS entre todos los pares de vértices de un grafo conexo.

    Campos:
        - n (int): número de vértices.
        - d (np.ndarray): matriz n×n de enteros, de solo lectura.
        - diameter (int): máxima entrada de `d`.
    """

    n: int
    d: np.ndarray
    diameter: int

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])


@dataclass(frozen=True)
class VertexSet:
    """
    Modelo: VertexSet
    -----------------
    Subconjunto ordenado de vértices sin repetidos.

    Campos:
        - members (tuple[int, ...]): índices en el orden en que se listan.

    El rango de los índices se valida contra el grafo en el momento de
    evaluarlo (ver `resolvedim.resolving.kernel`).
    """

    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(int(v) for v in self.members))
        if len(set(self.members)) != len(self.members):
            raise ValueError(f"VertexSet con vértices repetidos: {list(self.members)}")
        if any(v < 0 for v in self.members):
            raise ValueError(f"VertexSet con índices negativos: {list(self.members)}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.members) + "}"
