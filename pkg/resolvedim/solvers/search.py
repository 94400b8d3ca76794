"""
solvers/search.py
-----------------
Búsqueda exacta de conjuntos mínimos para las cuatro invariantes.

Estrategia:
- Se prueba la cardinalidad c = 1, 2, ... y, para cada c, los
  subconjuntos en orden lexicográfico; el primero que pasa el predicado
  es el testigo. Así el valor es mínimo y el testigo es reproducible.
- La búsqueda con poda fija los vértices obligatorios de `pruning` y solo
  enumera el resto; `naive_minimum` recorre todo (oráculo de validación).
- Con varios workers, los candidatos se reparten en bloques consecutivos
  y gana el bloque más temprano con éxito: el resultado (incluido
  `nodes_explored`) no depende del número de workers.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import Executor, ThreadPoolExecutor
from contextlib import nullcontext
from functools import partial
from heapq import merge
from itertools import combinations, islice

from resolvedim.core import config
from resolvedim.core.errors import GraphTooSmall, TooLargeForOracle, UsageError
from resolvedim.graph.operations import all_pairs_distances
from resolvedim.models.models import DistanceMatrix, Graph, VertexSet
from resolvedim.resolving.kernel import satisfies
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.mmd import min_strong_resolving_via_mmd, mmd_vertex_count
from resolvedim.solvers.pruning import forced_members
from resolvedim.solvers.schemas import SolveMethod, SolveResult

logger = logging.getLogger(__name__)

Candidate = tuple[int, ...]


def _prepare(g: Graph, dm: DistanceMatrix | None, kind: InvariantKind) -> DistanceMatrix | None:
    if g.vertex_count < 2:
        raise GraphTooSmall(f"Las invariantes requieren al menos 2 vértices (n={g.vertex_count})")
    if kind is InvariantKind.ADJACENCY:
        return dm
    # all_pairs_distances lanza DisconnectedGraph si corresponde
    return dm if dm is not None else all_pairs_distances(g)


def _min_size(kind: InvariantKind) -> int:
    return 2 if kind is InvariantKind.DOUBLY else 1


def _scan_chunk(chunk: Sequence[Candidate], test: Callable[[Candidate], bool]) -> int | None:
    for index, members in enumerate(chunk):
        if test(members):
            return index
    return None


def _first_success(
    candidates: Iterator[Candidate],
    test: Callable[[Candidate], bool],
    pool: Executor | None,
    workers: int,
) -> tuple[Candidate | None, int]:
    """Primer candidato (en orden global) que pasa `test` y cuántos se probaron hasta él."""
    explored = 0
    if pool is None:
        for members in candidates:
            explored += 1
            if test(members):
                return members, explored
        return None, explored

    chunks = iter(lambda: list(islice(candidates, config.CHUNK_SIZE)), [])
    while batch := list(islice(chunks, workers)):
        futures = [pool.submit(_scan_chunk, chunk, test) for chunk in batch]
        for chunk, future in zip(batch, futures):
            index = future.result()
            if index is not None:
                for pending in futures:
                    pending.cancel()
                return chunk[index], explored + index + 1
            explored += len(chunk)
    return None, explored


def _with_forced(forced: Candidate, free: Sequence[int], size: int) -> Iterator[Candidate]:
    for rest in combinations(free, size - len(forced)):
        yield tuple(merge(forced, rest))


def _search(
    g: Graph,
    dm: DistanceMatrix | None,
    kind: InvariantKind,
    method: SolveMethod,
    forced: Candidate,
    workers: int | None,
) -> SolveResult:
    workers = config.THREADS if workers is None else workers
    started = time.perf_counter()
    test = partial(satisfies, kind, g, dm)
    forced_set = set(forced)
    free = [v for v in g.vertices if v not in forced_set]
    explored = 0

    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else nullcontext()
    with executor as pool:
        for size in range(max(_min_size(kind), len(forced)), g.vertex_count + 1):
            logger.debug("%s: probando |W|=%d (obligatorios=%d)", kind.value, size, len(forced))
            found, tried = _first_success(_with_forced(forced, free, size), test, pool, workers)
            explored += tried
            if found is not None:
                elapsed_ms = (time.perf_counter() - started) * 1000
                logger.info(
                    "%s=%d con %s (%s, %d candidatos, %.1f ms)",
                    kind.value, size, list(found), method.value, explored, elapsed_ms,
                )
                return SolveResult(
                    invariant=kind,
                    value=size,
                    witness=VertexSet(found),
                    method=method,
                    nodes_explored=explored,
                    elapsed_ms=elapsed_ms,
                )
    # V completo siempre resuelve un grafo válido
    raise AssertionError(f"Ningún subconjunto satisface {kind.value}")


# ==========================================================
# 🔎 Búsqueda con poda
# ==========================================================

def pruned_minimum(
    g: Graph,
    dm: DistanceMatrix | None,
    kind: InvariantKind,
    workers: int | None = None,
) -> SolveResult:
    dm = _prepare(g, dm, kind)
    return _search(g, dm, kind, SolveMethod.PRUNED_SEARCH, forced_members(g, dm, kind), workers)


def min_resolving_set(g: Graph, dm: DistanceMatrix | None = None, workers: int | None = None) -> SolveResult:
    return pruned_minimum(g, dm, InvariantKind.METRIC, workers)


def min_doubly_resolving_set(
    g: Graph, dm: DistanceMatrix | None = None, workers: int | None = None
) -> SolveResult:
    return pruned_minimum(g, dm, InvariantKind.DOUBLY, workers)


def min_strong_resolving_set(
    g: Graph, dm: DistanceMatrix | None = None, workers: int | None = None
) -> SolveResult:
    return pruned_minimum(g, dm, InvariantKind.STRONG, workers)


def min_adjacency_resolving_set(g: Graph, workers: int | None = None) -> SolveResult:
    # no requiere conexidad: la adyacencia está definida en cualquier grafo simple
    return pruned_minimum(g, None, InvariantKind.ADJACENCY, workers)


# ==========================================================
# 🧪 Oráculo sin poda
# ==========================================================

def naive_minimum(
    g: Graph,
    dm: DistanceMatrix | None,
    kind: InvariantKind,
    workers: int | None = None,
) -> SolveResult:
    """
    Recorre todos los subconjuntos por cardinalidad creciente, sin poda.

    Errores:
    - `TooLargeForOracle` si n supera `ORACLE_MAX_VERTICES`.
    """
    limit = config.ORACLE_MAX_VERTICES
    if g.vertex_count > limit:
        raise TooLargeForOracle(f"El oráculo admite hasta {limit} vértices (n={g.vertex_count})")
    dm = _prepare(g, dm, kind)
    return _search(g, dm, kind, SolveMethod.BRUTE_FORCE, (), workers)


# ==========================================================
# 🧭 Despacho
# ==========================================================

def solve(
    g: Graph,
    kind: InvariantKind,
    method: SolveMethod | str = "auto",
    dm: DistanceMatrix | None = None,
    workers: int | None = None,
) -> SolveResult:
    """
    Punto de entrada común de la CLI, el barrido y la verificación.

    - `method`: "auto", "brute", "pruned" o "mmd" (solo sdim).

    En modo "auto" se usa la búsqueda con poda, salvo para sdim cuando el
    grafo MMD es más chico que el conjunto de vértices libres a enumerar.
    """
    if method == "auto":
        dm = _prepare(g, dm, kind)
        if kind is InvariantKind.STRONG:
            free = g.vertex_count - len(forced_members(g, dm, kind))
            mmd_size = mmd_vertex_count(g, dm)
            if mmd_size <= config.COVER_MAX_VERTICES and mmd_size < free:
                return min_strong_resolving_via_mmd(g, dm)
        return pruned_minimum(g, dm, kind, workers)

    method = SolveMethod(method)
    if method is SolveMethod.BRUTE_FORCE:
        return naive_minimum(g, dm, kind, workers)
    if method is SolveMethod.MMD_VERTEX_COVER:
        if kind is not InvariantKind.STRONG:
            raise UsageError(f"El método mmd solo aplica a sdim (se pidió {kind.value})")
        return min_strong_resolving_via_mmd(g, dm)
    return pruned_minimum(g, dm, kind, workers)

