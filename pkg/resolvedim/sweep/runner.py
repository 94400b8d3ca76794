"""
sweep/runner.py
---------------
Barrido de grillas de parámetros: una fila por (instancia, invariante),
comparando el valor del solver con la fórmula cerrada.

- Las filas salen en orden de grilla y luego de invariante, sin importar
  cuántos workers se usen.
- Un error en una fila queda registrado en su columna `error`; el
  barrido nunca se aborta.
"""

from __future__ import annotations

import csv
import logging
import sys
import time
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, TextIO

import yaml
from pydantic import ValidationError

from resolvedim.core import config
from resolvedim.core.errors import GuardViolated, ResolveDimError, UsageError
from resolvedim.families.schemas import FamilySpec
from resolvedim.graph.operations import all_pairs_distances, is_connected
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.search import solve
from resolvedim.sweep.schemas import CSV_COLUMNS, SweepGrid, SweepRow
from resolvedim.theorems.closed_forms import closed_form_value
from resolvedim.theorems.schemas import ClaimStatus

logger = logging.getLogger(__name__)

GRID_KEYS = ("family", "n", "m", "k", "r", "invariants", "method")


# ==========================================================
# 🧮 Rangos y configuración
# ==========================================================

def parse_range(text: str | int) -> tuple[int, ...]:
    """
    Rango de enteros: `a`, `a..b` (inclusivo) o `a..b:step`.

    Ejemplos: "3" → (3,), "3..5" → (3, 4, 5), "8..12:2" → (8, 10, 12).
    """
    if isinstance(text, int):
        return (text,)
    raw = str(text).strip()
    try:
        if ".." not in raw:
            return (int(raw),)
        bounds, _, step_text = raw.partition(":")
        start_text, _, stop_text = bounds.partition("..")
        start, stop = int(start_text), int(stop_text)
        step = int(step_text) if step_text else 1
    except ValueError:
        raise UsageError(f"Rango inválido {text!r} (formatos: a, a..b, a..b:step)")
    if step < 1:
        raise UsageError(f"El paso del rango debe ser positivo ({text!r})")
    if stop < start:
        raise UsageError(f"Rango vacío {text!r}")
    return tuple(range(start, stop + 1, step))


def _axis_values(value: Any) -> tuple[int, ...]:
    if value is None:
        return ()
    if isinstance(value, list):
        return tuple(v for item in value for v in parse_range(item))
    return parse_range(value)


def _invariants(value: Any) -> tuple[InvariantKind, ...]:
    items = value if isinstance(value, list) else str(value).split(",")
    try:
        return tuple(InvariantKind.parse(str(item)) for item in items if str(item).strip())
    except ValueError as e:
        raise UsageError(str(e))


def load_grid_config(path: str | Path) -> dict[str, Any]:
    """Lee un archivo YAML con las mismas claves que los flags de `sweep`."""
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise UsageError(f"No se pudo leer la configuración {path}: {e.strerror}")
    except UnicodeDecodeError:
        raise UsageError(f"{path}: la configuración no es texto UTF-8 válido")
    except yaml.YAMLError as e:
        raise UsageError(f"YAML inválido en {path}: {e}")
    if not isinstance(data, dict):
        raise UsageError(f"{path}: se esperaba un mapa con las claves {', '.join(GRID_KEYS)}")
    unknown = set(data) - set(GRID_KEYS)
    if unknown:
        raise UsageError(f"{path}: claves desconocidas {sorted(unknown)}")
    return data


def build_grid(values: dict[str, Any]) -> SweepGrid:
    """Arma la grilla desde valores crudos (flags o YAML); los rangos llegan como texto."""
    if not values.get("family"):
        raise UsageError("El barrido necesita --family")
    if not values.get("invariants"):
        raise UsageError("El barrido necesita --invariants (ej: beta,psi,sdim,adjdim)")
    try:
        return SweepGrid(
            family=str(values["family"]).strip().lower(),
            n=_axis_values(values.get("n")),
            m=_axis_values(values.get("m")),
            k=_axis_values(values.get("k")),
            r=_axis_values(values.get("r")),
            invariants=_invariants(values["invariants"]),
            method=str(values.get("method") or "auto"),
        )
    except ValidationError as e:
        raise UsageError(f"Grilla inválida: {e.errors()[0]['msg']}")


# ==========================================================
# 🏃 Ejecución
# ==========================================================

def _error_row(text: str, n_vertices: int, kind: InvariantKind, detail: str, elapsed_ms: float) -> SweepRow:
    return SweepRow(
        family=text,
        n_vertices=n_vertices,
        invariant=kind,
        solver_value=None,
        closed_form_value=None,
        match=ClaimStatus.FAIL,
        witness=[],
        elapsed_ms=elapsed_ms,
        nodes_explored=0,
        error=detail,
    )


def _instance_rows(text: str, grid: SweepGrid) -> list[SweepRow]:
    try:
        spec = FamilySpec.parse(text)
        g = spec.build()
        dm = all_pairs_distances(g) if is_connected(g) else None
    except ResolveDimError as e:
        return [_error_row(text, 0, kind, e.detail, 0.0) for kind in grid.invariants]

    rows = []
    for kind in grid.invariants:
        started = time.perf_counter()
        try:
            # un worker por fila: el paralelismo del barrido es entre instancias
            result = solve(g, kind, grid.method, dm=dm, workers=1)
        except ResolveDimError as e:
            elapsed_ms = (time.perf_counter() - started) * 1000
            rows.append(_error_row(text, g.vertex_count, kind, e.detail, elapsed_ms))
            continue

        try:
            expected = closed_form_value(spec, kind)
        except GuardViolated:
            expected = None

        if expected is None:
            match = ClaimStatus.OUTSIDE_GUARD
        else:
            match = ClaimStatus.PASS if expected == result.value else ClaimStatus.FAIL

        rows.append(
            SweepRow(
                family=text,
                n_vertices=g.vertex_count,
                invariant=kind,
                solver_value=result.value,
                closed_form_value=expected,
                match=match,
                witness=list(result.witness),
                elapsed_ms=result.elapsed_ms,
                nodes_explored=result.nodes_explored,
            )
        )
    return rows


def run_sweep(grid: SweepGrid, workers: int | None = None) -> list[SweepRow]:
    workers = config.THREADS if workers is None else workers
    instances = grid.instances()
    logger.info("🔁 Barrido %s: %d instancias × %d invariantes", grid.family.value, len(instances), len(grid.invariants))

    def task(text: str) -> list[SweepRow]:
        return _instance_rows(text, grid)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(task, instances))
    else:
        batches = [task(text) for text in instances]

    rows = [row for batch in batches for row in batch]
    for row in rows:
        logger.info(
            "%s %s: solver=%s fórmula=%s → %s",
            row.family, row.invariant.value, row.solver_value, row.closed_form_value, row.match.value,
        )
    return rows


def write_csv(rows: Iterable[SweepRow], out: TextIO | None = None) -> None:
    """Escribe el CSV con encabezado; `out=None` usa stdout."""
    writer = csv.DictWriter(out or sys.stdout, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.csv_row())
