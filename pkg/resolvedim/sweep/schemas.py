from __future__ import annotations

from itertools import product

from pydantic import BaseModel, ConfigDict, Field, model_validator

from resolvedim.families.schemas import FamilyKind
from resolvedim.resolving.schemas import InvariantKind
from resolvedim.solvers.schemas import SolveMethod
from resolvedim.theorems.schemas import ClaimStatus

# Parámetros que recorre el barrido para cada familia.
# `cp` barre el orden n de Cay(Z_n, S_(n/2-1)), la forma de los teoremas;
# con `r` barre CP(r) construido directamente.
GRID_AXES: dict[FamilyKind, tuple[str, ...]] = {
    FamilyKind.CYCLE: ("n",),
    FamilyKind.COMPLETE: ("n",),
    FamilyKind.JELLYFISH: ("n", "m"),
    FamilyKind.COCKTAIL_PARTY: ("n",),
    FamilyKind.CAYLEY_ZN: ("n", "k"),
    FamilyKind.CAYLEY_DIHEDRAL: ("n",),
}


class SweepGrid(BaseModel):
    """Grilla de parámetros de un barrido (flags de la CLI o `--config` YAML)."""

    model_config = ConfigDict(frozen=True)

    family: FamilyKind
    n: tuple[int, ...] = ()
    m: tuple[int, ...] = ()
    k: tuple[int, ...] = ()
    r: tuple[int, ...] = ()
    invariants: tuple[InvariantKind, ...] = Field(min_length=1)
    method: str = "auto"

    @model_validator(mode="after")
    def check_axes(self) -> SweepGrid:
        if self.r and self.family is not FamilyKind.COCKTAIL_PARTY:
            raise ValueError("--r sólo aplica a la familia cp")
        if self.r and self.n:
            raise ValueError("la familia cp usa --n (forma de Cayley) o --r (CP(r)), no ambos")
        for axis in self.axes():
            if not getattr(self, axis):
                raise ValueError(f"la familia '{self.family.value}' necesita valores para --{axis}")
        if self.method != "auto":
            SolveMethod(self.method)
        return self

    def axes(self) -> tuple[str, ...]:
        if self.family is FamilyKind.COCKTAIL_PARTY and self.r:
            return ("r",)
        return GRID_AXES[self.family]

    def instances(self) -> list[str]:
        """Textos de familia en orden de grilla (producto cartesiano de los ejes)."""
        axes = self.axes()
        texts = []
        for values in product(*(getattr(self, axis) for axis in axes)):
            if self.family is FamilyKind.COCKTAIL_PARTY and axes == ("n",):
                (n,) = values
                texts.append(f"{FamilyKind.CAYLEY_ZN.value}:{n},{n // 2 - 1}")
            else:
                texts.append(f"{self.family.value}:{','.join(str(v) for v in values)}")
        return texts


class SweepRow(BaseModel):
    """Una fila del CSV: el orden de los campos es el orden de las columnas."""

    family: str
    n_vertices: int
    invariant: InvariantKind
    solver_value: int | None
    closed_form_value: int | None
    match: ClaimStatus
    witness: list[int]
    elapsed_ms: float
    nodes_explored: int
    error: str = ""

    def csv_row(self) -> dict[str, str | int]:
        return {
            "family": self.family,
            "n_vertices": self.n_vertices,
            "invariant": self.invariant.value,
            "solver_value": "n/a" if self.solver_value is None else self.solver_value,
            "closed_form_value": "n/a" if self.closed_form_value is None else self.closed_form_value,
            "match": self.match.value,
            "witness": " ".join(str(v) for v in self.witness),
            "elapsed_ms": f"{self.elapsed_ms:.3f}",
            "nodes_explored": self.nodes_explored,
            "error": self.error,
        }


CSV_COLUMNS = list(SweepRow.model_fields)
