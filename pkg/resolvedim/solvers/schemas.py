from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict

from resolvedim.models.models import VertexSet
from resolvedim.resolving.schemas import InvariantKind


class SolveMethod(str, Enum):
    BRUTE_FORCE = "brute"
    PRUNED_SEARCH = "pruned"
    MMD_VERTEX_COVER = "mmd"

    @property
    def label(self) -> str:
        return {"brute": "BruteForce", "pruned": "PrunedSearch", "mmd": "MmdVertexCover"}[self.value]


class SolveResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    invariant: InvariantKind
    value: int
    witness: VertexSet
    method: SolveMethod
    nodes_explored: int
    elapsed_ms: float


class DimensionReport(BaseModel):
    """Fila que imprime/emite `dim`: una invariante calculada sobre una entrada."""

    source: str
    n_vertices: int
    invariant: InvariantKind
    value: int
    witness: list[int]
    method: SolveMethod
    nodes_explored: int
    elapsed_ms: float

    @classmethod
    def from_result(cls, source: str, n_vertices: int, result: SolveResult) -> DimensionReport:
        return cls(
            source=source,
            n_vertices=n_vertices,
            invariant=result.invariant,
            value=result.value,
            witness=list(result.witness),
            method=result.method,
            nodes_explored=result.nodes_explored,
            elapsed_ms=result.elapsed_ms,
        )

    def csv_row(self) -> dict[str, str | int]:
        return {
            "source": self.source,
            "n_vertices": self.n_vertices,
            "invariant": self.invariant.value,
            "value": self.value,
            "witness": " ".join(str(v) for v in self.witness),
            "method": self.method.value,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": f"{self.elapsed_ms:.3f}",
        }
