from __future__ import annotations

from enum import Enum

# Vector de representación: distancias (métrica) o valores {0,1,2} (adyacencia)
RepVector = tuple[int, ...]


class InvariantKind(str, Enum):
    METRIC = "beta"
    DOUBLY = "psi"
    STRONG = "sdim"
    ADJACENCY = "adjdim"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, text: str) -> InvariantKind:
        key = text.strip().lower()
        for kind in cls:
            if key in (kind.value, kind.label.lower()):
                return kind
        raise ValueError(f"Invariante desconocida {text!r}; válidas: beta, psi, sdim, adjdim")


_LABELS = {
    InvariantKind.METRIC: "MetricDim",
    InvariantKind.DOUBLY: "DoublyDim",
    InvariantKind.STRONG: "StrongDim",
    InvariantKind.ADJACENCY: "AdjacencyDim",
}

_SYMBOLS = {
    InvariantKind.METRIC: "β",
    InvariantKind.DOUBLY: "ψ",
    InvariantKind.STRONG: "sdim",
    InvariantKind.ADJACENCY: "β̂",
}
