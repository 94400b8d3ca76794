from __future__ import annotations

from collections.abc import Callable
from enum import Enum

from pydantic import BaseModel, ConfigDict

from resolvedim.families.schemas import FamilySpec
from resolvedim.resolving.schemas import InvariantKind


class ClaimCheck(str, Enum):
    VALUE = "value"
    DIAMETER = "diameter"
    ISOMORPHISM = "isomorphism"


class ClaimStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    OUTSIDE_GUARD = "OUTSIDE_GUARD"


class WitnessCheck(BaseModel):
    """Conjunto construido en una demostración y el resultado que debe dar su predicado."""

    model_config = ConfigDict(frozen=True)

    members: tuple[int, ...]
    kind: InvariantKind
    expected: bool
    source: str


class TheoremClaim(BaseModel):
    """
    Afirmación verificable del registro.

    - `guard`: devuelve `None` si los parámetros cumplen las hipótesis, o el motivo.
    - `formula`: valor cerrado esperado.
    - `instance`: familia sobre la que se mide; `partner` es la segunda familia
      en las afirmaciones de isomorfismo.
    - `witness_builder`: conjunto de la demostración (no aplica a diámetro/isomorfismo).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    statement: str
    hypothesis: str
    formula_text: str
    check: ClaimCheck
    kinds: tuple[InvariantKind, ...] = ()
    param_names: tuple[str, ...]
    default_params: tuple[tuple[int, ...], ...]
    guard: Callable[..., str | None]
    formula: Callable[..., int]
    instance: Callable[..., FamilySpec]
    partner: Callable[..., FamilySpec] | None = None
    witness_builder: Callable[..., tuple[int, ...]] | None = None


class ClaimOutcome(BaseModel):
    claim_id: str
    params: tuple[int, ...]
    status: ClaimStatus
    expected: int | None = None
    observed: int | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is not ClaimStatus.FAIL
