from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from resolvedim.core.errors import InvalidFamilySpec
from resolvedim.families import generators
from resolvedim.models.models import Graph


class FamilyKind(str, Enum):
    CYCLE = "cycle"
    COMPLETE = "complete"
    JELLYFISH = "jfg"
    COCKTAIL_PARTY = "cp"
    CAYLEY_ZN = "cayley-zn"
    CAYLEY_DIHEDRAL = "cayley-d2n"


PARAM_NAMES: dict[FamilyKind, tuple[str, ...]] = {
    FamilyKind.CYCLE: ("n",),
    FamilyKind.COMPLETE: ("n",),
    FamilyKind.JELLYFISH: ("n", "m"),
    FamilyKind.COCKTAIL_PARTY: ("r",),
    FamilyKind.CAYLEY_ZN: ("n", "k"),
    FamilyKind.CAYLEY_DIHEDRAL: ("n",),
}

_GUARDS = {
    FamilyKind.CYCLE: generators.cycle_guard,
    FamilyKind.COMPLETE: generators.complete_guard,
    FamilyKind.JELLYFISH: generators.jellyfish_guard,
    FamilyKind.COCKTAIL_PARTY: generators.cocktail_party_guard,
    FamilyKind.CAYLEY_ZN: generators.cayley_zn_guard,
    FamilyKind.CAYLEY_DIHEDRAL: generators.cayley_dihedral_guard,
}

_BUILDERS = {
    FamilyKind.CYCLE: generators.gen_cycle,
    FamilyKind.COMPLETE: generators.gen_complete,
    FamilyKind.JELLYFISH: generators.gen_jellyfish,
    FamilyKind.COCKTAIL_PARTY: generators.gen_cocktail_party,
    FamilyKind.CAYLEY_ZN: generators.gen_cayley_zn,
    FamilyKind.CAYLEY_DIHEDRAL: generators.gen_cayley_dihedral,
}


class FamilySpec(BaseModel):
    """Instancia paramétrica de una familia, ej: `jfg:3,2` o `cayley-zn:8,3`."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    params: tuple[int, ...]

    @model_validator(mode="after")
    def check_params(self) -> FamilySpec:
        names = PARAM_NAMES[self.kind]
        if len(self.params) != len(names):
            raise ValueError(
                f"'{self.kind.value}' espera {len(names)} parámetro(s) ({','.join(names)}), "
                f"llegaron {len(self.params)}"
            )
        message = _GUARDS[self.kind](*self.params)
        if message is not None:
            raise ValueError(message)
        return self

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        kind_text, sep, params_text = text.strip().partition(":")
        if not sep:
            raise InvalidFamilySpec(f"Especificación sin ':' → {text!r} (ej: jfg:3,2)")
        try:
            kind = FamilyKind(kind_text.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in FamilyKind)
            raise InvalidFamilySpec(f"Familia desconocida {kind_text!r}; válidas: {valid}")
        try:
            params = tuple(int(p) for p in params_text.split(","))
        except ValueError:
            raise InvalidFamilySpec(f"Parámetros no enteros en {text!r}")
        try:
            return cls(kind=kind, params=params)
        except ValidationError as e:
            raise InvalidFamilySpec(f"{text!r}: {e.errors()[0]['msg']}")

    @property
    def text(self) -> str:
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"

    def param(self, name: str) -> int:
        return self.params[PARAM_NAMES[self.kind].index(name)]

    def build(self) -> Graph:
        return _BUILDERS[self.kind](*self.params)

    def __str__(self) -> str:
        return self.text
