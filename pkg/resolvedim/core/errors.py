"""
errors.py
---------
Jerarquía de errores del paquete.

Cada error lleva el código de salida que debe devolver la CLI, igual que
`HTTPException` llevaba su `status_code`:

- 2 → uso incorrecto (parámetros, especificación de familia).
- 3 → grafo inválido (vértices fuera de rango, lazos, desconexión).
- 4 → límite excedido (oráculos y búsquedas acotadas).
- 5 → falla de verificación de teoremas.
"""


class ResolveDimError(Exception):
    """Error base. `detail` es el mensaje que se muestra al usuario."""

    exit_code = 1

    def __init__(self, detail: str, exit_code: int | None = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


# ==========================================================
# 🧾 Uso incorrecto (exit 2)
# ==========================================================

class UsageError(ResolveDimError):
    exit_code = 2


class InvalidParam(UsageError):
    """Parámetro de familia fuera de su rango válido."""


class InvalidFamilySpec(UsageError):
    """Texto de familia que no respeta la sintaxis `tipo:p1,p2`."""


class SetTooSmall(UsageError):
    """Conjunto con menos miembros de los que exige el predicado."""


class GuardViolated(UsageError):
    """Parámetros fuera de las hipótesis de un teorema."""


# ==========================================================
# 🕸️ Grafo inválido (exit 3)
# ==========================================================

class InvalidGraph(ResolveDimError):
    exit_code = 3


class InvalidVertex(InvalidGraph):
    pass


class SelfLoopRejected(InvalidGraph):
    pass


class DisconnectedGraph(InvalidGraph):
    pass


class GraphTooSmall(InvalidGraph):
    pass


class EdgeListFormatError(InvalidGraph):
    pass


# ==========================================================
# 🛡️ Límites excedidos (exit 4)
# ==========================================================

class GuardExceeded(ResolveDimError):
    exit_code = 4


class TooLargeForOracle(GuardExceeded):
    pass


class TooLargeForIso(GuardExceeded):
    pass


class TooLargeForCover(GuardExceeded):
    pass


# ==========================================================
# 📋 Verificación (exit 5)
# ==========================================================

class VerificationFailed(ResolveDimError):
    exit_code = 5
