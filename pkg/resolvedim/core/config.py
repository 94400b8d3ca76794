# resolvedim/core/config.py
import logging
import os
import sys

from dotenv import load_dotenv

# ==========================================================
# ⚙️ Carga de variables de entorno
# ==========================================================

# Carga las variables definidas en un archivo .env (útil en desarrollo local).
# En CI las variables vienen directamente del entorno.
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"❌ {name} debe ser un entero (valor recibido: {raw!r})")


# ==========================================================
# 🧵 Paralelismo
# ==========================================================

# Número máximo de workers para la búsqueda y el barrido (0 = secuencial).
THREADS = _int_env("RESOLVEDIM_THREADS", 0)

# Cantidad de subconjuntos candidatos que procesa cada worker por tarea.
CHUNK_SIZE = _int_env("RESOLVEDIM_CHUNK_SIZE", 256)

# ==========================================================
# 🛡️ Límites de los algoritmos exhaustivos
# ==========================================================

# Máximo de vértices para el oráculo sin poda (2^n subconjuntos).
ORACLE_MAX_VERTICES = _int_env("RESOLVEDIM_ORACLE_MAX", 14)

# Máximo de vértices para la prueba de isomorfismo por backtracking.
ISO_MAX_VERTICES = _int_env("RESOLVEDIM_ISO_MAX", 16)

# Máximo de vértices del grafo MMD para la cobertura exacta.
COVER_MAX_VERTICES = _int_env("RESOLVEDIM_COVER_MAX", 40)

# ==========================================================
# 📝 Logging
# ==========================================================

LOG_LEVEL = os.getenv("RESOLVEDIM_LOG_LEVEL", "WARNING").upper()

# Formato: nivel, logger y mensaje
LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"

# ==========================================================
# ✅ Validaciones de configuración
# ==========================================================

if THREADS < 0:
    raise ValueError("❌ RESOLVEDIM_THREADS no puede ser negativo (0 = secuencial)")

if CHUNK_SIZE < 1:
    raise ValueError("❌ RESOLVEDIM_CHUNK_SIZE debe ser al menos 1")

if LOG_LEVEL not in logging.getLevelNamesMapping():
    raise ValueError(f"❌ RESOLVEDIM_LOG_LEVEL desconocido: {LOG_LEVEL}")


def configure_logging(level: str | None = None) -> None:
    """
    Instala un handler en stderr para el logger raíz del paquete.

    - `level`: nivel explícito (ej: "DEBUG"); si es `None` se usa `RESOLVEDIM_LOG_LEVEL`.

    La salida de máquina (CSV, listas de aristas) nunca pasa por aquí.
    """
    root = logging.getLogger("resolvedim")
    root.setLevel((level or LOG_LEVEL).upper())
    # un solo handler, ligado al stderr vigente en cada llamada
    for old in root.handlers[:]:
        root.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%H:%M:%S"))
    root.addHandler(handler)
    root.debug(
        "🔧 Configuración cargada: threads=%d chunk=%d oracle<=%d iso<=%d cover<=%d",
        THREADS, CHUNK_SIZE, ORACLE_MAX_VERTICES, ISO_MAX_VERTICES, COVER_MAX_VERTICES,
    )
