import os
from dotenv import load_dotenv
from pathlib import Path

from exceptions.quiver_exceptions import ConfigError


def _find_dotenv(start_path: Path, name: str = ".env") -> Path | None:
    p = start_path.resolve()
    for candidate in [p] + list(p.parents):
        env_file = candidate / name
        if env_file.exists():
            return env_file
    return None


_env_path = _find_dotenv(Path(__file__))
if _env_path:
    load_dotenv(_env_path)
else:
    load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        # Acepta decimal y hexadecimal (ej: 0x5EED)
        return int(raw, 0)
    except ValueError:
        raise ConfigError(f"⚠️ {name} debe ser entero, recibió '{raw}'")


class Settings:
    # Semilla de muestreo - única variable documentada para el usuario
    SEED: int = _int_env("QUIVER_SEED", 0x5EED)

    # Límites de enumeración (E7/E8 detrás de --large)
    RANK_CAP: int = 6
    BRUTE_FORCE_ISO_CAP: int = 4

    # Muestreo de completitud del abanico
    DEFAULT_SAMPLES: int = 1000
    SAMPLE_BOX: int = 10

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()

    # Registro opcional de corridas de verificación
    DATABASE_URL: str = os.getenv("QUIVER_DATABASE_URL", "sqlite:///verification_runs.db")

    def validate(self) -> None:
        """Validar que los límites sean coherentes"""
        if self.RANK_CAP <= 0 or self.BRUTE_FORCE_ISO_CAP <= 0:
            raise ConfigError("⚠️ RANK_CAP y BRUTE_FORCE_ISO_CAP deben ser positivos")
        if self.DEFAULT_SAMPLES < 0 or self.SAMPLE_BOX <= 0:
            raise ConfigError("⚠️ DEFAULT_SAMPLES >= 0 y SAMPLE_BOX > 0")


settings = Settings()
