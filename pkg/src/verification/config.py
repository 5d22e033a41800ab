from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from config.settings import settings
from exceptions.quiver_exceptions import ConfigError

GROUPS = ("rep-linear", "decorated", "clusters", "groupoid", "census")

DEFAULT_GRAPHS = ("A1", "A2", "A3", "A4", "D4")

EXHAUSTIVE_RANK = 5


@dataclass(frozen=True)
class VerificationConfig:
    """
    Alcance de una corrida de verify.

    Attributes:
        graphs: Nombres de Dynkin ('A3', 'D4', 'A2+A1', ...)
        checks: Grupos o nombres de comprobación; vacío = todos
        seed: Semilla para muestreo y sumas aleatorias
        samples: Muestras de completitud del abanico por orientación
        random_sums: Sumas directas aleatorias por grafo
        loop_len: Longitud máxima de lazos en el grupoide
        lemma_len: Longitud máxima para los lemas de palabras reducidas
        exhaustive_rank: Por encima de este rango solo se usa Γ₀
        jobs: Procesos para la invariancia por orientación
        large: Permite rangos por encima de settings.RANK_CAP
        exponent_overrides: Tabla de exponentes sustituta por nombre de grafo
    """
    graphs: Tuple[str, ...] = DEFAULT_GRAPHS
    checks: Tuple[str, ...] = ()
    seed: int = field(default_factory=lambda: settings.SEED)
    samples: int = field(default_factory=lambda: settings.DEFAULT_SAMPLES)
    random_sums: int = 200
    loop_len: int = 12
    lemma_len: int = 10
    exhaustive_rank: int = EXHAUSTIVE_RANK
    jobs: int = 1
    large: bool = False
    exponent_overrides: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    def validate(self, known_checks: Iterable[str]) -> None:
        known = set(known_checks) | set(GROUPS)
        unknown = [c for c in self.checks if c not in known]
        if unknown:
            raise ConfigError(f"⚠️ Comprobaciones desconocidas: {unknown}")
        if not self.graphs:
            raise ConfigError("⚠️ Se requiere al menos un grafo")
        for name, value in (("samples", self.samples), ("random_sums", self.random_sums),
                            ("loop_len", self.loop_len), ("lemma_len", self.lemma_len)):
            if value < 0:
                raise ConfigError(f"⚠️ {name} debe ser >= 0, recibió {value}")
        if self.exhaustive_rank < 1:
            raise ConfigError(f"⚠️ exhaustive_rank debe ser >= 1, recibió {self.exhaustive_rank}")
        if self.jobs < 1:
            raise ConfigError(f"⚠️ jobs debe ser >= 1, recibió {self.jobs}")

    def selects(self, group: str, name: str) -> bool:
        return not self.checks or group in self.checks or name in self.checks

    def exponents_for(self, graph_name: str) -> Optional[Tuple[int, ...]]:
        return self.exponent_overrides.get(graph_name)
