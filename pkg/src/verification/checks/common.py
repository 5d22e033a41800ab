from dataclasses import dataclass, field
from math import ceil
from typing import Any, List, Tuple

import numpy as np

from decorated.decorated_rep import DecoratedRep, all_decorated_indecomposables, decorated_sum
from quiver.dynkin import DynkinGraph
from quiver.orientation import Quiver, alternating_orientation, enumerate_orientations
from verification.config import VerificationConfig


@dataclass
class Outcome:
    """Alcance examinado, casos comprobados y contraejemplos encontrados."""
    scope: str
    checked: int = 0
    counterexamples: List[Any] = field(default_factory=list)

    def expect(self, ok: bool, witness: Any) -> None:
        self.checked += 1
        if not ok:
            self.counterexamples.append(witness)


def orientations_for(graph: DynkinGraph, cfg: VerificationConfig) -> Tuple[List[Quiver], str]:
    """Todas las orientaciones hasta cfg.exhaustive_rank; por encima, solo Γ₀."""
    if graph.rank <= cfg.exhaustive_rank:
        quivers = enumerate_orientations(graph)
        return quivers, f"{graph.name}: {len(quivers)} orientaciones"
    q0 = alternating_orientation(graph)[0]
    return [q0], f"{graph.name}: Γ₀ = {q0.label()}"


def rng_for(cfg: VerificationConfig, graph: DynkinGraph, salt: str) -> np.random.Generator:
    """Generador determinista por (semilla, grafo, comprobación)."""
    return np.random.default_rng([cfg.seed, *(ord(c) for c in f"{graph.name}/{salt}")])


def sums_per_orientation(cfg: VerificationConfig, orientations: int) -> int:
    return ceil(cfg.random_sums / orientations) if cfg.random_sums else 0


def random_decorated_sum(q: Quiver, rng: np.random.Generator, max_terms: int = 3) -> DecoratedRep:
    pool = all_decorated_indecomposables(q)
    count = int(rng.integers(2, max_terms, endpoint=True))
    picks = rng.integers(0, len(pool), size=count)
    return decorated_sum(*(pool[int(k)] for k in picks))
