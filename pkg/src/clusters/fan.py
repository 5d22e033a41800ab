"""
El abanico Δ_Γ: conos de clusters, expansión en clusters y verificación de que el abanico
es simplicial, liso y completo.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from sympy import Matrix

from clusters.compatibility import (
    Cluster,
    enumerate_clusters,
    maximal_compatible_sets,
    positive_clusters,
    require_rank_cap,
)
from config.settings import settings
from decorated.piecewise import sigma
from exceptions.quiver_exceptions import CompletenessViolation, DomainError, InvariantViolation
from quiver.orientation import Quiver, reflect_orientation
from quiver.roots import RootVector, almost_positive_roots
from utils.logger import Logger

logger = Logger.get_logger(__name__)


@dataclass(frozen=True)
class ClusterExpansion:
    """
    γ = Σ m_α·α con soporte Γ-compatible.

    Attributes:
        target: γ
        terms: (α, m_α) con m_α ≥ 1, en el orden global de Φ_{≥−1}
    """
    target: RootVector
    terms: Tuple[Tuple[RootVector, int], ...]

    def as_dict(self) -> Dict[RootVector, int]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[RootVector, ...]:
        return tuple(a for a, _ in self.terms)

    def multiplicity(self, alpha: RootVector) -> int:
        return self.as_dict().get(alpha, 0)

    def to_json(self) -> dict:
        return {
            "target": list(self.target.coords),
            "terms": [{"root": list(a.coords), "label": a.label(), "multiplicity": m} for a, m in self.terms],
        }


@dataclass(frozen=True)
class ClusterFan:
    """
    Datos del abanico de un carcaj: raíces Φ_{≥−1}, clusters por índices y las inversas
    exactas (enteras, por unimodularidad) de las matrices de cada cluster.
    """
    quiver: Quiver
    roots: Tuple[RootVector, ...]
    clusters: Tuple[Tuple[int, ...], ...]
    inverses: np.ndarray = field(compare=False, hash=False, repr=False)

    @property
    def rank(self) -> int:
        return self.quiver.rank

    def cluster(self, k: int) -> Cluster:
        return Cluster(self.quiver, tuple(self.roots[i] for i in self.clusters[k]))

    def coefficients(self, gammas: np.ndarray) -> np.ndarray:
        """Coeficientes de cada vector (columnas de gammas, n × S) en cada cono: (C, n, S)."""
        return np.einsum("cij,js->cis", self.inverses, gammas)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "roots": [list(r.coords) for r in self.roots],
            "clusters": [list(c) for c in self.clusters],
        }

    def to_frame(self) -> pd.DataFrame:
        """Una fila por cluster con los índices de sus raíces."""
        columns = [f"root_{k}" for k in range(self.rank)]
        return pd.DataFrame([list(c) for c in self.clusters], columns=columns)


def _exact_inverse(cluster: Cluster) -> np.ndarray:
    inverse = Matrix(cluster.matrix.tolist()).inv()
    if any(not x.is_integer for x in inverse):
        raise InvariantViolation(f"❌ Inversa no entera para el cluster {cluster.labels()}")
    return np.array(inverse.tolist(), dtype=np.int64)


@lru_cache(maxsize=None)
def _build_fan(q: Quiver) -> ClusterFan:
    roots = almost_positive_roots(q.graph)
    clusters = enumerate_clusters(q, large=True)
    inverses = np.stack([_exact_inverse(c) for c in clusters])
    return ClusterFan(q, roots, tuple(c.indices() for c in clusters), inverses)


def build_fan(q: Quiver, large: bool = False) -> ClusterFan:
    """ClusterFan cacheado por carcaj."""
    require_rank_cap(q, large)
    return _build_fan(q)


def _accepting(fan: ClusterFan, coefficients: np.ndarray) -> List[Tuple[Tuple[int, int], ...]]:
    """Expansiones (índice de raíz, multiplicidad > 0) de los conos que contienen al vector."""
    found = []
    for k in np.flatnonzero((coefficients >= 0).all(axis=1)):
        terms = tuple(
            (index, int(m)) for index, m in sorted(zip(fan.clusters[k], coefficients[k])) if m > 0
        )
        found.append(terms)
    return found


def _resolve(fan: ClusterFan, gamma: RootVector, found) -> ClusterExpansion:
    if not found:
        raise CompletenessViolation(f"❌ Ningún cono de Δ_Γ contiene {list(gamma.coords)} ({fan.quiver.label()})")
    if any(f != found[0] for f in found[1:]):
        raise InvariantViolation(
            f"❌ Expansión no única para {list(gamma.coords)} en {fan.quiver.label()}: {sorted(set(found))}"
        )
    return ClusterExpansion(gamma, tuple((fan.roots[i], m) for i, m in found[0]))


def cluster_expansion(q: Quiver, gamma: RootVector, fan: Optional[ClusterFan] = None) -> ClusterExpansion:
    """
    La única Γ-expansión en clusters de γ: se resuelve el sistema unimodular de cada cluster
    y se aceptan los conos con coeficientes ≥ 0; todos deben dar el mismo soporte.

    Raises:
        DomainError: γ no está definido sobre los vértices de q
        CompletenessViolation: ningún cono acepta γ
        InvariantViolation: dos conos dan expansiones distintas
    """
    if gamma.vertices != q.vertices:
        raise DomainError("❌ γ no está definido sobre los vértices del carcaj")
    fan = fan or build_fan(q)
    column = np.array(gamma.coords, dtype=np.int64).reshape(-1, 1)
    coefficients = fan.coefficients(column)[:, :, 0]
    return _resolve(fan, gamma, _accepting(fan, coefficients))


@dataclass
class FanReport:
    """Resultado de verify_fan; los fallos se informan, no se lanzan."""
    quiver: str
    clusters: int
    samples: int
    seed: int
    impure: List[List[str]] = field(default_factory=list)
    non_unimodular: List[List[str]] = field(default_factory=list)
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.impure or self.non_unimodular or self.failures)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver,
            "passed": self.passed,
            "clusters": self.clusters,
            "samples": self.samples,
            "seed": self.seed,
            "impure": self.impure,
            "non_unimodular": self.non_unimodular,
            "failures": self.failures,
        }


def sample_vectors(rank: int, samples: int, seed: int, box: Optional[int] = None) -> np.ndarray:
    """Vectores enteros pseudoaleatorios en [−box, box]^n como columnas (n × samples)."""
    box = settings.SAMPLE_BOX if box is None else box
    rng = np.random.default_rng(seed)
    return rng.integers(-box, box, size=(rank, samples), endpoint=True)


def check_negative_part(expansion: ClusterExpansion) -> bool:
    """m_{−α_i} = max(−[γ:α_i], 0) y la parte positiva suma max([γ:α_i], 0)."""
    gamma = expansion.target
    positive = RootVector.zero(gamma.vertices)
    for alpha, m in expansion.terms:
        if alpha.is_nonnegative():
            positive = positive + m * alpha
    for i in gamma.vertices:
        neg = -RootVector.simple(gamma.vertices, i)
        if expansion.multiplicity(neg) != max(-gamma[i], 0):
            return False
    return positive == gamma.positive_part()


def verify_fan(q: Quiver, samples: Optional[int] = None, seed: Optional[int] = None, large: bool = False) -> FanReport:
    """
    Comprueba que Δ_Γ es un abanico simplicial (pureza), liso (det ±1) y completo
    (cada muestra tiene expansión con soporte único).
    """
    samples = settings.DEFAULT_SAMPLES if samples is None else samples
    seed = settings.SEED if seed is None else seed
    require_rank_cap(q, large)
    clusters = [Cluster(q, s.roots) for s in maximal_compatible_sets(q)]
    report = FanReport(q.label(), len(clusters), samples, seed)
    for c in clusters:
        if c.size != q.rank:
            report.impure.append(c.labels())
        if abs(c.determinant) != 1:
            report.non_unimodular.append(c.labels())
    if not report.passed:
        return report

    fan = build_fan(q, large)
    gammas = sample_vectors(q.rank, samples, seed)
    coefficients = fan.coefficients(gammas)
    for s in range(samples):
        gamma = RootVector(q.vertices, tuple(int(x) for x in gammas[:, s]))
        try:
            expansion = _resolve(fan, gamma, _accepting(fan, coefficients[:, :, s]))
        except InvariantViolation as e:
            report.failures.append({"gamma": list(gamma.coords), "error": str(e)})
            continue
        if not check_negative_part(expansion):
            report.failures.append({"gamma": list(gamma.coords), "error": "parte negativa incorrecta"})
    logger.info(f"🧭 Abanico {q.label()}: {len(clusters)} conos, {samples} muestras, ok={report.passed}")
    return report


def relabel_clusters(q: Quiver, i: int, large: bool = False) -> bool:
    """σ_i lleva los clusters de Γ biyectivamente sobre los de s_iΓ."""
    target = reflect_orientation(q, i)
    image = {frozenset(sigma(q.graph, i, r) for r in c.roots) for c in enumerate_clusters(q, large)}
    return image == {frozenset(c.roots) for c in enumerate_clusters(target, large)}


def reduction_counts(q: Quiver, large: bool = False) -> Dict[Tuple[int, ...], Tuple[int, int]]:
    """
    Para cada J ⊆ I: (clusters con soporte negativo exactamente J,
    clusters positivos de Γ(I−J)). Ambas cifras deben coincidir.
    """
    clusters = enumerate_clusters(q, large)
    result = {}
    for size in range(q.rank + 1):
        for subset in combinations(q.vertices, size):
            exact = sum(1 for c in clusters if c.negative_support == frozenset(subset))
            rest = [v for v in q.vertices if v not in subset]
            expected = len(positive_clusters(q.restrict(rest), large)) if rest else 1
            result[subset] = (exact, expected)
    return result
