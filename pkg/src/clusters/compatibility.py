"""
Conjuntos Γ-compatibles, Γ-clusters y su enumeración como cliques maximales del grafo
de compatibilidad sobre Φ_{≥−1}.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np
from sympy import ImmutableMatrix

from config.settings import settings
from decorated.decorated_rep import compatibility_degree
from exceptions.quiver_exceptions import DomainError, InvariantViolation, ResourceCapError
from quiver.orientation import Quiver
from quiver.roots import RootVector, almost_positive_roots, positive_roots, require_almost_positive
from representations.homology import ext_dim
from representations.indecomposables import indecomposable_rep
from utils.logger import Logger

logger = Logger.get_logger(__name__)


@dataclass(frozen=True)
class CompatibleSet:
    """
    Subconjunto de Φ_{≥−1} con grado de compatibilidad 0 dos a dos.

    Attributes:
        quiver: Carcaj Γ
        roots: Raíces en el orden global de Φ_{≥−1}
    """
    quiver: Quiver
    roots: Tuple[RootVector, ...]

    @property
    def size(self) -> int:
        return len(self.roots)

    @property
    def negative_support(self) -> FrozenSet[int]:
        """S(C) = {i : −α_i ∈ C}"""
        return frozenset(r.support[0] for r in self.roots if not r.is_nonnegative())

    def is_positive(self) -> bool:
        return not self.negative_support

    def positive_part(self) -> Tuple[RootVector, ...]:
        return tuple(r for r in self.roots if r.is_nonnegative())

    def indices(self) -> Tuple[int, ...]:
        order = almost_positive_roots(self.quiver.graph)
        return tuple(order.index(r) for r in self.roots)

    def labels(self) -> List[str]:
        return [r.label() for r in self.roots]

    def __contains__(self, root: RootVector) -> bool:
        return root in self.roots


@dataclass(frozen=True)
class Cluster(CompatibleSet):
    """Conjunto compatible maximal: tamaño n y base del retículo de raíces."""

    @cached_property
    def matrix(self) -> np.ndarray:
        """Columnas = raíces del cluster."""
        return np.array([r.coords for r in self.roots], dtype=np.int64).T

    @cached_property
    def determinant(self) -> int:
        if not self.roots:
            return 1
        if self.size != len(self.quiver.vertices):
            return 0
        return int(ImmutableMatrix(self.matrix.tolist()).det())


def require_rank_cap(q: Quiver, large: bool = False) -> None:
    """
    Raises:
        ResourceCapError: si el rango supera settings.RANK_CAP sin el permiso explícito
    """
    if q.rank > settings.RANK_CAP and not large:
        raise ResourceCapError(
            f"❌ Rango {q.rank} > {settings.RANK_CAP}: se requiere --large para {q.label()}"
        )


def ordered(q: Quiver, roots: Iterable[RootVector]) -> Tuple[RootVector, ...]:
    """Ordena raíces según el orden global de Φ_{≥−1}."""
    position = {r: k for k, r in enumerate(almost_positive_roots(q.graph))}
    return tuple(sorted(set(roots), key=position.__getitem__))


def is_compatible(q: Quiver, roots: Iterable[RootVector]) -> bool:
    roots = list(roots)
    for r in roots:
        require_almost_positive(q.graph, r)
    return all(compatibility_degree(q, a, b) == 0 for a, b in combinations(roots, 2))


def compatible_set(q: Quiver, roots: Iterable[RootVector]) -> CompatibleSet:
    """Construye un CompatibleSet validando la compatibilidad dos a dos."""
    roots = ordered(q, roots)
    if not is_compatible(q, roots):
        raise DomainError(f"❌ {[r.label() for r in roots]} no es Γ-compatible en {q.label()}")
    return CompatibleSet(q, roots)


def compatibility_matrix(q: Quiver, roots: Optional[Tuple[RootVector, ...]] = None) -> np.ndarray:
    """Matriz de grados (α‖β)_Γ en el orden dado (por defecto Φ_{≥−1})."""
    roots = almost_positive_roots(q.graph) if roots is None else roots
    n = len(roots)
    degrees = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            value = compatibility_degree(q, roots[a], roots[b])
            degrees[a, b] = degrees[b, a] = value
    return degrees


@lru_cache(maxsize=None)
def compatibility_graph(q: Quiver) -> nx.Graph:
    """Grafo sobre Φ_{≥−1} con aristas entre raíces de grado de compatibilidad 0."""
    roots = almost_positive_roots(q.graph)
    graph = nx.Graph()
    graph.add_nodes_from(roots)
    for a, b in combinations(roots, 2):
        if compatibility_degree(q, a, b) == 0:
            graph.add_edge(a, b)
    return graph


def maximal_compatible_sets(q: Quiver) -> List[CompatibleSet]:
    """Todos los conjuntos compatibles maximales (cliques maximales), en orden lexicográfico."""
    graph = compatibility_graph(q)
    result = [CompatibleSet(q, ordered(q, clique)) for clique in nx.find_cliques(graph)]
    return sorted(result, key=CompatibleSet.indices)


@lru_cache(maxsize=None)
def _clusters(q: Quiver) -> Tuple[Cluster, ...]:
    clusters = []
    for cset in maximal_compatible_sets(q):
        cluster = Cluster(q, cset.roots)
        if cluster.size != q.rank:
            raise InvariantViolation(
                f"❌ Cluster de tamaño {cluster.size} ≠ {q.rank} en {q.label()}: {cluster.labels()}"
            )
        if abs(cluster.determinant) != 1:
            raise InvariantViolation(
                f"❌ Cluster no unimodular (det={cluster.determinant}) en {q.label()}: {cluster.labels()}"
            )
        clusters.append(cluster)
    logger.info(f"🔷 {len(clusters)} clusters en {q.label()}")
    return tuple(clusters)


def enumerate_clusters(q: Quiver, large: bool = False) -> List[Cluster]:
    """
    Γ-clusters de q, ordenados lexicográficamente por índices en Φ_{≥−1}.

    Raises:
        ResourceCapError: rango por encima del límite sin large=True
        InvariantViolation: algún cluster no tiene tamaño n o no es unimodular
    """
    require_rank_cap(q, large)
    return list(_clusters(q))


def ext_free_maximal_sets(q: Quiver, size: Optional[int] = None) -> List[FrozenSet[RootVector]]:
    """
    Conjuntos Ext-libres maximales de indecomponibles (Ext¹ = 0 en ambos sentidos),
    calculados directamente con ext_dim y sin pasar por E_Γ.
    """
    roots = positive_roots(q.graph)
    reps = {r: indecomposable_rep(q, r) for r in roots}
    graph = nx.Graph()
    graph.add_nodes_from(roots)
    for a, b in combinations(roots, 2):
        if ext_dim(reps[a], reps[b]) == 0 and ext_dim(reps[b], reps[a]) == 0:
            graph.add_edge(a, b)
    cliques = [frozenset(c) for c in nx.find_cliques(graph)]
    if size is not None:
        cliques = [c for c in cliques if len(c) == size]
    return cliques


def positive_clusters(q: Quiver, large: bool = False) -> List[Cluster]:
    """
    Clusters con soporte negativo vacío; se contrastan con los conjuntos Ext-libres
    maximales de tamaño n.

    Raises:
        InvariantViolation: si ambas rutas no coinciden
    """
    result = [c for c in enumerate_clusters(q, large) if c.is_positive()]
    by_ext = set(ext_free_maximal_sets(q, size=q.rank))
    if {frozenset(c.roots) for c in result} != by_ext:
        raise InvariantViolation(f"❌ Clusters positivos y conjuntos Ext-libres no coinciden en {q.label()}")
    return result
