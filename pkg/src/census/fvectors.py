"""
f-vectores de los complejos de conjuntos compatibles: f⁺_Γ(k) sobre raíces positivas
(conjuntos Ext-libres) y f_Γ(k, J) sobre Φ(J)_{≥−1} con la orientación inducida Γ|_J.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

import networkx as nx

from clusters.compatibility import compatibility_graph, require_rank_cap
from exceptions.quiver_exceptions import DomainError
from quiver.orientation import Quiver
from quiver.roots import RootVector, positive_roots


@dataclass(frozen=True)
class FVector:
    """counts[k] = número de conjuntos de cardinal k."""
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.counts or self.counts[0] != 1:
            raise DomainError(f"❌ f-vector sin el conjunto vacío: {self.counts}")
        if any(c < 0 for c in self.counts):
            raise DomainError(f"❌ f-vector con entradas negativas: {self.counts}")

    def __getitem__(self, k: int) -> int:
        """Fuera de rango vale 0."""
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def top(self) -> int:
        return self.counts[-1]

    def as_list(self) -> List[int]:
        return list(self.counts)


def _count_cliques(graph: nx.Graph) -> FVector:
    counts = [1]
    # enumerate_all_cliques devuelve los cliques por tamaño creciente
    for clique in nx.enumerate_all_cliques(graph):
        size = len(clique)
        if size == len(counts):
            counts.append(0)
        counts[size] += 1
    return FVector(tuple(counts))


def positive_complex(q: Quiver) -> nx.Graph:
    """1-esqueleto del complejo positivo: raíces positivas con grado de compatibilidad 0."""
    return compatibility_graph(q).subgraph(positive_roots(q.graph)).copy()


def f_plus_vector(q: Quiver, large: bool = False) -> FVector:
    """
    f⁺_Γ: conjuntos Ext-libres de indecomponibles (conjuntos compatibles positivos) por cardinal.

    Raises:
        ResourceCapError: rango por encima del límite sin large=True
        UnsupportedGraphError: si el grafo no es ADE
    """
    require_rank_cap(q, large)
    return _count_cliques(positive_complex(q))


def _require_subset(q: Quiver, subset: Iterable[int]) -> frozenset:
    subset = frozenset(int(v) for v in subset)
    extra = subset - set(q.vertices)
    if extra:
        raise DomainError(f"❌ J contiene vértices ajenos a {q.label()}: {sorted(extra)}")
    return subset


def full_f_vector(q: Quiver, subset: Iterable[int], large: bool = False) -> FVector:
    """
    f_Γ(·, J): subconjuntos Γ|_J-compatibles de Φ(J)_{≥−1} por cardinal.

    Raises:
        DomainError: si J no está contenido en los vértices
    """
    subset = _require_subset(q, subset)
    if not subset:
        return FVector((1,))
    sub = q.restrict(subset)
    require_rank_cap(sub, large)
    return _count_cliques(compatibility_graph(sub))


def f_plus_restricted(q: Quiver, subset: Iterable[int]) -> FVector:
    """f⁺_Γ(·, J) sobre el subcarcaj pleno Γ|_J."""
    subset = _require_subset(q, subset)
    if not subset:
        return FVector((1,))
    return f_plus_vector(q.restrict(subset), large=True)


def positive_facets(q: Quiver) -> List[frozenset]:
    """Caras maximales del complejo positivo."""
    return sorted(
        (frozenset(c) for c in nx.find_cliques(positive_complex(q))),
        key=lambda face: sorted(r.sort_key() for r in face),
    )


def has_face(q: Quiver, roots: Iterable[RootVector]) -> bool:
    graph = positive_complex(q)
    roots = list(roots)
    return all(graph.has_node(r) for r in roots) and all(
        graph.has_edge(a, b) for k, a in enumerate(roots) for b in roots[k + 1:]
    )
