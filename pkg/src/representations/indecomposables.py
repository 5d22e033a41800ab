"""
Indecomponibles de un carcaj de Dynkin y descomposición de Krull–Schmidt.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx

from exceptions.quiver_exceptions import DomainError, InvariantViolation
from quiver.orientation import Quiver, reflect_orientation
from quiver.roots import RootVector, positive_roots, weyl_reflection
from representations.homology import hom_dim
from representations.reflection import classical_reflect
from representations.representation import Representation, simple_rep
from utils.logger import Logger

logger = Logger.get_logger(__name__)


def sink_reflection_sequence(q: Quiver, alpha: RootVector) -> Tuple[Tuple[int, ...], Quiver, int]:
    """
    Simula sobre vectores raíz: refleja en el sumidero de menor etiqueta (de la componente
    del soporte de α) hasta que α = α_i.

    Returns:
        (vértices reflejados en orden, carcaj final, vértice i con α final = α_i)
    """
    graph = q.graph
    component = set(graph.component_of(alpha.support[0]))
    steps: List[int] = []
    current_q, current = q, alpha
    seen = set()
    while True:
        i = min(v for v in current_q.sinks() if v in component)
        if current == RootVector.simple(graph.vertices, i):
            return tuple(steps), current_q, i
        state = (current_q, current)
        if state in seen:
            raise InvariantViolation(f"❌ Sucesión de sumideros cíclica para {alpha} en {q.label()}")
        seen.add(state)
        current = weyl_reflection(graph, i, current)
        current_q = reflect_orientation(current_q, i)
        steps.append(i)


@lru_cache(maxsize=None)
def indecomposable_rep(q: Quiver, alpha: RootVector) -> Representation:
    """
    M_α: la representación indecomponible con vector dimensión α (Gabriel).

    Se construye E_i sobre el carcaj final de la sucesión de sumideros y se retrocede con
    los funtores de reflexión del lado fuente.

    Raises:
        DomainError: si α no es raíz positiva
    """
    if alpha.vertices != q.vertices or alpha not in set(positive_roots(q.graph)):
        raise DomainError(f"❌ {alpha} no es raíz positiva de {q.label()}")

    steps, final_q, i = sink_reflection_sequence(q, alpha)
    rep = simple_rep(final_q, i)
    current_q = final_q
    for vertex in reversed(steps):
        # vertex es fuente en current_q; S_vertex lleva de vuelta al carcaj anterior
        rep = classical_reflect(current_q, vertex, rep)
        current_q = rep.quiver

    if rep.dims != alpha:
        raise InvariantViolation(f"❌ Construcción de M_{alpha} produjo dims {rep.dims.coords}")
    return rep


def all_indecomposables(q: Quiver) -> Tuple[Representation, ...]:
    """Indecomponibles en el orden global de raíces."""
    return tuple(indecomposable_rep(q, alpha) for alpha in positive_roots(q.graph))


@dataclass(frozen=True)
class HomOrder:
    """
    Raíces positivas ordenadas de modo que Hom(M_β, M_α) = 0 si β va después de α;
    matrix[a][b] = dim Hom(M_{roots[a]}, M_{roots[b]}) es unitriangular superior.
    """
    quiver: Quiver
    roots: Tuple[RootVector, ...]
    matrix: Tuple[Tuple[int, ...], ...]

    def index(self, alpha: RootVector) -> int:
        return self.roots.index(alpha)


@lru_cache(maxsize=None)
def hom_order(q: Quiver) -> HomOrder:
    """
    Orden topológico (lexicográfico por orden global de raíces) de la relación Hom ≠ 0.

    Raises:
        InvariantViolation: si la relación tiene ciclos o la matriz no es unitriangular
    """
    roots = positive_roots(q.graph)
    reps = {alpha: indecomposable_rep(q, alpha) for alpha in roots}
    position = {alpha: k for k, alpha in enumerate(roots)}

    dims: Dict[Tuple[RootVector, RootVector], int] = {}
    relation = nx.DiGraph()
    relation.add_nodes_from(roots)
    for alpha in roots:
        for beta in roots:
            value = hom_dim(reps[alpha], reps[beta])
            dims[(alpha, beta)] = value
            if alpha != beta and value:
                relation.add_edge(alpha, beta)

    try:
        ordered = tuple(nx.lexicographical_topological_sort(relation, key=position.get))
    except nx.NetworkXUnfeasible:
        raise InvariantViolation(f"❌ La relación Hom ≠ 0 tiene ciclos en {q.label()}")

    matrix = tuple(tuple(dims[(a, b)] for b in ordered) for a in ordered)
    for k, row in enumerate(matrix):
        if row[k] != 1 or any(row[:k]):
            raise InvariantViolation(f"❌ Matriz Hom no unitriangular en {q.label()} (fila {ordered[k]})")
    logger.debug(f"Orden Hom de {q.label()}: {len(ordered)} indecomponibles")
    return HomOrder(q, ordered, matrix)


def hom_matrix(q: Quiver) -> Tuple[Tuple[RootVector, ...], Tuple[Tuple[int, ...], ...]]:
    """(raíces en orden Hom, matriz dim Hom(M_α, M_β))."""
    order = hom_order(q)
    return order.roots, order.matrix


def decompose(m: Representation) -> Counter:
    """
    Multiplicidades m_α con M ≃ ⊕ M_α^{m_α}, resolviendo
    dim Hom(M, M_β) = Σ_α m_α · dim Hom(M_α, M_β) por sustitución hacia adelante.

    Raises:
        InvariantViolation: si la solución no es entera no negativa o no recupera dims M
    """
    if m.is_zero():
        return Counter()
    order = hom_order(m.quiver)
    counts = [hom_dim(m, indecomposable_rep(m.quiver, beta)) for beta in order.roots]

    multiplicities: List[int] = []
    for b in range(len(order.roots)):
        value = counts[b] - sum(multiplicities[a] * order.matrix[a][b] for a in range(b))
        if value < 0:
            raise InvariantViolation(f"❌ Multiplicidad negativa para {order.roots[b]} al descomponer {m}")
        multiplicities.append(value)

    result = Counter({alpha: k for alpha, k in zip(order.roots, multiplicities) if k})
    total = RootVector.zero(m.quiver.vertices)
    for alpha, k in result.items():
        total = total + k * alpha
    if total != m.dims:
        raise InvariantViolation(f"❌ Descomposición de {m} no recupera su vector dimensión")
    return result
