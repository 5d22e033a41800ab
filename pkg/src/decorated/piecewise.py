"""
Reflexiones lineales a trozos σ_i sobre el retículo de raíces y las involuciones τ_±.
"""

from typing import Union

from exceptions.quiver_exceptions import DomainError
from quiver.dynkin import DynkinGraph, as_tree
from quiver.graphs import TreeGraph
from quiver.orientation import alternating_orientation
from quiver.roots import RootVector


def sigma(graph: Union[TreeGraph, DynkinGraph], i: int, gamma: RootVector) -> RootVector:
    """
    [σ_iγ : α_i] = −[γ:α_i] + Σ_{k——i} max([γ:α_k], 0); las demás coordenadas no cambian.

    Raises:
        DomainError: vértice desconocido o vector sobre otro conjunto de vértices
    """
    graph = as_tree(graph)
    if not graph.has_vertex(i):
        raise DomainError(f"❌ Vértice desconocido: {i}")
    if gamma.vertices != graph.vertices:
        raise DomainError("❌ El vector no está definido sobre los vértices del grafo")
    value = -gamma[i] + sum(max(gamma[k], 0) for k in graph.neighbors(i))
    return RootVector.from_mapping(graph.vertices, {**gamma.as_dict(), i: value})


def tau(graph: Union[TreeGraph, DynkinGraph], sign: str, gamma: RootVector) -> RootVector:
    """τ₊ = Π_{i∈I⁺} σ_i, τ₋ = Π_{i∈I⁻} σ_i (I± de la orientación alternante)."""
    if sign not in ("+", "-"):
        raise DomainError(f"❌ Signo inválido para τ: '{sign}'")
    _, plus, minus = alternating_orientation(graph)
    part = plus if sign == "+" else minus
    for i in sorted(part):
        gamma = sigma(graph, i, gamma)
    return gamma
