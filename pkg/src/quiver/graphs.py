"""
Grafos subyacentes: bosques finitos con vértices enteros.
Toda la teoría de representaciones se apoya en estos objetos inmutables.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Tuple

import networkx as nx

from exceptions.quiver_exceptions import DomainError


@dataclass(frozen=True)
class TreeGraph:
    """
    Bosque finito (cada componente conexa es un árbol).

    Attributes:
        vertices: Vértices ordenados (enteros pequeños, distintos)
        edges: Aristas no orientadas, normalizadas como (menor, mayor) y ordenadas
    """
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError(f"❌ Vértices repetidos: {vertices}")
        vertex_set = set(vertices)

        normalized = []
        for edge in self.edges:
            u, v = (int(x) for x in edge)
            if u == v:
                raise DomainError(f"❌ Arista {u}-{v} une un vértice consigo mismo")
            if u not in vertex_set or v not in vertex_set:
                raise DomainError(f"❌ Arista {u}-{v} referencia un vértice inexistente")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            raise DomainError("❌ Aristas duplicadas")

        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

        # |aristas| = |vértices| - #componentes, sin ciclos
        if self.vertices and not nx.is_forest(self.nx_graph):
            raise DomainError(f"❌ El grafo contiene un ciclo: {self.edges}")

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def has_vertex(self, i: int) -> bool:
        return i in self.nx_graph

    def require_vertex(self, i: int) -> None:
        if not self.has_vertex(i):
            raise DomainError(f"❌ Vértice desconocido: {i}")

    def neighbors(self, i: int) -> Tuple[int, ...]:
        self.require_vertex(i)
        return tuple(sorted(self.nx_graph.neighbors(i)))

    def linked(self, i: int, j: int) -> bool:
        """True si i y j están unidos por una arista."""
        return self.nx_graph.has_edge(i, j)

    @cached_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Componentes conexas, cada una ordenada, en orden de su vértice mínimo."""
        comps = [tuple(sorted(c)) for c in nx.connected_components(self.nx_graph)]
        return tuple(sorted(comps))

    def component_of(self, i: int) -> Tuple[int, ...]:
        for comp in self.components:
            if i in comp:
                return comp
        raise DomainError(f"❌ Vértice desconocido: {i}")

    def induced(self, subset: Iterable[int]) -> "TreeGraph":
        """Subgrafo pleno sobre un subconjunto de vértices."""
        subset = set(subset)
        for v in subset:
            self.require_vertex(v)
        return TreeGraph(
            vertices=tuple(sorted(subset)),
            edges=tuple(e for e in self.edges if e[0] in subset and e[1] in subset),
        )

    def __str__(self) -> str:
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"TreeGraph({list(self.vertices)}; {edges})"


def path_graph(n: int, start: int = 1) -> TreeGraph:
    vertices = tuple(range(start, start + n))
    return TreeGraph(vertices, tuple((v, v + 1) for v in vertices[:-1]))


def recognize_shape(graph: TreeGraph, component: Tuple[int, ...]) -> Optional[Tuple[str, int]]:
    """
    Reconoce el tipo ADE de una componente conexa.

    Returns:
        (tipo, rango) o None si la componente no es un diagrama de Dynkin simplemente enlazado
    """
    n = len(component)
    degrees = {v: graph.nx_graph.degree(v) for v in component}
    branch = [v for v, d in degrees.items() if d > 2]

    if not branch:
        return ("A", n)
    if len(branch) > 1 or degrees[branch[0]] != 3:
        return None

    center = branch[0]
    arms = []
    for start in graph.neighbors(center):
        # Longitud de cada brazo partiendo del centro
        length, prev, cur = 1, center, start
        while True:
            nxt = [w for w in graph.neighbors(cur) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()

    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ("E", n)
    return None
