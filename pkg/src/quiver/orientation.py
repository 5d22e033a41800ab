"""
Carcajes: orientaciones de un bosque, reflexiones en fuentes/sumideros,
orientación alternante y enumeración de Quiv(I).
"""

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple, Union

import networkx as nx

from exceptions.quiver_exceptions import AdmissibilityError, DomainError
from quiver.dynkin import DynkinGraph, as_tree, classify_tree
from quiver.graphs import TreeGraph


@dataclass(frozen=True)
class Quiver:
    """
    Orientación de un bosque: cada arista recibe exactamente una dirección.

    Attributes:
        graph: Bosque subyacente
        arrows: Flechas (fuente, destino), ordenadas
    """
    graph: TreeGraph
    arrows: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        graph = as_tree(self.graph)
        object.__setattr__(self, "graph", graph)
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        object.__setattr__(self, "arrows", arrows)

        oriented = sorted((min(s, t), max(s, t)) for s, t in arrows)
        if any(s == t for s, t in arrows):
            raise DomainError("❌ Flecha con fuente igual a destino")
        if tuple(oriented) != graph.edges:
            raise DomainError(f"❌ La orientación {arrows} no cubre exactamente las aristas {graph.edges}")

    @classmethod
    def from_arrows(cls, vertices: Iterable[int], arrows: Iterable[Tuple[int, int]]) -> "Quiver":
        arrows = tuple(arrows)
        return cls(TreeGraph(tuple(vertices), arrows), arrows)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.graph.vertices

    @property
    def rank(self) -> int:
        return self.graph.rank

    @cached_property
    def dynkin(self) -> DynkinGraph:
        """Clasificación ADE del grafo subyacente (lanza UnsupportedGraphError si no lo es)."""
        return classify_tree(self.graph)

    def successors(self, i: int) -> Tuple[int, ...]:
        """Destinos j de las flechas i→j."""
        return tuple(t for s, t in self.arrows if s == i)

    def predecessors(self, i: int) -> Tuple[int, ...]:
        """Fuentes j de las flechas j→i."""
        return tuple(s for s, t in self.arrows if t == i)

    def is_source(self, i: int) -> bool:
        self.graph.require_vertex(i)
        return not self.predecessors(i)

    def is_sink(self, i: int) -> bool:
        self.graph.require_vertex(i)
        return not self.successors(i)

    def is_admissible(self, i: int) -> bool:
        return self.is_source(i) or self.is_sink(i)

    def admissible_vertices(self) -> Tuple[int, ...]:
        return tuple(i for i in self.vertices if self.is_admissible(i))

    def sinks(self) -> Tuple[int, ...]:
        return tuple(i for i in self.vertices if self.is_sink(i))

    def opposite(self) -> "Quiver":
        """Γ^op: todas las flechas invertidas."""
        return Quiver(self.graph, tuple((t, s) for s, t in self.arrows))

    def restrict(self, subset: Iterable[int]) -> "Quiver":
        """Subcarcaj pleno Γ(J) con la orientación inducida."""
        subset = set(subset)
        sub = self.graph.induced(subset)
        return Quiver(sub, tuple(a for a in self.arrows if a[0] in subset and a[1] in subset))

    def label(self) -> str:
        """Descripción compacta, ej: '1>2,3>2'."""
        if not self.arrows:
            return "{" + ",".join(str(v) for v in self.vertices) + "}"
        return ",".join(f"{s}>{t}" for s, t in self.arrows)

    def to_contract(self) -> dict:
        data = {
            "vertices": list(self.vertices),
            "edges": [{"from": s, "to": t} for s, t in self.arrows],
        }
        try:
            data["dynkin"] = self.dynkin.name
        except Exception:
            pass
        return data

    def __str__(self) -> str:
        return f"Quiver({self.label()})"


def reflect_orientation(q: Quiver, i: int) -> Quiver:
    """
    s_iΓ: invierte todas las flechas en i.

    Raises:
        AdmissibilityError: si i no es fuente ni sumidero
    """
    if not q.is_admissible(i):
        raise AdmissibilityError(f"❌ El vértice {i} no es fuente ni sumidero en {q.label()}", vertex=i)
    return Quiver(q.graph, tuple((t, s) if i in (s, t) else (s, t) for s, t in q.arrows))


def alternating_orientation(graph: Union[TreeGraph, DynkinGraph]) -> Tuple[Quiver, FrozenSet[int], FrozenSet[int]]:
    """
    Γ₀: 2-coloreo por componente; I⁺ son fuentes, I⁻ sumideros.
    El vértice mínimo de cada componente queda en I⁺.
    """
    graph = as_tree(graph)
    plus, minus = set(), set()
    for comp in graph.components:
        distances = nx.single_source_shortest_path_length(graph.nx_graph, comp[0])
        for v, d in distances.items():
            (plus if d % 2 == 0 else minus).add(v)
    arrows = tuple((u, v) if u in plus else (v, u) for u, v in graph.edges)
    return Quiver(graph, arrows), frozenset(plus), frozenset(minus)


def enumerate_orientations(graph: Union[TreeGraph, DynkinGraph]) -> List[Quiver]:
    """Las 2^|aristas| orientaciones, en orden determinista (bit 0 = menor→mayor)."""
    graph = as_tree(graph)
    result = []
    for flips in itertools.product((False, True), repeat=len(graph.edges)):
        arrows = tuple((v, u) if flip else (u, v) for (u, v), flip in zip(graph.edges, flips))
        result.append(Quiver(graph, arrows))
    return result


def reachable_orientations(q: Quiver) -> List[Quiver]:
    """Orientaciones alcanzables desde q por reflexiones admisibles (BFS)."""
    seen = {q}
    order = [q]
    queue = deque([q])
    while queue:
        current = queue.popleft()
        for i in current.admissible_vertices():
            nxt = reflect_orientation(current, i)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def reflection_path(start: Quiver, end: Quiver) -> Tuple[int, ...]:
    """Sucesión de vértices admisibles que lleva start a end (BFS, camino más corto)."""
    if start.graph != end.graph:
        raise DomainError("❌ Las orientaciones no comparten grafo subyacente")
    parents = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == end:
            break
        for i in current.admissible_vertices():
            nxt = reflect_orientation(current, i)
            if nxt not in parents:
                parents[nxt] = (current, i)
                queue.append(nxt)
    if end not in parents:
        raise DomainError(f"❌ {end.label()} no es alcanzable desde {start.label()}")
    path = []
    node = end
    while parents[node] is not None:
        node, i = parents[node]
        path.append(i)
    return tuple(reversed(path))
