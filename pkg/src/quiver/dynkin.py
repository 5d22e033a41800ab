"""
Diagramas de Dynkin ADE: etiquetado estándar, tablas de exponentes y número de Coxeter,
y clasificación de bosques arbitrarios.
"""

import re
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from exceptions.quiver_exceptions import ClassificationError, InvariantViolation, UnsupportedGraphError
from quiver.graphs import TreeGraph, recognize_shape
from quiver.roots import simple_reflection_closure
from utils.logger import Logger

logger = Logger.get_logger(__name__)


def exponents_of(kind: str, rank: int) -> Tuple[int, ...]:
    """Exponentes e_i del sistema de raíces irreducible (kind, rank)."""
    if kind == "A":
        return tuple(range(1, rank + 1))
    if kind == "D":
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    if kind == "E":
        return {
            6: (1, 4, 5, 7, 8, 11),
            7: (1, 5, 7, 9, 11, 13, 17),
            8: (1, 7, 11, 13, 17, 19, 23, 29),
        }[rank]
    raise ClassificationError(f"❌ Tipo desconocido: {kind}")


def coxeter_number_of(kind: str, rank: int) -> int:
    if kind == "A":
        return rank + 1
    if kind == "D":
        return 2 * rank - 2
    if kind == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    raise ClassificationError(f"❌ Tipo desconocido: {kind}")


def validate_type(kind: str, rank: int) -> None:
    valid = (
        (kind == "A" and rank >= 1)
        or (kind == "D" and rank >= 4)
        or (kind == "E" and rank in (6, 7, 8))
    )
    if not valid:
        raise ClassificationError(f"❌ Par (tipo, rango) inválido: {kind}{rank}")


@dataclass(frozen=True)
class DynkinGraph:
    """
    Grafo de Dynkin simplemente enlazado (posiblemente disconexo).

    Attributes:
        underlying: Bosque subyacente
        components: (tipo, rango) por componente
        component_vertices: Vértices de cada componente, mismo orden
        exponents: Exponentes por componente
        coxeter_numbers: Número de Coxeter h por componente
    """
    underlying: TreeGraph
    components: Tuple[Tuple[str, int], ...]
    component_vertices: Tuple[Tuple[int, ...], ...]
    exponents: Tuple[Tuple[int, ...], ...]
    coxeter_numbers: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.underlying.vertices

    @property
    def rank(self) -> int:
        return self.underlying.rank

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    @property
    def name(self) -> str:
        return "+".join(f"{kind}{rank}" for kind, rank in self.components)

    def self_check(self) -> None:
        """Por componente, Σ e_i = |Φ_{>0}| (autocomprobación de la tabla)."""
        for (kind, rank), verts, exps in zip(self.components, self.component_vertices, self.exponents):
            count = len(simple_reflection_closure(self.underlying.induced(verts)))
            if sum(exps) != count:
                raise InvariantViolation(
                    f"❌ Tabla de exponentes inconsistente para {kind}{rank}: Σe_i={sum(exps)} ≠ |Φ>0|={count}"
                )


def _standard_edges(kind: str, rank: int, offset: int = 0) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]:
    vertices = tuple(range(offset + 1, offset + rank + 1))
    v = lambda k: offset + k
    if kind == "A":
        edges = [(v(k), v(k + 1)) for k in range(1, rank)]
    elif kind == "D":
        # camino 1-…-(n−2), con n−1 y n unidos a n−2
        edges = [(v(k), v(k + 1)) for k in range(1, rank - 2)]
        edges += [(v(rank - 2), v(rank - 1)), (v(rank - 2), v(rank))]
    else:
        # camino 1-…-(n−1), con n unido al vértice 3
        edges = [(v(k), v(k + 1)) for k in range(1, rank - 1)]
        edges += [(v(3), v(rank))]
    return vertices, tuple(edges)


def _assemble(parts, graph: TreeGraph) -> DynkinGraph:
    dg = DynkinGraph(
        underlying=graph,
        components=tuple((kind, rank) for kind, rank, _ in parts),
        component_vertices=tuple(verts for _, _, verts in parts),
        exponents=tuple(exponents_of(kind, rank) for kind, rank, _ in parts),
        coxeter_numbers=tuple(coxeter_number_of(kind, rank) for kind, rank, _ in parts),
    )
    dg.self_check()
    return dg


def dynkin_graph(kind: str, rank: int) -> DynkinGraph:
    """
    Diagrama estándar etiquetado.

    Raises:
        ClassificationError: si (kind, rank) no es A_n (n≥1), D_n (n≥4), E_6, E_7 o E_8
    """
    kind = kind.upper()
    validate_type(kind, rank)
    vertices, edges = _standard_edges(kind, rank)
    graph = TreeGraph(vertices, edges)
    return _assemble([(kind, rank, vertices)], graph)


def classify_tree(graph: Union[TreeGraph, DynkinGraph]) -> DynkinGraph:
    """
    Reconoce el tipo ADE de cada componente de un bosque arbitrario.

    Raises:
        UnsupportedGraphError: si alguna componente no es un diagrama ADE
    """
    if isinstance(graph, DynkinGraph):
        return graph
    parts = []
    for comp in graph.components:
        shape = recognize_shape(graph, comp)
        if shape is None:
            raise UnsupportedGraphError(f"❌ Componente {list(comp)} no es un diagrama de Dynkin ADE")
        parts.append((shape[0], shape[1], comp))
    return _assemble(parts, graph)


_NAME_RE = re.compile(r"^([ADEade])(\d+)$")


def parse_dynkin_name(name: str) -> DynkinGraph:
    """
    'A3', 'D4', 'E6' o sumas como 'A2+A1' (etiquetas consecutivas por componente).
    """
    parts = []
    vertices, edges = [], []
    offset = 0
    for token in name.replace(" ", "").split("+"):
        match = _NAME_RE.match(token)
        if not match:
            raise ClassificationError(f"❌ Nombre de Dynkin inválido: '{name}'")
        kind, rank = match.group(1).upper(), int(match.group(2))
        validate_type(kind, rank)
        verts, comp_edges = _standard_edges(kind, rank, offset)
        parts.append((kind, rank, verts))
        vertices.extend(verts)
        edges.extend(comp_edges)
        offset += rank
    logger.debug(f"Diagrama {name} con {offset} vértices")
    return _assemble(parts, TreeGraph(tuple(vertices), tuple(edges)))


def as_tree(graph: Union[TreeGraph, DynkinGraph]) -> TreeGraph:
    return graph.underlying if isinstance(graph, DynkinGraph) else graph


def exponent_table(dynkin: DynkinGraph) -> Dict[str, Tuple[Tuple[int, ...], int]]:
    """{nombre de componente: (exponentes, h)}"""
    return {
        f"{kind}{rank}": (exps, h)
        for (kind, rank), exps, h in zip(dynkin.components, dynkin.exponents, dynkin.coxeter_numbers)
    }
