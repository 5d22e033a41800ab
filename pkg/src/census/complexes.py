"""
Complejos simpliciales positivos: descripción por facetas, isomorfismo por fuerza bruta y la
comparación Γ₀ / Γ₁ en A₃.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from census.fvectors import f_plus_vector, has_face, positive_complex, positive_facets
from config.settings import settings
from exceptions.quiver_exceptions import DomainError, ResourceCapError
from quiver.dynkin import dynkin_graph
from quiver.orientation import Quiver, alternating_orientation
from quiver.roots import RootVector
from utils.logger import Logger

logger = Logger.get_logger(__name__)


@dataclass(frozen=True)
class SimplicialComplexDesc:
    """Vértices (raíces positivas) y facetas; las caras se sobreentienden por clausura."""
    vertices: Tuple[RootVector, ...]
    facets: Tuple[frozenset, ...]

    @classmethod
    def of(cls, q: Quiver) -> "SimplicialComplexDesc":
        graph = positive_complex(q)
        vertices = tuple(sorted(graph.nodes, key=RootVector.sort_key))
        return cls(vertices, tuple(positive_facets(q)))

    def degree(self, root: RootVector) -> int:
        """Número de aristas que contienen a root."""
        neighbors = set()
        for facet in self.facets:
            if root in facet:
                neighbors |= facet - {root}
        return len(neighbors)

    def to_json(self) -> dict:
        return {
            "vertices": [r.label() for r in self.vertices],
            "facets": [sorted(r.label() for r in facet) for facet in self.facets],
        }


def complex_isomorphic(q: Quiver, q2: Quiver) -> bool:
    """
    Isomorfismo de complejos positivos. Son complejos de cliques (la compatibilidad es por pares),
    así que basta el isomorfismo del 1-esqueleto (GraphMatcher, que poda por grados).

    Raises:
        DomainError: si los grafos subyacentes difieren
        ResourceCapError: rango por encima de settings.BRUTE_FORCE_ISO_CAP
    """
    if q.graph != q2.graph:
        raise DomainError("❌ Los carcajes no comparten grafo subyacente")
    if q.rank > settings.BRUTE_FORCE_ISO_CAP:
        raise ResourceCapError(
            f"❌ Isomorfismo por fuerza bruta limitado a rango {settings.BRUTE_FORCE_ISO_CAP}; recibido {q.rank}"
        )
    return GraphMatcher(positive_complex(q), positive_complex(q2)).is_isomorphic()


def _root(vertices: Tuple[int, ...], support: Tuple[int, ...]) -> RootVector:
    return RootVector.from_mapping(vertices, {v: 1 for v in support})


@dataclass
class FigureReport:
    counts: Dict[str, List[int]]
    degrees: Dict[str, int]
    edges: Dict[str, Dict[str, bool]]
    isomorphic: bool

    @property
    def passed(self) -> bool:
        expected_edges = {
            "alternating": {"12|23": True, "2|123": False},
            "linear": {"12|23": False, "2|123": True},
        }
        return (
            all(c == [1, 6, 10, 5] for c in self.counts.values())
            and self.degrees == {"alternating": 4, "linear": 5}
            and self.edges == expected_edges
            and not self.isomorphic
        )

    def to_json(self) -> dict:
        return {
            "f_plus": self.counts,
            "degree_123": self.degrees,
            "edges": self.edges,
            "isomorphic": self.isomorphic,
            "passed": self.passed,
        }


def a3_figure_check() -> FigureReport:
    """
    Complejos positivos de A₃ para Γ₀ (alternante) y Γ₁ = 1→2→3: f-vectores, grado de
    α₁+α₂+α₃, las aristas {12, 23} y {2, 123}, y no isomorfía.
    """
    graph = dynkin_graph("A", 3)
    vertices = graph.vertices
    quivers = {
        "alternating": alternating_orientation(graph)[0],
        "linear": Quiver.from_arrows(vertices, [(1, 2), (2, 3)]),
    }
    top = _root(vertices, (1, 2, 3))
    pairs = {
        "12|23": (_root(vertices, (1, 2)), _root(vertices, (2, 3))),
        "2|123": (_root(vertices, (2,)), top),
    }
    report = FigureReport(
        counts={name: f_plus_vector(q).as_list() for name, q in quivers.items()},
        degrees={name: nx.degree(positive_complex(q), top) for name, q in quivers.items()},
        edges={name: {key: has_face(q, pair) for key, pair in pairs.items()} for name, q in quivers.items()},
        isomorphic=complex_isomorphic(quivers["alternating"], quivers["linear"]),
    )
    logger.info(f"🔺 Complejos de A₃: grados de 123 {report.degrees}, isomorfos={report.isomorphic}")
    return report
