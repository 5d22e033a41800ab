"""
Retículo de raíces: vectores enteros sobre las raíces simples, sistemas de raíces
por clausura bajo reflexiones simples y la forma de Euler.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, TYPE_CHECKING

import numpy as np

from exceptions.quiver_exceptions import DomainError, UnsupportedGraphError
from quiver.graphs import TreeGraph, recognize_shape

if TYPE_CHECKING:
    from quiver.orientation import Quiver


@dataclass(frozen=True)
class RootVector:
    """
    Vector del retículo de raíces Q: multiplicidades [γ:α_i] por vértice.

    Sirve también como vector dimensión y como vector dimensión con signo.
    """
    vertices: Tuple[int, ...]
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.coords):
            raise DomainError("❌ RootVector: vértices y coordenadas de distinto largo")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    # ---- constructores ----
    @classmethod
    def zero(cls, vertices: Iterable[int]) -> "RootVector":
        vertices = tuple(vertices)
        return cls(vertices, (0,) * len(vertices))

    @classmethod
    def simple(cls, vertices: Iterable[int], i: int) -> "RootVector":
        vertices = tuple(vertices)
        if i not in vertices:
            raise DomainError(f"❌ Vértice desconocido: {i}")
        return cls(vertices, tuple(1 if v == i else 0 for v in vertices))

    @classmethod
    def from_mapping(cls, vertices: Iterable[int], values: Mapping[int, int]) -> "RootVector":
        vertices = tuple(vertices)
        extra = set(values) - set(vertices)
        if extra:
            raise DomainError(f"❌ Coordenadas fuera del conjunto de vértices: {sorted(extra)}")
        return cls(vertices, tuple(values.get(v, 0) for v in vertices))

    # ---- acceso ----
    def __getitem__(self, vertex: int) -> int:
        try:
            return self.coords[self.vertices.index(vertex)]
        except ValueError:
            raise DomainError(f"❌ Vértice desconocido: {vertex}")

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.vertices, self.coords))

    def _check_compatible(self, other: "RootVector") -> None:
        if self.vertices != other.vertices:
            raise DomainError(f"❌ Conjuntos de vértices distintos: {self.vertices} vs {other.vertices}")

    # ---- aritmética ----
    def __add__(self, other: "RootVector") -> "RootVector":
        self._check_compatible(other)
        return RootVector(self.vertices, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check_compatible(other)
        return RootVector(self.vertices, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(self.vertices, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "RootVector":
        return RootVector(self.vertices, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    # ---- propiedades ----
    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(v for v, c in zip(self.vertices, self.coords) if c != 0)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def positive_part(self) -> "RootVector":
        """Σ_i max([γ:α_i], 0) α_i"""
        return RootVector(self.vertices, tuple(max(c, 0) for c in self.coords))

    def negative_part(self) -> "RootVector":
        """Σ_i max(−[γ:α_i], 0) α_i"""
        return RootVector(self.vertices, tuple(max(-c, 0) for c in self.coords))

    def restrict(self, subset: Iterable[int]) -> "RootVector":
        subset = tuple(v for v in self.vertices if v in set(subset))
        return RootVector(subset, tuple(self[v] for v in subset))

    def extend(self, vertices: Iterable[int]) -> "RootVector":
        """Extiende por ceros a un conjunto de vértices mayor."""
        return RootVector.from_mapping(vertices, self.as_dict())

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.height, self.coords)

    def label(self) -> str:
        """Etiqueta corta: '123' para α₁+α₂+α₃, '-2' para −α₂; vectores generales por coordenadas."""
        if self.coords.count(-1) == 1 and all(c in (0, -1) for c in self.coords):
            return f"-{self.support[0]}"
        if all(c in (0, 1) for c in self.coords) and any(self.coords):
            return "".join(str(v) for v in self.support)
        return str(list(self.coords))

    def __str__(self) -> str:
        return self.label()


def cartan_matrix(graph: TreeGraph) -> np.ndarray:
    """Matriz de Cartan simplemente enlazada: 2·I − adyacencia (orden de graph.vertices)."""
    n = graph.rank
    index = {v: k for k, v in enumerate(graph.vertices)}
    cartan = 2 * np.eye(n, dtype=int)
    for u, v in graph.edges:
        cartan[index[u], index[v]] = -1
        cartan[index[v], index[u]] = -1
    return cartan


def weyl_reflection(graph: TreeGraph, i: int, gamma: RootVector) -> RootVector:
    """Reflexión lineal s_i: γ ↦ γ − (2[γ:α_i] − Σ_{k——i} [γ:α_k]) α_i"""
    graph.require_vertex(i)
    if gamma.vertices != graph.vertices:
        raise DomainError("❌ El vector no está definido sobre los vértices del grafo")
    pairing = 2 * gamma[i] - sum(gamma[k] for k in graph.neighbors(i))
    return gamma - pairing * RootVector.simple(graph.vertices, i)


def simple_reflection_closure(graph: TreeGraph) -> List[RootVector]:
    """
    Raíces positivas como clausura de las simples bajo reflexiones simples que
    permanecen positivas. Solo termina para diagramas de Dynkin; el llamador lo garantiza.
    """
    cartan = cartan_matrix(graph)
    n = graph.rank
    seen = set()
    frontier = []
    for k in range(n):
        e = np.zeros(n, dtype=int)
        e[k] = 1
        seen.add(tuple(e))
        frontier.append(e)

    while frontier:
        nxt = []
        for root in frontier:
            pairings = cartan @ root
            for k in range(n):
                if pairings[k] >= 0:
                    continue
                image = root.copy()
                image[k] -= pairings[k]
                key = tuple(int(x) for x in image)
                if key not in seen:
                    seen.add(key)
                    nxt.append(image)
        frontier = nxt

    roots = [RootVector(graph.vertices, coords) for coords in seen]
    return sorted(roots, key=RootVector.sort_key)


def require_dynkin(graph: TreeGraph) -> None:
    for comp in graph.components:
        if recognize_shape(graph, comp) is None:
            raise UnsupportedGraphError(f"❌ Componente {comp} no es de tipo ADE")


@lru_cache(maxsize=None)
def positive_roots(graph: TreeGraph) -> Tuple[RootVector, ...]:
    """
    Raíces positivas Φ_{>0}, ordenadas por (altura, coordenadas).

    Raises:
        UnsupportedGraphError: si alguna componente no es ADE
    """
    require_dynkin(graph)
    return tuple(simple_reflection_closure(graph))


@lru_cache(maxsize=None)
def almost_positive_roots(graph: TreeGraph) -> Tuple[RootVector, ...]:
    """Φ_{≥−1}: raíces positivas seguidas de −α_i en orden de vértices."""
    negatives = tuple(-RootVector.simple(graph.vertices, i) for i in graph.vertices)
    return positive_roots(graph) + negatives


def roots_supported_in(graph: TreeGraph, subset: Iterable[int], almost_positive: bool = True) -> Tuple[RootVector, ...]:
    """Φ(J)_{≥−1} (o Φ(J)_{>0}) como vectores sobre todos los vértices del grafo."""
    subset = set(subset)
    pool = almost_positive_roots(graph) if almost_positive else positive_roots(graph)
    return tuple(r for r in pool if set(r.support) <= subset)


def is_almost_positive(graph: TreeGraph, gamma: RootVector) -> bool:
    return gamma in set(almost_positive_roots(graph))


def require_almost_positive(graph: TreeGraph, gamma: RootVector) -> None:
    if gamma.vertices != graph.vertices or not is_almost_positive(graph, gamma):
        raise DomainError(f"❌ {gamma} no pertenece a Φ_≥−1")


def euler_form(q: "Quiver", d: RootVector, e: RootVector) -> int:
    """
    Forma de Euler ⟨d,e⟩ = Σ_i d_i e_i − Σ_{a:i→j} d_i e_j.

    Coincide con dim Hom − dim Ext¹ para representaciones de esos vectores dimensión.
    """
    if d.vertices != q.vertices or e.vertices != q.vertices:
        raise DomainError("❌ euler_form: los vectores no están definidos sobre los vértices del carcaj")
    value = sum(a * b for a, b in zip(d.coords, e.coords))
    for source, target in q.arrows:
        value -= d[source] * e[target]
    return value
