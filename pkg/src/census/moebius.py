"""
Inversión de Möbius sobre el poset {(k, J)} con (l, K) ≤ (k, J) ⇔ K ⊆ J y k − l = |J − K|,
y comprobación de la relación entre f_Γ y f⁺_Γ.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Hashable, Iterable, List, Tuple

import networkx as nx

from census.fvectors import f_plus_restricted, full_f_vector
from clusters.compatibility import require_rank_cap
from quiver.orientation import Quiver
from utils.logger import Logger

logger = Logger.get_logger(__name__)

PosetElement = Tuple[int, frozenset]


def poset_graph(elements: Iterable[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> nx.DiGraph:
    """DAG con una arista x → y por cada x < y."""
    elements = list(elements)
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for x in elements:
        for y in elements:
            if x != y and leq(x, y):
                graph.add_edge(x, y)
    return graph


def mobius_function(graph: nx.DiGraph) -> Dict[Tuple[Hashable, Hashable], int]:
    """
    μ(x, y) para x ≤ y en un poset dado como DAG transitivo:
    μ(x, x) = 1 y μ(x, y) = −Σ_{x ≤ z < y} μ(x, z).
    """
    order = list(nx.topological_sort(graph))
    mu: Dict[Tuple[Hashable, Hashable], int] = {}
    for x in order:
        mu[(x, x)] = 1
        above = nx.descendants(graph, x)
        for y in order:
            if y not in above:
                continue
            below_y = nx.ancestors(graph, y)
            mu[(x, y)] = -sum(mu[(x, z)] for z in below_y if z == x or z in above)
    return mu


def subsets_of(vertices: Iterable[int]) -> List[frozenset]:
    vertices = tuple(vertices)
    return [frozenset(c) for size in range(len(vertices) + 1) for c in combinations(vertices, size)]


def kj_leq(x: PosetElement, y: PosetElement) -> bool:
    (l, small), (k, big) = x, y
    return small <= big and k - l == len(big - small)


def kj_poset(vertices: Iterable[int]) -> nx.DiGraph:
    elements = [(k, subset) for subset in subsets_of(vertices) for k in range(len(subset) + 1)]
    return poset_graph(elements, kj_leq)


@dataclass
class MoebiusReport:
    quiver: str
    checked: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"quiver": self.quiver, "checked": self.checked, "passed": self.passed, "failures": self.failures}


def _fmt(element: PosetElement) -> str:
    k, subset = element
    return f"({k},{{{','.join(str(v) for v in sorted(subset))}}})"


def moebius_consistency(q: Quiver, large: bool = False) -> MoebiusReport:
    """
    Para cada (k, J): f(k, J) = Σ_{K ⊆ J, |K| ≤ k} f⁺(k − |K|, J − K); después invierte con μ
    para recuperar f⁺ de f y contrasta μ con (−1)^{|J−K|}.
    """
    require_rank_cap(q, large)
    report = MoebiusReport(q.label())
    poset = kj_poset(q.vertices)
    full = {subset: full_f_vector(q, subset, large) for subset in subsets_of(q.vertices)}
    plus = {subset: f_plus_restricted(q, subset) for subset in subsets_of(q.vertices)}
    f = {(k, subset): full[subset][k] for k, subset in poset.nodes}
    f_plus = {(k, subset): plus[subset][k] for k, subset in poset.nodes}
    mu = mobius_function(poset)

    for y in poset.nodes:
        k, big = y
        lower = [x for x in poset.nodes if kj_leq(x, y)]
        summed = sum(f_plus[x] for x in lower)
        if summed != f[y]:
            report.failures.append({"relation": "f=Σf⁺", "at": _fmt(y), "f": f[y], "sum": summed})
        recovered = sum(mu[(x, y)] * f[x] for x in lower)
        if recovered != f_plus[y]:
            report.failures.append({"relation": "inversion", "at": _fmt(y), "f_plus": f_plus[y], "recovered": recovered})
        for x in lower:
            expected = (-1) ** len(big - x[1])
            if mu[(x, y)] != expected:
                report.failures.append({"relation": "mu", "at": f"{_fmt(x)}≤{_fmt(y)}", "mu": mu[(x, y)]})
        report.checked += 1

    logger.info(f"🧮 Möbius en {q.label()}: {report.checked} pares (k,J), ok={report.passed}")
    return report
