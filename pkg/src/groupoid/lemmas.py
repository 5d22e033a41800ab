"""
Comprobaciones exhaustivas acotadas de los lemas sobre expresiones reducidas y de la
corrección de las relaciones (R1)–(R4).
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, List, Tuple, Union

from decorated.decorated_rep import compatibility_degree
from exceptions.quiver_exceptions import UnsupportedGraphError
from groupoid.words import (
    DUAL,
    Sigma,
    Word,
    apply_word,
    check_inbetween,
    insert_letter,
    is_reduced,
    normal_form,
    word_action_on_roots,
)
from quiver.dynkin import DynkinGraph, as_tree
from quiver.graphs import TreeGraph
from quiver.orientation import Quiver, alternating_orientation, enumerate_orientations, reflect_orientation
from quiver.roots import almost_positive_roots, require_dynkin
from utils.logger import Logger

logger = Logger.get_logger(__name__)


@dataclass
class LemmaReport:
    """Por lema: palabras examinadas y contraejemplos."""
    graph: str
    max_len: int
    checked: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, List[str]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness: str) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        self.violations.setdefault(name, [])
        if not ok:
            self.violations[name].append(witness)

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "max_len": self.max_len,
            "passed": self.passed,
            "checked": dict(sorted(self.checked.items())),
            "violations": dict(sorted(self.violations.items())),
        }


def reduced_words(start: Quiver, max_len: int) -> Iterator[Tuple[Word, Quiver]]:
    """
    Palabras reducidas aplicables sin D desde start, hasta max_len (DFS). Los prefijos de una
    palabra reducida son reducidos, así que basta con extender las reducidas.
    """
    graph = start.graph
    stack = [((), (), start)]
    while stack:
        letters, reduced, q = stack.pop()
        yield Word.of(start, letters), q
        if len(letters) == max_len:
            continue
        for i in reversed(q.admissible_vertices()):
            extended = insert_letter(graph, reduced, i)
            if len(extended) == len(reduced) + 1:
                stack.append((letters + (i,), extended, reflect_orientation(q, i)))


def check_reduced_criterion(tree: TreeGraph, max_len: int, report: LemmaReport) -> None:
    """
    is_reduced(w) ⇔ |forma normal| = |w|. Se examinan las palabras reducidas y todas sus
    extensiones por una letra; cualquier otra palabra tiene un prefijo no reducido para ambos
    criterios.
    """
    for start in enumerate_orientations(tree):
        for word, end in reduced_words(start, max_len - 1):
            for i in end.admissible_vertices():
                extended = word.then((Sigma(i),))
                agree = is_reduced(extended) == (len(normal_form(extended)) == len(extended))
                report.record("reduced", agree, f"{start.label()}: {extended}")


def check_lemmas(graph: Union[TreeGraph, DynkinGraph], max_len: int) -> LemmaReport:
    """
    Sobre todas las palabras reducidas de longitud ≤ max_len desde cada orientación:
      - entre apariciones consecutivas de i, cada vecino exactamente una vez;
      - las que terminan en Γ₀ o Γ₀^op: cada i usada cumple exactamente una de
        (i) ningún vecino tras la última i, (ii) cada vecino exactamente una vez tras ella;
      - los lazos no triviales usan todos los vértices de su componente;
      - el criterio de reducción coincide con la longitud de la forma normal.
    """
    tree = as_tree(graph)
    report = LemmaReport(str(tree), max_len)
    q0 = alternating_orientation(tree)[0]
    extremes = {q0, q0.opposite()}

    for start in enumerate_orientations(tree):
        for word, end in reduced_words(start, max_len):
            report.record("inbetween", check_inbetween(word), f"{start.label()}: {word}")
            if end in extremes:
                report.record("extremal", _extremal_holds(tree, word), f"{start.label()}: {word}")
            if end == start and len(word):
                report.record("allappear", _uses_whole_components(tree, word), f"{start.label()}: {word}")

    check_reduced_criterion(tree, max_len, report)
    logger.info(f"📐 Lemas en {tree} hasta longitud {max_len}: ok={report.passed}")
    return report


def _extremal_holds(tree: TreeGraph, word: Word) -> bool:
    vertices = word.vertices()
    for i in set(vertices):
        last = max(p for p, v in enumerate(vertices) if v == i)
        after = vertices[last + 1:]
        neighbors = tree.neighbors(i)
        if not neighbors:
            continue
        none_after = not any(j in after for j in neighbors)
        each_once = all(after.count(j) == 1 for j in neighbors)
        if none_after == each_once:
            return False
    return True


def _uses_whole_components(tree: TreeGraph, word: Word) -> bool:
    used = set(word.vertices())
    return all(set(tree.component_of(i)) <= used for i in used)


def relation_soundness(graph: Union[TreeGraph, DynkinGraph]) -> List[str]:
    """
    Para cada instancia realizable de (R1)–(R4), ambos lados llevan a la misma orientación
    y, si el grafo es ADE, inducen la misma permutación de Φ_{≥−1}.
    """
    tree = as_tree(graph)
    try:
        require_dynkin(tree)
        with_action = True
    except UnsupportedGraphError:
        with_action = False

    failures = []
    for q in enumerate_orientations(tree):
        admissible = q.admissible_vertices()
        instances = [("R3", (DUAL, DUAL), ())]
        for i in admissible:
            instances.append(("R1", (Sigma(i), Sigma(i)), ()))
            instances.append(("R4", (DUAL, Sigma(i)), (Sigma(i), DUAL)))
        for i, j in combinations(admissible, 2):
            if not tree.linked(i, j):
                instances.append(("R2", (Sigma(i), Sigma(j)), (Sigma(j), Sigma(i))))
        for name, lhs, rhs in instances:
            left, right = Word(q, lhs), Word(q, rhs)
            same = apply_word(left) == apply_word(right) and normal_form(left) == normal_form(right)
            if same and with_action:
                same = word_action_on_roots(left) == word_action_on_roots(right)
            if not same:
                failures.append(f"{name} en {q.label()}: {left} ≠ {right}")
    return failures


def action_compatibility(graph: Union[TreeGraph, DynkinGraph], max_len: int = 2) -> List[str]:
    """
    (w·α ‖ w·β)_{fin} = (α‖β)_{inicio} para toda palabra reducida corta desde cada
    orientación, con o sin una D final.
    """
    tree = as_tree(graph)
    roots = almost_positive_roots(tree)
    failures = []
    for start in enumerate_orientations(tree):
        for word, _ in reduced_words(start, max_len):
            for w in (word, word.then((DUAL,))):
                action = word_action_on_roots(w)
                end = apply_word(w)
                for a, b in product(roots, repeat=2):
                    if compatibility_degree(end, action[a], action[b]) != compatibility_degree(start, a, b):
                        failures.append(f"{start.label()}: {w} en ({a}‖{b})")
    return failures
