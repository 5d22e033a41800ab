"""
Lazos en Γ₀ del grupoide de reflexiones: conteo exhaustivo acotado por programación dinámica
sobre elementos y comprobación de que todos son potencias alternantes de Σ₊, Σ₋ (o palabras
en T₊ = DΣ₊, T₋ = DΣ₋ si se admite D).
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from quiver.dynkin import DynkinGraph, as_tree
from quiver.graphs import TreeGraph
from quiver.orientation import Quiver, alternating_orientation, enumerate_orientations, reflect_orientation, reflection_path
from groupoid.words import (
    NormalForm,
    Word,
    alternating_blocks,
    canonical,
    flatten,
    foata_layers,
    insert_letter,
    inverse,
    normal_form,
)
from utils.logger import Logger

logger = Logger.get_logger(__name__)


def default_max_len(graph: Union[TreeGraph, DynkinGraph]) -> int:
    """2·n·(n+1) letras."""
    n = as_tree(graph).rank
    return 2 * n * (n + 1)


def alternating_targets(graph: TreeGraph, max_len: int, with_dual: bool = False) -> Dict[NormalForm, int]:
    """
    Formas normales de (Σ₊Σ₋)^k (k > 0), (Σ₋Σ₊)^|k| (k < 0) y la identidad (k = 0).
    Con with_dual: palabras alternantes en T₊, T₋ con m bloques (m > 0 empieza por T₊).
    """
    _, plus, minus = alternating_orientation(graph)
    targets: Dict[NormalForm, int] = {canonical(graph, 0, ()): 0}
    step = 1 if with_dual else 2
    # basta con cubrir longitudes reducidas ≤ max_len; cada par de bloques añade ≥ 1 letra
    for blocks in range(step, 2 * max_len + 3, step):
        for first, label in (("+", blocks), ("-", -blocks)):
            letters = alternating_blocks(first, blocks, plus, minus)
            nf = canonical(graph, blocks % 2 if with_dual else 0, letters)
            targets.setdefault(nf, label if with_dual else label // 2)
    return targets


def loop_counts(graph: TreeGraph, max_len: int, with_dual: bool = False,
                start: Optional[Quiver] = None) -> Counter:
    """
    Cuenta, por forma normal, las palabras aplicables de longitud ≤ max_len que parten y
    terminan en start (por defecto Γ₀). Los estados son (orientación, paridad, elemento).
    """
    q0 = start or alternating_orientation(graph)[0]
    identity = canonical(graph, 0, ())
    states: Dict[Tuple[Quiver, int, Tuple[Tuple[int, ...], ...]], int] = {(q0, 0, identity.layers): 1}
    loops: Counter = Counter({identity: 1})
    for _ in range(max_len):
        nxt: Dict = defaultdict(int)
        for (q, parity, layers), count in states.items():
            word = flatten(layers)
            for i in q.admissible_vertices():
                reduced = insert_letter(graph, word, i)
                nxt[(reflect_orientation(q, i), parity, foata_layers(graph, reduced))] += count
            if with_dual:
                nxt[(q.opposite(), 1 - parity, layers)] += count
        states = nxt
        for (q, parity, layers), count in states.items():
            if q == q0:
                loops[NormalForm(parity, layers)] += count
    return loops


@dataclass
class ComponentLoops:
    """Resultado por componente conexa."""
    vertices: Tuple[int, ...]
    loops_by_k: Dict[int, int] = field(default_factory=dict)
    loops_by_m: Dict[int, int] = field(default_factory=dict)
    violations: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "loops_by_k": {str(k): v for k, v in sorted(self.loops_by_k.items())},
            "loops_by_m": {str(m): v for m, v in sorted(self.loops_by_m.items())},
            "violations": self.violations,
        }


@dataclass
class LoopReport:
    """
    loops_by_k: palabras sin D que normalizan a (Σ₊Σ₋)^k (k > 0) o (Σ₋Σ₊)^|k| (k < 0).
    loops_by_m: palabras con D que normalizan a un producto alternante de m factores T (signo
    según el primer factor).
    """
    graph: str
    max_len: int
    components: List[ComponentLoops] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(c.violations for c in self.components)

    @property
    def violations(self) -> List[dict]:
        return [v for c in self.components for v in c.violations]

    def to_json(self) -> dict:
        data = {"graph": self.graph, "max_len": self.max_len, "passed": self.passed}
        if len(self.components) == 1:
            data.update(self.components[0].to_json())
        else:
            data["components"] = [c.to_json() for c in self.components]
            data["violations"] = self.violations
        return data


def _classify_component(tree: TreeGraph, max_len: int) -> ComponentLoops:
    result = ComponentLoops(tree.vertices)
    for with_dual, bucket in ((False, result.loops_by_k), (True, result.loops_by_m)):
        targets = alternating_targets(tree, max_len, with_dual)
        for nf, count in sorted(loop_counts(tree, max_len, with_dual).items(), key=lambda x: str(x[0])):
            if nf in targets:
                bucket[targets[nf]] = bucket.get(targets[nf], 0) + count
            else:
                result.violations.append({"normal_form": str(nf), "words": count, "dual": with_dual})
    return result


def classify_loops(graph: Union[TreeGraph, DynkinGraph], max_len: Optional[int] = None) -> LoopReport:
    """
    Todas las palabras aplicables de longitud ≤ max_len de Γ₀ a Γ₀, clasificadas por forma
    normal. En un bosque, Γ₀ se toma por componente y cada componente se comprueba aparte.
    """
    tree = as_tree(graph)
    max_len = default_max_len(tree) if max_len is None else max_len
    report = LoopReport(str(tree), max_len)
    for comp in tree.components:
        report.components.append(_classify_component(tree.induced(comp), max_len))
    logger.info(f"🔁 Lazos hasta longitud {max_len} en {tree}: ok={report.passed}")
    return report


def conjugation_check(graph: Union[TreeGraph, DynkinGraph], max_len: int) -> List[dict]:
    """
    Para cada orientación Γ con camino P desde Γ₀, todo lazo w en Γ cumple que P·w·P⁻¹
    normaliza a una potencia alternante. Devuelve los contraejemplos.
    """
    tree = as_tree(graph)
    q0 = alternating_orientation(tree)[0]
    violations = []
    for q in enumerate_orientations(tree):
        path = Word.of(q0, reflection_path(q0, q))
        targets = alternating_targets(tree, max_len + 2 * len(path))
        back = inverse(path)
        for nf in loop_counts(tree, max_len, start=q):
            conjugated = Word(q0, path.letters + nf.letters() + back.letters)
            if normal_form(conjugated) not in targets:
                violations.append({"orientation": q.label(), "loop": str(nf)})
    return violations
