"""
Comprobaciones acotadas del grupoide de reflexiones sobre el árbol subyacente.
"""

from groupoid import action_compatibility, check_lemmas, classify_loops, conjugation_check, relation_soundness
from quiver.dynkin import DynkinGraph
from verification.checks.common import Outcome
from verification.config import VerificationConfig

# longitud de lazos para la conjugación desde cada orientación
CONJUGATION_LEN = 6


def loops(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Todo lazo en Γ₀ (con o sin D) normaliza a una potencia alternante."""
    report = classify_loops(graph, cfg.loop_len)
    out = Outcome(f"{graph.name}: longitud ≤ {cfg.loop_len}")
    for component in report.components:
        out.checked += sum(component.loops_by_k.values()) + sum(component.loops_by_m.values())
    out.counterexamples.extend(report.violations)
    return out


def lemmas(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Lemas de palabras reducidas y el criterio de reducción, exhaustivos hasta lemma_len."""
    report = check_lemmas(graph, cfg.lemma_len)
    out = Outcome(f"{graph.name}: palabras reducidas de longitud ≤ {cfg.lemma_len}")
    out.checked = sum(report.checked.values())
    for name, witnesses in sorted(report.violations.items()):
        out.counterexamples.extend({"lemma": name, "word": w} for w in witnesses)
    return out


def relations(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    out = Outcome(f"{graph.name}: (R1)–(R4) en todas las orientaciones")
    failures = relation_soundness(graph)
    out.checked = 1
    out.counterexamples.extend(failures)
    return out


def action(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """La acción de una palabra preserva el grado de compatibilidad."""
    out = Outcome(f"{graph.name}: palabras reducidas de longitud ≤ 2")
    out.checked = 1
    out.counterexamples.extend(action_compatibility(graph))
    return out


def conjugation(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    out = Outcome(f"{graph.name}: lazos de longitud ≤ {CONJUGATION_LEN} en cada orientación")
    out.checked = 1
    out.counterexamples.extend(conjugation_check(graph, CONJUGATION_LEN))
    return out


CHECKS = {
    "loops": loops,
    "lemmas": lemmas,
    "relations": relations,
    "action": action,
    "conjugation": conjugation,
}
