"""
Comprobaciones del censo de conjuntos Ext-libres.
"""

from census import a3_figure_check, moebius_consistency, orientation_invariance, positive_cluster_count
from clusters import positive_clusters
from quiver.dynkin import DynkinGraph
from verification.checks.common import Outcome, orientations_for
from verification.config import VerificationConfig


def moebius(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        report = moebius_consistency(q, cfg.large)
        out.checked += report.checked
        out.counterexamples.extend({"quiver": q.label(), **f} for f in report.failures)
    return out


def invariance(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """f⁺ idéntico en todas las orientaciones."""
    report = orientation_invariance(graph, jobs=cfg.jobs, large=cfg.large)
    out = Outcome(f"{graph.name}: {len(report.orientations)} orientaciones")
    out.expect(report.invariant, {"orientations": report.to_json()["orientations"]})
    return out


def product_formula(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """El producto sobre exponentes coincide con los clusters positivos enumerados."""
    out = Outcome(f"{graph.name}: Γ₀ y la tabla de exponentes")
    if not graph.is_irreducible:
        out.scope = f"{graph.name}: reducible, no aplica"
        return out
    report = orientation_invariance(graph, jobs=cfg.jobs, large=cfg.large)
    formula = positive_cluster_count(graph, cfg.exponents_for(graph.name))
    quivers, _ = orientations_for(graph, cfg)
    enumerated = len(positive_clusters(quivers[0], cfg.large))
    top = report.common.top if report.common is not None else None
    out.expect(formula == enumerated == top,
               {"formula": formula, "enumerated": enumerated, "f_plus_top": top})
    return out


def figure(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Complejos de A₃ para la orientación alternante y la lineal."""
    out = Outcome("A3: Γ₀ frente a 1→2→3")
    if graph.name != "A3":
        out.scope = f"{graph.name}: solo aplica a A3"
        return out
    report = a3_figure_check()
    out.expect(report.passed, report.to_json())
    return out


CHECKS = {
    "moebius": moebius,
    "invariance": invariance,
    "formula": product_formula,
    "figure": figure,
}
