"""
Comprobaciones del abanico de clusters: pureza y lisura, reducción a clusters positivos,
expansión muestreada y reetiquetado por σ_i.
"""

from clusters import (
    Cluster,
    maximal_compatible_sets,
    reduction_counts,
    relabel_clusters,
    verify_fan,
)
from quiver.dynkin import DynkinGraph
from verification.checks.common import Outcome, orientations_for
from verification.config import VerificationConfig


def purity(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Todo conjunto compatible maximal tiene tamaño n y determinante ±1."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for cset in maximal_compatible_sets(q):
            cluster = Cluster(q, cset.roots)
            ok = cluster.size == q.rank and abs(cluster.determinant) == 1
            out.expect(ok, {"quiver": q.label(), "cluster": cluster.labels(), "det": cluster.determinant})
    return out


def positive_reduction(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """#clusters con soporte negativo J = #clusters positivos de Γ(I − J)."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for subset, (exact, expected) in reduction_counts(q, cfg.large).items():
            out.expect(exact == expected, {"quiver": q.label(), "J": list(subset), "clusters": exact, "positive": expected})
    return out


def sampled_expansion(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Cada γ muestreado tiene una única expansión y su parte negativa es max(−γ_i, 0)."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(f"{scope}, {cfg.samples} muestras, semilla {cfg.seed}")
    for q in quivers:
        report = verify_fan(q, cfg.samples, cfg.seed, cfg.large)
        out.checked += report.samples
        if not report.passed:
            out.counterexamples.append(report.to_json())
    return out


def relabeling(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """σ_i lleva los clusters de Γ sobre los de s_iΓ."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for i in q.admissible_vertices():
            out.expect(relabel_clusters(q, i, cfg.large), {"quiver": q.label(), "i": i})
    return out


CHECKS = {
    "purity": purity,
    "reduction": positive_reduction,
    "expansion": sampled_expansion,
    "relabel": relabeling,
}
