"""
Comprobaciones sobre representaciones decoradas, Σ_i, D y el grado de compatibilidad.
"""

from itertools import combinations, product

from decorated import (
    all_decorated_indecomposables,
    coincides_with_classical,
    compatibility_degree,
    decorated_of_root,
    dualize,
    e_dim,
    extended_reflect,
    is_rigid,
    isoclass,
    rigid_by_supports,
    sdim,
    sdim_reflection_applies,
    sigma,
    tau,
)
from quiver.dynkin import DynkinGraph
from quiver.orientation import alternating_orientation, reflect_orientation
from quiver.roots import RootVector, almost_positive_roots, roots_supported_in
from verification.checks.common import (
    Outcome,
    orientations_for,
    random_decorated_sum,
    rng_for,
    sums_per_orientation,
)
from verification.config import VerificationConfig


def _samples(q, rng, per_q):
    return list(all_decorated_indecomposables(q)) + [random_decorated_sum(q, rng) for _ in range(per_q)]


def decorated_roots(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """sdim ∘ U = id sobre Φ_{≥−1} y raíces distintas dan clases distintas."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        seen = {}
        for alpha in almost_positive_roots(q.graph):
            u = decorated_of_root(q, alpha)
            key = isoclass(u)
            out.expect(sdim(u) == alpha and key not in seen, {"quiver": q.label(), "root": alpha.label()})
            seen[key] = alpha
    return out


def sdim_reflection(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """sdim Σ_i(M) = σ_i(sdim M) si dim M_k · dim V_k = 0 en i y sus vecinos."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    rng = rng_for(cfg, graph, "sdim-reflection")
    per_q = sums_per_orientation(cfg, len(quivers))
    for q in quivers:
        for m in _samples(q, rng, per_q):
            for i in q.admissible_vertices():
                if not sdim_reflection_applies(q, i, m):
                    continue
                got = sdim(extended_reflect(q, i, m))
                expected = sigma(q.graph, i, sdim(m))
                out.expect(got == expected, {"quiver": q.label(), "M": str(m), "i": i, "got": got.label()})
    return out


def root_correspondence(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """sdim Σ_i U_α = σ_i(α) y σ_i permuta Φ_{≥−1}."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        roots = almost_positive_roots(q.graph)
        for i in q.admissible_vertices():
            images = {sigma(q.graph, i, a) for a in roots}
            out.expect(images == set(roots), {"quiver": q.label(), "i": i, "error": "σ_i no permuta Φ_≥−1"})
            for alpha in roots:
                got = sdim(extended_reflect(q, i, decorated_of_root(q, alpha)))
                out.expect(got == sigma(q.graph, i, alpha), {"quiver": q.label(), "root": alpha.label(), "i": i})
    return out


def reflection_involution(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Σ_i² fija la clase de isomorfía."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    rng = rng_for(cfg, graph, "involution")
    per_q = sums_per_orientation(cfg, len(quivers))
    for q in quivers:
        for m in _samples(q, rng, per_q):
            for i in q.admissible_vertices():
                once = extended_reflect(q, i, m)
                twice = extended_reflect(reflect_orientation(q, i), i, once)
                out.expect(isoclass(twice) == isoclass(m), {"quiver": q.label(), "M": str(m), "i": i})
    return out


def e_invariance(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """E_{s_iΓ}(Σ_iM, Σ_iN) y E_Γ(M, N) tienen la misma dimensión."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        reps = all_decorated_indecomposables(q)
        for i in q.admissible_vertices():
            target = reflect_orientation(q, i)
            reflected = {m: extended_reflect(q, i, m) for m in reps}
            for m, n in product(reps, repeat=2):
                ok = e_dim(target, reflected[m], reflected[n]) == e_dim(q, m, n)
                out.expect(ok, {"quiver": q.label(), "i": i, "M": sdim(m).label(), "N": sdim(n).label()})
    return out


def sigma_compatibility(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """(σ_iα ‖ σ_iβ)_{s_iΓ} = (α‖β)_Γ."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        roots = almost_positive_roots(q.graph)
        for i in q.admissible_vertices():
            target = reflect_orientation(q, i)
            for a, b in product(roots, repeat=2):
                ok = compatibility_degree(target, sigma(q.graph, i, a), sigma(q.graph, i, b)) == compatibility_degree(q, a, b)
                out.expect(ok, {"quiver": q.label(), "i": i, "pair": [a.label(), b.label()]})
    return out


def duality(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """(α‖β)_Γ = (α‖β)_{Γ^op}, el grado es simétrico y E_Γ(M,N) ≅ E_{Γ^op}(DN,DM)."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        opposite = q.opposite()
        roots = almost_positive_roots(q.graph)
        for a, b in product(roots, repeat=2):
            degree = compatibility_degree(q, a, b)
            ok = degree == compatibility_degree(opposite, a, b) == compatibility_degree(q, b, a)
            out.expect(ok, {"quiver": q.label(), "pair": [a.label(), b.label()]})
        reps = all_decorated_indecomposables(q)
        dual = {m: dualize(m) for m in reps}
        for m, n in product(reps, repeat=2):
            ok = e_dim(q, m, n) == e_dim(opposite, dual[n], dual[m])
            out.expect(ok, {"quiver": q.label(), "M": sdim(m).label(), "N": sdim(n).label(), "error": "E no es dual"})
    return out


def root_subsystems(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """(α‖β)_{Γ(J)} = (α‖β)_Γ para α, β ∈ Φ(J)_{≥−1}."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for size in range(1, q.rank):
            for subset in combinations(q.vertices, size):
                sub = q.restrict(subset)
                roots = roots_supported_in(q.graph, subset)
                for a, b in combinations(roots, 2):
                    restricted = compatibility_degree(sub, a.restrict(subset), b.restrict(subset))
                    out.expect(restricted == compatibility_degree(q, a, b),
                               {"quiver": q.label(), "J": list(subset), "pair": [a.label(), b.label()]})
    return out


def alternating_degrees(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """En Γ₀: (−α_i‖β) = max([β:α_i], 0) y (τ_εα‖τ_εβ) = (α‖β)."""
    q0 = alternating_orientation(graph)[0]
    out = Outcome(f"{graph.name}: Γ₀ = {q0.label()}")
    roots = almost_positive_roots(q0.graph)
    for i in q0.vertices:
        negative = -RootVector.simple(q0.vertices, i)
        for beta in roots:
            out.expect(compatibility_degree(q0, negative, beta) == max(beta[i], 0),
                       {"i": i, "beta": beta.label(), "rule": "simple"})
    for sign in ("+", "-"):
        image = {a: tau(graph, sign, a) for a in roots}
        for a, b in product(roots, repeat=2):
            out.expect(compatibility_degree(q0, image[a], image[b]) == compatibility_degree(q0, a, b),
                       {"tau": sign, "pair": [a.label(), b.label()]})
    return out


def rigid_supports(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """E_Γ(M,M) = 0 ⇔ Ext¹(M⁺,M⁺) = 0 y soportes de M⁺ y V disjuntos."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    rng = rng_for(cfg, graph, "rigid")
    per_q = sums_per_orientation(cfg, len(quivers))
    for q in quivers:
        for m in _samples(q, rng, per_q):
            out.expect(is_rigid(q, m) == rigid_by_supports(q, m), {"quiver": q.label(), "M": str(m)})
    return out


def classical_agreement(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Σ_i = S_i sobre indecomponibles positivos distintos de E_i."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for m in all_decorated_indecomposables(q):
            if not m.minus_dims.is_zero():
                continue
            for i in q.admissible_vertices():
                if m.plus.dims.support == (i,):
                    continue
                out.expect(coincides_with_classical(q, i, m), {"quiver": q.label(), "M": str(m), "i": i})
    return out


CHECKS = {
    "decorated-roots": decorated_roots,
    "sdim-reflection": sdim_reflection,
    "correspondence": root_correspondence,
    "involution": reflection_involution,
    "e-invariance": e_invariance,
    "sigma-compatibility": sigma_compatibility,
    "duality": duality,
    "subsystems": root_subsystems,
    "alternating": alternating_degrees,
    "rigid": rigid_supports,
    "classical": classical_agreement,
}
