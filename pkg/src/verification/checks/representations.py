"""
Comprobaciones de álgebra lineal de representaciones: forma de Euler, sucesiones de cuatro
términos, reflexiones clásicas, aditividad y rigidez.
"""

from quiver.dynkin import DynkinGraph
from quiver.roots import euler_form, weyl_reflection
from representations import (
    all_indecomposables,
    classical_reflect,
    decompose,
    direct_sum,
    ext_dim,
    hom_dim,
    simple_rep,
)
from verification.checks.common import Outcome, orientations_for, rng_for, sums_per_orientation
from verification.config import VerificationConfig


def euler_identity(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """hom − ext = ⟨dim M, dim N⟩ y ext ≥ 0 para todo par de indecomponibles."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        reps = all_indecomposables(q)
        for m in reps:
            for n in reps:
                hom, ext = hom_dim(m, n), ext_dim(m, n)
                ok = ext >= 0 and hom - ext == euler_form(q, m.dims, n.dims)
                out.expect(ok, {"quiver": q.label(), "M": m.dims.label(), "N": n.dims.label(), "hom": hom, "ext": ext})
    return out


def four_term_exactness(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """
    Fuente i: dim Hom(E_i,M) − dim M_i + Σ_{i→j} dim M_j − dim Ext¹(E_i,M) = 0.
    Sumidero i: dim Hom(M,E_i) − dim M_i + Σ_{j→i} dim M_j − dim Ext¹(M,E_i) = 0.
    """
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for m in all_indecomposables(q):
            for i in q.admissible_vertices():
                e = simple_rep(q, i)
                if q.is_source(i):
                    total = hom_dim(e, m) - m.dim(i) + sum(m.dim(j) for j in q.successors(i)) - ext_dim(e, m)
                else:
                    total = hom_dim(m, e) - m.dim(i) + sum(m.dim(j) for j in q.predecessors(i)) - ext_dim(m, e)
                out.expect(total == 0, {"quiver": q.label(), "M": m.dims.label(), "i": i, "alternating_sum": total})
    return out


def reflected_ext(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """S_i(A)_i ≃ Ext¹(E_i, A) en una fuente y Ext¹(A, E_i) en un sumidero (dimensiones)."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for a in all_indecomposables(q):
            for i in q.admissible_vertices():
                e = simple_rep(q, i)
                expected = ext_dim(e, a) if q.is_source(i) else ext_dim(a, e)
                got = classical_reflect(q, i, a).dim(i)
                out.expect(got == expected, {"quiver": q.label(), "A": a.dims.label(), "i": i, "got": got, "ext": expected})
    return out


def classical_reflection(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Sin sumandos E_i: dim S_iM = s_i(dim M) y S_iS_iM ≅ M."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for m in all_indecomposables(q):
            for i in q.admissible_vertices():
                if m.dims.support == (i,):
                    continue
                once = classical_reflect(q, i, m)
                twice = classical_reflect(once.quiver, i, once)
                ok = once.dims == weyl_reflection(q.graph, i, m.dims) and decompose(twice) == decompose(m)
                out.expect(ok, {"quiver": q.label(), "M": m.dims.label(), "i": i})
    return out


def additivity(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """hom y ext son aditivos en ambos argumentos sobre sumas aleatorias."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    rng = rng_for(cfg, graph, "additivity")
    per_q = sums_per_orientation(cfg, len(quivers))
    for q in quivers:
        reps = all_indecomposables(q)
        for _ in range(per_q):
            a, b, c = (reps[int(k)] for k in rng.integers(0, len(reps), size=3))
            s = direct_sum(a, b)
            ok = all((
                hom_dim(s, c) == hom_dim(a, c) + hom_dim(b, c),
                hom_dim(c, s) == hom_dim(c, a) + hom_dim(c, b),
                ext_dim(s, c) == ext_dim(a, c) + ext_dim(b, c),
                ext_dim(c, s) == ext_dim(c, a) + ext_dim(c, b),
            ))
            out.expect(ok, {"quiver": q.label(), "A": a.dims.label(), "B": b.dims.label(), "C": c.dims.label()})
    return out


def rigidity(graph: DynkinGraph, cfg: VerificationConfig) -> Outcome:
    """Ext¹(M_α, M_α) = 0 para todo indecomponible."""
    quivers, scope = orientations_for(graph, cfg)
    out = Outcome(scope)
    for q in quivers:
        for m in all_indecomposables(q):
            out.expect(ext_dim(m, m) == 0, {"quiver": q.label(), "M": m.dims.label()})
    return out


CHECKS = {
    "euler": euler_identity,
    "four-term": four_term_exactness,
    "reflected-ext": reflected_ext,
    "classical-reflection": classical_reflection,
    "additivity": additivity,
    "rigidity": rigidity,
}
