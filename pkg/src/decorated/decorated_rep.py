"""
Representaciones decoradas M = M⁺ ⊕ V, vector dimensión con signo, el bifuntor E_Γ,
el grado de compatibilidad, la dualidad D y los funtores de reflexión extendidos Σ_i.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from exceptions.quiver_exceptions import AdmissibilityError, DomainError
from quiver.orientation import Quiver
from quiver.roots import RootVector, positive_roots, require_almost_positive
from representations.homology import ext_dim
from representations.indecomposables import decompose, indecomposable_rep
from representations.linalg import rank
from representations.reflection import classical_reflect, source_map
from representations.representation import (
    Representation,
    build_rep,
    direct_sum,
    simple_rep,
    zero_rep,
)

Isoclass = Tuple[Tuple[Tuple[Tuple[int, ...], int], ...], Tuple[int, ...]]


@dataclass(frozen=True)
class DecoratedRep:
    """
    Representación decorada: la parte M⁺ y las dimensiones dim V_i de la decoración.

    Los vértices i⁻ no tienen flechas, así que de V solo se guardan dimensiones.
    """
    plus: Representation
    minus_dims: RootVector

    def __post_init__(self):
        if self.minus_dims.vertices != self.plus.quiver.vertices:
            raise DomainError("❌ La decoración no comparte vértices con M⁺")
        if not self.minus_dims.is_nonnegative():
            raise DomainError(f"❌ Decoración con dimensiones negativas: {self.minus_dims.coords}")

    @property
    def quiver(self) -> Quiver:
        return self.plus.quiver

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus_dims.is_zero()

    def __str__(self) -> str:
        return f"Dec({list(self.plus.dims.coords)} | V={list(self.minus_dims.coords)})"


def decorate(plus: Representation, minus: Optional[RootVector] = None) -> DecoratedRep:
    """M⁺ con decoración dada (por defecto nula)."""
    if minus is None:
        minus = RootVector.zero(plus.quiver.vertices)
    return DecoratedRep(plus, minus)


def negative_simple(q: Quiver, i: int) -> DecoratedRep:
    """E_i⁻: decoración unidimensional en i, parte M⁺ nula."""
    return DecoratedRep(zero_rep(q), RootVector.simple(q.vertices, i))


def decorated_sum(*reps: DecoratedRep, quiver: Optional[Quiver] = None) -> DecoratedRep:
    """Suma directa de representaciones decoradas."""
    if not reps:
        if quiver is None:
            raise DomainError("❌ decorated_sum vacío requiere el carcaj")
        return decorate(zero_rep(quiver))
    minus = reps[0].minus_dims
    for r in reps[1:]:
        minus = minus + r.minus_dims
    return DecoratedRep(direct_sum(*(r.plus for r in reps)), minus)


def sdim(m: DecoratedRep) -> RootVector:
    """Vector dimensión con signo: dim M⁺ − Σ_i (dim V_i) α_i."""
    return m.plus.dims - m.minus_dims


@lru_cache(maxsize=None)
def decorated_of_root(q: Quiver, alpha: RootVector) -> DecoratedRep:
    """
    U_α^Γ: el indecomponible decorado con sdim = α.

    Raises:
        DomainError: si α ∉ Φ_{≥−1}
    """
    require_almost_positive(q.graph, alpha)
    if alpha.is_nonnegative():
        return decorate(indecomposable_rep(q, alpha))
    return negative_simple(q, alpha.support[0])


def dualize(m: DecoratedRep) -> DecoratedRep:
    """D: matrices traspuestas sobre Γ^op; la decoración no cambia."""
    q = m.quiver
    opposite = q.opposite()
    matrices = {(j, i): m.plus.matrix((i, j)).T for (i, j) in q.arrows}
    return DecoratedRep(build_rep(opposite, m.plus.dims, matrices), m.minus_dims)


def _require_over(q: Quiver, *reps: DecoratedRep) -> None:
    for r in reps:
        if r.quiver != q:
            raise DomainError(f"❌ Representación decorada sobre {r.quiver.label()}, se esperaba {q.label()}")


@lru_cache(maxsize=None)
def e_dim(q: Quiver, m: DecoratedRep, n: DecoratedRep) -> int:
    """
    dim E_Γ(M,N) = dim Ext¹(M⁺,N⁺) + dim Ext¹(N⁺,M⁺) + dim Hom^I(M⁺,W) + dim Hom^I(V,N⁺),
    donde V y W son las decoraciones de M y N.
    """
    _require_over(q, m, n)
    graded = sum(a * b for a, b in zip(m.plus.dims.coords, n.minus_dims.coords))
    graded += sum(a * b for a, b in zip(m.minus_dims.coords, n.plus.dims.coords))
    return ext_dim(m.plus, n.plus) + ext_dim(n.plus, m.plus) + graded


@lru_cache(maxsize=None)
def compatibility_degree(q: Quiver, alpha: RootVector, beta: RootVector) -> int:
    """(α‖β)_Γ = dim E_Γ(U_α, U_β)."""
    return e_dim(q, decorated_of_root(q, alpha), decorated_of_root(q, beta))


def _reflect_at_source(q: Quiver, i: int, m: DecoratedRep) -> DecoratedRep:
    phi = source_map(q, i, m.plus)
    kernel = m.plus.dim(i) - rank(phi)
    reflected = classical_reflect(q, i, m.plus)
    copies = m.minus_dims[i]
    plus = direct_sum(reflected, *(simple_rep(reflected.quiver, i) for _ in range(copies)))
    minus = RootVector.from_mapping(q.vertices, {**m.minus_dims.as_dict(), i: kernel})
    return DecoratedRep(plus, minus)


def extended_reflect(q: Quiver, i: int, m: DecoratedRep) -> DecoratedRep:
    """
    Σ_i(M) sobre s_iΓ.

    En una fuente reemplaza M_i por Coker(⊕_{a:i→j} M_a) ⊕ V_i y V_i por el núcleo.
    En un sumidero se calcula como D ∘ Σ_i ∘ D.

    Raises:
        AdmissibilityError: si i no es fuente ni sumidero
    """
    _require_over(q, m)
    if q.is_source(i):
        return _reflect_at_source(q, i, m)
    if q.is_sink(i):
        dual = dualize(m)
        return dualize(_reflect_at_source(dual.quiver, i, dual))
    raise AdmissibilityError(f"❌ El vértice {i} no es fuente ni sumidero en {q.label()}", vertex=i)


def isoclass(m: DecoratedRep) -> Isoclass:
    """Invariante de Krull–Schmidt: (multiconjunto de sumandos de M⁺, dim V)."""
    summands = decompose(m.plus)
    key = tuple(sorted((alpha.coords, k) for alpha, k in summands.items()))
    return key, m.minus_dims.coords


def is_rigid(q: Quiver, m: DecoratedRep) -> bool:
    """E_Γ(M,M) = 0."""
    return e_dim(q, m, m) == 0


def rigid_by_supports(q: Quiver, m: DecoratedRep) -> bool:
    """Caracterización: Ext¹(M⁺,M⁺) = 0 y M⁺, V con soportes disjuntos."""
    _require_over(q, m)
    disjoint = not (set(m.plus.dims.support) & set(m.minus_dims.support))
    return ext_dim(m.plus, m.plus) == 0 and disjoint


def sdim_reflection_applies(q: Quiver, i: int, m: DecoratedRep) -> bool:
    """
    Hipótesis para sdim Σ_i(M) = σ_i(sdim M): dim M_k · dim V_k = 0 en i y en cada vecino k de i.

    σ_i solo ve max([γ:α_k], 0) en los vecinos, que coincide con dim M_k cuando V_k = 0 o M_k = 0.
    """
    _require_over(q, m)
    return all(m.plus.dim(k) * m.minus_dims[k] == 0 for k in (i, *q.graph.neighbors(i)))


def has_simple_summand(m: DecoratedRep, i: int) -> bool:
    simple = RootVector.simple(m.quiver.vertices, i)
    return decompose(m.plus)[simple] > 0


def coincides_with_classical(q: Quiver, i: int, m: DecoratedRep) -> bool:
    """
    Si M no tiene sumandos E_i ni decoración, Σ_i(M) = S_i(M): misma clase y decoración nula.
    """
    if has_simple_summand(m, i) or not m.minus_dims.is_zero():
        raise DomainError(f"❌ {m} no está en la subcategoría sin sumandos E_{i}")
    extended = extended_reflect(q, i, m)
    classical = decorate(classical_reflect(q, i, m.plus))
    return extended.minus_dims.is_zero() and isoclass(extended) == isoclass(classical)


def all_decorated_indecomposables(q: Quiver) -> Tuple[DecoratedRep, ...]:
    """U_α para α ∈ Φ_{≥−1}, en el orden global."""
    negatives = tuple(negative_simple(q, i) for i in q.vertices)
    return tuple(decorated_of_root(q, a) for a in positive_roots(q.graph)) + negatives


def summand_roots(m: DecoratedRep) -> Counter:
    """Multiconjunto de sdim de los sumandos indecomponibles (raíces en Φ_{≥−1})."""
    result = Counter(decompose(m.plus))
    for i, k in m.minus_dims.as_dict().items():
        if k:
            result[-RootVector.simple(m.quiver.vertices, i)] += k
    return result
