"""
Funtores de reflexión clásicos S_i (Bernstein–Gelfand–Ponomarev) en fuentes y sumideros.
"""

from typing import Dict, Tuple

from sympy import ImmutableMatrix

from exceptions.quiver_exceptions import DomainError
from quiver.orientation import Quiver, reflect_orientation
from quiver.roots import RootVector
from representations.linalg import (
    column_block,
    columns_to_matrix,
    hstack,
    nullspace_basis,
    row_block,
    vstack,
)
from representations.representation import Representation, build_rep


def source_map(q: Quiver, i: int, m: Representation) -> ImmutableMatrix:
    """φ = ⊕_{a:i→j} M_a : M_i → ⊕ M_j, bloques apilados en orden de destino."""
    return vstack((m.matrix((i, j)) for j in q.successors(i)), m.dim(i))


def sink_map(q: Quiver, i: int, m: Representation) -> ImmutableMatrix:
    """ψ = ⊕_{a:j→i} M_a : ⊕ M_j → M_i, bloques yuxtapuestos en orden de fuente."""
    return hstack((m.matrix((j, i)) for j in q.predecessors(i)), m.dim(i))


def cokernel_projection(phi: ImmutableMatrix) -> ImmutableMatrix:
    """
    Proyección canónica P: k^D → Coker φ. Sus filas son la base escalonada de {y : yᵀφ = 0},
    de modo que Ker P = Im φ.
    """
    annihilator = nullspace_basis(phi.T)
    return ImmutableMatrix(columns_to_matrix(annihilator, phi.rows).T)


def kernel_inclusion(psi: ImmutableMatrix) -> ImmutableMatrix:
    """Inclusión canónica K: Ker ψ → k^D (columnas = base escalonada del núcleo)."""
    return columns_to_matrix(nullspace_basis(psi), psi.cols)


def _offsets(q: Quiver, m: Representation, neighbors: Tuple[int, ...]) -> Dict[int, int]:
    offsets, total = {}, 0
    for j in neighbors:
        offsets[j] = total
        total += m.dim(j)
    return offsets


def classical_reflect(q: Quiver, i: int, m: Representation) -> Representation:
    """
    S_i(M) sobre s_iΓ.

    Fuente: S_i(M)_i = Coker(⊕_{a:i→j} M_a) y cada nueva flecha j→i es la proyección canónica
    restringida a M_j. Sumidero: S_i(M)_i = Ker(⊕_{a:j→i} M_a) y cada nueva flecha i→j es la
    inclusión canónica seguida de la proyección sobre M_j.

    Raises:
        AdmissibilityError: si i no es fuente ni sumidero
    """
    if m.quiver != q:
        raise DomainError(f"❌ La representación no está sobre {q.label()}")
    target_quiver = reflect_orientation(q, i)
    matrices = {a: m.matrix(a) for a in q.arrows if i not in a}

    if q.is_source(i):
        neighbors = q.successors(i)
        projection = cokernel_projection(source_map(q, i, m))
        offsets = _offsets(q, m, neighbors)
        for j in neighbors:
            matrices[(j, i)] = column_block(projection, offsets[j], m.dim(j))
        new_dim = projection.rows
    else:
        neighbors = q.predecessors(i)
        inclusion = kernel_inclusion(sink_map(q, i, m))
        offsets = _offsets(q, m, neighbors)
        for j in neighbors:
            matrices[(i, j)] = row_block(inclusion, offsets[j], m.dim(j))
        new_dim = inclusion.cols

    dims = RootVector.from_mapping(q.vertices, {**m.dims.as_dict(), i: new_dim})
    return build_rep(target_quiver, dims, matrices)
