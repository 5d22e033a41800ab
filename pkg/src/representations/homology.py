"""
Dimensiones de Hom y Ext¹ entre representaciones, por eliminación gaussiana exacta.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import ImmutableMatrix, Matrix

from exceptions.quiver_exceptions import DomainError, InvariantViolation
from quiver.roots import euler_form
from representations.linalg import nullspace_basis, rank
from representations.representation import Representation


@dataclass(frozen=True)
class MorphismSystem:
    """
    Sistema lineal homogéneo en las incógnitas f_i : M_i → N_i con las restricciones
    f_j · M_a = N_a · f_i para cada flecha a: i→j.

    Las incógnitas de f_v se numeran por filas: offsets[v] + r·dim M_v + c.
    """
    source: Representation
    target: Representation
    offsets: Tuple[Tuple[int, int], ...]
    unknowns: int
    equations: ImmutableMatrix

    @property
    def dimension(self) -> int:
        """dim Hom(M,N) = incógnitas − rango."""
        return self.unknowns - rank(self.equations)

    def solution_basis(self) -> List[Dict[int, Matrix]]:
        """Base del espacio de morfismos, cada uno como {vértice: matriz N_v × M_v}."""
        offsets = dict(self.offsets)
        basis = []
        for vec in nullspace_basis(self.equations):
            morphism = {}
            for v in self.source.quiver.vertices:
                rows, cols = self.target.dim(v), self.source.dim(v)
                start = offsets[v]
                morphism[v] = Matrix(rows, cols, lambda r, c: vec[start + r * cols + c])
            basis.append(morphism)
        return basis


def _require_same_quiver(m: Representation, n: Representation) -> None:
    if m.quiver != n.quiver:
        raise DomainError(f"❌ Representaciones sobre carcajes distintos: {m.quiver.label()} vs {n.quiver.label()}")


def morphism_system(m: Representation, n: Representation) -> MorphismSystem:
    """Arma el sistema de ecuaciones de Hom_Γ(M,N)."""
    _require_same_quiver(m, n)
    q = m.quiver

    offsets: Dict[int, int] = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += n.dim(v) * m.dim(v)

    def var(v: int, r: int, c: int) -> int:
        return offsets[v] + r * m.dim(v) + c

    rows = []
    for (i, j) in q.arrows:
        ma, na = m.matrix((i, j)), n.matrix((i, j))
        # entrada (r, c) de f_j·M_a − N_a·f_i, con r < dim N_j y c < dim M_i
        for r in range(n.dim(j)):
            for c in range(m.dim(i)):
                row = [0] * total
                for k in range(m.dim(j)):
                    if ma[k, c] != 0:
                        row[var(j, r, k)] += ma[k, c]
                for k in range(n.dim(i)):
                    if na[r, k] != 0:
                        row[var(i, k, c)] -= na[r, k]
                rows.append(row)

    equations = ImmutableMatrix(rows) if rows and total else ImmutableMatrix(Matrix.zeros(len(rows), total))
    return MorphismSystem(m, n, tuple(sorted(offsets.items())), total, equations)


@lru_cache(maxsize=None)
def hom_dim(m: Representation, n: Representation) -> int:
    """dim Hom_Γ(M,N)."""
    return morphism_system(m, n).dimension


@lru_cache(maxsize=None)
def ext_dim(m: Representation, n: Representation) -> int:
    """
    dim Ext¹_Γ(M,N) = dim Hom_Γ(M,N) − ⟨dim M, dim N⟩ (álgebra de caminos hereditaria).

    Raises:
        DomainError: si los carcajes no coinciden
        InvariantViolation: si el resultado fuese negativo
    """
    value = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if value < 0:
        raise InvariantViolation(f"❌ dim Ext¹ negativa ({value}) entre {m} y {n}")
    return value
