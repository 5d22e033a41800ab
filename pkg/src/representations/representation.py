"""
Representaciones explícitas de carcajes sobre los racionales.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix

from exceptions.quiver_exceptions import DomainError
from quiver.orientation import Quiver
from quiver.roots import RootVector
from representations.linalg import exact_matrix, rational_string, zero_matrix

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class Representation:
    """
    Representación M de un carcaj: espacios k^{dims_i} y matrices M_a de forma (dims_j × dims_i)
    para cada flecha a: i→j.

    Attributes:
        quiver: Carcaj Γ
        dims: Vector dimensión (coordenadas ≥ 0)
        matrices: (flecha, matriz) en el orden de quiver.arrows
    """
    quiver: Quiver
    dims: RootVector
    matrices: Tuple[Tuple[Arrow, ImmutableMatrix], ...]

    def __post_init__(self):
        q = self.quiver
        if self.dims.vertices != q.vertices:
            raise DomainError("❌ dims no está definido sobre los vértices del carcaj")
        if not self.dims.is_nonnegative():
            raise DomainError(f"❌ dims debe ser ≥ 0: {self.dims.coords}")
        arrows = tuple(a for a, _ in self.matrices)
        if arrows != q.arrows:
            raise DomainError(f"❌ Matrices para {arrows}, se esperaban {q.arrows}")
        for (i, j), m in self.matrices:
            expected = (self.dims[j], self.dims[i])
            if m.shape != expected:
                raise DomainError(f"❌ Matriz de {i}→{j} con forma {m.shape}, se esperaba {expected}")

    @cached_property
    def _by_arrow(self) -> Dict[Arrow, ImmutableMatrix]:
        return dict(self.matrices)

    def matrix(self, arrow: Arrow) -> ImmutableMatrix:
        try:
            return self._by_arrow[arrow]
        except KeyError:
            raise DomainError(f"❌ {arrow} no es una flecha de {self.quiver.label()}")

    def dim(self, i: int) -> int:
        return self.dims[i]

    def is_zero(self) -> bool:
        return self.dims.is_zero()

    def total_dim(self) -> int:
        return self.dims.height

    def __str__(self) -> str:
        return f"Rep({self.quiver.label()}; dims={list(self.dims.coords)})"


def build_rep(q: Quiver, dims: RootVector, matrices: Mapping[Arrow, Matrix]) -> Representation:
    """Construye una representación; las flechas ausentes reciben la matriz nula."""
    entries = []
    for (i, j) in q.arrows:
        m = matrices.get((i, j))
        m = zero_matrix(dims[j], dims[i]) if m is None else ImmutableMatrix(m)
        entries.append(((i, j), m))
    return Representation(q, dims, tuple(entries))


def rep_from_lists(q: Quiver, dims: Mapping[int, int], matrices: Mapping[Arrow, Sequence[Sequence]]) -> Representation:
    """Atajo para tests: dims como dict y matrices como listas de filas."""
    dv = RootVector.from_mapping(q.vertices, dims)
    return build_rep(
        q,
        dv,
        {a: exact_matrix(rows, dv[a[1]], dv[a[0]]) for a, rows in matrices.items()},
    )


def zero_rep(q: Quiver) -> Representation:
    return build_rep(q, RootVector.zero(q.vertices), {})


def simple_rep(q: Quiver, i: int) -> Representation:
    """E_i: unidimensional en i, cero en el resto, todas las flechas nulas."""
    return build_rep(q, RootVector.simple(q.vertices, i), {})


def direct_sum(*reps: Representation, quiver: Optional[Quiver] = None) -> Representation:
    """Suma directa bloque-diagonal (el orden de sumandos fija la base)."""
    if not reps:
        if quiver is None:
            raise DomainError("❌ direct_sum vacío requiere el carcaj")
        return zero_rep(quiver)
    q = reps[0].quiver
    for r in reps[1:]:
        if r.quiver != q:
            raise DomainError("❌ direct_sum: carcajes distintos")
    dims = reps[0].dims
    for r in reps[1:]:
        dims = dims + r.dims
    matrices = {}
    for a in q.arrows:
        blocks = [r.matrix(a) for r in reps]
        matrices[a] = _block_diag(blocks, dims[a[1]], dims[a[0]])
    return build_rep(q, dims, matrices)


def _block_diag(blocks, nrows: int, ncols: int) -> ImmutableMatrix:
    # sympy.diag no admite bloques de dimensión cero: se arma a mano
    out = Matrix.zeros(nrows, ncols)
    r = c = 0
    for b in blocks:
        if b.rows and b.cols:
            out[r:r + b.rows, c:c + b.cols] = b
        r += b.rows
        c += b.cols
    return ImmutableMatrix(out)


def rep_to_json(rep: Representation) -> dict:
    """Volcado JSON: dims por vértice y matrices por filas como cadenas 'p/q'."""
    return {
        "quiver": rep.quiver.to_contract(),
        "dims": {str(v): d for v, d in rep.dims.as_dict().items()},
        "matrices": [
            {
                "from": i,
                "to": j,
                "rows": [[rational_string(m[r, c]) for c in range(m.cols)] for r in range(m.rows)],
            }
            for (i, j), m in rep.matrices
        ],
    }
