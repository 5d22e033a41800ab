"""
Álgebra lineal exacta sobre Q (sympy), con los casos de dimensión cero resueltos
explícitamente para que núcleos y conúcleos sean deterministas.
"""

from typing import Iterable, List, Sequence

from sympy import QQ, ImmutableMatrix, Matrix, Rational, eye, zeros
from sympy.polys.matrices import DomainMatrix

from exceptions.quiver_exceptions import DomainError


def exact_matrix(rows: Sequence[Sequence], nrows: int, ncols: int) -> ImmutableMatrix:
    """Matriz racional inmutable de forma (nrows × ncols) a partir de filas."""
    if nrows == 0 or ncols == 0:
        return ImmutableMatrix(zeros(nrows, ncols))
    data = [[Rational(x) for x in row] for row in rows]
    m = ImmutableMatrix(data)
    if m.shape != (nrows, ncols):
        raise DomainError(f"❌ Forma de matriz {m.shape} ≠ {(nrows, ncols)}")
    return m


def zero_matrix(nrows: int, ncols: int) -> ImmutableMatrix:
    return ImmutableMatrix(zeros(nrows, ncols))


def rank(a: Matrix) -> int:
    """Rango exacto (eliminación sobre QQ con DomainMatrix)."""
    if a.rows == 0 or a.cols == 0:
        return 0
    return DomainMatrix.from_Matrix(a).convert_to(QQ).rank()


def nullspace_basis(a: Matrix) -> List[Matrix]:
    """Base del núcleo por pivotes de la forma escalonada reducida."""
    if a.cols == 0:
        return []
    if a.rows == 0:
        identity = eye(a.cols)
        return [identity[:, k] for k in range(a.cols)]
    return a.nullspace()


def columns_to_matrix(columns: List[Matrix], nrows: int) -> ImmutableMatrix:
    """Columnas → matriz (nrows × len(columns))."""
    if not columns:
        return zero_matrix(nrows, 0)
    return ImmutableMatrix(Matrix.hstack(*columns))


def vstack(blocks: Iterable[Matrix], ncols: int) -> ImmutableMatrix:
    blocks = list(blocks)
    if not blocks:
        return zero_matrix(0, ncols)
    return ImmutableMatrix(Matrix.vstack(*blocks))


def hstack(blocks: Iterable[Matrix], nrows: int) -> ImmutableMatrix:
    blocks = list(blocks)
    if not blocks:
        return zero_matrix(nrows, 0)
    return ImmutableMatrix(Matrix.hstack(*blocks))


def column_block(a: Matrix, start: int, width: int) -> ImmutableMatrix:
    if a.rows == 0 or width == 0:
        return zero_matrix(a.rows, width)
    return ImmutableMatrix(a[:, start:start + width])


def row_block(a: Matrix, start: int, height: int) -> ImmutableMatrix:
    if a.cols == 0 or height == 0:
        return zero_matrix(height, a.cols)
    return ImmutableMatrix(a[start:start + height, :])


def rational_string(x) -> str:
    """Entrada racional como 'p/q'."""
    x = Rational(x)
    return f"{x.p}/{x.q}"
