"""
Independencia de la orientación del f⁺-vector y fórmula de producto para el número de
clusters positivos: Π_i (e_i + h − 1) / (e_i + 1).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd

from census.fvectors import FVector, f_plus_vector
from clusters.compatibility import require_rank_cap
from exceptions.quiver_exceptions import DomainError, InvariantViolation
from quiver.dynkin import DynkinGraph, classify_tree
from quiver.graphs import TreeGraph
from quiver.orientation import Quiver, enumerate_orientations
from utils.logger import Logger

logger = Logger.get_logger(__name__)


def positive_cluster_count(graph: Union[TreeGraph, DynkinGraph],
                           exponents: Optional[Sequence[int]] = None,
                           coxeter_number: Optional[int] = None) -> int:
    """
    Valor exacto del producto sobre la tabla de exponentes. exponents/coxeter_number
    sustituyen a la tabla almacenada (inyección de fallos).

    Raises:
        DomainError: si el grafo no es irreducible
        InvariantViolation: si el producto no es entero
    """
    dynkin = classify_tree(graph)
    if not dynkin.is_irreducible:
        raise DomainError(f"❌ La fórmula exige un sistema irreducible; recibido {dynkin.name}")
    exps = tuple(exponents) if exponents is not None else dynkin.exponents[0]
    h = coxeter_number if coxeter_number is not None else dynkin.coxeter_numbers[0]
    value = Fraction(1)
    for e in exps:
        value *= Fraction(e + h - 1, e + 1)
    if value.denominator != 1:
        raise InvariantViolation(f"❌ Producto no entero para {dynkin.name}: {value}")
    return int(value)


@dataclass
class InvarianceReport:
    graph: str
    orientations: List[Tuple[str, FVector]] = field(default_factory=list)
    formula_value: Optional[int] = None

    @property
    def invariant(self) -> bool:
        return len({fv for _, fv in self.orientations}) <= 1

    @property
    def common(self) -> Optional[FVector]:
        return self.orientations[0][1] if self.orientations and self.invariant else None

    @property
    def formula_matches(self) -> bool:
        return self.formula_value is None or (self.common is not None and self.common.top == self.formula_value)

    @property
    def passed(self) -> bool:
        return self.invariant and self.formula_matches

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "orientations": [{"quiver": label, "f_plus": fv.as_list()} for label, fv in self.orientations],
            "invariant": self.invariant,
            "formula_value": self.formula_value,
        }

    def to_frame(self) -> pd.DataFrame:
        width = max((len(fv) for _, fv in self.orientations), default=0)
        rows = [[label] + [fv[k] for k in range(width)] for label, fv in self.orientations]
        return pd.DataFrame(rows, columns=["quiver"] + [f"f{k}" for k in range(width)])


def _f_plus_of(q: Quiver) -> Tuple[str, FVector]:
    return q.label(), f_plus_vector(q, large=True)


def orientation_invariance(graph: Union[TreeGraph, DynkinGraph], jobs: int = 1, large: bool = False,
                           exponents: Optional[Sequence[int]] = None) -> InvarianceReport:
    """
    f⁺ para cada orientación; con jobs > 1 se reparte en procesos y se agrega en el orden
    de enumerate_orientations.
    """
    dynkin = classify_tree(graph)
    orientations = enumerate_orientations(dynkin)
    require_rank_cap(orientations[0], large)

    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_f_plus_of, orientations)
    else:
        results = [_f_plus_of(q) for q in orientations]

    report = InvarianceReport(dynkin.name, results)
    if dynkin.is_irreducible:
        report.formula_value = positive_cluster_count(dynkin, exponents)
    logger.info(
        f"🧭 {dynkin.name}: {len(results)} orientaciones, invariante={report.invariant}, "
        f"fórmula={report.formula_value}"
    )
    return report
