"""
Ejecución de la batería de verificación: cada comprobación corre sobre cada grafo, en el
orden de grupos de REGISTRY; los errores se capturan por comprobación.
"""

import time
from typing import Callable, Optional

from clusters.compatibility import require_rank_cap
from exceptions.quiver_exceptions import QuiverError, ResourceCapError
from quiver.dynkin import DynkinGraph, parse_dynkin_name
from quiver.orientation import alternating_orientation
from utils.logger import Logger
from verification.checks import REGISTRY, check_names
from verification.config import VerificationConfig
from verification.report import ERROR, FAIL, PASS, CheckResult, VerificationReport

logger = Logger.get_logger(__name__)


def _run_check(name: str, group: str, fn: Callable, graph: DynkinGraph, cfg: VerificationConfig) -> CheckResult:
    started = time.perf_counter()
    try:
        outcome = fn(graph, cfg)
        status = PASS if not outcome.counterexamples else FAIL
        result = CheckResult(name, group, outcome.scope, status, outcome.checked, outcome.counterexamples)
    except ResourceCapError:
        raise
    except QuiverError as e:
        logger.error(f"❌ {name} en {graph.name}: {e}")
        result = CheckResult(name, group, graph.name, ERROR, error=f"{type(e).__name__}: {e}")
    result.seconds = time.perf_counter() - started
    return result


def run_verify_suite(cfg: VerificationConfig, on_result: Optional[Callable[[CheckResult], None]] = None) -> VerificationReport:
    """
    Corre las comprobaciones seleccionadas. El informe es determinista dada la semilla
    (los tiempos solo se incluyen al serializar con timings=True).

    Raises:
        ConfigError: configuración inválida
        ResourceCapError: algún grafo supera el límite de rango sin cfg.large
    """
    cfg.validate(check_names())
    graphs = [parse_dynkin_name(name) for name in cfg.graphs]
    for graph in graphs:
        require_rank_cap(alternating_orientation(graph)[0], cfg.large)
    report = VerificationReport(cfg.seed, [g.name for g in graphs])

    for group, checks in REGISTRY.items():
        for name, fn in checks.items():
            if not cfg.selects(group, name):
                continue
            for graph in graphs:
                result = _run_check(name, group, fn, graph, cfg)
                report.results.append(result)
                logger.info(f"{'✅' if result.passed else '❌'} {group}/{name} {result.scope} ({result.checked} casos)")
                if on_result is not None:
                    on_result(result)

    logger.info(f"📋 Verificación: {len(report.results)} comprobaciones, {len(report.failed)} fallidas")
    return report
