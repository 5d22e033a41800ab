"""
Batería de verificación de punta a punta sobre los módulos del paquete.
"""

from .config import VerificationConfig, GROUPS, DEFAULT_GRAPHS, EXHAUSTIVE_RANK
from .report import CheckResult, VerificationReport
from .suite import run_verify_suite

__all__ = [
    'VerificationConfig',
    'GROUPS',
    'DEFAULT_GRAPHS',
    'EXHAUSTIVE_RANK',
    'CheckResult',
    'VerificationReport',
    'run_verify_suite',
]
