# contracts/__init__.py
from .quiver_contract import (
    QuiverContract,
    ValidatedQuiver,
    load_quiver
)

__all__ = [
    'QuiverContract',
    'ValidatedQuiver',
    'load_quiver'
]
