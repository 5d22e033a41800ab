# conftest.py
# Añade la carpeta `src` al PYTHONPATH para que las importaciones como
# `quiver`, `representations`, `persistence`, etc. (que viven en src/) funcionen
# durante la ejecución de pytest.
import sys
import os
ROOT = os.path.dirname(__file__)
SRC = os.path.join(ROOT, "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

import pytest

# --- Fixture DB de prueba (SQLite in-memory) ---
from persistence.db_connection import Database

@pytest.fixture(scope="session")
def db():
    database = Database("sqlite://")
    database.create_tables()
    return database

# --- Carcajes de uso frecuente ---
from quiver import Quiver, alternating_orientation, dynkin_graph

@pytest.fixture
def a2_linear():
    """1→2"""
    return Quiver.from_arrows((1, 2), [(1, 2)])

@pytest.fixture
def a3_alternating():
    """Γ₀(A₃) = 1→2←3"""
    return alternating_orientation(dynkin_graph("A", 3))[0]

@pytest.fixture
def a3_linear():
    """Γ₁(A₃) = 1→2→3"""
    return Quiver.from_arrows((1, 2, 3), [(1, 2), (2, 3)])

@pytest.fixture
def d4_alternating():
    return alternating_orientation(dynkin_graph("D", 4))[0]
