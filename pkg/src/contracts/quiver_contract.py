# contracts/quiver_contract.py
import json
from pathlib import Path
from typing import TypedDict, Optional, List, Union

from exceptions.quiver_exceptions import DomainError, QuiverError
from quiver.dynkin import classify_tree, parse_dynkin_name
from quiver.graphs import TreeGraph
from quiver.orientation import Quiver
from utils.logger import Logger

logger = Logger.get_logger(__name__)


# "from"/"to" codifican la orientación ("from" es palabra reservada: sintaxis funcional)
EdgeContract = TypedDict("EdgeContract", {"from": int, "to": int})


class QuiverContract(TypedDict):
    """
    Contrato del archivo JSON de carcaj:
        {"vertices":[1,2,3], "edges":[{"from":1,"to":2},{"from":3,"to":2}], "dynkin":"A3"}
    """
    # 🔹 CAMPOS OBLIGATORIOS
    vertices: List[int]
    edges: List[EdgeContract]

    # 🔹 CAMPOS OPCIONALES
    dynkin: Optional[str]


class ValidatedQuiver:
    """Clase para validar y normalizar archivos de carcaj"""

    @staticmethod
    def validate(data: dict) -> Quiver:
        """
        Valida que los datos cumplan el contrato y construye el Quiver.
        Rechaza ciclos, referencias colgantes y tipos de Dynkin que no coinciden.
        """
        # 🔹 CAMPOS OBLIGATORIOS
        for field in ("vertices", "edges"):
            if field not in data:
                raise DomainError(f"❌ Carcaj inválido: falta campo obligatorio '{field}'")

        vertices = data["vertices"]
        if not isinstance(vertices, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in vertices):
            raise DomainError("❌ 'vertices' debe ser una lista de enteros")

        arrows = []
        for k, edge in enumerate(data["edges"]):
            if not isinstance(edge, dict) or "from" not in edge or "to" not in edge:
                raise DomainError(f"❌ Arista #{k} inválida: se esperan claves 'from' y 'to'")
            source, target = edge["from"], edge["to"]
            if source not in vertices or target not in vertices:
                raise DomainError(f"❌ Arista #{k} referencia un vértice inexistente: {source}→{target}")
            arrows.append((source, target))

        # TreeGraph rechaza ciclos, lazos y aristas duplicadas
        graph = TreeGraph(tuple(vertices), tuple(arrows))
        quiver = Quiver(graph, tuple(arrows))

        # 🔹 VALIDAR TIPO DECLARADO
        declared = data.get("dynkin")
        if declared is not None:
            expected = parse_dynkin_name(str(declared))
            actual = classify_tree(graph)
            if sorted(expected.components) != sorted(actual.components):
                raise DomainError(
                    f"❌ Tipo declarado {declared} no coincide con la forma del grafo ({actual.name})"
                )

        return quiver

    @staticmethod
    def create_safe_quiver(data: dict) -> Optional[Quiver]:
        """
        Crea un carcaj válido con manejo de errores.
        Retorna None si los datos son inválidos.
        """
        try:
            return ValidatedQuiver.validate(data)
        except (QuiverError, TypeError, ValueError) as e:
            logger.warning(f"⚠️ Carcaj inválido descartado: {e}")
            logger.debug(f"📋 Datos recibidos: {data}")
            return None


def load_quiver(path: Union[str, Path]) -> Quiver:
    """Lee y valida un archivo JSON de carcaj."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise DomainError(f"❌ JSON inválido en {path}: {e}")
    if not isinstance(data, dict):
        raise DomainError(f"❌ {path}: se esperaba un objeto JSON")
    return ValidatedQuiver.validate(data)
