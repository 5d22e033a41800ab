"""
Palabras del grupoide de reflexiones: letras Σ_i y D, aplicación sobre orientaciones,
forma normal módulo (R1)–(R4) y los criterios de expresión reducida.

Las palabras se leen en orden de aplicación: la primera letra actúa primero sobre start.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from exceptions.quiver_exceptions import AdmissibilityError, DomainError, InvariantViolation
from quiver.graphs import TreeGraph
from quiver.orientation import Quiver, reflect_orientation
from quiver.roots import RootVector, almost_positive_roots
from decorated.piecewise import sigma


@dataclass(frozen=True, order=True)
class Letter:
    """Σ_i si vertex es un vértice; D si vertex es None."""
    vertex: Optional[int] = None

    @property
    def is_dual(self) -> bool:
        return self.vertex is None

    def __str__(self) -> str:
        return "D" if self.is_dual else f"S{self.vertex}"


DUAL = Letter(None)


def Sigma(i: int) -> Letter:
    return Letter(int(i))


_TOKEN_RE = re.compile(r"^(?:S|s|Σ)?(\d+)$")


def parse_letters(text: str) -> Tuple[Letter, ...]:
    """'S1,S2,D' o '1 2 D' → letras."""
    letters = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        if token in ("D", "d"):
            letters.append(DUAL)
            continue
        match = _TOKEN_RE.match(token)
        if not match:
            raise DomainError(f"❌ Letra inválida: '{token}'")
        letters.append(Sigma(int(match.group(1))))
    return tuple(letters)


@dataclass(frozen=True)
class Word:
    """Morfismo del grupoide: orientación inicial y letras en orden de aplicación."""
    start: Quiver
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not letter.is_dual:
                self.start.graph.require_vertex(letter.vertex)

    @classmethod
    def of(cls, start: Quiver, letters: Union[str, Iterable[Union[Letter, int]]]) -> "Word":
        if isinstance(letters, str):
            return cls(start, parse_letters(letters))
        return cls(start, tuple(x if isinstance(x, Letter) else Sigma(x) for x in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def is_dual_free(self) -> bool:
        return not any(letter.is_dual for letter in self.letters)

    def vertices(self) -> Tuple[int, ...]:
        """Vértices de las letras Σ, en orden."""
        return tuple(letter.vertex for letter in self.letters if not letter.is_dual)

    def then(self, other: Iterable[Letter]) -> "Word":
        return Word(self.start, self.letters + tuple(other))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) or "1"


def apply_word(w: Word) -> Quiver:
    """
    Orientación final: Σ_i lleva Γ a s_iΓ y D lleva Γ a Γ^op.

    Raises:
        AdmissibilityError: con la posición (0-based) de la primera letra no aplicable
    """
    current = w.start
    for position, letter in enumerate(w.letters):
        if letter.is_dual:
            current = current.opposite()
            continue
        if not current.is_admissible(letter.vertex):
            raise AdmissibilityError(
                f"❌ Letra {letter} en la posición {position} no aplicable: "
                f"{letter.vertex} no es fuente ni sumidero en {current.label()}",
                vertex=letter.vertex,
                position=position,
            )
        current = reflect_orientation(current, letter.vertex)
    return current


def _dependent(graph: TreeGraph, i: int, j: int) -> bool:
    return i == j or graph.linked(i, j)


def insert_letter(graph: TreeGraph, reduced: Sequence[int], i: int) -> Tuple[int, ...]:
    """
    Multiplica una palabra reducida por Σ_i a la derecha: si hay una i que puede llevarse
    al final conmutando (R2), se cancela (R1); si no, se añade.
    """
    reduced = list(reduced)
    for p in range(len(reduced) - 1, -1, -1):
        if reduced[p] == i:
            del reduced[p]
            return tuple(reduced)
        if graph.linked(reduced[p], i):
            break
    reduced.append(i)
    return tuple(reduced)


def reduce_letters(graph: TreeGraph, vertices: Iterable[int]) -> Tuple[int, ...]:
    reduced: Tuple[int, ...] = ()
    for i in vertices:
        reduced = insert_letter(graph, reduced, i)
    return reduced


def foata_layers(graph: TreeGraph, vertices: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """
    Forma normal de Cartier–Foata de la traza: cada letra va a la capa siguiente a la más
    alta de las letras anteriores que dependen de ella; cada capa, ordenada.
    """
    levels: List[int] = []
    layers: List[List[int]] = []
    for p, i in enumerate(vertices):
        level = 0
        for q in range(p):
            if _dependent(graph, vertices[q], i):
                level = max(level, levels[q] + 1)
        levels.append(level)
        if level == len(layers):
            layers.append([])
        layers[level].append(i)
    return tuple(tuple(sorted(layer)) for layer in layers)


def flatten(layers: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    return tuple(i for layer in layers for i in layer)


@dataclass(frozen=True)
class NormalForm:
    """
    Representante canónico módulo (R1)–(R4): D empujadas al frente y reducidas a su paridad,
    parte Σ en forma de Cartier–Foata.
    """
    parity: int
    layers: Tuple[Tuple[int, ...], ...]

    @property
    def sigma_part(self) -> Tuple[int, ...]:
        return flatten(self.layers)

    def letters(self) -> Tuple[Letter, ...]:
        prefix = (DUAL,) if self.parity else ()
        return prefix + tuple(Sigma(i) for i in self.sigma_part)

    def __len__(self) -> int:
        return self.parity + len(self.sigma_part)

    def __str__(self) -> str:
        body = " ".join("[" + " ".join(str(i) for i in layer) + "]" for layer in self.layers)
        if self.parity:
            return f"D {body}".strip()
        return body or "1"


def canonical(graph: TreeGraph, parity: int, vertices: Iterable[int]) -> NormalForm:
    reduced = reduce_letters(graph, vertices)
    layers = foata_layers(graph, reduced)
    # la reducción debe ser idempotente sobre el representante canónico
    if reduce_letters(graph, flatten(layers)) != flatten(layers):
        raise InvariantViolation(f"❌ Reducción no confluente para {reduced}")
    return NormalForm(parity % 2, layers)


def normal_form(w: Word) -> NormalForm:
    """
    Raises:
        AdmissibilityError: si la palabra no es aplicable
    """
    apply_word(w)
    parity = sum(1 for letter in w.letters if letter.is_dual)
    return canonical(w.start.graph, parity, w.vertices())


def _require_dual_free(w: Word) -> None:
    if not w.is_dual_free():
        raise DomainError(f"❌ La palabra '{w}' contiene D")


def is_reduced(w: Word) -> bool:
    """Entre dos apariciones de la misma i aparece alguna j unida a i."""
    _require_dual_free(w)
    apply_word(w)
    graph = w.start.graph
    vertices = w.vertices()
    last: Dict[int, int] = {}
    for p, i in enumerate(vertices):
        if i in last:
            between = vertices[last[i] + 1:p]
            if not any(graph.linked(i, j) for j in between):
                return False
        last[i] = p
    return True


def check_inbetween(w: Word) -> bool:
    """
    Entre apariciones consecutivas de i aparece exactamente una vez cada vecino de i.

    Raises:
        DomainError: si la palabra contiene D o no es reducida
    """
    if not is_reduced(w):
        raise DomainError(f"❌ La palabra '{w}' no es reducida")
    graph = w.start.graph
    vertices = w.vertices()
    last: Dict[int, int] = {}
    for p, i in enumerate(vertices):
        if i in last:
            between = vertices[last[i] + 1:p]
            if any(between.count(j) != 1 for j in graph.neighbors(i)):
                return False
        last[i] = p
    return True


def word_action_on_roots(w: Word) -> Dict[RootVector, RootVector]:
    """
    Permutación de Φ_{≥−1} inducida: σ_i por cada Σ_i e identidad por cada D.

    Raises:
        UnsupportedGraphError: si el grafo no es ADE
        AdmissibilityError: si la palabra no es aplicable
    """
    apply_word(w)
    graph = w.start.graph
    roots = almost_positive_roots(graph)
    action = {}
    for alpha in roots:
        image = alpha
        for i in w.vertices():
            image = sigma(graph, i, image)
        action[alpha] = image
    if set(action.values()) != set(roots):
        raise InvariantViolation(f"❌ La acción de '{w}' no permuta Φ_≥−1")
    return action


def inverse(w: Word) -> Word:
    """Palabra inversa, que parte del final de w."""
    return Word(apply_word(w), tuple(reversed(w.letters)))


def alternating_blocks(first: str, blocks: int, plus: Iterable[int], minus: Iterable[int]) -> Tuple[int, ...]:
    """Σ₊Σ₋Σ₊… (first='+') o Σ₋Σ₊… (first='-') con el número de bloques dado."""
    parts = {"+": tuple(sorted(plus)), "-": tuple(sorted(minus))}
    order = ("+", "-") if first == "+" else ("-", "+")
    result: List[int] = []
    for b in range(blocks):
        result.extend(parts[order[b % 2]])
    return tuple(result)
