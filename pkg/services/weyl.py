"""
The Weyl group as a reflection group acting on weight coordinates.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from config import Config
from services.cartan import RootSystem, Weight, pairing, positive_pairings
from services.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NonTermination,
    ResourceLimit,
    SingularWeight,
)

logger = logging.getLogger("flagrep.weyl")

Matrix = Tuple[Tuple[int, ...], ...]


def _identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(1 if j == k else 0 for k in range(rank)) for j in range(rank))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[j][m] * b[m][k] for m in range(n)) for k in range(n))
        for j in range(n)
    )


def _reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    # (s_i λ)_j = λ_j - λ_i A[i][j]
    A = rs.cartan.entries
    n = rs.rank
    return tuple(
        tuple((1 if j == k else 0) - (A[i][j] if k == i else 0) for k in range(n))
        for j in range(n)
    )


def _check_index(rs: RootSystem, i: int) -> None:
    if not 0 <= i < rs.rank:
        raise IndexOutOfRange(f"simple reflection index {i} outside 0..{rs.rank - 1}")


@dataclass(frozen=True, eq=False)
class WeylElement:
    """
    A word ``(i1, ..., ik)`` meaning ``s_i1 ... s_ik`` together with its action
    matrix on weight coordinates. Elements compare by action, not by word.
    """

    word: Tuple[int, ...]
    action: Matrix

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls((), _identity_matrix(rank))

    @classmethod
    def from_word(cls, rs: RootSystem, word: Sequence[int]) -> "WeylElement":
        action = _identity_matrix(rs.rank)
        for i in word:
            _check_index(rs, i)
            action = _matmul(action, _reflection_matrix(rs, i))
        return cls(tuple(word), action)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self.action == _identity_matrix(len(self.action))

    def apply(self, lam: Weight) -> Weight:
        return Weight(tuple(
            sum(a * c for a, c in zip(row, lam.coords)) for row in self.action
        ))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word, _matmul(self.action, other.action))

    def inverse(self) -> "WeylElement":
        inverse = sympy.Matrix(self.action).inv()
        n = len(self.action)
        return WeylElement(
            tuple(reversed(self.word)),
            tuple(tuple(int(inverse[j, k]) for k in range(n)) for j in range(n)),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)


@dataclass(frozen=True)
class ChamberTag:
    """
    Signs of (λ, α) over Φ+ for a regular weight: the simple roots α_1..α_n
    first, then the remaining positive roots in ``rs.positives`` order.
    """

    sign_vector: Tuple[int, ...]
    rank: int

    @property
    def simple_signs(self) -> Tuple[int, ...]:
        return self.sign_vector[:self.rank]

    @property
    def is_dominant(self) -> bool:
        return all(s > 0 for s in self.sign_vector)

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.sign_vector) + ")"


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """Apply ``s_i λ = λ - <λ, α_i∨> α_i``."""
    _check_index(rs, i)
    if lam.rank != rs.rank:
        raise DimensionMismatch(f"weight {lam} has {lam.rank} coordinates, rank is {rs.rank}")
    row = rs.cartan.entries[i]
    c = lam.coords[i]
    return Weight(tuple(x - c * a for x, a in zip(lam.coords, row)))


def make_dominant(rs: RootSystem, lam: Weight) -> Tuple[Weight, WeylElement]:
    """
    Return the dominant W-conjugate of λ and an element carrying λ to it.

    Reflects at the lowest negative coordinate until none remain.

    Raises:
        NonTermination: If the iteration cap is hit.
    """
    word: List[int] = []
    current = lam
    for _ in range(Config.ITERATION_CAP):
        negative = next((i for i, c in enumerate(current.coords) if c < 0), None)
        if negative is None:
            return current, WeylElement.from_word(rs, word)
        current = simple_reflection(rs, negative, current)
        word.insert(0, negative)
    raise NonTermination(f"make_dominant did not terminate within {Config.ITERATION_CAP} reflections for {lam}")


def orbit_elements(rs: RootSystem, lam: Weight) -> Dict[Weight, WeylElement]:
    """
    Breadth-first W-orbit of λ; each point maps to a shortest element reaching it.

    Raises:
        ResourceLimit: If the orbit grows past ``Config.MAX_WEIGHTS``.
    """
    reflections = [_reflection_matrix(rs, i) for i in range(rs.rank)]
    found = {lam: WeylElement.identity(rs.rank)}
    frontier = [lam]
    while frontier:
        next_frontier = []
        for point in frontier:
            element = found[point]
            for i in range(rs.rank):
                if point.coords[i] == 0:
                    continue
                image = simple_reflection(rs, i, point)
                if image in found:
                    continue
                found[image] = WeylElement((i,) + element.word, _matmul(reflections[i], element.action))
                next_frontier.append(image)
        if len(found) > Config.MAX_WEIGHTS:
            raise ResourceLimit(f"orbit of {lam} exceeds {Config.MAX_WEIGHTS} points")
        frontier = next_frontier
    return found


def orbit(rs: RootSystem, lam: Weight) -> frozenset:
    """
    The full W-orbit of λ by closure under simple reflections.

    Raises:
        ResourceLimit: If the orbit grows past ``Config.MAX_WEIGHTS``.
    """
    found = {lam}
    frontier = [lam]
    while frontier:
        next_frontier = []
        for point in frontier:
            for i in range(rs.rank):
                if point.coords[i] == 0:
                    continue
                image = simple_reflection(rs, i, point)
                if image not in found:
                    found.add(image)
                    next_frontier.append(image)
        if len(found) > Config.MAX_WEIGHTS:
            raise ResourceLimit(f"orbit of {lam} exceeds {Config.MAX_WEIGHTS} points")
        frontier = next_frontier
    return frozenset(found)


def _fundamental_orbit_size(entries: Sequence[Sequence[int]], i: int, cap: int) -> Optional[int]:
    # orbit of ω_i on integer coordinates; None once it passes cap
    n = len(entries)
    start = tuple(1 if k == i else 0 for k in range(n))
    found = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for point in frontier:
            for k in range(n):
                c = point[k]
                if c == 0:
                    continue
                image = tuple(point[j] - c * entries[k][j] for j in range(n))
                if image not in found:
                    found.add(image)
                    next_frontier.append(image)
        if len(found) > cap:
            return None
        frontier = next_frontier
    return len(found)


def _parabolic_order(entries: Sequence[Sequence[int]]) -> int:
    """
    |W| = |W·ω_i| · |W_J| with J the nodes other than i, recursing on W_J.

    Tries leaves of the diagram first and keeps the smallest orbit.
    """
    n = len(entries)
    if n == 0:
        return 1
    degree = [sum(1 for j in range(n) if j != k and entries[k][j] != 0) for k in range(n)]
    best, best_size = None, Config.MAX_WEIGHTS
    for k in sorted(range(n), key=lambda k: (degree[k], k)):
        size = _fundamental_orbit_size(entries, k, best_size)
        if size is not None and (best is None or size < best_size):
            best, best_size = k, size
    if best is None:
        raise ResourceLimit(f"every fundamental orbit exceeds {Config.MAX_WEIGHTS} points")
    keep = [k for k in range(n) if k != best]
    return best_size * _parabolic_order([[entries[a][b] for b in keep] for a in keep])


def weyl_order(rs: RootSystem) -> int:
    """|W| through the tower of parabolic subgroups, one fundamental orbit per step."""
    order = _parabolic_order(rs.cartan.entries)
    logger.debug(f"|W({rs.cartan.name})| = {order}")
    return order


def group_elements(rs: RootSystem) -> List[WeylElement]:
    """
    Enumerate W as action matrices, closing the identity under simple reflections.

    Raises:
        ResourceLimit: If more than ``Config.MAX_GROUP_ORDER`` elements appear.
    """
    reflections = [_reflection_matrix(rs, i) for i in range(rs.rank)]
    identity = WeylElement.identity(rs.rank)
    seen = {identity.action}
    elements = [identity]
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for i, matrix in enumerate(reflections):
            action = _matmul(matrix, element.action)
            if action in seen:
                continue
            seen.add(action)
            if len(seen) > Config.MAX_GROUP_ORDER:
                raise ResourceLimit(f"W({rs.cartan.name}) has more than {Config.MAX_GROUP_ORDER} elements")
            child = WeylElement((i,) + element.word, action)
            elements.append(child)
            queue.append(child)
    return elements


def longest_element(rs: RootSystem) -> WeylElement:
    """w0, the element sending ρ to -ρ."""
    _, w = make_dominant(rs, -rs.rho)
    return w


def chamber_of(rs: RootSystem, lam: Weight) -> ChamberTag:
    """
    Classify a regular weight by the signs of its pairings with every
    positive root. Distinct group elements send ρ to distinct tags.

    Raises:
        SingularWeight: If (λ, α) = 0 for some root α.
    """
    simple = rs.simple_roots()
    ordered = simple + tuple(root for root in rs.positive_roots() if root.height > 1)
    signs = []
    for root in ordered:
        p = pairing(rs, lam, root)
        if p == 0:
            raise SingularWeight(f"{lam} lies on the wall of root {root}")
        signs.append(1 if p > 0 else -1)
    return ChamberTag(tuple(signs), rs.rank)


def inversion_count(rs: RootSystem, lam: Weight) -> int:
    """Number of positive roots pairing negatively with λ."""
    return sum(1 for p in positive_pairings(rs, lam) if p < 0)
