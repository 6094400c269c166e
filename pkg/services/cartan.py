"""
Cartan matrices, weights, roots and root systems.

Weights are stored in fundamental-weight coordinates, ``coords[i] = <λ, α_i∨>``.
The simple root ``α_i`` in weight coordinates is row ``i`` of the Cartan matrix,
with the convention ``A[i][j] = 2(α_i, α_j) / (α_j, α_j)``.
"""
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from services.errors import DimensionMismatch, InvalidCartanMatrix, NotFiniteType

logger = logging.getLogger("flagrep.cartan")

Rational = Union[int, Fraction]

_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class Weight:
    """An element of the rational weight space, in fundamental-weight coordinates."""

    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: Rational) -> "Weight":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        """True for lattice points (all coordinates integers)."""
        return all(c.denominator == 1 for c in self.coords)

    def int_coords(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.coords)

    def _check_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise DimensionMismatch(
                f"weights of length {self.rank} and {other.rank} cannot be combined"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def scaled(self, factor: Rational) -> "Weight":
        return Weight(tuple(factor * c for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _fill_a(n: int, i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def _fill_b(n: int, i: int, j: int) -> int:
    if (i, j) == (n - 2, n - 1):
        return -2
    return _fill_a(n, i, j)


def _fill_c(n: int, i: int, j: int) -> int:
    if (i, j) == (n - 1, n - 2):
        return -2
    return _fill_a(n, i, j)


def _fill_d(n: int, i: int, j: int) -> int:
    # chain 0..n-2, node n-1 attached to n-3
    if {i, j} == {n - 1, n - 2}:
        return 0
    if {i, j} == {n - 1, n - 3}:
        return -1
    return _fill_a(n, i, j)


def _fill_e(n: int, i: int, j: int) -> int:
    # chain 0..n-2, node n-1 attached to 2
    if {i, j} == {n - 1, n - 2}:
        return 0
    if {i, j} == {n - 1, 2}:
        return -1
    return _fill_a(n, i, j)


def _fill_f(n: int, i: int, j: int) -> int:
    if (i, j) == (1, 2):
        return -2
    return _fill_a(n, i, j)


def _fill_g(n: int, i: int, j: int) -> int:
    if (i, j) == (0, 1):
        return -3
    return _fill_a(n, i, j)


_SERIES: Dict[str, Tuple[Callable[[int, int, int], int], Callable[[int], bool], str]] = {
    "A": (_fill_a, lambda n: n >= 1, "n >= 1"),
    "B": (_fill_b, lambda n: n >= 2, "n >= 2"),
    "C": (_fill_c, lambda n: n >= 2, "n >= 2"),
    "D": (_fill_d, lambda n: n >= 3, "n >= 3"),
    "E": (_fill_e, lambda n: n in (6, 7, 8), "n in 6, 7, 8"),
    "F": (_fill_f, lambda n: n == 4, "n = 4"),
    "G": (_fill_g, lambda n: n == 2, "n = 2"),
}


def _sympy_matrix(rows: Sequence[Sequence[Rational]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                          for x in row] for row in rows])


def _to_fraction(value: sympy.Expr) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _leading_minors_positive(matrix: sympy.Matrix) -> bool:
    return all(matrix[:k, :k].det() > 0 for k in range(1, matrix.rows + 1))


@dataclass(frozen=True)
class CartanMatrix:
    """
    Integer Cartan matrix of a finite-type root datum.

    Validated at construction: diagonal 2, non-positive off-diagonal entries
    with symmetric zero pattern, symmetrizable with a positive definite
    symmetrization.
    """

    entries: Tuple[Tuple[int, ...], ...]
    label: Optional[str] = None
    symmetrizer: Tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            entries = tuple(tuple(int(a) for a in row) for row in self.entries)
        except (TypeError, ValueError) as e:
            raise InvalidCartanMatrix(f"Cartan entries must be integers: {e}") from e
        object.__setattr__(self, "entries", entries)
        self._check_entries()
        object.__setattr__(self, "symmetrizer", self._compute_symmetrizer())
        if not _leading_minors_positive(_sympy_matrix(self.symmetrized())):
            raise NotFiniteType(f"symmetrized form of {self.name} is not positive definite")

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def name(self) -> str:
        return self.label or f"rank-{self.rank} matrix"

    def _check_entries(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise InvalidCartanMatrix("Cartan matrix must have positive rank")
        if any(len(row) != n for row in self.entries):
            raise InvalidCartanMatrix("Cartan matrix must be square")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise InvalidCartanMatrix(f"diagonal entry A[{i}][{i}] must be 2")
            for j in range(n):
                if i == j:
                    continue
                if self.entries[i][j] > 0:
                    raise InvalidCartanMatrix(f"off-diagonal entry A[{i}][{j}] must be <= 0")
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                    raise InvalidCartanMatrix(f"A[{i}][{j}] = 0 must imply A[{j}][{i}] = 0")

    def components(self) -> List[List[int]]:
        """Connected components of the Dynkin graph, each sorted."""
        seen = set()
        components = []
        for start in range(self.rank):
            if start in seen:
                continue
            queue = deque([start])
            seen.add(start)
            component = []
            while queue:
                i = queue.popleft()
                component.append(i)
                for j in range(self.rank):
                    if j not in seen and self.entries[i][j] != 0:
                        seen.add(j)
                        queue.append(j)
            components.append(sorted(component))
        return components

    def _compute_symmetrizer(self) -> Tuple[Fraction, ...]:
        # d_j = (α_j, α_j) / 2, with the shortest simple root of each component at 1
        d: Dict[int, Fraction] = {}
        for component in self.components():
            d[component[0]] = Fraction(1)
            queue = deque([component[0]])
            while queue:
                i = queue.popleft()
                for j in component:
                    if j != i and j not in d and self.entries[i][j] != 0:
                        d[j] = d[i] * Fraction(self.entries[j][i], self.entries[i][j])
                        queue.append(j)
            smallest = min(d[i] for i in component)
            for i in component:
                d[i] /= smallest

        for i in range(self.rank):
            for j in range(self.rank):
                if self.entries[i][j] * d[j] != self.entries[j][i] * d[i]:
                    raise NotFiniteType(f"{self.name} is not symmetrizable")
        return tuple(d[i] for i in range(self.rank))

    def symmetrized(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """The matrix of (α_i, α_j), i.e. ``A·D``."""
        d = self.symmetrizer
        return tuple(
            tuple(self.entries[i][j] * d[j] for j in range(self.rank))
            for i in range(self.rank)
        )


def cartan_matrix_from_label(label: str) -> CartanMatrix:
    """
    Build a Cartan matrix from a type label.

    Accepts "A<n>", "B<n>", "C<n>", "D<n>", "E6", "E7", "E8", "F4", "G2" and
    products of those joined by "x" (block diagonal), e.g. "A1xG2".

    Raises:
        InvalidCartanMatrix: If the label is not recognised.
    """
    parts = [p.strip().upper() for p in re.split(r"[xX×]", label.strip())]
    blocks = []
    for part in parts:
        m = _LABEL_RE.match(part)
        if not m:
            raise InvalidCartanMatrix(f"unknown type label: {label!r}")
        series, n = m.group(1), int(m.group(2))
        fill, allowed, constraint = _SERIES[series]
        if not allowed(n):
            raise InvalidCartanMatrix(f"unknown type label: {part!r} (type {series} requires {constraint})")
        blocks.append([[fill(n, i, j) for j in range(n)] for i in range(n)])

    rank = sum(len(b) for b in blocks)
    entries = [[0] * rank for _ in range(rank)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                entries[offset + i][offset + j] = value
        offset += len(block)
    return CartanMatrix(tuple(tuple(row) for row in entries), label="x".join(parts))


def load_cartan_file(path: Union[str, Path]) -> CartanMatrix:
    """
    Read a whitespace-separated integer matrix, one row per line.

    Raises:
        InvalidCartanMatrix: If the file cannot be parsed into a valid matrix.
    """
    text = Path(path).read_text()
    try:
        rows = [tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip()]
    except ValueError as e:
        raise InvalidCartanMatrix(f"could not parse Cartan matrix file {path}: {e}") from e
    return CartanMatrix(tuple(rows))


def cartan_from_source(source: str) -> CartanMatrix:
    """Resolve a type label, or failing that, a path to a matrix file."""
    try:
        return cartan_matrix_from_label(source)
    except InvalidCartanMatrix:
        if Path(source).is_file():
            return load_cartan_file(source)
        raise


@dataclass(frozen=True)
class Root:
    simple_coords: Tuple[int, ...]
    weight_coords: Weight
    is_positive: bool
    coroot_coords: Tuple[Fraction, ...] = field(repr=False)
    norm: Fraction = field(repr=False)

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.simple_coords) + "]"


class SumKind(Enum):
    ROOT = "root"
    ZERO = "zero"
    NOT_A_ROOT = "not-a-root"


@dataclass(frozen=True)
class RootSum:
    kind: SumKind
    root: Optional[Root] = None


@dataclass(frozen=True)
class RootSystem:
    """
    Enumerated root system: ``roots`` lists Φ+ first (by height), then the
    negatives in the same order; ``positives`` indexes Φ+ inside ``roots``.
    ``form`` is the Gram matrix of the fundamental weights.
    """

    cartan: CartanMatrix
    roots: Tuple[Root, ...]
    positives: Tuple[int, ...]
    rho: Weight
    form: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def label(self) -> Optional[str]:
        return self.cartan.label

    @cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {root.simple_coords: i for i, root in enumerate(self.roots)}

    @cached_property
    def cartan_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        inverse = _sympy_matrix(self.cartan.entries).inv()
        return tuple(
            tuple(_to_fraction(inverse[i, j]) for j in range(self.rank)) for i in range(self.rank)
        )

    def root_index(self, simple_coords: Sequence[int]) -> Optional[int]:
        return self._index.get(tuple(simple_coords))

    def positive_roots(self) -> Tuple[Root, ...]:
        return tuple(self.roots[i] for i in self.positives)

    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(self.roots[self._index[_unit(self.rank, i)]] for i in range(self.rank))

    def highest_root(self) -> Root:
        """Positive root of greatest height (last in the sorted positives)."""
        return self.roots[self.positives[-1]]

    def weight(self, *coords: Rational) -> Weight:
        if len(coords) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(coords)}")
        return Weight(tuple(coords))

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "rank": self.rank,
            "roots": [list(r.simple_coords) for r in self.roots],
            "positives": list(self.positives),
            "rho": [int(c) for c in self.rho.coords],
        }


def _unit(rank: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(rank))


def _root_norm(symmetrized: Sequence[Sequence[Fraction]], beta: Sequence[int]) -> Fraction:
    n = len(beta)
    return sum(
        (beta[j] * beta[k] * symmetrized[j][k] for j in range(n) for k in range(n)),
        Fraction(0),
    )


def _enumerate_roots(cartan: CartanMatrix) -> List[Tuple[int, ...]]:
    """Closure of the simple roots under simple reflections, in simple-root coordinates."""
    rank = cartan.rank
    A = cartan.entries
    sym = cartan.symmetrized()
    bound = 4 * rank * rank
    strata: Dict[Fraction, int] = {}

    seen = set()
    queue = deque()
    for i in range(rank):
        beta = _unit(rank, i)
        seen.add(beta)
        queue.append(beta)
        norm = _root_norm(sym, beta)
        strata[norm] = strata.get(norm, 0) + 1

    while queue:
        beta = queue.popleft()
        for i in range(rank):
            p = sum(beta[j] * A[j][i] for j in range(rank))
            if p == 0:
                continue
            image = tuple(beta[j] - (p if j == i else 0) for j in range(rank))
            if image in seen:
                continue
            norm = _root_norm(sym, image)
            strata[norm] = strata.get(norm, 0) + 1
            if strata[norm] > bound:
                raise NotFiniteType(
                    f"reflection closure of {cartan.name} exceeded {bound} roots of squared length {norm}"
                )
            seen.add(image)
            queue.append(image)
    return list(seen)


def build_root_system(cartan: CartanMatrix) -> RootSystem:
    """
    Enumerate the full root system of a Cartan matrix by reflection closure.

    Raises:
        NotFiniteType: If the closure exceeds its bound or the data is not of finite type.
    """
    rank = cartan.rank
    A = cartan.entries
    d = cartan.symmetrizer
    sym = cartan.symmetrized()

    enumerated = _enumerate_roots(cartan)
    positive_coords = []
    for beta in enumerated:
        if all(c >= 0 for c in beta):
            positive_coords.append(beta)
        elif not all(c <= 0 for c in beta):
            raise NotFiniteType(f"root {beta} of {cartan.name} has mixed-sign coordinates")
    positive_coords.sort(key=lambda b: (sum(b), b))
    ordered = positive_coords + [tuple(-c for c in b) for b in positive_coords]
    if len(ordered) != len(enumerated) or set(ordered) != set(enumerated):
        raise NotFiniteType(f"root set of {cartan.name} is not closed under negation")

    roots = []
    for beta in ordered:
        weight_coords = Weight(tuple(sum(beta[j] * A[j][k] for j in range(rank)) for k in range(rank)))
        norm = _root_norm(sym, beta)
        half = norm / 2
        coroot = tuple(beta[j] * d[j] / half for j in range(rank))
        roots.append(Root(
            simple_coords=beta,
            weight_coords=weight_coords,
            is_positive=all(c >= 0 for c in beta),
            coroot_coords=coroot,
            norm=norm,
        ))

    positives = tuple(range(len(positive_coords)))
    total = Weight.zero(rank)
    for i in positives:
        total = total + roots[i].weight_coords
    rho = total.scaled(Fraction(1, 2))
    if rho.coords != (1,) * rank:
        raise NotFiniteType(f"half-sum of positive roots of {cartan.name} is {rho}, expected all ones")

    a_inv = _sympy_matrix(A).inv()
    gram = a_inv * _sympy_matrix([[d[i] if i == j else 0 for j in range(rank)] for i in range(rank)])
    if not _leading_minors_positive(gram):
        raise NotFiniteType(f"weight-space form of {cartan.name} is not positive definite")
    form = tuple(tuple(_to_fraction(gram[i, j]) for j in range(rank)) for i in range(rank))

    rs = RootSystem(cartan=cartan, roots=tuple(roots), positives=positives, rho=rho, form=form)
    logger.info(f"Built root system {cartan.name}: |Φ| = {len(roots)}, |Φ+| = {len(positives)}")
    return rs


def _check_weight(rs: RootSystem, weight: Weight) -> None:
    if weight.rank != rs.rank:
        raise DimensionMismatch(f"weight {weight} has {weight.rank} coordinates, rank is {rs.rank}")


def inner_product(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """The invariant form (λ, μ), normalized so short roots have squared length 2."""
    _check_weight(rs, lam)
    _check_weight(rs, mu)
    n = rs.rank
    return sum(
        (lam.coords[i] * rs.form[i][j] * mu.coords[j] for i in range(n) for j in range(n)),
        Fraction(0),
    )


def pairing(rs: RootSystem, lam: Weight, alpha: Root) -> Fraction:
    """The coroot pairing 2(λ, α)/(α, α)."""
    _check_weight(rs, lam)
    return sum((c * h for c, h in zip(lam.coords, alpha.coroot_coords)), Fraction(0))


def positive_pairings(rs: RootSystem, lam: Weight) -> Iterable[Fraction]:
    """Pairings of λ with every positive root, in ``rs.positives`` order."""
    return (pairing(rs, lam, rs.roots[i]) for i in rs.positives)


def classify_sum(rs: RootSystem, alpha: Root, beta: Root) -> RootSum:
    """Decide whether α + β is a root, zero, or neither."""
    total = tuple(a + b for a, b in zip(alpha.simple_coords, beta.simple_coords))
    if not any(total):
        return RootSum(SumKind.ZERO)
    index = rs.root_index(total)
    if index is None:
        return RootSum(SumKind.NOT_A_ROOT)
    return RootSum(SumKind.ROOT, rs.roots[index])


def simple_root_coords(rs: RootSystem, lam: Weight) -> Tuple[Fraction, ...]:
    """Coordinates of λ over the simple roots (integers exactly on the root lattice)."""
    _check_weight(rs, lam)
    inverse = rs.cartan_inverse
    n = rs.rank
    return tuple(
        sum((lam.coords[j] * inverse[j][k] for j in range(n)), Fraction(0))
        for k in range(n)
    )
