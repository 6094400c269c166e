"""
Matsuki correspondence for SU(1,1) acting on CP^1.

K = C* acts on [z : w] by a ↦ [a²z : w]; SU(1,1) acts by linear fractional
transformations; K_R = K ∩ SU(1,1) = U(1) acts by rotations x ↦ e^{2iθ}x.
This is the rank-one worked example only.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from services.errors import InvalidPoint, SampleFailure

logger = logging.getLogger("flagrep.matsuki")

SU11 = Tuple[Tuple[complex, complex], Tuple[complex, complex]]


class Side(Enum):
    K = "K"
    GR = "GR"


class OrbitName(Enum):
    ZERO = "Zero"
    INFINITY = "Infinity"
    CSTAR = "CStar"
    DISC = "Disc"
    CIRCLE = "Circle"
    EXTERIOR = "Exterior"


_SIDE_OF = {
    OrbitName.ZERO: Side.K,
    OrbitName.INFINITY: Side.K,
    OrbitName.CSTAR: Side.K,
    OrbitName.DISC: Side.GR,
    OrbitName.CIRCLE: Side.GR,
    OrbitName.EXTERIOR: Side.GR,
}


@dataclass(frozen=True)
class OrbitLabel:
    side: Side
    name: OrbitName

    def __post_init__(self):
        if _SIDE_OF[self.name] is not self.side:
            raise ValueError(f"{self.name.value} is not a {self.side.value}-orbit")

    @classmethod
    def of(cls, name: OrbitName) -> "OrbitLabel":
        return cls(_SIDE_OF[name], name)

    def __str__(self) -> str:
        return self.name.value


ZERO = OrbitLabel.of(OrbitName.ZERO)
INFINITY = OrbitLabel.of(OrbitName.INFINITY)
CSTAR = OrbitLabel.of(OrbitName.CSTAR)
DISC = OrbitLabel.of(OrbitName.DISC)
CIRCLE = OrbitLabel.of(OrbitName.CIRCLE)
EXTERIOR = OrbitLabel.of(OrbitName.EXTERIOR)

K_ORBITS: Tuple[OrbitLabel, ...] = (ZERO, INFINITY, CSTAR)
GR_ORBITS: Tuple[OrbitLabel, ...] = (DISC, CIRCLE, EXTERIOR)

_DUAL: Dict[OrbitLabel, OrbitLabel] = {ZERO: DISC, INFINITY: EXTERIOR, CSTAR: CIRCLE}
_DUAL.update({v: k for k, v in list(_DUAL.items())})


@dataclass(frozen=True)
class ProjPoint:
    """A point [z : w] of CP^1, normalized so max(|z|, |w|) = 1."""

    z: complex
    w: complex

    @classmethod
    def of(cls, z: complex, w: complex) -> "ProjPoint":
        scale = max(abs(z), abs(w))
        if scale == 0:
            raise InvalidPoint("[0 : 0] is not a point of CP^1")
        return cls(complex(z) / scale, complex(w) / scale)

    @classmethod
    def affine(cls, x: complex) -> "ProjPoint":
        return cls.of(x, 1)

    def to_list(self) -> List[float]:
        return [self.z.real, self.z.imag, self.w.real, self.w.imag]


def chordal_distance(p: ProjPoint, q: ProjPoint) -> float:
    norm = math.hypot(abs(p.z), abs(p.w)) * math.hypot(abs(q.z), abs(q.w))
    return abs(p.z * q.w - q.z * p.w) / norm


def classify(p: ProjPoint, side: Side, epsilon: Optional[float] = None) -> OrbitLabel:
    """
    Orbit of a point under K (exact zero tests) or SU(1,1) (|log|z/w|| < ε is the circle).
    """
    if side is Side.K:
        if p.z == 0:
            return ZERO
        if p.w == 0:
            return INFINITY
        return CSTAR

    eps = Config.MATSUKI_EPSILON if epsilon is None else epsilon
    if p.z == 0:
        return DISC
    if p.w == 0:
        return EXTERIOR
    t = math.log(abs(p.z) / abs(p.w))
    if abs(t) < eps:
        return CIRCLE
    return DISC if t < 0 else EXTERIOR


def matsuki_dual(q: OrbitLabel) -> OrbitLabel:
    """Zero ↔ Disc, Infinity ↔ Exterior, CStar ↔ Circle."""
    return _DUAL[q]


def act_k(a: complex, p: ProjPoint) -> ProjPoint:
    """a ∈ C* acting as multiplication by a²."""
    return ProjPoint.of(a * a * p.z, p.w)


def act_su11(g: SU11, p: ProjPoint) -> ProjPoint:
    """g = [[α, β], [β̄, ᾱ]] with |α|² - |β|² = 1, acting by linear fractional transformation."""
    (a, b), (c, d) = g
    return ProjPoint.of(a * p.z + b * p.w, c * p.z + d * p.w)


def random_su11(rng: np.random.Generator) -> SU11:
    t = rng.uniform(0.0, 2.0)
    phi, psi = rng.uniform(0.0, 2 * math.pi, size=2)
    alpha = math.cosh(t) * cmath.exp(1j * phi)
    beta = math.sinh(t) * cmath.exp(1j * psi)
    return (alpha, beta), (beta.conjugate(), alpha.conjugate())


def same_kr_orbit(p: ProjPoint, q: ProjPoint, tolerance: float = 1e-9) -> bool:
    """True when q = k_θ · p for some rotation k_θ ∈ K_R."""
    if p.z == 0 or q.z == 0:
        return p.z == 0 and q.z == 0
    if p.w == 0 or q.w == 0:
        return p.w == 0 and q.w == 0
    xp, xq = p.z / p.w, q.z / q.w
    theta = (cmath.phase(xq) - cmath.phase(xp)) / 2
    return chordal_distance(act_k(cmath.exp(1j * theta), p), q) < tolerance


def sample_orbit(q: OrbitLabel, rng: np.random.Generator, count: int) -> List[ProjPoint]:
    """Pseudorandom points of an orbit."""
    angles = rng.uniform(0.0, 2 * math.pi, size=count)
    if q == ZERO:
        return [ProjPoint.of(0, 1)] * count
    if q == INFINITY:
        return [ProjPoint.of(1, 0)] * count
    if q == CSTAR:
        radii = np.exp(rng.uniform(-6.0, 6.0, size=count))
        return [ProjPoint.affine(r * cmath.exp(1j * a)) for r, a in zip(radii, angles)]
    if q == CIRCLE:
        return [ProjPoint.of(cmath.exp(1j * a), 1) for a in angles]
    radii = rng.uniform(0.0, 0.999, size=count)
    if q == DISC:
        return [ProjPoint.of(r * cmath.exp(1j * a), 1) for r, a in zip(radii, angles)]
    return [ProjPoint.of(1, r * cmath.exp(-1j * a)) for r, a in zip(radii, angles)]


def _sample_intersection(q: OrbitLabel, s: OrbitLabel, rng: np.random.Generator, count: int) -> List[ProjPoint]:
    # points of the K-orbit q, aimed at the SU(1,1)-orbit s
    if q != CSTAR:
        return sample_orbit(q, rng, count)
    angles = rng.uniform(0.0, 2 * math.pi, size=count)
    offsets = rng.uniform(1e-3, 6.0, size=count)
    if s == CIRCLE:
        # exactly |z| = |w|
        return [ProjPoint.of(cmath.exp(1j * a), 1) for a in angles]
    sign = -1.0 if s == DISC else 1.0
    return [ProjPoint.affine(math.exp(sign * o) * cmath.exp(1j * a)) for o, a in zip(offsets, angles)]


@dataclass
class DualityReport:
    samples: int
    seed: Optional[int]
    duality_pairs: List[Tuple[str, str]]
    intersections: List[Dict[str, object]] = field(default_factory=list)
    containments: List[Tuple[str, str]] = field(default_factory=list)
    sample_failures: List[Dict[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.sample_failures


def _fail(report: DualityReport, strict: bool, q: OrbitLabel, s: OrbitLabel, reason: str,
          point: Optional[ProjPoint]) -> None:
    failure = {"K": str(q), "GR": str(s), "reason": reason,
               "point": point.to_list() if point is not None else None}
    report.sample_failures.append(failure)
    logger.warning(f"Matsuki sample failure on {q} ∩ {s}: {reason}")
    if strict:
        raise SampleFailure(f"{q} ∩ {s}: {reason}", point)


def verify_duality(
    samples: int,
    seed: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    epsilon: Optional[float] = None,
    strict: bool = True,
) -> DualityReport:
    """
    Sample every intersection Q ∩ S of a K-orbit with an SU(1,1)-orbit.

    Dual pairs must meet in exactly one K_R-orbit; other pairs must not
    (they are either empty or split into several K_R-orbits).

    Args:
        samples: Points drawn per intersection.
        seed: Seed for a fresh generator when ``rng`` is not given.
        rng: Caller-owned numpy generator.
        epsilon: Circle tolerance, defaults to ``Config.MATSUKI_EPSILON``.
        strict: Raise on the first failure instead of collecting it.

    Raises:
        SampleFailure: In strict mode, with the offending point.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if rng is None:
        rng = np.random.default_rng(seed)
    eps = Config.MATSUKI_EPSILON if epsilon is None else epsilon

    report = DualityReport(
        samples=samples,
        seed=seed,
        duality_pairs=[(str(q), str(matsuki_dual(q))) for q in K_ORBITS],
    )

    for q in K_ORBITS:
        for s in GR_ORBITS:
            dual = matsuki_dual(q) == s
            # two points at least, so a second K_R-orbit can show up
            points = _sample_intersection(q, s, rng, max(samples, 2))
            members = []
            for p in points:
                if classify(p, Side.K) != q:
                    _fail(report, strict, q, s, "sampled point left its K-orbit", p)
                elif classify(p, Side.GR, eps) == s:
                    members.append(p)
            report.intersections.append({"K": str(q), "GR": str(s), "dual": dual, "members": len(members)})

            if dual:
                if len(members) != len(points):
                    _fail(report, strict, q, s, "dual intersection sample missed the SU(1,1)-orbit",
                          next(p for p in points if p not in members))
                for p in members[1:]:
                    if not same_kr_orbit(members[0], p):
                        _fail(report, strict, q, s, "dual intersection holds two K_R-orbits", p)
                        break
            elif members and all(same_kr_orbit(members[0], p) for p in members[1:]):
                _fail(report, strict, q, s, "non-dual intersection looks like a single K_R-orbit", members[0])

    for q in K_ORBITS:
        s = matsuki_dual(q)
        if all(classify(p, Side.GR, eps) == s for p in sample_orbit(q, rng, samples)):
            report.containments.append((str(q), str(s)))
        elif all(classify(p, Side.K) == q for p in sample_orbit(s, rng, samples)):
            report.containments.append((str(s), str(q)))
        else:
            _fail(report, strict, q, s, "neither dual orbit contains the other", None)

    logger.info(f"Matsuki duality check: {samples} samples per pair, {len(report.sample_failures)} failures")
    return report


@dataclass(frozen=True)
class OrbitPoset:
    """Closure order: (a, b) ∈ relation means a ⊆ closure(b)."""

    side: Side
    elements: Tuple[OrbitLabel, ...]
    relation: FrozenSet[Tuple[OrbitLabel, OrbitLabel]]

    def leq(self, a: OrbitLabel, b: OrbitLabel) -> bool:
        return (a, b) in self.relation

    def is_partial_order(self) -> bool:
        elems = self.elements
        reflexive = all(self.leq(a, a) for a in elems)
        antisymmetric = all(
            a == b or not (self.leq(a, b) and self.leq(b, a)) for a in elems for b in elems
        )
        transitive = all(
            self.leq(a, c)
            for a in elems for b in elems for c in elems
            if self.leq(a, b) and self.leq(b, c)
        )
        return reflexive and antisymmetric and transitive

    def pairs(self) -> List[Tuple[str, str]]:
        """Strict relations, in element order."""
        return [
            (str(a), str(b)) for a in self.elements for b in self.elements
            if a != b and self.leq(a, b)
        ]


@dataclass(frozen=True)
class ClosureReport:
    k_poset: OrbitPoset
    gr_poset: OrbitPoset
    reversal: bool


_ANGLES = [2 * math.pi * k / 16 for k in range(16)]
_STEPS = range(1, 9)


def _limit_sequences() -> List[Tuple[List[ProjPoint], ProjPoint]]:
    sequences = []
    for phi in _ANGLES:
        u = cmath.exp(1j * phi)
        sequences.append(([ProjPoint.affine(10.0 ** -k * u) for k in _STEPS], ProjPoint.of(0, 1)))
        sequences.append(([ProjPoint.affine((1 - 10.0 ** -k) * u) for k in _STEPS], ProjPoint.affine(u)))
        sequences.append(([ProjPoint.affine((1 + 10.0 ** -k) * u) for k in _STEPS], ProjPoint.affine(u)))
        sequences.append(([ProjPoint.of(1, 10.0 ** -k / u) for k in _STEPS], ProjPoint.of(1, 0)))
        sequences.append(([ProjPoint.affine(cmath.exp(1j * (phi + 10.0 ** -k))) for k in _STEPS],
                          ProjPoint.affine(u)))
    return sequences


def _closure_poset(side: Side, elements: Sequence[OrbitLabel]) -> OrbitPoset:
    relation = {(a, a) for a in elements}
    for terms, limit in _limit_sequences():
        labels = {classify(p, side) for p in terms}
        if len(labels) != 1 or chordal_distance(terms[-1], limit) > 1e-6:
            continue
        (upper,) = labels
        relation.add((classify(limit, side), upper))
    return OrbitPoset(side, tuple(elements), frozenset(relation))


def closure_posets() -> ClosureReport:
    """
    Closure orders on both sides, found by limit sampling, and the check that
    duality reverses them.
    """
    k_poset = _closure_poset(Side.K, K_ORBITS)
    gr_poset = _closure_poset(Side.GR, GR_ORBITS)
    reversal = all(
        k_poset.leq(a, b) == gr_poset.leq(matsuki_dual(b), matsuki_dual(a))
        for a in K_ORBITS for b in K_ORBITS
    )
    logger.info(f"Closure posets: K {k_poset.pairs()}, GR {gr_poset.pairs()}, reversal={reversal}")
    return ClosureReport(k_poset, gr_poset, reversal)
