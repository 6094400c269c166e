"""
Borel-Weil-Bott calculator for line bundles on the flag variety.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from config import Config
from services.cartan import CartanMatrix, RootSystem, Weight, build_root_system
from services.errors import (
    NonIntegerResult,
    NonIntegerWeight,
    ResourceLimit,
    SerreDualityViolation,
)
from services.highrep import is_regular, weyl_dimension, weyl_product
from services.weyl import WeylElement, inversion_count, make_dominant

logger = logging.getLogger("flagrep.bwb")

Box = Sequence[Tuple[int, int]]


@dataclass(frozen=True)
class CohomologyResult:
    """
    Cohomology of L_λ: either identically zero, or a single degree carrying
    the irreducible of the given highest weight.
    """

    vanishes_identically: bool
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None
    dimension: Optional[int] = None
    w_used: Optional[WeylElement] = None

    @classmethod
    def vanishing(cls) -> "CohomologyResult":
        return cls(vanishes_identically=True)

    def signed_dimension(self) -> int:
        """(-1)^degree · dimension, or 0 when everything vanishes."""
        if self.vanishes_identically:
            return 0
        return (-1) ** self.degree * self.dimension


@dataclass(frozen=True)
class SerreDualReport:
    weight: Weight
    dual_weight: Weight
    result: CohomologyResult
    dual_result: CohomologyResult


def _require_integral(lam: Weight) -> None:
    if not lam.is_integral():
        raise NonIntegerWeight(f"{lam} is not in the weight lattice")


def canonical_weight(rs: RootSystem) -> Weight:
    """-2ρ, the weight of the canonical bundle of the flag variety."""
    return rs.rho.scaled(-2)


def flag_dimension(rs: RootSystem) -> int:
    """Complex dimension of the flag variety, |Φ+|."""
    return len(rs.positives)


def bwb(rs: RootSystem, lam: Weight) -> CohomologyResult:
    """
    Cohomology of the line bundle L_λ.

    Raises:
        NonIntegerWeight: If λ is not integral.
    """
    _require_integral(lam)
    shifted = lam + rs.rho
    if not is_regular(rs, shifted):
        logger.debug(f"{lam}: λ+ρ = {shifted} is singular, cohomology vanishes")
        return CohomologyResult.vanishing()

    degree = inversion_count(rs, shifted)
    dominant, w = make_dominant(rs, shifted)
    highest_weight = dominant - rs.rho
    result = CohomologyResult(
        vanishes_identically=False,
        degree=degree,
        highest_weight=highest_weight,
        dimension=weyl_dimension(rs, highest_weight),
        w_used=w,
    )
    logger.debug(f"{lam}: H^{degree} = V({highest_weight}), w = {w}")
    return result


def cohomology_vector(rs: RootSystem, lam: Weight) -> List[int]:
    """dim H^p(X, L_λ) for p = 0..|Φ+|."""
    dims = [0] * (flag_dimension(rs) + 1)
    result = bwb(rs, lam)
    if not result.vanishes_identically:
        dims[result.degree] = result.dimension
    return dims


def euler_characteristic(rs: RootSystem, lam: Weight) -> int:
    """
    Σ_p (-1)^p dim H^p(X, L_λ), evaluated through the Weyl polynomial.

    Raises:
        NonIntegerWeight: If λ is not integral.
        NonIntegerResult: If the product is not an integer.
    """
    _require_integral(lam)
    value = weyl_product(rs, lam)
    if value.denominator != 1:
        raise NonIntegerResult(f"Euler characteristic of {lam} evaluated to {value}")
    return int(value)


def serre_dual_check(rs: RootSystem, lam: Weight) -> SerreDualReport:
    """
    Compare L_λ with its Serre dual L_{-λ-2ρ}.

    Raises:
        NonIntegerWeight: If λ is not integral.
        SerreDualityViolation: If the two results are not dual.
    """
    dual_weight = -lam + canonical_weight(rs)
    result = bwb(rs, lam)
    dual_result = bwb(rs, dual_weight)

    if result.vanishes_identically or dual_result.vanishes_identically:
        if result.vanishes_identically != dual_result.vanishes_identically:
            raise SerreDualityViolation(f"exactly one of {lam} and {dual_weight} has vanishing cohomology")
    elif (result.degree + dual_result.degree != flag_dimension(rs)
          or result.dimension != dual_result.dimension):
        raise SerreDualityViolation(
            f"{lam} (degree {result.degree}, dim {result.dimension}) and "
            f"{dual_weight} (degree {dual_result.degree}, dim {dual_result.dimension}) are not Serre dual"
        )
    return SerreDualReport(lam, dual_weight, result, dual_result)


def uniform_box(rank: int, lo: int, hi: int) -> List[Tuple[int, int]]:
    return [(lo, hi)] * rank


def _box_points(box: Box) -> List[Weight]:
    return [Weight(coords) for coords in itertools.product(*(range(lo, hi + 1) for lo, hi in box))]


def _evaluate_chunk(cartan: CartanMatrix, points: List[Weight]) -> List[CohomologyResult]:
    """
    Evaluate bwb over a chunk of points in a worker process.
    Kept at module level so the process pool can pickle it.
    """
    rs = build_root_system(cartan)
    return [bwb(rs, lam) for lam in points]


def bwb_table(rs: RootSystem, box: Box) -> List[Tuple[Weight, CohomologyResult]]:
    """
    Sweep bwb over every lattice point of a coordinate box, in lexicographic order.

    Args:
        rs: Root system.
        box: One inclusive (lo, hi) range per coordinate.

    Raises:
        ResourceLimit: If the box holds more than ``Config.MAX_TABLE`` points.
    """
    if len(box) != rs.rank:
        raise ValueError(f"box has {len(box)} ranges, rank is {rs.rank}")
    count = 1
    for lo, hi in box:
        if lo > hi:
            raise ValueError(f"empty range {lo}..{hi}")
        count *= hi - lo + 1
    if count > Config.MAX_TABLE:
        raise ResourceLimit(f"table of {count} points exceeds the cap of {Config.MAX_TABLE}")

    points = _box_points(box)
    workers = Config.TABLE_WORKERS
    if workers <= 1 or count < 2 * workers:
        results = [bwb(rs, lam) for lam in points]
    else:
        # Chunks keep lexicographic order; map() preserves it across workers
        size = -(-count // workers)
        chunks = [points[i:i + size] for i in range(0, count, size)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = [
                r for chunk in executor.map(_evaluate_chunk, [rs.cartan] * len(chunks), chunks)
                for r in chunk
            ]

    logger.info(f"Swept {count} points of {rs.cartan.name} with {workers} worker(s)")
    return list(zip(points, results))
