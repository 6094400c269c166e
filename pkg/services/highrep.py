"""
Highest weight theory: dominance predicates, Weyl dimensions and weight
multiplicities of irreducible representations.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from config import Config
from services.cartan import (
    RootSystem,
    Weight,
    inner_product,
    pairing,
    positive_pairings,
    simple_root_coords,
)
from services.errors import (
    InconsistentResult,
    NonIntegerResult,
    NonIntegerWeight,
    NotDominant,
    ResourceLimit,
)
from services.weyl import make_dominant, orbit

logger = logging.getLogger("flagrep.highrep")


@dataclass(frozen=True)
class IrrepDescriptor:
    """An irreducible representation, with its weights when they have been computed."""

    highest_weight: Weight
    dimension: int
    weights: Optional[Dict[Weight, int]] = field(default=None, compare=False)

    def multiplicity(self, mu: Weight) -> int:
        if self.weights is None:
            raise ValueError("weights were not computed for this descriptor")
        return self.weights.get(mu, 0)

    def check(self) -> None:
        """
        Verify the descriptor invariants.

        Raises:
            InconsistentResult: If multiplicities and dimension disagree.
        """
        if self.weights is None:
            return
        total = sum(self.weights.values())
        if total != self.dimension:
            raise InconsistentResult(
                f"multiplicities of {self.highest_weight} sum to {total}, dimension is {self.dimension}"
            )
        if self.weights.get(self.highest_weight) != 1:
            raise InconsistentResult(f"highest weight {self.highest_weight} does not have multiplicity one")


def is_dominant(rs: RootSystem, lam: Weight) -> bool:
    """(λ, α) >= 0 for every positive root α."""
    return all(p >= 0 for p in positive_pairings(rs, lam))


def is_regular(rs: RootSystem, lam: Weight) -> bool:
    """(λ, α) != 0 for every root α."""
    return all(pairing(rs, lam, root) != 0 for root in rs.roots)


def _require_dominant_integral(rs: RootSystem, lam: Weight) -> None:
    if not lam.is_integral():
        raise NonIntegerWeight(f"{lam} is not an integral weight")
    if not is_dominant(rs, lam):
        raise NotDominant(f"{lam} is not dominant")


def weyl_product(rs: RootSystem, lam: Weight) -> Fraction:
    """The exact product of (λ+ρ, α)/(ρ, α) over the positive roots."""
    shifted = lam + rs.rho
    product = Fraction(1)
    for root in rs.positive_roots():
        product *= pairing(rs, shifted, root) / pairing(rs, rs.rho, root)
    return product


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """
    Dimension of the irreducible representation of highest weight λ.

    Raises:
        NonIntegerWeight: If λ is not integral.
        NotDominant: If λ is not dominant.
        NonIntegerResult: If the product is not a positive integer.
    """
    _require_dominant_integral(rs, lam)
    product = weyl_product(rs, lam)
    if product.denominator != 1 or product <= 0:
        raise NonIntegerResult(f"Weyl dimension of {lam} evaluated to {product}")
    return int(product)


def _level(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    return int(sum(simple_root_coords(rs, lam - mu)))


def dominant_weights(rs: RootSystem, lam: Weight) -> Dict[Weight, int]:
    """
    Dominant weights of the irreducible of highest weight λ with their
    multiplicities, by Freudenthal's recursion; ordered by depth below λ.

    Raises:
        NonIntegerWeight: If λ is not integral.
        NotDominant: If λ is not dominant.
        NonIntegerResult: If a multiplicity comes out non-integral.
    """
    _require_dominant_integral(rs, lam)
    positives = rs.positive_roots()

    # saturated set: descend by positive roots, staying dominant
    found = {lam}
    frontier = [lam]
    while frontier:
        next_frontier = []
        for mu in frontier:
            for root in positives:
                nu = mu - root.weight_coords
                if nu not in found and all(c >= 0 for c in nu.coords):
                    found.add(nu)
                    next_frontier.append(nu)
        frontier = next_frontier
    ordered = sorted(found, key=lambda mu: (_level(rs, lam, mu), tuple(-c for c in mu.coords)))

    lam_rho = lam + rs.rho
    top = inner_product(rs, lam_rho, lam_rho)
    dominant_of: Dict[Weight, Weight] = {}

    def conjugate(nu: Weight) -> Weight:
        if nu not in dominant_of:
            dominant_of[nu] = make_dominant(rs, nu)[0]
        return dominant_of[nu]

    multiplicities: Dict[Weight, int] = {lam: 1}
    for mu in ordered[1:]:
        total = Fraction(0)
        for root in positives:
            k = 1
            while True:
                nu = mu + root.weight_coords.scaled(k)
                m = multiplicities.get(conjugate(nu), 0)
                if m == 0:
                    break
                total += m * inner_product(rs, nu, root.weight_coords)
                k += 1
        mu_rho = mu + rs.rho
        value = 2 * total / (top - inner_product(rs, mu_rho, mu_rho))
        if value.denominator != 1 or value <= 0:
            raise NonIntegerResult(f"Freudenthal multiplicity of {mu} in V({lam}) evaluated to {value}")
        multiplicities[mu] = int(value)
    return multiplicities


def weight_system(rs: RootSystem, lam: Weight) -> IrrepDescriptor:
    """
    All weights of the irreducible of highest weight λ with multiplicities.

    Raises:
        NonIntegerWeight: If λ is not integral.
        NotDominant: If λ is not dominant.
        ResourceLimit: If the number of weights exceeds ``Config.MAX_WEIGHTS``.
    """
    dominant = dominant_weights(rs, lam)
    weights: Dict[Weight, int] = {}
    for mu, m in dominant.items():
        for nu in orbit(rs, mu):
            weights[nu] = m
        if len(weights) > Config.MAX_WEIGHTS:
            raise ResourceLimit(f"weight system of {lam} exceeds {Config.MAX_WEIGHTS} weights")

    ordered: List[Weight] = sorted(weights, key=lambda mu: tuple(-c for c in mu.coords))
    descriptor = IrrepDescriptor(
        highest_weight=lam,
        dimension=weyl_dimension(rs, lam),
        weights={mu: weights[mu] for mu in ordered},
    )
    descriptor.check()
    logger.info(
        f"Weight system of {lam} in {rs.cartan.name}: {len(weights)} weights, dimension {descriptor.dimension}"
    )
    return descriptor
