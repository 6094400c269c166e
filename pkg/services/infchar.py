"""
Infinitesimal characters: χ_λ equality via W-conjugacy and integral dominance.

Arguments are taken literally; callers that want χ_{λ+ρ} shift first.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from services.cartan import RootSystem, Weight, positive_pairings
from services.weyl import WeylElement, make_dominant, orbit_elements

logger = logging.getLogger("flagrep.infchar")


@dataclass(frozen=True)
class InfinitesimalCharacter:
    """χ_λ, identified by the dominant point of the W-orbit of λ."""

    representative: Weight
    canonical: Weight

    def __eq__(self, other: object) -> bool:
        return isinstance(other, InfinitesimalCharacter) and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)


def infinitesimal_character(rs: RootSystem, lam: Weight) -> InfinitesimalCharacter:
    canonical, _ = make_dominant(rs, lam)
    return InfinitesimalCharacter(representative=lam, canonical=canonical)


def bwb_infinitesimal_character(rs: RootSystem, lam: Weight) -> InfinitesimalCharacter:
    """χ_{λ+ρ}, the character attached to the cohomology of L_λ."""
    return infinitesimal_character(rs, lam + rs.rho)


def chi_equal(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    """χ_λ = χ_μ exactly when λ and μ are W-conjugate."""
    return make_dominant(rs, lam)[0] == make_dominant(rs, mu)[0]


def integrally_dominant(rs: RootSystem, lam: Weight) -> bool:
    """No coroot pairing of λ with a positive root is a negative integer."""
    return not any(p < 0 and p.denominator == 1 for p in positive_pairings(rs, lam))


def integrally_dominant_conjugate(rs: RootSystem, lam: Weight) -> Tuple[Weight, WeylElement]:
    """
    Pick w(λ) integrally dominant: among qualifying orbit points, the one reached
    by the shortest w, ties broken lexicographically on coordinates.
    """
    candidates = [
        (element.length, point.coords, point, element)
        for point, element in orbit_elements(rs, lam).items()
        if integrally_dominant(rs, point)
    ]
    _, _, point, element = min(candidates, key=lambda c: (c[0], c[1]))
    logger.debug(f"integrally dominant conjugate of {lam}: {point} via {element}")
    return point, element
