"""
Output helpers: deterministic JSON, CSV and plain-text emitters.
"""
import csv
import json
from fractions import Fraction
from typing import Iterable, List, Sequence, TextIO, Union

from services.bwb import CohomologyResult
from services.cartan import Weight

JsonNumber = Union[int, str]


def rational_to_json(value: Fraction) -> JsonNumber:
    """Integers stay integers; other rationals become "p/q" strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def weight_to_json(lam: Weight) -> List[JsonNumber]:
    return [rational_to_json(c) for c in lam.coords]


def weight_to_cells(lam: Weight) -> List[str]:
    return [str(c) for c in lam.coords]


def cohomology_to_dict(result: CohomologyResult) -> dict:
    if result.vanishes_identically:
        return {"vanishes": True}
    return {
        "vanishes": False,
        "degree": result.degree,
        "highest_weight": weight_to_json(result.highest_weight),
        "dimension": result.dimension,
    }


def describe_cohomology(lam: Weight, result: CohomologyResult) -> str:
    if result.vanishes_identically:
        return f"L{lam}: all cohomology vanishes"
    return f"L{lam}: H^{result.degree} = V{result.highest_weight}, dimension {result.dimension}"


def emit_json(out: TextIO, payload: object) -> None:
    out.write(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    out.write("\n")


def emit_csv(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def emit_lines(out: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        out.write(line)
        out.write("\n")


def coordinate_header(prefix: str, rank: int) -> List[str]:
    """Column names ``prefix1..prefixN``."""
    return [f"{prefix}{i + 1}" for i in range(rank)]
