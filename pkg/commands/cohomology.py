"""
Borel-Weil-Bott commands (bwb, bwb-table).
"""
import logging
from typing import List, TextIO

from cli.group import CommandGroup, argument
from services.bwb import CohomologyResult, bwb, bwb_table
from services.cartan import build_root_system
from utils.formatting import (
    cohomology_to_dict,
    coordinate_header,
    describe_cohomology,
    emit_csv,
    emit_json,
    emit_lines,
    weight_to_cells,
    weight_to_json,
)

logger = logging.getLogger("flagrep.commands.cohomology")


def _csv_row(lam, result: CohomologyResult, rank: int) -> List[object]:
    if result.vanishes_identically:
        return weight_to_cells(lam) + ["true", ""] + [""] * rank + [""]
    return (weight_to_cells(lam) + ["false", result.degree]
            + weight_to_cells(result.highest_weight) + [result.dimension])


def create_cohomology_commands(group: CommandGroup) -> None:
    """
    Register line bundle cohomology commands.

    Args:
        group: Command group to add commands to.
    """

    @group.command(name="bwb", description="Cohomology of the line bundle L_λ on the flag variety")
    @argument("--weight", required=True, coords="integer", help="integral weight, e.g. -3 or 1,-2")
    def flagrep_bwb(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        lam = cmd.weights["weight"]
        result = bwb(rs, lam)
        logger.debug(f"bwb {rs.cartan.name} {lam}: vanishes={result.vanishes_identically}")
        if cmd.format == "json":
            emit_json(out, cohomology_to_dict(result))
        else:
            emit_lines(out, [describe_cohomology(lam, result)])

    @group.command(name="bwb-table", description="Sweep bwb over a box of integral weights",
                   formats=("pretty", "json", "csv"))
    @argument("--range", required=True, help="inclusive coordinate range lo..hi, e.g. -4..4")
    def flagrep_bwb_table(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        rows = bwb_table(rs, cmd.box)
        logger.debug(f"bwb-table {rs.cartan.name} over {cmd.box}: {len(rows)} rows")

        if cmd.format == "json":
            emit_json(out, [
                dict(weight=weight_to_json(lam), **cohomology_to_dict(result))
                for lam, result in rows
            ])
        elif cmd.format == "csv":
            header = (coordinate_header("l", rs.rank) + ["vanishes", "degree"]
                      + coordinate_header("hw", rs.rank) + ["dimension"])
            emit_csv(out, header, (_csv_row(lam, result, rs.rank) for lam, result in rows))
        else:
            emit_lines(out, [describe_cohomology(lam, result) for lam, result in rows])
