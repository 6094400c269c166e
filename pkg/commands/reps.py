"""
Irreducible representation commands (dim, weights).
"""
import logging
from typing import TextIO

from cli.group import CommandGroup, argument
from services.cartan import build_root_system
from services.highrep import weight_system, weyl_dimension
from utils.formatting import (
    coordinate_header,
    emit_csv,
    emit_json,
    emit_lines,
    weight_to_cells,
    weight_to_json,
)

logger = logging.getLogger("flagrep.commands.reps")


def create_rep_commands(group: CommandGroup) -> None:
    """
    Register highest weight commands.

    Args:
        group: Command group to add commands to.
    """

    @group.command(name="dim", description="Weyl dimension of the irreducible with a given highest weight")
    @argument("weight", coords="integer", help="dominant integral highest weight, e.g. 1,1")
    def flagrep_dim(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        lam = cmd.weights["weight"]
        dimension = weyl_dimension(rs, lam)
        logger.debug(f"dim V{lam} in {rs.cartan.name} = {dimension}")
        if cmd.format == "json":
            emit_json(out, {"highest_weight": weight_to_json(lam), "dimension": dimension})
        else:
            emit_lines(out, [str(dimension)])

    @group.command(name="weights", description="Weights and multiplicities of an irreducible",
                   formats=("pretty", "json", "csv"))
    @argument("weight", coords="integer", help="dominant integral highest weight, e.g. 1,1")
    def flagrep_weights(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        descriptor = weight_system(rs, cmd.weights["weight"])
        logger.debug(f"{len(descriptor.weights)} distinct weights for V{descriptor.highest_weight}")

        if cmd.format == "json":
            emit_json(out, {
                "highest_weight": weight_to_json(descriptor.highest_weight),
                "dimension": descriptor.dimension,
                "weights": [
                    {"weight": weight_to_json(mu), "multiplicity": m}
                    for mu, m in descriptor.weights.items()
                ],
            })
        elif cmd.format == "csv":
            emit_csv(
                out,
                coordinate_header("w", rs.rank) + ["multiplicity"],
                (weight_to_cells(mu) + [m] for mu, m in descriptor.weights.items()),
            )
        else:
            lines = [f"V{descriptor.highest_weight}: dimension {descriptor.dimension}"]
            lines += [f"  {mu} x{m}" for mu, m in descriptor.weights.items()]
            emit_lines(out, lines)
