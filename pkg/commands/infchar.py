"""
Infinitesimal character commands (chi-equal, int-dom).
"""
import logging
from typing import TextIO

from cli.group import CommandGroup, argument
from services.cartan import build_root_system
from services.infchar import chi_equal, infinitesimal_character, integrally_dominant_conjugate
from utils.formatting import emit_json, emit_lines, weight_to_json

logger = logging.getLogger("flagrep.commands.infchar")


def create_infchar_commands(group: CommandGroup) -> None:
    """
    Register infinitesimal character commands.

    Args:
        group: Command group to add commands to.
    """

    @group.command(name="chi-equal", description="Whether two weights have the same infinitesimal character")
    @argument("--a", required=True, coords="rational", help="first weight, rationals as p/q")
    @argument("--b", required=True, coords="rational", help="second weight, rationals as p/q")
    def flagrep_chi_equal(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        a, b = cmd.weights["a"], cmd.weights["b"]
        equal = chi_equal(rs, a, b)
        logger.debug(f"chi {a} vs {b} in {rs.cartan.name}: {equal}")
        if cmd.format == "json":
            emit_json(out, {
                "equal": equal,
                "a_dominant": weight_to_json(infinitesimal_character(rs, a).canonical),
                "b_dominant": weight_to_json(infinitesimal_character(rs, b).canonical),
            })
        else:
            emit_lines(out, ["true" if equal else "false"])

    @group.command(name="int-dom", description="An integrally dominant W-conjugate of a weight")
    @argument("--weight", required=True, coords="rational", help="weight, rationals as p/q")
    def flagrep_int_dom(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        lam = cmd.weights["weight"]
        point, element = integrally_dominant_conjugate(rs, lam)
        logger.debug(f"int-dom {lam} -> {point} in {rs.cartan.name}")
        if cmd.format == "json":
            emit_json(out, {
                "weight": weight_to_json(lam),
                "conjugate": weight_to_json(point),
                "word": [i + 1 for i in element.word],
                "length": element.length,
            })
        else:
            emit_lines(out, [f"{point} = {element}{lam}"])
