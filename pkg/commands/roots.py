"""
Root system commands (roots, weyl-order, orbit).
"""
import logging
from typing import TextIO

from cli.group import CommandGroup, argument
from services.cartan import build_root_system
from services.weyl import orbit, weyl_order
from utils.formatting import emit_json, emit_lines, weight_to_json

logger = logging.getLogger("flagrep.commands.roots")


def create_roots_commands(group: CommandGroup) -> None:
    """
    Register root system and Weyl group commands.

    Args:
        group: Command group to add commands to.
    """

    @group.command(name="roots", description="List the roots of a root system in simple-root coordinates")
    def flagrep_roots(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        if cmd.format == "json":
            emit_json(out, rs.to_dict())
            return
        lines = [
            f"{rs.cartan.name}: {len(rs.roots)} roots, {len(rs.positives)} positive",
            f"rho = {rs.rho}",
            f"highest root = {rs.highest_root()}",
        ]
        lines += [f"  {root} height {root.height}" for root in rs.positive_roots()]
        emit_lines(out, lines)

    @group.command(name="weyl-order", description="Order of the Weyl group")
    def flagrep_weyl_order(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        order = weyl_order(rs)
        if cmd.format == "json":
            emit_json(out, {"label": rs.label, "order": order})
        else:
            emit_lines(out, [str(order)])

    @group.command(name="orbit", description="Weyl group orbit of a weight")
    @argument("--weight", required=True, coords="rational",
              help="weight coordinates, e.g. 1,0 or 1/2,-1")
    def flagrep_orbit(cmd, out: TextIO):
        rs = build_root_system(cmd.cartan)
        lam = cmd.weights["weight"]
        points = sorted(orbit(rs, lam), key=lambda mu: tuple(-c for c in mu.coords))
        logger.debug(f"orbit of {lam}: {len(points)} points")
        if cmd.format == "json":
            emit_json(out, [weight_to_json(mu) for mu in points])
        else:
            emit_lines(out, [str(mu) for mu in points])
