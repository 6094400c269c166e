"""
Matsuki correspondence command (matsuki-sl2).
"""
import logging
from typing import TextIO

from cli.group import CommandGroup, argument
from services.errors import SampleFailure
from services.matsuki_sl2 import closure_posets, verify_duality
from utils.formatting import emit_json, emit_lines

logger = logging.getLogger("flagrep.commands.matsuki")

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 42


def create_matsuki_commands(group: CommandGroup) -> None:
    """
    Register the SU(1,1) orbit duality check.

    Args:
        group: Command group to add commands to.
    """

    @group.command(name="matsuki-sl2", description="Check orbit duality for SU(1,1) on the projective line",
                   needs_type=False)
    @argument("--samples", type=int, default=DEFAULT_SAMPLES, help="points sampled per orbit intersection")
    @argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    def flagrep_matsuki(cmd, out: TextIO):
        report = verify_duality(cmd.samples, seed=cmd.seed, strict=False)
        closure = closure_posets()
        logger.debug(f"matsuki-sl2: {cmd.samples} samples, seed {cmd.seed}, passed={report.passed}")

        if cmd.format == "json":
            emit_json(out, {
                "samples": report.samples,
                "seed": report.seed,
                "duality_pairs": [list(pair) for pair in report.duality_pairs],
                "containments": [list(pair) for pair in report.containments],
                "intersections": report.intersections,
                "k_closure": [list(pair) for pair in closure.k_poset.pairs()],
                "gr_closure": [list(pair) for pair in closure.gr_poset.pairs()],
                "poset_reversal": closure.reversal,
                "sample_failures": report.sample_failures,
            })
        else:
            lines = [f"{k} <-> {gr}" for k, gr in report.duality_pairs]
            lines += [f"{small} ⊂ {big}" for small, big in report.containments]
            lines.append(f"closure order reversed: {'yes' if closure.reversal else 'no'}")
            lines.append(f"sample failures: {len(report.sample_failures)}")
            emit_lines(out, lines)

        if not report.passed or not closure.reversal:
            raise SampleFailure(
                f"{len(report.sample_failures)} sample failure(s), closure reversal {closure.reversal}"
            )
