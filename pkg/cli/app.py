"""
CLI application: argument parsing and command dispatch.
"""
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from cli.group import CommandGroup
from commands.cohomology import create_cohomology_commands
from commands.infchar import create_infchar_commands
from commands.matsuki import create_matsuki_commands
from commands.reps import create_rep_commands
from commands.roots import create_roots_commands
from services.bwb import uniform_box
from services.cartan import CartanMatrix, Weight, cartan_from_source
from services.errors import FlagrepError, InvalidCartanMatrix
from utils.parsing import UsageError, parse_coords, parse_range

logger = logging.getLogger("flagrep.cli")


@dataclass
class Command:
    """A validated invocation, ready to run."""

    verb: str
    cartan: Optional[CartanMatrix] = None
    weights: Dict[str, Weight] = field(default_factory=dict)
    format: str = "pretty"
    box: Optional[List[Tuple[int, int]]] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    handler: Optional[Callable] = field(default=None, repr=False, compare=False)


class FlagrepCLI:
    """Main CLI class that wires the verb families onto one command group."""

    def __init__(self):
        self.group = CommandGroup(
            name="flagrep",
            description="Root systems, Weyl groups, highest weights and Borel-Weil-Bott",
        )
        self._register_commands()
        self.parser = self.group.build_parser()

    def _register_commands(self) -> None:
        """Register all command families."""
        # roots, weyl-order, orbit
        create_roots_commands(self.group)

        # dim, weights
        create_rep_commands(self.group)

        # bwb, bwb-table
        create_cohomology_commands(self.group)

        # chi-equal, int-dom
        create_infchar_commands(self.group)

        # matsuki-sl2
        create_matsuki_commands(self.group)

    def parse(self, argv: Sequence[str]) -> Command:
        """
        Turn argv into a validated Command.

        Raises:
            UsageError: Bad verb, bad options, unknown type label, malformed
                or wrongly sized coordinate lists, malformed ranges.
            FlagrepError: If a Cartan matrix file parses but is not of finite type.
        """
        args = list(argv)
        if not args:
            raise UsageError("no command given")
        ns = self.parser.parse_args(args)
        registered = self.group.get(ns.verb)

        cmd = Command(verb=ns.verb, format=ns.format, handler=registered.handler)

        if registered.needs_type:
            try:
                cmd.cartan = cartan_from_source(ns.type)
            except InvalidCartanMatrix as e:
                raise UsageError(str(e)) from e

        for dest, kind in registered.coordinate_arguments().items():
            raw = getattr(ns, dest, None)
            if raw is None:
                continue
            lam = parse_coords(raw, integer=(kind == "integer"))
            if cmd.cartan is not None and lam.rank != cmd.cartan.rank:
                raise UsageError(
                    f"{dest} has {lam.rank} coordinates, {cmd.cartan.name} has rank {cmd.cartan.rank}"
                )
            cmd.weights[dest] = lam

        if getattr(ns, "range", None) is not None:
            lo, hi = parse_range(ns.range)
            cmd.box = uniform_box(cmd.cartan.rank, lo, hi)

        if getattr(ns, "samples", None) is not None:
            if ns.samples < 1:
                raise UsageError("--samples must be >= 1")
            cmd.samples = ns.samples
        cmd.seed = getattr(ns, "seed", None)

        logger.debug(f"Parsed {cmd}")
        return cmd

    def run(self, cmd: Command, out: TextIO, err: TextIO) -> int:
        """
        Execute a parsed command.

        Returns:
            int: 0 on success, 1 on a domain error (diagnostic written to ``err``).
        """
        try:
            cmd.handler(cmd, out)
        except FlagrepError as e:
            logger.debug(f"{cmd.verb} failed with {e.code}")
            err.write(e.diagnostic() + "\n")
            return 1
        return 0

    def main(self, argv: Sequence[str], out: TextIO = None, err: TextIO = None) -> int:
        """Parse and run, mapping usage errors to exit code 2."""
        out = out or sys.stdout
        err = err or sys.stderr
        try:
            cmd = self.parse(argv)
        except UsageError as e:
            err.write(f"usage error: {e}\n")
            return 2
        except FlagrepError as e:
            err.write(e.diagnostic() + "\n")
            return 1
        return self.run(cmd, out, err)
