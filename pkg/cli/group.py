"""
Command registry over argparse.

Verb modules register handlers with ``@group.command(name=..., description=...)``
and declare their options with ``@argument(...)``, the same way slash
commands are declared on an application command group.
"""
import argparse
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from utils.parsing import UsageError

# Coordinate lists ("-3,1", "-1/2,0") and ranges ("-4..4") are values, not flags
_VALUE_TOKEN_RE = re.compile(r"^-\d[\d,/.]*$")

FORMATS = ("pretty", "json", "csv")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad input."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # argparse's _parse_optional reads a token matching _negative_number_matcher
        # as a positional value while no registered option string itself matches it.
        # Private hook; test_cli pins it.
        self._negative_number_matcher = _VALUE_TOKEN_RE

    def error(self, message: str):
        raise UsageError(message)


@dataclass
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, object]
    coords: Optional[str] = None  # "integer" or "rational"

    @property
    def dest(self) -> str:
        if "dest" in self.options:
            return str(self.options["dest"])
        return self.flags[0].lstrip("-").replace("-", "_")


@dataclass
class RegisteredCommand:
    name: str
    description: str
    handler: Callable
    needs_type: bool = True
    formats: Tuple[str, ...] = ("pretty", "json")
    arguments: List[Argument] = field(default_factory=list)

    def coordinate_arguments(self) -> Dict[str, str]:
        """Destination name -> coordinate kind, for every coordinate argument."""
        return {a.dest: a.coords for a in self.arguments if a.coords}


def argument(*flags: str, coords: Optional[str] = None, **options):
    """
    Declare a command-line argument on a handler.

    Args:
        flags: argparse flags or positional name.
        coords: "integer" or "rational" to parse the value as a weight.
        options: Passed through to ``add_argument``.
    """
    def decorator(func):
        declared = getattr(func, "__flagrep_arguments__", [])
        # decorators apply bottom-up; keep source order
        func.__flagrep_arguments__ = [Argument(tuple(flags), options, coords)] + declared
        return func
    return decorator


class CommandGroup:
    """A named set of verbs sharing one argparse front end."""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self._commands: Dict[str, RegisteredCommand] = {}

    def command(
        self,
        name: str,
        description: str,
        needs_type: bool = True,
        formats: Tuple[str, ...] = ("pretty", "json"),
    ):
        """Register the decorated function as the handler of ``name``."""
        def decorator(func):
            if name in self._commands:
                raise ValueError(f"command {name!r} registered twice")
            self._commands[name] = RegisteredCommand(
                name=name,
                description=description,
                handler=func,
                needs_type=needs_type,
                formats=formats,
                arguments=list(getattr(func, "__flagrep_arguments__", [])),
            )
            return func
        return decorator

    @property
    def commands(self) -> Dict[str, RegisteredCommand]:
        return dict(self._commands)

    def get(self, name: str) -> RegisteredCommand:
        try:
            return self._commands[name]
        except KeyError:
            raise UsageError(f"unknown command {name!r}")

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog=self.name, description=self.description)
        subparsers = parser.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)
        for registered in self._commands.values():
            sub = subparsers.add_parser(registered.name, help=registered.description,
                                        description=registered.description)
            if registered.needs_type:
                sub.add_argument("type", help="type label (A2, B2, A1xG2, ...) or path to a Cartan matrix file")
            for arg in registered.arguments:
                sub.add_argument(*arg.flags, **arg.options)
            sub.add_argument("--format", choices=registered.formats, default="pretty",
                             help="output format")
            sub.add_argument("--json", dest="format", action="store_const", const="json",
                             help="shorthand for --format json")
            if "csv" in registered.formats:
                sub.add_argument("--csv", dest="format", action="store_const", const="csv",
                                 help="shorthand for --format csv")
        return parser
