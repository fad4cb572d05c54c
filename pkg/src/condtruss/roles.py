"""
Role launcher: runs one or more command roles from a single argument vector.

Roles are named with a leading colon and take the arguments up to the next
role, `condtruss :convert raw.txt g.txt :decompose g.txt`. A first token
without a colon names a single role, `condtruss convert raw.txt g.txt`, and
`index build` is accepted for the `index-build` role.
"""

from __future__ import annotations

import argparse
import logging
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar

from .errors import CondTrussError
from .logger_injection import AutoLoggerManager

OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class RunConfig:
    """Flags shared by every role."""

    seed: int = 0
    threads: int = 1
    output: Path | None = None
    format: str = "text"
    verbose: bool = False

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        return cls(
            seed=ns.seed,
            threads=ns.threads,
            output=Path(ns.output) if ns.output else None,
            format=ns.format,
            verbose=ns.verbose,
        )


def common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    parser.add_argument("--threads", type=int, default=1, help="parallelism bound")
    parser.add_argument("--output", default=None, help="output path")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


@dataclass(frozen=True)
class EntrypointArgs:
    role_id: str
    raw_args: list[str]


class RoleTask(ABC):
    """A command. Subclasses set `id`, declare their flags and implement `run`."""

    id: ClassVar[str]
    help: ClassVar[str] = ""

    def __init__(self, logger: logging.Logger):
        self.logger = logger

    def parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog=f"condtruss {self.id}", description=self.help, parents=[common_parser()]
        )
        self.configure(parser)
        return parser

    @abstractmethod
    def configure(self, parser: argparse.ArgumentParser) -> None:
        pass

    @abstractmethod
    def run(self, ns: argparse.Namespace, config: RunConfig) -> int:
        pass

    def start(self, args: EntrypointArgs) -> int:
        ns = self.parser().parse_args(args.raw_args)
        config = RunConfig.from_namespace(ns)
        if config.threads < 1:
            self.parser().error("--threads must be at least 1")
        AutoLoggerManager.configure(config.verbose)
        return self.run(ns, config)


@dataclass(frozen=True)
class RoleInvocation:
    role_id: str
    args: list[str]


def parse_role_args(argv: list[str]) -> list[RoleInvocation]:
    """
    Split argv at `:role` markers. After a bare `--` every remaining argument
    belongs to the current role, so labels starting with ':' can be passed.
    """
    if argv and not argv[0].startswith(":") and not argv[0].startswith("-"):
        argv = [f":{argv[0]}", *argv[1:]]

    invocations: list[RoleInvocation] = []
    current_role: str | None = None
    current_args: list[str] = []
    literal = False

    for arg in argv:
        if arg.startswith(":") and not literal:
            if current_role is not None:
                invocations.append(RoleInvocation(current_role, current_args))
            current_role = arg[1:]
            current_args = []
        elif current_role is not None:
            literal = literal or arg == "--"
            current_args.append(arg)

    if current_role is not None:
        invocations.append(RoleInvocation(current_role, current_args))

    return [_two_word_role(invocation) for invocation in invocations]


def _two_word_role(invocation: RoleInvocation) -> RoleInvocation:
    if invocation.role_id == "index" and invocation.args[:1] == ["build"]:
        return RoleInvocation("index-build", invocation.args[1:])
    return invocation


class RoleAppMain:
    def __init__(self) -> None:
        self._roles: dict[str, type[RoleTask]] = {}

    def add_role(self, role: type[RoleTask]) -> RoleAppMain:
        self._roles[role.id] = role
        return self

    def usage(self) -> str:
        lines = ["usage: condtruss <role> [args] [:<role> [args] ...]", "", "roles:"]
        lines += [f"  {role_id:<12} {role.help}" for role_id, role in sorted(self._roles.items())]
        return "\n".join(lines)

    def main(self, argv: list[str] | None = None) -> int:
        """Run every requested role in order; stops at the first failure."""
        if argv is None:
            argv = sys.argv[1:]

        invocations = parse_role_args(argv)

        if not invocations:
            print(self.usage(), file=sys.stderr)
            return 2

        for invocation in invocations:
            role_type = self._roles.get(invocation.role_id)
            if role_type is None:
                print(f"error: role '{invocation.role_id}' not found", file=sys.stderr)
                print(self.usage(), file=sys.stderr)
                return 2

            logger = AutoLoggerManager.logger_for(role_type)
            role = role_type(logger)
            try:
                code = role.start(EntrypointArgs(invocation.role_id, invocation.args))
            except CondTrussError as e:
                logger.debug("%s failed", invocation.role_id, exc_info=True)
                print(f"error: {e}", file=sys.stderr)
                return e.exit_code
            except OSError as e:
                logger.debug("%s failed", invocation.role_id, exc_info=True)
                print(f"error: {e}", file=sys.stderr)
                return 2
            except SystemExit as e:
                # argparse: --help or a bad flag
                return e.code if isinstance(e.code, int) else 2
            if code != 0:
                return code
        return 0
