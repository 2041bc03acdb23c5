"""CLI configuration: parsing, validation, and rendering back to argv.

Every subcommand draws from one shared flag registry, so a parsed config
renders back to an argv that parses to the same config. Caps (base size,
exponent, limit) are rejected here with actionable messages; they are never
silently truncated. Environment variables SMOOTHWORLD_THREADS and
SMOOTHWORLD_BUDGET_SECONDS override those two settings when the flag is
not given explicitly.
"""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass, fields

from .arith import MAX_BASE_PRIMES, MAX_EXPONENT, MAX_LIMIT, is_prime
from .errors import UsageError

COMMANDS = (
    "color",
    "smooth",
    "schur-search",
    "schur-number",
    "schur-count",
    "ramsey-reduce",
    "k2",
    "flt",
    "dm",
    "ap",
    "gaps",
    "density",
    "folkman",
    "theorem1",
    "theorem3",
    "theorem5",
    "theorem8",
    "suite",
)

# flag name -> (dest, argparse kwargs); values arrive as strings and are
# converted in _finalize so error handling stays in one place.
_FLAGS = {
    "--primes": ("primes", {"help": "comma-separated prime base, e.g. 2,3,5"}),
    "--exponent": ("exponent", {"help": "power exponent n"}),
    "--limit": ("limit", {"help": "domain bound N"}),
    "--colors": ("colors", {"help": "palette size t"}),
    "--set-size": ("set_size", {"help": "subset-sum set size s"}),
    "--witness-size": ("witness_size", {"help": "bipartite partner count w"}),
    "--length": ("length", {"help": "progression length"}),
    "--bound": ("bound", {"help": "oracle search bound B"}),
    "--difference": ("difference", {"help": "fixed power difference d"}),
    "--values": ("values", {"help": "comma-separated integers to color"}),
    "--limits": ("limits", {"help": "comma-separated density bounds"}),
    "--format": ("fmt", {"help": "output format", "choices": ["json", "csv", "text"]}),
    "--threads": ("threads", {"help": "worker count (pass-through, output-invariant)"}),
    "--seed": ("seed", {"help": "seed for randomized harnesses"}),
    "--timing": ("timing", {"help": "include real wall time in output", "action": "store_true"}),
    "--budget-seconds": ("budget_seconds", {"help": "search time budget"}),
    "--budget-nodes": ("budget_nodes", {"help": "search node budget"}),
    "--server": ("server", {"help": "base URL of a running service (default: in-process)"}),
}

COMMAND_FLAGS: dict[str, tuple[str, ...]] = {
    "color": ("--primes", "--exponent", "--values"),
    "smooth": ("--primes", "--limit"),
    "schur-search": ("--primes", "--exponent", "--limit"),
    "schur-number": ("--colors", "--budget-seconds", "--budget-nodes"),
    "schur-count": ("--primes", "--exponent", "--limit"),
    "ramsey-reduce": ("--colors", "--limit"),
    "k2": ("--colors", "--limit", "--witness-size"),
    "flt": ("--exponent", "--bound"),
    "dm": ("--exponent", "--bound"),
    "ap": ("--exponent", "--length", "--bound"),
    "gaps": ("--exponent", "--bound", "--difference"),
    "density": ("--primes", "--exponent", "--limits"),
    "folkman": ("--primes", "--exponent", "--limit", "--set-size"),
    "theorem1": ("--primes", "--exponent", "--limit"),
    "theorem3": ("--primes", "--exponent", "--limit"),
    "theorem5": ("--primes", "--exponent", "--limit", "--set-size"),
    "theorem8": ("--primes", "--exponent", "--limit", "--witness-size"),
    "suite": (),
}

_COMMON_FLAGS = ("--format", "--threads", "--seed", "--timing", "--server")


@dataclass(frozen=True)
class RunConfig:
    command: str
    primes: tuple[int, ...] = (2, 3, 5)
    exponent: int = 2
    limit: int = 100_000
    colors: int = 2
    set_size: int = 2
    witness_size: int = 4
    length: int = 3
    bound: int = 100
    difference: int | None = None
    values: tuple[int, ...] = ()
    limits: tuple[int, ...] = (100, 1000, 10_000, 100_000, 1_000_000)
    fmt: str = "json"
    threads: int = 1
    seed: int = 0
    timing: bool = False
    budget_seconds: float | None = None
    budget_nodes: int | None = None
    server: str | None = None


_DEFAULTS = RunConfig(command="suite")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); we want exit 64
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="smoothworld", description="Smooth-world structure searches")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for command in COMMANDS:
        p = sub.add_parser(command, add_help=True)
        for flag in COMMAND_FLAGS[command] + _COMMON_FLAGS:
            dest, kwargs = _FLAGS[flag]
            p.add_argument(flag, dest=dest, default=None, **kwargs)
    return parser


def _int(name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} expects an integer, got {raw!r}") from None


def _int_list(name: str, raw: str) -> tuple[int, ...]:
    if not raw.strip():
        raise UsageError(f"{name} expects a comma-separated integer list")
    return tuple(_int(name, part) for part in raw.split(","))


def _validate_primes(primes: tuple[int, ...]) -> tuple[int, ...]:
    if not 1 <= len(primes) <= MAX_BASE_PRIMES:
        raise UsageError(f"--primes takes 1..{MAX_BASE_PRIMES} primes, got {len(primes)}")
    if any(b <= a for a, b in zip(primes, primes[1:])):
        raise UsageError("--primes must be strictly ascending")
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"--primes: {p} is not prime")
    return primes


def parse_args(argv: list[str]) -> RunConfig:
    """Parse and fully validate an argv into a RunConfig."""
    ns = _build_parser().parse_args(argv)
    updates: dict = {"command": ns.command}
    active = COMMAND_FLAGS[ns.command] + _COMMON_FLAGS

    def given(flag: str):
        return getattr(ns, _FLAGS[flag][0])

    if "--primes" in active and given("--primes") is not None:
        updates["primes"] = _validate_primes(_int_list("--primes", given("--primes")))
    if "--exponent" in active and given("--exponent") is not None:
        n = _int("--exponent", given("--exponent"))
        if not 1 <= n <= MAX_EXPONENT:
            raise UsageError(f"--exponent must be in [1, {MAX_EXPONENT}], got {n}")
        updates["exponent"] = n
    for flag, low in (("--limit", 1), ("--bound", 1)):
        if flag in active and given(flag) is not None:
            value = _int(flag, given(flag))
            if not low <= value <= MAX_LIMIT:
                raise UsageError(f"{flag} must be in [{low}, 2**40], got {value}")
            updates[_FLAGS[flag][0]] = value
    if "--colors" in active and given("--colors") is not None:
        t = _int("--colors", given("--colors"))
        if t < 1:
            raise UsageError(f"--colors must be >= 1, got {t}")
        updates["colors"] = t
    if "--set-size" in active and given("--set-size") is not None:
        s = _int("--set-size", given("--set-size"))
        if not 2 <= s <= 5:
            raise UsageError(f"--set-size must be in [2, 5], got {s}")
        updates["set_size"] = s
    if "--witness-size" in active and given("--witness-size") is not None:
        w = _int("--witness-size", given("--witness-size"))
        if w < 1:
            raise UsageError(f"--witness-size must be >= 1, got {w}")
        updates["witness_size"] = w
    if "--length" in active and given("--length") is not None:
        length = _int("--length", given("--length"))
        if length < 3:
            raise UsageError(f"--length must be >= 3, got {length}")
        updates["length"] = length
    if "--difference" in active and given("--difference") is not None:
        d = _int("--difference", given("--difference"))
        if d < 1:
            raise UsageError(f"--difference must be >= 1, got {d}")
        updates["difference"] = d
    if "--values" in active and given("--values") is not None:
        values = _int_list("--values", given("--values"))
        if any(v < 1 for v in values):
            raise UsageError("--values must be positive integers")
        updates["values"] = values
    if "--limits" in active and given("--limits") is not None:
        limits = _int_list("--limits", given("--limits"))
        if any(not 1 <= v <= MAX_LIMIT for v in limits):
            raise UsageError("--limits entries must be in [1, 2**40]")
        updates["limits"] = limits
    if given("--format") is not None:
        fmt = given("--format")
        if fmt == "csv" and ns.command != "density":
            raise UsageError("csv format is only available for the density command")
        updates["fmt"] = fmt
    if given("--threads") is not None:
        threads = _int("--threads", given("--threads"))
        if threads < 1:
            raise UsageError(f"--threads must be >= 1, got {threads}")
        updates["threads"] = threads
    elif os.environ.get("SMOOTHWORLD_THREADS"):
        updates["threads"] = _int("SMOOTHWORLD_THREADS", os.environ["SMOOTHWORLD_THREADS"])
    if given("--seed") is not None:
        updates["seed"] = _int("--seed", given("--seed"))
    if given("--timing"):
        updates["timing"] = True
    if "--budget-seconds" in active and given("--budget-seconds") is not None:
        try:
            updates["budget_seconds"] = float(given("--budget-seconds"))
        except ValueError:
            raise UsageError("--budget-seconds expects a number") from None
    elif "--budget-seconds" in active and os.environ.get("SMOOTHWORLD_BUDGET_SECONDS"):
        updates["budget_seconds"] = float(os.environ["SMOOTHWORLD_BUDGET_SECONDS"])
    if "--budget-nodes" in active and given("--budget-nodes") is not None:
        updates["budget_nodes"] = _int("--budget-nodes", given("--budget-nodes"))
    if given("--server") is not None:
        updates["server"] = given("--server")
    if ns.command == "color" and not updates.get("values"):
        raise UsageError("color requires --values")
    return RunConfig(**updates)


def render_argv(config: RunConfig) -> list[str]:
    """Render a config back to an argv that parses to an equal config."""
    argv = [config.command]
    active = COMMAND_FLAGS[config.command] + _COMMON_FLAGS
    defaults = {f.name: getattr(_DEFAULTS, f.name) for f in fields(RunConfig)}
    for flag in active:
        dest = _FLAGS[flag][0]
        value = getattr(config, dest)
        if value == defaults[dest]:
            continue
        if flag == "--timing":
            argv.append(flag)
        elif dest in ("primes", "values", "limits"):
            argv.extend([flag, ",".join(str(v) for v in value)])
        else:
            argv.extend([flag, str(value)])
    return argv
