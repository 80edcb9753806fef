"""``treeduce`` command line."""
from __future__ import annotations

import argparse
import contextlib
import io
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import catalog, hanoi, semigroup, verify
from . import sequences as seq
from .automata import FinalStateAutomaton, Transducer, parse_machine
from .errors import TreeduceError
from .words import format_word, from_digits_lsd, parse_word, to_digits_lsd


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout_text: str
    stderr_text: str


class UsageError(Exception):
    pass


def _pad_length(pad: Optional[str], i: int, k: int) -> Optional[int]:
    """Padded numeral length for ``i`` under ``--pad odd|even|exact:N``; ``None`` means minimal."""
    if pad is None:
        return None
    minimal = len(to_digits_lsd(i, k))
    if pad in ("odd", "even"):
        want = 1 if pad == "odd" else 0
        return minimal if minimal % 2 == want else minimal + 1
    if pad.startswith("exact:"):
        try:
            n = int(pad[6:])
        except ValueError:
            raise UsageError(f"bad --pad value {pad!r}") from None
        if minimal > n:
            raise UsageError(f"index {i} does not fit in {n} digits")
        return n
    raise UsageError(f"bad --pad value {pad!r}")


def _gray_value(base: int, i: int, pad: Optional[str]) -> int:
    n = _pad_length(pad, i, base) or max(len(to_digits_lsd(i, base)), 1)
    return from_digits_lsd(hanoi.gray_row(base, i, n), base)


def _geodesic(parity: str) -> Callable[[int, int, Optional[str]], List[int]]:
    def values(lo: int, hi: int, pad: Optional[str]) -> List[int]:
        pad = pad or parity
        return [hanoi.padded_geodesic_value(i, _pad_length(pad, i, 2)) for i in range(lo, hi)]

    return values


SEQUENCES: Dict[str, Callable[[int, int, Optional[str]], List[int]]] = {
    "at": lambda lo, hi, pad: seq.a_sequence(lo, hi),
    "l": lambda lo, hi, pad: seq.l_sequence(lo, hi),
    "walpha": lambda lo, hi, pad: seq.w_sequence(lo, hi),
    "gray2": lambda lo, hi, pad: [_gray_value(2, i, pad) for i in range(lo, hi)],
    "kgray3": lambda lo, hi, pad: [_gray_value(3, i, pad) for i in range(lo, hi)],
    "bdir": lambda lo, hi, pad: [hanoi.b_step(i).direction for i in range(lo, hi)],
    "bstep": lambda lo, hi, pad: [hanoi.b_step(i).index_distance for i in range(lo, hi)],
    "a055661-odd": _geodesic("odd"),
    "a055661-even": _geodesic("even"),
}


def load_machine(source: str):
    """Resolve ``builtin:NAME`` or a path to a machine file into ``(machine, default state)``."""
    if source.startswith("builtin:"):
        return catalog.builtin(source[len("builtin:"):])
    machine = parse_machine(Path(source).read_text(encoding="utf-8"))
    if isinstance(machine, FinalStateAutomaton):
        return machine, machine.initial
    return machine, machine.states[0]


def _cmd_seq(args, out) -> int:
    lo, hi = args.from_, args.to
    if lo < 0 or hi < lo:
        raise UsageError("need 0 <= --from <= --to")
    values = SEQUENCES[args.id](lo, hi, args.pad)
    if args.format == "bfile":
        out.write(seq.bfile(values, origin=lo))
    elif args.format == "plain":
        out.write(" ".join(str(v) for v in values) + "\n")
    else:
        raise UsageError("sequences support --format plain or bfile")
    return 0


def _cmd_apply(args, out) -> int:
    machine, default = load_machine(args.automaton)
    if isinstance(machine, FinalStateAutomaton):
        out.write(f"{machine.final_state_run(parse_word(args.word, machine.k)):+d}\n")
        return 0
    state = args.state or default
    out.write(format_word(machine.apply(state, parse_word(args.word, machine.k_in))) + "\n")
    return 0


def _cmd_recognize(args, out, err) -> int:
    result = hanoi.recognize_optimal(parse_word(args.config, 3), args.from_peg, args.to_peg)
    if not result.accepted:
        err.write(f"rejected after {result.consumed} symbols\n")
        return 1
    out.write(f"{result.distance}\n")
    return 0


def _cmd_graph(args, out) -> int:
    if args.format not in ("dot", "plain"):
        raise UsageError("graphs support --format dot")
    g = hanoi.schreier_graph(args.level)
    text = hanoi.export_dot(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def _transducer(source: str) -> Transducer:
    machine, _ = load_machine(source)
    if not isinstance(machine, Transducer):
        raise UsageError("semigroup commands need a transducer")
    return machine


def _cmd_semigroup(args, out) -> int:
    t = _transducer(args.automaton)
    if args.action == "verify":
        holds = semigroup.verify_relation(t, args.words[0], args.words[1])
        out.write(("holds" if holds else "fails") + "\n")
        return 0 if holds else 1
    if args.action == "order":
        order = semigroup.element_order(t, args.words[0], args.bound)
        out.write(("none" if order is None else str(order)) + "\n")
        return 0
    counts = semigroup.growth_counts(t, semigroup.parse_generator_word(args.words[0]), args.length)
    out.write(" ".join(map(str, counts)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    checks = verify.run_suite(args.suite, args.depth)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treeduce", description="Transducer integer sequences and Hanoi Towers machinery.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a named sequence over a half-open index range")
    p.add_argument("id", choices=sorted(SEQUENCES))
    p.add_argument("--from", dest="from_", type=int, default=0)
    p.add_argument("--to", type=int, default=10)
    p.add_argument("--pad", help="odd, even or exact:N (Gray and geodesic sequences)")
    p.add_argument("--format", choices=["plain", "bfile", "dot"], default="plain")

    p = sub.add_parser("apply", help="run a machine on a word")
    p.add_argument("--automaton", required=True, help="path or builtin:NAME")
    p.add_argument("--state")
    p.add_argument("--word", required=True)

    p = sub.add_parser("recognize", help="decide whether a configuration lies on an optimal path")
    p.add_argument("--from-peg", type=int, required=True)
    p.add_argument("--to-peg", type=int, required=True)
    p.add_argument("--config", required=True)

    p = sub.add_parser("graph", help="export a Schreier graph")
    p.add_argument("kind", choices=["schreier"])
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--format", choices=["plain", "bfile", "dot"], default="dot")
    p.add_argument("--output")

    p = sub.add_parser("semigroup", help="relations, orders and growth of generated semigroups")
    p.add_argument("action", choices=["verify", "order", "growth"])
    p.add_argument("words", nargs="+", help="generator words (verify: two; order: one; growth: generator list)")
    p.add_argument("--automaton", required=True)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--length", type=int, default=5)

    p = sub.add_parser("verify", help="run self-checks")
    p.add_argument("suite", choices=["all", *verify.SUITES])
    p.add_argument("--depth", type=int, default=6)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), out.getvalue(), err.getvalue())
    try:
        if args.command == "semigroup":
            expected = {"verify": 2, "order": 1, "growth": 1}[args.action]
            if len(args.words) != expected:
                raise UsageError(f"semigroup {args.action} takes {expected} word argument(s)")
        if args.command == "seq":
            code = _cmd_seq(args, out)
        elif args.command == "apply":
            code = _cmd_apply(args, out)
        elif args.command == "recognize":
            code = _cmd_recognize(args, out, err)
        elif args.command == "graph":
            code = _cmd_graph(args, out)
        elif args.command == "semigroup":
            code = _cmd_semigroup(args, out)
        else:
            code = _cmd_verify(args, out)
    except (UsageError, TreeduceError, ValueError, KeyError, OSError) as exc:
        err.write(f"treeduce: error: {exc}\n")
        return CommandResult(2, out.getvalue(), err.getvalue())
    return CommandResult(code, out.getvalue(), err.getvalue())


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout_text)
    sys.stderr.write(result.stderr_text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
