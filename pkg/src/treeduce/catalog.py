"""Built-in machines.

==========  =========  ==========================================================
name        alphabets  states
==========  =========  ==========================================================
AH          3 -> 3     id, a (=a01), b (=a02), c (=a12); Hanoi Towers moves
AL          3 -> 2     alpha, beta; generates the L-sequence
A02         3          a0, a1 (initial), a2; final-state output +1/+1/-1
AT          3 -> 3     s1, s0; powers of three
AD          2 -> 2     id, f, g; binary Gray code stepping
AL2         2 -> 2     l0, l1; lamplighter machine
OH          2 -> 3     t01 ... t21; optimal Hanoi configurations, Gray order
OHprime     2 -> 3     q01 ... q21; optimal Hanoi configurations, natural order
==========  =========  ==========================================================
"""
from __future__ import annotations

from typing import Tuple, Union

from .automata import FinalStateAutomaton, Transducer
from .errors import UnknownName

Machine = Union[Transducer, FinalStateAutomaton]

PEG_PAIRS = [(x, y) for x in range(3) for y in range(3) if x != y]


def _third(x: int, y: int) -> int:
    return 3 - x - y


def _hanoi() -> Transducer:
    table = {"id": (("id", 0), ("id", 1), ("id", 2))}
    for name, (i, j) in (("a", (0, 1)), ("b", (0, 2)), ("c", (1, 2))):
        row = []
        for x in range(3):
            if x == i:
                row.append(("id", j))
            elif x == j:
                row.append(("id", i))
            else:
                row.append((name, x))
        table[name] = tuple(row)
    return Transducer(3, 3, table)


def _optimal(prefix: str, natural: bool) -> Transducer:
    table = {}
    for x, y in PEG_PAIRS:
        z = _third(x, y)
        one = f"{prefix}{z}{y}" if natural else f"{prefix}{y}{z}"
        table[f"{prefix}{x}{y}"] = ((f"{prefix}{x}{z}", x), (one, y))
    return Transducer(2, 3, table)


def _build(name: str) -> Tuple[Machine, str]:
    if name == "AH":
        return _hanoi(), "id"
    if name == "AL":
        return Transducer(3, 2, {
            "alpha": (("alpha", 0), ("alpha", 1), ("beta", 1)),
            "beta": (("alpha", 1), ("beta", 1), ("beta", 0)),
        }), "alpha"
    if name == "A02":
        return FinalStateAutomaton(
            3,
            "a1",
            {"a0": ("a0",) * 3, "a1": ("a0", "a1", "a2"), "a2": ("a2",) * 3},
            {"a0": 1, "a1": 1, "a2": -1},
        ), "a1"
    if name == "AT":
        return Transducer(3, 3, {
            "s1": (("s0", 1), ("s1", 0), ("s0", 1)),
            "s0": (("s0", 0),) * 3,
        }), "s1"
    if name == "AD":
        return Transducer(2, 2, {
            "id": (("id", 0), ("id", 1)),
            "f": (("id", 1), ("id", 0)),
            "g": (("g", 0), ("f", 1)),
        }), "g"
    if name == "AL2":
        return Transducer(2, 2, {
            "l0": (("l0", 0), ("l1", 1)),
            "l1": (("l0", 1), ("l1", 0)),
        }), "l0"
    if name == "OH":
        return _optimal("t", natural=False), "t01"
    if name == "OHprime":
        return _optimal("q", natural=True), "q01"
    raise UnknownName(name)


NAMES = ("AH", "AL", "A02", "AT", "AD", "AL2", "OH", "OHprime")

_cache = {}


def builtin(name: str) -> Tuple[Machine, str]:
    """Return ``(machine, default initial state)`` for a catalog name."""
    if name not in _cache:
        _cache[name] = _build(name)
    return _cache[name]


def transducer(name: str) -> Transducer:
    machine, _ = builtin(name)
    if not isinstance(machine, Transducer):
        raise UnknownName(f"{name} is not a transducer")
    return machine


def automaton(name: str) -> FinalStateAutomaton:
    machine, _ = builtin(name)
    if not isinstance(machine, FinalStateAutomaton):
        raise UnknownName(f"{name} is not a final-state automaton")
    return machine
