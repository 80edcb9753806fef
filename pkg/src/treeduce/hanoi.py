"""Hanoi Towers on three pegs: moves, Schreier graphs, Gray codes and optimal configurations.

A configuration of ``n`` disks is a ternary word whose letter ``i-1`` is the
peg of disk ``i`` (smallest disk first). The generators ``a``, ``b``, ``c``
move a disk between pegs 0-1, 0-2 and 1-2 respectively.
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import catalog
from .automata import Transducer
from .errors import IndexOutOfRange, LengthError, ResourceLimit
from .words import Word, format_word, from_digits_lsd, pad_to, reverse, to_digits_lsd, validate

GENERATORS = ("a", "b", "c")
MOVE_NAMES = {(0, 1): "a", (0, 2): "b", (1, 2): "c"}
DEFAULT_MAX_LEVEL = 9


def max_level() -> int:
    return int(os.environ.get("TREEDUCE_MAX_LEVEL", DEFAULT_MAX_LEVEL))


def apply_move(c: Sequence[int], i: int, j: int) -> Word:
    """Move the top disk between pegs ``i`` and ``j``; a no-op when both pegs are empty."""
    if i == j or not (0 <= i < 3 and 0 <= j < 3):
        raise ValueError(f"invalid peg pair ({i}, {j})")
    return catalog.transducer("AH").apply(MOVE_NAMES[min(i, j), max(i, j)], c)


# -- Schreier graphs ---------------------------------------------------------


@dataclass(frozen=True)
class SchreierGraph:
    """Level-``n`` Schreier graph; ``edges`` holds ``(u, v, label)`` with ``u <= v``, loops included."""

    level: int
    vertices: Tuple[Word, ...]
    edges: Tuple[Tuple[Word, Word, str], ...]

    def neighbors(self) -> Dict[Word, Dict[str, Word]]:
        adj: Dict[Word, Dict[str, Word]] = {v: {} for v in self.vertices}
        for u, v, s in self.edges:
            adj[u][s] = v
            adj[v][s] = u
        return adj


def schreier_graph(n: int) -> SchreierGraph:
    if n < 1:
        raise ValueError("level must be at least 1")
    if n > max_level():
        raise ResourceLimit(f"level {n} exceeds the configured maximum {max_level()}")
    ah = catalog.transducer("AH")
    vertices = tuple(itertools.product(range(3), repeat=n))
    edges = []
    for u in vertices:
        for s in GENERATORS:
            v = ah.apply(s, u)
            if u <= v:
                edges.append((u, v, s))
    return SchreierGraph(n, vertices, tuple(edges))


def distances_from(g: SchreierGraph, source: Sequence[int]) -> Dict[Word, int]:
    adj = g.neighbors()
    source = tuple(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u].values():
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_distance(n: int, c1: Sequence[int], c2: Sequence[int]) -> int:
    c1, c2 = validate(c1, 3), validate(c2, 3)
    if len(c1) != n or len(c2) != n:
        raise LengthError(f"configurations must have {n} disks")
    if c1 == c2:
        return 0
    return distances_from(schreier_graph(n), c1)[c2]


def export_dot(g: SchreierGraph) -> str:
    lines = [f"graph schreier_{g.level} {{"]
    for v in g.vertices:
        lines.append(f'  "{format_word(v)}";')
    for u, v, s in g.edges:
        lines.append(f'  "{format_word(u)}" -- "{format_word(v)}" [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- Gray codes --------------------------------------------------------------


def gray_row(base: int, i: int, n: int) -> Word:
    """Row ``i`` of the reflected Gray matrix: ``K_n`` for base 3, ``M_n`` for base 2.

    Letter ``j`` of the row is column ``j+1``; the last column selects the
    block and odd blocks are read in reverse.
    """
    if base not in (2, 3):
        raise ValueError("base must be 2 or 3")
    if not 0 <= i < base**n:
        raise IndexOutOfRange(f"row {i} outside a matrix with {base ** n} rows")
    word = [0] * n
    for col in range(n - 1, -1, -1):
        size = base**col
        block, i = divmod(i, size)
        word[col] = block
        if block % 2:
            i = size - 1 - i
    return tuple(word)


def gray_rank(base: int, w: Sequence[int]) -> int:
    """Inverse of :func:`gray_row`."""
    rank = 0
    for col, digit in enumerate(validate(w, base)):
        size = base**col
        rank = digit * size + (size - 1 - rank if digit % 2 else rank)
    return rank


def _alternation_machine(generators: Tuple[str, str]) -> Transducer:
    for name in ("AH", "AD"):
        t = catalog.transducer(name)
        if all(s in t.table for s in generators):
            return t
    raise ValueError(f"no built-in machine has states {generators}")


def alternation_rows(generators: Tuple[str, str], n: int) -> Iterator[Word]:
    """Yield ``t_0(0^n), t_1(0^n), ...`` applying the two generators alternately, first one first."""
    t = _alternation_machine(generators)
    w = (0,) * n
    yield w
    for step in range(1, t.k_in**n):
        w = t.apply(generators[(step - 1) % 2], w)
        yield w


def alternation_row(generators: Tuple[str, str], i: int, n: int) -> Word:
    t = _alternation_machine(generators)
    if not 0 <= i < t.k_in**n:
        raise IndexOutOfRange(f"row {i} outside {t.k_in ** n} rows")
    return next(itertools.islice(alternation_rows(generators, n), i, None))


@dataclass(frozen=True)
class GrayStep:
    direction: int
    index_distance: int


def b_step(i: int) -> GrayStep:
    """Where ``b`` sends row ``i`` of the infinite ternary Gray matrix.

    The working length grows until the row contains a 0 or a 2, which is
    the letter ``b`` changes.
    """
    if i < 0:
        raise IndexOutOfRange("negative row index")
    n = max(len(to_digits_lsd(i, 3)), 1)
    row = gray_row(3, i, n)
    while all(x == 1 for x in row):
        n += 1
        row = gray_row(3, i, n)
    j = gray_rank(3, catalog.transducer("AH").apply("b", row))
    return GrayStep(1 if j > i else -1, abs(j - i))


# -- optimal configurations --------------------------------------------------


def _check_pegs(x: int, y: int) -> None:
    if x == y or not (0 <= x < 3 and 0 <= y < 3):
        raise ValueError(f"invalid peg pair ({x}, {y})")


def optimal_config(x: int, y: int, n: int, i: int) -> Word:
    """The configuration ``i`` moves along the optimal path from ``x^n`` to ``y^n``."""
    _check_pegs(x, y)
    if not 0 <= i < 2**n:
        raise IndexOutOfRange(f"distance {i} exceeds the {2 ** n - 1}-move optimal path")
    binary = reverse(pad_to(to_digits_lsd(i, 2), n))
    return reverse(catalog.transducer("OHprime").apply(f"q{x}{y}", binary))


def optimal_config_gray(x: int, y: int, n: int, i: int) -> Word:
    """Same configuration as :func:`optimal_config`, produced from the binary Gray code row."""
    _check_pegs(x, y)
    if not 0 <= i < 2**n:
        raise IndexOutOfRange(f"distance {i} exceeds the {2 ** n - 1}-move optimal path")
    return reverse(catalog.transducer("OH").apply(f"t{x}{y}", reverse(gray_row(2, i, n))))


@dataclass(frozen=True)
class Recognition:
    """Outcome of reading a configuration into the inverse of the optimal-path machine.

    ``distance`` is set on acceptance; ``consumed`` is the number of letters
    read before the machine got stuck (the full length on acceptance).
    """

    accepted: bool
    consumed: int
    distance: Optional[int] = None


def recognize_optimal(c: Sequence[int], x: int, y: int) -> Recognition:
    _check_pegs(x, y)
    c = validate(c, 3)
    inverse = catalog.transducer("OHprime").invert()
    run = inverse.apply_partial(f"q{x}{y}", reverse(c))
    if not run.accepted:
        return Recognition(False, run.consumed)
    return Recognition(True, run.consumed, from_digits_lsd(reverse(run.output), 2))


def geodesic_integer_sequence(parity: str, count: int) -> List[int]:
    """Ternary values of the configurations along the optimal path from ``0^n`` to ``1^n``.

    Term ``i`` uses the smallest disk count ``n`` of the given parity with
    ``i < 2^n``.
    """
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    want = 1 if parity == "odd" else 0
    out = []
    for i in range(count):
        n = len(to_digits_lsd(i, 2))
        if n % 2 != want:
            n += 1
        out.append(from_digits_lsd(optimal_config(0, 1, n, i), 3))
    return out


def padded_geodesic_value(i: int, n: int) -> int:
    """Ternary value of ``optimal_config(0, 1, n, i)`` at an explicit disk count."""
    return from_digits_lsd(optimal_config(0, 1, n, i), 3)
