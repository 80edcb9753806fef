"""Mealy-style transducers acting as tree morphisms.

A state ``q`` of a ``k_in -> k_out`` transducer defines the length- and
prefix-preserving map ``q(xw) = pi(q, x) . tau(q, x)(w)``. Everything here
is immutable; composite morphisms are product-machine states and morphism
equality is decided exactly by partition refinement.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    AlphabetMismatch,
    IncompleteTable,
    LetterOutOfRange,
    NotInjective,
    TransducerSyntaxError,
    UnknownState,
)
from .words import Word, validate

Row = Tuple[Tuple[str, int], ...]


class TransducerClass(enum.Enum):
    GENERAL = "General"
    INJECTIVE = "Injective"
    INVERTIBLE = "Invertible"


@dataclass(frozen=True)
class ZeroRayTail:
    """Output of a state on ``0^inf``: ``transient . cycle^inf``."""

    transient: Word
    cycle: Word


@dataclass(frozen=True)
class Transducer:
    """Finite ``k_in -> k_out`` transducer.

    ``table[q][x]`` is the pair ``(tau(q, x), pi(q, x))``. State order is
    the insertion order of ``table``.
    """

    k_in: int
    k_out: int
    table: Mapping[str, Row]

    def __post_init__(self):
        if self.k_in < 2 or self.k_out < 2:
            raise ValueError("alphabet sizes must be at least 2")
        table = {str(q): tuple((str(p), int(y)) for p, y in row) for q, row in self.table.items()}
        for q, row in table.items():
            if len(row) != self.k_in:
                raise IncompleteTable(q, len(row))
            for x, (p, y) in enumerate(row):
                if p not in table:
                    raise UnknownState(p)
                if not 0 <= y < self.k_out:
                    raise LetterOutOfRange(f"output {y} of ({q}, {x}) outside alphabet {self.k_out}")
        object.__setattr__(self, "table", table)

    @property
    def states(self) -> Tuple[str, ...]:
        return tuple(self.table)

    def _check_state(self, q: str) -> None:
        if q not in self.table:
            raise UnknownState(q)

    def tau(self, q: str, x: int) -> str:
        return self.table[q][x][0]

    def pi(self, q: str, x: int) -> int:
        return self.table[q][x][1]

    def output_row(self, q: str) -> Tuple[int, ...]:
        """The root transformation of ``q`` as a tuple indexed by input letter."""
        return tuple(y for _, y in self.table[q])

    def apply(self, q: str, w: Iterable[int]) -> Word:
        self._check_state(q)
        out = []
        table = self.table
        for x in validate(w, self.k_in):
            q, y = table[q][x]
            out.append(y)
        return tuple(out)

    def state_after(self, q: str, u: Iterable[int]) -> str:
        """The section of ``q`` at the vertex ``u``."""
        self._check_state(q)
        for x in validate(u, self.k_in):
            q = self.table[q][x][0]
        return q

    def zero_ray_tail(self, q: str) -> ZeroRayTail:
        self._check_state(q)
        seen: Dict[str, int] = {}
        outputs = []
        while q not in seen:
            seen[q] = len(outputs)
            q, y = self.table[q][0]
            outputs.append(y)
        start = seen[q]
        return ZeroRayTail(tuple(outputs[:start]), tuple(outputs[start:]))

    def reachable(self, q: str) -> List[str]:
        self._check_state(q)
        order = [q]
        seen = {q}
        queue = deque(order)
        while queue:
            p = queue.popleft()
            for r, _ in self.table[p]:
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order

    def preserves_zero_confinality(self, q: str) -> bool:
        """True iff every state reachable from ``q`` sends ``0^inf`` to a word ending in ``0^inf``."""
        return all(
            all(y == 0 for y in self.zero_ray_tail(p).cycle) for p in self.reachable(q)
        )

    def classify(self) -> TransducerClass:
        rows = [self.output_row(q) for q in self.table]
        injective = self.k_in <= self.k_out and all(len(set(r)) == len(r) for r in rows)
        if injective and self.k_in == self.k_out:
            return TransducerClass.INVERTIBLE
        if injective:
            return TransducerClass.INJECTIVE
        return TransducerClass.GENERAL

    def invert(self) -> "PartialTransducer":
        """Partial inverse machine; defined exactly on letters that some input produces."""
        table: Dict[str, Dict[int, Tuple[str, int]]] = {}
        for q in sorted(self.table):
            row = self.output_row(q)
            if self.k_in > self.k_out or len(set(row)) != len(row):
                raise NotInjective(q)
        for q, row in self.table.items():
            table[q] = {y: (p, x) for x, (p, y) in enumerate(row)}
        return PartialTransducer(k_in=self.k_out, k_out=self.k_in, table=table)

    def restrict(self, roots: Iterable[str]) -> "Transducer":
        """Sub-machine of the states reachable from ``roots``."""
        keep: Dict[str, None] = {}
        for r in roots:
            for p in self.reachable(r):
                keep.setdefault(p)
        return Transducer(self.k_in, self.k_out, {q: self.table[q] for q in keep})

    def rename(self, names: Mapping[str, str]) -> "Transducer":
        return Transducer(
            self.k_in,
            self.k_out,
            {names[q]: tuple((names[p], y) for p, y in row) for q, row in self.table.items()},
        )

    def widen(self, k_out: int) -> "Transducer":
        """Same morphisms viewed with a larger output alphabet."""
        if k_out < self.k_out:
            raise AlphabetMismatch(f"cannot narrow output alphabet {self.k_out} to {k_out}")
        return Transducer(self.k_in, k_out, self.table)


@dataclass(frozen=True)
class PartialRun:
    """Result of running a partial transducer.

    ``consumed`` counts letters read before stopping; the run is accepted
    when it equals the input length.
    """

    output: Word
    consumed: int
    accepted: bool
    state: str


@dataclass(frozen=True)
class PartialTransducer:
    """Transducer with partially defined transitions, ``table[q][y] = (next, x)``."""

    k_in: int
    k_out: int
    table: Mapping[str, Mapping[int, Tuple[str, int]]]

    @property
    def states(self) -> Tuple[str, ...]:
        return tuple(self.table)

    def is_total(self) -> bool:
        return all(len(row) == self.k_in for row in self.table.values())

    def apply_partial(self, q: str, w: Iterable[int]) -> PartialRun:
        if q not in self.table:
            raise UnknownState(q)
        w = validate(w, self.k_in)
        out = []
        for m, y in enumerate(w):
            step = self.table[q].get(y)
            if step is None:
                return PartialRun(tuple(out), m, False, q)
            q, x = step
            out.append(x)
        return PartialRun(tuple(out), len(w), True, q)


@dataclass(frozen=True)
class FinalStateAutomaton:
    """Deterministic automaton whose output is attached to the state it ends in."""

    k: int
    initial: str
    delta: Mapping[str, Tuple[str, ...]]
    out: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        delta = {str(q): tuple(str(p) for p in row) for q, row in self.delta.items()}
        if self.initial not in delta:
            raise UnknownState(self.initial)
        for q, row in delta.items():
            if len(row) != self.k:
                raise IncompleteTable(q, len(row))
            for p in row:
                if p not in delta:
                    raise UnknownState(p)
            if q not in self.out:
                raise ValueError(f"state {q!r} has no output")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "out", dict(self.out))

    @property
    def states(self) -> Tuple[str, ...]:
        return tuple(self.delta)

    def final_state_run(self, w: Iterable[int]) -> int:
        q = self.initial
        for x in validate(w, self.k):
            q = self.delta[q][x]
        return self.out[q]


def product(t1: Transducer, t2: Transducer, start: Optional[Tuple[str, str]] = None) -> Transducer:
    """Composition machine: state ``(p,q)`` acts as ``p`` after ``q``.

    With ``start`` only the pairs reachable from it are built.
    """
    if t2.k_out != t1.k_in:
        raise AlphabetMismatch(f"cannot feed {t2.k_out}-ary output into {t1.k_in}-ary input")

    def name(p: str, q: str) -> str:
        return f"({p},{q})"

    if start is None:
        pairs = [(p, q) for p in t1.table for q in t2.table]
    else:
        t1._check_state(start[0])
        t2._check_state(start[1])
        pairs = [start]
    table: Dict[str, Row] = {}
    queue = deque(pairs)
    seen = set(pairs)
    while queue:
        p, q = queue.popleft()
        row = []
        for x in range(t2.k_in):
            q2, y = t2.table[q][x]
            p2, z = t1.table[p][y]
            row.append((name(p2, q2), z))
            if (p2, q2) not in seen:
                seen.add((p2, q2))
                queue.append((p2, q2))
        table[name(p, q)] = tuple(row)
    return Transducer(t2.k_in, t1.k_out, table)


def disjoint_union(*machines: Transducer, prefixes: Optional[Sequence[str]] = None) -> Transducer:
    """Put several machines side by side; state ``q`` of machine ``i`` becomes ``prefix_i + q``."""
    if len({(t.k_in, t.k_out) for t in machines}) > 1:
        raise AlphabetMismatch("machines in a union must share alphabets")
    prefixes = list(prefixes) if prefixes is not None else [f"{i}:" for i in range(len(machines))]
    table: Dict[str, Row] = {}
    for pre, t in zip(prefixes, machines):
        for q, row in t.table.items():
            table[pre + q] = tuple((pre + p, y) for p, y in row)
    return Transducer(machines[0].k_in, machines[0].k_out, table)


def bisimulation_classes(t: Transducer) -> List[Tuple[str, ...]]:
    """Coarsest partition of the states into classes defining the same tree morphism.

    Classes are returned sorted, each as a sorted tuple of state names.
    """
    states = list(t.table)
    ids: Dict[object, int] = {}
    block = {q: ids.setdefault(t.output_row(q), len(ids)) for q in states}
    count = len(ids)
    while True:
        ids = {}
        block = {
            q: ids.setdefault((block[q], tuple(block[p] for p, _ in t.table[q])), len(ids))
            for q in states
        }
        if len(ids) == count:
            break
        count = len(ids)
    classes: Dict[int, List[str]] = {}
    for q in states:
        classes.setdefault(block[q], []).append(q)
    return sorted(tuple(sorted(c)) for c in classes.values())


def states_equivalent(t: Transducer, p: str, q: str) -> bool:
    t._check_state(p)
    t._check_state(q)
    for c in bisimulation_classes(t):
        if p in c:
            return q in c
    raise AssertionError("unreachable")


def quotient(t: Transducer) -> Tuple[Transducer, Dict[str, str]]:
    """Merge bisimilar states; returns the quotient and the state -> representative map."""
    rep: Dict[str, str] = {}
    for c in bisimulation_classes(t):
        for q in c:
            rep[q] = c[0]
    table = {
        q: tuple((rep[p], y) for p, y in row) for q, row in t.table.items() if rep[q] == q
    }
    return Transducer(t.k_in, t.k_out, table), rep


def canonical(t: Transducer, q: str) -> Transducer:
    """Minimal machine of the morphism ``q`` with states renamed ``s0, s1, ...`` in BFS order.

    Two states define the same morphism iff their canonical machines are equal.
    """
    small, rep = quotient(t.restrict([q]))
    order = small.reachable(rep[q])
    return small.rename({p: f"s{i}" for i, p in enumerate(order)})


# -- text format -------------------------------------------------------------


def serialize_transducer(t: Transducer) -> str:
    lines = [f"transducer {t.k_in} {t.k_out}"]
    for q in sorted(t.table):
        lines.append(f"state {q}")
        for x, (p, y) in enumerate(t.table[q]):
            lines.append(f"{q} {x} -> {p} {y}")
    return "\n".join(lines) + "\n"


def serialize_automaton(a: FinalStateAutomaton) -> str:
    lines = [f"automaton {a.k}", f"initial {a.initial}"]
    for q in sorted(a.delta):
        lines.append(f"state {q} {a.out[q]:+d}")
        for x, p in enumerate(a.delta[q]):
            lines.append(f"{q} {x} -> {p}")
    return "\n".join(lines) + "\n"


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TransducerSyntaxError(lineno, f"expected an integer, got {tok!r}") from None


def parse_machine(text: str):
    """Parse either text format, dispatching on the header keyword."""
    for _, toks in _tokens(text):
        if toks[0] == "automaton":
            return parse_automaton(text)
        return parse_transducer(text)
    raise TransducerSyntaxError(1, "empty machine description")


def parse_transducer(text: str) -> Transducer:
    lines = list(_tokens(text))
    if not lines:
        raise TransducerSyntaxError(1, "empty transducer description")
    lineno, head = lines[0]
    if len(head) != 3 or head[0] != "transducer":
        raise TransducerSyntaxError(lineno, "expected 'transducer <k_in> <k_out>'")
    k_in, k_out = _int(head[1], lineno), _int(head[2], lineno)
    states: Dict[str, Dict[int, Tuple[str, int]]] = {}
    edges = []
    for lineno, toks in lines[1:]:
        if toks[0] == "state":
            if len(toks) != 2:
                raise TransducerSyntaxError(lineno, "expected 'state <name>'")
            if toks[1] in states:
                raise TransducerSyntaxError(lineno, f"state {toks[1]!r} declared twice")
            states[toks[1]] = {}
        elif len(toks) == 5 and toks[2] == "->":
            edges.append((lineno, toks[0], _int(toks[1], lineno), toks[3], _int(toks[4], lineno)))
        else:
            raise TransducerSyntaxError(lineno, f"cannot parse {' '.join(toks)!r}")
    for lineno, q, x, p, y in edges:
        if q not in states:
            raise UnknownState(q)
        if p not in states:
            raise UnknownState(p)
        if not 0 <= x < k_in or not 0 <= y < k_out:
            raise TransducerSyntaxError(lineno, "letter outside declared alphabet")
        if x in states[q]:
            raise TransducerSyntaxError(lineno, f"duplicate transition ({q}, {x})")
        states[q][x] = (p, y)
    for q, row in states.items():
        for x in range(k_in):
            if x not in row:
                raise IncompleteTable(q, x)
    return Transducer(k_in, k_out, {q: tuple(row[x] for x in range(k_in)) for q, row in states.items()})


def parse_automaton(text: str) -> FinalStateAutomaton:
    lines = list(_tokens(text))
    if not lines:
        raise TransducerSyntaxError(1, "empty automaton description")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "automaton":
        raise TransducerSyntaxError(lineno, "expected 'automaton <k>'")
    k = _int(head[1], lineno)
    initial = None
    out: Dict[str, int] = {}
    delta: Dict[str, Dict[int, str]] = {}
    edges = []
    for lineno, toks in lines[1:]:
        if toks[0] == "initial" and len(toks) == 2:
            initial = toks[1]
        elif toks[0] == "state" and len(toks) == 3:
            if toks[2] not in ("+1", "-1", "1"):
                raise TransducerSyntaxError(lineno, "state output must be +1 or -1")
            out[toks[1]] = int(toks[2])
            delta[toks[1]] = {}
        elif len(toks) == 4 and toks[2] == "->":
            edges.append((lineno, toks[0], _int(toks[1], lineno), toks[3]))
        else:
            raise TransducerSyntaxError(lineno, f"cannot parse {' '.join(toks)!r}")
    if initial is None:
        raise TransducerSyntaxError(1, "missing 'initial <name>'")
    for lineno, q, x, p in edges:
        if q not in delta:
            raise UnknownState(q)
        if p not in delta:
            raise UnknownState(p)
        if not 0 <= x < k:
            raise TransducerSyntaxError(lineno, "letter outside declared alphabet")
        delta[q][x] = p
    for q, row in delta.items():
        for x in range(k):
            if x not in row:
                raise IncompleteTable(q, x)
    return FinalStateAutomaton(k, initial, {q: tuple(r[x] for x in range(k)) for q, r in delta.items()}, out)
