"""Exact checks on semigroups and groups generated by transducer states.

A generator word ``g1 g2 ... gm`` denotes the composite morphism
``g1 . g2 . ... . gm`` (rightmost applied first). Composites are realized as
states of reduced product machines, so every equality below is decided by
bisimulation rather than by sampling words.
"""
from __future__ import annotations

import re
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .automata import (
    Transducer,
    TransducerClass,
    canonical,
    disjoint_union,
    product,
    states_equivalent,
)
from .errors import AlphabetMismatch, NotInvertible, ResourceLimit, UnknownState

STATE_BUDGET = 10**6

Element = Tuple[Transducer, str]


def parse_generator_word(text: str) -> Tuple[str, ...]:
    """Split ``"alpha·beta"`` or ``"alpha beta"`` into state names."""
    letters = tuple(s for s in re.split(r"[\s·]+", text.strip()) if s)
    if not letters:
        raise ValueError("generator word must be nonempty")
    return letters


def endomorphic(t: Transducer) -> Transducer:
    """View ``t`` as acting on its input tree; a smaller output tree embeds in the larger one."""
    if t.k_out == t.k_in:
        return t
    if t.k_out < t.k_in:
        return t.widen(t.k_in)
    raise AlphabetMismatch(f"{t.k_in} -> {t.k_out} transducer does not act on one tree")


def identity_machine(k: int) -> Transducer:
    return Transducer(k, k, {"id": tuple(("id", x) for x in range(k))})


def compose(outer: Element, inner: Element) -> Element:
    """Reduced machine for ``outer . inner`` with its state named ``s0``."""
    (m1, s1), (m2, s2) = outer, inner
    prod = product(m1, m2, start=(s1, s2))
    if len(prod.table) > STATE_BUDGET:
        raise ResourceLimit(f"product machine exceeds {STATE_BUDGET} states")
    return canonical(prod, f"({s1},{s2})"), "s0"


def _as_word(t: Transducer, w) -> Tuple[str, ...]:
    word = parse_generator_word(w) if isinstance(w, str) else tuple(w)
    if not word:
        raise ValueError("generator word must be nonempty")
    for s in word:
        if s not in t.table:
            raise UnknownState(s)
    return word


def realize(t: Transducer, w: Sequence[str] | str) -> Element:
    """Machine and state realizing the composite morphism of the generator word ``w``."""
    word = _as_word(t, w)
    t = endomorphic(t)
    if len(word) == 1:
        return t, word[0]
    element = canonical(t, word[-1]), "s0"
    for g in reversed(word[:-1]):
        element = compose((t, g), element)
    return element


def equivalent(x: Element, y: Element) -> bool:
    union = disjoint_union(x[0], y[0], prefixes=("u:", "v:"))
    return states_equivalent(union, "u:" + x[1], "v:" + y[1])


def verify_relation(t: Transducer, u, v) -> bool:
    """True iff the generator words ``u`` and ``v`` denote the same morphism."""
    return equivalent(realize(t, u), realize(t, v))


def _signature(element: Element):
    machine, state = element
    return tuple(canonical(machine, state).table.items())


def distinct_powers(t: Transducer, q: str, max_m: int) -> bool:
    """True iff ``q, q^2, ..., q^max_m`` are pairwise different morphisms."""
    base = realize(t, [q])
    power = base
    seen = set()
    for m in range(1, max_m + 1):
        sig = _signature(power)
        if sig in seen:
            return False
        seen.add(sig)
        if m < max_m:
            power = compose(base, power)
    return True


def element_order(t: Transducer, w, bound: int) -> Optional[int]:
    """Least ``m <= bound`` with ``w^m`` the identity, or ``None``."""
    if t.classify() is not TransducerClass.INVERTIBLE:
        raise NotInvertible("element orders need an invertible transducer")
    base = realize(t, w)
    ident = (identity_machine(t.k_in), "id")
    power = base
    for m in range(1, bound + 1):
        if equivalent(power, ident):
            return m
        power = compose(base, power)
    return None


def growth_counts(t: Transducer, generators: Iterable[str], max_len: int) -> List[int]:
    """Number of distinct elements represented by generator words of length at most ``L``, for ``L = 1..max_len``."""
    gens = sorted(_as_word(t, list(generators)))
    t = endomorphic(t)
    seen: Dict[object, Element] = {}
    frontier: List[Element] = []
    counts = []
    budget = 0
    for length in range(1, max_len + 1):
        if length == 1:
            candidates = [(canonical(t, g), "s0") for g in gens]
        else:
            candidates = [compose((t, g), e) for e in frontier for g in gens]
        fresh: Dict[object, Element] = {}
        for e in candidates:
            budget += len(e[0].table)
            fresh.setdefault(_signature(e), e)
        if budget > STATE_BUDGET:
            raise ResourceLimit(f"growth census exceeded {STATE_BUDGET} product states")
        frontier = list(fresh.values())
        seen.update(fresh)
        counts.append(len(seen))
    return counts


def level_transitive(t: Transducer, generators: Iterable[str], n: int) -> bool:
    """True iff the orbit of ``0^n`` under the generated group is all of level ``n``."""
    if t.classify() is not TransducerClass.INVERTIBLE:
        raise NotInvertible("level transitivity needs an invertible transducer")
    gens = _as_word(t, list(generators))
    if t.k_in**n > STATE_BUDGET:
        raise ResourceLimit(f"level {n} has more than {STATE_BUDGET} vertices")
    start = (0,) * n
    orbit = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for g in gens:
            v = t.apply(g, u)
            if v not in orbit:
                orbit.add(v)
                queue.append(v)
    return len(orbit) == t.k_in**n
