"""Self-checks runnable from the command line, scaled by a depth parameter.

Each check recomputes a family of identities with independent routes and
reports one line. ``depth`` bounds levels and index ranges (``3^depth``
terms for ternary families) so that small depths run in seconds.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import catalog, hanoi, semigroup
from . import sequences as seq
from .automata import bisimulation_classes, product
from .words import from_digits_lsd


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _sequences(depth: int) -> List[Check]:
    checks = []
    a = seq.a_sequence(0, 27)
    listed = [1, 3, 1, 1, 9, 1, 1, 3, 1, 1, 3, 1, 1, 27, 1, 1, 3, 1, 1, 3, 1, 1, 9, 1, 1, 3, 1]
    checks.append(Check("AT sequence", a == listed, "first 27 terms"))

    n = 3**depth
    w = seq.w_sequence(0, n)
    ok = (
        w == seq.morphic_limit(seq.W_ALPHA, n)
        == seq.block_sequence("W", depth)
        == [seq.sign_by_ternary_digits(i) for i in range(n)]
    )
    checks.append(Check("w four-way agreement", ok and w[:9] == [1, 1, -1, 1, 1, -1, 1, -1, -1], f"{n} terms"))

    cube_len = 3 ** min(depth, 7)
    checks.append(Check("w cube-free", seq.is_cube_free(seq.w_sequence(0, cube_len)), f"{cube_len} terms"))

    ell = seq.l_sequence(0, n)
    ok = (
        ell == [seq.l_decomposition(i).ell for i in range(n)]
        == seq.partial_sums(0, n) == seq.morphic_limit(seq.L_SYSTEM, n)
    )
    checks.append(Check("L-sequence four-way agreement", ok and ell[0] == 0, f"{n} terms"))
    return checks


def _is_gray(rows) -> bool:
    return len(set(rows)) == len(rows) and all(
        sum(x != y for x, y in zip(u, v)) == 1 for u, v in zip(rows, rows[1:])
    )


def _gray(depth: int) -> List[Check]:
    checks = []
    ok = all(_is_gray([hanoi.gray_row(3, i, m) for i in range(3**m)]) for m in range(1, depth + 1))
    ok = ok and all(_is_gray([hanoi.gray_row(2, i, m) for i in range(2**m)]) for m in range(1, depth + 6))
    k3 = [from_digits_lsd(hanoi.gray_row(3, i, 3), 3) for i in range(18)]
    ok = ok and k3 == [0, 1, 2, 5, 4, 3, 6, 7, 8, 17, 16, 15, 12, 13, 14, 11, 10, 9]
    checks.append(Check("Gray codes K_n, M_n", ok, f"K up to n={depth}, M up to n={depth + 5}"))

    ok = list(hanoi.alternation_rows(("a", "c"), depth)) == [hanoi.gray_row(3, i, depth) for i in range(3**depth)]
    m = depth + 3
    ok = ok and list(hanoi.alternation_rows(("f", "g"), m)) == [hanoi.gray_row(2, i, m) for i in range(2**m)]
    checks.append(Check("alternation identities", ok, f"ternary n={depth}, binary n={m}"))

    al2 = catalog.transducer("AL2")
    sf = [seq.sf_transducer_value(al2, "l0", i, m) for i in range(2**m)]
    ok = sf[:8] == [0, 1, 3, 2, 6, 7, 5, 4] and sf == [from_digits_lsd(hanoi.gray_row(2, i, m), 2) for i in range(2**m)]
    checks.append(Check("lamplighter Gray identity", ok, f"{2 ** m} terms"))

    n = 3**depth
    steps = [hanoi.b_step(i) for i in range(n)]
    checks.append(Check("b-direction equals w", [s.direction for s in steps] == seq.w_sequence(0, n), f"{n} terms"))
    a = seq.a_sequence(0, n)
    measured = [s.index_distance for s in steps]
    first_diff = next((i for i, (b, x) in enumerate(zip(measured, a)) if b != x), None)
    note = "b_i = a_i holds" if first_diff is None else (
        f"b_i = a_i fails first at i={first_diff} "
        f"(b={measured[first_diff]}, a={a[first_diff]})"
    )
    checks.append(Check("b-change index equals 2*a", measured == [2 * x for x in a], note))
    return checks


def _hanoi(depth: int) -> List[Check]:
    ok = True
    for n in range(1, min(depth, 7) + 1):
        g = hanoi.schreier_graph(n)
        for x, y in catalog.PEG_PAIRS:
            dx = hanoi.distances_from(g, (x,) * n)
            dy = hanoi.distances_from(g, (y,) * n)
            for i in range(2**n):
                c = hanoi.optimal_config(x, y, n, i)
                r = hanoi.recognize_optimal(c, x, y)
                ok = ok and c == hanoi.optimal_config_gray(x, y, n, i) and dx[c] == i
                ok = ok and dx[c] + dy[c] == 2**n - 1 and r.accepted and r.distance == i
    ok = ok and hanoi.optimal_config(0, 1, 5, 22) == (2, 0, 0, 2, 1)
    ok = ok and hanoi.recognize_optimal((2, 0, 0, 2, 1), 0, 1).distance == 22
    ok = ok and hanoi.recognize_optimal((2, 0, 0, 2, 1), 1, 0).distance == 9
    rej = hanoi.recognize_optimal((1, 0, 0, 2, 1), 0, 1)
    ok = ok and not rej.accepted and rej.consumed == 4
    checks = [Check("optimal configurations", ok, f"n <= {min(depth, 7)}, all peg pairs")]
    ok = (hanoi.geodesic_integer_sequence("odd", 8) == [0, 1, 7, 8, 17, 15, 12, 13]
          and hanoi.geodesic_integer_sequence("even", 8) == [0, 2, 5, 4, 22, 21, 24, 26])
    checks.append(Check("A055661 parity split", ok))
    return checks


def _semigroup(depth: int) -> List[Check]:
    al, ah = catalog.transducer("AL"), catalog.transducer("AH")
    ok = semigroup.verify_relation(al, "alpha alpha", "alpha") and semigroup.verify_relation(al, "alpha beta", "beta")
    ok = ok and semigroup.distinct_powers(al, "beta", 2 * depth)
    ok = ok and semigroup.growth_counts(al, ["alpha", "beta"], depth) == [2 * L for L in range(1, depth + 1)]
    ok = ok and all(semigroup.element_order(ah, g, 10) == 2 for g in "abc")
    ok = ok and semigroup.element_order(ah, "c a", 100) is None
    ok = ok and semigroup.level_transitive(ah, "abc", depth) and semigroup.level_transitive(ah, "ac", depth)
    return [Check("semigroup suite", ok, f"depth {depth}")]


def _engine(depth: int) -> List[Check]:
    rng = random.Random(depth)
    cases = 200 * depth
    names = ["AH", "AL", "AT", "AD", "AL2", "OH", "OHprime"]
    machines = {n: catalog.transducer(n) for n in names}
    ok = True
    for _ in range(cases):
        t = machines[rng.choice(names)]
        q = rng.choice(t.states)
        u = tuple(rng.randrange(t.k_in) for _ in range(rng.randrange(8)))
        v = tuple(rng.randrange(t.k_in) for _ in range(rng.randrange(8)))
        full = t.apply(q, u + v)
        ok = ok and len(full) == len(u + v) and full[: len(u)] == t.apply(q, u)
    pairs = [(a, b) for a in names for b in names if machines[b].k_out == machines[a].k_in]
    for _ in range(cases):
        a, b = rng.choice(pairs)
        t1, t2 = machines[a], machines[b]
        p, q = rng.choice(t1.states), rng.choice(t2.states)
        w = tuple(rng.randrange(t2.k_in) for _ in range(rng.randrange(13)))
        ok = ok and product(t1, t2).apply(f"({p},{q})", w) == t1.apply(p, t2.apply(q, w))
    for name in ("AH", "AD", "AL2", "OH", "OHprime"):
        t = machines[name]
        inv = t.invert()
        for q in t.states:
            for length in range(min(depth, 6) + 1):
                for w in itertools.product(range(t.k_in), repeat=length):
                    ok = ok and inv.apply_partial(q, t.apply(q, w)).output == w
    prod = product(machines["AH"], machines["AH"])
    ok = ok and any("(a,a)" in c and "(id,id)" in c for c in bisimulation_classes(prod))
    return [Check("engine properties", ok, f"{cases} random cases per property")]


SUITES: Dict[str, Callable[[int], List[Check]]] = {
    "sequences": _sequences,
    "gray": _gray,
    "hanoi": _hanoi,
    "semigroup": _semigroup,
    "engine": _engine,
}


def run_suite(name: str, depth: int) -> List[Check]:
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(depth)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](depth)

