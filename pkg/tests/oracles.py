"""Brute-force reference implementations used only by the tests.

None of these share code paths with the package beyond ``Transducer.apply``
where the oracle is explicitly about word actions.
"""
import itertools
import random
from collections import deque

from treeduce.automata import Transducer


def gray_matrix(base, n):
    """Rows of K_n (base 3) or M_n (base 2) by literal block stacking of columns."""
    rows = [(d,) for d in range(base)]
    for _ in range(n - 1):
        flipped = rows[::-1]
        new = []
        for d in range(base):
            block = flipped if d % 2 else rows
            new += [r + (d,) for r in block]
        rows = new
    return rows


def powers_of_three_oracle(i):
    """a_i = 3^(number of trailing ternary 1 digits of i)."""
    e = 0
    while i % 3 == 1:
        i //= 3
        e += 1
    return 3**e


def hanoi_moves(config):
    """Legal single-disk moves on a configuration word, simulated with peg stacks."""
    n = len(config)
    tops = {}
    for disk in range(n - 1, -1, -1):
        tops[config[disk]] = disk
    out = set()
    for src, disk in tops.items():
        for dst in range(3):
            if dst == src:
                continue
            if dst in tops and tops[dst] < disk:
                continue
            new = list(config)
            new[disk] = dst
            out.add(tuple(new))
    return out


def hanoi_distances(n, source):
    dist = {tuple(source): 0}
    queue = deque([tuple(source)])
    while queue:
        u = queue.popleft()
        for v in hanoi_moves(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def words(k, length):
    return itertools.product(range(k), repeat=length)


def agree_on_level(t1, p, t2, q, k, depth):
    """Compare two morphisms on every word of the given length (hence on all shorter ones)."""
    return all(t1.apply(p, w) == t2.apply(q, w) for w in words(k, depth))


def compose_action(t, gens, w):
    """Apply a generator word right to left by repeated single-state runs."""
    for g in reversed(gens):
        w = t.apply(g, w)
    return w


def random_transducer(rng: random.Random, n_states=None, k_in=None, k_out=None, clone=False):
    n_states = n_states or rng.randint(1, 6)
    k_in = k_in or rng.choice([2, 3])
    k_out = k_out or rng.choice([2, 3])
    names = [f"q{i}" for i in range(n_states)]
    table = {
        q: tuple((rng.choice(names), rng.randrange(k_out)) for _ in range(k_in)) for q in names
    }
    if clone and n_states > 1:
        # duplicate a state so some pairs are genuinely equivalent
        src = rng.choice(names[:-1])
        table[names[-1]] = table[src]
    return Transducer(k_in, k_out, table)


def agree_dfs(t, p, q, depth):
    """Walk every input word of length <= depth from p and q in lockstep, comparing output letters."""
    stack = [(p, q, 0)]
    while stack:
        u, v, d = stack.pop()
        if d == depth:
            continue
        for x in range(t.k_in):
            (u2, y1), (v2, y2) = t.table[u][x], t.table[v][x]
            if y1 != y2:
                return False
            stack.append((u2, v2, d + 1))
    return True


def random_injective_transducer(rng: random.Random, n_states=None, k_in=2, k_out=3):
    """Random transducer whose output rows are injective, so it has a partial inverse."""
    n_states = n_states or rng.randint(1, 5)
    names = [f"q{i}" for i in range(n_states)]
    table = {
        q: tuple(zip((rng.choice(names) for _ in range(k_in)), rng.sample(range(k_out), k_in)))
        for q in names
    }
    return Transducer(k_in, k_out, table)
