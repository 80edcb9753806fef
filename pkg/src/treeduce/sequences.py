"""Integer and symbolic sequences produced by transducers, automata and substitutions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from . import catalog
from .automata import FinalStateAutomaton, Transducer
from .errors import ConfinalityViolation, NotProlongable, OracleFailure
from .words import check_width, from_digits_lsd, pad_to, reverse, to_digits_lsd


def output_base(t: Transducer) -> int:
    """Base in which output words are read.

    A ``k1 -> k2`` machine with ``k2 < k1`` is read as a ``k1``-ary
    endomorphism, since the smaller tree embeds in the larger one; this is
    what makes ``AL`` produce the L-sequence.
    """
    return max(t.k_in, t.k_out)


def transducer_value(t: Transducer, q: str, i: int) -> int:
    """The integer whose LSD-first numeral is ``q((i)_k)``, reading ``i`` followed by ``0^inf``."""
    digits = to_digits_lsd(i, t.k_in)
    out = t.apply(q, digits)
    tail = t.zero_ray_tail(t.state_after(q, digits))
    return from_digits_lsd(out + tail.transient, output_base(t))


def transducer_sequence(t: Transducer, q: str, lo: int, hi: int) -> List[int]:
    if lo > hi:
        raise ValueError("empty range must have lo <= hi")
    if not t.preserves_zero_confinality(q):
        raise ConfinalityViolation(f"state {q!r} does not map 0^inf-tails to 0^inf-tails")
    return [transducer_value(t, q, i) for i in range(lo, hi)]


def sf_transducer_value(t: Transducer, q: str, i: int, n: int) -> int:
    """Most-significant-digit-first variant at fixed padded length ``n``."""
    msd_first = reverse(pad_to(to_digits_lsd(i, t.k_in), n))
    return from_digits_lsd(reverse(t.apply(q, msd_first)), output_base(t))


def automatic_sequence(a: FinalStateAutomaton, lo: int, hi: int) -> List[int]:
    if lo > hi:
        raise ValueError("empty range must have lo <= hi")
    return [a.final_state_run(to_digits_lsd(i, a.k)) for i in range(lo, hi)]


# -- substitutions -----------------------------------------------------------

Rules = Union[Mapping[Hashable, Sequence[Hashable]], Callable[[Hashable], Sequence[Hashable]]]


@dataclass(frozen=True)
class MorphicSystem:
    """A substitution (given as a mapping or a callable) and a prolongable seed letter."""

    rules: Rules
    seed: Hashable

    def image(self, x) -> Tuple:
        rule = self.rules(x) if callable(self.rules) else self.rules[x]
        rule = tuple(rule)
        if not rule:
            raise NotProlongable(f"letter {x!r} maps to the empty word")
        return rule

    def check(self) -> None:
        head = self.image(self.seed)
        if len(head) < 2 or head[0] != self.seed:
            raise NotProlongable(f"seed {self.seed!r} is not a proper prefix of its image")


def morphic_limit(m: MorphicSystem, length: int) -> List:
    """First ``length`` letters of the fixed point ``lim m^n(seed)``.

    Uses ``u = m(u)``: the image of letter ``j`` of the prefix extends the
    prefix, so only ``O(length)`` letters are ever held.
    """
    if length < 1:
        raise ValueError("length must be positive")
    m.check()
    u = list(m.image(m.seed))
    j = 1
    while len(u) < length:
        u.extend(m.image(u[j]))
        j += 1
    return u[:length]


W_ALPHA = MorphicSystem({1: (1, 1, -1), -1: (1, -1, -1)}, 1)


def _ell_rule(x: int) -> Tuple[int, ...]:
    return (0, 1) if x == 0 else (3 * x + 1, 3 * x, 3 * x + 1)


L_SYSTEM = MorphicSystem(_ell_rule, 0)


def block_sequence(kind: str, n: int) -> List[int]:
    """Blocks of length ``3^n``: ``W`` gives ``w_[n]``, ``A`` gives ``a_[n]``."""
    if kind not in ("W", "A"):
        raise ValueError(f"unknown block kind {kind!r}")
    check_width(3**n)
    block = [1]
    for _ in range(n):
        mid = len(block) // 2
        primed = list(block)
        if kind == "W":
            primed[mid] = -primed[mid]
            block = block + block + primed
        else:
            primed[mid] = check_width(3 * primed[mid])
            block = block + primed + block
    return block


# -- word combinatorics ------------------------------------------------------


def find_cube(w: Sequence) -> Optional[Tuple[int, int]]:
    """Earliest ``(position, period)`` of a factor ``uuu``, or ``None`` if ``w`` is cube-free.

    For each period ``p`` a cube starts at ``i`` iff ``w[j] == w[j+p]`` on a
    run of ``2p`` consecutive ``j`` beginning at ``i``.
    """
    n = len(w)
    best = None
    for p in range(1, n // 3 + 1):
        run = 0
        for j in range(n - p):
            if w[j] == w[j + p]:
                run += 1
                if run == 2 * p:
                    start = j - 2 * p + 1
                    if best is None or start < best[0]:
                        best = (start, p)
                    break
            else:
                run = 0
            if best is not None and j - run + 1 >= best[0]:
                break
    return best


def is_cube_free(w: Sequence) -> bool:
    return find_cube(w) is None


def sign_by_ternary_digits(i: int) -> int:
    """-1 iff the least significant ternary digit of ``i`` that is not 1 is a 2."""
    while i % 3 == 1:
        i //= 3
    return -1 if i % 3 == 2 else 1


def is_in_n2(m: int) -> bool:
    """True iff the base-3 expansion of ``m`` avoids the digit 2."""
    while m:
        m, r = divmod(m, 3)
        if r == 2:
            return False
    return True


@lru_cache(maxsize=64)
def _n2_upto(bound: int) -> Tuple[int, ...]:
    out = [0]
    scale = 1
    while scale <= bound:
        out += [x + scale for x in out if x + scale <= bound]
        scale *= 3
    return tuple(sorted(out))


@dataclass(frozen=True)
class LDecomposition:
    n: int
    lplus: int
    lminus: int
    ell: int


def l_decomposition(n: int) -> LDecomposition:
    """Brute-force ``n = l+ - l-`` with ``l+``, ``l-``, ``l+ + l-`` all free of the ternary digit 2."""
    found = []
    for y in _n2_upto(9 * (n + 1)):
        x = n + y
        if is_in_n2(x) and is_in_n2(x + y):
            found.append(LDecomposition(n, x, y, x + y))
    if len(found) != 1:
        raise OracleFailure(f"expected one decomposition of {n}, found {len(found)}")
    return found[0]


def weighted_partial_sums(n: int) -> int:
    """``p_n``: sum of ``w_i * a_i`` over ``i < n``."""
    return partial_sums(0, n + 1)[-1]


def partial_sums(lo: int, hi: int) -> List[int]:
    """``[p_lo, ..., p_{hi-1}]`` computed with one running sum."""
    w = automatic_sequence(catalog.automaton("A02"), 0, max(hi - 1, 0))
    a = transducer_sequence(catalog.transducer("AT"), "s1", 0, max(hi - 1, 0))
    sums = [0]
    for wi, ai in zip(w, a):
        sums.append(check_width(sums[-1] + wi * ai))
    return sums[lo:hi]


# -- named sequences ---------------------------------------------------------


def w_sequence(lo: int, hi: int) -> List[int]:
    return automatic_sequence(catalog.automaton("A02"), lo, hi)


def a_sequence(lo: int, hi: int) -> List[int]:
    return transducer_sequence(catalog.transducer("AT"), "s1", lo, hi)


def l_sequence(lo: int, hi: int) -> List[int]:
    return transducer_sequence(catalog.transducer("AL"), "alpha", lo, hi)


def bfile(values: Sequence[int], origin: int = 0) -> str:
    """OEIS b-file text: one ``index value`` line per term."""
    return "".join(f"{origin + i} {v}\n" for i, v in enumerate(values))


def iter_bfile(text: str) -> Iterator[Tuple[int, int]]:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            i, v = line.split()[:2]
            yield int(i), int(v)
