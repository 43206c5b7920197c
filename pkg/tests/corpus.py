"""Word corpora shared by the tests."""

from functools import lru_cache
from itertools import product

from hypothesis import strategies as st

from braidtk.braid import BraidWord, closure_summary, is_split
from braidtk.divides import OrderedMorseDivide


@lru_cache(maxsize=None)
def small_words(max_crossings: int = 8, max_strands: int = 4) -> tuple:
    out = []
    for n in range(2, max_strands + 1):
        for c in range(1, max_crossings + 1):
            out.extend(BraidWord(n, L) for L in product(range(1, n), repeat=c))
    return tuple(out)


@lru_cache(maxsize=None)
def knots(max_crossings: int = 8, max_strands: int = 4, max_betti: int = 12) -> tuple:
    out = []
    for w in small_words(max_crossings, max_strands):
        if is_split(w):
            continue
        s = closure_summary(w)
        if s.components == 1 and s.betti <= max_betti:
            out.append(w)
    return tuple(out)


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, min_size=1, max_size=10):
    n = draw(st.integers(min_strands, max_strands))
    letters = draw(st.lists(st.integers(1, n - 1), min_size=min_size, max_size=max_size))
    return BraidWord(n, tuple(letters))


def _cap_sets(N):
    """Sets of pairwise disjoint level pairs, as sorted tuples of j."""
    out = [()]
    for j in range(1, N):
        out += [c + (j,) for c in out if not c or c[-1] + 1 < j]
    return out


@lru_cache(maxsize=None)
def all_divides(max_lines: int = 4, max_crossings: int = 4) -> tuple:
    """Every event sequence of the ordered shape m* C* M*, valid or not."""
    out = []
    for N in range(1, max_lines + 1):
        caps = _cap_sets(N)
        for c in range(max_crossings + 1):
            for cross in product(range(1, N), repeat=c):
                for mins in caps:
                    for maxs in caps:
                        events = [("m", j) for j in mins] + [("C", j) for j in cross] + [("M", j) for j in maxs]
                        out.append(OrderedMorseDivide(N, tuple(events)))
    return tuple(out)


T25_WORD = BraidWord(4, (3, 1, 2, 1, 1, 3, 2))

# found by search over the counts: delta 3, three faces, one interval
T34_DIVIDE = "lines=4; events = m2 C1 C3 C2 M1 M3"
