"""Positive braid words, closure data and the move system."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    BraidSyntaxError,
    BudgetExhausted,
    LetterRangeError,
    MoveNotApplicable,
    PreconditionViolated,
)

DEFAULT_REDUCE_BUDGET = 10_000


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word on `strands` strands; letter i stands for sigma_i."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise LetterRangeError(f"strand count must be >= 1, got {self.strands}")
        for pos, x in enumerate(self.letters):
            if not 1 <= x <= self.strands - 1:
                raise LetterRangeError(
                    f"letter s{x} at index {pos} outside 1..{self.strands - 1}"
                )

    @classmethod
    def of(cls, letters: Iterable[int], strands: int | None = None) -> "BraidWord":
        letters = tuple(letters)
        if strands is None:
            strands = max(letters, default=0) + 1
        return cls(strands, letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_braid(self)


_TOKEN = re.compile(r"s(\d+)(?:\^(\d+))?")
_HEADER = re.compile(r"\s*N\s*=\s*(\d+)\s*;")


def parse_braid(text: str) -> BraidWord:
    """Parse `[N=<int>;] s<i>[^<k>] ...` into a flat word."""
    pos = 0
    declared = None
    m = _HEADER.match(text)
    if m:
        declared = int(m.group(1))
        pos = m.end()
    letters = []
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise BraidSyntaxError(f"expected term 's<int>[^<int>]', got {text[pos:pos + 8]!r}", pos)
        end = m.end()
        if end < n and not text[end].isspace():
            raise BraidSyntaxError(f"unexpected character {text[end]!r}", end)
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp < 1:
            raise BraidSyntaxError("exponent must be >= 1", m.start(2))
        if idx < 1:
            raise LetterRangeError(f"generator index must be >= 1, got s{idx}")
        letters.extend([idx] * exp)
        pos = end
    if not letters:
        raise BraidSyntaxError("empty braid word", pos)
    if declared is None:
        return BraidWord(max(letters) + 1, tuple(letters))
    if max(letters) > declared - 1:
        raise LetterRangeError(f"letter s{max(letters)} out of range for N={declared}")
    return BraidWord(declared, tuple(letters))


def format_braid(w: BraidWord, declare: bool = True) -> str:
    """Inverse of parse_braid, using run-length exponents."""
    parts = []
    i = 0
    L = w.letters
    while i < len(L):
        j = i
        while j < len(L) and L[j] == L[i]:
            j += 1
        parts.append(f"s{L[i]}" if j - i == 1 else f"s{L[i]}^{j - i}")
        i = j
    body = " ".join(parts)
    if declare and (not L or w.strands != max(L) + 1):
        return f"N={w.strands}; {body}".rstrip()
    return body


# ---------------------------------------------------------------- closure

def permutation(w: BraidWord) -> tuple:
    """Image of each strand 1..N after reading the word left to right."""
    pos = list(range(w.strands + 1))  # pos[p] = strand currently at position p
    for i in w.letters:
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    # strand pos[p] ends at position p
    out = [0] * (w.strands + 1)
    for p in range(1, w.strands + 1):
        out[pos[p]] = p
    return tuple(out[1:])


def cycle_count(perm: tuple) -> int:
    seen = [False] * len(perm)
    count = 0
    for s in range(len(perm)):
        if not seen[s]:
            count += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s] - 1
    return count


def used_columns(w: BraidWord) -> set:
    return set(w.letters)


def is_split(w: BraidWord) -> bool:
    return len(used_columns(w)) < w.strands - 1


def surface_components(w: BraidWord) -> int:
    """Connected components of the disk-and-band surface."""
    return w.strands - len(used_columns(w))


@dataclass(frozen=True)
class ClosureSummary:
    strands: int
    crossings: int
    permutation: tuple
    components: int
    betti: int
    genus: Fraction
    split: bool
    prime: bool

    def to_json(self) -> dict:
        g = self.genus
        return {
            "strands": self.strands,
            "crossings": self.crossings,
            "permutation": {str(i + 1): p for i, p in enumerate(self.permutation)},
            "components": self.components,
            "betti": self.betti,
            "genus": int(g) if g.denominator == 1 else str(g),
            "split": self.split,
            "prime": self.prime,
        }


def closure_summary(w: BraidWord) -> ClosureSummary:
    from .linking import is_prime

    perm = permutation(w)
    r = cycle_count(perm)
    k = surface_components(w)
    b1 = len(w.letters) - w.strands + k
    # total genus over surface components; equals (b1 - r + 1)/2 when connected
    g = Fraction(b1 - r + k, 2)
    return ClosureSummary(
        strands=w.strands,
        crossings=len(w.letters),
        permutation=perm,
        components=r,
        betti=b1,
        genus=g,
        split=k > 1,
        prime=is_prime(w),
    )


# ---------------------------------------------------------------- moves

KINDS = (
    "FarCommutation",
    "BraidRelation",
    "ElementaryConjugation",
    "MarkovStabilize",
    "MarkovDestabilize",
    "StrandReduction",
)


@dataclass(frozen=True)
class Move:
    """A replayable rewrite. `position` is a letter index (or column for StrandReduction)."""

    kind: str
    position: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")

    def to_json(self):
        return [self.kind, self.position]

    @classmethod
    def from_json(cls, obj) -> "Move":
        kind, position = obj
        if not isinstance(position, int) or isinstance(position, bool):
            raise ValueError("move position must be an integer")
        return cls(kind, position)


def apply_move(w: BraidWord, m: Move) -> BraidWord:
    L = list(w.letters)
    p = m.position
    if m.kind == "FarCommutation":
        if not 0 <= p < len(L) - 1:
            raise MoveNotApplicable(f"FarCommutation position {p} out of range")
        if abs(L[p] - L[p + 1]) < 2:
            raise MoveNotApplicable(f"letters s{L[p]} s{L[p + 1]} do not commute")
        L[p], L[p + 1] = L[p + 1], L[p]
        return BraidWord(w.strands, L)
    if m.kind == "BraidRelation":
        if not 0 <= p < len(L) - 2:
            raise MoveNotApplicable(f"BraidRelation position {p} out of range")
        a, b, c = L[p:p + 3]
        if a != c or abs(a - b) != 1:
            raise MoveNotApplicable(f"s{a} s{b} s{c} is not a braid relation pattern")
        L[p:p + 3] = [b, a, b]
        return BraidWord(w.strands, L)
    if m.kind == "ElementaryConjugation":
        if not L:
            raise MoveNotApplicable("cannot rotate the empty word")
        if p not in (0, 1):
            raise MoveNotApplicable("ElementaryConjugation direction must be 0 or 1")
        # 0: first letter to the end; 1: last letter to the front
        L = L[1:] + L[:1] if p == 0 else L[-1:] + L[:-1]
        return BraidWord(w.strands, L)
    if m.kind == "MarkovStabilize":
        if p != 0:
            raise MoveNotApplicable("MarkovStabilize takes no position")
        return BraidWord(w.strands + 1, L + [w.strands])
    if m.kind == "MarkovDestabilize":
        top = w.strands - 1
        hits = [q for q, x in enumerate(L) if x == top]
        if w.strands < 2 or len(hits) != 1:
            raise MoveNotApplicable(
                f"s{top} occurs {len(hits)} times; destabilization needs exactly one"
            )
        del L[hits[0]]
        return BraidWord(w.strands - 1, L)
    if m.kind == "StrandReduction":
        try:
            return strand_reduce(w, p)
        except (PreconditionViolated, BudgetExhausted) as exc:
            raise MoveNotApplicable(str(exc)) from exc
    raise MoveNotApplicable(m.kind)  # pragma: no cover


def replay(w: BraidWord, moves: Iterable[Move]) -> BraidWord:
    for m in moves:
        w = apply_move(w, m)
    return w


def neighbours(w: BraidWord) -> Iterator[tuple]:
    """Yield (move, word) for every closure-preserving rewrite on N strands."""
    L = w.letters
    n = len(L)
    for p in range(n - 1):
        if abs(L[p] - L[p + 1]) >= 2:
            yield Move("FarCommutation", p), BraidWord(w.strands, L[:p] + (L[p + 1], L[p]) + L[p + 2:])
    for p in range(n - 2):
        a, b, c = L[p:p + 3]
        if a == c and abs(a - b) == 1:
            yield Move("BraidRelation", p), BraidWord(w.strands, L[:p] + (b, a, b) + L[p + 3:])
    if n > 1:
        yield Move("ElementaryConjugation", 0), BraidWord(w.strands, L[1:] + L[:1])


def canonical_form(letters: tuple) -> tuple:
    """Lexicographically least cyclic rotation."""
    if not letters:
        return ()
    n = len(letters)
    doubled = letters + letters
    return min(doubled[k:k + n] for k in range(n))


def flip(w: BraidWord) -> BraidWord:
    """Conjugate by the half twist: sigma_i -> sigma_{N-i}."""
    return BraidWord(w.strands, tuple(w.strands - x for x in w.letters))


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(reversed(w.letters)))


def symmetry_orbit(w: BraidWord) -> list:
    return [w, flip(w), reverse(w), flip(reverse(w))]


# ---------------------------------------------------------------- strand reduction

def column_subword(w: BraidWord, i: int) -> BraidWord:
    """Letters s_i, s_{i+1} of w renumbered as a 3-braid."""
    return BraidWord(3, tuple(x - i + 1 for x in w.letters if x in (i, i + 1)))


def destabilize_column(w: BraidWord, k: int) -> BraidWord:
    """Remove the unique s_k; the two sides merge into a connected sum on N-1 strands."""
    hits = [q for q, x in enumerate(w.letters) if x == k]
    if len(hits) != 1:
        raise MoveNotApplicable(f"s{k} occurs {len(hits)} times")
    q = hits[0]
    rot = w.letters[q + 1:] + w.letters[:q]
    left = tuple(x for x in rot if x < k)
    right = tuple(x - 1 for x in rot if x > k)
    return BraidWord(w.strands - 1, left + right)


def heap_predecessors(letters: tuple) -> list:
    """Bitmask per letter of the letters forced before it under far commutation."""
    out = []
    for t, x in enumerate(letters):
        m = 0
        for s in range(t):
            if abs(letters[s] - x) <= 1:
                m |= out[s] | (1 << s)
        out.append(m)
    return out


def slide_split(letters: tuple, i: int):
    """Find A, B with letters = A s_{i+1} s_i B up to far commutation,
    A in columns <= i and B in columns >= i+1."""
    P = heap_predecessors(letters)
    n = len(letters)
    for p in range(n):
        if letters[p] != i + 1:
            continue
        for q in range(p + 1, n):
            if letters[q] != i or not (P[q] >> p) & 1:
                continue
            ok = True
            for z in range(n):
                if z == p or z == q:
                    continue
                if letters[z] >= i + 1:
                    ok = not ((P[p] >> z) & 1 or (P[q] >> z) & 1)
                else:
                    ok = not ((P[z] >> p) & 1 or (P[z] >> q) & 1)
                if not ok:
                    break
            if ok:
                rest = [letters[z] for z in range(n) if z != p and z != q]
                return tuple(x for x in rest if x <= i), tuple(x for x in rest if x > i)
    return None


def band_slide(w: BraidWord, i: int):
    """Apply the strand-removing band slide if some rotation of w has the required shape."""
    n = len(w.letters)
    for k in range(max(n, 1)):
        rot = w.letters[k:] + w.letters[:k]
        hit = slide_split(rot, i)
        if hit:
            A, B = hit
            return BraidWord(w.strands - 1, A + (i,) + tuple(x - 1 for x in B))
        # mirror shape A s_i s_{i+1} B with A right of the columns, B left
        hit = slide_split(rot[::-1], i)
        if hit:
            A, B = hit
            out = A + (i,) + tuple(x - 1 for x in B)
            return BraidWord(w.strands - 1, out[::-1])
    return None


def strand_reduce(w: BraidWord, i: int, budget: int = DEFAULT_REDUCE_BUDGET) -> BraidWord:
    """Remove one strand using a path-shaped subword on columns i, i+1.

    Searches braid relations and rotations for a word of the form
    A s_{i+1} s_i B (A left of column i+1, B right of column i, up to far
    commutation) or its mirror, then slides the band to get A s_i B'.
    """
    from .linking import is_path_graph, is_prime, linking_graph

    if w.strands < 3:
        raise PreconditionViolated(f"need at least 3 strands, got {w.strands}")
    if not 1 <= i <= w.strands - 2:
        raise PreconditionViolated(f"column {i} must lie in 1..{w.strands - 2}")
    if not is_prime(w):
        raise PreconditionViolated("braid is not prime")
    if not is_path_graph(linking_graph(column_subword(w, i))):
        raise PreconditionViolated(f"subword on columns {i},{i + 1} is not a path")

    seen = {canonical_form(w.letters)}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        out = band_slide(cur, i)
        if out is not None:
            return out
        for _, nxt in neighbours(cur):
            key = canonical_form(nxt.letters)
            if key in seen:
                continue
            if len(seen) >= budget:
                raise BudgetExhausted(f"normalization exceeded {budget} states")
            seen.add(key)
            queue.append(nxt)
    raise BudgetExhausted("normalization search exhausted without reaching the slide shape")


# ---------------------------------------------------------------- half twist

def half_twist(n: int) -> BraidWord:
    """Delta_n = (s1)(s2 s1)(s3 s2 s1)...; empty for n = 1."""
    letters = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def left_divide(letters: tuple, i: int, _memo=None):
    """Return u with s_i u = letters in the positive monoid, or None."""
    if _memo is None:
        _memo = {}
    key = (letters, i)
    if key in _memo:
        return _memo[key]
    res = None
    if letters:
        j, rest = letters[0], letters[1:]
        if j == i:
            res = rest
        elif abs(i - j) >= 2:
            r = left_divide(rest, i, _memo)
            res = None if r is None else (j,) + r
        else:
            r1 = left_divide(rest, i, _memo)
            r2 = None if r1 is None else left_divide(r1, j, _memo)
            # s_j s_i s_j r2 = s_i s_j s_i r2
            res = None if r2 is None else (j, i) + r2
    _memo[key] = res
    return res


def half_twist_divides(w: BraidWord) -> bool:
    """Delta_N is the lcm of the generators, so it divides w iff every s_i does."""
    memo = {}
    return all(left_divide(w.letters, i, memo) is not None for i in range(1, w.strands))


def word_class(w: BraidWord, limit: int = 100_000) -> set:
    """All positive words equal to w (relations only, no rotation)."""
    seen = {w.letters}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for m, nxt in neighbours(cur):
            if m.kind == "ElementaryConjugation":
                continue
            if nxt.letters not in seen:
                if len(seen) >= limit:
                    raise BudgetExhausted("word class too large")
                seen.add(nxt.letters)
                queue.append(nxt)
    return seen
