"""Ordered Morse divides and their conversion to positive braids.

A divide is given by N horizontal levels scanned left to right: minima cap
adjacent levels on the left, crossings swap adjacent positions, maxima cap
on the right. Uncapped level ends run to the disk boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import BraidWord
from .errors import DivideError

# event kind -> generators emitted at level j, as offsets of j
EMISSION = {"C": (0, 0), "m": (0,), "M": (0,)}

_RANK = {"m": 0, "C": 1, "M": 2}


@dataclass(frozen=True)
class OrderedMorseDivide:
    lines: int
    events: tuple  # (kind, level), kind in "m", "C", "M"

    def __str__(self):
        return f"lines={self.lines}; events = " + " ".join(f"{k}{j}" for k, j in self.events)


@dataclass(frozen=True)
class DivideCounts:
    delta: int
    faces: int
    intervals: int
    mu: int

    def to_json(self) -> dict:
        return {"delta": self.delta, "faces": self.faces, "intervals": self.intervals, "mu": self.mu}


_HEAD = re.compile(r"\s*lines\s*=\s*(\d+)\s*;\s*events\s*=\s*(.*?)\s*$", re.S)


def parse_divide(text: str) -> OrderedMorseDivide:
    m = _HEAD.match(text)
    if not m:
        raise DivideError("malformed", "expected 'lines=N; events = ...'")
    events = []
    for tok in m.group(2).split():
        t = re.fullmatch(r"([CmM])(\d+)", tok)
        if not t:
            raise DivideError("malformed", f"bad event token {tok!r}")
        events.append((t.group(1), int(t.group(2))))
    return OrderedMorseDivide(int(m.group(1)), tuple(events))


def _check_shape(d: OrderedMorseDivide):
    N = d.lines
    if N < 1:
        raise DivideError("malformed", "need at least one line")
    last = 0
    for kind, j in d.events:
        if not 1 <= j <= N - 1:
            raise DivideError("non-generic", f"event {kind}{j} outside levels 1..{N}")
        if _RANK[kind] < last:
            raise DivideError("not-ordered-Morse", "events must read minima, crossings, maxima")
        last = _RANK[kind]
    for kind in "mM":
        used = set()
        for k, j in d.events:
            if k == kind:
                if used & {j, j + 1}:
                    raise DivideError(
                        "not-ordered-Morse",
                        f"{'minima' if kind == 'm' else 'maxima'} must cap disjoint level pairs",
                    )
                used |= {j, j + 1}
    # a pair capped on both sides encloses its slab: the caps would face an interior face
    both = {j for k, j in d.events if k == "m"} & {j for k, j in d.events if k == "M"}
    if both:
        j = min(both)
        raise DivideError("not-ordered-Morse", f"levels {j},{j + 1} are capped on both sides")


def _uf(n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    return find, union


def trace(d: OrderedMorseDivide):
    """Follow the immersed intervals.

    Nodes are the N left ends and N right ends of the level pieces; strands
    and caps join them. Returns (interval_of_strand, n_intervals, n_components)
    where strand s is the piece starting at left position s.
    """
    _check_shape(d)
    N = d.lines
    pos = list(range(N))  # strand currently at each position
    crossings = []
    for kind, j in d.events:
        if kind == "C":
            crossings.append((pos[j - 1], pos[j]))
            pos[j - 1], pos[j] = pos[j], pos[j - 1]
    find, union = _uf(2 * N)  # left end s -> s, right position p -> N + p
    degree = [1] * (2 * N)
    for p, strand in enumerate(pos):
        union(strand, N + p)
    for kind, j in d.events:
        if kind in "mM":
            base = 0 if kind == "m" else N
            union(base + j - 1, base + j)
            degree[base + j - 1] += 1
            degree[base + j] += 1
    roots = sorted({find(x) for x in range(2 * N)})
    for r in roots:
        if all(degree[x] == 2 for x in range(2 * N) if find(x) == r):
            raise DivideError("non-generic", "closed component: divides are unions of intervals")
    label = {r: k for k, r in enumerate(roots)}
    interval = [label[find(s)] for s in range(N)]
    cfind, cunion = _uf(len(roots))
    for a, b in crossings:
        cunion(interval[a], interval[b])
    comps = len({cfind(i) for i in range(len(roots))})
    return interval, len(roots), comps


def validate_divide(d: OrderedMorseDivide) -> DivideCounts:
    _, n, comps = trace(d)
    delta = sum(1 for k, _ in d.events if k == "C")
    # Euler characteristic of the divide together with the boundary circle
    faces = delta - n + comps
    return DivideCounts(delta, faces, n, delta + faces)


def vanishing_cycle_count(d: OrderedMorseDivide) -> int:
    return validate_divide(d).mu


def emit_letters(d: OrderedMorseDivide, table: dict = EMISSION) -> tuple:
    """Generators emitted event by event, without any validity check."""
    return tuple(j + off for kind, j in d.events for off in table[kind])


def divide_to_braid(d: OrderedMorseDivide, table: dict = EMISSION) -> BraidWord:
    _, _, comps = trace(d)
    if comps != 1:
        raise DivideError("disconnected-divide", f"divide has {comps} connected components")
    return BraidWord(d.lines, emit_letters(d, table))


def cycle_correspondence(d: OrderedMorseDivide) -> dict:
    """Bricks of the emitted word matched to divide cycles.

    Each crossing emits s_j s_j, whose two letters bound one brick; every
    other brick corresponds to a face.
    """
    from .linking import bricks

    w = divide_to_braid(d)
    pos = 0
    crossing_bricks = []
    for kind, j in d.events:
        width = len(EMISSION[kind])
        if kind == "C":
            crossing_bricks.append((j, pos, pos + 1))
        pos += width
    all_bricks = [(b.column, b.top, b.bottom) for b in bricks(w)]
    faces = [b for b in all_bricks if b not in crossing_bricks]
    return {"crossings": crossing_bricks, "faces": faces}
