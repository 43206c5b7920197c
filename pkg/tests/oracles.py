"""Independent reference computations used only by the test suite."""

import itertools
from collections import deque

import numpy as np
from scipy import ndimage

from braidtk.braid import BraidWord


def permutation_cycles(letters, n):
    """Cycle count of the strand permutation, by explicit position tracking."""
    where = list(range(n))  # where[s] = current position of strand s
    for i in letters:
        a = where.index(i - 1)
        b = where.index(i)
        where[a], where[b] = i, i - 1
    seen, cycles = set(), 0
    for s in range(n):
        if s in seen:
            continue
        cycles += 1
        while s not in seen:
            seen.add(s)
            s = where[s]
    return cycles


def raster_faces(d):
    """Count bounded regions of a rasterized ordered Morse divide.

    Levels are horizontal lines 4 pixels apart; each crossing is an X drawn
    with one-pixel diagonals; caps are vertical bars. Regions that reach the
    image border touch the disk boundary.
    """
    N = d.lines
    mins = [j for k, j in d.events if k == "m"]
    maxs = [j for k, j in d.events if k == "M"]
    cross = [j for k, j in d.events if k == "C"]
    width = 8 + 6 * len(cross) + 8
    height = 4 * N + 1
    img = np.zeros((height, width), dtype=bool)

    def y(level):
        return 2 + 4 * (level - 1)

    left_capped = {j for m in mins for j in (m, m + 1)}
    right_capped = {j for m in maxs for j in (m, m + 1)}
    x0, x1 = 3, width - 4
    for lev in range(1, N + 1):
        start = x0 if lev in left_capped else 0
        end = x1 if lev in right_capped else width - 1
        img[y(lev), start:x0 + 3] = True
        img[y(lev), width - 4 - 3:end + 1] = True
    for m in mins:
        img[y(m):y(m + 1) + 1, x0] = True
    for m in maxs:
        img[y(m):y(m + 1) + 1, x1] = True
    x = x0 + 3
    for j in cross:
        for lev in range(1, N + 1):
            if lev not in (j, j + 1):
                img[y(lev), x:x + 7] = True
        img[y(j), x] = img[y(j + 1), x] = True
        for t in range(5):
            img[y(j) + t, x + 1 + t] = True
            img[y(j + 1) - t, x + 1 + t] = True
        img[y(j), x + 6] = img[y(j + 1), x + 6] = True
        x += 6
    for lev in range(1, N + 1):
        img[y(lev), x:width - 4] = True
    labels, count = ndimage.label(~img)
    border = set(np.unique(np.concatenate([labels[0], labels[-1], labels[:, 0], labels[:, -1]])))
    return sum(1 for k in range(1, count + 1) if k not in border)


def pattern_edges(w: BraidWord):
    """Linking-graph edges from the literal brick arrangements.

    Same column: the two bricks read s_i s_i s_i on consecutive occurrences.
    Adjacent columns: the four brick endpoints, in word order, alternate
    between the two columns.
    """
    L = w.letters
    occ = {}
    for p, x in enumerate(L):
        occ.setdefault(x, []).append(p)
    brick_list = []
    for col in sorted(occ):
        ps = occ[col]
        brick_list += [(col, a, b) for a, b in zip(ps, ps[1:])]
    edges = set()
    for u, v in itertools.combinations(range(len(brick_list)), 2):
        cu, a, b = brick_list[u]
        cv, c, d = brick_list[v]
        if cu == cv:
            if b == c or d == a:
                edges.add((u, v))
        elif abs(cu - cv) == 1:
            ends = sorted([a, b, c, d])
            seq = [L[p] for p in ends]
            i, j = min(cu, cv), max(cu, cv)
            if seq in ([i, j, i, j], [j, i, j, i]):
                edges.add((u, v))
    return brick_list, edges


def relation_class(letters, limit=200000):
    """All words equal to `letters` in the positive braid monoid."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        n = len(cur)
        for p in range(n - 1):
            a, b = cur[p], cur[p + 1]
            if abs(a - b) >= 2:
                nxt = cur[:p] + (b, a) + cur[p + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        for p in range(n - 2):
            a, b, c = cur[p:p + 3]
            if a == c and abs(a - b) == 1:
                nxt = cur[:p] + (b, a, b) + cur[p + 3:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if len(seen) > limit:
            raise RuntimeError("class too large")
    return seen


def delta_prefix_oracle(w: BraidWord):
    """Half twist divides w iff some equal word starts with a fixed half-twist word."""
    n = w.strands
    delta = []
    for k in range(1, n):
        delta.extend(range(k, 0, -1))
    delta = tuple(delta)
    if len(w.letters) < len(delta):
        return False
    return any(x[:len(delta)] == delta for x in relation_class(w.letters))


def rank_q(M):
    """Rank over the rationals by fraction Gaussian elimination."""
    from fractions import Fraction

    A = [[Fraction(x) for x in row] for row in M]
    rank, rows = 0, len(A)
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rows):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def max_matching_tree(n, edges):
    """Maximum matching size of a forest, by greedy leaf stripping."""
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    matched = 0
    alive = set(range(n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if v in alive and len(adj[v] & alive) == 1:
                u = next(iter(adj[v] & alive))
                alive -= {u, v}
                matched += 1
                changed = True
    return matched
