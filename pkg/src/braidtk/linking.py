"""Brick diagrams, linking graphs and Dynkin shape recognition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .braid import BraidWord, is_split
from .errors import UnreachableColumn

SAME = "SameColumn"
CROSS = "CrossColumn"


@dataclass(frozen=True, order=True)
class Brick:
    column: int
    top: int
    bottom: int


@dataclass(frozen=True)
class LinkingGraph:
    vertices: tuple
    edges: tuple  # (u, v, kind) with u < v indexing into vertices

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in self.vertices]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def index(self) -> dict:
        return {b: k for k, b in enumerate(self.vertices)}

    def __len__(self):
        return len(self.vertices)

    def edge_kind(self, u: int, v: int):
        for a, b, kind in self.edges:
            if {a, b} == {u, v}:
                return kind
        return None

    def column(self, col: int) -> list:
        return [k for k, b in enumerate(self.vertices) if b.column == col]


def column_positions(w: BraidWord) -> dict:
    pos = {}
    for p, x in enumerate(w.letters):
        pos.setdefault(x, []).append(p)
    return pos


def bricks(w: BraidWord) -> list:
    pos = column_positions(w)
    out = []
    for col in sorted(pos):
        ps = pos[col]
        out.extend(Brick(col, a, b) for a, b in zip(ps, ps[1:]))
    return out


def interleave(a: Brick, b: Brick) -> bool:
    return a.top < b.top < a.bottom < b.bottom or b.top < a.top < b.bottom < a.bottom


def linking_graph(w: BraidWord) -> LinkingGraph:
    verts = bricks(w)
    edges = []
    by_col = {}
    for k, b in enumerate(verts):
        by_col.setdefault(b.column, []).append(k)
    for col, ks in sorted(by_col.items()):
        for u, v in zip(ks, ks[1:]):
            edges.append((u, v, SAME))
        for u in ks:
            for v in by_col.get(col + 1, ()):
                if interleave(verts[u], verts[v]):
                    edges.append((u, v, CROSS))
    edges.sort()
    return LinkingGraph(tuple(verts), tuple(edges))


def components(g: LinkingGraph) -> list:
    seen = set()
    comps = []
    for s in range(len(g)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: LinkingGraph) -> bool:
    return len(components(g)) <= 1


def is_prime(w: BraidWord) -> bool:
    return not is_split(w) and is_connected(linking_graph(w))


def is_path_graph(g: LinkingGraph) -> bool:
    """True for chains, including the empty graph and a single vertex."""
    n = len(g)
    if n == 0:
        return True
    return len(g.edges) == n - 1 and is_connected(g) and all(len(a) <= 2 for a in g.adjacency)


# ---------------------------------------------------------------- induced path

def _shortcut(path: list, adj) -> list:
    """Remove chords greedily: jump to the furthest later vertex adjacent to the current one."""
    out = [path[0]]
    k = 0
    while k < len(path) - 1:
        nxt = max(j for j in range(k + 1, len(path)) if path[j] in adj[path[k]])
        out.append(path[nxt])
        k = nxt
    return out


def induced_path(g: LinkingGraph, v: Brick, target_column: int) -> list:
    """Chordless path from v to a brick of target_column.

    Walk along the current column to the nearest brick linked toward the
    target, then step over; among several step targets prefer the one
    closest to a brick linked onward. Leftward targets use the mirror rule.
    """
    idx = g.index
    if v not in idx:
        raise ValueError(f"{v} is not a vertex")
    adj = g.adjacency
    step = 1 if target_column > v.column else -1
    path = [idx[v]]
    cur = idx[v]
    col = v.column
    while col != target_column:
        here = g.column(col)
        nxt_col = g.column(col + step)
        linked = [u for u in here if any(x in adj[u] for x in nxt_col)]
        if not linked:
            raise UnreachableColumn(f"no brick of column {col} links to column {col + step}")
        pos = here.index(cur)
        # nearest exit, ties toward the top
        exit_ = min(linked, key=lambda u: (abs(here.index(u) - pos), here.index(u)))
        e = here.index(exit_)
        d = step_sign(e - pos)
        if d:
            path.extend(here[q] for q in range(pos + d, e + d, d))
        cands = [x for x in nxt_col if x in adj[exit_]]
        col += step
        if col != target_column:
            onward = set(g.column(col + step))
            beyond = [x for x in nxt_col if adj[x] & onward]
            if not beyond:
                raise UnreachableColumn(f"no brick of column {col} links to column {col + step}")
            order = {x: k for k, x in enumerate(nxt_col)}

            def dist(x):
                return min(abs(order[x] - order[y]) for y in beyond)

            cur = min(cands, key=lambda x: (dist(x), order[x]))
        else:
            cur = cands[0]
        path.append(cur)
    return [g.vertices[k] for k in _shortcut(path, adj)]


def step_sign(x: int) -> int:
    return (x > 0) - (x < 0)


def is_induced_path(g: LinkingGraph, path: list) -> bool:
    ks = [g.index[b] for b in path]
    if len(set(ks)) != len(ks):
        return False
    adj = g.adjacency
    for a, b in combinations(range(len(ks)), 2):
        linked = ks[b] in adj[ks[a]]
        if linked != (b == a + 1):
            return False
    return True


# ---------------------------------------------------------------- Dynkin shapes

def _tree_legs(adj: list, center: int) -> list:
    legs = []
    for nb in adj[center]:
        length, prev, cur = 1, center, nb
        while True:
            rest = [x for x in adj[cur] if x != prev]
            if len(rest) != 1:
                if rest:
                    return None
                break
            prev, cur = cur, rest[0]
            length += 1
        legs.append(length)
    return sorted(legs)


def shape_of(n: int, edges) -> str:
    """Classify an abstract graph on vertices 0..n-1."""
    adj = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
        m += 1
    if n == 0:
        return "Other"
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for x in adj[u] - seen:
            seen.add(x)
            stack.append(x)
    if len(seen) != n or m != n - 1:
        return "Other"
    degs = sorted(len(a) for a in adj)
    if degs[-1] <= 2:
        return f"A{n}"
    big = [u for u in range(n) if len(adj[u]) >= 3]
    if len(big) == 1 and len(adj[big[0]]) == 3:
        legs = _tree_legs(adj, big[0])
        if legs[0] == 1 and legs[1] == 1:
            return f"D{n}"
        named = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}
        return named.get(tuple(legs), "Other")
    if len(big) == 1 and len(adj[big[0]]) == 4 and n == 5:
        return "ExtendedD4"
    if len(big) == 2 and all(len(adj[u]) == 3 for u in big):
        leaves_ok = all(sum(1 for x in adj[u] if len(adj[x]) == 1) >= 2 for u in big)
        if leaves_ok and n >= 6:
            return f"ExtendedD{n - 1}"
    return "Other"


def dynkin_type(g: LinkingGraph) -> str:
    return shape_of(len(g), [(u, v) for u, v, _ in g.edges])


# ---------------------------------------------------------------- E6 search

def find_e6(adj) -> tuple | None:
    """Six vertices inducing a (1,2,2) tripod: (center, a, b, b2, d, d2), or None."""
    n = len(adj)
    for c in range(n):
        nbrs = sorted(adj[c])
        if len(nbrs) < 3:
            continue
        for trip in combinations(nbrs, 3):
            if any(y in adj[x] for x, y in combinations(trip, 2)):
                continue
            for a in trip:
                b, d = [x for x in trip if x != a]
                base = {c, a, b, d}
                ext_b = [x for x in sorted(adj[b]) if x not in base and not (adj[x] & {c, a, d})]
                ext_d = [x for x in sorted(adj[d]) if x not in base and not (adj[x] & {c, a, b})]
                for b2 in ext_b:
                    for d2 in ext_d:
                        if d2 != b2 and d2 not in adj[b2]:
                            return (c, a, b, b2, d, d2)
    return None


def contains_E6_subtree(g: LinkingGraph):
    hit = find_e6(g.adjacency)
    if hit is None:
        return None
    return [g.vertices[k] for k in hit]


# ---------------------------------------------------------------- DOT

def vertex_labels(g: LinkingGraph) -> list:
    count = {}
    labels = []
    for b in g.vertices:
        k = count.get(b.column, 0)
        count[b.column] = k + 1
        labels.append(f"c{b.column}_{k}")
    return labels


def to_dot(g: LinkingGraph) -> str:
    labels = vertex_labels(g)
    lines = ["graph linking {"]
    for lab, b in zip(labels, g.vertices):
        lines.append(f'  {lab} [label="{lab}\\n[{b.top},{b.bottom}]"];')
    for u, v, kind in g.edges:
        style = "solid" if kind == SAME else "dashed"
        lines.append(f"  {labels[u]} -- {labels[v]} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
