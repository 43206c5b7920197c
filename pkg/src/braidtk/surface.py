"""Curve configurations on surfaces and assemblage checks.

Two kinds of configuration are supported. Abstract ones carry only cyclic
event orders and signs. Brick-derived ones also carry an explicit model of
the fibre surface: disks joined by bands, with each standard curve drawn as
two straight chords. That model gives the cyclic orders, the complementary
regions of any subset of curves, and the Tier-2 single-arc test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .braid import BraidWord
from .errors import MissingRotationData
from .linking import bricks, find_e6


# ---------------------------------------------------------------- data types

@dataclass(frozen=True)
class CurveConfiguration:
    curves: tuple                 # labels
    orders: tuple                 # per curve: cyclic tuple of event indices
    events: tuple                 # (a, b, sign) with a < b curve indices; sign = <a, b>
    provenance: str = "abstract"

    def intersection_graph(self) -> list:
        return [(a, b) for a, b, _ in self.events]


@dataclass(frozen=True)
class SubsurfaceSummary:
    betti: int
    r: int
    genus: int | None
    connected: bool
    parts: tuple = ()

    def to_json(self) -> dict:
        out = {"betti": self.betti, "r": self.r, "genus": self.genus, "connected": self.connected}
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


# ---------------------------------------------------------------- ribbon tracing

def _components(n: int, events) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in events:
        parent[find(a)] = find(b)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def count_faces(cfg: CurveConfiguration, curves=None, start=0) -> int:
    """Boundary components of a regular neighbourhood, by tracing orbits of sigma.alpha.

    `start` rotates the order in which darts are visited; the count must not depend on it.
    """
    if curves is None:
        curves = range(len(cfg.curves))
    curves = list(curves)
    faces = 0
    # dart = (curve, slot, end) ; end 0 = leaving event orders[c][slot], 1 = arriving at it
    rot = {}
    for e, (a, b, s) in enumerate(cfg.events):
        if s > 0:
            rot[e] = [(a, 0), (b, 0), (a, 1), (b, 1)]
        else:
            rot[e] = [(a, 0), (b, 1), (a, 1), (b, 0)]
    slot = {}
    for c in curves:
        for k, e in enumerate(cfg.orders[c]):
            slot[(c, e)] = k

    def alpha(c, e, end):
        order = cfg.orders[c]
        k = slot[(c, e)]
        if end == 0:
            return c, order[(k + 1) % len(order)], 1
        return c, order[(k - 1) % len(order)], 0

    def sigma(c, e, end):
        ring = rot[e]
        k = ring.index((c, end))
        c2, end2 = ring[(k + 1) % 4]
        return c2, e, end2

    darts = [(c, e, end) for c in curves for e in cfg.orders[c] for end in (0, 1)]
    if darts:
        start %= len(darts)
        darts = darts[start:] + darts[:start]
    seen = set()
    for d in darts:
        if d in seen:
            continue
        faces += 1
        while d not in seen:
            seen.add(d)
            d = sigma(*alpha(*d))
    faces += 2 * sum(1 for c in curves if not cfg.orders[c])
    return faces


def neighborhood_summary(cfg: CurveConfiguration) -> SubsurfaceSummary:
    """Betti number, boundary count and genus of a regular neighbourhood of the curves."""
    n = len(cfg.curves)
    if n == 0:
        return SubsurfaceSummary(0, 0, 0, True)
    comps = _components(n, cfg.events)
    parts = []
    for comp in comps:
        cs = set(comp)
        v = sum(1 for a, b, _ in cfg.events if a in cs)
        r = count_faces(cfg, comp)
        betti = 1 + v
        parts.append(SubsurfaceSummary(betti, r, (betti - r + 1) // 2, True))
    if len(parts) == 1:
        return parts[0]
    return SubsurfaceSummary(
        sum(p.betti for p in parts), sum(p.r for p in parts), None, False, tuple(parts)
    )


# ---------------------------------------------------------------- abstract trees

def tree_configuration(n: int, edges, orders: dict | None = None) -> CurveConfiguration:
    """Configuration whose intersection graph is the given tree, all signs +1.

    Degree <= 3 vertices get the event order induced by edge order; higher
    degree requires explicit `orders[v]` listing neighbours cyclically.
    """
    edges = [tuple(sorted(e)) for e in edges]
    events = tuple((a, b, 1) for a, b in edges)
    by_curve = [[] for _ in range(n)]
    for k, (a, b) in enumerate(edges):
        by_curve[a].append(k)
        by_curve[b].append(k)
    out = []
    for v in range(n):
        if orders and v in orders:
            nbr_event = {}
            for k in by_curve[v]:
                a, b = edges[k]
                nbr_event[b if a == v else a] = k
            out.append(tuple(nbr_event[u] for u in orders[v]))
        elif len(by_curve[v]) >= 4:
            raise MissingRotationData(f"curve {v} has degree {len(by_curve[v])}; give its cyclic order")
        else:
            out.append(tuple(by_curve[v]))
    return CurveConfiguration(tuple(range(n)), tuple(out), events)


def tripod(p: int, q: int, s: int) -> CurveConfiguration:
    """Tree T(p, q, s): a center with legs of p, q, s further curves."""
    edges = []
    nxt = 1
    for leg in (p, q, s):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_configuration(nxt, edges)


def chain(n: int) -> CurveConfiguration:
    return tree_configuration(n, [(k, k + 1) for k in range(n - 1)])


def is_tree(n: int, edges) -> bool:
    edges = list(edges)
    return n >= 1 and len(edges) == n - 1 and len(_components(n, [(a, b, 1) for a, b in edges])) == 1


def is_E_arboreal(cfg: CurveConfiguration) -> bool:
    n = len(cfg.curves)
    edges = cfg.intersection_graph()
    if not is_tree(n, edges):
        return False
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return find_e6(adj) is not None


# ---------------------------------------------------------------- brick surface model

def _frac(x: float) -> float:
    return x - math.floor(x)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


class BrickSurface:
    """The fibre surface of a positive braid: disks joined by bands, curves as chords.

    Disks are coherently oriented unit circles. Band p (letter sigma_i at
    position p) joins disk i to disk i+1 at angle proportional to p on both.
    Brick (a, b) in column i runs along band a, a chord in disk i+1 from a to
    b, band b, and a chord in disk i from b back to a.
    """

    def __init__(self, w: BraidWord):
        self.word = w
        self.bricks = bricks(w)
        self.index = {b: k for k, b in enumerate(self.bricks)}
        c = len(w.letters)
        self._c = c
        # brick using band p from above (bottom == p) and from below (top == p)
        self.above = {}
        self.below = {}
        for k, b in enumerate(self.bricks):
            self.above[b.bottom] = k
            self.below[b.top] = k

    # -- coordinates

    def port(self, disk: int, p: int, s: float) -> float:
        """Angle on `disk` where transverse coordinate s of band p lands.

        Attachments go around every disk in word order; the transverse order
        of a band reverses between its two ends.
        """
        c = self._c
        step = 2 * math.pi / (c + 1)
        base = step * (p + 0.5 + 0.1 * _frac((p + 1) * math.sqrt(2)))
        off = (s - 0.5) * 0.5 * step
        col = self.word.letters[p]
        return base + off if disk == col else base - off

    @staticmethod
    def strand_s(k_above: bool) -> float:
        return 1 / 3 if k_above else 2 / 3

    def chords(self, k: int):
        """The two chords of curve k as (disk, start band, end band), in traversal order."""
        b = self.bricks[k]
        return [(b.column + 1, b.top, b.bottom), (b.column, b.bottom, b.top)]

    def _chord_ends(self, k: int, disk: int, p_from: int, p_to: int):
        b = self.bricks[k]
        s_from = self.strand_s(b.bottom == p_from)
        s_to = self.strand_s(b.bottom == p_to)
        return self.port(disk, p_from, s_from), self.port(disk, p_to, s_to)

    # -- arrangement of a subset

    def arrangement(self, subset) -> "Arrangement":
        return Arrangement(self, tuple(sorted(subset)))

    def configuration(self, subset=None) -> CurveConfiguration:
        if subset is None:
            subset = range(len(self.bricks))
        return self.arrangement(subset).configuration()

    def spanned_summary(self, subset) -> SubsurfaceSummary:
        return self.arrangement(subset).spanned_summary()


def _point(theta):
    return math.cos(theta), math.sin(theta)


class Arrangement:
    """Chords of a subset of curves drawn in every disk, with faces and regions."""

    def __init__(self, surface: BrickSurface, subset: tuple):
        self.S = surface
        self.subset = subset
        self.local = {k: n for n, k in enumerate(subset)}
        self._build()

    # chord record: (curve, disk, theta_from, theta_to, index_along_curve)
    def _build(self):
        S = self.S
        N = S.word.strands
        chords_by_disk = {j: [] for j in range(1, N + 1)}
        for k in self.subset:
            for part, (disk, pf, pt) in enumerate(S.chords(k)):
                a, b = S._chord_ends(k, disk, pf, pt)
                chords_by_disk[disk].append((k, part, a, b))
        self.chords_by_disk = chords_by_disk
        # crossings per disk
        eps = 1e-9
        self.crossings = []      # (curve_a, curve_b, sign, disk, ta, tb) with a < b
        self.along = {}          # (curve, part) -> sorted list of (t, crossing id)
        for k in self.subset:
            self.along[(k, 0)] = []
            self.along[(k, 1)] = []
        for disk, chs in chords_by_disk.items():
            for x in range(len(chs)):
                for y in range(x + 1, len(chs)):
                    k1, part1, a1, b1 = chs[x]
                    k2, part2, a2, b2 = chs[y]
                    hit = _segment_hit(_point(a1), _point(b1), _point(a2), _point(b2))
                    if hit is None:
                        continue
                    t1, t2, sgn = hit
                    if min(t1, 1 - t1, t2, 1 - t2) < eps:
                        raise ArithmeticError("degenerate chord arrangement")
                    if k1 > k2:
                        k1, k2, part1, part2, t1, t2 = k2, k1, part2, part1, t2, t1
                        sgn = -sgn
                    cid = len(self.crossings)
                    self.crossings.append((k1, k2, sgn, disk, t1, t2))
                    self.along[(k1, part1)].append((t1, cid))
                    self.along[(k2, part2)].append((t2, cid))
        for key in self.along:
            ts = sorted(self.along[key])
            for u, v in zip(ts, ts[1:]):
                if v[0] - u[0] < eps:
                    raise ArithmeticError("degenerate chord arrangement")
            self.along[key] = ts

    def event_order(self, k: int) -> tuple:
        return tuple(cid for part in (0, 1) for _, cid in self.along[(k, part)])

    def configuration(self) -> CurveConfiguration:
        loc = self.local
        events = tuple((loc[a], loc[b], s) for a, b, s, *_ in self.crossings)
        orders = tuple(self.event_order(k) for k in self.subset)
        labels = tuple(self.S.bricks[k] for k in self.subset)
        return CurveConfiguration(labels, orders, events, provenance="bricks")

    # -- faces of each disk and regions of the complement

    @cached_property
    def faces(self):
        """Per disk: face tracing of chords plus circle arcs.

        Returns (face_of_arc, face_of_halfedge, n_faces) per disk, where arcs are
        indexed by the ccw-sorted port list.
        """
        out = {}
        for disk, chs in self.chords_by_disk.items():
            out[disk] = _disk_faces(chs, self.along, self.crossings)
        return out

    @cached_property
    def regions(self):
        """Union-find over disk faces through band strips; returns (region_of, chi)."""
        S = self.S
        ids = {}
        for disk, info in self.faces.items():
            for f in range(info["n_faces"]):
                ids[(disk, f)] = len(ids)
        parent = list(range(len(ids)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        strips = 0
        strip_region_edges = []
        present = set(self.subset)
        for p, col in enumerate(S.word.letters):
            ss = []
            if S.above.get(p) in present:
                ss.append(S.strand_s(True))
            if S.below.get(p) in present:
                ss.append(S.strand_s(False))
            cuts = [0.0] + sorted(ss) + [1.0]
            for lo, hi in zip(cuts, cuts[1:]):
                mid = (lo + hi) / 2
                f1 = self._face_at(col, S.port(col, p, mid))
                f2 = self._face_at(col + 1, S.port(col + 1, p, mid))
                a, b = ids[(col, f1)], ids[(col + 1, f2)]
                strip_region_edges.append((a, b))
                parent[find(a)] = find(b)
                strips += 1
        region_of = {key: find(v) for key, v in ids.items()}
        chi = {}
        for v in region_of.values():
            chi[v] = chi.get(v, 0) + 1
        for a, _ in strip_region_edges:
            chi[find(a)] -= 1
        return region_of, chi

    def _face_at(self, disk: int, theta: float) -> int:
        info = self.faces[disk]
        ports = info["ports"]
        if not ports:
            return 0
        th = theta % (2 * math.pi)
        # arc k runs ccw from ports[k] to ports[k+1]
        k = len(ports) - 1
        for q, (ang, _) in enumerate(ports):
            if ang <= th:
                k = q
        return info["arc_face"][k]

    def disk_regions(self) -> int:
        _, chi = self.regions
        return sum(1 for v in chi.values() if v == 1)

    def spanned_summary(self) -> SubsurfaceSummary:
        """Neighbourhood of the curves together with complementary disks."""
        cfg = self.configuration()
        base = neighborhood_summary(cfg)
        if not base.connected:
            return base
        d = self.disk_regions()
        betti = base.betti - d
        r = base.r - d
        return SubsurfaceSummary(betti, r, (betti - r + 1) // 2, True)

    def side_regions(self, k: int):
        """For each segment of curve k between consecutive crossings: (left, right) regions."""
        region_of, _ = self.regions
        order = [(part, t, cid) for part in (0, 1) for t, cid in self.along[(k, part)]]
        segs = []
        for idx, (part, t, cid) in enumerate(order):
            disk = self.S.chords(k)[part][0]
            info = self.faces[disk]
            left, right = info["chord_sides"][(k, part, cid)]
            segs.append((region_of[(disk, left)], region_of[(disk, right)]))
        return segs


def _segment_hit(p1, p2, q1, q2):
    """Parameters (t, u) and orientation sign of the crossing of two segments, or None."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    den = _cross(rx, ry, sx, sy)
    if abs(den) < 1e-15:
        return None
    qpx, qpy = q1[0] - p1[0], q1[1] - p1[1]
    t = _cross(qpx, qpy, sx, sy) / den
    u = _cross(qpx, qpy, rx, ry) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u, 1 if den > 0 else -1
    return None


def _disk_faces(chs, along, crossings):
    """Trace faces of one disk: straight chords and the boundary circle.

    Vertices are ports and crossings. Half-edges keep their face on the left.
    """
    ports = []  # (angle, (curve, part, end))
    for k, part, a, b in chs:
        ports.append((a % (2 * math.pi), (k, part, 0)))
        ports.append((b % (2 * math.pi), (k, part, 1)))
    ports.sort()
    info = {"ports": ports, "arc_face": [], "chord_sides": {}, "n_faces": 1}
    if not ports:
        return info
    pos = {}
    verts = []

    def vid(key, xy):
        if key not in pos:
            pos[key] = len(verts)
            verts.append(xy)
        return pos[key]

    out = {}  # vertex -> list of (angle, halfedge id)
    half = []  # (tail, head, tag)

    def add_edge(u, v, ang_u, ang_v, tag_uv, tag_vu):
        h = len(half)
        half.append((u, v, tag_uv))
        half.append((v, u, tag_vu))
        out.setdefault(u, []).append((ang_u, h))
        out.setdefault(v, []).append((ang_v, h + 1))

    for k, part, a, b in chs:
        pa, pb = _point(a), _point(b)
        pts = [("port", k, part, 0)] + [("x", cid) for _, cid in along[(k, part)]] + [("port", k, part, 1)]
        ts = [0.0] + [t for t, _ in along[(k, part)]] + [1.0]
        xy = [(pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])) for t in ts]
        ids = [vid(key, p) for key, p in zip(pts, xy)]
        fwd = math.atan2(pb[1] - pa[1], pb[0] - pa[0])
        back = fwd + math.pi
        for q in range(len(ids) - 1):
            # tag records which crossing precedes this piece along the chord
            prev = pts[q][1] if pts[q][0] == "x" else None
            nxt = pts[q + 1][1] if pts[q + 1][0] == "x" else None
            add_edge(ids[q], ids[q + 1], fwd, back, ("chord", k, part, prev, nxt, 1), ("chord", k, part, prev, nxt, -1))
    n = len(ports)
    for q in range(n):
        a1, key1 = ports[q]
        a2, key2 = ports[(q + 1) % n]
        u = pos[("port", *key1)]
        v = pos[("port", *key2)]
        add_edge(u, v, a1 + math.pi / 2, a2 - math.pi / 2, ("arc", q, 1), ("arc", q, -1))
    ring = {}
    for u, lst in out.items():
        lst.sort(key=lambda x: x[0] % (2 * math.pi))
        ring[u] = [h for _, h in lst]
    face = [-1] * len(half)
    nf = 0
    for h0 in range(len(half)):
        if face[h0] != -1:
            continue
        h = h0
        while face[h] == -1:
            face[h] = nf
            u, v, _ = half[h]
            twin = h ^ 1
            r = ring[v]
            h = r[(r.index(twin) - 1) % len(r)]
        nf += 1
    # drop the outer face: the one on the left of clockwise arcs
    outer = {face[h] for h in range(len(half)) if half[h][2][0] == "arc" and half[h][2][2] == -1}
    assert len(outer) == 1, "outer face must be unique"
    outer = outer.pop()
    remap = {}
    for f in range(nf):
        if f != outer:
            remap[f] = len(remap)
    info["n_faces"] = len(remap)
    arc_face = [None] * n
    for h, (_, _, tag) in enumerate(half):
        if tag[0] == "arc" and tag[2] == 1:
            arc_face[tag[1]] = remap[face[h]]
        elif tag[0] == "chord" and tag[5] == 1 and tag[3] is not None:
            _, k, part, prev, _, _ = tag
            info["chord_sides"][(k, part, prev)] = (remap[face[h]], remap[face[h ^ 1]])
    info["arc_face"] = arc_face
    return info


# ---------------------------------------------------------------- assemblages

def brick_configuration(w: BraidWord, subset=None) -> CurveConfiguration:
    return BrickSurface(w).configuration(subset)


def spans_whole_surface(cfg: CurveConfiguration, w: BraidWord) -> bool:
    """The standard curves span the fibre surface exactly when all of them are used."""
    return cfg.provenance == "bricks" and set(cfg.curves) == set(bricks(w))


def attach_evidence(surface: BrickSurface, prior, c: int) -> dict:
    """Decide whether curve c meets the running subsurface in a single arc.

    Tier 1: c crosses exactly one prior curve, exactly once.
    Tier 2: c is cut by the prior curves into k segments; a segment can be
    pushed into the running subsurface when one of its sides is a disk region
    bounded by that segment alone among pieces of c. A single arc remains
    exactly when k - 1 segments can be pushed.
    """
    prior = list(prior)
    arr = surface.arrangement(prior + [c])
    hits = [x for x in arr.crossings if c in (x[0], x[1])]
    partners = {x[0] if x[1] == c else x[1] for x in hits}
    k = len(hits)
    ev = {"curve": c, "crossings": k, "partners": sorted(partners), "tier": None, "pushable": []}
    if k == 0:
        ev["verdict"] = "disjoint"
        return ev
    if k == 1:
        ev["tier"] = 1
        ev["verdict"] = "single-arc"
        return ev
    _, chi = arr.regions
    segs = arr.side_regions(c)
    count = {}
    for l, r in segs:
        count[l] = count.get(l, 0) + 1
        count[r] = count.get(r, 0) + 1
    push = [j for j, (l, r) in enumerate(segs)
            if (chi[l] == 1 and count[l] == 1) or (chi[r] == 1 and count[r] == 1)]
    ev["pushable"] = push
    if len(push) == k - 1:
        ev["tier"] = 2
        ev["verdict"] = "single-arc"
    else:
        ev["verdict"] = "unknown"
    return ev


@dataclass
class AssemblageReport:
    accepted: bool
    failed_condition: str | None = None
    failed_index: int | None = None
    h: int | None = None
    r: int | None = None
    betti: int | None = None
    reason: str = ""
    tier_evidence: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "failed_condition": self.failed_condition,
            "failed_index": self.failed_index,
            "h": self.h,
            "r": self.r,
            "betti": self.betti,
        }


def _fail(cond, idx, reason, **kw) -> AssemblageReport:
    return AssemblageReport(False, cond, idx, reason=reason, **kw)


def verify_assemblage(ambient, order, k: int, h_min: int) -> AssemblageReport:
    """Check that `order` is an h-assemblage of type E with h >= h_min.

    `ambient` is a BrickSurface (curves are brick indices) or an abstract
    CurveConfiguration (curves are its indices; only Tier 1 is available).
    """
    order = list(order)
    if len(set(order)) != len(order):
        return _fail("a", None, "repeated curve in ordering")
    if not 1 <= k <= len(order):
        return _fail("a", None, f"core size {k} out of range")
    if isinstance(ambient, BrickSurface):
        n_all = len(ambient.bricks)
        if any(not 0 <= x < n_all for x in order):
            return _fail("a", None, "curve index out of range")
        core_cfg = ambient.configuration(order[:k])
    else:
        n_all = len(ambient.curves)
        if any(not 0 <= x < n_all for x in order):
            return _fail("a", None, "curve index out of range")
        core_cfg = _restrict(ambient, order[:k])
    if not is_E_arboreal(core_cfg):
        return _fail("a", k - 1, "core is not an E-arboreal tree")
    core = neighborhood_summary(core_cfg)
    if core.genus < h_min:
        return _fail("a", k - 1, f"core genus {core.genus} < {h_min}", h=core.genus, r=core.r, betti=core.betti)
    evidence = []
    for j in range(k, len(order)):
        if isinstance(ambient, BrickSurface):
            ev = attach_evidence(ambient, order[:j], order[j])
        else:
            ev = _abstract_evidence(ambient, order[:j], order[j])
        evidence.append(ev)
        if ev["tier"] is None:
            return _fail("b", j, f"curve {order[j]}: {ev['verdict']}", h=core.genus,
                         r=core.r, betti=core.betti, tier_evidence=evidence)
    if len(order) != n_all:
        return _fail("c", len(order) - 1, f"{n_all - len(order)} curves never attached",
                     h=core.genus, r=core.r, betti=core.betti, tier_evidence=evidence)
    if isinstance(ambient, BrickSurface):
        final = ambient.spanned_summary(order)
    else:
        final = neighborhood_summary(ambient)
    return AssemblageReport(True, None, None, core.genus, final.r, final.betti, "", evidence)


def _restrict(cfg: CurveConfiguration, subset) -> CurveConfiguration:
    keep = {c: n for n, c in enumerate(subset)}
    ev_map = {}
    events = []
    for e, (a, b, s) in enumerate(cfg.events):
        if a in keep and b in keep:
            x, y = keep[a], keep[b]
            if x > y:
                x, y, s = y, x, -s
            ev_map[e] = len(events)
            events.append((x, y, s))
    orders = tuple(tuple(ev_map[e] for e in cfg.orders[c] if e in ev_map) for c in subset)
    return CurveConfiguration(tuple(cfg.curves[c] for c in subset), orders, tuple(events), cfg.provenance)


def _abstract_evidence(cfg: CurveConfiguration, prior, c: int) -> dict:
    prior = set(prior)
    hits = [(a, b) for a, b, _ in cfg.events if (a == c and b in prior) or (b == c and a in prior)]
    partners = sorted({a if b == c else b for a, b in hits})
    ev = {"curve": c, "crossings": len(hits), "partners": partners, "tier": None, "pushable": []}
    if len(hits) == 1:
        ev["tier"] = 1
        ev["verdict"] = "single-arc"
    else:
        ev["verdict"] = "disjoint" if not hits else "unknown"
    return ev
