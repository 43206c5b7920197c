"""Search for machine-checkable assemblage certificates.

A certificate records moves from the input word to a working word, a set of
its bricks whose curves form an E-arboreal tree of genus at least 5, and an
order in which the remaining brick curves attach along single arcs.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .braid import (
    BraidWord,
    Move,
    apply_move,
    canonical_form,
    closure_summary,
    format_braid,
    parse_braid,
    symmetry_orbit,
)
from .errors import BraidtkError
from .linking import find_e6, induced_path, is_path_graph, is_prime, linking_graph
from .seifert import arf_of_word
from .surface import BrickSurface, attach_evidence, verify_assemblage

VERSION = 1
H_MIN = 5
DEFAULT_DEPTH = 12
DEFAULT_STATES = 100_000

EXCEPTION_WORDS = (
    "s1^2 s2^2 s1^2 s2^2 s1^2 s2^3",
    "s1^3 s2^2 s1^2 s2^2 s1^2 s2^2",
    "s1^3 s2 s1^3 s2^2 s1^2 s2^2",
)


@dataclass(frozen=True)
class Budget:
    depth: int = DEFAULT_DEPTH
    states: int = DEFAULT_STATES

    def __post_init__(self):
        if self.depth < 0 or self.states < 1:
            raise ValueError("budgets must be positive")


@dataclass
class CertifyOutcome:
    kind: str  # Certified | KnownException | NotApplicable | Unknown
    detail: str = ""
    certificate: dict | None = None
    states: int = 0
    depth: int = 0
    summary: dict = field(default_factory=dict)

    EXIT_CODES = {"Certified": 0, "KnownException": 3, "NotApplicable": 4, "Unknown": 5}

    @property
    def exit_code(self) -> int:
        return self.EXIT_CODES[self.kind]

    def to_json(self) -> dict:
        out = {"outcome": self.kind, "detail": self.detail, "states": self.states, "depth": self.depth}
        out.update(self.summary)
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- move search

def _rotations_to(word: tuple, target: tuple) -> int:
    n = len(word)
    for k in range(max(n, 1)):
        if word[k:] + word[:k] == target:
            return k
    raise AssertionError("target is not a rotation")


def _expand(state: tuple, strands: int):
    """Successors of a rotation class: (cost, local moves, canonical successor)."""
    n = len(state)
    for k in range(max(n, 1)):
        rot = state[k:] + state[:k]
        pre = [Move("ElementaryConjugation", 0)] * k
        for p in range(n - 1):
            a, b = rot[p], rot[p + 1]
            if abs(a - b) >= 2:
                nxt = rot[:p] + (b, a) + rot[p + 2:]
                yield 0, pre + [Move("FarCommutation", p)], nxt
        for p in range(n - 2):
            a, b, c = rot[p:p + 3]
            if a == c and abs(a - b) == 1:
                nxt = rot[:p] + (b, a, b) + rot[p + 3:]
                yield 1, pre + [Move("BraidRelation", p)], nxt


def move_search(w: BraidWord, budget: Budget):
    """Yield (moves, word, depth) over the rotation/relation class of w.

    0-1 breadth-first order: far commutations and rotations are free, braid
    relations cost one. The order only depends on w, so a larger budget
    visits a superset in the same order.
    """
    start = canonical_form(w.letters)
    parent = {start: (None, [Move("ElementaryConjugation", 0)] * _rotations_to(w.letters, start))}
    dist = {start: 0}
    queue = deque([start])
    done = set()
    count = 0
    while queue:
        state = queue.popleft()
        if state in done:
            continue
        done.add(state)
        count += 1
        if count > budget.states:
            return
        yield _path(parent, state), BraidWord(w.strands, state), dist[state]
        for cost, local, nxt in _expand(state, w.strands):
            d = dist[state] + cost
            if d > budget.depth:
                continue
            canon = canonical_form(nxt)
            if canon in dist and dist[canon] <= d:
                continue
            dist[canon] = d
            tail = [Move("ElementaryConjugation", 0)] * _rotations_to(nxt, canon)
            parent[canon] = (state, local + tail)
            if cost:
                queue.append(canon)
            else:
                queue.appendleft(canon)


def _path(parent, state) -> list:
    chunks = []
    while state is not None:
        prev, local = parent[state]
        chunks.append(local)
        state = prev
    return [m for chunk in reversed(chunks) for m in chunk]


# ---------------------------------------------------------------- tree search

def _matching(nodes: frozenset, adj) -> int:
    alive = set(nodes)
    m = 0
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if v in alive:
                nb = adj[v] & alive
                if len(nb) == 1:
                    alive -= {v, next(iter(nb))}
                    m += 1
                    changed = True
    return m


def _all_e6(adj):
    """Every induced E6 copy, as (center, a, b, b2, d, d2)."""
    n = len(adj)
    out = []
    for c in range(n):
        nbrs = sorted(adj[c])
        for trip in _triples(nbrs):
            if any(y in adj[x] for x in trip for y in trip if x < y):
                continue
            for a in trip:
                b, d = [x for x in trip if x != a]
                base = {c, a, b, d}
                for b2 in sorted(adj[b]):
                    if b2 in base or adj[b2] & {c, a, d}:
                        continue
                    for d2 in sorted(adj[d]):
                        if d2 in base or d2 == b2 or d2 in adj[b2] or adj[d2] & {c, a, b}:
                            continue
                        if b < d:
                            out.append((c, a, b, b2, d, d2))
    return out


def _triples(xs):
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            for k in range(j + 1, len(xs)):
                yield xs[i], xs[j], xs[k]


def grow_trees(adj, seed: tuple, limit: int = 2000):
    """Induced subtrees containing `seed`, largest first, up to `limit` of them."""
    seen = set()
    found = []
    stack = [frozenset(seed)]
    while stack and len(seen) < limit:
        tree = stack.pop()
        if tree in seen:
            continue
        seen.add(tree)
        ext = [v for v in range(len(adj)) if v not in tree and len(adj[v] & tree) == 1]
        if not ext:
            found.append(tree)
        for v in reversed(ext):
            stack.append(tree | {v})
    found += [t for t in seen if t not in found]
    return sorted(found, key=lambda t: (-len(t), sorted(t)))


def candidate_trees(g, need: int):
    """Induced E6-containing subtrees with matching number >= need."""
    adj = [set(a) for a in g.adjacency]
    seeds = _all_e6(adj)
    if len(g.vertices) > 16 and g.vertices:
        seeds = _path_tripod_seeds(g, adj) + seeds[:8]
    tried = set()
    for seed in seeds:
        for tree in grow_trees(adj, seed, limit=200 if len(adj) > 16 else 2000):
            if tree in tried:
                continue
            tried.add(tree)
            if _matching(tree, adj) >= need:
                yield seed, tree


def _path_tripod_seeds(g, adj):
    """E6 seeds from an induced path across all columns plus one side brick."""
    cols = sorted({b.column for b in g.vertices})
    out = []
    for start in g.column(cols[0])[:2]:
        try:
            path = induced_path(g, g.vertices[start], cols[-1])
        except BraidtkError:
            continue
        ids = [g.index[b] for b in path]
        pset = set(ids)
        for j, v in enumerate(ids):
            for x in sorted(adj[v]):
                if x not in pset and len(adj[x] & pset) == 1 and 2 <= j <= len(ids) - 3:
                    c = v
                    out.append((c, x, ids[j - 1], ids[j - 2], ids[j + 1], ids[j + 2]))
    return out


# ---------------------------------------------------------------- attachment

def greedy_attachment(surface: BrickSurface, core: list):
    """Attach the remaining curves, preferring Tier 1; None when stuck."""
    order = list(core)
    rest = [k for k in range(len(surface.bricks)) if k not in set(core)]
    while rest:
        best = None
        for c in rest:
            ev = attach_evidence(surface, order, c)
            if ev["tier"] == 1:
                best = c
                break
            if ev["tier"] == 2 and best is None:
                best = c
        if best is None:
            return None
        order.append(best)
        rest.remove(best)
    return order


def _tree_edges(surface: BrickSurface, core: list) -> list:
    # configurations index curves in sorted brick order; report core positions
    cfg = surface.configuration(core)
    srt = sorted(core)
    pos = {b: j for j, b in enumerate(core)}
    return sorted(sorted((pos[srt[a]], pos[srt[b]])) for a, b in cfg.intersection_graph())


def _brick_list(bricks, ks) -> list:
    return [[bricks[k].column, bricks[k].top, bricks[k].bottom] for k in ks]


def build_certificate(w: BraidWord, moves: list, working: BraidWord, order: list, k: int, witness: tuple) -> dict | None:
    surface = BrickSurface(working)
    report = verify_assemblage(surface, order, k, H_MIN)
    if not report.accepted:
        return None
    pos = {b: j for j, b in enumerate(order[:k])}
    return {
        "version": VERSION,
        "input_word": format_braid(w),
        "moves": [m.to_json() for m in moves],
        "v0_bricks": _brick_list(surface.bricks, order[:k]),
        "twists": [],
        "tree_edges": _tree_edges(surface, order[:k]),
        "e6_witness": [pos[v] for v in witness],
        "h": report.h,
        "attachment": _brick_list(surface.bricks, order[k:]),
        "tier_evidence": [_evidence_json(ev) for ev in report.tier_evidence],
    }


def _evidence_json(ev: dict) -> dict:
    return {"tier": ev["tier"], "crossings": ev["crossings"], "pushable": list(ev["pushable"])}


# ---------------------------------------------------------------- verification

@dataclass
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(w: BraidWord, cert) -> Verification:
    """Replay and re-derive a certificate; nothing from the search is trusted.

    `cert` may be a dict or its canonical JSON text/bytes. Text input must be
    byte-identical to the canonical serialization of the re-derived certificate.
    """
    raw = None
    if isinstance(cert, (bytes, bytearray)):
        try:
            cert = cert.decode("utf-8")
        except UnicodeDecodeError:
            return Verification(False, "certificate is not UTF-8")
    if isinstance(cert, str):
        raw = cert
        try:
            cert = json.loads(cert)
        except ValueError as exc:
            return Verification(False, f"invalid JSON: {exc}")
        if canonical_json(cert) != raw:
            return Verification(False, "certificate text is not canonical")
    try:
        return _verify(w, cert, raw)
    except (BraidtkError, KeyError, TypeError, ValueError, IndexError) as exc:
        return Verification(False, f"malformed certificate: {exc}")


def _verify(w: BraidWord, cert: dict, raw: str | None) -> Verification:
    keys = {"version", "input_word", "moves", "v0_bricks", "twists", "tree_edges",
            "e6_witness", "h", "attachment", "tier_evidence"}
    if not isinstance(cert, dict) or set(cert) != keys:
        return Verification(False, "unexpected certificate fields")
    if cert["version"] != VERSION:
        return Verification(False, f"unsupported version {cert['version']!r}")
    if parse_braid(cert["input_word"]) != w:
        return Verification(False, "input word does not match")
    if cert["twists"]:
        return Verification(False, "twist modifications are not supported by this verifier")
    moves = [Move.from_json(m) for m in cert["moves"]]
    working = w
    for j, m in enumerate(moves):
        try:
            working = apply_move(working, m)
        except BraidtkError as exc:
            return Verification(False, f"move {j} does not apply: {exc}")
    if working.strands != w.strands:
        return Verification(False, "moves changed the strand count")
    a, b = closure_summary(w), closure_summary(working)
    if (a.components, a.betti) != (b.components, b.betti):
        return Verification(False, "working word has different closure invariants")
    surface = BrickSurface(working)
    lookup = {(x.column, x.top, x.bottom): k for k, x in enumerate(surface.bricks)}
    try:
        core = [lookup[tuple(x)] for x in cert["v0_bricks"]]
        rest = [lookup[tuple(x)] for x in cert["attachment"]]
    except (KeyError, TypeError):
        return Verification(False, "certificate names a brick the working word does not have")
    witness = cert["e6_witness"]
    if len(witness) != 6 or len(set(witness)) != 6 or not all(isinstance(i, int) and 0 <= i < len(core) for i in witness):
        return Verification(False, "condition (a): E6 witness out of range")
    # canonical certificates list the witness first: center, short arm, two long arms
    if witness != list(range(6)):
        return Verification(False, "condition (a): E6 witness must be the first six core bricks")
    edges = _tree_edges(surface, core)
    adj = [set() for _ in core]
    for x, y in edges:
        adj[x].add(y)
        adj[y].add(x)
    c, a1, b1, b2, d1, d2 = witness
    sub = [set(adj[v]) & set(witness) for v in range(len(core))]
    shape = {c: {a1, b1, d1}, a1: {c}, b1: {c, b2}, b2: {b1}, d1: {c, d2}, d2: {d1}}
    if any(sub[v] != shape[v] for v in witness):
        return Verification(False, "condition (a): witness is not an induced E6")
    report = verify_assemblage(surface, core + rest, len(core), H_MIN)
    if not report.accepted:
        return Verification(False, f"condition ({report.failed_condition}): {report.reason}")
    rebuilt = dict(cert)
    rebuilt.update({
        "tree_edges": edges,
        "h": report.h,
        "tier_evidence": [_evidence_json(ev) for ev in report.tier_evidence],
    })
    if rebuilt != cert:
        return Verification(False, "recorded data differ from the re-derived certificate")
    if raw is not None and canonical_json(rebuilt) != raw:
        return Verification(False, "certificate text is not canonical")
    return Verification(True)


# ---------------------------------------------------------------- decision procedure

def known_exception(w: BraidWord):
    """Name of the listed exception whose closure class contains w, if any."""
    if w.strands != 3:
        return None
    forms = {canonical_form(parse_braid(f"N=3; {x}").letters): x for x in EXCEPTION_WORDS}
    for v in symmetry_orbit(w):
        if len(v.letters) != 13:
            return None
        for _, x, _ in move_search(v, Budget(depth=12, states=20_000)):
            name = forms.get(x.letters)
            if name:
                return name
    return None


def certify(w: BraidWord, budget: Budget = Budget(), knots_only: bool = True,
            check_exceptions: bool = True) -> CertifyOutcome:
    """Decide the word: Certified, KnownException, NotApplicable or Unknown.

    With knots_only=False the component gate is lifted, so multi-component
    closures may also receive certificates. check_exceptions=False skips the
    exception list and runs the search on those words too.
    """
    summary = closure_summary(w)
    g = summary.genus
    info = {"genus": int(g) if g.denominator == 1 else str(g), "components": summary.components, "betti": summary.betti}
    name = known_exception(w) if check_exceptions else None
    if name:
        return CertifyOutcome("KnownException", name, summary=info)
    if not is_prime(w):
        return CertifyOutcome("NotApplicable", "not prime", summary=info)
    if summary.components == 1:
        info["arf"] = arf_of_word(w)
    eligible = (summary.components == 1 or not knots_only) and summary.betti >= 2 * H_MIN
    saw_e6 = False
    states = depth = 0
    for moves, x, d in move_search(w, budget):
        states, depth = states + 1, max(depth, d)
        g = linking_graph(x)
        if is_path_graph(g):
            return CertifyOutcome("NotApplicable", "type A_n", states=states, depth=depth, summary=info)
        adj = [set(a) for a in g.adjacency]
        if find_e6(adj) is None:
            continue
        saw_e6 = True
        if not eligible:
            continue
        cert = _certify_state(w, moves, x, g)
        if cert is not None:
            return CertifyOutcome("Certified", "", cert, states, depth, info)
    if not saw_e6:
        return CertifyOutcome("Unknown", "no E6 subtree found within budget", states=states, depth=depth, summary=info)
    if summary.betti < 2 * H_MIN:
        return CertifyOutcome("NotApplicable", "genus gate", states=states, depth=depth, summary=info)
    if summary.components != 1 and knots_only:
        return CertifyOutcome("NotApplicable", "not a knot", states=states, depth=depth, summary=info)
    return CertifyOutcome("Unknown", "no assemblage found within budget", states=states, depth=depth, summary=info)


def _certify_state(w, moves, x, g, tree_limit: int = 6):
    surface = None
    for n_tried, (seed, tree) in enumerate(candidate_trees(g, H_MIN)):
        if n_tried >= tree_limit:
            return None
        if surface is None:
            surface = BrickSurface(x)
        core = list(seed) + sorted(tree - set(seed))
        order = greedy_attachment(surface, core)
        if order is None:
            continue
        cert = build_certificate(w, moves, x, order, len(core), tuple(core[:6]))
        if cert is not None:
            return cert
    return None


# ---------------------------------------------------------------- families and enumeration

def three_braid_normal_forms(betti_values):
    """Words s1^a1 s2^b1 ... s1^am s2^bm (a_i >= 2, b_i >= 1), one per rotation of blocks."""
    out = []
    for b in sorted(set(betti_values)):
        total = b + 2  # c = b1 + N - 1 for connected 3-braids
        for m in range(1, total // 3 + 1):
            for blocks in _compositions(total, m):
                key = min(blocks[k:] + blocks[:k] for k in range(0, 2 * m, 2))
                if key != blocks:
                    continue
                letters = []
                for j in range(m):
                    letters += [1] * blocks[2 * j] + [2] * blocks[2 * j + 1]
                out.append(BraidWord(3, tuple(letters)))
    return out


def _compositions(total: int, m: int):
    mins = [2, 1] * m
    spare = total - sum(mins)
    if spare < 0:
        return
    for cuts in _weak(spare, 2 * m):
        yield tuple(x + y for x, y in zip(mins, cuts))


def _weak(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _weak(n - first, k - 1):
            yield (first,) + rest


def all_words(max_crossings: int, max_strands: int):
    for n in range(2, max_strands + 1):
        for c in range(1, max_crossings + 1):
            for letters in product(range(1, n), repeat=c):
                yield BraidWord(n, letters)


def _two_letter(x: int, y: int, max_exp: int):
    return [(x,) * p + (y,) * q for p in range(max_exp + 1) for q in range(max_exp + 1)]


def lemma_families(max_exp: int = 3):
    """Families A, B, C of link-forcing words, each free factor s_x^p s_y^q with p, q <= max_exp."""
    E = range(max_exp + 1)
    out = []
    for a, b, c, d, e in product(E, repeat=5):
        L = (1,) * a + (2,) + (3,) * b + (2,) + (1,) * c + (2,) + (3,) * d + (2,) + (1,) * e
        out.append(("A", BraidWord(4, L)))
    s34, s12, s14 = (_two_letter(x, y, max_exp) for x, y in ((3, 4), (1, 2), (1, 4)))
    for b1, b2, b3 in product(s34, s12, s34):
        out.append(("B", BraidWord(5, b1 + (2, 3) + b2 + (3, 2) + b3)))
    for b1, b2, b3, b4 in product(s14, s34, s12, s14):
        out.append(("C", BraidWord(5, b1 + (2,) + b2 + (2, 3) + b3 + (3,) + b4)))
    return out


def beta_family(n: int) -> BraidWord:
    return BraidWord(4, (1, 2, 2, 1) + (2,) * (n - 4) + (3, 2, 2, 3))


def family_words(spec: str):
    """Parse a family spec such as `3braids:10,12,14`, `words:8,4`, `lemma:3`, `beta:4-12`."""
    kind, _, arg = spec.partition(":")
    if kind == "3braids":
        return [("3braid", w) for w in three_braid_normal_forms(int(x) for x in arg.split(","))]
    if kind == "words":
        c, n = (int(x) for x in arg.split(","))
        return [("word", w) for w in all_words(c, n)]
    if kind == "lemma":
        return lemma_families(int(arg or 3))
    if kind == "beta":
        lo, _, hi = arg.partition("-")
        return [(f"beta{n}", beta_family(n)) for n in range(int(lo), int(hi or lo) + 1)]
    raise ValueError(f"unknown family {spec!r}")


TSV_HEADER = ("label", "word", "strands", "crossings", "components", "betti", "genus", "outcome", "detail")


def classify_row(item, budget: Budget = Budget()) -> tuple:
    label, w = item
    s = closure_summary(w)
    out = certify(w, budget)
    return (label, format_braid(w, declare=False) or "1", str(w.strands), str(len(w.letters)),
            str(s.components), str(s.betti), str(s.genus), out.kind, out.detail)


def enumerate_and_classify(items, budget: Budget = Budget(), jobs: int = 1):
    """Rows in input order; parallel runs give identical output."""
    items = list(items)
    if jobs <= 1:
        return [classify_row(it, budget) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(classify_row, items, [budget] * len(items), chunksize=4))


def to_tsv(rows) -> str:
    lines = ["\t".join(TSV_HEADER)] + ["\t".join(r) for r in rows]
    return "\n".join(lines) + "\n"


__all__ = [
    "Budget", "CertifyOutcome", "EXCEPTION_WORDS", "H_MIN", "Verification", "beta_family",
    "build_certificate", "canonical_json", "certify", "classify_row", "enumerate_and_classify",
    "family_words", "known_exception", "lemma_families", "move_search", "three_braid_normal_forms",
    "to_tsv", "verify_certificate",
]
