"""Ribbon graphs as signed rotation systems.

A :class:`RibbonGraph` is a list of vertex rotations (cyclic sequences of
half-edge ids) together with edges pairing the half-edges, each edge carrying
a twist bit. Boundary components are counted by tracing sides of half-edges.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import chord
from .chord import Greek
from .polynomial import Monomial, Polynomial

__all__ = [
    "Edge",
    "RibbonGraph",
    "RibbonParseError",
    "boundary_components",
    "canonical_form",
    "first_move",
    "four_term_ribbon",
    "from_chord_state",
    "from_word",
    "handle_slide",
    "is_connected",
    "one_vertex_family",
    "multi_vertex_family",
    "neighbouring_ends",
    "other_end",
    "slid_side",
    "q_ribbon",
    "spanning_subgraph",
    "vertex_count",
]

Half = Hashable


class Edge(NamedTuple):
    name: Hashable
    h1: Half
    h2: Half
    twist: int = 0


class RibbonParseError(ValueError):
    pass


@dataclass(frozen=True)
class RibbonGraph:
    rotations: Tuple[Tuple[Half, ...], ...]
    edges: Tuple[Edge, ...]
    vertex_names: Optional[Tuple[Hashable, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "rotations", tuple(tuple(r) for r in self.rotations))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        seen = [h for rot in self.rotations for h in rot]
        if len(set(seen)) != len(seen):
            raise ValueError("a half-edge appears twice among the vertex rotations")
        paired = [h for e in self.edges for h in (e.h1, e.h2)]
        if len(set(paired)) != len(paired):
            raise ValueError("a half-edge belongs to two edges")
        if set(paired) != set(seen):
            raise ValueError("edges must partition the half-edges of the rotations")
        names = [e.name for e in self.edges]
        if len(set(names)) != len(names):
            raise ValueError("duplicate edge names")
        for e in self.edges:
            if e.twist not in (0, 1):
                raise ValueError(f"twist of edge {e.name!r} must be 0 or 1")
        if self.vertex_names is not None and len(self.vertex_names) != len(self.rotations):
            raise ValueError("one name per vertex expected")

    @property
    def edge_names(self) -> Tuple[Hashable, ...]:
        return tuple(e.name for e in self.edges)

    def edge(self, name) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise KeyError(name)

    def edge_of(self, h: Half) -> Edge:
        for e in self.edges:
            if h in (e.h1, e.h2):
                return e
        raise KeyError(h)

    def vertex_of(self, h: Half) -> int:
        for v, rot in enumerate(self.rotations):
            if h in rot:
                return v
        raise KeyError(h)

    def names(self) -> Tuple[Hashable, ...]:
        if self.vertex_names is not None:
            return self.vertex_names
        return tuple(f"v{i}" for i in range(len(self.rotations)))

    def to_text(self) -> str:
        lines = [f"vertex {name}: {' '.join(map(str, rot))}".rstrip()
                 for name, rot in zip(self.names(), self.rotations)]
        lines += [f"edge {e.name}: {e.h1} {e.h2} twist={e.twist}" for e in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "RibbonGraph":
        return parse(text)


def parse(text: str) -> RibbonGraph:
    """Read the line format ``vertex <name>: h1 h2 ...`` / ``edge <name>: hi hj twist=<0|1>``."""
    names, rotations, edges = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] not in ("vertex", "edge"):
            raise RibbonParseError(f"line {lineno}: expected 'vertex <name>:' or 'edge <name>:'")
        kind, name = parts
        tokens = body.split()
        if kind == "vertex":
            names.append(name)
            rotations.append(tuple(tokens))
        else:
            if len(tokens) != 3 or not tokens[2].startswith("twist="):
                raise RibbonParseError(f"line {lineno}: expected 'edge {name}: hi hj twist=<0|1>'")
            twist = tokens[2][len("twist="):]
            if twist not in ("0", "1"):
                raise RibbonParseError(f"line {lineno}: twist must be 0 or 1")
            edges.append(Edge(name, tokens[0], tokens[1], int(twist)))
    try:
        return RibbonGraph(tuple(rotations), tuple(edges), tuple(names))
    except ValueError as exc:
        raise RibbonParseError(str(exc)) from None


def _boundary(rotations: Sequence[Sequence[Half]], edges: Iterable[Tuple[Half, Half, int]]) -> int:
    # nodes: 2*k is the left side of half-edge k, 2*k+1 its right side
    index: Dict[Half, int] = {}
    isolated = 0
    for rot in rotations:
        if not rot:
            isolated += 1
        for h in rot:
            index[h] = len(index)
    parent = list(range(2 * len(index)))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def join(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            return 1
        return 0

    merges = 0
    for rot in rotations:
        k = len(rot)
        for pos in range(k):
            # corner between h and the next half-edge counterclockwise
            merges += join(2 * index[rot[pos]] + 1, 2 * index[rot[(pos + 1) % k]])
    for h1, h2, twist in edges:
        l1, l2 = 2 * index[h1], 2 * index[h2]
        if twist:
            merges += join(l1, l2) + join(l1 + 1, l2 + 1)
        else:
            merges += join(l1, l2 + 1) + join(l1 + 1, l2)
    return len(parent) - merges + isolated


def boundary_components(r: RibbonGraph) -> int:
    return _boundary(r.rotations, ((e.h1, e.h2, e.twist) for e in r.edges))


def vertex_count(r: RibbonGraph) -> int:
    return len(r.rotations)


def is_connected(r: RibbonGraph) -> bool:
    n = len(r.rotations)
    if n == 0:
        return True
    where = {h: v for v, rot in enumerate(r.rotations) for h in rot}
    adj: Dict[int, set] = {v: set() for v in range(n)}
    for e in r.edges:
        u, v = where[e.h1], where[e.h2]
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def spanning_subgraph(r: RibbonGraph, keep: Iterable[Hashable]) -> RibbonGraph:
    keep = set(keep)
    unknown = keep - set(r.edge_names)
    if unknown:
        raise KeyError(f"unknown edges {sorted(map(str, unknown))}")
    edges = tuple(e for e in r.edges if e.name in keep)
    halves = {h for e in edges for h in (e.h1, e.h2)}
    rotations = tuple(tuple(h for h in rot if h in halves) for rot in r.rotations)
    return RibbonGraph(rotations, edges, r.vertex_names)


def from_chord_state(word: Sequence[int], state: Sequence[Greek]) -> RibbonGraph:
    """One-vertex ribbon graph of a labelled chord diagram.

    Half-edges are word positions and edges are named by chord id; PHI chords
    are dropped, CHI chords become untwisted ribbons and PSI chords twisted ones.
    """
    ends = chord.chord_ends(word)
    keep = {c for c in ends if state[c] is not Greek.PHI}
    rotation = tuple(p for p, c in enumerate(word) if c in keep)
    edges = tuple(Edge(c, ends[c][0], ends[c][1], int(state[c] is Greek.PSI)) for c in sorted(keep))
    return RibbonGraph((rotation,), edges)


def from_word(word: Sequence[int], twists: Sequence[int] | None = None) -> RibbonGraph:
    """One-vertex ribbon graph with a ribbon per chord; ``twists[c]`` defaults to 0."""
    n = len(word) // 2
    twists = tuple(twists) if twists is not None else (0,) * n
    ends = chord.chord_ends(word)
    edges = tuple(Edge(c, ends[c][0], ends[c][1], twists[c]) for c in range(n))
    return RibbonGraph((tuple(range(len(word))),), edges)


def q_ribbon(r: RibbonGraph) -> Polynomial:
    """Sum over PHI/CHI/PSI labellings of the edges.

    PHI erases the ribbon (weight s), CHI keeps it (weight t), PSI adds a half
    twist to it (weight -t); each state contributes x^(boundary - 1).
    """
    out: Dict[Monomial, int] = {}
    edges = r.edges
    for state in itertools.product(Greek, repeat=len(edges)):
        kept = []
        n_phi = n_psi = 0
        for e, g in zip(edges, state):
            if g is Greek.PHI:
                n_phi += 1
            else:
                flip = g is Greek.PSI
                n_psi += flip
                kept.append((e.h1, e.h2, e.twist ^ flip))
        halves = {h for h1, h2, _ in kept for h in (h1, h2)}
        rotations = [[h for h in rot if h in halves] for rot in r.rotations]
        mono = Monomial(n_phi, len(edges) - n_phi, _boundary(rotations, kept) - 1)
        out[mono] = out.get(mono, 0) + (-1) ** n_psi
    return Polynomial(out)


def _locate(r: RibbonGraph, h: Half) -> Tuple[int, int]:
    for v, rot in enumerate(r.rotations):
        if h in rot:
            return v, rot.index(h)
    raise KeyError(f"unknown half-edge {h!r}")


def _check_neighbours(r: RibbonGraph, ha: Half, hb: Half, a_first: bool) -> None:
    """Require ``hb`` right after ``ha`` (``a_first``) or right before it."""
    if r.edge_of(ha).name == r.edge_of(hb).name:
        raise ValueError("the two ends belong to the same ribbon")
    va, pa = _locate(r, ha)
    vb, pb = _locate(r, hb)
    k = len(r.rotations[va])
    first, second = (pa, pb) if a_first else (pb, pa)
    if va != vb or (first + 1) % k != second:
        order = (ha, hb) if a_first else (hb, ha)
        raise ValueError(f"half-edge {order[1]!r} does not immediately follow {order[0]!r}")


def _other(e: Edge, h: Half) -> Half:
    return e.h2 if h == e.h1 else e.h1


def other_end(r: RibbonGraph, h: Half) -> Half:
    return _other(r.edge_of(h), h)


def first_move(r: RibbonGraph, ha: Half, hb: Half, a_first: bool = True) -> RibbonGraph:
    """Exchange two neighbouring ribbon ends (transpose them in the rotation)."""
    _check_neighbours(r, ha, hb, a_first)
    v, pa = _locate(r, ha)
    _, pb = _locate(r, hb)
    rot = list(r.rotations[v])
    rot[pa], rot[pb] = rot[pb], rot[pa]
    rotations = r.rotations[:v] + (tuple(rot),) + r.rotations[v + 1:]
    return RibbonGraph(rotations, r.edges, r.vertex_names)


def handle_slide(r: RibbonGraph, ha: Half, hb: Half, a_first: bool = True) -> RibbonGraph:
    """Slide the end ``ha`` of ribbon a along its neighbouring ribbon b (end ``hb``).

    The end travels along one side of b and is re-attached beside b's far end.
    Along an untwisted b the side flips between "before" and "after" in the
    rotation; along a twisted b it stays and a's twist bit toggles.
    ``a_first`` says whether ``ha`` sits just before ``hb`` or just after it.
    """
    _check_neighbours(r, ha, hb, a_first)
    ea, eb = r.edge_of(ha), r.edge_of(hb)
    far = _other(eb, hb)
    rotations = [list(rot) for rot in r.rotations]
    va, pa = _locate(r, ha)
    rotations[va].pop(pa)
    vf = next(v for v, rot in enumerate(rotations) if far in rot)
    pf = rotations[vf].index(far)
    before = a_first == bool(eb.twist)
    rotations[vf].insert(pf if before else pf + 1, ha)
    edges = tuple(e._replace(twist=e.twist ^ eb.twist) if e.name == ea.name else e for e in r.edges)
    return RibbonGraph(tuple(map(tuple, rotations)), edges, r.vertex_names)


def slid_side(r: RibbonGraph, hb: Half, a_first: bool = True) -> bool:
    """Value of ``a_first`` for the slid end relative to the far end of b."""
    return a_first == bool(r.edge_of(hb).twist)


def four_term_ribbon(r: RibbonGraph, ha: Half, hb: Half, a_first: bool = True) -> Polynomial:
    """``Q(R) - Q(R') - Q(R~) + Q(R~')`` for neighbouring ends ``ha``, ``hb``."""
    exchanged = first_move(r, ha, hb, a_first)
    slid = handle_slide(r, ha, hb, a_first)
    far = _other(r.edge_of(hb), hb)
    both = first_move(slid, ha, far, slid_side(r, hb, a_first))
    return q_ribbon(r) - q_ribbon(exchanged) - q_ribbon(slid) + q_ribbon(both)


def neighbouring_ends(r: RibbonGraph) -> List[Tuple[Half, Half]]:
    """All ordered pairs (h, next h) of consecutive half-edges on distinct ribbons."""
    out = []
    for rot in r.rotations:
        k = len(rot)
        for pos in range(k):
            ha, hb = rot[pos], rot[(pos + 1) % k]
            if ha != hb and r.edge_of(ha).name != r.edge_of(hb).name:
                out.append((ha, hb))
    return out


def _component_code(r: RibbonGraph, start_v: int, start_pos: int):
    rots = r.rotations
    where = {h: (v, p) for v, rot in enumerate(rots) for p, h in enumerate(rot)}
    partner = {}
    twist = {}
    for e in r.edges:
        partner[e.h1], partner[e.h2] = e.h2, e.h1
        twist[e.h1] = twist[e.h2] = e.twist
    vorder = [(start_v, start_pos)]
    vlabel = {start_v: 0}
    hlabel: Dict[Half, int] = {}
    i = 0
    while i < len(vorder):
        v, p = vorder[i]
        rot = rots[v]
        for k in range(len(rot)):
            h = rot[(p + k) % len(rot)]
            hlabel[h] = len(hlabel)
            w, q = where[partner[h]]
            if w not in vlabel:
                vlabel[w] = len(vorder)
                vorder.append((w, q))
        i += 1
    code = []
    for v, p in vorder:
        rot = rots[v]
        code.append(tuple((hlabel[partner[rot[(p + k) % len(rot)]]], twist[rot[(p + k) % len(rot)]])
                          for k in range(len(rot))))
    return tuple(code), frozenset(vlabel)


def canonical_form(r: RibbonGraph):
    """Isomorphism invariant code: relabel half-edges and vertices, rotate rotations.

    Exhaustive over root choices; intended for graphs with a handful of edges.
    Local orientation reversals at vertices are not identified.
    """
    remaining = set(range(len(r.rotations)))
    comps = []
    while remaining:
        v0 = min(remaining)
        if not r.rotations[v0]:
            comps.append(((),))
            remaining.discard(v0)
            continue
        _, members = _component_code(r, v0, 0)
        best = min(
            _component_code(r, v, p)[0] for v in members for p in range(len(r.rotations[v]))
        )
        comps.append(best)
        remaining -= members
    return tuple(sorted(comps))


def one_vertex_family(max_edges: int) -> List[RibbonGraph]:
    """Every chord diagram with at most ``max_edges`` chords, with every twist pattern."""
    out = [RibbonGraph(((),), ())]
    for n in range(1, max_edges + 1):
        for w in chord.enumerate_diagrams(n):
            for twists in itertools.product((0, 1), repeat=n):
                out.append(from_word(w, twists))
    return out


def _build(assign: Sequence[int], orders: Sequence[Sequence[int]], twists: Sequence[int]) -> RibbonGraph:
    n_edges = len(twists)
    edges = tuple(Edge(f"e{k}", 2 * k, 2 * k + 1, twists[k]) for k in range(n_edges))
    return RibbonGraph(tuple(tuple(o) for o in orders), edges)


def _all_graphs(n_vertices: int, n_edges: int):
    halves = list(range(2 * n_edges))
    for assign in itertools.product(range(n_vertices), repeat=len(halves)):
        groups = [[h for h in halves if assign[h] == v] for v in range(n_vertices)]
        if any(not g for g in groups):
            continue
        per_vertex = [[(g[0],) + p for p in itertools.permutations(g[1:])] for g in groups]
        for orders in itertools.product(*per_vertex):
            for twists in itertools.product((0, 1), repeat=n_edges):
                yield _build(assign, orders, twists)


def _random_graph(rng: random.Random, n_vertices: int, n_edges: int) -> RibbonGraph:
    halves = list(range(2 * n_edges))
    while True:
        rng.shuffle(halves)
        cuts = sorted(rng.sample(range(1, len(halves)), n_vertices - 1))
        bounds = [0] + cuts + [len(halves)]
        orders = [halves[bounds[k]:bounds[k + 1]] for k in range(n_vertices)]
        twists = [rng.randint(0, 1) for _ in range(n_edges)]
        g = _build((), orders, twists)
        if is_connected(g):
            return g


def multi_vertex_family(
    max_edges: int = 4,
    exhaustive_edges: int = 3,
    sample_per_size: int = 150,
    seed: int = 20240117,
) -> List[RibbonGraph]:
    """Connected ribbon graphs with two or three vertices.

    All isomorphism classes with at most ``exhaustive_edges`` edges, plus a
    seeded random sample of ``sample_per_size`` classes for each (vertex
    count, edge count) above that, up to ``max_edges``.
    """
    seen = set()
    out = []

    def keep(g):
        code = canonical_form(g)
        if code not in seen:
            seen.add(code)
            out.append(g)
            return True
        return False

    for n_vertices in (2, 3):
        for n_edges in range(n_vertices - 1, min(max_edges, exhaustive_edges) + 1):
            for g in _all_graphs(n_vertices, n_edges):
                if is_connected(g):
                    keep(g)
    rng = random.Random(seed)
    for n_vertices in (2, 3):
        for n_edges in range(max(exhaustive_edges + 1, n_vertices - 1), max_edges + 1):
            found = tries = 0
            while found < sample_per_size and tries < 50 * sample_per_size:
                tries += 1
                found += keep(_random_graph(rng, n_vertices, n_edges))
    return out
