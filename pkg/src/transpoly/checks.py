"""Exhaustive identity checks shared by the CLI and the test suite.

Each ``check_*`` function returns a :class:`CheckResult`. A check passes when
it found no counterexample; failures keep the offending instances in their
text input format so they can be fed back to the CLI.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence

from . import chord, delta_matroid as dm, gf2, ribbon
from .chord import Convention, Greek
from .polynomial import ZERO, Polynomial

MAX_CHORDS = 6
MAX_EDGES = 5


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    detail: dict = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    max_residual: Polynomial = ZERO

    @property
    def passed(self) -> bool:
        return not self.failures

    def record_residual(self, residual: Polynomial, instance: Callable[[], str]) -> None:
        self.instances += 1
        if residual:
            self.failures.append(instance())
            if _size(residual) > _size(self.max_residual):
                self.max_residual = residual

    def record(self, ok: bool, instance: Callable[[], str]) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(instance())

    def summary(self) -> str:
        parts = [f"{self.name}:"]
        parts += [f"{k}={v}" for k, v in self.detail.items()]
        parts.append(f"instances={self.instances}")
        return " ".join(parts)

    def report(self, show_failures: int = 1) -> str:
        lines = [self.line()]
        for text in self.failures[:show_failures]:
            lines.append("  counterexample:")
            lines += ["    " + ln for ln in text.rstrip("\n").splitlines()]
        return "\n".join(lines)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.summary()} failures={len(self.failures)} {status}"


def _size(p: Polynomial) -> tuple:
    return (max((abs(c) for c in p.terms.values()), default=0), len(p))


def _check_bound(value: int, limit: int, what: str) -> None:
    if not 1 <= value <= limit:
        raise ValueError(f"{what} must be between 1 and {limit}, got {value}")


def diagrams_up_to(max_n: int) -> List[tuple]:
    return [w for n in range(1, max_n + 1) for w in chord.enumerate_diagrams(n)]


def check_chord_4t(max_n: int, conventions: Sequence[Convention] = tuple(Convention)) -> CheckResult:
    _check_bound(max_n, MAX_CHORDS, "--max-n")
    words = diagrams_up_to(max_n)
    res = CheckResult("chord-4t", detail={"diagrams": len(words)})
    for w in words:
        for i, a, b in chord.adjacent_pairs(w):
            for conv in conventions:
                res.record_residual(
                    chord.four_term_sum(w, i, conv),
                    lambda: f"word: {chord.word_text(w)}\nposition: {i}\nconvention: {conv.value}",
                )
    res.detail["max_residual"] = res.max_residual.to_text()
    return res


def check_multiplicativity(max_n: int) -> CheckResult:
    _check_bound(max_n, MAX_CHORDS, "--max-n")
    words = diagrams_up_to(max_n)
    res = CheckResult("chord-mult", detail={"diagrams": len(words)})
    for w1, w2 in itertools.product(words, repeat=2):
        for conv in Convention:
            res.record_residual(
                chord.q_chord(chord.multiply(w1, w2), conv) - chord.q_chord(w1, conv) * chord.q_chord(w2, conv),
                lambda: f"words: {chord.word_text(w1)} {chord.word_text(w2)}\nconvention: {conv.value}",
            )
    return res


def check_corank(max_n: int) -> CheckResult:
    _check_bound(max_n, MAX_CHORDS, "--max-n")
    words = diagrams_up_to(max_n)
    res = CheckResult("corank", detail={"diagrams": len(words)})
    for w in words:
        corank = gf2.adjacency(chord.intersection_graph(w)).corank()
        bcount = ribbon.boundary_components(ribbon.from_word(w))
        res.record(corank + 1 == bcount, lambda: f"word: {chord.word_text(w)}")
    return res


def check_convention_symmetry(max_n: int) -> CheckResult:
    _check_bound(max_n, MAX_CHORDS, "--max-n")
    words = diagrams_up_to(max_n)
    res = CheckResult("convention-symmetry", detail={"diagrams": len(words)})
    for w in words:
        res.record_residual(
            chord.q_chord(w, Convention.SEC23) - chord.q_chord(w, Convention.SEC4).substitute_neg_t(),
            lambda: f"word: {chord.word_text(w)}",
        )
    return res


def check_state_oracle(max_n: int) -> CheckResult:
    _check_bound(max_n, MAX_CHORDS, "--max-n")
    words = diagrams_up_to(max_n)
    res = CheckResult("state-oracle", detail={"diagrams": len(words)})
    for w in words:
        for st in itertools.product(Greek, repeat=len(w) // 2):
            res.record(
                chord.state_boundary_count(w, st) == ribbon.boundary_components(ribbon.from_chord_state(w, st)),
                lambda: f"word: {chord.word_text(w)}\nstate: {' '.join(g.value for g in st)}",
            )
    return res


def ribbon_instances(max_edges: int) -> List[ribbon.RibbonGraph]:
    """One-vertex graphs with every twist pattern plus the 2-3 vertex family."""
    _check_bound(max_edges, MAX_EDGES, "--max-edges")
    return ribbon.one_vertex_family(max_edges) + ribbon.multi_vertex_family(max_edges)


def distinct_delta_matroids(graphs: Iterable[ribbon.RibbonGraph]) -> List[dm.SetSystem]:
    seen = {}
    for r in graphs:
        d = dm.from_ribbon_graph(r)
        seen.setdefault(d, d)
    return list(seen)


def check_qdr(max_edges: int, graphs: Optional[Sequence[ribbon.RibbonGraph]] = None) -> CheckResult:
    graphs = ribbon_instances(max_edges) if graphs is None else graphs
    res = CheckResult("qdr", detail={"graphs": len(graphs)})
    for r in graphs:
        res.record_residual(dm.q_dm(dm.from_ribbon_graph(r)) - ribbon.q_ribbon(r), r.to_text)
    return res


def check_q_pair(d: dm.SetSystem, r: ribbon.RibbonGraph) -> CheckResult:
    """Q of a given set system against Q of a given ribbon graph."""
    res = CheckResult("qdr", detail={"graphs": 1})
    res.record_residual(dm.q_dm(d) - ribbon.q_ribbon(r), lambda: d.to_text() + r.to_text())
    return res


def check_dm_4t_on(systems: Iterable[dm.SetSystem], name: str = "dm-4t") -> CheckResult:
    systems = list(systems)
    res = CheckResult(name, detail={"set_systems": len(systems)})
    for d in systems:
        for a, b in itertools.permutations(d.ground, 2):
            res.record_residual(dm.four_term_dm(d, a, b), lambda: f"{d.to_text()}# pair: {a} {b}\n")
    res.detail["max_residual"] = res.max_residual.to_text()
    return res


def check_dm_4t(max_edges: int, dual_edges: int = 3, graphs=None) -> CheckResult:
    graphs = ribbon_instances(max_edges) if graphs is None else graphs
    systems = distinct_delta_matroids(graphs)
    duals = {}
    for d in systems:
        if len(d.ground) <= dual_edges:
            for k in range(len(d.ground) + 1):
                for subset in itertools.combinations(d.ground, k):
                    e = dm.twist(d, subset)
                    duals.setdefault(e, e)
    merged = dict.fromkeys(systems)
    merged.update(dict.fromkeys(duals))
    res = check_dm_4t_on(merged, "dm-4t")
    res.detail = {"ribbon_systems": len(systems), "partial_duals": len(duals),
                  "max_residual": res.detail["max_residual"]}
    return res


def check_vertex_count(max_edges: int, graphs=None) -> CheckResult:
    graphs = ribbon_instances(max_edges) if graphs is None else graphs
    res = CheckResult("vertex-count", detail={"graphs": len(graphs)})
    for r in graphs:
        res.record(dm.d0(dm.from_ribbon_graph(r)) + 1 == ribbon.vertex_count(r), r.to_text)
    return res


def check_bc(max_edges: int, graphs=None) -> CheckResult:
    graphs = ribbon_instances(max_edges) if graphs is None else graphs
    res = CheckResult("boundary-bc", detail={"graphs": len(graphs)})
    for r in graphs:
        res.record(dm.bc(dm.from_ribbon_graph(r)) == ribbon.boundary_components(r), r.to_text)
    return res


def check_ribbon_4t(max_edges: int, graphs=None) -> CheckResult:
    graphs = ribbon_instances(max_edges) if graphs is None else graphs
    res = CheckResult("ribbon-4t", detail={"graphs": len(graphs)})
    for r in graphs:
        for h1, h2 in ribbon.neighbouring_ends(r):
            for ha, hb, a_first in ((h1, h2, True), (h2, h1, False)):
                res.record_residual(
                    ribbon.four_term_ribbon(r, ha, hb, a_first),
                    lambda: f"{r.to_text()}# ends: {ha} {hb} a_first={int(a_first)}\n",
                )
    res.detail["max_residual"] = res.max_residual.to_text()
    return res


def random_set_systems(count: int, max_elements: int = 6, seed: int = 1) -> List[dm.SetSystem]:
    """Seeded random non-empty families on 3..max_elements elements."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_elements)
        density = rng.choice((0.2, 0.5, 0.8))
        fam = [m for m in range(1 << n) if rng.random() < density] or [rng.randrange(1 << n)]
        out.append(dm.SetSystem(tuple("abcdef"[:n]), tuple(fam)))
    return out


_UNARY = (("*", dm.twist), ("+", dm.loop_complement), ("*bar", dm.dual_pivot))


def check_algebra(systems: Iterable[dm.SetSystem]) -> List[CheckResult]:
    """Deletion identities, bridge preservation, commutation with the moves, involutions."""
    systems = list(systems)
    ident = CheckResult("deletion-identities", detail={"set_systems": len(systems)})
    bridge = CheckResult("bridge-preservation", detail={"set_systems": len(systems)})
    commute = CheckResult("move-commutation", detail={"set_systems": len(systems)})
    invol = CheckResult("move-involutions", detail={"set_systems": len(systems)})
    for d in systems:
        text = d.to_text
        for u, v in itertools.permutations(d.ground, 2):
            ident.record(dm.delete(d + u, v) == dm.delete(d, v) + u, text)
            ident.record(dm.delete(d * u, v) == dm.delete(d, v) * u, text)
            invol.record(dm.slide(dm.slide(d, u, v), u, v) == d, text)
            invol.record(dm.exchange(dm.exchange(d, u, v), u, v) == d, text)
        for u in d.ground:
            ident.record(dm.delete(d + u, u) == dm.delete(d, u), text)
        for a, b, u in itertools.permutations(d.ground, 3):
            images = [op(d, a) for _, op in _UNARY]
            slid = dm.slide(d, a, b)
            images += [dm.exchange(d, a, b), slid, dm.exchange(slid, a, b)]
            br = dm.is_bridge(d, u)
            bridge.record(all(dm.is_bridge(e, u) == br for e in images), text)
            for _, op in _UNARY:
                commute.record(dm.exchange(op(d, u), a, b) == op(dm.exchange(d, a, b), u), text)
                commute.record(dm.slide(op(d, u), a, b) == op(slid, u), text)
    return [ident, bridge, commute, invol]


def check_d0_deletion(systems: Iterable[dm.SetSystem]) -> CheckResult:
    """d0 drops by one when a bridge is deleted and is unchanged otherwise."""
    systems = list(systems)
    res = CheckResult("d0-deletion", detail={"set_systems": len(systems)})
    for d in systems:
        for u in d.ground:
            shift = 1 if dm.is_bridge(d, u) else 0
            res.record(dm.d0(d) == dm.d0(dm.delete(d, u)) + shift, d.to_text)
    return res


def check_dual_bc(systems: Iterable[dm.SetSystem]) -> CheckResult:
    """bc of the full partial dual is d0 + 1."""
    systems = list(systems)
    res = CheckResult("dual-bc", detail={"set_systems": len(systems)})
    for d in systems:
        res.record(dm.bc(dm.twist(d, d.ground)) == dm.d0(d) + 1, d.to_text)
    return res
