"""Chord diagrams as double-occurrence words.

A word is a tuple of chord ids ``0..n-1`` of length ``2n`` in which every id
occurs twice; position ``k`` is the ``k``-th endpoint met along the oriented
circle. A chord diagram is the canonical word of its rotation class (see
:func:`canonicalize`).

Transitions at a chord are labelled by :class:`Greek`. Given a state (one
label per chord) the circuit partition is traced by :func:`state_boundary_count`
and the transition polynomial is the state sum in :func:`q_chord`.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .gf2 import SimpleGraph
from .polynomial import Monomial, Polynomial

__all__ = [
    "Greek",
    "Convention",
    "ChordWordError",
    "parse",
    "validate",
    "canonicalize",
    "enumerate_diagrams",
    "intersection_graph",
    "multiply",
    "adjacent_pairs",
    "first_move",
    "second_move",
    "slide_position",
    "state_boundary_count",
    "q_chord",
    "four_term_sum",
    "word_text",
]

Word = Tuple[int, ...]


class Greek(enum.Enum):
    PHI = "phi"
    CHI = "chi"
    PSI = "psi"


class Convention(enum.Enum):
    """Weights attached to the three transition types.

    ``SEC4`` gives (phi, chi, psi) the weights (s, t, -t); ``SEC23`` swaps the
    roles of chi and psi, giving them -t and t.
    """

    SEC4 = "sec4"
    SEC23 = "sec23"

    def weight(self, g: Greek) -> Tuple[int, Monomial]:
        if g is Greek.PHI:
            return 1, Monomial(1, 0, 0)
        plus_t = (g is Greek.CHI) == (self is Convention.SEC4)
        return (1 if plus_t else -1), Monomial(0, 1, 0)


class ChordWordError(ValueError):
    pass


def validate(word: Sequence[int]) -> Word:
    word = tuple(word)
    counts: Dict[int, int] = {}
    for c in word:
        counts[c] = counts.get(c, 0) + 1
    for c, k in counts.items():
        if k != 2:
            raise ChordWordError(f"chord {c!r} occurs {k} time{'s' if k != 1 else ''}")
    if sorted(counts) != list(range(len(counts))):
        raise ChordWordError("chord ids must be 0..n-1")
    return word


def parse(text: str) -> Word:
    """Read a word such as ``"a b a b"`` or ``"abab"``.

    Symbols are whitespace separated if the text contains whitespace, single
    characters otherwise. Ids are assigned in order of first occurrence.
    """
    text = text.strip()
    symbols = text.split() if any(ch.isspace() for ch in text) else list(text)
    for sym in symbols:
        if not sym.isalnum():
            raise ChordWordError(f"symbol {sym!r} is not alphanumeric")
    counts: Dict[str, int] = {}
    for sym in symbols:
        counts[sym] = counts.get(sym, 0) + 1
    for sym, k in counts.items():
        if k != 2:
            raise ChordWordError(f"symbol {sym} occurs {_times(k)}")
    ids: Dict[str, int] = {}
    return tuple(ids.setdefault(sym, len(ids)) for sym in symbols)


def _times(k: int) -> str:
    return {1: "once", 3: "three times"}.get(k, f"{k} times")


def word_text(word: Sequence[int]) -> str:
    """Inverse of :func:`parse` for words with at most 26 chords."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    if len(word) > 2 * len(letters):
        return " ".join(f"c{c}" for c in word)
    return "".join(letters[c] for c in word)


def _relabel(word: Sequence[int]) -> Word:
    ids: Dict[int, int] = {}
    return tuple(ids.setdefault(c, len(ids)) for c in word)


def canonicalize(word: Sequence[int]) -> Word:
    """Lexicographically least first-occurrence relabelling over all rotations.

    Reflections are not identified: the circle is oriented.
    """
    word = tuple(word)
    if not word:
        return word
    return min(_relabel(word[k:] + word[:k]) for k in range(len(word)))


def _matchings(n: int):
    slots: List[int] = [-1] * (2 * n)

    def fill(label: int):
        try:
            first = slots.index(-1)
        except ValueError:
            yield tuple(slots)
            return
        slots[first] = label
        for j in range(first + 1, 2 * n):
            if slots[j] == -1:
                slots[j] = label
                yield from fill(label + 1)
                slots[j] = -1
        slots[first] = -1

    yield from fill(0)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[Word, ...]:
    return tuple(sorted({canonicalize(w) for w in _matchings(n)}))


def enumerate_diagrams(n: int) -> List[Word]:
    """All chord diagrams with ``n`` chords, ``1 <= n <= 7``, in sorted order."""
    if not 1 <= n <= 7:
        raise ValueError(f"n must be between 1 and 7, got {n}")
    return list(_enumerate(n))


def chord_ends(word: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    ends: Dict[int, List[int]] = {}
    for pos, c in enumerate(word):
        ends.setdefault(c, []).append(pos)
    return {c: (p[0], p[1]) for c, p in ends.items()}


def intersection_graph(word: Sequence[int]) -> SimpleGraph:
    ends = chord_ends(word)
    chords = sorted(ends)
    pairs = []
    for a, b in itertools.combinations(chords, 2):
        i, j = ends[a]
        inside = sum(i < p < j for p in ends[b])
        if inside == 1:
            pairs.append((a, b))
    return SimpleGraph.from_pairs(chords, pairs)


def multiply(c1: Sequence[int], c2: Sequence[int]) -> Word:
    """Cut both circles just before position 0 and glue: concatenate words."""
    shift = len(c1) // 2
    return canonicalize(tuple(c1) + tuple(c + shift for c in c2))


def adjacent_pairs(word: Sequence[int]) -> List[Tuple[int, int, int]]:
    L = len(word)
    return [(i, word[i], word[(i + 1) % L]) for i in range(L) if word[i] != word[(i + 1) % L]]


def _check_adjacent(word: Sequence[int], i: int) -> int:
    L = len(word)
    if not 0 <= i < L:
        raise ValueError(f"position {i} out of range for word of length {L}")
    j = (i + 1) % L
    if word[i] == word[j]:
        raise ValueError(f"positions {i} and {j} are ends of the same chord {word[i]}")
    return j


def first_move(word: Sequence[int], i: int) -> Word:
    """Exchange the neighbouring ends at positions ``i`` and ``i+1``."""
    j = _check_adjacent(word, i)
    out = list(word)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def _slide(word: Sequence[int], i: int, a_first: bool = True) -> Tuple[Word, int]:
    j = _check_adjacent(word, i)
    pa, pb = (i, j) if a_first else (j, i)
    far = next(p for p in chord_ends(word)[word[pb]] if p != pb)
    out = list(word)
    a = out.pop(pa)
    if far > pa:
        far -= 1
    if a_first:
        out.insert(far + 1, a)
        return tuple(out), far
    out.insert(far, a)
    return tuple(out), far


def second_move(word: Sequence[int], i: int, a_first: bool = True) -> Word:
    """Slide an end of chord a along the neighbouring chord b.

    With ``a_first`` the end of a sits at ``i`` and b at ``i+1``; the a-end is
    removed and re-inserted immediately after the other end of b. Otherwise b
    sits at ``i`` and a at ``i+1``, and the a-end goes immediately before the
    other end of b. Either way it stays on the same side of chord b.
    """
    return _slide(word, i, a_first)[0]


def slide_position(word: Sequence[int], i: int, a_first: bool = True) -> int:
    """Position ``k`` of the new adjacency created by ``second_move(word, i, a_first)``."""
    return _slide(word, i, a_first)[1]


def _count_cycles(n_nodes: int, joins) -> int:
    parent = list(range(n_nodes))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    comps = n_nodes
    for u, v in joins:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def state_boundary_count(word: Sequence[int], state: Sequence[Greek]) -> int:
    """Number of circles of the circuit partition given by ``state``.

    Arc ``k`` runs from position ``k`` to ``k+1``. At a chord with ends
    ``i < j`` the four half-edges are the arcs entering and leaving ``i`` and
    ``j``; the transition pairs them up and the circles are the components.
    ``state[c]`` is the label of chord ``c``.
    """
    L = len(word)
    if L == 0:
        return 1
    joins = []
    for c, (i, j) in chord_ends(word).items():
        in_i, out_i = (i - 1) % L, i
        in_j, out_j = (j - 1) % L, j
        g = state[c]
        if g is Greek.PHI:
            joins += [(in_i, out_i), (in_j, out_j)]
        elif g is Greek.CHI:
            joins += [(in_i, out_j), (in_j, out_i)]
        else:
            joins += [(in_i, in_j), (out_i, out_j)]
    return _count_cycles(L, joins)


@lru_cache(maxsize=1 << 16)
def _q_chord(word: Word, conv: Convention) -> Polynomial:
    n = len(word) // 2
    weights = {g: conv.weight(g) for g in Greek}
    out: Dict[Monomial, int] = {}
    for state in itertools.product(Greek, repeat=n):
        coeff, deg_s, deg_t = 1, 0, 0
        for g in state:
            c, m = weights[g]
            coeff *= c
            deg_s += m.s
            deg_t += m.t
        mono = Monomial(deg_s, deg_t, state_boundary_count(word, state) - 1)
        out[mono] = out.get(mono, 0) + coeff
    return Polynomial(out)


def q_chord(word: Sequence[int], conv: Convention = Convention.SEC4) -> Polynomial:
    """Transition polynomial of a chord diagram: sum over all 3^n states."""
    return _q_chord(tuple(word), Convention(conv))


def four_term_sum(word: Sequence[int], i: int, conv: Convention = Convention.SEC4) -> Polynomial:
    """``Q(C) - Q(C') - Q(C~) + Q(C~')`` for the chords meeting at positions i, i+1."""
    word = tuple(word)
    exchanged = first_move(word, i)
    slid, k = _slide(word, i)
    both = first_move(slid, k)
    return (
        q_chord(word, conv)
        - q_chord(exchanged, conv)
        - q_chord(slid, conv)
        + q_chord(both, conv)
    )
