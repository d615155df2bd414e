"""Set systems, binary delta-matroids and their transition polynomial.

A :class:`SetSystem` has an ordered ground set and a family of feasible
sets stored as a sorted tuple of bitmasks (bit ``k`` is ``ground[k]``). Every
operation below is a literal set computation on that family; results are new
set systems over the same (or a shrunk) ground set.

Composite operations act left to right, so the usual ``D + A * B`` is
``twist(loop_complement(D, A), B)``. With the operator sugar on
:class:`SetSystem` it must be written ``(D + A) * B`` because Python gives
``*`` precedence over ``+``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

from .gf2 import GF2Matrix, SimpleGraph, adjacency
from .polynomial import Monomial, Polynomial
from . import ribbon as _ribbon

__all__ = [
    "SetSystem",
    "SetSystemParseError",
    "bc",
    "contract",
    "d0",
    "d_of",
    "delete",
    "dual_pivot",
    "exchange",
    "four_term_dm",
    "from_ribbon_graph",
    "from_simple_graph",
    "is_bridge",
    "is_graphic",
    "is_loop",
    "loop_complement",
    "q_dm",
    "slide",
    "twist",
    "validate_sea",
]

Family = FrozenSet[int]


class SetSystemParseError(ValueError):
    pass


@dataclass(frozen=True)
class SetSystem:
    ground: Tuple[Hashable, ...]
    feasible: Tuple[int, ...]

    def __post_init__(self):
        ground = tuple(self.ground)
        if len(set(ground)) != len(ground):
            raise ValueError("duplicate ground-set elements")
        fam = tuple(sorted(set(self.feasible)))
        limit = 1 << len(ground)
        for f in fam:
            if not 0 <= f < limit:
                raise ValueError(f"feasible mask {f} is not a subset of the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "feasible", fam)

    @classmethod
    def from_sets(cls, ground: Sequence[Hashable], sets: Iterable[Iterable[Hashable]]) -> "SetSystem":
        index = {e: k for k, e in enumerate(ground)}
        masks = []
        for s in sets:
            m = 0
            for e in s:
                if e not in index:
                    raise ValueError(f"{e!r} is not in the ground set")
                m |= 1 << index[e]
            masks.append(m)
        return cls(tuple(ground), tuple(masks))

    def mask(self, elements: Iterable[Hashable]) -> int:
        m = 0
        for e in elements:
            m |= 1 << self.index(e)
        return m

    def index(self, e: Hashable) -> int:
        try:
            return self.ground.index(e)
        except ValueError:
            raise KeyError(f"{e!r} is not in the ground set") from None

    def sets(self) -> List[FrozenSet[Hashable]]:
        return [frozenset(self.ground[k] for k in range(len(self.ground)) if f >> k & 1)
                for f in self.feasible]

    @property
    def family(self) -> Family:
        return frozenset(self.feasible)

    def _with(self, fam: Iterable[int]) -> "SetSystem":
        return SetSystem(self.ground, tuple(fam))

    def to_text(self) -> str:
        def fmt(f):
            return "{" + " ".join(str(self.ground[k]) for k in range(len(self.ground)) if f >> k & 1) + "}"

        ordered = sorted(self.feasible, key=lambda f: (bin(f).count("1"), [k for k in range(len(self.ground)) if f >> k & 1]))
        return f"ground: {' '.join(map(str, self.ground))}".rstrip() + "\n" + \
            f"feasible: {', '.join(fmt(f) for f in ordered)}".rstrip() + "\n"

    @classmethod
    def parse(cls, text: str) -> "SetSystem":
        return parse(text)

    # operator sugar; parenthesise mixed expressions, see the module docstring
    def __add__(self, elements) -> "SetSystem":
        return loop_complement(self, elements)

    def __mul__(self, elements) -> "SetSystem":
        return twist(self, elements)


def parse(text: str) -> SetSystem:
    """Read ``ground: a b c`` and ``feasible: {}, {a b}, {a c}`` lines."""
    ground = None
    groups = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, body = line.partition(":")
        key = key.strip()
        if not sep or key not in ("ground", "feasible"):
            raise SetSystemParseError(f"line {lineno}: expected 'ground:' or 'feasible:'")
        if key == "ground":
            ground = body.split()
        else:
            body = body.strip()
            groups = []
            if body:
                pos = 0
                for m in re.finditer(r"\s*\{([^{}]*)\}\s*(,|$)", body):
                    if m.start() != pos:
                        raise SetSystemParseError(f"line {lineno}: malformed set near {body[pos:]!r}")
                    groups.append(m.group(1).split())
                    pos = m.end()
                if pos != len(body) or not groups:
                    raise SetSystemParseError(f"line {lineno}: malformed set list {body!r}")
    if ground is None or groups is None:
        raise SetSystemParseError("both 'ground:' and 'feasible:' lines are required")
    try:
        return SetSystem.from_sets(ground, groups)
    except ValueError as exc:
        raise SetSystemParseError(str(exc)) from None


def _elements_mask(d: SetSystem, elements) -> int:
    """A single ground element or an iterable of them, as a bitmask."""
    if _hashable(elements) and elements in d.ground:
        return 1 << d.index(elements)
    return d.mask(elements)


def _hashable(x) -> bool:
    try:
        hash(x)
    except TypeError:
        return False
    return True


def _bits(mask: int) -> List[int]:
    return [1 << k for k in range(mask.bit_length()) if mask >> k & 1]


# family-level kernels -------------------------------------------------------

def _twist(fam: Family, m: int) -> Family:
    return frozenset(f ^ m for f in fam)


def _loop_complement_1(fam: Family, u: int) -> Family:
    return fam ^ frozenset(f | u for f in fam if not f & u)


def _loop_complement(fam: Family, m: int) -> Family:
    for u in _bits(m):
        fam = _loop_complement_1(fam, u)
    return fam


def _dual_pivot(fam: Family, m: int) -> Family:
    return _loop_complement(_twist(_loop_complement(fam, m), m), m)


def _slide(fam: Family, a: int, b: int) -> Family:
    return fam ^ frozenset((f ^ b) | a for f in fam if f & b and not f & a)


def _exchange(fam: Family, a: int, b: int) -> Family:
    return _twist(_slide(_twist(fam, b), a, b), b)


def _d0(fam: Family) -> int:
    if not fam:
        raise ValueError("empty feasible family")
    return min(bin(f).count("1") for f in fam)


# public operations ----------------------------------------------------------

def validate_sea(d: SetSystem) -> bool:
    """Brute-force check of the symmetric exchange axiom."""
    fam = d.family
    if not fam:
        raise ValueError("empty feasible family")
    for x in fam:
        for y in fam:
            diff = x ^ y
            for a in _bits(diff):
                if not any((x ^ a ^ b if b != a else x ^ a) in fam for b in _bits(diff)):
                    return False
    return True


def twist(d: SetSystem, elements) -> SetSystem:
    """Partial dual ``d * A``: feasible sets become ``F ^ A``."""
    return d._with(_twist(d.family, _elements_mask(d, elements)))


def loop_complement(d: SetSystem, elements) -> SetSystem:
    """``d + u``; for several elements they are applied one after another in ground order."""
    return d._with(_loop_complement(d.family, _elements_mask(d, elements)))


def dual_pivot(d: SetSystem, elements) -> SetSystem:
    """``d + A * A + A``."""
    return d._with(_dual_pivot(d.family, _elements_mask(d, elements)))


def is_bridge(d: SetSystem, a) -> bool:
    m = 1 << d.index(a)
    return all(f & m for f in d.feasible)


def is_loop(d: SetSystem, a) -> bool:
    m = 1 << d.index(a)
    return not any(f & m for f in d.feasible)


def _drop(d: SetSystem, k: int, fam: Iterable[int]) -> SetSystem:
    low = (1 << k) - 1

    def squeeze(f):
        return (f & low) | ((f >> (k + 1)) << k)

    return SetSystem(d.ground[:k] + d.ground[k + 1:], tuple(squeeze(f) for f in fam))


def delete(d: SetSystem, a) -> SetSystem:
    k = d.index(a)
    m = 1 << k
    if is_bridge(d, a):
        return _drop(d, k, (f for f in d.feasible if f & m))
    return _drop(d, k, (f for f in d.feasible if not f & m))


def contract(d: SetSystem, a) -> SetSystem:
    k = d.index(a)
    m = 1 << k
    if is_loop(d, a):
        return _drop(d, k, d.feasible)
    return _drop(d, k, (f for f in d.feasible if f & m))


def d_of(d: SetSystem, elements) -> int:
    """Distance ``min |A ^ F|`` from the set ``A`` to the feasible family."""
    if not d.feasible:
        raise ValueError("empty feasible family")
    m = _elements_mask(d, elements)
    return min(bin(m ^ f).count("1") for f in d.feasible)


def d0(d: SetSystem) -> int:
    """Size of a smallest feasible set."""
    return _d0(d.family)


def from_simple_graph(g: SimpleGraph) -> SetSystem:
    mat = adjacency(g)
    fam = [m for m in range(1 << len(g.vertices)) if mat.principal_minor_nonzero(m)]
    return SetSystem(tuple(g.vertices), tuple(fam))


def from_ribbon_graph(r) -> SetSystem:
    """Edge subsets spanning a ribbon subgraph with one boundary component."""
    if not _ribbon.is_connected(r):
        raise ValueError("ribbon graph is not connected")
    edges = r.edges
    fam = []
    for m in range(1 << len(edges)):
        kept = [(e.h1, e.h2, e.twist) for k, e in enumerate(edges) if m >> k & 1]
        halves = {h for h1, h2, _ in kept for h in (h1, h2)}
        rotations = [[h for h in rot if h in halves] for rot in r.rotations]
        if _ribbon._boundary(rotations, kept) == 1:
            fam.append(m)
    return SetSystem(r.edge_names, tuple(fam))


def _graph_matrix(n: int, fam: Family, loops: bool) -> GF2Matrix | None:
    """The only symmetric matrix that could represent ``fam``, or None."""
    if 0 not in fam:
        return None
    diag = [int((1 << k) in fam) for k in range(n)]
    if any(diag) and not loops:
        return None
    rows = [diag[k] << k for k in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        # det [[di, e], [e, dj]] = di*dj + e
        if (((1 << i) | (1 << j)) in fam) ^ (diag[i] & diag[j]):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return GF2Matrix(n, tuple(rows))


def _is_graphic(n: int, fam: Family, loops: bool = False) -> bool:
    mat = _graph_matrix(n, fam, loops)
    if mat is None:
        return False
    return all((m in fam) == mat.principal_minor_nonzero(m) for m in range(1 << n))


def is_graphic(d: SetSystem, loops: bool = False) -> bool:
    """Whether ``d`` equals ``D(G)`` for some simple graph ``G``.

    ``G`` is forced: its edges are the feasible pairs. With ``loops=True``
    graphs with loops are allowed too (symmetric matrices with a non-zero
    diagonal; the loops are the feasible singletons).
    """
    return _is_graphic(len(d.ground), d.family, loops)


def bc(d: SetSystem) -> int:
    """Smallest ``n`` such that ``d * (E - A)`` is graphic for some ``|A| = n - 1``.

    Graphs with loops are admitted in the search, otherwise no partial dual of
    a non-even delta-matroid (a non-orientable ribbon graph) is graphic. For
    even delta-matroids the two notions agree.
    """
    n = len(d.ground)
    full = (1 << n) - 1
    fam = d.family
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            a = sum(1 << k for k in combo)
            if _is_graphic(n, _twist(fam, full ^ a), loops=True):
                return size + 1
    raise ValueError("no partial dual of this set system is graphic")


def _pair(d: SetSystem, a, b) -> Tuple[int, int]:
    if a == b:
        raise ValueError("the two elements must be distinct")
    return 1 << d.index(a), 1 << d.index(b)


def slide(d: SetSystem, a, b) -> SetSystem:
    """Slide ``a`` over ``b``: add/remove ``A + a`` for every feasible ``A + b`` avoiding ``a``."""
    ma, mb = _pair(d, a, b)
    return d._with(_slide(d.family, ma, mb))


def exchange(d: SetSystem, a, b) -> SetSystem:
    """Exchange the ends of ``a`` and ``b``: ``((d * b) slid a over b) * b``."""
    ma, mb = _pair(d, a, b)
    return d._with(_exchange(d.family, ma, mb))


@lru_cache(maxsize=1 << 15)
def _q_family(n: int, fam: Family) -> Polynomial:
    out: Dict[Monomial, int] = {}
    full = (1 << n) - 1
    for labels in itertools.product(range(3), repeat=n):
        phi = sum(1 << k for k in range(n) if labels[k] == 0)
        chi = sum(1 << k for k in range(n) if labels[k] == 1)
        psi = full ^ phi ^ chi
        state = _dual_pivot(_twist(_loop_complement(fam, phi), chi), psi)
        n_phi, n_chi = bin(phi).count("1"), bin(chi).count("1")
        mono = Monomial(n_phi, n - n_phi, _d0(state))
        out[mono] = out.get(mono, 0) + (-1) ** (n - n_phi - n_chi)
    return Polynomial(out)


def q_dm(d: SetSystem) -> Polynomial:
    """Sum over ordered partitions ``E = Phi | X | Psi`` of
    ``s^|Phi| t^|X| (-t)^|Psi| x^d0(d + Phi * X *bar Psi)``."""
    if not d.feasible:
        raise ValueError("empty feasible family")
    return _q_family(len(d.ground), d.family)


def four_term_dm(d: SetSystem, a, b) -> Polynomial:
    """``Q(D) - Q(D'_ab) - Q(D~_ab) + Q(D~'_ab)``.

    The relation is guaranteed only for binary delta-matroids; that is the
    caller's responsibility and is not checked here.
    """
    slid = slide(d, a, b)
    return q_dm(d) - q_dm(exchange(d, a, b)) - q_dm(slid) + q_dm(exchange(slid, a, b))
