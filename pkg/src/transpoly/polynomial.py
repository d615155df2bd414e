"""Sparse integer polynomials in the three variables s, t, x.

Every transition polynomial computed by this package is a :class:`Polynomial`.
Coefficients are Python ints, so arithmetic is exact.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple

__all__ = ["Monomial", "Polynomial", "PolynomialParseError", "ZERO", "ONE", "S", "T", "X"]

VARIABLES = ("s", "t", "x")


class Monomial(NamedTuple):
    s: int = 0
    t: int = 0
    x: int = 0

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(self.s + other.s, self.t + other.t, self.x + other.x)


class PolynomialParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class Polynomial:
    """Immutable polynomial with integer coefficients, stored as ``{Monomial: coeff}``.

    Zero coefficients are never stored, so two equal polynomials have equal
    term maps and identical :meth:`to_text` output.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int, int], int] | None = None):
        clean: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in {mono}")
            if coeff:
                clean[mono] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = {m: c for m, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({Monomial(): c})

    @classmethod
    def monomial(cls, coeff: int = 1, s: int = 0, t: int = 0, x: int = 0) -> "Polynomial":
        return cls._raw({Monomial(s, t, x): coeff})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, s: int = 0, t: int = 0, x: int = 0) -> int:
        return self._terms.get(Monomial(s, t, x), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def substitute_neg_t(self) -> "Polynomial":
        """Return the polynomial with t replaced by -t."""
        return Polynomial._raw({m: -c if m.t % 2 else c for m, c in self._terms.items()})

    def evaluate(self, s, t, x):
        return sum(c * s**m.s * t**m.t * x**m.x for m, c in self._terms.items())

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, mono in enumerate(sorted(self._terms, reverse=True)):
            coeff = self._terms[mono]
            sign = "-" if coeff < 0 else "+"
            body = _format_term(abs(coeff), mono)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_text(text)


def _format_term(coeff: int, mono: Monomial) -> str:
    factors = []
    for name, deg in zip(VARIABLES, mono):
        if deg == 1:
            factors.append(name)
        elif deg > 1:
            factors.append(f"{name}^{deg}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return "*".join(factors)


_TOKEN = re.compile(r"\s*(?:(\d+)|([stx])|(\^)|(\*)|([+-]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text) - len(text[pos:].lstrip())
            raise PolynomialParseError(f"unexpected character {text[stripped]!r}", stripped)
        start = m.start(m.lastindex)
        kind = ("int", "var", "^", "*", "sign")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_text(text: str) -> Polynomial:
    """Parse ``poly := term (('+'|'-') term)*``.

    A term is ``[coeff '*'] factor ('*' factor)*`` or a bare integer; a
    factor is ``s``, ``t`` or ``x`` with an optional ``^int``. A leading
    sign is accepted so that ``to_text`` output always round-trips.
    """
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def take(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialParseError(f"expected {kind}, found {what}", tok[2])
        i += 1
        return tok

    def term():
        nonlocal i
        coeff = 1
        exps = [0, 0, 0]
        if peek()[0] == "int":
            coeff = int(take("int")[1])
            if peek()[0] != "*":
                return coeff, Monomial()
            take("*")
        while True:
            var = take("var")
            deg = 1
            if peek()[0] == "^":
                take("^")
                deg = int(take("int")[1])
            exps[VARIABLES.index(var[1])] += deg
            if peek()[0] != "*":
                break
            take("*")
        return coeff, Monomial(*exps)

    out: Dict[Monomial, int] = {}
    sign = 1
    if peek()[0] == "sign":
        sign = -1 if take("sign")[1] == "-" else 1
    while True:
        coeff, mono = term()
        out[mono] = out.get(mono, 0) + sign * coeff
        if peek()[0] == "end":
            break
        sign = -1 if take("sign")[1] == "-" else 1
    return Polynomial._raw(out)


def to_text(p: Polynomial) -> str:
    return p.to_text()


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def total(polys: Iterable[Polynomial]) -> Polynomial:
    out: Dict[Monomial, int] = {}
    for p in polys:
        for m, c in p._terms.items():
            out[m] = out.get(m, 0) + c
    return Polynomial._raw(out)


ZERO = Polynomial()
ONE = Polynomial.constant(1)
S = Polynomial.monomial(s=1)
T = Polynomial.monomial(t=1)
X = Polynomial.monomial(x=1)
