"""Temperley-Lieb algebra on planar diagrams and its singular-braid image.

A diagram on n strands is a noncrossing perfect matching of 2n boundary
points: indices 0..n-1 are the top points left to right, indices n..2n-1
the bottom points left to right (bottom point j' has index n + j - 1).
Reading the boundary cyclically (top left to right, then bottom right to
left) a matching is planar exactly when it is a balanced bracket sequence,
which is also how diagrams are enumerated; their number is the n-th Catalan
number.

Multiplication concatenates diagrams (left factor on top), and every closed
loop produced in the middle contributes the scalar -t^2 - t^-2.  The map

    sigma_i   ->  t^-1 u_i + t e
    sigma_i^-1->  t u_i + t^-1 e
    tau_i     ->  a u_i + b e

sends singular braid words to elements of the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .braid import BraidWord, relation_set
from .matrix import RingMatrix
from .reps import Param, RelationCheck, RelationReport, _resolve_param
from .ring import LaurentPoly, integer, variable

# Loop scalar of the algebra, fixed by the square of a generator.
LOOP = -variable("t", 2) - variable("t", -2)


def _boundary_order(n: int) -> list[int]:
    """Diagram indices in cyclic boundary order: top 0..n-1, then bottom reversed."""
    return list(range(n)) + list(range(2 * n - 1, n - 1, -1))


def is_planar(n: int, match: tuple[int, ...]) -> bool:
    if len(match) != 2 * n:
        return False
    if any(match[i] == i or not 0 <= match[i] < 2 * n or match[match[i]] != i
           for i in range(2 * n)):
        return False
    order = _boundary_order(n)
    position = {idx: k for k, idx in enumerate(order)}
    stack: list[int] = []
    for idx in order:
        partner = match[idx]
        if position[partner] > position[idx]:
            stack.append(partner)
        elif stack.pop() != idx:
            return False
    return True


@dataclass(frozen=True)
class TLDiagram:
    """Noncrossing perfect matching on 2n boundary points."""

    n: int
    match: tuple[int, ...]

    def __post_init__(self):
        if not is_planar(self.n, self.match):
            raise ValueError("matching is not a planar perfect matching")

    @classmethod
    def identity(cls, n: int) -> TLDiagram:
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def cup_cap(cls, n: int, i: int) -> TLDiagram:
        """The generator diagram u_i: arcs (i, i+1) on top and on the bottom."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for n={n}")
        match = list(range(n, 2 * n)) + list(range(n))
        match[i - 1], match[i] = i, i - 1
        match[n + i - 1], match[n + i] = n + i, n + i - 1
        return cls(n, tuple(match))

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((i, p) for i, p in enumerate(self.match) if i < p)

    def text(self) -> str:
        """Arcs as point pairs, top points 1..n and bottom points 1'..n'."""
        def name(idx: int) -> str:
            return str(idx + 1) if idx < self.n else f"{idx - self.n + 1}'"

        return " ".join(f"({name(i)},{name(j)})" for i, j in self.arcs())

    def __lt__(self, other: TLDiagram):
        return (self.n, self.match) < (other.n, other.match)

    def __str__(self):
        return self.text()


@lru_cache(maxsize=None)
def tl_basis(n: int) -> tuple[TLDiagram, ...]:
    """All diagrams on n strands; there are Catalan(n) of them."""
    order = _boundary_order(n)

    def nested(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not points:
            yield ()
            return
        first = points[0]
        for k in range(1, len(points), 2):
            inside, outside = points[1:k], points[k + 1:]
            for left in nested(inside):
                for right in nested(outside):
                    yield ((first, points[k]),) + left + right

    diagrams = []
    for pairing in nested(tuple(order)):
        match = [0] * (2 * n)
        for x, y in pairing:
            match[x], match[y] = y, x
        diagrams.append(TLDiagram(n, tuple(match)))
    return tuple(sorted(diagrams))


def compose_diagrams(top: TLDiagram, bottom: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack top over bottom, gluing the middle; returns (diagram, closed loops)."""
    if top.n != bottom.n:
        raise ValueError("strand count mismatch")
    n = top.n
    m1, m2 = top.match, bottom.match
    result = [-1] * (2 * n)
    visited_mid = [False] * n

    def walk(side: int, idx: int) -> tuple[int, int]:
        # side 1 = inside top diagram, side 2 = inside bottom diagram
        while True:
            nxt = (m1 if side == 1 else m2)[idx]
            if side == 1:
                if nxt < n:
                    return 1, nxt
                visited_mid[nxt - n] = True
                side, idx = 2, nxt - n
            else:
                if nxt >= n:
                    return 2, nxt
                visited_mid[nxt] = True
                side, idx = 1, nxt + n

    for start in range(2 * n):
        if result[start] != -1:
            continue
        side, idx = (1, start) if start < n else (2, start)
        end_side, end_idx = walk(side, idx)
        end = end_idx if end_side == 1 else end_idx
        result[start] = end
        result[end] = start
    loops = 0
    for i in range(n):
        if visited_mid[i]:
            continue
        loops += 1
        j = i
        while True:
            visited_mid[j] = True
            up = m1[n + j]          # follow the arc in the top diagram
            visited_mid[up - n] = True
            j = m2[up - n]          # then the arc in the bottom diagram
            if visited_mid[j] and j == i:
                break
    return TLDiagram(n, tuple(result)), loops


def _coeff(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return integer(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return integer(int(value))
    raise TypeError(f"bad coefficient {value!r} (rational coefficients only via scaling)")


class TLElem:
    """Linear combination of diagrams with Laurent-polynomial coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[TLDiagram, object] | None = None):
        self.n = n
        cleaned: dict[TLDiagram, LaurentPoly] = {}
        if terms:
            for diag, value in terms.items():
                coeff = _coeff(value)
                if coeff:
                    cleaned[diag] = coeff
        self.terms = cleaned

    @classmethod
    def unit(cls, n: int) -> TLElem:
        return cls(n, {TLDiagram.identity(n): integer(1)})

    @classmethod
    def generator(cls, n: int, i: int) -> TLElem:
        return cls(n, {TLDiagram.cup_cap(n, i): integer(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TLElem) -> None:
        if self.n != other.n:
            raise ValueError("strand count mismatch")

    def __add__(self, other: TLElem) -> TLElem:
        self._check(other)
        out = dict(self.terms)
        for diag, coeff in other.terms.items():
            s = out.get(diag)
            out[diag] = coeff if s is None else s + coeff
        return TLElem(self.n, out)

    def __neg__(self) -> TLElem:
        return TLElem(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: TLElem) -> TLElem:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TLElem):
            self._check(other)
            out: dict[TLDiagram, LaurentPoly] = {}
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    diag, loops = compose_diagrams(d1, d2)
                    coeff = c1 * c2 * LOOP ** loops
                    s = out.get(diag)
                    total = coeff if s is None else s + coeff
                    if total:
                        out[diag] = total
                    else:
                        out.pop(diag, None)
            return TLElem(self.n, out)
        return self.scalar_mul(other)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def scalar_mul(self, value) -> TLElem:
        coeff = _coeff(value)
        return TLElem(self.n, {d: coeff * c for d, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TLElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for diag in sorted(self.terms):
            parts.append(f"({self.terms[diag]}) * [{diag}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"TLElem({self!s})"


def tl_unit(n: int) -> TLElem:
    return TLElem.unit(n)


def tl_generator(n: int, i: int) -> TLElem:
    return TLElem.generator(n, i)


def tl_rho(n: int, word: BraidWord, a: Param = None, b: Param = None) -> TLElem:
    """Image of a singular braid word under the map into the algebra."""
    if word.n != n:
        raise ValueError("strand count mismatch")
    av = _resolve_param(a, "a")
    bv = _resolve_param(b, "b")
    t = variable("t")
    tinv = variable("t", -1)
    result = TLElem.unit(n)
    for i, s in word.letters:
        u = TLElem.generator(n, i)
        e = TLElem.unit(n)
        if s == 1:
            factor = u.scalar_mul(tinv) + e.scalar_mul(t)
        elif s == -1:
            factor = u.scalar_mul(t) + e.scalar_mul(tinv)
        else:
            factor = u.scalar_mul(av) + e.scalar_mul(bv)
        result = result * factor
    return result


def verify_tl_relations(n: int, a: Param = None, b: Param = None) -> RelationReport:
    """Push every SM_n defining relation through the algebra map."""
    checks = []
    for rel in relation_set(n, "SMn"):
        lhs = tl_rho(n, rel.lhs, a, b)
        rhs = tl_rho(n, rel.rhs, a, b)
        diff = lhs - rhs
        ok = diff.is_zero()
        checks.append(RelationCheck(rel.label, str(rel.lhs), str(rel.rhs), ok,
                                    None if ok else diff))
    return RelationReport("tl-rho", "SMn", tuple(checks))


@dataclass(frozen=True)
class TLInvertibility:
    """Invertibility report for a*u_1 + b*e at concrete rational (a, b)."""

    n: int
    a: Fraction
    b: Fraction
    det_scaled: LaurentPoly
    scale: int
    invertible_over_field: bool
    invertible_over_ring: bool


def invertibility_check(n: int, a: Fraction | int, b: Fraction | int) -> TLInvertibility:
    """Decide invertibility of a*u_i + b*e via the left-multiplication matrix.

    The element is scaled by the lcm of the parameter denominators (a unit
    scalar, so invertibility is unchanged); the determinant is taken over the
    diagram basis.  Nonzero determinant means invertible over the field of
    fractions Q(t); a single-term determinant means invertible over the
    Laurent ring itself.
    """
    af, bf = Fraction(a), Fraction(b)
    scale = af.denominator * bf.denominator // _gcd(af.denominator, bf.denominator)
    ai, bi = int(af * scale), int(bf * scale)
    elem = TLElem.generator(n, 1).scalar_mul(ai) + TLElem.unit(n).scalar_mul(bi)
    basis = tl_basis(n)
    index = {d: k for k, d in enumerate(basis)}
    dim = len(basis)
    rows = [[integer(0)] * dim for _ in range(dim)]
    for col, diag in enumerate(basis):
        product = elem * TLElem(n, {diag: 1})
        for d, c in product.terms.items():
            rows[index[d]][col] = c
    det = RingMatrix(rows).det()
    return TLInvertibility(
        n=n,
        a=af,
        b=bf,
        det_scaled=det,
        scale=scale,
        invertible_over_field=not det.is_zero(),
        invertible_over_ring=det.is_monomial(),
    )


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x
