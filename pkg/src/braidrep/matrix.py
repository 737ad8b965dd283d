"""Dense square matrices over the Laurent ring or its fraction field.

Entries are LaurentPoly ("laurent" ring) or RatFunc ("ratfunc" ring),
uniformly per matrix.  Coordinates are row vectors: the row indexed by a
basis vector holds the coefficients of its image, and words of group
elements map to matrix products in word order.

Determinants over the polynomial ring use fraction-free Bareiss elimination
(exact division keeps intermediate entries polynomial); over the fraction
field a memoized cofactor expansion is used instead.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .ring import (
    ONE,
    ZERO,
    LaurentPoly,
    RatFunc,
    canonical_string,
    parse_poly,
    parse_ratfunc,
)

RING_LAURENT = "laurent"
RING_RATFUNC = "ratfunc"


class SingularMatrixError(ArithmeticError):
    """Inversion was requested for a matrix with zero determinant."""


def _coerce_entry(ring: str, value):
    if ring == RING_LAURENT:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.integer(value)
        raise TypeError(f"expected a Laurent entry, got {type(value).__name__}")
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, LaurentPoly, Fraction)):
        return RatFunc(value) if not isinstance(value, Fraction) else RatFunc.from_fraction(value)
    raise TypeError(f"expected a RatFunc entry, got {type(value).__name__}")


def _ring_of(rows: Sequence[Sequence]) -> str:
    for row in rows:
        for entry in row:
            if isinstance(entry, RatFunc):
                return RING_RATFUNC
            if isinstance(entry, Fraction):
                return RING_RATFUNC
    return RING_LAURENT


class RingMatrix:
    """Immutable square matrix over LaurentPoly or RatFunc entries."""

    __slots__ = ("dim", "ring", "rows")

    def __init__(self, rows: Sequence[Sequence], ring: str | None = None):
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square and nonempty")
        if ring is None:
            ring = _ring_of(rows)
        if ring not in (RING_LAURENT, RING_RATFUNC):
            raise ValueError(f"unknown ring tag {ring!r}")
        self.dim = dim
        self.ring = ring
        self.rows = tuple(tuple(_coerce_entry(ring, e) for e in row) for row in rows)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, dim: int, ring: str = RING_LAURENT) -> RingMatrix:
        one = ONE if ring == RING_LAURENT else RatFunc(ONE)
        zero = ZERO if ring == RING_LAURENT else RatFunc(ZERO)
        return cls(
            [[one if i == j else zero for j in range(dim)] for i in range(dim)], ring
        )

    @classmethod
    def zero(cls, dim: int, ring: str = RING_LAURENT) -> RingMatrix:
        zero = ZERO if ring == RING_LAURENT else RatFunc(ZERO)
        return cls([[zero] * dim for _ in range(dim)], ring)

    @classmethod
    def from_entry_fn(cls, dim: int, fn: Callable[[int, int], object],
                      ring: str = RING_LAURENT) -> RingMatrix:
        return cls([[fn(i, j) for j in range(dim)] for i in range(dim)], ring)

    # -- structure ------------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.ring == other.ring:
            return self.rows == other.rows
        a, b = self.to_ratfunc(), other.to_ratfunc()
        return a.rows == b.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def map_entries(self, fn: Callable, ring: str | None = None) -> RingMatrix:
        return RingMatrix([[fn(e) for e in row] for row in self.rows],
                          ring if ring is not None else self.ring)

    def to_ratfunc(self) -> RingMatrix:
        if self.ring == RING_RATFUNC:
            return self
        return self.map_entries(RatFunc, RING_RATFUNC)

    def as_laurent(self) -> RingMatrix:
        """Convert back to the polynomial ring; every entry must have denominator 1."""
        if self.ring == RING_LAURENT:
            return self
        return self.map_entries(lambda e: e.as_laurent(), RING_LAURENT)

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    # -- arithmetic -----------------------------------------------------------

    def _check_compatible(self, other: RingMatrix) -> tuple[RingMatrix, RingMatrix]:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.ring == other.ring:
            return self, other
        return self.to_ratfunc(), other.to_ratfunc()

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        a, b = self._check_compatible(other)
        return RingMatrix(
            [
                [a.rows[i][j] + b.rows[i][j] for j in range(a.dim)]
                for i in range(a.dim)
            ],
            a.ring,
        )

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        a, b = self._check_compatible(other)
        return RingMatrix(
            [
                [a.rows[i][j] - b.rows[i][j] for j in range(a.dim)]
                for i in range(a.dim)
            ],
            a.ring,
        )

    def __neg__(self):
        return self.map_entries(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            a, b = self._check_compatible(other)
            dim = a.dim
            brows = b.rows
            out = []
            for i in range(dim):
                arow = a.rows[i]
                row = []
                for j in range(dim):
                    acc = arow[0] * brows[0][j]
                    for k in range(1, dim):
                        entry = arow[k]
                        if entry:
                            acc = acc + entry * brows[k][j]
                    row.append(acc)
                out.append(row)
            return RingMatrix(out, a.ring)
        return self.scalar_mul(other)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def scalar_mul(self, scalar) -> RingMatrix:
        if isinstance(scalar, (RatFunc, Fraction)) and self.ring == RING_LAURENT:
            return self.to_ratfunc().scalar_mul(scalar)
        s = _coerce_entry(self.ring, scalar)
        return self.map_entries(lambda e: s * e)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = RingMatrix.identity(self.dim, self.ring)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- determinant, inverse, characteristic polynomial ------------------------

    def det(self):
        if self.ring == RING_LAURENT:
            return _det_bareiss(self.rows)
        return _det_cofactor(self.rows)

    def inverse(self) -> RingMatrix:
        """Exact inverse over the fraction field; raises SingularMatrixError."""
        dim = self.dim
        work = [list(row) for row in self.to_ratfunc().rows]
        rzero, rone = RatFunc(ZERO), RatFunc(ONE)
        aug = [[rzero] * dim for _ in range(dim)]
        for i in range(dim):
            aug[i][i] = rone
        for col in range(dim):
            pivot = next((r for r in range(col, dim) if work[r][col]), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = work[col][col].inverse()
            work[col] = [e * inv for e in work[col]]
            aug[col] = [e * inv for e in aug[col]]
            for r in range(dim):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return RingMatrix(aug, RING_RATFUNC)

    def charpoly(self, var: str = "w") -> LaurentPoly:
        """det(A - var*I), expanded in canonical form."""
        if self.ring != RING_LAURENT:
            raise ValueError("characteristic polynomial requires Laurent entries")
        for row in self.rows:
            for e in row:
                if var in e.variables():
                    raise ValueError(f"matrix entries already involve {var!r}")
        wvar = LaurentPoly.variable(var)
        shifted = [
            [e - wvar if i == j else e for j, e in enumerate(row)]
            for i, row in enumerate(self.rows)
        ]
        return _det_bareiss(shifted)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(e.evaluate(point) for e in row) for row in self.rows)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "ring": self.ring,
            "rows": [[str(e) for e in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> RingMatrix:
        ring = data["ring"]
        parse = parse_poly if ring == RING_LAURENT else parse_ratfunc
        rows = [[parse(text) for text in row] for row in data["rows"]]
        mat = cls(rows, ring)
        if mat.dim != data["dim"]:
            raise ValueError("dim field does not match row count")
        return mat

    @classmethod
    def from_json(cls, text: str) -> RingMatrix:
        return cls.from_json_dict(json.loads(text))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"RingMatrix(dim={self.dim}, ring={self.ring!r})"


def _det_bareiss(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    dim = len(rows)
    if dim == 1:
        return rows[0][0]
    m = [list(row) for row in rows]
    sign = 1
    prev = ONE
    for k in range(dim - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, dim) if not m[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                value = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = value.exact_div(prev)
            m[i][k] = ZERO
        prev = pivot
    result = m[dim - 1][dim - 1]
    return -result if sign < 0 else result


def _det_cofactor(rows: Sequence[Sequence]) -> RatFunc:
    dim = len(rows)
    full = (1 << dim) - 1
    memo: dict[tuple[int, int], RatFunc] = {}
    rzero, rone = RatFunc(ZERO), RatFunc(ONE)

    def minor(r: int, mask: int) -> RatFunc:
        if r == dim:
            return rone
        key = (r, mask)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = rzero
        sign = 1
        for j in range(dim):
            bit = 1 << j
            if not (mask & bit):
                continue
            entry = rows[r][j]
            if entry:
                sub = minor(r + 1, mask & ~bit)
                term = entry * sub
                total = total - term if sign < 0 else total + term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, full)


def det_multiplicative_check(a: RingMatrix, b: RingMatrix) -> bool:
    return (a * b).det() == a.det() * b.det()
