"""Exact arithmetic for multivariate Laurent polynomials over Z and their fractions.

A polynomial is a sparse map from exponent vectors to nonzero integer
coefficients.  Exponent vectors are tuples indexed by the variable registry
(q, t, w, u, v, a, b, c, in order of precedence), trimmed of trailing zeros
so that equal monomials always have identical keys.  Negative exponents are
allowed everywhere except in fraction denominators.

The canonical term order is graded lexicographic: higher total degree first,
ties broken variable by variable in registry order.  Canonical strings list
terms in descending order, which makes the printed form unique per value.

RatFunc values are fully reduced fractions: the numerator is any Laurent
polynomial, the denominator an ordinary polynomial with minimum degree zero
in every variable and positive leading coefficient; monomial units are
folded into the numerator and common factors (including integer content)
are divided out.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

Mono = tuple[int, ...]

_VAR_NAMES: list[str] = ["q", "t", "w", "u", "v", "a", "b", "c"]
_VAR_INDEX: dict[str, int] = {name: i for i, name in enumerate(_VAR_NAMES)}


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division failed: the divisor does not divide."""


class ParseError(ValueError):
    """Polynomial text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def register_variable(name: str) -> None:
    """Append a new variable with lowest precedence to the registry."""
    if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
        raise ValueError(f"invalid variable name {name!r}")
    if name not in _VAR_INDEX:
        _VAR_INDEX[name] = len(_VAR_NAMES)
        _VAR_NAMES.append(name)


def variable_names() -> tuple[str, ...]:
    return tuple(_VAR_NAMES)


# -- monomial helpers --------------------------------------------------------
#
# A monomial is a tuple of exponents by registry index with trailing zeros
# trimmed, so () is the constant monomial and (0, 2) is t^2.

def _trim(exps: list[int]) -> Mono:
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    if len(m1) < len(m2):
        m1, m2 = m2, m1
    out = list(m1)
    for i, e in enumerate(m2):
        out[i] += e
    return _trim(out)


def _mono_sub(m1: Mono, m2: Mono) -> Mono:
    out = list(m1) + [0] * (len(m2) - len(m1))
    for i, e in enumerate(m2):
        out[i] -= e
    return _trim(out)


def _mono_neg(m: Mono) -> Mono:
    return tuple(-e for e in m)


def _order_key(m: Mono) -> tuple:
    # Graded lex; pad so tuples of different lengths compare correctly.
    return (sum(m), m + (0,) * (len(_VAR_NAMES) - len(m)))


class LaurentPoly:
    """Immutable Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Mono, int]):
        # Takes ownership of `terms`; callers must not pass zero coefficients.
        self.terms = terms
        self._hash: int | None = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def integer(value: int) -> LaurentPoly:
        return LaurentPoly({(): value}) if value else ZERO

    @staticmethod
    def variable(name: str, exponent: int = 1) -> LaurentPoly:
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}")
        if exponent == 0:
            return ONE
        mono = _trim([0] * _VAR_INDEX[name] + [exponent])
        return LaurentPoly({mono: 1})

    # -- predicates and views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[str]:
        seen: set[str] = set()
        for mono in self.terms:
            for idx, exp in enumerate(mono):
                if exp:
                    seen.add(_VAR_NAMES[idx])
        return seen

    def degree(self, name: str) -> int:
        """Maximum exponent of `name` across terms (0 for the zero polynomial)."""
        idx = _VAR_INDEX[name]
        degs = [m[idx] if idx < len(m) else 0 for m in self.terms]
        return max(degs, default=0)

    def min_degree(self, name: str) -> int:
        idx = _VAR_INDEX[name]
        degs = [m[idx] if idx < len(m) else 0 for m in self.terms]
        return min(degs, default=0)

    def leading(self) -> tuple[Mono, int]:
        """Leading (monomial, coefficient) in the canonical term order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=_order_key)
        return mono, self.terms[mono]

    def content(self) -> int:
        """Positive gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def monomial_gcd(self) -> Mono:
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return ()
        width = max(len(m) for m in self.terms)
        mins = [0] * width
        for i in range(width):
            mins[i] = min(m[i] if i < len(m) else 0 for m in self.terms)
        return _trim(mins)

    def shift(self, mono: Mono) -> LaurentPoly:
        """Multiply by the given monomial."""
        if not mono:
            return self
        return LaurentPoly({_mono_mul(m, mono): c for m, c in self.terms.items()})

    def int_scale(self, k: int) -> LaurentPoly:
        if k == 0:
            return ZERO
        if k == 1:
            return self
        return LaurentPoly({m: c * k for m, c in self.terms.items()})

    def int_div(self, k: int) -> LaurentPoly:
        """Divide every coefficient by k, which must divide exactly."""
        out = {}
        for m, c in self.terms.items():
            quot, rem = divmod(c, k)
            if rem:
                raise NotDivisibleError(f"coefficient {c} not divisible by {k}")
            out[m] = quot
        return LaurentPoly(out)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[Mono, int] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative power of a polynomial; invert as a RatFunc")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other) -> LaurentPoly:
        """Return z with z * other == self, or raise NotDivisibleError."""
        other = _coerce_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return ZERO
        smono = self.monomial_gcd()
        omono = other.monomial_gcd()
        num = self.shift(_mono_neg(smono))
        den = other.shift(_mono_neg(omono))
        dl_mono, dl_coeff = den.leading()
        rem = dict(num.terms)
        quot: dict[Mono, int] = {}
        while rem:
            rl_mono = max(rem, key=_order_key)
            qm = _mono_sub(rl_mono, dl_mono)
            if any(e < 0 for e in qm):
                raise NotDivisibleError("leading monomial not divisible")
            qc, r = divmod(rem[rl_mono], dl_coeff)
            if r:
                raise NotDivisibleError("leading coefficient not divisible")
            quot[qm] = qc
            for m, c in den.terms.items():
                key = _mono_mul(m, qm)
                s = rem.get(key, 0) - qc * c
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return LaurentPoly(quot).shift(_mono_sub(smono, omono))

    def divides(self, other: LaurentPoly) -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact evaluation at rational values for every variable present."""
        values: dict[int, Fraction] = {}
        for name, value in point.items():
            values[_VAR_INDEX[name]] = Fraction(value)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = Fraction(coeff)
            for idx, exp in enumerate(mono):
                if not exp:
                    continue
                if idx not in values:
                    raise ValueError(f"variable {_VAR_NAMES[idx]!r} not assigned")
                base = values[idx]
                if base == 0 and exp < 0:
                    raise ZeroDivisionError(
                        f"zero raised to negative power ({_VAR_NAMES[idx]}^{exp})"
                    )
                term *= base ** exp
            total += term
        return total

    # -- comparisons and hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.terms.get((), 0) == other
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return canonical_string(self)

    def __repr__(self):
        return f"LaurentPoly({canonical_string(self)!r})"


ZERO = LaurentPoly({})
ONE = LaurentPoly({(): 1})


def _coerce_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.integer(value)
    return NotImplemented


def integer(value: int) -> LaurentPoly:
    return LaurentPoly.integer(value)


def variable(name: str, exponent: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(name, exponent)


# -- canonical text form -----------------------------------------------------

def canonical_string(poly: LaurentPoly) -> str:
    if not poly.terms:
        return "0"
    items = sorted(poly.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)
    parts: list[str] = []
    for i, (mono, coeff) in enumerate(items):
        mag = abs(coeff)
        factors = []
        for idx, exp in enumerate(mono):
            if not exp:
                continue
            name = _VAR_NAMES[idx]
            factors.append(name if exp == 1 else f"{name}^{exp}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if i == 0:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append((" + " if coeff > 0 else " - ") + body)
    return "".join(parts)


_INT_RE = re.compile(r"\d+")
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical polynomial grammar (inverse of canonical_string)."""
    terms: dict[Mono, int] = {}
    pos = 0
    n = len(text)

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty polynomial", pos)
    first = True
    while pos < n:
        sign = 1
        pos = skip_ws(pos)
        if not first or (pos < n and text[pos] in "+-"):
            if pos >= n or text[pos] not in "+-":
                raise ParseError("expected '+' or '-'", pos)
            if text[pos] == "-":
                sign = -1
            pos = skip_ws(pos + 1)
        first = False
        coeff: int | None = None
        exps: dict[int, int] = {}
        saw_factor = False
        expect_factor = True
        while True:
            pos = skip_ws(pos)
            if expect_factor:
                m = _INT_RE.match(text, pos)
                if m and coeff is None and not saw_factor:
                    coeff = int(m.group())
                    pos = m.end()
                    saw_factor = True
                    expect_factor = False
                    continue
                m = _NAME_RE.match(text, pos)
                if not m:
                    if saw_factor:
                        raise ParseError("expected a variable after '*'", pos)
                    raise ParseError("expected a term", pos)
                name = m.group()
                if name not in _VAR_INDEX:
                    raise ParseError(f"unknown variable {name!r}", pos)
                pos = skip_ws(m.end())
                exp = 1
                if pos < n and text[pos] == "^":
                    pos = skip_ws(pos + 1)
                    esign = 1
                    if pos < n and text[pos] == "-":
                        esign = -1
                        pos = skip_ws(pos + 1)
                    m = _INT_RE.match(text, pos)
                    if not m:
                        raise ParseError("expected an exponent", pos)
                    exp = esign * int(m.group())
                    pos = m.end()
                idx = _VAR_INDEX[name]
                exps[idx] = exps.get(idx, 0) + exp
                saw_factor = True
                expect_factor = False
                continue
            if pos < n and text[pos] == "*":
                pos += 1
                expect_factor = True
                continue
            break
        c = 1 if coeff is None else coeff
        width = max(exps, default=-1) + 1
        vec = [0] * width
        for idx, exp in exps.items():
            vec[idx] = exp
        mono = _trim(vec)
        s = terms.get(mono, 0) + sign * c
        if s:
            terms[mono] = s
        else:
            terms.pop(mono, None)
        pos = skip_ws(pos)
    return LaurentPoly(terms)


# -- greatest common divisors ------------------------------------------------
#
# Recursive primitive PRS, one variable at a time, integers at the bottom.
# The result is normalized: unit integer content, positive leading
# coefficient, minimum degree zero in every variable.

def poly_gcd(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if x.is_zero():
        return _gcd_normalize(y)
    if y.is_zero():
        return _gcd_normalize(x)
    a = x.shift(_mono_neg(x.monomial_gcd()))
    b = y.shift(_mono_neg(y.monomial_gcd()))
    return _gcd_normalize(_gcd_core(a, b))


def _gcd_normalize(p: LaurentPoly) -> LaurentPoly:
    p = p.shift(_mono_neg(p.monomial_gcd()))
    c = p.content()
    if c > 1:
        p = p.int_div(c)
    if p.leading()[1] < 0:
        p = -p
    return p


def _main_variable(p: LaurentPoly, q: LaurentPoly) -> int:
    best = None
    for poly in (p, q):
        for mono in poly.terms:
            for idx, exp in enumerate(mono):
                if exp and (best is None or idx < best):
                    best = idx
    if best is None:
        raise ValueError("no variable present")
    return best


def _as_univariate(p: LaurentPoly, var_idx: int) -> dict[int, LaurentPoly]:
    coeffs: dict[int, dict[Mono, int]] = {}
    for mono, c in p.terms.items():
        deg = mono[var_idx] if var_idx < len(mono) else 0
        rest = list(mono)
        if var_idx < len(rest):
            rest[var_idx] = 0
        coeffs.setdefault(deg, {})[_trim(rest)] = c
    return {deg: LaurentPoly(terms) for deg, terms in coeffs.items()}


def _gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for p in polys:
        if p.is_zero():
            continue
        acc = p if acc.is_zero() else _gcd_normalize(_gcd_core(acc, p))
        if acc.is_one():
            return acc
    return _gcd_normalize(acc) if not acc.is_zero() else ZERO


def _pseudo_rem(f: LaurentPoly, g: LaurentPoly, var_idx: int) -> LaurentPoly:
    gu = _as_univariate(g, var_idx)
    dg = max(gu)
    lead_g = gu[dg]
    name = _VAR_NAMES[var_idx]
    r = f
    while not r.is_zero():
        ru = _as_univariate(r, var_idx)
        dr = max(ru)
        if dr < dg:
            break
        r = r * lead_g - ru[dr] * LaurentPoly.variable(name, dr - dg) * g
    return r


def _gcd_core(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    # Both nonzero, minimum degree zero per variable.
    if a.is_constant() or b.is_constant():
        return LaurentPoly.integer(math.gcd(a.content(), b.content()))
    var_idx = _main_variable(a, b)
    au = _as_univariate(a, var_idx)
    bu = _as_univariate(b, var_idx)
    ca = _gcd_many(au.values())
    cb = _gcd_many(bu.values())
    c = _gcd_normalize(_gcd_core(ca, cb))
    f = a.exact_div(ca)
    g = b.exact_div(cb)
    if max(_as_univariate(f, var_idx)) < max(_as_univariate(g, var_idx)):
        f, g = g, f
    while True:
        gu = _as_univariate(g, var_idx)
        if max(gu) == 0:
            # A nonzero remainder free of the main variable: primitive part is 1.
            return c
        r = _pseudo_rem(f, g, var_idx)
        if r.is_zero():
            break
        r = r.exact_div(_gcd_many(_as_univariate(r, var_idx).values()))
        f, g = g, r
    return c * g.exact_div(_gcd_many(_as_univariate(g, var_idx).values()))


# -- rational functions ------------------------------------------------------

class RatFunc:
    """Fully reduced fraction of Laurent polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc components must be polynomials or integers")
        self.num, self.den = _normalize_fraction(num, den)

    @staticmethod
    def from_fraction(value: Fraction | int) -> RatFunc:
        f = Fraction(value)
        return RatFunc(LaurentPoly.integer(f.numerator), LaurentPoly.integer(f.denominator))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _coerce_ratfunc(other)
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.den.is_one():
            return canonical_string(self.num)
        return f"({canonical_string(self.num)})/({canonical_string(self.den)})"

    def __repr__(self):
        return f"RatFunc({self!s})"


def _coerce_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, LaurentPoly):
        return RatFunc(value)
    if isinstance(value, int):
        return RatFunc(LaurentPoly.integer(value))
    if isinstance(value, Fraction):
        return RatFunc.from_fraction(value)
    return NotImplemented


def _normalize_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    # Fold the denominator's monomial part into the numerator.
    dmono = den.monomial_gcd()
    den = den.shift(_mono_neg(dmono))
    num = num.shift(_mono_neg(dmono))
    if not den.is_one():
        nmono = num.monomial_gcd()
        core = num.shift(_mono_neg(nmono))
        g = poly_gcd(core, den)
        if not g.is_one():
            core = core.exact_div(g)
            den = den.exact_div(g)
        num = core.shift(nmono)
    c = math.gcd(num.content(), den.content())
    if c > 1:
        num = num.int_div(c)
        den = den.int_div(c)
    if den.leading()[1] < 0:
        num = -num
        den = -den
    return num, den


def parse_ratfunc(text: str) -> RatFunc:
    """Parse "(num)/(den)" or a bare polynomial."""
    s = text.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        num_text, den_text = s[1:-1].split(")/(", 1)
        return RatFunc(parse_poly(num_text), parse_poly(den_text))
    return RatFunc(parse_poly(s))
