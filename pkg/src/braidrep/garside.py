"""Left-greedy normal form for braid words, solving the word problem in B_n.

Permutations are tuples p of length n with p[i] the ending position of the
strand that starts at position i (0-indexed).  Words compose left to right:
mult(p, q)[i] = q[p[i]].  Every permutation encodes a positive permutation
braid (each pair of strands crosses at most once), and these are exactly the
divisors of the half twist Delta.

A braid is stored as Delta^inf * f_1 ... f_s where no factor is trivial or
Delta and every adjacent pair (f_k, f_{k+1}) is left-weighted: each generator
that starts f_{k+1} also finishes f_k.  Equal braids have identical normal
forms, so the form is usable as a dictionary key, e.g. for group algebras.

Negative letters enter through sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1);
moving Delta^-1 to the front twists earlier factors by the flip automorphism
x -> Delta x Delta^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord

Perm = tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def perm_delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def perm_transposition(n: int, i: int) -> Perm:
    """The permutation of sigma_i (1-based generator index)."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_mult(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[v] for v in p)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def starting_set(p: Perm) -> frozenset[int]:
    """Generators sigma_i that left-divide the permutation braid of p."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def finishing_set(p: Perm) -> frozenset[int]:
    """Generators sigma_i that right-divide the permutation braid of p."""
    return starting_set(perm_inverse(p))


def _conj_delta(p: Perm) -> Perm:
    d = perm_delta(len(p))
    return tuple(d[p[d[i]]] for i in range(len(p)))


def _left_weight_pair(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    """Slide generators from the front of b to the back of a until left-weighted."""
    n = len(a)
    changed = False
    while True:
        movable = starting_set(b) - finishing_set(a)
        if not movable:
            return a, b, changed
        t = perm_transposition(n, min(movable))
        a = perm_mult(a, t)
        b = perm_mult(t, b)
        changed = True


@dataclass(frozen=True, order=True)
class NormalForm:
    """Canonical factorization Delta^inf * factors, usable as a dict key."""

    n: int
    inf: int
    factors: tuple[Perm, ...]

    @classmethod
    def identity(cls, n: int) -> NormalForm:
        return cls(n, 0, ())

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = [f"D^{self.inf}"]
        for f in self.factors:
            parts.append(" ".join(str(v + 1) for v in f))
        return " | ".join(parts)


def _normalize(n: int, inf: int, factors: list[Perm]) -> NormalForm:
    ident = perm_identity(n)
    delta = perm_delta(n)
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(factors):
            if factors[i] == delta:
                for j in range(i):
                    factors[j] = _conj_delta(factors[j])
                factors.pop(i)
                inf += 1
                changed = True
            elif factors[i] == ident:
                factors.pop(i)
                changed = True
            else:
                i += 1
        for k in range(len(factors) - 1):
            a, b, moved = _left_weight_pair(factors[k], factors[k + 1])
            if moved:
                factors[k], factors[k + 1] = a, b
                changed = True
    return NormalForm(n, inf, tuple(factors))


def to_normal_form(word: BraidWord) -> NormalForm:
    """Left-greedy normal form of a classical braid word."""
    if not word.is_classical:
        raise ValueError("normal forms are defined for classical words only")
    n = word.n
    delta = perm_delta(n)
    inf = 0
    factors: list[Perm] = []
    for i, s in word.letters:
        t = perm_transposition(n, i)
        if s > 0:
            factors.append(t)
        else:
            inf -= 1
            factors = [_conj_delta(f) for f in factors]
            factors.append(perm_mult(delta, t))
    return _normalize(n, inf, factors)


def nf_mul(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.n != y.n:
        raise ValueError("strand count mismatch")
    xf = list(x.factors)
    if y.inf % 2:
        xf = [_conj_delta(f) for f in xf]
    return _normalize(x.n, x.inf + y.inf, xf + list(y.factors))


def nf_inverse(x: NormalForm) -> NormalForm:
    """Inverse braid: each factor f becomes Delta^-1 * (Delta f^-1)."""
    delta = perm_delta(x.n)
    factors = [perm_mult(delta, perm_inverse(f)) for f in reversed(x.factors)]
    k = len(factors)
    inf = -x.inf - k
    # Moving the Delta^-1 powers to the front twists by alternating flips.
    out = []
    for idx, f in enumerate(factors):
        shift = x.inf + k - idx - 1
        out.append(_conj_delta(f) if shift % 2 else f)
    return _normalize(x.n, inf, out)


def nf_equal(x: BraidWord | NormalForm, y: BraidWord | NormalForm) -> bool:
    """Word-problem solution: do the two words represent the same braid?"""
    nx = x if isinstance(x, NormalForm) else to_normal_form(x)
    ny = y if isinstance(y, NormalForm) else to_normal_form(y)
    if nx.n != ny.n:
        raise ValueError("strand count mismatch")
    return nx == ny


def is_left_weighted(x: NormalForm) -> bool:
    """Check the defining condition on every adjacent factor pair."""
    ident = perm_identity(x.n)
    delta = perm_delta(x.n)
    for f in x.factors:
        if f == ident or f == delta:
            return False
    return all(
        starting_set(x.factors[k + 1]) <= finishing_set(x.factors[k])
        for k in range(len(x.factors) - 1)
    )
