import random

from braidrep.braid import BraidWord
from braidrep.ring import ZERO, LaurentPoly, integer, variable


def rand_classical_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = tuple(
        (rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(n, letters)


def rand_poly(rng: random.Random, names=("q", "t"), terms=3, max_exp=2,
              max_coeff=3, laurent=False) -> LaurentPoly:
    poly = ZERO
    low = -max_exp if laurent else 0
    for _ in range(terms):
        term = integer(rng.randint(-max_coeff, max_coeff))
        for name in names:
            term = term * variable(name, rng.randint(low, max_exp))
        poly = poly + term
    return poly
