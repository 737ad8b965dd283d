import random
from fractions import Fraction

import pytest

from braidrep.braid import BraidWord, relation_set
from braidrep.garside import NormalForm, nf_inverse, to_normal_form
from braidrep.matrix import RingMatrix
from braidrep.reps import (
    DegeneratePointError,
    GroupAlgebraElem,
    MatrixRep,
    birman_image,
    burau,
    burau_ext,
    det_tau_all_equal,
    det_tau_b4_diff,
    det_tau_symbolic,
    exterior_square_burau,
    lkb,
    lkb_ext,
    rep_apply,
    singular_extension_by_affine_combination,
    solve_extension_space,
    verify_group_algebra_relations,
    verify_relations,
    wedge_square,
)
from braidrep.ring import RatFunc, variable
from conftest import rand_classical_word

q, t, u, v, a = (variable(x) for x in "qtuva")
B = BraidWord.parse


# -- Burau ----------------------------------------------------------------------

def test_burau_generator_golden():
    rep = burau(2)
    assert rep.sigma_image(1) == RingMatrix([[1 - t, t], [1, 0]])
    assert rep_apply(rep, B(2, "1 -1")) == RingMatrix.identity(2)


def test_burau_relations():
    for n in range(2, 7):
        assert verify_relations(burau(n)).all_ok


def test_burau_in_another_variable():
    rep = burau(3, "q")
    assert rep.sigma_image(1) == RingMatrix(
        [[1 - q, q, 0], [1, 0, 0], [0, 0, 1]]
    )


def test_burau_ext_golden_and_relations():
    rep = burau_ext(2)
    assert rep.tau_image(1) == RingMatrix([[1 - t + a * t, t - a * t], [1 - a, a]])
    assert burau_ext(3, 1).tau_image(1) == RingMatrix.identity(3)
    for n in range(2, 6):
        assert verify_relations(burau_ext(n)).all_ok


def test_burau_ext_affine_identity():
    # tau image equals (1 - a) * sigma image + a * identity, symbolically.
    for n in range(2, 6):
        rep = burau_ext(n)
        base = burau(n)
        ident = RingMatrix.identity(n)
        for i in range(1, n):
            combo = base.sigma_image(i).scalar_mul(1 - a) + ident.scalar_mul(a)
            assert rep.tau_image(i) - combo == RingMatrix.zero(n)


def test_burau_ext_rational_parameter():
    rep = burau_ext(2, Fraction(1, 3))
    assert rep.ring == "ratfunc"
    assert verify_relations(rep).all_ok


# -- LKB -------------------------------------------------------------------------

LKB3 = {
    1: RingMatrix([[t * q ** 2, 0, 0], [t * q * (q - 1), 1 - q, q], [0, 1, 0]]),
    2: RingMatrix([[1 - q, q, q * (q - 1)], [1, 0, 0], [0, 0, t * q ** 2]]),
}

LKB4 = {
    1: RingMatrix(
        [
            [t * q ** 2, 0, 0, 0, 0, 0],
            [t * q * (q - 1), 1 - q, 0, q, 0, 0],
            [t * q * (q - 1), 0, 1 - q, 0, q, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ]
    ),
    2: RingMatrix(
        [
            [1 - q, q, 0, q * (q - 1), 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, t * q ** 2, 0, 0],
            [0, 0, 0, t * q * (q - 1), 1 - q, q],
            [0, 0, 0, 0, 1, 0],
        ]
    ),
    3: RingMatrix(
        [
            [1, 0, 0, 0, 0, 0],
            [0, 1 - q, q, 0, 0, q * (q - 1)],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1 - q, q, q * (q - 1)],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, t * q ** 2],
        ]
    ),
}


def test_lkb_generator_goldens():
    rep3 = lkb(3)
    for i, expected in LKB3.items():
        assert rep3.sigma_image(i) == expected, f"n=3 sigma{i}"
    rep4 = lkb(4)
    for i, expected in LKB4.items():
        assert rep4.sigma_image(i) == expected, f"n=4 sigma{i}"


def test_lkb_inverse_by_multiplication():
    rep = lkb(3)
    for i in (1, 2):
        prod = rep.sigma_image(i) * rep.sigma_inv_image(i)
        assert prod == RingMatrix.identity(3)


def test_lkb_relations():
    for n in range(2, 6):
        assert verify_relations(lkb(n)).all_ok


def test_lkb_ext_tau_goldens_n3():
    rep = lkb_ext(3)
    assert rep.tau_image(1) == RingMatrix(
        [
            [u * q ** 2 * t + v, 0, 0],
            [u * t * q * (q - 1), u * (1 - q) + v, u * q],
            [0, u, v],
        ]
    )
    assert rep.tau_image(2) == RingMatrix(
        [
            [u * (1 - q) + v, u * q, u * q * (q - 1)],
            [u, v, 0],
            [0, 0, u * q ** 2 * t + v],
        ]
    )


def test_lkb_ext_tau_goldens_n4():
    rep = lkb_ext(4)
    ident = RingMatrix.identity(6)
    for i in (1, 2, 3):
        expected = LKB4[i].scalar_mul(u) + ident.scalar_mul(v)
        assert rep.tau_image(i) == expected
    # The third singular image written out entrywise.
    assert rep.tau_image(3) == RingMatrix(
        [
            [u + v, 0, 0, 0, 0, 0],
            [0, u * (1 - q) + v, u * q, 0, 0, u * q * (q - 1)],
            [0, u, v, 0, 0, 0],
            [0, 0, 0, u * (1 - q) + v, u * q, u * q * (q - 1)],
            [0, 0, 0, u, v, 0],
            [0, 0, 0, 0, 0, u * t * q ** 2 + v],
        ]
    )


def test_lkb_ext_unit_parameters_recover_lkb():
    rep = lkb_ext(3, 1, 0)
    base = lkb(3)
    for i in (1, 2):
        assert rep.tau_image(i) == base.sigma_image(i)


def test_lkb_ext_relations_symbolic():
    for n in (2, 3, 4):
        assert verify_relations(lkb_ext(n)).all_ok


def test_lkb_ext_rational_parameters():
    rep = lkb_ext(3, Fraction(1, 2), Fraction(2, 3))
    assert rep.ring == "ratfunc"
    assert verify_relations(rep).all_ok


def test_rep_apply_homomorphism():
    rng = random.Random(77)
    reps = [burau(3), lkb(3), exterior_square_burau(4)]
    for rep in reps:
        for _ in range(20):
            x = rand_classical_word(rng, rep.n, rng.randint(0, 5))
            y = rand_classical_word(rng, rep.n, rng.randint(0, 5))
            assert rep_apply(rep, x * y) == rep_apply(rep, x) * rep_apply(rep, y)


def test_rep_apply_homomorphism_with_singular_letters():
    rng = random.Random(78)

    def rand_singular_word(n, length):
        letters = tuple(
            (rng.randint(1, n - 1), rng.choice((1, -1, 0))) for _ in range(length)
        )
        return BraidWord(n, letters)

    for rep in (burau_ext(3), lkb_ext(3)):
        for _ in range(15):
            x = rand_singular_word(rep.n, rng.randint(0, 4))
            y = rand_singular_word(rep.n, rng.randint(0, 4))
            assert rep_apply(rep, x * y) == rep_apply(rep, x) * rep_apply(rep, y)


def test_rep_apply_long_relation_with_tau():
    rep = lkb_ext(3)
    assert rep_apply(rep, B(3, "1 2 t1")) == rep_apply(rep, B(3, "t2 1 2"))


def test_rep_apply_errors():
    with pytest.raises(ValueError):
        rep_apply(lkb(3), B(4, "1"))
    with pytest.raises(ValueError):
        rep_apply(lkb(3), B(3, "t1"))


# -- exterior square ---------------------------------------------------------------

WEDGE3 = {
    1: RingMatrix([[-q, 0, 0], [0, 1 - q, q], [0, 1, 0]]),
    2: RingMatrix([[1 - q, q, 0], [1, 0, 0], [0, 0, -q]]),
}


def test_wedge_generator_matrices():
    rep = exterior_square_burau(3)
    for i, expected in WEDGE3.items():
        assert rep.sigma_image(i) == expected


def test_wedge_direct_formula_equals_functorial():
    for n in (3, 4, 5):
        rep = exterior_square_burau(n)
        base = burau(n, "q")
        for i in range(1, n):
            assert rep.sigma_image(i) == wedge_square(base.sigma_image(i))


def test_wedge_relations():
    for n in range(2, 6):
        assert verify_relations(exterior_square_burau(n)).all_ok


def test_wedge_functoriality_random_words():
    rng = random.Random(88)
    for n in (3, 4, 5):
        rep = exterior_square_burau(n)
        base = burau(n, "q")
        for _ in range(12):
            word = rand_classical_word(rng, n, rng.randint(0, 6))
            assert wedge_square(rep_apply(base, word)) == rep_apply(rep, word)


def test_published_diagonal_variant_violates_braid_relation():
    # Negative control: replacing the (i,i+1)-diagonal coefficient -q by the
    # published 1-q breaks sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2, which
    # pins that coefficient as a typo.
    g1 = RingMatrix([[1 - q, 0, 0], [0, 1 - q, q], [0, 1, 0]])
    g2 = RingMatrix([[1 - q, q, 0], [1, 0, 0], [0, 0, 1 - q]])
    assert g1 * g2 * g1 != g2 * g1 * g2
    # and the corrected matrices satisfy it
    c1, c2 = WEDGE3[1], WEDGE3[2]
    assert c1 * c2 * c1 == c2 * c1 * c2


def test_corrupted_representation_fails_verification():
    rep = lkb(3)
    rows = [list(r) for r in rep.sigma_image(1).rows]
    rows[0][1] = rows[0][1] + 1
    corrupted = MatrixRep(
        "corrupted",
         3,
        3,
        rep.ring,
        (RingMatrix(rows), rep.sigma_image(2)),
        rep.sigma_inv_images,
        None,
    )
    report = verify_relations(corrupted)
    assert not report.all_ok
    assert any(c.difference is not None and not c.difference.is_zero()
               for c in report.failures)


# -- determinants of the singular images ---------------------------------------------

def test_det_tau_golden_n3():
    expected = (u * q ** 2 * t + v) * (v ** 2 + v * u * (1 - q) - u ** 2 * q)
    assert det_tau_symbolic(3) == expected


def test_det_tau_all_generators_agree():
    for n in (3, 4, 5):
        assert det_tau_all_equal(n)


def test_det_tau_u_zero():
    for n in (3, 4):
        m = n * (n - 1) // 2
        assert lkb_ext(n, u=0).tau_image(1).det() == v ** m


def test_det_tau_b4_diff_is_the_u6_typo():
    cmp = det_tau_b4_diff()
    assert cmp["only_u6_terms"]
    assert cmp["diff"] == q ** 4 * t * u ** 6 - 4 * t * u ** 6
    # coefficient of u^6 independently fixed by det of the sigma1 image
    assert lkb(4).sigma_image(1).det() == t * q ** 4


def test_det_tau_factorization_structure():
    # det factors as (quadratic block)^(n-2) * (u q^2 t + v) * (u + v)^binom(n-2, 2)
    for n in (3, 4, 5):
        block = v ** 2 + v * u * (1 - q) - u ** 2 * q
        expected = (u * q ** 2 * t + v) * block ** (n - 2) * (u + v) ** (
            (n - 2) * (n - 3) // 2
        )
        assert det_tau_symbolic(n) == expected


# -- group algebra -------------------------------------------------------------------

def test_birman_image_golden():
    g = birman_image(B(2, "t1"), 1, -1, 0)
    s1 = to_normal_form(B(2, "1"))
    assert g.terms == {s1: RatFunc(1), nf_inverse(s1): RatFunc(-1)}


def test_birman_image_trivial_word():
    assert birman_image(B(2, "1 -1"), 1, -1, 0) == GroupAlgebraElem.unit(2)


def test_birman_image_two_term_product():
    # (sigma1 - sigma1^-1) * sigma1^-1 = e - sigma1^-2
    g = birman_image(B(2, "t1 -1"), 1, -1, 0)
    s1m2 = to_normal_form(B(2, "-1 -1"))
    assert g.terms == {NormalForm.identity(2): RatFunc(1), s1m2: RatFunc(-1)}


def test_group_algebra_product_distinct_keys():
    one = GroupAlgebraElem.from_braid(to_normal_form(B(3, "1")))
    two = GroupAlgebraElem.from_braid(to_normal_form(B(3, "2")))
    product = (one + two) * (one - two)
    # sigma1 sigma2 and sigma2 sigma1 are distinct normal forms, so 4 terms.
    assert len(product) == 4
    assert GroupAlgebraElem.unit(3) * product == product


def test_group_algebra_relations_symbolic():
    for n in (2, 3, 4):
        report = verify_group_algebra_relations(n)
        assert report.all_ok, report.summary()


def test_affine_extension_of_matrix_rep():
    rep = singular_extension_by_affine_combination(burau(3), 1, -1, 0)
    base = burau(3)
    for i in (1, 2):
        assert rep.tau_image(i) == base.sigma_image(i) - base.sigma_inv_image(i)
    assert verify_relations(rep).all_ok


# -- extension solution space ----------------------------------------------------------

def _affine_span_checks(solution):
    assert solution.contains_generator_image and solution.contains_identity


def test_extension_space_structure():
    # The constraint system is solved exactly; its nullspace is the span of
    # I, S1 and S1^2 (the image of the squared crossing also extends), so the
    # dimension is 3.  The published dimension-2 claim fails; see the
    # acceptance suite and the analysis accompanying it.
    point = {"q": Fraction(2), "t": Fraction(3)}
    solution = solve_extension_space(3, point)
    assert solution.dimension == 3
    _affine_span_checks(solution)

    point4 = {"q": Fraction(3), "t": Fraction(2)}
    solution4 = solve_extension_space(4, point4)
    assert solution4.dimension == 3
    assert solution4.quadratic_ok
    _affine_span_checks(solution4)


def test_extension_space_contains_squared_generator():
    point = {"q": Fraction(5), "t": Fraction(2)}
    solution = solve_extension_space(3, point)
    rep = lkb(3)
    s1 = [list(row) for row in rep.sigma_image(1).evaluate(point)]
    m = 3
    s1sq = [
        [sum(s1[i][k] * s1[k][j] for k in range(m)) for j in range(m)]
        for i in range(m)
    ]
    from braidrep.reps import _in_span

    basis_vecs = [
        [mat[r][c] for r in range(m) for c in range(m)]
        for mat in solution.basis_matrices
    ]
    flat = [s1sq[r][c] for r in range(m) for c in range(m)]
    assert _in_span(basis_vecs, flat)


def test_squared_crossing_is_an_extension():
    # tau_i -> sigma_i image squared satisfies every defining relation, which
    # is why the solution space above is three-dimensional.
    for n in (3, 4):
        base = lkb(n)
        taus = tuple(base.sigma_image(i) * base.sigma_image(i) for i in range(1, n))
        rep = MatrixRep(
            "lkb+tau=sigma^2", n, base.dim, base.ring,
            base.sigma_images, base.sigma_inv_images, taus,
        )
        assert verify_relations(rep).all_ok


def test_degenerate_points_rejected():
    for bad in ({"q": 1, "t": 2}, {"q": 0, "t": 2}, {"q": -1, "t": 2}, {"q": 2, "t": 0}):
        with pytest.raises(DegeneratePointError):
            solve_extension_space(3, bad)
    with pytest.raises(ValueError):
        solve_extension_space(5, {"q": 2, "t": 3})
