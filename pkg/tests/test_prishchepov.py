import random

import pytest

from cycpres.classify import det_of_params
from cycpres.cyclic_words import exponent_sums, rep_poly, word_to_text
from cycpres.poly import IntPoly, reduce_mod
from cycpres.prishchepov import (
    PrishParams,
    ReductionError,
    flip,
    involution,
    poly_F,
    poly_G,
    poly_general,
    reduce_params,
    word_of,
)


def P(*key):
    return PrishParams(*key)


def mod_tn(f, n):
    return reduce_mod(f, IntPoly((-1,) + (0,) * (n - 1) + (1,)))


class TestParams:
    def test_n_one_rejected(self):
        with pytest.raises(ValueError):
            P(2, 1, 3, 1, 1)

    def test_positivity(self):
        for bad in [(0, 5, 1, 1, 1), (1, 5, 0, 1, 1), (1, 5, 1, 0, 1), (1, 5, 1, 1, 0)]:
            with pytest.raises(ValueError):
                P(*bad)

    def test_large_k_kept_raw(self):
        assert P(2, 5, 12, 1, 1).k == 12


class TestWordOf:
    def test_fibonacci(self):
        assert word_to_text(word_of(P(2, 5, 3, 1, 1))) == "x0 x1 X2"

    def test_q_two(self):
        assert word_to_text(word_of(P(2, 5, 2, 1, 2))) == "x0 x2 X1"

    def test_inverse_block_reversed(self):
        assert word_to_text(word_of(P(3, 5, 3, 2, 1))) == "x0 x1 x2 X3 X2"

    def test_indices_wrap(self):
        w = word_of(P(3, 4, 4, 2, 3))
        assert all(0 <= i < 4 for i, _ in w.letters)


class TestPolyGeneral:
    def test_fibonacci_polynomial(self):
        assert poly_general(P(2, 9, 3, 1, 1)) == IntPoly((1, 1, -1))

    def test_collapse_to_zero(self):
        assert poly_general(P(1, 6, 1, 1, 1)).is_zero

    def test_spread_exponents(self):
        assert poly_general(P(3, 7, 4, 2, 2)) == IntPoly((1, 0, 1, -1, 1, -1))

    def test_exponents_not_reduced(self):
        # q = n leaves the positive block at exponents 0, n, 2n, ...
        f = poly_general(P(3, 4, 1, 2, 4))
        assert f.degree == 8

    def test_matches_word_exponent_sums(self):
        rng = random.Random(13)
        for _ in range(200):
            n = rng.randint(2, 9)
            p = P(rng.randint(1, 2 * n), n, rng.randint(1, 2 * n),
                  rng.randint(1, 2 * n), rng.randint(1, 2 * n))
            via_word = rep_poly(exponent_sums(word_of(p)))
            assert mod_tn(poly_general(p), n) == via_word


class TestPolyFG:
    def test_f_examples(self):
        assert poly_F(3, 3) == IntPoly((1, 1, 0, -1))
        assert poly_F(2, 3) == IntPoly((1, 1, -1))
        assert poly_F(2, 1) == IntPoly((0, 1))

    def test_f_requires_r_at_least_2(self):
        with pytest.raises(ValueError):
            poly_F(1, 3)

    def test_g_examples(self):
        assert poly_G(3, 3) == IntPoly((1, 1, 0, -1))
        assert poly_G(2, 2) == IntPoly((1,))
        assert poly_G(2, 4) == IntPoly((1, 1, 0, -1))

    def test_g_requires_k_at_least_2(self):
        with pytest.raises(ValueError):
            poly_G(3, 1)

    def test_g_is_f_transported_along_involution(self):
        for r in range(1, 13):
            # k = 2 collapses G to 1 and lands outside poly_F's domain (r' = 1).
            assert poly_G(r, 2) == IntPoly((1,))
            for k in range(3, 13):
                k2, r2 = involution(k, r)
                # involution(k, r) = (r+1, k-1), and G(r, k) = F(k-1, r+1).
                assert (k2, r2) == (r + 1, k - 1)
                assert poly_G(r, k) == poly_F(r2, k2)


class TestInvolution:
    def test_example(self):
        assert involution(3, 3) == (4, 2)

    def test_other(self):
        assert involution(2, 4) == (5, 1)

    def test_involutive(self):
        for k in range(-3, 8):
            for r in range(-3, 8):
                assert involution(*involution(k, r)) == (k, r)


class TestFlip:
    def test_example(self):
        assert flip(P(2, 5, 3, 1, 1)) == P(1, 5, 4, 2, 1)

    def test_k_slot_normalized(self):
        assert flip(P(3, 5, 5, 2, 2)) == P(2, 5, 2, 3, 2)
        assert flip(P(2, 5, 1, 1, 1)).k == 1
        assert flip(P(2, 5, 2, 1, 1)).k == 5

    def test_preserves_det_magnitude(self):
        rng = random.Random(14)
        for _ in range(120):
            n = rng.randint(2, 9)
            p = P(rng.randint(1, n), n, rng.randint(1, n), rng.randint(1, n), rng.randint(1, n))
            assert abs(det_of_params(p)) == abs(det_of_params(flip(p)))

    def test_double_flip_preserves_det_magnitude(self):
        p = P(3, 7, 4, 2, 2)
        assert abs(det_of_params(flip(flip(p)))) == abs(det_of_params(p))


class TestReduce:
    def test_coprime_shift(self):
        red = reduce_params(P(3, 5, 5, 2, 2))
        assert (red.d, red.N, red.Q, red.Qhat, red.Kprime, red.K) == (1, 5, 2, 3, 5, 3)
        assert red.reduced == P(3, 5, 3, 2, 1)

    def test_q_one_fixed_point(self):
        red = reduce_params(P(2, 5, 3, 1, 1))
        assert red.copies == 1 and red.reduced == P(2, 5, 3, 1, 1)

    def test_free_product_split(self):
        red = reduce_params(P(2, 10, 3, 1, 2))
        assert (red.d, red.N, red.Q, red.Qhat, red.Kprime, red.K) == (2, 5, 1, 1, 2, 2)
        assert red.copies == 2 and red.reduced == P(2, 5, 2, 1, 1)

    def test_shape_error(self):
        with pytest.raises(ReductionError, match="s = r-1"):
            reduce_params(P(3, 5, 4, 1, 1))

    def test_congruence_error(self):
        with pytest.raises(ReductionError, match="mod gcd"):
            reduce_params(P(2, 10, 4, 1, 2))

    def test_degenerate_error(self):
        with pytest.raises(ReductionError, match="degenerate"):
            reduce_params(P(2, 5, 6, 1, 5))

    def test_invariants(self):
        from math import gcd

        rng = random.Random(15)
        for _ in range(200):
            n = rng.randint(2, 18)
            q = rng.randint(1, 2 * n)
            d = gcd(n, q)
            if n // d == 1:
                continue
            k = 1 + d * rng.randint(0, 3)
            r = rng.randint(2, 6)
            red = reduce_params(P(r, n, k, r - 1, q))
            assert n == red.d * red.N and q == red.d * red.Q
            assert gcd(red.N, red.Q) == 1
            assert (red.Q * red.Qhat) % red.N == 1 % red.N
            assert k - 1 == red.d * (red.Kprime - 1)
            assert 1 <= red.K <= red.N
            assert (red.K - (red.Qhat * (red.Kprime - 1) + 1)) % red.N == 0

    def test_det_multiplicativity_spot(self):
        for key in [(2, 10, 3, 1, 2), (2, 10, 5, 1, 2), (3, 6, 4, 2, 3), (2, 6, 5, 1, 2),
                    (4, 12, 5, 3, 8), (3, 15, 7, 2, 3)]:
            p = P(*key)
            red = reduce_params(p)
            assert abs(det_of_params(p)) == abs(det_of_params(red.reduced)) ** red.copies
