"""Certificate recursion: families, certification, weighted homogeneity."""

import random
from fractions import Fraction

import pytest

from vmrt import (
    InvalidInput,
    UniPoly,
    build_family,
    certify,
    is_perfect_square,
    is_weighted_homogeneous,
    parse_poly,
)
from vmrt.sampling import rand_fraction, rand_nonzero_fraction


def square_coeffs(sigma):
    """Coefficient vector a_1..a_2m of (1 + sigma_1 lam + ... + sigma_m lam^m)^2."""
    root = UniPoly.from_scalars([1] + list(sigma))
    sq = root * root
    return [sq.coeff(k) for k in range(1, 2 * len(sigma) + 1)]


class TestBuildFamily:
    def test_m2_root_polys(self):
        fam = build_family(2)
        t = ("t1", "t2")
        assert fam.root_polys[1] == parse_poly("1/2*t1", t)
        assert fam.root_polys[2] == parse_poly("1/2*t2 - 1/8*t1^2", t)

    def test_m2_tail_polys(self):
        fam = build_family(2)
        t = ("t1", "t2")
        assert fam.tail_polys[3] == parse_poly("1/2*t1*t2 - 1/8*t1^3", t)
        assert fam.tail_polys[4] == parse_poly("1/4*t2^2 - 1/8*t1^2*t2 + 1/64*t1^4", t)

    def test_m1_tail(self):
        fam = build_family(1)
        assert fam.tail_polys[2] == parse_poly("1/4*t1^2", ("t1",))

    def test_partials_cached(self):
        fam = build_family(2)
        assert fam.tail_partials[(4, 2)] == parse_poly("1/2*t2 - 1/8*t1^2", ("t1", "t2"))

    def test_invalid_m(self):
        with pytest.raises(InvalidInput):
            build_family(0)


class TestCertify:
    def test_binomial_fourth_power(self):
        cert = certify([4, 6, 4, 1])
        assert cert.passed
        assert cert.sigma == (Fraction(2), Fraction(1))

    def test_squarefree_quartic_fails(self):
        cert = certify([0, 0, 0, 1])
        assert not cert.passed
        assert cert.residuals == (Fraction(0), Fraction(1))

    def test_worked_square(self):
        cert = certify([6, 13, 12, 4])
        assert cert.passed
        assert cert.sigma == (Fraction(3), Fraction(2))

    def test_odd_length_rejected(self):
        with pytest.raises(InvalidInput):
            certify([1, 2, 3])
        with pytest.raises(InvalidInput):
            certify([])

    def test_soundness_square_reproduces_all_coefficients(self):
        rng = random.Random(41)
        for _ in range(50):
            m = rng.randint(1, 5)
            a = square_coeffs([rand_fraction(rng) for _ in range(m)])
            cert = certify(a)
            assert cert.passed
            assert square_coeffs(cert.sigma) == a

    def test_low_coefficients_always_match(self):
        # pass or fail, the certificate square agrees with a_1..a_m
        rng = random.Random(43)
        for _ in range(50):
            m = rng.randint(1, 5)
            a = [rand_fraction(rng) for _ in range(2 * m)]
            cert = certify(a)
            assert square_coeffs(cert.sigma)[:m] == a[:m]

    def test_oracle_equivalence_smoke(self):
        rng = random.Random(47)
        for _ in range(100):
            m = rng.randint(1, 6)
            if rng.random() < 0.5:
                a = square_coeffs([rand_fraction(rng) for _ in range(m)])
            else:
                a = [rand_fraction(rng) for _ in range(2 * m)]
            poly = UniPoly.from_scalars([1] + a)
            assert certify(a).passed == is_perfect_square(poly)[0]

    def test_scaling_equivariance(self):
        rng = random.Random(53)
        for _ in range(25):
            m = rng.randint(1, 5)
            a = [rand_fraction(rng) for _ in range(2 * m)]
            s = rand_nonzero_fraction(rng)
            base = certify(a)
            scaled = certify([s ** k * a[k - 1] for k in range(1, 2 * m + 1)])
            assert scaled.sigma == tuple(s ** k * v for k, v in enumerate(base.sigma, start=1))
            assert scaled.residuals == tuple(
                s ** k * r for k, r in enumerate(base.residuals, start=m + 1)
            )

    def test_degenerate_top_coefficient_accepted(self):
        # (1 + lam)^2 read as a degree-4 certificate: contact at infinity
        cert = certify([2, 1, 0, 0])
        assert cert.passed
        assert cert.sigma == (Fraction(1), Fraction(0))


class TestWeightedHomogeneity:
    def test_tail_poly_example(self):
        fam = build_family(2)
        assert is_weighted_homogeneous(fam.tail_polys[4], 4, [1, 2])

    def test_mixed_weights_fail(self):
        p = parse_poly("t1 + t2", ("t1", "t2"))
        assert not any(is_weighted_homogeneous(p, k, [1, 2]) for k in range(0, 5))

    def test_constant(self):
        c = parse_poly("1", ("t1", "t2"))
        assert is_weighted_homogeneous(c, 0, [1, 2])
        assert not is_weighted_homogeneous(c, 3, [1, 2])

    def test_all_family_members_up_to_six(self):
        for m in range(1, 7):
            fam = build_family(m)
            weights = list(range(1, m + 1))
            for k in range(1, m + 1):
                assert is_weighted_homogeneous(fam.root_polys[k], k, weights)
            for k in range(m + 1, 2 * m + 1):
                assert is_weighted_homogeneous(fam.tail_polys[k], k, weights)

    def test_bad_weights_rejected(self):
        with pytest.raises(InvalidInput):
            is_weighted_homogeneous(parse_poly("1", ("t1",)), 0, [0])
