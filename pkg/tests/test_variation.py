"""Variation analysis: bases, the two differential routes, orbits, reports."""

import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from vmrt import (
    Hypersurface,
    InvalidInput,
    MonomialBasis,
    NormalizationViolated,
    SparsePoly,
    build_converse,
    coeff_vector,
    dmu_formula,
    dmu_jet,
    explicit_family,
    mu,
    orbit_tangent,
    parse_poly,
    variation_report,
    vector_to_poly,
)
from vmrt.sampling import rand_homogeneous, rand_nonzero_fraction
from vmrt.selftest import _random_normalized


def zvars(n):
    return tuple(f"z{i}" for i in range(1, n + 1))


class TestBasisAndVectors:
    def test_basis_size(self):
        basis = MonomialBasis(4, 3)
        assert basis.size == comb(4 + 3 - 1, 3)
        assert basis.monomials[0] == (3, 0, 0, 0)

    def test_unit_vector_position(self):
        basis = MonomialBasis(2, 2)
        col = coeff_vector(parse_poly("z1^2", zvars(2)), basis).column(0)
        assert col[basis.index((2, 0))] == 1
        assert sum(1 for c in col if c != 0) == 1

    def test_zero_polynomial(self):
        basis = MonomialBasis(3, 4)
        col = coeff_vector(SparsePoly.zero(zvars(3)), basis).column(0)
        assert all(c == 0 for c in col)

    def test_round_trip(self):
        rng = random.Random(37)
        basis = MonomialBasis(3, 3)
        p = rand_homogeneous(rng, zvars(3), 3)
        assert vector_to_poly(coeff_vector(p, basis).column(0), basis) == p

    def test_wrong_degree_rejected(self):
        basis = MonomialBasis(2, 2)
        with pytest.raises(InvalidInput):
            coeff_vector(parse_poly("z1^3", zvars(2)), basis)


class TestMu:
    def test_normalized_surface_reads_off_next_part(self):
        rng = random.Random(41)
        hyp = _random_normalized(rng, 3, 2, zero_lower=True)
        basis = MonomialBasis(3, 3)
        expected = coeff_vector(hyp.graded_parts()[3], basis)
        assert mu(hyp, [0, 0, 0]) == expected

    def test_degenerate_power_gives_zero(self):
        hyp = Hypersurface(parse_poly("t0^4", ("t0", "t1", "t2")))
        col = mu(hyp, [0, 0]).column(0)
        assert all(c == 0 for c in col)

    def test_converse_reads_off_first_prescribed(self):
        rng = random.Random(43)
        b3 = rand_homogeneous(rng, zvars(3), 3)
        b4 = rand_homogeneous(rng, zvars(3), 4)
        hyp = build_converse([b3, b4])
        assert mu(hyp, [0, 0, 0]) == coeff_vector(b3, MonomialBasis(3, 3))


class TestMuConsistency:
    def test_restriction_route_equals_graded_route(self):
        # mu through the restriction pipeline vs direct assembly from the
        # graded parts: B_{m+1}(0; z) = f_{m+1} - A_{m+1}(f_1, ..., f_m)
        from vmrt import build_family

        rng = random.Random(71)
        for n, m in ((3, 2), (4, 3)):
            hyp = _random_normalized(rng, n, m, zero_lower=False)
            parts = hyp.graded_parts()
            fam = build_family(m)
            lowest = parts[m + 1] - fam.tail_polys[m + 1].compose(parts[1 : m + 1])
            assert mu(hyp, (0,) * n) == coeff_vector(lowest, MonomialBasis(n, m + 1))


class TestDifferential:
    def test_reduction_when_lower_parts_vanish(self):
        rng = random.Random(47)
        for n, m in ((3, 2), (4, 3)):
            hyp = _random_normalized(rng, n, m, zero_lower=True)
            parts = hyp.graded_parts()
            basis = MonomialBasis(n, m + 1)
            mat = dmu_formula(hyp)
            for i in range(1, n + 1):
                expected = coeff_vector(parts[m + 2].partial(f"z{i}"), basis)
                assert mat.column(i - 1) == expected.column(0)

    def test_explicit_family_columns(self):
        # m=2, n=4, b=c=1: column i should be 4*z_i^3 + sum of complement triples
        hyp = explicit_family(4, 2, 1, 1)
        basis = MonomialBasis(4, 3)
        mat = dmu_formula(hyp)
        zv = zvars(4)
        for i in range(1, 5):
            gens = [SparsePoly.variable(zv, f"z{j}") for j in range(1, 5)]
            expected_poly = gens[i - 1] ** 3 * 4
            for triple in combinations([j for j in range(1, 5) if j != i], 3):
                term = SparsePoly.constant(zv, 1)
                for j in triple:
                    term = term * gens[j - 1]
                expected_poly = expected_poly + term
            assert mat.column(i - 1) == coeff_vector(expected_poly, basis).column(0)

    def test_no_middle_part_gives_zero_matrix(self):
        # m = 3: f = t0^6 + (degree-6 part in t1..t3) has f_5 = 0, so dmu dies
        rng = random.Random(53)
        tv = ("t0", "t1", "t2", "t3")
        top = rand_homogeneous(rng, tv[1:], 6)
        lifted = SparsePoly(tv, {(0,) + exp: c for exp, c in top.terms.items()})
        hyp = Hypersurface(SparsePoly.variable(tv, "t0") ** 6 + lifted)
        mat = dmu_formula(hyp)
        assert all(c == 0 for col in mat.columns() for c in col)

    def test_normalization_enforced(self):
        hyp = Hypersurface(parse_poly("2*t0^4 + t1^4", ("t0", "t1", "t2")))
        with pytest.raises(NormalizationViolated):
            dmu_formula(hyp)
        with pytest.raises(NormalizationViolated):
            dmu_jet(hyp)

    def test_formula_equals_jets(self):
        rng = random.Random(59)
        for n, m in ((3, 2), (4, 2), (4, 3)):
            for _ in range(2):
                hyp = _random_normalized(rng, n, m, zero_lower=False)
                assert dmu_formula(hyp) == dmu_jet(hyp)


class TestOrbitTangent:
    def test_sum_of_powers_has_full_orbit(self):
        for n, m in ((3, 2), (4, 3)):
            zv = zvars(n)
            h = SparsePoly.zero(zv)
            for i in range(1, n + 1):
                h = h + SparsePoly.variable(zv, f"z{i}") ** (m + 1)
            h = h * Fraction(3, 7)
            mat = orbit_tangent(h)
            assert mat.cols == n * n
            assert mat.rank() == n * n

    def test_zero_form(self):
        mat = orbit_tangent(SparsePoly.zero(zvars(3)), degree=3)
        assert mat.rank() == 0

    def test_single_power(self):
        zv = zvars(3)
        h = SparsePoly.variable(zv, "z1") ** 3
        assert orbit_tangent(h).rank() == 3

    def test_wrong_degree_rejected(self):
        with pytest.raises(InvalidInput):
            orbit_tangent(parse_poly("z1^2", zvars(2)), degree=3)


class TestReportsAndFamilies:
    def test_m2_family_polynomial(self):
        hyp = explicit_family(4, 2, 1, 1)
        expected = parse_poly(
            "t0^4 + t0*t1^3 + t0*t2^3 + t0*t3^3 + t0*t4^3"
            " + t1^4 + t2^4 + t3^4 + t4^4 + t1*t2*t3*t4"
        )
        assert hyp.f == expected

    def test_mge3_family_polynomial(self):
        hyp = explicit_family(4, 3, 1, 1)
        expected = parse_poly(
            "t0^6 + t0^2*t1^4 + t0^2*t2^4 + t0^2*t3^4 + t0^2*t4^4"
            " + t0*t1*t2*t3*t4^2 + t1^6 + t2^6 + t3^6 + t4^6"
        )
        assert hyp.f == expected

    def test_parameter_validation(self):
        with pytest.raises(InvalidInput):
            explicit_family(3, 2, 1, 1)
        with pytest.raises(InvalidInput):
            explicit_family(4, 4, 1, 1)
        with pytest.raises(InvalidInput):
            explicit_family(4, 2, 0, 1)
        with pytest.raises(InvalidInput):
            explicit_family(4, 2, 1, 0)

    def test_reference_family_numbers(self):
        for m in (2, 3):
            rep = variation_report(explicit_family(4, m, 1, 1))
            assert (rep.rank_dmu, rep.dim_orbit, rep.dim_intersection) == (4, 16, 0)
            assert rep.maximal

    def test_maximal_flag_stable_over_random_parameters(self):
        rng = random.Random(61)
        for m in (2, 3):
            for _ in range(10):
                b = rand_nonzero_fraction(rng)
                c = rand_nonzero_fraction(rng)
                rep = variation_report(explicit_family(4, m, b, c))
                assert rep.maximal

    def test_missing_middle_part_is_not_maximal(self):
        # m = 3 Fermat: f_5 = 0, so the differential has rank 0
        hyp = Hypersurface(parse_poly("t0^6 + t1^6 + t2^6 + t3^6 + t4^6"))
        rep = variation_report(hyp)
        assert rep.rank_dmu == 0
        assert not rep.maximal

    def test_report_requires_normalization(self):
        hyp = Hypersurface(parse_poly("3*t0^4 + t1^4 + t2^4 + t3^4 + t4^4"))
        with pytest.raises(NormalizationViolated):
            variation_report(hyp)
