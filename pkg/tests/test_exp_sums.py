import cmath

import pytest

from expsums import (
    ExpSumQuery,
    Polynomial,
    PreconditionError,
    binomial,
    chain_coefficient_sum,
    enumerate_chains,
    eq3_residual_poly,
    eq4_check,
    exp_power_sum_complex,
    exp_power_sum_cyclo,
    prop1_residual_complex,
    prop1_residual_cyclo,
    run_coefficient_check,
    run_eq3,
    run_prop1_exact,
    run_prop1_float,
)


class TestQuery:
    def test_modulus_one_rejected(self):
        with pytest.raises(ValueError):
            ExpSumQuery(1, 1, 1, 1)

    def test_sign_validated(self):
        with pytest.raises(ValueError):
            ExpSumQuery(1, 3, 1, 2)

    def test_frequency_normalized(self):
        assert ExpSumQuery(1, 5, 7, 1).m == 2
        assert ExpSumQuery(1, 5, -1, 1).m == 4
        assert ExpSumQuery(1, 5, 10, 1).m == 0


class TestComplexSum:
    def test_zeroth_power_is_minus_one(self):
        for k, m in [(3, 1), (5, 2), (7, 12), (4, 3)]:
            for sign in (1, -1):
                value = exp_power_sum_complex(ExpSumQuery(0, k, m, sign))
                assert abs(value - (-1)) < 1e-12

    def test_two_term_case(self):
        value = exp_power_sum_complex(ExpSumQuery(1, 2, 1, 1))
        assert abs(value - (-1)) < 1e-14

    def test_opposite_signs_conjugate(self):
        for p in range(4):
            for k in range(2, 8):
                for m in range(2 * k):
                    f = exp_power_sum_complex(ExpSumQuery(p, k, m, -1))
                    g = exp_power_sum_complex(ExpSumQuery(p, k, m, 1))
                    assert abs(f - g.conjugate()) < 1e-9


class TestCycloSum:
    def test_zeroth_power_reduces_to_minus_one(self):
        assert exp_power_sum_cyclo(ExpSumQuery(0, 3, 1, 1)) == -1

    def test_linear_mod_three(self):
        elem = exp_power_sum_cyclo(ExpSumQuery(1, 3, 1, 1))
        assert elem.residue == Polynomial([-2, -1])

    def test_shared_factor_frequency(self):
        # 1*x^2 + 2*x^0 + 3*x^2 collapses to 2 - 4 = -2 mod x^2 + 1.
        assert exp_power_sum_cyclo(ExpSumQuery(1, 4, 2, 1)) == -2

    def test_divisible_frequency_gives_k_minus_1(self):
        for k in (2, 3, 6):
            assert exp_power_sum_cyclo(ExpSumQuery(0, k, k, 1)) == k - 1

    def test_matches_complex_embedding(self):
        for p in range(3):
            for k in range(2, 9):
                for m in range(1, k):
                    elem = exp_power_sum_cyclo(ExpSumQuery(p, k, m, 1))
                    zeta = cmath.exp(2j * cmath.pi / k)
                    embedded = sum(
                        complex(c) * zeta**d for d, c in enumerate(elem.residue.coeffs)
                    )
                    direct = exp_power_sum_complex(ExpSumQuery(p, k, m, 1))
                    assert abs(embedded - direct) < 1e-9

    def test_conjugation_symmetry(self):
        for p in range(6):
            for k in range(2, 11):
                for m in range(k):
                    neg = exp_power_sum_cyclo(ExpSumQuery(p, k, m, -1))
                    pos = exp_power_sum_cyclo(ExpSumQuery(p, k, (k - m) % k, 1))
                    assert neg == pos


class TestProp1Exact:
    def test_worked_cases(self):
        assert prop1_residual_cyclo(1, 3, 1).is_zero
        assert prop1_residual_cyclo(2, 4, 2).is_zero

    def test_divisible_frequency_rejected(self):
        with pytest.raises(PreconditionError):
            prop1_residual_cyclo(1, 3, 3)
        with pytest.raises(PreconditionError):
            prop1_residual_cyclo(4, 7, 7)

    def test_small_grid_is_zero(self):
        for p in range(1, 6):
            for k in range(2, 11):
                for m in range(1, 2 * k + 1):
                    if m % k:
                        assert prop1_residual_cyclo(p, k, m).is_zero, (p, k, m)


class TestProp1Float:
    def test_moderate_case(self):
        res = prop1_residual_complex(3, 5, 2)
        assert res.relative <= 1e-9

    def test_tiny_case(self):
        res = prop1_residual_complex(1, 2, 1)
        assert res.absolute <= 1e-12

    def test_divisible_frequency_rejected(self):
        with pytest.raises(PreconditionError):
            prop1_residual_complex(2, 6, 12)


class TestEq3:
    def test_small_cases(self):
        assert eq3_residual_poly(1, 2).is_zero
        assert eq3_residual_poly(3, 5).is_zero

    def test_small_grid(self):
        for p in range(1, 6):
            for k in range(2, 9):
                assert eq3_residual_poly(p, k).is_zero, (p, k)

    def test_consistency_with_plain_power_sums(self):
        # The m = 0 slice of the residual is the all-ones specialization,
        # which is exactly the plain power-sum identity.
        for p in range(1, 6):
            for k in range(2, 9):
                assert eq3_residual_poly(p, k).is_zero == eq4_check(p, k)


class TestChainCoefficientSum:
    def test_top_coefficient_is_one(self):
        for p in range(1, 11):
            assert chain_coefficient_sum(p, p) == 1

    def test_single_gap(self):
        assert chain_coefficient_sum(3, 1) == 3 == binomial(3, 1)

    def test_leading_term(self):
        for p in range(1, 11):
            assert chain_coefficient_sum(p, 0) == (-1) ** p

    def test_closed_form(self):
        for p in range(1, 11):
            for a in range(p + 1):
                assert chain_coefficient_sum(p, a) == (-1) ** (p - a) * binomial(p, a)

    def test_chain_population(self):
        for p in range(1, 11):
            assert len(enumerate_chains(p, 0)) == 2 ** (p - 1)

    def test_domain(self):
        with pytest.raises(ValueError):
            chain_coefficient_sum(0, 0)
        with pytest.raises(ValueError):
            chain_coefficient_sum(3, 4)


class TestSweeps:
    def test_prop1_exact_counts_and_passes(self):
        sweep = run_prop1_exact(3, 6)
        assert sweep.cases == 3 * sum(3 * k - 3 for k in range(2, 7))
        assert sweep.ok

    def test_prop1_float_passes(self):
        sweep = run_prop1_float(4, 30)
        assert sweep.ok and sweep.cases > 0

    def test_eq3_passes(self):
        sweep = run_eq3(4, 8)
        assert sweep.ok
        assert sweep.cases == 4 * sum(range(2, 9))

    def test_coefficient_sweep_passes(self):
        sweep = run_coefficient_check(8)
        assert sweep.ok
