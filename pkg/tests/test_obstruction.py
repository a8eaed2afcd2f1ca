import pytest

from divmono.arith import gl2_order, irred_count, primes_up_to
from divmono.curves import WeierstrassCurve, daniels_t, semistable_s, uv
from divmono.errors import InputError
from divmono.frobenius import FrobeniusDatum
from divmono.obstruction import (
    Classification,
    CurvePrimeStatus,
    ImageAssumption,
    corollary_threshold,
    essential_divisor_scan,
    full_table,
    scan,
    supersingular_check,
)
from divmono.obstruction import test as verdict  # "test" confuses pytest collection

FULL = ImageAssumption.FULL_GL2
INDEX2 = ImageAssumption.INDEX2_SUBGROUP


class TestVerdicts:
    def test_worked_example(self):
        v = verdict(FrobeniusDatum.create(2, 1, 1), 11, FULL)
        assert v.residue_degree == 10
        assert v.num_primes == 1320
        assert v.irred_supply == 99
        assert v.classification is Classification.OBSTRUCTION

    def test_red_entry(self):
        d = FrobeniusDatum.create(2, 0, 1)
        assert verdict(d, 5, FULL).classification is Classification.OBSTRUCTION_ONLY_FULL_IMAGE
        assert verdict(d, 5, INDEX2).classification is Classification.NO_OBSTRUCTION

    def test_absence(self):
        v = verdict(FrobeniusDatum.create(2, 1, 1), 7, FULL)
        assert v.classification is Classification.NO_OBSTRUCTION

    def test_rejects_shared_factor(self):
        with pytest.raises(InputError):
            verdict(FrobeniusDatum.create(3, 0, 1), 6, FULL)

    def test_residue_degree_divides_both_degrees(self):
        for n in range(3, 40, 2):
            v_full = verdict(FrobeniusDatum.create(2, 1, 1), n, FULL)
            v_half = verdict(FrobeniusDatum.create(2, 1, 1), n, INDEX2)
            assert gl2_order(n) % v_full.residue_degree == 0
            assert v_full.num_primes == 2 * v_half.num_primes

    def test_index2_obstruction_implies_full(self):
        for p in (2, 3, 5):
            for a in (-1, 0, 1):
                d = FrobeniusDatum.create(p, a, 1)
                for n in range(2, 100):
                    if n % p == 0:
                        continue
                    try:
                        v_half = verdict(d, n, INDEX2)
                    except InputError:
                        # no index-2 subgroup contains sigma at this n
                        continue
                    if v_half.classification is Classification.OBSTRUCTION:
                        assert verdict(d, n, FULL).classification is Classification.OBSTRUCTION


class TestScan:
    def test_row_a2_1(self):
        report = scan(FrobeniusDatum.create(2, 1, 1), 999)
        assert report.entries() == ((11, Classification.OBSTRUCTION),)

    def test_row_a2_minus_1(self):
        report = scan(FrobeniusDatum.create(2, -1, 1), 999)
        assert [v.n for v in report.obstructed] == [11, 23]

    def test_empty_row(self):
        assert scan(FrobeniusDatum.create(11, 3, 1), 999).obstructed == ()

    def test_only_coprime_increasing(self):
        report = scan(FrobeniusDatum.create(3, 0, 1), 400)
        ns = [v.n for v in report.obstructed]
        assert ns == sorted(ns)
        assert all(n % 3 != 0 and n >= 2 for n in ns)


class TestFullTable:
    def test_row_count_and_order_p2(self):
        rows = full_table(2, 50)
        assert [(r.datum.a_p, r.datum.b_p) for r in rows] == [
            (0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1),
        ]

    def test_sign_symmetric_rows_p2(self):
        rows = {(r.datum.a_p, r.datum.b_p): r.entries() for r in full_table(2, 300)}
        assert rows[(2, 1)] == rows[(-2, 1)]

    def test_sign_asymmetric_rows_p11(self):
        rows = {(r.datum.a_p, r.datum.b_p): r.entries() for r in full_table(11, 30)}
        assert rows[(1, 1)] != rows[(-1, 1)]  # 10 obstructs only for a = -1


class TestSupersingular:
    @pytest.mark.parametrize("p", [p for p in primes_up_to(97) if p > 3])
    def test_orders_are_two(self, p):
        check = supersingular_check(p)
        expected_count = 1 if p % 4 == 1 else 2
        assert check.orders == (2,) * expected_count
        assert check.obstructed

    def test_counts_at_five(self):
        check = supersingular_check(5)
        assert check.num_primes_full == gl2_order(6) // 2
        assert check.irred_supply == 10

    def test_rejects_small_p(self):
        with pytest.raises(InputError):
            supersingular_check(3)


class TestCorollary:
    def test_index_one(self):
        result = corollary_threshold(1)
        assert result.prime == 5
        assert result.exact_lhs == 72
        assert result.irred_supply == 10

    def test_index_two(self):
        result = corollary_threshold(2)
        assert result.prime == 5
        assert result.exact_lhs == 36

    def test_large_index_by_oracle(self):
        index = 10**6
        result = corollary_threshold(index)
        # brute-force the same criterion independently
        p = 5
        while not gl2_order(p + 1) > 4 * index * irred_count(2, p):
            p += 2
            while not all(p % q for q in range(3, int(p**0.5) + 1, 2)):
                p += 2
        assert result.prime == p

    def test_rejects_zero_index(self):
        with pytest.raises(InputError):
            corollary_threshold(0)


class TestEssentialDivisorScan:
    def test_daniels_at_two(self):
        reports = essential_divisor_scan(daniels_t(3), 11, 2)
        assert len(reports) == 1
        r = reports[0]
        assert (r.p, r.a_p, r.status) == (2, -1, CurvePrimeStatus.CONFIRMED)

    def test_semistable_thirteen(self):
        (r,) = essential_divisor_scan(semistable_s(1), 13, 2)
        assert (r.p, r.a_p, r.status) == (2, 2, CurvePrimeStatus.CONFIRMED)

    def test_uv_eleven(self):
        (r,) = essential_divisor_scan(uv(1, 2), 11, 2)
        assert (r.p, r.a_p, r.status) == (2, 0, CurvePrimeStatus.CONFIRMED)

    def test_skips_divisors_of_n(self):
        reports = essential_divisor_scan(daniels_t(1), 6, 3)
        assert [(r.p, r.status) for r in reports] == [
            (2, CurvePrimeStatus.SKIPPED_DIVIDES_N),
            (3, CurvePrimeStatus.SKIPPED_DIVIDES_N),
        ]

    def test_skips_bad_reduction(self):
        # disc(y^2 = x^3 + 1) = -432 = -2^4 * 27
        reports = essential_divisor_scan(WeierstrassCurve(0, 0, 0, 0, 1), 11, 3)
        assert [(r.p, r.status) for r in reports] == [
            (2, CurvePrimeStatus.SKIPPED_BAD_REDUCTION),
            (3, CurvePrimeStatus.SKIPPED_BAD_REDUCTION),
        ]

    def test_conditional_when_b_values_disagree(self):
        # p = 3, a_3 = 0 admits b in {1, 2}; at n = 2 only b = 2 obstructs
        # (red), so a supersingular-at-3 curve gets a CONDITIONAL verdict
        curve = WeierstrassCurve(0, 0, 0, 1, 0)  # y^2 = x^3 + x, a_3 = 0
        skipped, r = essential_divisor_scan(curve, 2, 3)
        assert skipped.status is CurvePrimeStatus.SKIPPED_DIVIDES_N
        assert r.p == 3 and r.a_p == 0
        assert r.status is CurvePrimeStatus.CONDITIONAL
