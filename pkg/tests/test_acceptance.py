"""Acceptance suite: one test per advertised guarantee, each with a hard
wall-clock budget.  Every test prints a single pass line so the -s / -v
output doubles as a human-readable report."""

import time

import pytest

from ucayley import verify


BUDGETS = {
    1: 10.0,
    2: 60.0,
    3: 120.0,
    4: 30.0,
    5: 60.0,
    6: 30.0,
    7: 30.0,
    8: 60.0,
    9: 10.0,
    10: 600.0,
    11: 300.0,
    12: 30.0,
}


@pytest.fixture(scope="module")
def ctx():
    return verify._Ctx(seed=0)


def run_criterion(capsys, number, label, fn):
    start = time.monotonic()
    detail = fn()
    elapsed = time.monotonic() - start
    budget = BUDGETS[number]
    assert elapsed < budget, (
        "criterion %d took %.1fs, budget %.0fs" % (number, elapsed, budget))
    with capsys.disabled():
        print("criterion %2d PASS %6.2fs  %s: %s" % (number, elapsed, label, detail))


def test_criterion_01_alpha_formula(ctx, capsys):
    run_criterion(capsys, 1, "independence numbers of M_2(F_2), M_2(F_3)",
                  lambda: verify.check_alpha_formula(ctx))


def test_criterion_02_well_covered_small_n(ctx, capsys):
    run_criterion(capsys, 2, "full enumeration for n <= 2",
                  lambda: verify.check_well_covered_small_n(ctx))


def test_criterion_03_not_well_covered_n3(ctx, capsys):
    run_criterion(capsys, 3, "defective maximal set in M_3(F_2)",
                  lambda: verify.check_not_well_covered_n3(ctx))


def test_criterion_04_family_independent(ctx, capsys):
    run_criterion(capsys, 4, "family independence and cardinality",
                  lambda: verify.check_family_independent(ctx))


def test_criterion_05_row_mixing(ctx, capsys):
    run_criterion(capsys, 5, "row mixes are singular",
                  lambda: verify.check_row_mixing(ctx))


def test_criterion_06_radical_correspondence(ctx, capsys):
    def all_four():
        parts = [verify.check_radical_correspondence(ctx, text)
                 for text in ("Z(4)", "Z(8)", "Z(12)", "T(2,GF(2))")]
        return "; ".join(parts)
    run_criterion(capsys, 6, "radical quotient correspondence", all_four)


def test_criterion_07_avoidance_partner(ctx, capsys):
    run_criterion(capsys, 7, "avoidance partners",
                  lambda: verify.check_avoidance_partner(ctx, random_count=500))


def test_criterion_08_product_refutation(ctx, capsys):
    run_criterion(capsys, 8, "competing maximal sets in Z_2 x M_2(F_2)",
                  lambda: verify.check_product_refutation(ctx))


def test_criterion_09_conjunction_identity(ctx, capsys):
    run_criterion(capsys, 9, "product ring graph is the conjunction product",
                  lambda: verify.check_conjunction_identity(ctx))


def test_criterion_10_classification_vs_enumeration(ctx, capsys):
    run_criterion(capsys, 10, "theorem classification vs exhaustion",
                  lambda: verify.check_classification_vs_enumeration(ctx))


def test_criterion_11_cm_obstructions(ctx, capsys):
    run_criterion(capsys, 11, "skeleton connectivity, shellings, Gorenstein catalog",
                  lambda: verify.check_cm_obstructions(ctx))


def test_criterion_12_unit_count_formula(ctx, capsys):
    run_criterion(capsys, 12, "unit counts of matrix rings",
                  lambda: verify.check_unit_count_formula(ctx))
