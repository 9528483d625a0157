"""Brute-force oracles: examples, budgets, verification reports."""

import random

import pytest

from cartcodes import BudgetExceededError, make_field, normalize_spec
from cartcodes.oracle import (
    OracleBudget,
    brute_min_distance,
    brute_rank_dimension,
    max_zero_search,
    verify_params,
)
from helpers import random_grid, span_words


def _full_code(p, e, cards, d):
    F = make_field(p, e)
    return normalize_spec(F, [tuple(range(c)) for c in cards], d)


def test_brute_min_distance_examples():
    code = _full_code(2, 1, (2, 2), 1)
    # oracle of the oracle: hand enumeration of the seven nonzero words
    words = span_words(make_field(2), code.generator_matrix().array.tolist())
    hand = min(sum(1 for x in w if x) for w in words if any(w))
    assert hand == 2
    assert brute_min_distance(code) == 2

    assert brute_min_distance(_full_code(3, 1, (3,), 1)) == 2
    assert brute_min_distance(_full_code(2, 1, (2, 2), 2)) == 1  # d >= regularity


def test_brute_min_distance_confirm_mode():
    code = _full_code(3, 1, (3, 3), 2)
    assert brute_min_distance(code, confirm_only=True) == brute_min_distance(code)


def test_brute_rank_examples():
    assert brute_rank_dimension(_full_code(2, 1, (2, 2), 1)) == 3
    assert brute_rank_dimension(_full_code(3, 1, (3, 3), 4)) == 9
    F181 = make_field(181)
    sets = [F181.subgroup_of_order(k).elements for k in (2, 5, 9)]
    assert brute_rank_dimension(normalize_spec(F181, sets, 2)) == 9


def test_max_zero_search_examples():
    assert max_zero_search(_full_code(2, 1, (2, 2), 1)) == 2
    # degree-1 polynomials on the full 3x3 grid vanish on at most one line
    assert max_zero_search(_full_code(3, 1, (3, 3), 1)) == 3
    assert max_zero_search(_full_code(2, 1, (2, 2, 2), 3)) == 7


def test_budget_exceeded_word_count():
    code = _full_code(3, 1, (3, 3), 2)  # dimension 6, 3^6 = 729 words
    with pytest.raises(BudgetExceededError) as exc:
        brute_min_distance(code, OracleBudget(max_words=100))
    assert exc.value.required == 729
    assert exc.value.limit == 100


def test_budget_exceeded_points():
    code = _full_code(3, 1, (3, 3), 1)
    with pytest.raises(BudgetExceededError):
        brute_rank_dimension(code, OracleBudget(max_points=4))


def test_verify_params_all_pass():
    report = verify_params(_full_code(3, 1, (3, 3), 2))
    assert report.ok
    names = {c.name for c in report.checks}
    assert names == {"rank_dimension", "min_distance", "max_zeros", "extremal_weight"}
    assert all(c.status == "pass" for c in report.checks)


def test_verify_params_skips_on_budget():
    report = verify_params(_full_code(3, 1, (3, 3), 2), OracleBudget(max_words=10))
    by_name = {c.name: c for c in report.checks}
    assert by_name["min_distance"].status == "skipped"
    assert by_name["max_zeros"].status == "skipped"
    assert by_name["rank_dimension"].status == "pass"
    assert report.ok  # skipped is not a failure, but it is not a pass either
    assert not all(c.status == "pass" for c in report.checks)


def test_verify_params_negative_control():
    report = verify_params(_full_code(2, 1, (2, 2), 1), corrupt=True)
    assert not report.ok
    by_name = {c.name: c for c in report.checks}
    assert by_name["rank_dimension"].status == "fail"
    assert "oracle 2 != formula 3" in by_name["rank_dimension"].detail


def test_verify_report_dict_shape():
    report = verify_params(_full_code(2, 1, (2, 2), 1))
    d = report.to_dict()
    assert d["q"] == 2 and d["cards"] == [2, 2] and d["ok"] is True
    assert all(
        set(c) == {"name", "d", "formula", "oracle", "status", "elapsed", "detail"}
        for c in d["checks"]
    )


def test_oracles_match_formulas_random_grids():
    rng = random.Random(99)
    for q, e in [(2, 1), (3, 1), (5, 1), (2, 2)]:
        F = make_field(q, e)
        for _ in range(3):
            n = rng.randint(1, 2)
            cards = sorted(rng.randint(2, min(F.q, 4)) for _ in range(n))
            grid = random_grid(F, cards, rng)
            for d in range(0, sum(c - 1 for c in cards) + 1):
                code = normalize_spec(F, grid.sets, d)
                if F.q**code.dimension > 1 << 16:
                    continue
                assert brute_min_distance(code) == code.min_distance
                assert brute_rank_dimension(code) == code.dimension
                assert max_zero_search(code) == code.length - code.min_distance


def test_methods_agree():
    code = _full_code(3, 1, (2, 3), 2)
    full = brute_min_distance(code, method="numpy")
    assert brute_min_distance(code, method="naive") == full
    assert brute_min_distance(code, method="auto") == full
    assert brute_rank_dimension(code, method="numpy") == brute_rank_dimension(code, method="auto")
