import pytest

from boxball import crystals as cr
from boxball import verify


def test_isomorphism_table_is_a_bijection():
    table = verify.isomorphism_table((2,), (1, 1), 3)
    assert len(table) == cr.tensor_size([(2,), (1, 1)], 3) == 18
    assert len(set(table.values())) == 18


def test_isomorphism_table_preserves_weight():
    table = verify.isomorphism_table((3,), (1,), 3)
    for t, img in table.items():
        assert cr.weight_of(t) == cr.weight_of(img)


@pytest.mark.parametrize(
    "shapes",
    [((2,), (1,)), ((1,), (2,)), ((1, 1), (1,)), ((1,), (1, 1)), ((3,), (1, 1)), ((2,), (3,))],
)
def test_closed_forms_match_oracle(shapes):
    rep = verify.check_swap_against_oracle(shapes[0], shapes[1], 3)
    assert rep.passed, rep.counterexample


def test_symmetric_group_exhaustive_fixtures():
    rep = verify.check_symmetric_group([(3,), (1,), (1, 1)], 3)
    assert rep.passed and rep.domain == 90
    rep = verify.check_symmetric_group([(2,), (3,), (1, 1)], 3)
    assert rep.passed and rep.domain == 180


def test_symmetric_group_random_mode_is_seeded():
    a = verify.check_symmetric_group([(2,), (2,), (2,)], 4, "random", seed=42, count=100)
    b = verify.check_symmetric_group([(2,), (2,), (2,)], 4, "random", seed=42, count=100)
    assert a.passed and b.passed
    assert a.domain == b.domain == 100


def test_far_commutation_on_longer_products():
    rep = verify.check_symmetric_group(
        [(2,), (1,), (1, 1), (1,)], 3, "random", seed=1, count=150
    )
    assert rep.passed, rep.counterexample


def test_highest_weight_chains():
    rep = verify.check_highest_weight_chains()
    assert rep.passed, rep.counterexample
    assert rep.domain == 36  # six fixtures, six swaps each


def test_composition_words_example():
    x, y = verify.composition_words(3, 3)
    assert x == [3, 2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4, 3, 2, 1]
    assert y == [6, 5, 4, 3, 2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4]


def test_carrier_composition_minimal_exhaustive():
    rep = verify.check_carrier_composition(2, 1, 1, 3)
    assert rep.passed and rep.domain == 6 * 3 * 3


def test_carrier_composition_random_cases():
    rep = verify.check_carrier_composition(2, 3, 3, 3, "random", seed=7, count=200)
    assert rep.passed, rep.counterexample
    rep = verify.check_carrier_composition(3, 2, 4, 4, "random", seed=11, count=100)
    assert rep.passed, rep.counterexample


def test_decomposition_fixtures_pass():
    for fixture in verify.standard_decomposition_fixtures():
        rep = verify.check_decomposition(fixture)
        assert rep.passed, f"{rep.relation}: {rep.counterexample}"


def test_decomposition_multiplicity_two_where_stated():
    fixture = verify.row_box_col_fixture(3, 5)
    assert ((4, 1, 1), 2) in fixture.expected
    fixture = verify.two_rows_col_fixture(3, 2, 5)
    assert ((5, 1, 1), 2) in fixture.expected
    assert ((4, 2, 1), 2) in fixture.expected


def test_decomposition_drops_shapes_too_tall_for_alphabet():
    fixture = verify.row_box_col_fixture(3, 3)
    assert all(len(s) <= 3 for s, _ in fixture.expected)
    assert ((3, 1, 1, 1), 1) not in fixture.expected


def test_decomposition_mismatch_is_reported():
    bad = verify.DecompositionFixture(((2,), (1,)), 3, (((3,), 1),))
    rep = verify.check_decomposition(bad)
    assert not rep.passed
    assert rep.counterexample and "2, 1" in rep.counterexample


def test_report_json_round_trip():
    rep = verify.check_symmetric_group([(2,), (1,)], 3)
    doc = rep.to_json_dict()
    assert doc["result"] == "pass"
    assert "counterexample" not in doc
    bad = verify.RelationReport("stub", 4, "boom", 0.5)
    doc = bad.to_json_dict()
    assert doc["result"] == "fail" and doc["counterexample"] == "boom"
    assert not bad.passed


def test_random_paths_are_reproducible():
    import random

    a = verify.random_basic_path(random.Random(3), 4)
    b = verify.random_basic_path(random.Random(3), 4)
    assert a == b
    ia = verify.random_inhom_path(random.Random(3), 4)
    ib = verify.random_inhom_path(random.Random(3), 4)
    assert ia == ib
