"""Representations, resolving checks, and the exact dimension engine."""

import random

import pytest

from conftest import SWEEP_SPECS
from oracles import brute_force_dimension, resolving_by_pair_scan
from mobius_ladder import (automorphism_rotate, greedy_upper_bound,
                           is_resolving, metric_dimension, representation,
                           vertex_of_index)


def _v(ladder, *labels):
    return [ladder.vertex(i, q) for i, q in labels]


def test_representation_reads_the_matrix_rows(m74):
    _, ladder, matrix = m74
    rep = representation(matrix, ladder.vertex(2, 1), _v(ladder, (1, 1), (1, 4)))
    assert rep.coords == (1, 4)
    assert rep.vertex == ladder.vertex(2, 1)


def test_representation_of_a_landmark_starts_with_zero(m74):
    _, ladder, matrix = m74
    rep = representation(matrix, ladder.vertex(4, 2), _v(ladder, (4, 2)))
    assert rep.coords == (0,)


def test_representation_three_landmarks_m10_n2(m102):
    _, ladder, matrix = m102
    rep = representation(matrix, ladder.vertex(5, 1),
                         _v(ladder, (1, 1), (1, 2), (9, 1)))
    assert rep.coords == (4, 5, 4)


def test_representation_rejects_empty_and_duplicate_landmarks(m74):
    _, ladder, matrix = m74
    with pytest.raises(ValueError, match="non-empty"):
        representation(matrix, ladder.vertex(1, 1), [])
    with pytest.raises(ValueError, match="duplicates"):
        representation(matrix, ladder.vertex(1, 1),
                       _v(ladder, (1, 1), (1, 1)))


def test_candidate_corner_set_resolves_example_one(m74):
    _, ladder, matrix = m74
    check = is_resolving(matrix, _v(ladder, (1, 1), (1, 4), (6, 1)))
    assert check.resolving and check.witness is None
    assert resolving_by_pair_scan(matrix, _v(ladder, (1, 1), (1, 4), (6, 1)))


def test_two_corners_fail_with_the_known_witness(m74):
    _, ladder, matrix = m74
    check = is_resolving(matrix, _v(ladder, (1, 1), (1, 4)))
    assert not check
    assert check.witness.a == ladder.vertex(2, 1)
    assert check.witness.b == ladder.vertex(6, 4)
    assert check.witness.shared_coords == (1, 4)


def test_full_vertex_set_always_resolves(m102):
    _, _, matrix = m102
    assert is_resolving(matrix, list(range(matrix.side))).resolving


def test_resolving_is_order_independent(m74):
    _, ladder, matrix = m74
    base = _v(ladder, (1, 1), (1, 4), (6, 1))
    assert is_resolving(matrix, base).resolving
    assert is_resolving(matrix, base[::-1]).resolving
    rep_fwd = representation(matrix, ladder.vertex(3, 2), base)
    rep_rev = representation(matrix, ladder.vertex(3, 2), base[::-1])
    assert rep_fwd.coords == rep_rev.coords[::-1]


def test_greedy_result_resolves_example_one(m74):
    _, _, matrix = m74
    chosen = greedy_upper_bound(matrix)
    assert len(chosen) >= 3
    assert is_resolving(matrix, chosen).resolving


@pytest.mark.parametrize("m,n", SWEEP_SPECS)
def test_greedy_result_resolves_across_the_sweep(bundle, m, n):
    _, _, matrix = bundle(m, n)
    assert is_resolving(matrix, greedy_upper_bound(matrix)).resolving


def test_exact_dimension_example_one(m74):
    _, _, matrix = m74
    report = metric_dimension(matrix)
    assert report.status == "exact"
    assert report.dimension == 3
    assert report.tested_by_cardinality[1] == 24
    assert report.tested_by_cardinality[2] == 276
    assert [v.label() for v in report.basis] == ["v11", "v13", "v42"]
    assert is_resolving(matrix, report.basis).resolving


def test_exact_dimension_example_two(m102):
    _, _, matrix = m102
    report = metric_dimension(matrix)
    assert report.dimension == 4
    assert report.tested_by_cardinality[3] == 816
    assert [v.label() for v in report.basis] == ["v11", "v12", "v21", "v22"]


def test_no_two_subset_resolves_example_one_by_second_implementation(m74):
    # re-verifies the engine's k=2 exhaustion with the pair-scan oracle
    from itertools import combinations
    _, _, matrix = m74
    assert all(not resolving_by_pair_scan(matrix, subset)
               for subset in combinations(range(24), 2))


def test_witnesses_are_recorded_per_failing_cardinality(m74):
    _, ladder, matrix = m74
    report = metric_dimension(matrix)
    assert set(report.witnesses) == {1, 2}
    w2 = report.witnesses[2]
    assert w2.a == ladder.vertex(1, 3)
    assert w2.b == ladder.vertex(2, 2)
    assert w2.shared_coords == (2, 1)


def test_budget_exhaustion_is_reported_not_guessed(m74):
    _, _, matrix = m74
    report = metric_dimension(matrix, budget=2)
    assert report.status == "undecided"
    assert report.dimension is None and report.basis is None
    assert report.searched_up_to == 2
    assert report.subsets_tested == 300
    assert "undecided" in report.to_text()


def test_budget_below_one_is_rejected(m74):
    _, _, matrix = m74
    with pytest.raises(ValueError, match="budget"):
        metric_dimension(matrix, budget=0)


@pytest.mark.parametrize("m,n", [(m, n) for m, n in SWEEP_SPECS
                                 if (m - 1) * n <= 24])
def test_engine_matches_the_no_pruning_oracle(bundle, m, n):
    _, _, matrix = bundle(m, n)
    report = metric_dimension(matrix)
    dim, basis = brute_force_dimension(matrix)
    assert report.dimension == dim
    assert tuple(v.idx for v in report.basis) == basis


@pytest.mark.parametrize("m,n", SWEEP_SPECS)
def test_dimension_is_at_least_two_across_the_sweep(bundle, m, n):
    _, _, matrix = bundle(m, n)
    report = metric_dimension(matrix)
    assert report.dimension >= 2
    assert report.dimension < matrix.side


def test_supersets_of_a_basis_still_resolve(m74):
    _, _, matrix = m74
    report = metric_dimension(matrix)
    base = [v.idx for v in report.basis]
    rng = random.Random(74)
    others = [u for u in range(matrix.side) if u not in base]
    for _ in range(12):
        extra = rng.sample(others, rng.randint(1, 4))
        assert is_resolving(matrix, base + extra).resolving


@pytest.mark.parametrize("m,n", [(7, 4), (10, 2), (9, 3)])
def test_rotating_a_basis_keeps_it_resolving(bundle, m, n):
    spec, _, matrix = bundle(m, n)
    report = metric_dimension(matrix)
    moved = list(report.basis)
    for _ in range(2 * (m - 1)):
        moved = [automorphism_rotate(spec, v) for v in moved]
        assert is_resolving(matrix, moved).resolving


def test_kv_serialization_round_trips_the_key_facts(m74):
    _, _, matrix = m74
    lines = metric_dimension(matrix).to_kv_lines()
    kv = dict(line.split("=", 1) for line in lines)
    assert kv["dimension"] == "3"
    assert kv["basis"] == "v11,v13,v42"
    assert kv["subsets_tested"] == "333"
    assert kv["witness_k2"] == "v13 v22 (2,1)"


def test_witness_is_lexicographically_first(m102):
    # under {v11} alone the earliest colliding pair by dense index is
    # (v12, v21): both at distance 1
    _, ladder, matrix = m102
    check = is_resolving(matrix, [ladder.vertex(1, 1)])
    assert (check.witness.a, check.witness.b) == \
        (ladder.vertex(1, 2), ladder.vertex(2, 1))
