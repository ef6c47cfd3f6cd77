import numpy as np
import pytest

from foi.errors import AggregationError
from foi.manifest import IndicatorManifest, IndicatorSpec
from foi.pillar import compute_pillar_scores, rank_countries
from foi.reference import load_fixture

from conftest import make_manifest, make_panel


def test_constant_components_give_constant_index():
    manifest = make_manifest((3, 2, 2))
    grid = np.full((2, 7), 2.0)
    grid[0, :3] = 7.0  # country 0's F components
    scores = compute_pillar_scores(make_panel(manifest, grid), manifest)
    assert scores.index["F"][0] == 7.0


def test_available_mean_skips_missing():
    manifest = make_manifest((1, 5, 1))
    grid = np.full((1, 7), 3.0)
    grid[0, 1:6] = [1.0, 7.0, np.nan, np.nan, np.nan]
    scores = compute_pillar_scores(make_panel(manifest, grid), manifest)
    assert scores.index["O"][0] == pytest.approx(4.0)


def test_strict_policy_flags_absent():
    manifest = make_manifest((1, 2, 1))
    grid = np.array([[3.0, 1.0, np.nan, 5.0]])
    scores = compute_pillar_scores(make_panel(manifest, grid), manifest, missing_policy="strict")
    assert np.isnan(scores.index["O"][0])
    assert scores.index["F"][0] == 3.0


def test_available_mean_with_empty_pillar_is_error():
    manifest = make_manifest((1, 2, 1))
    grid = np.array([[3.0, np.nan, np.nan, 5.0]])
    with pytest.raises(AggregationError, match="O"):
        compute_pillar_scores(make_panel(manifest, grid), manifest)


def test_indices_match_brute_force_means():
    manifest = make_manifest((9, 5, 10))
    rng = np.random.default_rng(5)
    grid = rng.uniform(1.0, 7.0, size=(34, 24))
    grid[rng.random((34, 24)) < 0.1] = np.nan
    panel = make_panel(manifest, grid)
    scores = compute_pillar_scores(panel, manifest)
    for i in range(34):
        for pillar, lo, hi in (("F", 0, 9), ("O", 9, 14), ("I", 14, 24)):
            vals = [v for v in grid[i, lo:hi] if not np.isnan(v)]
            assert scores.index[pillar][i] == pytest.approx(sum(vals) / len(vals), abs=1e-12)


def test_index_within_component_range():
    manifest = make_manifest()
    rng = np.random.default_rng(6)
    grid = rng.uniform(1.0, 7.0, size=(10, 6))
    scores = compute_pillar_scores(make_panel(manifest, grid), manifest)
    for pillar, lo, hi in (("F", 0, 2), ("O", 2, 4), ("I", 4, 6)):
        assert np.all(scores.index[pillar] >= grid[:, lo:hi].min(axis=1) - 1e-12)
        assert np.all(scores.index[pillar] <= grid[:, lo:hi].max(axis=1) + 1e-12)


def test_spec_order_within_pillar_is_irrelevant():
    manifest = make_manifest((3, 1, 1))
    swapped = IndicatorManifest(
        (manifest.specs[2], manifest.specs[0], manifest.specs[1]) + manifest.specs[3:]
    )
    rng = np.random.default_rng(8)
    grid = rng.uniform(1.0, 7.0, size=(5, 5))
    panel = make_panel(manifest, grid)
    a = compute_pillar_scores(panel, manifest)
    b = compute_pillar_scores(panel, swapped)
    assert np.allclose(a.index["F"], b.index["F"])


def test_component_grouping_averages_subindicators_first():
    # two indicators share one component; the pillar mean must count them once
    specs = (
        IndicatorSpec("f_a", "A", "F", "higher_is_better", "t"),
        IndicatorSpec("f_b1", "B1", "F", "higher_is_better", "t", component="f_b"),
        IndicatorSpec("f_b2", "B2", "F", "higher_is_better", "t", component="f_b"),
        IndicatorSpec("o_a", "OA", "O", "higher_is_better", "t"),
        IndicatorSpec("i_a", "IA", "I", "higher_is_better", "t"),
    )
    manifest = IndicatorManifest(specs)
    grid = np.array([[2.0, 4.0, 6.0, 1.0, 1.0]])
    scores = compute_pillar_scores(make_panel(manifest, grid), manifest)
    # (2 + mean(4, 6)) / 2, not mean(2, 4, 6)
    assert scores.index["F"][0] == pytest.approx(3.5)


def test_rank_one_is_highest():
    manifest = make_manifest((1, 1, 1))
    grid = np.array([[2.0, 5.0, 3.0], [6.0, 1.0, 3.0], [4.0, 3.0, 3.0]])
    scores = rank_countries(compute_pillar_scores(make_panel(manifest, grid), manifest))
    assert scores.rank["F"].tolist() == [3, 1, 2]


def test_ties_break_by_country_code():
    manifest = make_manifest((1, 1, 1))
    grid = np.array([[5.0, 1.0, 1.0], [5.0, 1.0, 1.0]])
    scores = rank_countries(
        compute_pillar_scores(make_panel(manifest, grid, countries=["BBB", "AAA"]), manifest)
    )
    # AAA gets the smaller rank on equal indices
    assert scores.rank["F"].tolist() == [2, 1]


def test_ranks_are_permutations():
    manifest = make_manifest()
    rng = np.random.default_rng(9)
    grid = rng.uniform(1.0, 7.0, size=(34, 6))
    scores = rank_countries(compute_pillar_scores(make_panel(manifest, grid), manifest))
    for pillar in "FOI":
        assert sorted(scores.rank[pillar].tolist()) == list(range(1, 35))


def test_rank_invariant_under_monotone_transform():
    manifest = make_manifest((1, 1, 1))
    rng = np.random.default_rng(10)
    vals = rng.uniform(1.0, 7.0, size=(12, 3))
    base = rank_countries(compute_pillar_scores(make_panel(manifest, vals), manifest))
    squeezed = rank_countries(
        compute_pillar_scores(make_panel(manifest, 1.0 + (vals - 1.0) / 2.0), manifest)
    )
    for pillar in "FOI":
        assert base.rank[pillar].tolist() == squeezed.rank[pillar].tolist()


def test_published_rank_extremes():
    fx = load_fixture()
    assert fx.index_rank(2020, "LUX", "O") == 1
    assert fx.index_rank(2020, "USA", "O") == 2
    assert fx.index_rank(2020, "CHE", "I") == 1
