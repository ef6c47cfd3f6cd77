import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from foi.errors import EmptyColumnError
from foi.rescale import min_max_rescale, rescale_panel

from conftest import make_manifest, make_panel

finite = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False, allow_infinity=False)
moderate = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def test_endpoints_higher_is_better():
    assert min_max_rescale([10, 40, 70], "higher_is_better").tolist() == [1.0, 4.0, 7.0]


def test_direction_reversal():
    assert min_max_rescale([10, 40, 70], "lower_is_better").tolist() == [7.0, 4.0, 1.0]


def test_degenerate_column_maps_to_midpoint():
    assert min_max_rescale([5, 5, 5], "higher_is_better").tolist() == [4.0, 4.0, 4.0]


def test_missing_cells_stay_missing():
    out = min_max_rescale([1.0, np.nan, 3.0], "higher_is_better")
    assert np.isnan(out[1])
    assert out[0] == 1.0 and out[2] == 7.0


def test_all_missing_is_error():
    with pytest.raises(EmptyColumnError):
        min_max_rescale([np.nan, np.nan], "higher_is_better")


@given(st.lists(finite, min_size=2, max_size=40))
@settings(max_examples=200)
def test_bounds_and_endpoint_attainment(values):
    out = min_max_rescale(values, "higher_is_better")
    assert np.all(out >= 1.0 - 1e-9) and np.all(out <= 7.0 + 1e-9)
    if len(set(values)) >= 2:
        assert out.min() == pytest.approx(1.0)
        assert out.max() == pytest.approx(7.0)


@given(st.lists(finite, min_size=2, max_size=40, unique=True))
@settings(max_examples=200)
def test_strict_monotonicity(values):
    # distinct values whose gaps survive the linear map in float arithmetic
    span = max(values) - min(values)
    ordered = sorted(values)
    assume(all(b - a > span * 1e-9 for a, b in zip(ordered, ordered[1:])))
    out = min_max_rescale(values, "higher_is_better")
    order = np.argsort(values)
    assert np.all(np.diff(out[order]) > 0)


@given(
    st.lists(moderate, min_size=2, max_size=20),
    st.floats(min_value=0.1, max_value=10.0),
    st.floats(min_value=-1e3, max_value=1e3),
)
@settings(max_examples=200)
def test_positive_affine_invariance(values, a, b):
    # keep the spread large enough that the shift cannot swamp it
    assume(max(values) - min(values) > 1e-2)
    base = min_max_rescale(values, "higher_is_better")
    shifted = min_max_rescale([a * v + b for v in values], "higher_is_better")
    assert np.allclose(base, shifted, atol=1e-6)


def test_panel_columns_scale_invariant():
    manifest = make_manifest()
    rng = np.random.default_rng(1)
    grid = rng.normal(size=(8, 6))
    scaled = grid.copy()
    scaled[:, 0] *= 10.0
    a = rescale_panel(make_panel(manifest, grid), manifest)
    b = rescale_panel(make_panel(manifest, scaled), manifest)
    assert np.allclose(a.values, b.values)


def test_two_country_panel_spans_range():
    manifest = make_manifest()
    grid = np.array([[1.0, 2, 3, 4, 5, 6], [2.0, 1, 4, 3, 6, 5]])
    out = rescale_panel(make_panel(manifest, grid), manifest)
    assert sorted(out.values[:, 0]) == [1.0, 7.0]
    assert {v for col in out.values.T for v in col} == {1.0, 7.0}


def test_random_panel_column_extremes():
    manifest = make_manifest((9, 5, 10))
    rng = np.random.default_rng(42)
    grid = rng.normal(size=(34, 24)) * rng.uniform(1, 100, size=24)
    out = rescale_panel(make_panel(manifest, grid), manifest)
    # brute-force per-column check
    assert np.allclose(out.values.min(axis=0), 1.0)
    assert np.allclose(out.values.max(axis=0), 7.0)


def test_permutation_of_countries_moves_values_with_them():
    manifest = make_manifest()
    rng = np.random.default_rng(3)
    grid = rng.normal(size=(6, 6))
    base = rescale_panel(make_panel(manifest, grid), manifest)
    perm = rng.permutation(6)
    permuted = rescale_panel(
        make_panel(manifest, grid[perm], countries=[f"C{i:02d}" for i in perm]), manifest
    )
    assert np.allclose(permuted.values, base.values[perm])


def test_empty_column_error_names_indicator():
    manifest = make_manifest()
    grid = np.ones((3, 6))
    grid[:, 2] = np.nan
    with pytest.raises(EmptyColumnError, match="o0"):
        rescale_panel(make_panel(manifest, grid), manifest)
