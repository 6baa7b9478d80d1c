from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXAMPLE_1
from rieszmean.image import Window
from rieszmean.kernels import (
    EmptyWindowError,
    Kernel,
    cell_order,
    kernel_weights,
    modified_pixel_weight,
    modified_riesz_mean,
    pixel_similarity,
    pixel_weight,
    riesz_mean,
    weight_modified_riesz_mean,
    window_median,
)

KERNEL_FUNCS = [pixel_similarity, pixel_weight, modified_pixel_weight]
MEANS = {
    riesz_mean: Kernel.SIMILARITY,
    modified_riesz_mean: Kernel.WEIGHT,
    weight_modified_riesz_mean: Kernel.MODIFIED_WEIGHT,
}


def exact_weight(kernel, s, t, k):
    ds, dt = k + 1 - s, k + 1 - t
    if kernel is Kernel.SIMILARITY:
        return Fraction(1, (1 + abs(ds) + abs(dt)) ** 2)
    if kernel is Kernel.WEIGHT:
        return Fraction(1, (1 + ds * ds + dt * dt) ** 2)
    scale = 4 ** (k + 1)
    return Fraction(1, (1 + scale * ds * ds + scale * dt * dt) ** 2)


def exact_mean(entries, regular, kernel):
    """Definition-level oracle in exact rational arithmetic."""
    k = (entries.shape[0] - 1) // 2
    num = Fraction(0)
    den = Fraction(0)
    for s in range(1, 2 * k + 2):
        for t in range(1, 2 * k + 2):
            if regular[s - 1, t - 1]:
                w = exact_weight(kernel, s, t, k)
                num += w * Fraction(float(entries[s - 1, t - 1]))
                den += w
    return num / den


def make_window(entries, regular=None):
    entries = np.asarray(entries, dtype=np.float64)
    if regular is None:
        regular = (entries != 0) & (entries != 255)
    k = (entries.shape[0] - 1) // 2
    return Window(k=k, entries=entries, regular=np.asarray(regular, bool))


class TestWeights:
    @pytest.mark.parametrize(
        "fn,s,t,k,expected",
        [
            (pixel_similarity, 2, 2, 1, 1.0),
            (pixel_similarity, 1, 2, 1, 0.25),
            (pixel_similarity, 1, 1, 1, 1 / 9),
            (pixel_weight, 2, 2, 1, 1.0),
            (pixel_weight, 1, 1, 1, 1 / 9),
            (pixel_weight, 1, 3, 2, 0.04),
            (modified_pixel_weight, 2, 2, 1, 1.0),
            (modified_pixel_weight, 2, 1, 1, 1 / 289),
            (modified_pixel_weight, 1, 1, 1, 1 / 1089),
        ],
    )
    def test_spot_values(self, fn, s, t, k, expected):
        assert fn(s, t, k) == pytest.approx(expected, abs=1e-12)

    def test_ps_pw_diverge_at_k2(self):
        assert pixel_similarity(1, 3, 2) == pytest.approx(1 / 9, abs=1e-15)
        assert pixel_weight(1, 3, 2) == pytest.approx(1 / 25, abs=1e-15)

    @pytest.mark.parametrize("kernel", list(Kernel))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_table_against_exact(self, kernel, k):
        table = kernel_weights(kernel, k)
        for s in range(1, 2 * k + 2):
            for t in range(1, 2 * k + 2):
                assert table[s - 1, t - 1] == pytest.approx(float(exact_weight(kernel, s, t, k)), rel=1e-15)

    @pytest.mark.parametrize("kernel", list(Kernel))
    @pytest.mark.parametrize("k", range(1, 7))
    def test_shape_properties(self, kernel, k):
        w = kernel_weights(kernel, k)
        assert w.shape == (2 * k + 1, 2 * k + 1)
        assert w[k, k] == 1.0
        assert (w > 0).all() and (w <= 1).all()
        off = np.ones_like(w, bool)
        off[k, k] = False
        assert (w[off] < 1).all()
        np.testing.assert_array_equal(w, w[::-1, :])
        np.testing.assert_array_equal(w, w[:, ::-1])
        np.testing.assert_array_equal(w, w.T)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_modified_decays_faster(self, k):
        plain = kernel_weights(Kernel.WEIGHT, k)
        mod = kernel_weights(Kernel.MODIFIED_WEIGHT, k)
        off = np.ones_like(plain, bool)
        off[k, k] = False
        assert (mod[off] < plain[off]).all()

    def test_table_is_read_only(self):
        with pytest.raises(ValueError):
            kernel_weights(Kernel.WEIGHT, 1)[0, 0] = 3.0


class TestCellOrder:
    @pytest.mark.parametrize("k", range(1, 7))
    def test_permutation_and_prefix(self, k):
        rows, cols = cell_order(k)
        cells = set(zip(rows.tolist(), cols.tolist()))
        assert len(cells) == (2 * k + 1) ** 2 == rows.size
        assert (rows[0], cols[0]) == (k, k)
        if k > 1:
            inner_r, inner_c = cell_order(k - 1)
            np.testing.assert_array_equal(rows[: inner_r.size], inner_r + 1)
            np.testing.assert_array_equal(cols[: inner_c.size], inner_c + 1)


class TestMeans:
    EDGE = np.array([[0, 100, 0], [50, 0, 150], [0, 200, 0]])

    @pytest.mark.parametrize("fn", list(MEANS))
    def test_equidistant_edge_neighbours(self, fn):
        assert fn(make_window(self.EDGE)) == pytest.approx(125.0, abs=1e-12)

    @pytest.mark.parametrize("fn", [riesz_mean, modified_riesz_mean])
    def test_corner_and_edge(self, fn):
        w = make_window([[40, 100, 0], [0, 0, 0], [0, 0, 0]])
        assert fn(w) == pytest.approx(float(Fraction(1060, 13)), abs=1e-9)

    def test_weight_modified_corner_and_edge(self):
        w = make_window([[80, 120, 0], [0, 0, 0], [0, 0, 0]])
        expected = Fraction(153800, 1378)
        assert expected == exact_mean(w.entries, w.regular, Kernel.MODIFIED_WEIGHT)
        assert weight_modified_riesz_mean(w) == pytest.approx(float(expected), abs=1e-9)

    @pytest.mark.parametrize("fn", list(MEANS))
    @pytest.mark.parametrize("c", [1, 77, 254])
    def test_constant(self, fn, c):
        assert fn(make_window(np.full((5, 5), c))) == pytest.approx(c, abs=1e-12)

    @pytest.mark.parametrize("fn", list(MEANS))
    def test_empty_window(self, fn):
        with pytest.raises(EmptyWindowError):
            fn(make_window([[0, 255, 0], [0, 255, 0], [255, 255, 0]]))

    @settings(max_examples=200)
    @given(st.integers(1, 3), st.data())
    def test_translation_equivariance(self, k, data):
        n = 2 * k + 1
        vals = np.array(data.draw(st.lists(st.integers(1, 200), min_size=n * n, max_size=n * n)), float).reshape(n, n)
        regular = np.array(data.draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))).reshape(n, n)
        regular[data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))] = True
        shift = data.draw(st.integers(0, 54))
        for fn in MEANS:
            a = fn(make_window(vals, regular))
            b = fn(make_window(vals + shift, regular))
            assert b == pytest.approx(a + shift, abs=1e-9)


class TestMedian:
    def test_example_1(self):
        assert window_median(make_window(EXAMPLE_1)) == 76.0

    def test_all_white(self):
        assert window_median(make_window(np.full((3, 3), 255))) == 255.0

    @given(st.integers(1, 4), st.data())
    def test_is_an_entry_and_a_median(self, k, data):
        n = 2 * k + 1
        vals = data.draw(st.lists(st.sampled_from([0.0, 255.0, 3.0, 100.5, 254.0]), min_size=n * n, max_size=n * n))
        med = window_median(make_window(np.reshape(vals, (n, n))))
        assert med in vals
        assert sum(v < med for v in vals) <= n * n // 2
        assert sum(v > med for v in vals) <= n * n // 2
