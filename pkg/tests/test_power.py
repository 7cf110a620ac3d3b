import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperq import (
    PowerParams,
    build_hypergraph,
    kernel_dimension_witnesses,
    lift_eigenvector,
    power,
    predict_power_spectrum,
    q_spectrum,
    verify_power_spectrum,
)
from hyperq.errors import BadParams, NonPositiveEigenvalue
from hyperq.power import power_spectrum_comparison, predicted_trace

from conftest import hypergraphs, single_edge


def predict(h, s, r):
    return predict_power_spectrum(q_spectrum(h), h.k, h.n, h.m, PowerParams(s, r))


class TestConstruction:
    def test_p4_figure(self):
        p4 = build_hypergraph(2, ["12", "23", "34"])
        hp, vmap = power(p4, PowerParams(2, 5))
        assert (hp.k, hp.n, hp.m) == (5, 11, 3)
        assert all(len(b) == 2 for b in vmap.vertex_sets)
        assert all(len(p) == 1 for p in vmap.edge_sets)
        assert hp.vertices[:2] == ("1", "1#2")
        assert "1-2@1" in hp.vertices

    def test_identity(self, fig1):
        hp, _ = power(fig1, PowerParams(1, 3))
        assert hp == fig1

    def test_single_edge_becomes_six_edge(self):
        hp, _ = power(single_edge(2), PowerParams(2, 6))
        assert (hp.k, hp.n, hp.m) == (6, 6, 1)

    @pytest.mark.parametrize("s, r", [(0, 3), (2, 3), (1, 1)])
    def test_bad_params(self, p3, s, r):
        with pytest.raises(BadParams):
            power(p3, PowerParams(s, r))


class TestPrediction:
    def test_p3(self, p3):
        np.testing.assert_allclose(predict(p3, 1, 3).eigenvalues, [4, 2, 0, 0, 0], atol=1e-8)

    def test_c4(self, c4):
        spec = predict(c4, 1, 3)
        np.testing.assert_allclose(spec.eigenvalues, [5, 3, 3, 1, 0, 0, 0, 0], atol=1e-8)
        assert spec.groups[-1] == (0.0, 4)

    def test_c4_square(self, c4):
        np.testing.assert_allclose(predict(c4, 2, 6).eigenvalues, [10, 6, 6, 2] + [0] * 12, atol=1e-8)

    def test_p3_square(self, p3):
        np.testing.assert_allclose(predict(p3, 2, 4).eigenvalues, [6, 2, 0, 0, 0, 0], atol=1e-8)

    def test_single_edge(self):
        np.testing.assert_allclose(predict(single_edge(2), 2, 6).eigenvalues, [6, 0, 0, 0, 0, 0], atol=1e-8)

    def test_base_unchanged_when_trivial(self, fig1):
        np.testing.assert_allclose(predict(fig1, 1, 3).eigenvalues, q_spectrum(fig1).eigenvalues, atol=1e-10)

    def test_wrong_n(self, p3):
        with pytest.raises(BadParams):
            predict_power_spectrum(q_spectrum(p3), 2, 4, 2, PowerParams(1, 3))

    @pytest.mark.parametrize("s, r", [(1, 3), (1, 4), (2, 4), (2, 5)])
    def test_observed_matches(self, p3, c4, fig1, s, r):
        for h in (p3, c4):
            assert verify_power_spectrum(h, PowerParams(s, r))
        assert verify_power_spectrum(fig1, PowerParams(s, r + s))

    def test_trace_exact(self, c4):
        params = PowerParams(1, 3)
        assert predicted_trace(2, 4, 3, params, 8) == 12
        assert power_spectrum_comparison(c4, params)["trace_exact"] == 12

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(ks=(2, 3), n_max=6), st.integers(1, 2), st.integers(0, 2))
    def test_property(self, h, s, extra):
        params = PowerParams(s, h.k * s + extra)
        cmp = power_spectrum_comparison(h, params)
        assert cmp["matches"] and cmp["trace_ok"]
        assert cmp["zero_predicted"] == cmp["zero_observed"]

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(ks=(2, 3), n_max=6), st.integers(1, 3), st.integers(0, 3))
    def test_composition(self, h, s, extra):
        # (H^{ks}_s)^r_1 and H^r_s have the same predicted spectrum
        r = h.k * s + extra
        once = predict(h, s, r)
        mid = predict(h, s, h.k * s)
        twice = predict_power_spectrum(mid, h.k * s, h.n * s, h.m, PowerParams(1, r))
        np.testing.assert_allclose(once.eigenvalues, twice.eigenvalues, atol=1e-9 * max(1, r))


class TestLift:
    def test_p3(self, p3):
        spec = q_spectrum(p3)
        lam, x = lift_eigenvector(p3, PowerParams(1, 3), (spec.eigenvalues[0], spec.eigenvectors[:, 0]))
        assert lam == pytest.approx(4)
        y = spec.eigenvectors[:, 0]
        ratio = x[:3] / y
        assert np.allclose(ratio, ratio[0])
        assert x[3] == pytest.approx(ratio[0] * (y[0] + y[1]) / 3)

    def test_identity(self, k4):
        spec = q_spectrum(k4)
        lam, x = lift_eigenvector(k4, PowerParams(1, 3), (spec.eigenvalues[0], spec.eigenvectors[:, 0]))
        assert lam == pytest.approx(9)
        assert np.allclose(x, spec.eigenvectors[:, 0])

    def test_single_edge_uniform(self):
        h = single_edge(2)
        lam, x = lift_eigenvector(h, PowerParams(2, 6), (2.0, np.array([1.0, 1.0]) / np.sqrt(2)))
        assert lam == pytest.approx(6)
        np.testing.assert_allclose(x, 1 / np.sqrt(6))

    def test_zero_rejected(self, p3):
        with pytest.raises(NonPositiveEigenvalue):
            lift_eigenvector(p3, PowerParams(1, 3), (0.0, np.array([1.0, -1.0, 1.0])))

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(ks=(2, 3), n_max=6), st.integers(1, 2), st.integers(0, 2))
    def test_property(self, h, s, extra):
        spec = q_spectrum(h)
        for j in range(spec.rank()):
            lift_eigenvector(h, PowerParams(s, h.k * s + extra), (spec.eigenvalues[j], spec.eigenvectors[:, j]))


class TestWitnesses:
    def test_c4_padding(self, c4):
        out = kernel_dimension_witnesses(c4, PowerParams(1, 3))
        fams = {f.name: f for f in out["families"]}
        assert fams["padding_differences"].count == 0
        assert fams["vertex_balances"].count == 4
        assert fams["line_kernel_padding"].count == 1
        assert out["zero_rank"] == 4

    def test_p3_equal(self, p3):
        out = kernel_dimension_witnesses(p3, PowerParams(2, 4))
        fams = {f.name: f for f in out["families"]}
        assert fams["copy_differences"].count == 3
        assert fams["lifted_base_kernel"].count == 1
        assert out["zero_rank"] == 4

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(ks=(2, 3), n_max=6), st.integers(1, 2), st.integers(0, 2))
    def test_property(self, h, s, extra):
        params = PowerParams(s, h.k * s + extra)
        out = kernel_dimension_witnesses(h, params)
        predicted = predict(h, s, params.r)
        tol = predicted.tolerances.group
        assert out["zero_rank"] == out["zero_count"] == predicted.multiplicity(0.0, tol)
        for f in out["families"]:
            assert f.rank == f.count
            assert f.max_residual <= 1e-8 * max(1, params.r)
        if extra:
            line = next(f for f in out["families"] if f.name == "line_kernel_padding")
            assert line.count == predicted.multiplicity(float(extra), tol)
