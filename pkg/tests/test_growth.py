import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thermoecon import (
    AnnualSeries,
    ConfigurationError,
    DomainError,
    InsufficientDataError,
    SECONDS_PER_YEAR,
    SeriesRangeError,
    Unit,
    annual_grid,
    build_wealth,
    energy_productivity,
    exponential_series,
    fit_innovation,
    fit_lambda,
    gdp_growth_decomposition,
    run_fit,
)

# wealth accumulated from the benchmark record, checked independently with
# a hand trapezoid over the log-interpolated annual grid
BENCHMARK_WEALTH = {
    1970: 1125.000,
    1975: 1209.021,
    1980: 1310.236,
    1985: 1428.824,
    1990: 1567.227,
    1995: 1726.340,
    2000: 1908.920,
    2005: 2122.082,
    2009: 2311.606,
}


def exact_model(lambda0=7.0, eta0=0.02, c0=1500.0, n=30, start=1980):
    """Series generated from the closed-form model with frozen eta."""
    years = np.arange(start, start + n)
    t = (years - start).astype(float)
    c = c0 * np.exp(eta0 * t)
    wealth = AnnualSeries(years, c, Unit.WEALTH_TRILLION_USD2005)
    gdp = AnnualSeries(years, eta0 * c, Unit.GDP_TRILLION_USD2005_PER_YEAR)
    power = AnnualSeries(years, lambda0 / 1000.0 * c, Unit.POWER_TERAWATT)
    return wealth, gdp, power


class TestBuildWealth:
    def test_calibrated_anchor_is_exact(self, table1):
        w = build_wealth(
            table1.gdp, calibration=(table1.power, 6.4)
        )
        assert w.init_year == 1970
        assert w.init_value == 1125.0  # 1000 * 7.2 / 6.4
        assert w.value_at(1970) == 1125.0

    def test_matches_hand_trapezoid(self, benchmark_fit):
        for year, expected in BENCHMARK_WEALTH.items():
            assert benchmark_fit.wealth.value_at(year) == pytest.approx(
                expected, abs=2e-3
            )

    def test_calibration_required(self, table1):
        with pytest.raises(ConfigurationError, match="calibration"):
            build_wealth(table1.gdp)

    def test_bad_lambda0(self, table1):
        with pytest.raises(DomainError):
            build_wealth(table1.gdp, calibration=(table1.power, -2.0))

    def test_unknown_mode(self, table1):
        with pytest.raises(ConfigurationError, match="unknown wealth mode"):
            build_wealth(table1.gdp, mode="oracle")

    def test_gdp_unit_enforced(self, table1):
        with pytest.raises(ConfigurationError, match="GDP"):
            build_wealth(table1.power, calibration=(table1.power, 6.4))

    def test_integrated_mode_drops_pre_window_years(self, table1):
        hist = AnnualSeries(
            np.array([1800, 1900, 1950, 1969]),
            np.array([1.0, 3.0, 7.0, 15.0]),
            Unit.GDP_TRILLION_USD2005_PER_YEAR,
        )
        w = build_wealth(table1.gdp, mode="integrated_from_epoch", historical_gdp=hist)
        assert w.init_mode == "integrated_from_epoch"
        assert int(w.years[0]) == 1970
        assert w.init_value > 0.0
        assert np.all(np.diff(w.values) > 0.0)

    def test_integrated_mode_needs_history(self, table1):
        with pytest.raises(ConfigurationError, match="historical"):
            build_wealth(table1.gdp, mode="integrated_from_epoch")

    def test_history_must_predate_window(self, table1):
        late = AnnualSeries(
            np.array([1970, 1980]),
            np.array([15.0, 22.0]),
            Unit.GDP_TRILLION_USD2005_PER_YEAR,
        )
        with pytest.raises(ConfigurationError, match="begin before"):
            build_wealth(table1.gdp, mode="integrated_from_epoch", historical_gdp=late)

    @given(
        rate=st.floats(0.001, 0.06),
        c0=st.floats(100.0, 5000.0),
    )
    @settings(max_examples=30)
    def test_wealth_never_decreases(self, rate, c0):
        gdp = exponential_series(
            1990, 25, 0.02 * c0, rate, Unit.GDP_TRILLION_USD2005_PER_YEAR
        )
        power = exponential_series(1990, 25, 10.0, rate, Unit.POWER_TERAWATT)
        w = build_wealth(gdp, calibration=(power, 7.0))
        assert np.all(np.diff(w.values) >= 0.0)


class TestFitLambda:
    def test_recovers_constant_ratio_exactly(self):
        wealth, gdp, power = exact_model(lambda0=7.0)
        fit = fit_lambda(power, wealth, gdp)
        assert fit.lambda_mean == pytest.approx(7.0, rel=1e-12)
        assert fit.lambda_rel_std < 1e-12
        assert np.allclose(fit.eta_series.values, 0.02, rtol=1e-12)

    def test_benchmark_statistics(self, benchmark_fit):
        m = benchmark_fit.model
        assert m.lambda_mean == pytest.approx(7.04813, abs=2e-4)
        assert m.lambda_rel_std == pytest.approx(0.03231, abs=2e-4)
        assert m.eta_mean == pytest.approx(0.018438, abs=2e-5)
        assert m.f_mean == pytest.approx(8.2840e-8, abs=2e-11)
        assert m.eta_series.value_at(1970) == pytest.approx(0.0136, abs=2e-6)
        assert m.eta_series.value_at(2009) == pytest.approx(0.021241, abs=2e-6)

    def test_ratio_definitions_hold_pointwise(self, benchmark_fit, table1):
        # table years are interpolation knots, so the printed inputs come
        # through bit-exact and the definitions can be checked directly
        m = benchmark_fit.model
        w = benchmark_fit.wealth
        for year in map(int, table1.power.years):
            assert m.lambda_series.value_at(year) == pytest.approx(
                1000.0 * table1.power.value_at(year) / w.value_at(year), rel=1e-14
            )
            assert m.eta_series.value_at(year) == pytest.approx(
                table1.gdp.value_at(year) / w.value_at(year), rel=1e-14
            )

    def test_eta_lambda_f_identity(self, benchmark_fit):
        m = benchmark_fit.model
        rhs = m.lambda_series.values / 1000.0 * m.f_series.values * SECONDS_PER_YEAR
        assert np.max(np.abs(m.eta_series.values - rhs)) < 1e-15

    def test_window_restricts_the_fit(self, benchmark_fit, table1):
        m = fit_lambda(
            table1.power, benchmark_fit.wealth, table1.gdp, window=(1980, 2000)
        )
        assert m.window == (1980, 2000)
        assert len(m.lambda_series) == 21

    def test_empty_window_rejected(self, benchmark_fit, table1):
        with pytest.raises(SeriesRangeError):
            fit_lambda(
                table1.power, benchmark_fit.wealth, table1.gdp, window=(2050, 2060)
            )


class TestFitInnovation:
    @given(slope=st.floats(-0.05, 0.05), eta0=st.floats(0.005, 0.05))
    @settings(max_examples=40)
    def test_exact_trend_recovered(self, slope, eta0):
        s = exponential_series(2000, 15, eta0, slope, Unit.PER_YEAR_FRACTION)
        fit = fit_innovation(s)
        assert fit.slope == pytest.approx(slope, abs=1e-12)
        assert fit.residual_rms < 1e-12
        # tau follows the sign of the fitted slope, which at a true slope
        # of zero is rounding noise either way
        if fit.slope > 0:
            assert fit.tau_eta == pytest.approx(1.0 / fit.slope)
        else:
            assert fit.tau_eta is None
        if slope > 1e-6:
            assert fit.tau_eta == pytest.approx(1.0 / slope, rel=1e-6)

    def test_trend_eta_reproduces_inputs(self):
        s = exponential_series(2000, 15, 0.02, 0.01, Unit.PER_YEAR_FRACTION)
        fit = fit_innovation(s)
        assert fit.trend_eta(2000) == pytest.approx(0.02, rel=1e-10)
        assert fit.trend_eta(2014) == pytest.approx(0.02 * np.exp(0.14), rel=1e-10)

    def test_printed_return_row_statistics(self, table1):
        fit = fit_innovation(table1.rate_of_return)
        assert fit.slope == pytest.approx(0.011412, abs=2e-6)
        assert fit.residual_rms == pytest.approx(0.03930, abs=5e-6)
        assert fit.n_points == 9

    def test_endpoint_residual_bounded_by_root_n_rms(self, table1):
        # the worst single residual can exceed the rms; it cannot exceed
        # sqrt(n) times it
        fit = fit_innovation(table1.rate_of_return)
        x = table1.rate_of_return.years.astype(float) - fit.center_year
        resid = np.log(table1.rate_of_return.values) - (
            fit.intercept + fit.slope * x
        )
        bound = np.sqrt(fit.n_points) * fit.residual_rms
        assert np.max(np.abs(resid)) <= bound + 1e-12

    def test_needs_three_points(self):
        s = exponential_series(2000, 2, 0.02, 0.01, Unit.PER_YEAR_FRACTION)
        with pytest.raises(InsufficientDataError):
            fit_innovation(s)

    def test_needs_positive_eta(self):
        s = AnnualSeries(
            np.arange(2000, 2004),
            np.array([0.02, -0.01, 0.02, 0.03]),
            Unit.PER_YEAR_FRACTION,
        )
        with pytest.raises(DomainError):
            fit_innovation(s)

    def test_window_clips_before_fitting(self, benchmark_fit):
        full = benchmark_fit.innovation
        clipped = fit_innovation(benchmark_fit.model.eta_series, window=(1990, 2009))
        assert clipped.window == (1990, 2009)
        assert clipped.n_points == 20
        assert clipped.slope != full.slope


class TestDecomposition:
    def test_sum_identity_is_exact(self, benchmark_fit):
        dec = benchmark_fit.decomposition
        assert dec.predicted_growth == dec.eta_mean + dec.innovation_rate

    def test_window_mismatch_rejected(self, benchmark_fit):
        clipped = fit_innovation(benchmark_fit.model.eta_series, window=(1990, 2009))
        with pytest.raises(ConfigurationError, match="window"):
            gdp_growth_decomposition(benchmark_fit.model, clipped)

    def test_reference_numbers_recorded(self):
        doc = gdp_growth_decomposition.__doc__
        assert "1.87" in doc and "0.93" in doc and "2.80" in doc
        assert "2.93" in doc and "0.13" in doc
        # and the recorded split is arithmetically consistent
        assert abs((1.87 + 0.93) - 2.80) < 1e-9
        assert abs((2.93 - 2.80) - 0.13) < 1e-9

    def test_benchmark_terms(self, benchmark_fit):
        dec = benchmark_fit.decomposition
        assert dec.eta_mean == pytest.approx(0.018438, abs=2e-5)
        assert dec.innovation_rate == pytest.approx(0.011318, abs=2e-5)
        assert 0.008 <= dec.innovation_rate <= 0.013


class TestEnergyProductivity:
    def test_benchmark_values(self, table1):
        f = energy_productivity(table1.gdp, table1.power)
        assert f.unit is Unit.USD2005_PER_JOULE
        assert f.value_at(1970) == pytest.approx(6.7339e-8, abs=2e-12)
        assert np.mean(f.values) == pytest.approx(8.3073e-8, abs=2e-12)

    def test_intersects_year_grids(self, table1):
        power_tail = table1.power.window(1990, 2009)
        f = energy_productivity(table1.gdp, power_tail)
        assert f.first_year == 1990
        assert len(f) == 5

    def test_disjoint_grids_rejected(self, table1):
        power = AnnualSeries(
            np.array([2020, 2021]), np.array([17.0, 17.5]), Unit.POWER_TERAWATT
        )
        with pytest.raises(SeriesRangeError):
            energy_productivity(table1.gdp, power)


class TestRunFit:
    def test_needs_an_anchor(self, table1):
        with pytest.raises(ConfigurationError, match="lambda0"):
            run_fit(table1.gdp, table1.power)

    def test_window_defaults_to_overlap(self, table1):
        res = run_fit(table1.gdp, table1.power, lambda0=6.4)
        assert res.model.window == (1970, 2009)
        assert len(res.model.lambda_series) == 40

    def test_explicit_window(self, table1):
        res = run_fit(table1.gdp, table1.power, window=(1980, 2000), lambda0=7.3)
        assert res.model.window == (1980, 2000)
        assert res.wealth.init_year == 1980
        assert res.wealth.init_value == pytest.approx(1000.0 * 9.6 / 7.3)

    def test_empty_window_rejected(self, table1):
        with pytest.raises(SeriesRangeError, match="empty"):
            run_fit(table1.gdp, table1.power, window=(2000, 1990), lambda0=7.0)

    def test_historical_record_switches_mode(self, table1):
        hist = AnnualSeries(
            np.array([1850, 1900, 1950, 1969]),
            np.array([2.0, 4.0, 8.0, 15.0]),
            Unit.GDP_TRILLION_USD2005_PER_YEAR,
        )
        res = run_fit(table1.gdp, table1.power, historical_gdp=hist)
        assert res.wealth.init_mode == "integrated_from_epoch"
        assert res.model.window == (1970, 2009)

    def test_exact_model_round_trips_through_pipeline(self):
        wealth, gdp, power = exact_model(lambda0=9.0, eta0=0.015, n=25, start=1985)
        # calibrate with the true ratio at the window start; trapezoid
        # integration is second-order so the recovered ratio is close but
        # not exact
        res = run_fit(gdp, power, lambda0=9.0)
        assert res.model.lambda_mean == pytest.approx(9.0, rel=5e-4)
        assert res.model.lambda_rel_std < 5e-4
        assert res.innovation.slope == pytest.approx(0.0, abs=5e-5)
