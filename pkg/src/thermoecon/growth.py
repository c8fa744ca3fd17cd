"""Historical fitting: wealth construction, ratio statistics, trend growth.

The model ties three observables together on an annual grid:

* wealth C accumulates GDP, dC/dt = Y, so C is a running trapezoid sum;
* primary power a is proportional to wealth, a = (lambda/1000) C with
  lambda in W per thousand dollars and C in trillion dollars;
* the rate of return eta = Y/C doubles as the growth rate of both C and a.

Fitting means building C from a GDP record, forming the pointwise ratios
lambda, eta and the energy productivity f = Y/a, and regressing ln(eta)
on time to get the innovation rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    ConfigurationError,
    DomainError,
    InsufficientDataError,
    SeriesRangeError,
)
from .series import (
    AnnualSeries,
    WealthSeries,
    annual_grid,
    cumulative_integral,
    interpolate,
)
from .units import Unit


def build_wealth(
    gdp: AnnualSeries,
    mode: str = "calibrated_from_lambda",
    calibration: tuple[AnnualSeries, float] | None = None,
    historical_gdp: AnnualSeries | None = None,
) -> WealthSeries:
    """Accumulate a GDP record into a wealth series.

    Two initialisations are supported.  "calibrated_from_lambda" anchors
    the first year at C0 = 1000 * power(start) / lambda0, which is the only
    option when the record starts long after economic activity did.
    "integrated_from_epoch" prepends a sparse historical GDP record and
    integrates from its first year with zero initial wealth; only the years
    covered by `gdp` are returned.  Interior years are filled by log-linear
    interpolation before the trapezoid sum in both modes.
    """
    if gdp.unit is not Unit.GDP_TRILLION_USD2005_PER_YEAR:
        raise ConfigurationError(f"expected a GDP series, got {gdp.unit.token}")
    start, end = gdp.first_year, gdp.last_year
    if mode == "calibrated_from_lambda":
        if calibration is None:
            raise ConfigurationError(
                "calibrated_from_lambda needs calibration=(power_series, lambda0)"
            )
        power, lambda0 = calibration
        if not np.isfinite(lambda0) or lambda0 <= 0.0:
            raise DomainError(f"lambda0 must be positive, got {lambda0}")
        p0 = interpolate(power, np.array([start]), mode="log_linear").values[0]
        c0 = float(1000.0 * p0 / lambda0)
        dense = interpolate(gdp, annual_grid(start, end), mode="log_linear")
        integral = cumulative_integral(dense, from_year=start, initial=c0)
        return WealthSeries(
            series=integral, init_mode=mode, init_year=start, init_value=c0
        )
    if mode == "integrated_from_epoch":
        if historical_gdp is None:
            raise ConfigurationError(
                "integrated_from_epoch needs a historical_gdp series"
            )
        if historical_gdp.unit is not gdp.unit:
            raise ConfigurationError("historical GDP must share the GDP unit")
        epoch = historical_gdp.first_year
        if epoch >= start:
            raise ConfigurationError(
                f"historical record must begin before {start}, starts {epoch}"
            )
        keep = historical_gdp.years < start
        merged = AnnualSeries(
            np.concatenate([historical_gdp.years[keep], gdp.years]),
            np.concatenate([historical_gdp.values[keep], gdp.values]),
            gdp.unit,
            gdp.label,
        )
        dense = interpolate(merged, annual_grid(epoch, end), mode="log_linear")
        v = dense.values
        # running trapezoid from zero wealth at the epoch; the epoch itself
        # and any other pre-window years are dropped before validation so
        # the zero start never enters a positive-definite series
        run = np.concatenate([[0.0], np.cumsum(0.5 * (v[1:] + v[:-1]))])
        mask = dense.years >= start
        sliced = AnnualSeries(
            dense.years[mask], run[mask], Unit.WEALTH_TRILLION_USD2005, "wealth"
        )
        return WealthSeries(
            series=sliced,
            init_mode=mode,
            init_year=start,
            init_value=float(run[mask][0]),
        )
    raise ConfigurationError(f"unknown wealth mode {mode!r}")


@dataclass(frozen=True)
class ModelFit:
    """Pointwise ratio series and their summary statistics over one window."""

    window: tuple[int, int]
    wealth: WealthSeries
    lambda_series: AnnualSeries
    lambda_mean: float
    lambda_rel_std: float
    eta_series: AnnualSeries
    eta_mean: float
    f_series: AnnualSeries
    f_mean: float


def fit_lambda(
    power: AnnualSeries,
    wealth: WealthSeries | AnnualSeries,
    gdp: AnnualSeries,
    window: tuple[int, int] | None = None,
) -> ModelFit:
    """Form lambda = a/C, eta = Y/C and f = Y/a on the wealth grid.

    power and gdp are log-linearly interpolated onto the wealth years when
    their grids differ; all three must cover the window. Relative spread is
    the population standard deviation over the mean, the figure of merit
    for "is lambda actually constant".
    """
    wseries = wealth.series if isinstance(wealth, WealthSeries) else wealth
    if window is not None:
        wseries = wseries.window(*window)
    if len(wseries) == 0:
        raise SeriesRangeError("empty fit window")
    grid = wseries.years
    power_g = interpolate(power, grid, mode="log_linear")
    gdp_g = interpolate(gdp, grid, mode="log_linear")
    lam = power_g / wseries
    eta = gdp_g / wseries
    f = gdp_g / power_g
    return ModelFit(
        window=(int(grid[0]), int(grid[-1])),
        wealth=wealth if isinstance(wealth, WealthSeries) else WealthSeries(
            series=wseries,
            init_mode="calibrated_from_lambda",
            init_year=int(grid[0]),
            init_value=float(wseries.values[0]),
        ),
        lambda_series=lam,
        lambda_mean=float(np.mean(lam.values)),
        lambda_rel_std=float(np.std(lam.values) / np.mean(lam.values)),
        eta_series=eta,
        eta_mean=float(np.mean(eta.values)),
        f_series=f,
        f_mean=float(np.mean(f.values)),
    )


@dataclass(frozen=True)
class InnovationFit:
    """Least-squares trend of ln(eta) against calendar year.

    slope is the innovation rate d ln(eta)/dt in 1/yr; tau_eta is its
    reciprocal when growth is positive and None otherwise. intercept is
    ln(eta) at center_year, the mean fit year, where the regression is
    anchored for conditioning.
    """

    window: tuple[int, int]
    slope: float
    intercept: float
    center_year: float
    tau_eta: float | None
    residual_rms: float
    n_points: int

    def trend_eta(self, year: float) -> float:
        """Trend value of eta at a (possibly fractional) calendar year."""
        return float(np.exp(self.intercept + self.slope * (year - self.center_year)))


def fit_innovation(
    eta: AnnualSeries,
    window: tuple[int, int] | None = None,
) -> InnovationFit:
    """Regress ln(eta) on year; needs at least 3 points and positive eta."""
    if window is not None:
        eta = eta.window(*window)
    if len(eta) < 3:
        raise InsufficientDataError(
            f"innovation fit needs at least 3 points, got {len(eta)}"
        )
    if np.any(eta.values <= 0.0):
        raise DomainError("eta must be positive to fit ln(eta)")
    x = eta.years.astype(float)
    center = float(x.mean())
    x = x - center
    y = np.log(eta.values)
    slope = float(np.dot(x, y) / np.dot(x, x))
    intercept = float(y.mean())
    residuals = y - (intercept + slope * x)
    rms = float(np.sqrt(np.mean(residuals**2)))
    tau = 1.0 / slope if slope > 0.0 else None
    return InnovationFit(
        window=(eta.first_year, eta.last_year),
        slope=slope,
        intercept=intercept,
        center_year=center,
        tau_eta=tau,
        residual_rms=rms,
        n_points=len(eta),
    )


@dataclass(frozen=True)
class GrowthDecomposition:
    """GDP growth split into mean return plus innovation rate."""

    window: tuple[int, int]
    eta_mean: float
    innovation_rate: float
    predicted_growth: float


def gdp_growth_decomposition(
    fit: ModelFit, innovation: InnovationFit
) -> GrowthDecomposition:
    """Combine d ln(Y)/dt = eta + d ln(eta)/dt over a common window.

    Both inputs must cover the same years. The reference split for the
    1970-2009 benchmark window is a 1.87 %/yr mean return plus a
    0.93 %/yr innovation rate, 2.80 %/yr in total, against an observed
    mean GDP growth of 2.93 %/yr over those years, 0.13 points more than
    the split predicts. The annual-grid fit here lands near 1.84 + 1.13
    instead; both terms move with gridding and smoothing choices, their
    sum much less so.
    """
    if fit.window != innovation.window:
        raise ConfigurationError(
            f"fit window {fit.window} and innovation window {innovation.window} differ"
        )
    return GrowthDecomposition(
        window=fit.window,
        eta_mean=fit.eta_mean,
        innovation_rate=innovation.slope,
        predicted_growth=fit.eta_mean + innovation.slope,
    )


def energy_productivity(gdp: AnnualSeries, power: AnnualSeries) -> AnnualSeries:
    """GDP per unit energy, Y/a in dollars per joule, on the common years."""
    common = np.intersect1d(gdp.years, power.years)
    if common.size == 0:
        raise SeriesRangeError("GDP and power share no years")
    g = AnnualSeries(common, gdp.values[np.isin(gdp.years, common)], gdp.unit, gdp.label)
    p = AnnualSeries(
        common, power.values[np.isin(power.years, common)], power.unit, power.label
    )
    return g / p


class FitResult(NamedTuple):
    model: ModelFit
    innovation: InnovationFit
    decomposition: GrowthDecomposition
    wealth: WealthSeries


def run_fit(
    gdp: AnnualSeries,
    power: AnnualSeries,
    window: tuple[int, int] | None = None,
    lambda0: float | None = None,
    historical_gdp: AnnualSeries | None = None,
) -> FitResult:
    """Whole fitting pipeline on an annual grid.

    The window defaults to the GDP/power overlap. Wealth is integrated
    from a historical record when one is supplied, otherwise calibrated at
    the window start with lambda0.
    """
    if window is None:
        window = (
            max(gdp.first_year, power.first_year),
            min(gdp.last_year, power.last_year),
        )
    start, end = window
    if end < start:
        raise SeriesRangeError(f"window {start}:{end} is empty")
    grid = annual_grid(start, end)
    gdp_d = interpolate(gdp, grid, mode="log_linear")
    power_d = interpolate(power, grid, mode="log_linear")
    if historical_gdp is not None:
        wealth = build_wealth(
            gdp_d, mode="integrated_from_epoch", historical_gdp=historical_gdp
        )
    elif lambda0 is not None:
        wealth = build_wealth(
            gdp_d, mode="calibrated_from_lambda", calibration=(power_d, lambda0)
        )
    else:
        raise ConfigurationError(
            "need lambda0 for calibrated wealth or a historical GDP record"
        )
    model = fit_lambda(power_d, wealth, gdp_d)
    innovation = fit_innovation(model.eta_series)
    decomposition = gdp_growth_decomposition(model, innovation)
    return FitResult(
        model=model, innovation=innovation, decomposition=decomposition, wealth=wealth
    )
