import numpy as np
import pytest

from thermoecon import AnnualSeries, Unit, builtin_table1, run_fit


@pytest.fixture(scope="session")
def table1():
    return builtin_table1()


@pytest.fixture(scope="session")
def benchmark_fit(table1):
    # wealth anchored at the 1970 ratio; every headline statistic in the
    # suite comes off this one pipeline run
    return run_fit(table1.gdp, table1.power, lambda0=6.4)


@pytest.fixture
def gdp_ramp():
    years = np.arange(1990, 2011)
    return AnnualSeries(
        years,
        20.0 * np.exp(0.03 * (years - 1990)),
        Unit.GDP_TRILLION_USD2005_PER_YEAR,
        "synthetic gdp",
    )
