"""Dataset loading, validation, writing, and the built-in benchmark table.

File format (UTF-8, LF or CRLF):

    # free comment lines
    # unit: gdp_trillion_usd2005_per_year
    1970,15.3
    1971,15.8

Two columns ``year,value`` separated by a comma (or a tab in .tsv output).
Report files with several value columns declare them explicitly:

    # columns: year,wealth,eta
    # unit.wealth: wealth_trillion_usd2005
    # unit.eta: per_year_fraction
    2009,2300,0.0214

An empty cell in a multi-column file means "no value that year" and the
point is skipped, which is how sparse columns round-trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    InsufficientDataError,
    ParseError,
    UnitError,
    ValidationError,
)
from .series import AnnualSeries
from .units import FILE_TOKENS, Unit, parse_unit_token

_UNIT_RE = re.compile(r"^#\s*unit:\s*(\S+)\s*$")
_COLUMNS_RE = re.compile(r"^#\s*columns:\s*(\S+)\s*$")
_COLUMN_UNIT_RE = re.compile(r"^#\s*unit\.([A-Za-z0-9_]+):\s*(\S+)\s*$")


def _split_row(line: str) -> list[str]:
    if "\t" in line:
        return [f.strip() for f in line.split("\t")]
    return [f.strip() for f in line.split(",")]


def load_series(
    path: str | Path,
    expected_unit: Unit,
    column: str = "value",
) -> AnnualSeries:
    """Read one series from a CSV/TSV file and validate it.

    `column` selects the value column in multi-column report files; plain
    two-column files always expose their data as column "value". Rows may
    appear in any order; the result is sorted by year.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")

    unit_token: str | None = None
    columns: list[str] | None = None
    column_units: dict[str, str] = {}
    points: dict[int, float] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _UNIT_RE.match(line)
            if m:
                unit_token = m.group(1)
                continue
            m = _COLUMNS_RE.match(line)
            if m:
                columns = m.group(1).split(",")
                if not columns or columns[0] != "year":
                    raise ParseError("first declared column must be 'year'", lineno)
                continue
            m = _COLUMN_UNIT_RE.match(line)
            if m:
                column_units[m.group(1)] = m.group(2)
            continue

        fields = _split_row(line)
        if columns is None:
            if len(fields) != 2:
                raise ParseError(f"expected 'year,value', got {raw!r}", lineno)
            names = ["year", "value"]
        else:
            if len(fields) != len(columns):
                raise ParseError(
                    f"expected {len(columns)} fields per '# columns:' header, got {len(fields)}",
                    lineno,
                )
            names = columns
        try:
            year = int(fields[0])
        except ValueError:
            raise ParseError(f"bad year {fields[0]!r}", lineno)
        try:
            idx = names.index(column if columns is not None else "value")
        except ValueError:
            raise ParseError(f"file has no column {column!r}", lineno)
        cell = fields[idx]
        if cell == "":
            if columns is None:
                raise ParseError("empty value", lineno)
            continue  # sparse column: absent point
        try:
            value = float(cell)
        except ValueError:
            raise ParseError(f"bad value {cell!r}", lineno)
        if year in points:
            raise ValidationError(f"{path.name}: duplicate year {year}")
        points[year] = value

    if columns is not None:
        token = column_units.get(column, unit_token)
        if token is None:
            raise UnitError(f"{path.name}: no '# unit.{column}:' header")
    else:
        token = unit_token
        if token is None:
            raise UnitError(f"{path.name}: missing mandatory '# unit:' header")
    unit, scale = parse_unit_token(token)
    if unit is not expected_unit:
        raise UnitError(
            f"{path.name}: declared unit {token!r} is {unit.token}, expected {expected_unit.token}"
        )

    if not points:
        raise InsufficientDataError(f"{path.name}: no data rows")

    years = sorted(points)
    values = [points[y] * scale for y in years]
    if expected_unit.requires_positive and any(v <= 0.0 for v in values):
        bad = next(y for y, v in zip(years, values) if v <= 0.0)
        raise ValidationError(
            f"{path.name}: non-positive value at year {bad} for unit {expected_unit.token}"
        )
    label = column if column != "value" else path.stem
    return AnnualSeries(np.array(years), np.array(values), expected_unit, label)


def _format_value(v: float, precision: int | None) -> str:
    if precision is None:
        return repr(float(v))
    return format(float(v), f".{precision}g")


def write_series(
    series: AnnualSeries,
    path: str | Path,
    fmt: str = "csv",
    precision: int | None = None,
    comments: Sequence[str] = (),
) -> Path:
    """Write a series in the two-column format; load_series inverts this.

    With precision=None values are written at full round-trip precision,
    making write -> load bit-exact.
    """
    path = Path(path)
    delim = "\t" if fmt == "tsv" else ","
    lines = [f"# {c}" for c in comments]
    lines.append(f"# unit: {series.unit.token}")
    lines.append("# columns: year,value")
    for year, value in zip(series.years, series.values):
        lines.append(f"{int(year)}{delim}{_format_value(value, precision)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_table(
    path: str | Path,
    year_grid: Sequence[int],
    columns: Mapping[str, Mapping[int, float]],
    units: Mapping[str, Unit | str],
    fmt: str = "csv",
    precision: int | None = 12,
    comments: Sequence[str] = (),
) -> Path:
    """Write a multi-column report; each column is a {year: value} mapping.

    Years missing from a column become empty cells (sparse columns such as
    doubling times that are undefined in non-innovating stretches). Units
    may be given as raw file tokens, e.g. "percent_per_year" for columns
    stored at presentation scale.
    """
    path = Path(path)
    delim = "\t" if fmt == "tsv" else ","
    names = list(columns)
    lines = [f"# {c}" for c in comments]
    lines.append("# columns: year," + ",".join(names))
    for name in names:
        unit = units[name]
        token = unit.token if isinstance(unit, Unit) else unit
        if token not in FILE_TOKENS:
            raise UnitError(f"unknown unit token {token!r} for column {name!r}")
        lines.append(f"# unit.{name}: {token}")
    for year in year_grid:
        cells = [str(int(year))]
        for name in names:
            value = columns[name].get(int(year))
            cells.append("" if value is None else _format_value(value, precision))
        lines.append(delim.join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# built-in benchmark data: world primary power, GDP, their ratio to wealth and
# the rate of return on wealth at nine reference years, 1970-2009, all in
# inflation-adjusted 2005 MER US dollar units.

TABLE1_YEARS = (1970, 1975, 1980, 1985, 1990, 1995, 2000, 2005, 2009)
TABLE1_POWER_TW = (7.2, 8.3, 9.6, 10.2, 11.6, 12.1, 13.1, 15.2, 16.1)
TABLE1_POWER_OVER_WEALTH = (6.4, 6.9, 7.3, 7.2, 7.5, 7.1, 6.9, 7.2, 7.0)
TABLE1_GDP = (15.3, 18.4, 22.2, 25.3, 30.2, 33.5, 39.7, 45.7, 49.1)
TABLE1_RATE_OF_RETURN_PCT = (1.37, 1.53, 1.70, 1.78, 1.94, 1.96, 2.10, 2.18, 2.14)


class Table1(NamedTuple):
    power: AnnualSeries
    gdp: AnnualSeries
    power_over_wealth: AnnualSeries
    rate_of_return: AnnualSeries


def builtin_table1() -> Table1:
    """The built-in nine-year benchmark dataset, exactly as published.

    Percent rows are converted to per-year fractions here; everything else
    keeps its printed unit (TW, T$/yr, W per thousand $).
    """
    years = np.array(TABLE1_YEARS)
    return Table1(
        power=AnnualSeries(
            years, np.array(TABLE1_POWER_TW), Unit.POWER_TERAWATT, "power production"
        ),
        gdp=AnnualSeries(
            years, np.array(TABLE1_GDP), Unit.GDP_TRILLION_USD2005_PER_YEAR, "world GDP"
        ),
        power_over_wealth=AnnualSeries(
            years,
            np.array(TABLE1_POWER_OVER_WEALTH),
            Unit.WATTS_PER_THOUSAND_USD2005,
            "power/wealth ratio",
        ),
        rate_of_return=AnnualSeries(
            years,
            np.array(TABLE1_RATE_OF_RETURN_PCT) * 0.01,
            Unit.PER_YEAR_FRACTION,
            "rate of return",
        ),
    )


_ROLE_UNITS = {
    "gdp": Unit.GDP_TRILLION_USD2005_PER_YEAR,
    "power": Unit.POWER_TERAWATT,
    "historical_gdp": Unit.GDP_TRILLION_USD2005_PER_YEAR,
}

#: Minimum length, in consecutive calendar years, of the GDP/power overlap.
MIN_FIT_OVERLAP_YEARS = 10


def _default_units() -> dict[str, Unit]:
    return dict(_ROLE_UNITS)


@dataclass(frozen=True)
class DatasetManifest:
    """Paths plus declared units for one input dataset."""

    gdp_path: Path
    power_path: Path
    historical_gdp_path: Path | None = None
    unit_declarations: dict[str, Unit] = field(default_factory=_default_units)

    def validate(self):
        for role, expected in _ROLE_UNITS.items():
            declared = self.unit_declarations.get(role, expected)
            if declared is not expected:
                raise UnitError(
                    f"series role {role!r} must be declared {expected.token}, "
                    f"got {declared.token}"
                )


class DatasetBundle(NamedTuple):
    gdp: AnnualSeries
    power: AnnualSeries
    historical_gdp: AnnualSeries | None


def load_dataset(manifest: DatasetManifest) -> DatasetBundle:
    """Load and cross-validate the series named by a manifest."""
    manifest.validate()
    gdp = load_series(manifest.gdp_path, manifest.unit_declarations["gdp"])
    power = load_series(manifest.power_path, manifest.unit_declarations["power"])
    historical = None
    if manifest.historical_gdp_path is not None:
        historical = load_series(
            manifest.historical_gdp_path, manifest.unit_declarations["historical_gdp"]
        )
    overlap = min(gdp.last_year, power.last_year) - max(gdp.first_year, power.first_year) + 1
    if overlap < MIN_FIT_OVERLAP_YEARS:
        raise ValidationError(
            f"GDP and power overlap on {max(overlap, 0)} years; "
            f"need at least {MIN_FIT_OVERLAP_YEARS} consecutive years for fitting"
        )
    return DatasetBundle(gdp=gdp, power=power, historical_gdp=historical)
