"""Country-by-indicator panels: CSV ingestion, validation, serialization.

A panel stores one epoch of raw values as a float grid with ``nan``
marking missing cells. CSV columns are reordered to follow the manifest,
so two files with permuted columns load to identical panels.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicateCountryError, PanelParseError, SchemaError
from .manifest import IndicatorManifest

MISSING = float("nan")


@dataclass(frozen=True)
class IndicatorPanel:
    """Raw values for one epoch.

    ``values[i, j]`` is the value of indicator ``indicators[j]`` for
    country ``countries[i]``; ``nan`` means missing.
    """

    epoch: int
    countries: tuple[str, ...]
    indicators: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "countries", tuple(self.countries))
        object.__setattr__(self, "indicators", tuple(self.indicators))
        grid = np.array(self.values, dtype=float)
        grid.setflags(write=False)
        object.__setattr__(self, "values", grid)
        if len(set(self.countries)) != len(self.countries):
            raise DuplicateCountryError("duplicate country codes in panel")
        if grid.shape != (len(self.countries), len(self.indicators)):
            raise SchemaError(
                f"grid shape {grid.shape} does not match "
                f"{len(self.countries)} countries x {len(self.indicators)} indicators"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def column(self, indicator_id: str) -> np.ndarray:
        return self.values[:, self.indicators.index(indicator_id)]

    def row(self, country: str) -> np.ndarray:
        return self.values[self.countries.index(country), :]


@dataclass(frozen=True)
class ValidationReport:
    """Missingness summary for a panel. Validation reports, never fails."""

    missing_by_indicator: dict[str, int] = field(default_factory=dict)
    missing_by_country: dict[str, int] = field(default_factory=dict)
    coverage: float = 1.0
    warnings: tuple[str, ...] = ()


def load_panel(panel_csv, manifest: IndicatorManifest, epoch: int = 0) -> IndicatorPanel:
    """Read a ``country,<indicator ids...>`` CSV into a panel.

    Empty cells become missing. Column order in the result follows the
    manifest regardless of the file's column order.

    Raises
    ------
    SchemaError
        If the header names a column absent from the manifest.
    DuplicateCountryError
        If a country code appears twice.
    PanelParseError
        If a non-empty cell is not a decimal number; carries the 1-based
        data row and the column name.
    """
    with open(panel_csv, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{panel_csv}: empty file") from None
        if not header or header[0].strip().lower() != "country":
            raise SchemaError(f"{panel_csv}: first header column must be 'country'")
        file_cols = [h.strip() for h in header[1:]]
        known = set(manifest.ids)
        for col in file_cols:
            if col not in known:
                raise SchemaError(f"{panel_csv}: unknown indicator column {col!r}")
        if len(set(file_cols)) != len(file_cols):
            raise SchemaError(f"{panel_csv}: duplicate indicator columns")

        countries: list[str] = []
        rows: list[list[float]] = []
        for lineno, rec in enumerate(reader, start=1):
            if not rec or all(not c.strip() for c in rec):
                continue
            code = rec[0].strip()
            if code in countries:
                raise DuplicateCountryError(f"{panel_csv}: duplicate country row {code!r}")
            if len(rec) != len(file_cols) + 1:
                raise SchemaError(
                    f"{panel_csv}: row {lineno} ({code}) has {len(rec) - 1} cells, expected {len(file_cols)}"
                )
            parsed = []
            for col, cell in zip(file_cols, rec[1:]):
                cell = cell.strip()
                if cell == "":
                    parsed.append(MISSING)
                    continue
                try:
                    parsed.append(float(cell))
                except ValueError:
                    raise PanelParseError(
                        f"{panel_csv}: row {lineno} ({code}), column {col!r}: "
                        f"cannot parse {cell!r} as a number",
                        row=lineno,
                        column=col,
                    ) from None
            countries.append(code)
            rows.append(parsed)

    # keep the file's columns, reordered to manifest order
    kept = [i for i in manifest.ids if i in file_cols]
    raw = np.array(rows, dtype=float) if rows else np.empty((0, len(file_cols)))
    grid = raw[:, [file_cols.index(i) for i in kept]] if kept else np.empty((len(countries), 0))
    return IndicatorPanel(epoch=epoch, countries=tuple(countries), indicators=tuple(kept), values=grid)


def write_panel(panel: IndicatorPanel, path) -> None:
    """Serialize a panel back to the CSV schema ``load_panel`` reads."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["country", *panel.indicators])
        for i, code in enumerate(panel.countries):
            cells = ["" if math.isnan(v) else repr(float(v)) for v in panel.values[i]]
            writer.writerow([code, *cells])


def validate_panel(panel: IndicatorPanel) -> ValidationReport:
    """Count missing cells per indicator and country; warn on empty columns."""
    miss = np.isnan(panel.values)
    by_ind = {ind: int(miss[:, j].sum()) for j, ind in enumerate(panel.indicators)}
    by_ctry = {c: int(miss[i, :].sum()) for i, c in enumerate(panel.countries)}
    total = panel.values.size
    coverage = 1.0 if total == 0 else 1.0 - miss.sum() / total
    warnings = tuple(
        f"indicator {ind!r} has no observed values"
        for ind in panel.indicators
        if panel.values.shape[0] and by_ind[ind] == panel.values.shape[0]
    )
    return ValidationReport(
        missing_by_indicator=by_ind,
        missing_by_country=by_ctry,
        coverage=float(coverage),
        warnings=warnings,
    )
