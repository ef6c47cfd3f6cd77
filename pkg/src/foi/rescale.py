"""Min-max rescaling of raw indicator columns onto the common 1-7 scale.

Each column is rescaled independently: the worst observed value maps to
1, the best to 7, everything else linearly in between. "Best" depends on
the indicator's direction flag. Extremes are taken over the countries in
the panel at hand, so the scale is relative to the analyzed set.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyColumnError
from .manifest import IndicatorManifest
from .panel import IndicatorPanel

SCALE_LO = 1.0
SCALE_HI = 7.0
SCALE_MID = 4.0


def min_max_rescale(values, direction: str) -> np.ndarray:
    """Rescale one column to [1, 7], keeping missing cells missing.

    A degenerate column (all observed values equal) maps to the scale
    midpoint 4.0: a neutral contribution to the pillar mean.

    Raises
    ------
    EmptyColumnError
        If every value is missing.
    """
    col = np.asarray(values, dtype=float)
    mask = ~np.isnan(col)
    if not mask.any():
        raise EmptyColumnError("column has no observed values")
    lo = col[mask].min()
    hi = col[mask].max()
    out = np.full_like(col, np.nan)
    if hi == lo:
        out[mask] = SCALE_MID
        return out
    # ratio first: stays in [0, 1] even when hi - lo is subnormal
    if direction == "lower_is_better":
        frac = (hi - col[mask]) / (hi - lo)
    else:
        frac = (col[mask] - lo) / (hi - lo)
    out[mask] = SCALE_LO + (SCALE_HI - SCALE_LO) * frac
    return out


def rescale_panel(panel: IndicatorPanel, manifest: IndicatorManifest) -> IndicatorPanel:
    """Rescale every column of a panel using its manifest direction."""
    grid = np.empty_like(panel.values)
    for j, ind in enumerate(panel.indicators):
        spec = manifest.by_id(ind)
        try:
            grid[:, j] = min_max_rescale(panel.values[:, j], spec.direction)
        except EmptyColumnError:
            raise EmptyColumnError(f"indicator {ind!r} has no observed values") from None
    return IndicatorPanel(
        epoch=panel.epoch,
        countries=panel.countries,
        indicators=panel.indicators,
        values=grid,
    )
