"""Exploratory factor analysis built from first principles.

The stack: Pearson correlations with pairwise or listwise deletion,
sampling-adequacy diagnostics (KMO, sphericity chi-square), principal
component extraction, varimax rotation with optional Kaiser
normalization, explained variance, and regression-method factor scores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import chi2

from .errors import DomainError, SingularMatrixError, UndefinedStatisticError

VARIMAX_TOL = 1e-12
VARIMAX_MAX_SWEEPS = 1000


@dataclass(frozen=True)
class VariableMatrix:
    """Observations (rows) by variables (columns), ``nan`` = missing."""

    rows: tuple[str, ...]
    variables: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "variables", tuple(self.variables))
        grid = np.array(self.values, dtype=float)
        grid.setflags(write=False)
        object.__setattr__(self, "values", grid)
        if grid.shape != (len(self.rows), len(self.variables)):
            raise DomainError("grid shape does not match row/variable labels")

    @property
    def n(self) -> int:
        """Effective observation count: rows with no missing cell."""
        return int((~np.isnan(self.values)).all(axis=1).sum())


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric Pearson correlation matrix with per-pair counts."""

    variables: tuple[str, ...]
    values: np.ndarray
    pair_counts: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        for name in ("values", "pair_counts"):
            arr = np.array(getattr(self, name), dtype=float if name == "values" else int)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def p(self) -> int:
        return len(self.variables)


@dataclass(frozen=True)
class BartlettResult:
    chi_square: float
    df: int
    p_value: float


@dataclass(frozen=True)
class FactorModel:
    """Complete output of one factor-analysis run."""

    variables: tuple[str, ...]
    loadings: np.ndarray          # unrotated, p x k
    rotated_loadings: np.ndarray  # p x k
    rotation: np.ndarray          # k x k orthogonal
    eigenvalues: np.ndarray       # length p
    kmo: float
    bartlett: BartlettResult
    variance_explained: float
    scores: np.ndarray | None = None   # rows x k, nan rows for incomplete countries
    score_rows: tuple[str, ...] = ()
    converged: bool = True


def correlation_matrix(data: VariableMatrix, missing: str = "pairwise") -> CorrelationMatrix:
    """Pearson correlations under pairwise or listwise deletion.

    Raises
    ------
    DomainError
        If a variable has zero variance, or some pair has fewer than 3
        complete observations.
    """
    if missing not in ("pairwise", "listwise"):
        raise DomainError(f"missing must be 'pairwise' or 'listwise', got {missing!r}")
    grid = data.values
    if missing == "listwise":
        grid = grid[(~np.isnan(grid)).all(axis=1)]
    p = len(data.variables)
    r = np.eye(p)
    counts = np.zeros((p, p), dtype=int)
    for j in range(p):
        col = grid[:, j]
        obs = col[~np.isnan(col)]
        counts[j, j] = obs.size
        if obs.size and obs.std() == 0.0:
            raise DomainError(f"variable {data.variables[j]!r} has zero variance")
    for a in range(p):
        for b in range(a + 1, p):
            ok = ~np.isnan(grid[:, a]) & ~np.isnan(grid[:, b])
            counts[a, b] = counts[b, a] = int(ok.sum())
            if counts[a, b] < 3:
                raise DomainError(
                    f"fewer than 3 complete observations for pair "
                    f"({data.variables[a]!r}, {data.variables[b]!r})"
                )
            x, y = grid[ok, a], grid[ok, b]
            sx, sy = x.std(), y.std()
            if sx == 0.0 or sy == 0.0:
                raise DomainError(
                    f"zero variance in pair ({data.variables[a]!r}, {data.variables[b]!r})"
                )
            r[a, b] = r[b, a] = float(((x - x.mean()) * (y - y.mean())).mean() / (sx * sy))
    return CorrelationMatrix(variables=data.variables, values=r, pair_counts=counts)


def bartlett_test(r: CorrelationMatrix, n: int) -> BartlettResult:
    """Sphericity test that the correlation matrix is the identity.

    chi2 = -(n - 1 - (2p + 5)/6) * ln det(R), with p(p-1)/2 degrees of
    freedom.
    """
    p = r.p
    if n <= p:
        raise DomainError(f"need n > p, got n={n}, p={p}")
    sign, logdet = np.linalg.slogdet(r.values)
    if sign <= 0:
        raise SingularMatrixError("correlation matrix is not positive definite")
    df = p * (p - 1) // 2
    stat = -(n - 1 - (2 * p + 5) / 6.0) * logdet
    stat = max(stat, 0.0)
    return BartlettResult(chi_square=float(stat), df=df, p_value=float(chi2.sf(stat, df)))


def anti_image_correlations(r: CorrelationMatrix) -> np.ndarray:
    """Partial correlations (negated scaled inverse), unit diagonal."""
    if r.p == 2:
        # with no third variable to partial out, the partial correlation
        # is the raw one; bypass the inverse to keep the identity exact
        return np.array(r.values)
    try:
        inv = np.linalg.inv(r.values)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("correlation matrix is singular") from exc
    d = np.sqrt(np.diag(inv))
    q = -inv / np.outer(d, d)
    np.fill_diagonal(q, 1.0)
    return q


def kmo_statistic(r: CorrelationMatrix, per_variable: bool = False):
    """Sampling-adequacy ratio of squared correlations to squared
    correlations plus squared partial correlations.

    Returns the overall statistic, or ``(overall, per-variable)`` when
    ``per_variable`` is set.

    Raises
    ------
    UndefinedStatisticError
        If all off-diagonal correlations are zero (0/0).
    """
    q = anti_image_correlations(r)
    off = ~np.eye(r.p, dtype=bool)
    r2 = r.values[off] ** 2
    q2 = q[off] ** 2
    denom = r2.sum() + q2.sum()
    if denom == 0.0:
        raise UndefinedStatisticError("all off-diagonal correlations are zero")
    overall = float(r2.sum() / denom)
    if not per_variable:
        return overall
    r2m = np.where(off, r.values**2, 0.0)
    q2m = np.where(off, q**2, 0.0)
    msa = r2m.sum(axis=1) / (r2m.sum(axis=1) + q2m.sum(axis=1))
    return overall, msa


def _orient_signs(loadings: np.ndarray) -> np.ndarray:
    """Flip columns so each one's maximum-magnitude entry is positive."""
    flips = np.ones(loadings.shape[1])
    for j in range(loadings.shape[1]):
        col = loadings[:, j]
        if col[np.argmax(np.abs(col))] < 0:
            flips[j] = -1.0
    return flips


def pca_extract(r: CorrelationMatrix, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Principal-component loadings and the full eigenvalue spectrum.

    Loading column j is eigenvector j scaled by sqrt(eigenvalue j),
    eigenvalues sorted descending. Column signs are oriented so the
    maximum-magnitude loading in each column is positive.
    """
    p = r.p
    if not (1 <= k <= p):
        raise DomainError(f"k must be in [1, {p}], got {k}")
    eigvals, eigvecs = np.linalg.eigh(r.values)
    order = np.argsort(eigvals)[::-1]
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    # deterministic eigenvector orientation: first nonzero component positive
    for j in range(p):
        col = eigvecs[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size and col[nz[0]] < 0:
            eigvecs[:, j] = -col
    loadings = eigvecs[:, :k] * np.sqrt(np.clip(eigvals[:k], 0.0, None))
    loadings = loadings * _orient_signs(loadings)
    return loadings, eigvals


def kaiser_count(eigenvalues) -> int:
    """Number of eigenvalues strictly greater than 1."""
    return int((np.asarray(eigenvalues, dtype=float) > 1.0).sum())


def varimax_criterion(loadings: np.ndarray) -> float:
    """Sum over factors of the variance of squared loadings."""
    sq = np.asarray(loadings, dtype=float) ** 2
    p = sq.shape[0]
    return float((sq**2).sum() / p - ((sq.sum(axis=0) / p) ** 2).sum())


def varimax_rotate(
    loadings: np.ndarray,
    kaiser_normalize: bool = True,
    tol: float = VARIMAX_TOL,
    max_iter: int = VARIMAX_MAX_SWEEPS,
    variables: tuple[str, ...] | None = None,
) -> tuple[np.ndarray, np.ndarray, float, bool]:
    """Rotate loadings to maximize the varimax criterion.

    Sweeps planar rotations over every factor pair until the relative
    criterion gain per sweep drops below ``tol``. With Kaiser
    normalization, rows are scaled to unit communality before rotation
    and rescaled after.

    Returns ``(rotated, rotation, criterion, converged)``; the rotation
    matrix R is orthogonal and satisfies ``rotated = loadings @ R`` (up
    to the row normalization, which cancels).
    """
    lam = np.array(loadings, dtype=float)
    if lam.ndim != 2 or lam.shape[1] < 1:
        raise DomainError("loadings must be a p x k matrix with k >= 1")
    p, k = lam.shape
    comm = np.sqrt((lam**2).sum(axis=1))
    if kaiser_normalize:
        zero = np.flatnonzero(comm == 0.0)
        if zero.size:
            name = variables[zero[0]] if variables else f"row {zero[0]}"
            raise DomainError(f"zero communality for {name}; cannot Kaiser-normalize")
        work = lam / comm[:, None]
    else:
        work = lam.copy()

    rotation = np.eye(k)
    if k == 1:
        rotated = lam * _orient_signs(lam)
        rotation[0, 0] = float(np.sign((rotated * lam).sum()) or 1.0)
        return rotated, rotation, varimax_criterion(work * rotation[0, 0]), True

    crit = varimax_criterion(work)
    converged = False
    for _ in range(max_iter):
        for a in range(k - 1):
            for b in range(a + 1, k):
                x, y = work[:, a], work[:, b]
                u = x**2 - y**2
                v = 2.0 * x * y
                num = 2.0 * ((u * v).sum() - u.sum() * v.sum() / p)
                den = (u**2 - v**2).sum() - (u.sum() ** 2 - v.sum() ** 2) / p
                phi = 0.25 * math.atan2(num, den)
                if abs(phi) < 1e-15:
                    continue
                c, s = math.cos(phi), math.sin(phi)
                g = np.eye(k)
                g[a, a] = g[b, b] = c
                g[a, b] = -s
                g[b, a] = s
                work = work @ g
                rotation = rotation @ g
        new_crit = varimax_criterion(work)
        gain = new_crit - crit
        rel = gain / crit if crit > 0 else gain
        crit = new_crit
        if rel < tol:
            converged = True
            break

    rotated = (work * comm[:, None]) if kaiser_normalize else work
    flips = _orient_signs(rotated)
    rotated = rotated * flips
    rotation = rotation * flips
    return rotated, rotation, varimax_criterion(work * flips), converged


def variance_explained(rotated_loadings: np.ndarray, p: int) -> float:
    """Fraction of total variance carried by the retained factors."""
    lam = np.asarray(rotated_loadings, dtype=float)
    return float((lam**2).sum() / p)


def factor_scores(
    data: VariableMatrix,
    r: CorrelationMatrix,
    rotated_loadings: np.ndarray,
) -> np.ndarray:
    """Regression-method factor scores: Z R^-1 L.

    Standardization statistics come from the complete rows; any row with
    a missing cell among the analysis variables gets a ``nan`` score
    vector. Score columns are centered on the complete rows.
    """
    try:
        rinv = np.linalg.inv(r.values)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("correlation matrix is singular") from exc
    grid = data.values
    complete = (~np.isnan(grid)).all(axis=1)
    if not complete.any():
        raise DomainError("no complete rows to score")
    base = grid[complete]
    mu = base.mean(axis=0)
    sd = base.std(axis=0)
    if (sd == 0.0).any():
        j = int(np.flatnonzero(sd == 0.0)[0])
        raise DomainError(f"variable {data.variables[j]!r} is constant on complete rows")
    weights = rinv @ np.asarray(rotated_loadings, dtype=float)
    scores = np.full((grid.shape[0], weights.shape[1]), np.nan)
    scores[complete] = ((base - mu) / sd) @ weights
    return scores


def fit_factor_model(
    data: VariableMatrix,
    k: int = 2,
    missing: str = "pairwise",
    kaiser_normalize: bool = True,
    auto_k: bool = False,
) -> FactorModel:
    """Run the full extraction/rotation/diagnostics/scoring pipeline.

    With ``auto_k`` the retained-factor count comes from the
    eigenvalue-above-1 rule instead of ``k``.
    """
    r = correlation_matrix(data, missing=missing)
    n = data.n if missing == "listwise" else int(r.pair_counts.min())
    bart = bartlett_test(r, n)
    kmo = kmo_statistic(r)
    _, eigvals = pca_extract(r, 1)
    if auto_k:
        k = max(kaiser_count(eigvals), 1)
    loadings, eigvals = pca_extract(r, k)
    rotated, rotation, _, converged = varimax_rotate(
        loadings, kaiser_normalize=kaiser_normalize, variables=data.variables
    )
    scores = factor_scores(data, r, rotated)
    return FactorModel(
        variables=data.variables,
        loadings=loadings,
        rotated_loadings=rotated,
        rotation=rotation,
        eigenvalues=eigvals,
        kmo=kmo,
        bartlett=bart,
        variance_explained=variance_explained(rotated, r.p),
        scores=scores,
        score_rows=data.rows,
        converged=converged,
    )


def synthesize_known_factors(
    p: int,
    k: int,
    n: int,
    loadings: np.ndarray | None = None,
    noise: float = 0.3,
    seed: int = 0,
) -> tuple[VariableMatrix, np.ndarray]:
    """Deterministic synthetic data with a known factor structure.

    Draws n x k standard-normal factors and emits
    ``factors @ loadings.T + noise * eps``. Without an explicit loading
    matrix, a block pattern is used: each variable loads 0.8 on one
    factor, assigned round-robin. Returns the data and the generating
    loadings.
    """
    if not (p >= k >= 1) or n <= p:
        raise DomainError(f"need p >= k >= 1 and n > p, got p={p}, k={k}, n={n}")
    if loadings is None:
        lam = np.zeros((p, k))
        for j in range(p):
            lam[j, j % k] = 0.8
    else:
        lam = np.asarray(loadings, dtype=float)
        if lam.shape != (p, k):
            raise DomainError(f"loadings shape {lam.shape} does not match ({p}, {k})")
    rng = np.random.default_rng(seed)
    factors = rng.standard_normal((n, k))
    # decorrelate so sample factors are orthogonal-ish even at modest n
    qmat, _ = np.linalg.qr(factors - factors.mean(axis=0))
    factors = qmat * math.sqrt(n)
    grid = factors @ lam.T + noise * rng.standard_normal((n, p))
    rows = tuple(f"obs{i:04d}" for i in range(n))
    variables = tuple(f"v{j:02d}" for j in range(p))
    return VariableMatrix(rows=rows, variables=variables, values=grid), lam


def load_variable_matrix(path) -> VariableMatrix:
    """Read a ``country,<variable ids...>`` CSV; empty cells are missing."""
    import csv

    from .errors import PanelParseError, SchemaError

    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if not header or header[0].strip().lower() != "country":
            raise SchemaError(f"{path}: first header column must be 'country'")
        variables = tuple(h.strip() for h in header[1:])
        rows: list[str] = []
        grid: list[list[float]] = []
        for lineno, rec in enumerate(reader, start=1):
            if not rec or all(not c.strip() for c in rec):
                continue
            rows.append(rec[0].strip())
            parsed = []
            for col, cell in zip(variables, rec[1:]):
                cell = cell.strip()
                if not cell:
                    parsed.append(float("nan"))
                    continue
                try:
                    parsed.append(float(cell))
                except ValueError:
                    raise PanelParseError(
                        f"{path}: row {lineno}, column {col!r}: cannot parse {cell!r}",
                        row=lineno,
                        column=col,
                    ) from None
            if len(parsed) != len(variables):
                raise SchemaError(f"{path}: row {lineno} has {len(parsed)} cells, expected {len(variables)}")
            grid.append(parsed)
    values = np.array(grid, dtype=float) if grid else np.empty((0, len(variables)))
    return VariableMatrix(rows=tuple(rows), variables=variables, values=values)


def congruence(a: np.ndarray, b: np.ndarray) -> float:
    """Tucker congruence between two loading columns."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float((a * b).sum() / math.sqrt((a**2).sum() * (b**2).sum()))
