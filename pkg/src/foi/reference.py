"""Embedded reference tables and verification against them.

The fixture carries the published per-country indices and ranks for
both epochs, the published cluster memberships, and the published
factor values (with genuinely empty cells). ``verify_reference``
re-classifies the published index values with the interval-halving rule
and diffs the result against the published memberships; it reports
disagreements, it never papers over them.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .classify import DEFAULT_EPSILON, DEFAULT_THRESHOLD, CLUSTER_LEVELS, classify
from .errors import DomainError, FixtureIntegrityError

PILLAR_ORDER = ("F", "O", "I")


@dataclass(frozen=True)
class ReferenceFixture:
    """Read-only transcription of the published tables."""

    countries: dict[str, str]
    indices: dict[str, dict[str, dict[str, list]]]   # epoch -> code -> pillar -> [value, rank]
    clusters: dict[str, dict[str, int]]              # epoch -> code -> cluster id
    factor_columns: tuple[str, ...]
    factor_values: dict[str, dict[str, float | None]]

    def index_value(self, epoch: int | str, code: str, pillar: str) -> float:
        return float(self.indices[str(epoch)][code][pillar][0])

    def index_rank(self, epoch: int | str, code: str, pillar: str) -> int:
        return int(self.indices[str(epoch)][code][pillar][1])

    def cluster(self, epoch: int | str, code: str) -> int:
        return self.clusters[str(epoch)][code]


@dataclass(frozen=True)
class Mismatch:
    country: str
    computed_cluster: int
    reference_cluster: int
    borderline: bool


@dataclass(frozen=True)
class VerifyReport:
    epoch: int
    matches: int
    mismatches: tuple[Mismatch, ...]

    @property
    def country_count(self) -> int:
        return self.matches + len(self.mismatches)

    @property
    def hard_mismatches(self) -> tuple[str, ...]:
        return tuple(m.country for m in self.mismatches if not m.borderline)

    @property
    def borderline_mismatches(self) -> tuple[str, ...]:
        return tuple(m.country for m in self.mismatches if m.borderline)


@lru_cache(maxsize=1)
def load_fixture() -> ReferenceFixture:
    """Load the embedded tables, checking their checksum."""
    text = resources.files("foi.data").joinpath("reference_tables.json").read_text(encoding="utf-8")
    payload = json.loads(text)
    tables = payload["tables"]
    canonical = json.dumps(tables, sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(canonical.encode()).hexdigest()
    if digest != payload["sha256"]:
        raise FixtureIntegrityError(
            f"reference fixture checksum mismatch: {digest} != {payload['sha256']}"
        )
    return ReferenceFixture(
        countries=tables["countries"],
        indices=tables["indices"],
        clusters=tables["clusters"],
        factor_columns=tuple(tables["factor_columns"]),
        factor_values=tables["factor_values"],
    )


def verify_reference(
    epoch: int,
    threshold: float = DEFAULT_THRESHOLD,
    epsilon: float = DEFAULT_EPSILON,
) -> VerifyReport:
    """Classify the published index values and diff against the
    published memberships.

    A mismatch is borderline when every pillar whose computed level
    disagrees with the published cluster lies within ``epsilon`` of the
    threshold (so 1-decimal display rounding can explain it); otherwise
    it is hard.
    """
    fx = load_fixture()
    key = str(epoch)
    if key not in fx.indices:
        raise DomainError(f"no reference data for epoch {epoch}; have {sorted(fx.indices)}")
    matches = 0
    mismatches = []
    for code in sorted(fx.countries):
        f = fx.index_value(epoch, code, "F")
        o = fx.index_value(epoch, code, "O")
        i = fx.index_value(epoch, code, "I")
        got = classify(f, o, i, threshold=threshold, epsilon=epsilon, country=code)
        want = fx.cluster(epoch, code)
        if got.cluster_id == want:
            matches += 1
            continue
        want_levels = CLUSTER_LEVELS[want]
        disagreeing = [
            pillar
            for pillar, have, need in zip(PILLAR_ORDER, got.levels, want_levels)
            if have != need
        ]
        values = dict(zip(PILLAR_ORDER, (f, o, i)))
        borderline = all(abs(values[p] - threshold) <= epsilon for p in disagreeing)
        mismatches.append(
            Mismatch(
                country=code,
                computed_cluster=got.cluster_id,
                reference_cluster=want,
                borderline=borderline,
            )
        )
    return VerifyReport(epoch=int(epoch), matches=matches, mismatches=tuple(mismatches))
