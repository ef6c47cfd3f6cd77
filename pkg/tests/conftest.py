import numpy as np
import pytest
from hypothesis import settings

from foi.manifest import IndicatorManifest, IndicatorSpec
from foi.panel import IndicatorPanel

# no per-example wall-clock deadline: results must not depend on host load
settings.register_profile("no_deadline", deadline=None)
settings.load_profile("no_deadline")


def make_manifest(pillar_counts=(2, 2, 2), directions=None):
    """Small manifest with sequentially named indicators per pillar."""
    specs = []
    for pillar, count in zip("FOI", pillar_counts):
        for i in range(count):
            ind = f"{pillar.lower()}{i}"
            direction = "higher_is_better"
            if directions and ind in directions:
                direction = directions[ind]
            specs.append(
                IndicatorSpec(id=ind, name=ind, pillar=pillar, direction=direction, source="test")
            )
    return IndicatorManifest(tuple(specs))


def make_panel(manifest, values, countries=None, epoch=2020):
    values = np.asarray(values, dtype=float)
    if countries is None:
        countries = [f"C{i:02d}" for i in range(values.shape[0])]
    return IndicatorPanel(
        epoch=epoch,
        countries=tuple(countries),
        indicators=tuple(manifest.ids),
        values=values,
    )


@pytest.fixture
def small_manifest():
    return make_manifest()


def pytest_runtest_logreport(report):
    # one visible line per acceptance criterion
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {status} ({report.duration:.2f}s)", flush=True)
