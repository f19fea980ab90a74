import numpy as np
import pytest

from cmgaps import CoeffSeries, FormSpec, batch_series


@pytest.fixture(scope="session")
def series_m1_1e7() -> CoeffSeries:
    return batch_series(10**7, FormSpec(power_m=1))


@pytest.fixture(scope="session")
def series_m1_1e6(series_m1_1e7) -> CoeffSeries:
    vals = np.array(series_m1_1e7.values[: 10**6 + 1], copy=True)
    return CoeffSeries(form=series_m1_1e7.form, limit=10**6, values=vals)


@pytest.fixture(scope="session")
def series_m1_1e5(series_m1_1e7) -> CoeffSeries:
    vals = np.array(series_m1_1e7.values[: 10**5 + 1], copy=True)
    return CoeffSeries(form=series_m1_1e7.form, limit=10**5, values=vals)


@pytest.fixture(scope="session")
def series_m3_1e6() -> CoeffSeries:
    return batch_series(10**6, FormSpec(power_m=3))
