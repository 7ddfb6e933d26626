import pytest

from mstlab import graph_counts as gc


@pytest.fixture(scope="session")
def table8():
    return gc.build_count_table(8)


@pytest.fixture(scope="session")
def table20():
    return gc.build_count_table(20)


@pytest.fixture(scope="session")
def table60():
    return gc.build_count_table(60)
