import pytest
from hypothesis import settings

from instances import example_one, example_two, two_clusters
from supergal import assemble_report

settings.register_profile("suite", max_examples=50, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ex1():
    return assemble_report(example_one(7), oracle=True)


@pytest.fixture(scope="session")
def ex1_13():
    return assemble_report(example_one(13), oracle=True)


@pytest.fixture(scope="session")
def ex2():
    return assemble_report(example_two(7), oracle=True)


@pytest.fixture(scope="session")
def ex24():
    return assemble_report(two_clusters(7), oracle=True)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
