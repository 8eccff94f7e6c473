import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pmlab.core import build_chain_monoid_ring, build_product, build_zero_mul, build_zmod, field_power
from pmlab.corpus import counterexample, even_z8


@pytest.fixture(scope="session")
def z6():
    return build_zmod(6)


@pytest.fixture(scope="session")
def z4():
    return build_zmod(4)


@pytest.fixture(scope="session")
def zm6():
    return build_zero_mul(6)


@pytest.fixture(scope="session")
def z8e():
    return even_z8()


@pytest.fixture(scope="session")
def cex():
    return counterexample()


@pytest.fixture(scope="session")
def chain2():
    return build_chain_monoid_ring(2)


@pytest.fixture(scope="session")
def f2cubed():
    return field_power(2, 3)


@pytest.fixture(scope="session")
def z2z3():
    return build_product([build_zmod(2), build_zmod(3)])


# One PASS/FAIL line per acceptance criterion, printed after the run.
_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    key = props["criterion"]
    if report.failed or key not in _criteria:
        _criteria[key] = ("FAIL" if report.failed else "PASS", props.get("summary", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(_criteria, key=int):
        status, summary = _criteria[key]
        terminalreporter.write_line(f"criterion {key}: {status}  {summary}")
