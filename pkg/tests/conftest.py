import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crembed.surgery import Product, Sphere, evaluate  # noqa: E402


def torus(k):
    expr = Sphere(1)
    for _ in range(k - 1):
        expr = Product(expr, Sphere(1))
    return expr


@pytest.fixture
def s6():
    return evaluate(Sphere(6))


@pytest.fixture
def t6():
    return evaluate(torus(6))


@pytest.fixture
def s3xs3():
    """S^3 x S^3 with no recorded embedding, so dimension-6 decisions must go through Wall."""
    from dataclasses import replace

    m = evaluate(Product(Sphere(3), Sphere(3)))
    return replace(m, embeds_codim=None, embeds_evidence=None)


@pytest.fixture
def s2xs4():
    from dataclasses import replace

    m = evaluate(Product(Sphere(2), Sphere(4)))
    return replace(m, embeds_codim=None, embeds_evidence=None, char=replace(m.char, c1_zero=True))


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
