from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, settings

from cliffpin.algebra import Multivector, Signature

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        why = ""
        if report.failed:
            crash = getattr(report.longrepr, "reprcrash", None)
            why = crash.message.splitlines()[0] if crash else str(report.longrepr).splitlines()[-1]
        _criteria[name] = (report.outcome, why)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, (outcome, why) in sorted(_criteria.items()):
        line = f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}"
        if why:
            line += f"  -- {why[:160]}"
        terminalreporter.write_line(line)


# shared strategies --------------------------------------------------------

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def signatures_upto(draw, max_n=5, min_n=1):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.integers(0, n))
    rule = draw(st.sampled_from(["plus_first", "minus_first"]))
    return Signature(p, n - p, "real", rule)


@st.composite
def multivectors(draw, sig, max_terms=4):
    masks = draw(st.lists(st.integers(0, sig.dim - 1), max_size=max_terms, unique=True))
    return Multivector(sig, {m: draw(small_fractions) for m in masks})


@pytest.fixture(scope="session")
def cl13():
    return Signature(1, 3)
