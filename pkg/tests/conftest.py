import math

import pytest

from goldbach_an.primes import build_sieve


def trial_division_is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, math.isqrt(m) + 1))


@pytest.fixture(scope="session")
def sieve():
    return build_sieve(2000)


_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        marker = item.get_closest_marker("criterion")
        label = marker.args[0] if marker else item.name
        status = "PASS" if rep.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {label}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion id")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
