import pytest

from hallbase.corpus import bundled_cases
from hallbase.perm import Permutation, generate_elements, subgroup


def perm(text, n):
    return Permutation.parse(text, n)


@pytest.fixture(scope="session")
def cases():
    return bundled_cases()


@pytest.fixture(scope="session")
def sym3():
    return generate_elements(3, [perm("(1 2)", 3), perm("(1 2 3)", 3)])


@pytest.fixture(scope="session")
def sym4():
    return generate_elements(4, [perm("(1 2)", 4), perm("(1 2 3 4)", 4)])


@pytest.fixture(scope="session")
def dih8():
    return generate_elements(4, [perm("(1 2 3 4)", 4), perm("(1 3)", 4)])


@pytest.fixture(scope="session")
def sl32(cases):
    return cases["sl32_point"].group


@pytest.fixture(scope="session")
def s3_point(sym3):
    return subgroup(sym3, [perm("(1 2)", 3)])


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Record one PASS/FAIL line per acceptance check; printed in the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(criterion, label, ok, detail=""):
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {label}" + (f"  ({detail})" if detail else ""))
        assert ok, detail or label

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
