import pytest

from numsemi.sampling import random_semigroups

_ACCEPTANCE = []


def brute_members(gens, bound):
    """All sums of generators up to ``bound`` by breadth-first closure."""
    reach = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for d in gens:
                y = x + d
                if y <= bound and y not in reach:
                    reach.add(y)
                    nxt.append(y)
        frontier = nxt
    return reach


@pytest.fixture(scope="session")
def instances500():
    return random_semigroups(500, seed=7, m_range=(2, 6), dmax=300)


@pytest.fixture
def accept():
    def record(criterion, ok, detail=""):
        _ACCEPTANCE.append((criterion, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
