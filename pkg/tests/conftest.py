import pytest

from smirnov_trees.core import parse_tree, tree_stats

FIG1 = "3(3(2(_,3),4(_,1(3,3))),1(4,1(3(_,2),_)))"


def pytest_sessionstart(session):
    # the left-edge convention is pinned by this tree; nothing else is
    # meaningful if it drifts
    stats = tree_stats(parse_tree(FIG1))
    if stats != (4, 3, 2, 3):
        pytest.exit(f"edge-weight convention self-test failed: {stats}", returncode=3)


@pytest.fixture
def fig1():
    return parse_tree(FIG1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
