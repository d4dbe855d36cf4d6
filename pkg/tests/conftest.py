import sys
from functools import lru_cache

import pytest

sys.setrecursionlimit(20000)


@lru_cache(maxsize=None)
def literal_p2(q, weyl, simple):
    """Ext^q(Delta(weyl), L(simple)) at p = 2, straight from the two p = 2 formulas.

    Even weights on both sides: sum over n of Ext^(q-n)(Delta(b+n), M).
    Odd weights on both sides: Ext^q(Delta(b), M).  Mixed parity vanishes.
    """
    if q == 0:
        return int(weyl == simple)
    if simple == 0:
        return 0
    if weyl % 2 != simple % 2:
        return 0
    b, m = weyl // 2, simple // 2
    if weyl % 2:
        return literal_p2(q, b, m)
    return sum(literal_p2(q - n, b + n, m) for n in range(q + 1))


def naive_ext(q, weyl, simple, p):
    """Unmemoised general-p recursion, written out case by case."""
    if q == 0:
        return int(weyl == simple)
    if simple == 0:
        return 0
    b, c = divmod(weyl, p)
    rest, mu0 = divmod(simple, p)
    if c == p - 1 and mu0 == p - 1:
        return naive_ext(q, b, rest, p)
    if c > p - 2:
        return 0
    if p == 2 and c == mu0 == 0:
        ns = range(q + 1)
    elif mu0 == c:
        ns = range(0, q + 1, 2)
    elif mu0 == p - 2 - c:
        ns = range(1, q + 1, 2)
    else:
        return 0
    return sum(naive_ext(q - n, b + n, rest, p) for n in ns)


@pytest.fixture(scope="session")
def reference_p2():
    return literal_p2


@pytest.fixture(scope="session")
def naive():
    return naive_ext


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance.py" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}")
