import random

import pytest
from hypothesis import strategies as st

from halidon_crypt import example_data as ex
from halidon_crypt.dihedral import GroupRingElement
from halidon_crypt.halidon import HalidonContext, find_primitive_roots

# (n, p1, p2, m) with m | gcd(p1 - 1, p2 - 1)
SMALL_RINGS = [
    (15, 3, 5, 2),
    (35, 5, 7, 2),
    (91, 7, 13, 3),
    (91, 7, 13, 6),
    (221, 13, 17, 2),
    (221, 13, 17, 4),
    (105851, 151, 701, 2),
    (105851, 151, 701, 5),
    (105851, 151, 701, 10),
]


def small_context(n, m, which=0):
    roots = find_primitive_roots(n, m)
    return HalidonContext(n, m, roots[which % len(roots)])


SMALL_CONTEXTS = [small_context(n, m) for n, _, _, m in SMALL_RINGS]
FACTORS = {n: (p1, p2) for n, p1, p2, _ in SMALL_RINGS}


@pytest.fixture(scope="session")
def ex_ctx():
    return HalidonContext(ex.N, ex.M, ex.OMEGA)


@pytest.fixture
def rng():
    return random.Random(20240917)


def random_element(rng, m, n):
    return GroupRingElement(m, n, tuple(rng.randrange(n) for _ in range(2 * m)))


def random_unit(rng, ctx):
    from halidon_crypt.dihedral import is_unit_element

    while True:
        u = random_element(rng, ctx.m, ctx.n)
        if is_unit_element(u, ctx):
            return u


@st.composite
def elements_in(draw, m, n):
    coeffs = draw(st.lists(st.integers(0, n - 1), min_size=2 * m, max_size=2 * m))
    return GroupRingElement(m, n, tuple(coeffs))


@st.composite
def context_and_element(draw):
    ctx = draw(st.sampled_from(SMALL_CONTEXTS))
    return ctx, draw(elements_in(ctx.m, ctx.n))


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
