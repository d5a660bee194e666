from functools import lru_cache

import pytest

from galoisrm.galois_ring import build_tower
from galoisrm.ring_base import RingParams

# towers with rm >= s used throughout; (2,3,1,2) is the rm < s control
TEST_TOWERS = [(2, 2, 1, 3), (3, 2, 1, 2), (2, 2, 2, 2), (2, 2, 1, 2)]
SMALL_TOWERS = [(2, 2, 1, 2), (2, 2, 1, 3), (3, 2, 1, 2)]
RM_LT_S = (2, 3, 1, 2)


@lru_cache(maxsize=None)
def get_tower(p, s, r, m):
    return build_tower(RingParams(p, s, r), m)


@lru_cache(maxsize=None)
def get_genmat(p, s, r, m, nu):
    from galoisrm.grm import standard_genmat

    return standard_genmat(get_tower(p, s, r, m), nu)


def top_order(t):
    return t.m * (t.q - 1)


def L_elem(t, k):
    """Element k of Z_{p^s}, embedded in L."""
    return t.L.from_int(k)


def ints(t, v):
    """Vector over L with r = 1 as plain ints."""
    return tuple(a[0] for a in v)


@pytest.fixture(params=TEST_TOWERS, ids=lambda x: "-".join(map(str, x)))
def tower(request):
    return get_tower(*request.param)


@pytest.fixture(params=SMALL_TOWERS, ids=lambda x: "-".join(map(str, x)))
def small_tower(request):
    return get_tower(*request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
