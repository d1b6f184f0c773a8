import pytest

from boundedhindman import EnumeratedFunction, LimitApproximation

# f(1..4) = 4, 6, 8, 2 and f(x) = x + 6 beyond
REF_F = EnumeratedFunction({1: 4, 2: 6, 3: 8, 4: 2}, tail_offset=6, threshold=4)
# late witnesses for small values, so short gaps appear at positions up to ~10
WIDE_F = EnumeratedFunction(
    {1: 5, 2: 11, 3: 1, 4: 13, 5: 8, 6: 2, 7: 6, 8: 12, 9: 3, 10: 9}, tail_offset=3, threshold=10
)
# partial table: f(4) = 6 and f(7) = 9 come from the tail rule
SPARSE_F = EnumeratedFunction({1: 10, 2: 7, 3: 1, 5: 3, 6: 5, 8: 4}, tail_offset=2, threshold=8)
SHIFT_F = EnumeratedFunction({}, tail_offset=1, threshold=0)

FUNCTIONS = {"ref": REF_F, "wide": WIDE_F, "sparse": SPARSE_F, "shift": SHIFT_F}

REF_A = LimitApproximation({0: [(0, 0), (5, 1)], 1: [(0, 0)]}, default=0, horizon=1)

MIND_CHANGERS = {
    "a1": LimitApproximation(
        {
            0: [(0, 0), (4, 1), (9, 0), (20, 1)],
            1: [(0, 1), (3, 0), (7, 1)],
            2: [(0, 0), (2, 1), (30, 0)],
            3: [(0, 1), (5, 0), (11, 1)],
            4: [(0, 0), (6, 1), (13, 0)],
            5: [(0, 1), (8, 0), (50, 1)],
        },
        default=0,
        horizon=5,
    ),
    "a2": LimitApproximation(
        {
            0: [(0, 1), (10, 0), (40, 1), (90, 0)],
            1: [(0, 0), (1, 1), (2, 0)],
            2: [(0, 1), (17, 0), (33, 1), (200, 0)],
            3: [(0, 0), (60, 1), (61, 0)],
            4: [(0, 1), (3, 0), (5, 1)],
        },
        default=1,
        horizon=6,
    ),
    "a3": LimitApproximation(
        {
            0: [(0, 0), (1, 1), (2, 0), (3, 1)],
            1: [(0, 1), (100, 0), (300, 1)],
            2: [(0, 0), (7, 1), (8, 0), (9, 1)],
            3: [(0, 1), (25, 0), (26, 1)],
            4: [(0, 0), (2, 1), (4, 0)],
            5: [(0, 0), (500, 1), (501, 0), (502, 1)],
            6: [(0, 1), (12, 0), (80, 1)],
        },
        default=0,
        horizon=7,
    ),
}


@pytest.fixture
def ref_f():
    return REF_F


@pytest.fixture
def ref_a():
    return REF_A


# acceptance reporting: one line per criterion at the end of the run
_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in report.user_properties if k == "detail")
    _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, detail = _CRITERIA[number]
        line = f"criterion {number:>2}: {status}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
