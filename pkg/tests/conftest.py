import pytest

from dualpolar.pipeline import Instance

# (family, q, d)
TEST_MATRIX = [
    ("Cd", 2, 2), ("Cd", 2, 3), ("Cd", 3, 2),
    ("Bd", 2, 2), ("Bd", 3, 2),
    ("Dd", 2, 2), ("Dd", 2, 3), ("Dd", 3, 2),
    ("2D", 2, 2),
    ("2A_odd", 4, 2), ("2A_even", 4, 2),
]

_CACHE = {}


def get_instance(family, q, d):
    key = (family, q, d)
    if key not in _CACHE:
        _CACHE[key] = Instance(family, q, d)
    return _CACHE[key]


@pytest.fixture
def instance():
    return get_instance


def instance_id(x):
    return f"{x[0]}-q{x[1]}-d{x[2]}"


# criterion -> list of (ok, detail); filled by test_acceptance
ACCEPTANCE = {}


def record(criterion, ok, detail=""):
    ACCEPTANCE.setdefault(criterion, []).append((bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE, key=lambda c: (int(c.split()[0]), c)):
        results = ACCEPTANCE[criterion]
        ok = all(r[0] for r in results)
        failed = [d for good, d in results if not good]
        detail = "; ".join(failed[:3]) if failed else f"{len(results)} checks"
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
