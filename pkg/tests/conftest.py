import pytest

from cablowup import classify_extractions, parse_germ

_CACHE = {}
ACCEPTANCE = {}


def classified(text, bound=30):
    """Classification reports are expensive; share them across test modules."""
    key = (text, bound)
    if key not in _CACHE:
        _CACHE[key] = classify_extractions(parse_germ(text), bound)
    return _CACHE[key]


def record(criterion, ok, detail=""):
    line = f"{criterion} {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
    ACCEPTANCE[criterion] = line
    print(line)
    return ok


@pytest.fixture
def classify_cached():
    return classified


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
