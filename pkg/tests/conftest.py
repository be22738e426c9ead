import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=30, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_criteria = {}


class _Criterion:
    def __init__(self, number, text):
        self.number = number
        self.text = text

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number:2d}: {status}  {self.text}"
        _criteria[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion():
    """``with criterion(n, "text"):`` records a pass/fail line for acceptance criterion n."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(_criteria):
            terminalreporter.write_line(_criteria[n])
