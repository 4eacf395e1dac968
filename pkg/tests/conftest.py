import pytest

from quintic_curves import FieldConfig

# verdict lines recorded by the acceptance suite; echoed after the run so
# they survive output capture
ACCEPTANCE_VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def field():
    return FieldConfig()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for line in ACCEPTANCE_VERDICTS:
        terminalreporter.write_line(line)
