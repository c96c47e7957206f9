import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def record_criterion(request):
    """Collects one PASS/FAIL line per acceptance criterion for the summary."""
    lines = request.config._acceptance_lines

    def record(line):
        lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
