OUTCOMES = []


def pytest_terminal_summary(terminalreporter):
    if OUTCOMES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(OUTCOMES):
            terminalreporter.write_line(line)
