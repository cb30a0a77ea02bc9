"""Collects acceptance outcomes and prints them after the run."""

ACCEPTANCE = {}


def record(num, passed, detail):
    ACCEPTANCE[num] = (bool(passed), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(
            "criterion %2d: %s  %s" % (num, "PASS" if passed else "FAIL", detail))
