_acceptance_results = []


def record_acceptance(number: int, passed: bool, detail: str, elapsed: float) -> None:
    _acceptance_results.append((number, passed, detail, elapsed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail, elapsed in sorted(_acceptance_results):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {status} ({elapsed:.2f}s) {detail}")
