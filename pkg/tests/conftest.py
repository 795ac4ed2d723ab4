"""Shared test plumbing.

The terminal-summary hook prints one PASS/FAIL line per acceptance
criterion (the tests in test_acceptance.py) so the gate can be read off
the bottom of any full run.
"""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "::" in nodeid:
                rows.append((nodeid.split("::")[-1], status))
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, status in sorted(rows):
        flag = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"{flag}  {name}")
    failed = sum(1 for _, s in rows if s != "passed")
    terminalreporter.write_line(
        f"{len(rows) - failed}/{len(rows)} acceptance criteria passed"
    )
