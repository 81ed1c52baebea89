from __future__ import annotations

# criterion number -> (passed, detail, seconds); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail, dt = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  ({dt:.1f}s)  {detail}")
