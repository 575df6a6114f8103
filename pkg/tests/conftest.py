import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, verdict, elapsed = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2} {verdict:<4} {elapsed:6.2f}s  {title}")
