import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """One verdict line per acceptance criterion."""
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            num = int(nodeid.split("test_criterion_")[1].split("_")[0])
            if outcome != "passed" or num not in verdicts:
                verdicts[num] = "PASS" if outcome == "passed" else "FAIL"
    if not verdicts:
        return
    mod = sys.modules.get("test_acceptance")
    titles = getattr(mod, "CRITERIA", {})
    terminalreporter.section("acceptance criteria")
    for num in sorted(verdicts):
        terminalreporter.write_line(f"{verdicts[num]} criterion {num}: {titles.get(num, '')}")
    skipped = getattr(mod, "PELL_SKIPPED", [])
    if skipped:
        checked = getattr(mod, "PELL_CHECKED", 0)
        head = ", ".join(map(str, skipped[:8]))
        terminalreporter.write_line(
            f"note criterion 9: {checked} values of m = 2p confirmed minimal by brute force over y < 10^5; "
            f"{len(skipped)} skipped (fundamental y >= 10^5, Pell equation checked only): {head}, ..."
        )
