"""Shared fixtures: a clean environment, an in-process CLI runner, and the
acceptance-criteria summary printed at the end of the run."""

from __future__ import annotations

import re
from pathlib import Path

import pytest

from pgx.cli import main

REPO_ROOT = Path(__file__).resolve().parent.parent
CENSUS_DIR = REPO_ROOT / "census"


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    """Keep ambient PGX_* variables from leaking into configuration tests."""
    for var in ("PGX_BRUTE_CAP", "PGX_CENSUS_DIR", "PGX_FORMAT"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process: run_cli(*argv) -> (exit_code, stdout, stderr)."""

    def run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture(scope="session")
def census_dir() -> Path:
    assert CENSUS_DIR.is_dir(), "shipped census directory is missing"
    return CENSUS_DIR


_ACCEPTANCE_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_CRITERIA = {
    1: "spectrum-formula counts equal brute-force graph counts on the full inventory",
    2: "arc, mutual-pair and edge identities hold on the full inventory",
    3: "phi-sum multiplicativity on 200 random coprime pairs",
    4: "phi recurrences, closed form, sandwich and ratio sweeps (primes <= 97, exponents <= 12)",
    5: "expected maximizer verified for every odd non-square-free order <= 2000 (exponents <= 3)",
    6: "phi argmax pair and equal mutual counts for odd primes <= 23 at exponent 3",
    7: "edge argmax at order 8, odd primes <= 23, and order 16 with and without the census",
    8: "exploratory scan to 2000 completes with a well-formed report",
    9: "identical CLI invocations produce byte-identical output",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One visible pass/fail line per acceptance criterion."""
    results: dict[int, bool] = {}
    for outcome, reports in terminalreporter.stats.items():
        if outcome not in ("passed", "failed", "error"):
            continue
        for rep in reports:
            nodeid = getattr(rep, "nodeid", "")
            m = _ACCEPTANCE_RE.search(nodeid)
            if m is None:
                continue
            if outcome == "passed" and getattr(rep, "when", "call") != "call":
                continue
            num = int(m.group(1))
            results[num] = results.get(num, True) and outcome == "passed"
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            word = "PASS" if results[num] else "FAIL"
            terminalreporter.write_line(f"criterion {num}: {word} - {_CRITERIA[num]}")
