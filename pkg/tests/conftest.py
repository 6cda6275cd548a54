from __future__ import annotations

import json
import random
import sys
from pathlib import Path

import pytest

from joinring.groups import cyclic, dihedral, from_table, symmetric

DATA = Path(__file__).parent / "data"


def zoo():
    """Small groups exercised throughout the suite."""
    return [cyclic(n) for n in range(1, 7)] + [dihedral(6), dihedral(8), symmetric(3)]


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def f21():
    obj = json.loads((DATA / "f21.json").read_text())
    return from_table(obj["table"], name="F21")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(results.values()):
        terminalreporter.write_line(line[1])
