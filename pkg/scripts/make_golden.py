"""Regenerate the golden CLI reports under tests/golden/.

Reports are deterministic apart from the timestamp field; tests compare
against these files with the timestamp dropped.
"""

import os
from pathlib import Path

from latcayley.cli import main

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"

# paths are relative to the repo root so the stored reports stay portable
CASES = {
    "check_idp_unit_square.json": [
        "check",
        "--property",
        "idp",
        "fixtures/unit_square.json",
    ],
    "check_level_ex19_cayley.json": [
        "check",
        "--property",
        "level",
        "fixtures/ex19_cayley.json",
    ],
    "reproduce_example_1_9_3_1.json": [
        "reproduce",
        "example_1_9",
        "--params",
        "3",
        "1",
    ],
    "verify_thm_0_1.json": [
        "verify",
        "thm_0_1",
        "--trials",
        "3",
        "--seed",
        "7",
        "--dim-max",
        "2",
        "--coord-bound",
        "3",
        "--dilation-bound",
        "2",
    ],
}


def run() -> None:
    os.chdir(ROOT)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        out = GOLDEN / name
        code = main(argv + ["--format", "json", "--out", str(out)])
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    run()
