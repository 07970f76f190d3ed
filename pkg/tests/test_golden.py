"""Golden-file corpus: committed problem files with byte-exact outputs."""

import json
import pathlib
import subprocess
import sys

import pytest

from arcmeasure.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"
MANIFEST = json.loads((GOLDEN / "manifest.json").read_text("utf-8"))
CASES = [(c["problem"], tuple(c["flags"]), c["expected"])
         for c in MANIFEST["cases"]]


@pytest.mark.parametrize("problem,flags,expected",
                         CASES, ids=[c[0] for c in CASES])
def test_output_matches_committed_golden(problem, flags, expected, capsys):
    want = (GOLDEN / expected).read_text("utf-8")
    runs = []
    for _ in range(2):
        code = main([str(GOLDEN / problem), *flags])
        assert code == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == want
    assert runs[1] == want


def test_corpus_is_stable_under_subprocess_runs():
    for case in MANIFEST["cases"]:
        want = (GOLDEN / case["expected"]).read_text("utf-8")
        result = subprocess.run(
            [sys.executable, "-m", "arcmeasure.cli",
             str(GOLDEN / case["problem"]), *case["flags"]],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
        assert result.stdout == want, case["problem"]
