"""End-to-end tests of the pil command line tool.

The binary path arrives through the PIL_CLI environment variable (set by
ctest); the golden table path through PIL_GOLDEN.
"""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("PIL_CLI")
GOLDEN = os.environ.get("PIL_GOLDEN")

pytestmark = pytest.mark.skipif(CLI is None, reason="PIL_CLI not set")


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def test_count_single():
    result = run("count", "O", "1", "2", "1", "5")
    assert result.returncode == 0
    assert result.stdout == "4\n"

    result = run("count", "D", "3", "2", "2", "29")
    assert result.stdout == "8\n"

    result = run("count", "O", "0", "2", "1", "0")
    assert result.stdout == "1\n"


def test_count_families_and_range():
    assert run("count", "Ocum", "1", "2", "1", "5").stdout == "7\n"
    assert run("count", "O1u", "2", "1", "5").stdout == "3\n"
    assert run("count", "O_t", "0", "2", "1", "5", "1", "5").stdout.strip() != ""

    result = run("count", "O", "0", "2", "1", "--range", "0..5")
    assert result.returncode == 0
    assert result.stdout == "0 1\n1 1\n2 1\n3 2\n4 2\n5 3\n"


def test_count_formats():
    result = run("count", "O", "1", "2", "1", "5", "--format", "json")
    row = json.loads(result.stdout)
    assert row == {"family": "O", "j": 1, "k": 2, "b": 1, "n": 5, "value": 4}

    result = run("count", "O", "1", "2", "1", "5", "--format", "csv")
    assert result.stdout == "family,j,k,b,t,m,n,value\nO,1,2,1,,,5,4\n"

    env_result = run("count", "O", "1", "2", "1", "5", env={"PIL_FORMAT": "json"})
    assert json.loads(env_result.stdout)["value"] == 4


def test_count_usage_errors():
    assert run("count", "X", "1", "2", "1", "5").returncode == 2
    assert run("count", "O", "1", "2", "1").returncode == 2
    assert run("count", "O", "1", "2", "one", "5").returncode == 2
    assert run("count", "O", "-1", "2", "1", "5").returncode == 2


def test_count_cache(tmp_path: pathlib.Path):
    cache = tmp_path / "cache.csv"
    first = run("count", "O", "1", "2", "1", "5", "--cache", str(cache))
    assert first.returncode == 0
    assert cache.read_text() == "family,j,k,b,t,m,n,value\nO,1,2,1,,,5,4\n"
    again = run("count", "O", "1", "2", "1", "5", "--cache", str(cache))
    assert again.stdout == "4\n"


def test_map():
    result = run("map", "psi", "4^5 6 12^7 18^8 24^9 36", "2", "6")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "4^5 6^7 18^2 24^3 36^4 48^4"
    assert "n=506" in lines[1]
    assert "j_D=3" in lines[1]
    assert "j_O=3" in lines[2]

    as_json = json.loads(run("map", "psi", "4^5 6 12^7 18^8 24^9 36", "2", "6",
                             "--format", "json").stdout)
    assert as_json["image"]["partition"] == "4^5 6^7 18^2 24^3 36^4 48^4"
    assert as_json["image"]["n"] == 506
    assert as_json["input"]["j_D"] == 3

    assert run("map", "phi", "", "2", "1").stdout.splitlines()[0] == ""
    assert run("map", "phi", "1 4 8 16", "2", "2").stdout.splitlines()[0] == "1 2^2 4^2 8^2"

    bad = run("map", "phi", "3^0", "2", "1")
    assert bad.returncode == 2
    assert "3^0" in bad.stderr

    assert run("map", "sideways", "1", "2", "1").returncode == 2


def test_table29():
    result = run("table29")
    assert result.returncode == 0
    assert GOLDEN is not None
    golden = pathlib.Path(GOLDEN).read_bytes()
    assert result.stdout.encode() == golden


def test_gf():
    assert run("gf", "O", "2", "1", "10", "--coeff", "0", "-", "5").stdout == "3\n"
    assert run("gf", "O", "2", "1", "10", "--coeff", "1", "-", "5").stdout == "4\n"
    assert run("gf", "O", "2", "1", "0").stdout == "0: [ (0,0,1) ]\n"
    assert run("gf", "O_w", "2", "1", "8", "--coeff", "0", "1", "5").stdout == "1\n"

    dump = run("gf", "O", "2", "1", "5").stdout
    assert dump.splitlines()[5] == "5: [ (0,0,3), (1,0,4) ]"

    # Coefficient of q^5 z^0 in the w-derivative arrives via counting: the m
    # slot must be an integer for three-variable series.
    assert run("gf", "O", "2", "1", "10", "--coeff", "0", "2", "5").returncode == 2
    assert run("gf", "O_w", "2", "1", "10", "--coeff", "0", "-", "5").returncode == 2
    assert run("gf", "nope", "2", "1", "10").returncode == 2
    assert run("gf", "O_t", "2", "1", "1", "10").returncode == 0
    assert run("gf", "O_t", "2", "1", "2", "10").returncode == 2  # t out of range
    assert run("gf", "O", "2", "1", "10", "--coeff", "0", "-", "11").returncode == 2


def test_verify():
    result = run("verify", "beck", "--nmax", "12")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["check"] == "beck"
    assert report["pass"] is True
    assert report["failures"] == []
    assert report["grid"]["nmax"] == 12
    assert "elapsed_ms" in report

    text = run("verify", "beck", "--nmax", "10", "--format", "text")
    assert text.returncode == 0
    assert "beck: pass" in text.stdout

    assert run("verify", "beck", "--kset", "1").returncode == 2
    assert run("verify", "nothing").returncode == 2

    small = run("verify", "all", "--nmax", "8", "--jmax", "1", "--trunc", "8")
    assert small.returncode == 0
    reports = json.loads(small.stdout)
    assert len(reports) == 10
    assert all(r["pass"] for r in reports)


def test_exit_code_contract():
    assert run("count").returncode == 2
    assert run().returncode == 2
    assert run("--help").returncode == 0
