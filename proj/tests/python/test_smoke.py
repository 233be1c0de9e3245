import json
import os
import subprocess
from fractions import Fraction

import pytest

import p2quot


def test_gamma_returns_exact_fractions():
    assert p2quot.gamma_c([9, 4, 4, 4, 4, 4, 1], [1, 7]) == 0
    assert p2quot.gamma_l([9, 4, 4, 4, 4, 4, 1], [2, 3, 4, 5, 6]) == 0
    g = p2quot.gamma_c([9, 4, 4, 4, 4, 4, 1], [2, 3])
    assert g == Fraction(6)
    assert isinstance(g, Fraction)


def test_normalize_sorts_and_rescales():
    out = p2quot.normalize([4, 18, 8])
    assert out["weights"] == [9, 4, 2]
    assert out["perm"] == [1, 2, 0]
    assert out["scale"] == Fraction(2)


def test_cone_position_tags():
    assert p2quot.cone_position([7, 5, 4, 3, 2, 1])["tag"] == "chamber"
    wall = p2quot.cone_position([9, 4, 4, 4, 4, 4, 1])
    assert wall["tag"] == "wall"
    assert wall["walls"] == [[1, 7]]
    assert p2quot.cone_position([5, 2, 2, 2, 2])["tag"] == "empty-quotient"


def test_ip_values_and_invariance():
    assert p2quot.ip([9, 4, 4, 4, 4, 4, 1]) == [1, 0, 7, 0, 13, 0, 14, 0, 13, 0, 7, 0, 1]
    assert p2quot.ip([6, 6, 6, 6, 1, 1]) == [1, 0, 2, 0, 3, 0, 2, 0, 1]
    assert p2quot.ip([2, 1, 1, 1, 1]) == [1, 0, 1]
    assert p2quot.ip([9, 4, 4, 4, 4, 4, 1]) == p2quot.ip([18, 8, 8, 8, 8, 8, 2])


def test_six_point_oracle_agrees():
    for w in ([7, 5, 4, 3, 2, 1], [6, 6, 6, 6, 2, 1], [2, 2, 2, 1, 1, 1]):
        assert p2quot.ip(w) == p2quot.ip_closed_form(w)
    assert p2quot.six_case([7, 5, 4, 3, 2, 1]) == 3
    assert p2quot.count_excluded_collinear_triples([7, 5, 4, 3, 2, 1]) == 2


def test_small_resolution_round_trip():
    cand = p2quot.find_small_resolution([9, 4, 4, 4, 4, 4, 1])
    assert cand == [27, 11, 12, 12, 12, 12, 3]
    rep = p2quot.is_small([9, 4, 4, 4, 4, 4, 1], cand)
    assert rep["verdict"] is True
    assert p2quot.chamber_poincare(cand) == p2quot.ip([9, 4, 4, 4, 4, 4, 1])


def test_singularities_and_verify():
    rep = p2quot.singularity_report([6, 6, 6, 6, 2, 1])
    assert rep["curves"] == []
    assert rep["smooth_points"] == [[1, 5, 6], [2, 5, 6], [3, 5, 6], [4, 5, 6]]
    check = p2quot.verify_six(samples=50, max_weight=10, seed=3)
    assert check["matches"] == check["samples"] == 50


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        p2quot.ip([0, 0, 0])
    with pytest.raises(ValueError):
        p2quot.chamber_poincare([9, 4, 4, 4, 4, 4, 1])


def cli():
    path = os.environ.get("P2QUOT_CLI")
    if not path:
        pytest.skip("P2QUOT_CLI not set")
    return path


def run_cli(*args):
    return subprocess.run([cli(), *args], capture_output=True, text=True)


def test_cli_json_round_trip():
    out = run_cli("ip", "--weights", "9,4,4,4,4,4,1", "--json")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["schema_version"] == "1"
    assert payload["command"] == "ip"
    assert payload["input_weights"] == [9, 4, 4, 4, 4, 4, 1]
    assert payload["result"]["coefficients"] == [1, 0, 7, 0, 13, 0, 14, 0, 13, 0, 7, 0, 1]
    assert payload["result"]["coefficients"] == p2quot.ip([9, 4, 4, 4, 4, 4, 1])

    again = run_cli("ip", "--weights", "9,4,4,4,4,4,1", "--json")
    assert json.loads(again.stdout) == payload


def test_cli_matches_module_on_six_points():
    out = run_cli("n6-formula", "--weights", "7,5,4,3,2,1", "--json")
    payload = json.loads(out.stdout)
    assert payload["result"]["case"] == 3
    assert payload["result"]["excluded_collinear_triples"] == 2
    assert payload["result"]["poly"]["coefficients"] == p2quot.ip_closed_form([7, 5, 4, 3, 2, 1])


def test_cli_exit_codes():
    ok = run_cli("position", "--weights", "7,5,4,3,2,1")
    assert ok.returncode == 0
    assert "chamber" in ok.stdout
    bad = run_cli("position", "--weights", "0,0,0")
    assert bad.returncode == 2
    assert bad.stderr
    parse_fail = run_cli("position", "--weights")
    assert parse_fail.returncode == 2
