import json

import pytest

import msp


@pytest.fixture
def triangle():
    return msp.generate("triangle-mwis")


def test_generate_and_validate(triangle):
    doc = json.loads(triangle)
    assert doc["n"] == 3 and doc["m"] == 3
    assert msp.validate_instance(triangle)


def test_minsum_oscillates(triangle):
    even = msp.minsum(triangle, 2)
    odd = msp.minsum(triangle, 1)
    assert even["x_hat"] == [1, 1, 1]
    assert odd["x_hat"] == [0, 0, 0]
    assert even["delta"] == [[1]] * 3
    assert odd["delta"] == [[0]] * 3


def test_tree_dp_matches_minsum(triangle):
    d = msp.minsum(triangle, 2)
    for r in range(3):
        node = msp.tree_dp(triangle, r, 2)
        assert node["optima"] == d["mu"][r]
        assert node["root_set"] == d["delta"][r]


def test_solve_lp(triangle):
    lp = msp.solve_lp(triangle)
    assert lp["opt"] == "3/2"
    assert lp["witness"] == ["1/2", "1/2", "1/2"]
    assert lp["classification"] == "unique-fractional"


def test_lift_and_girth(triangle):
    assert msp.girth(triangle) == 6
    lifted = msp.lift(triangle, 2, seed=7)
    assert json.loads(lifted)["n"] == 6
    assert msp.girth(lifted) >= 6


def test_oscillation_and_convergence(triangle):
    rep = msp.oscillation(triangle, t_max=4)
    assert rep["all_pass"] and rep["rounding_pass"] and rep["pinning_pass"]

    path = msp.generate("path-matching")
    conv = msp.convergence(path, slack=1)
    assert conv["preconditions_met"]
    assert conv["c"] == "1/2"
    assert conv["t_star"] == 5
    assert conv["x_star"] == [1, 0]
    assert conv["pass"]


def test_sweep():
    cfg = json.dumps(
        {"family": "random", "params": {"n": 3, "m": 3}, "seeds": [0, 4], "t_max": 2}
    )
    out = msp.sweep(cfg)
    assert out["violations"] == 0
    assert out["csv"].startswith("instance_id,r,t,parity,")


def test_errors_surface():
    with pytest.raises(msp.MspError):
        msp.validate_instance("{}")
