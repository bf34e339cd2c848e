import json
import pathlib

import pytest

import contingent

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_linda_fails_implication_only():
    report = contingent.check(load("linda.json"), ["nt", "i"])
    assert not report["pass"]
    by_axiom = {r["axiom"]: r for r in report["axioms"]}
    assert by_axiom["nt"]["pass"]
    assert by_axiom["i"]["violations"][0]["formulas"] == ["(t & f)", "t"]


def test_canonical_model_is_sound():
    out = contingent.build("canonical-sound", assessment=load("linda.json"))
    assert out["model"]["states"]
    lifted = contingent.build("product", assessment=load("linda.json"))
    assert len(lifted["model"]["states"]) == 8


def test_interval_construction_refuses_linda():
    with pytest.raises(contingent.PreconditionError, match="Axiom I"):
        contingent.build("interval-additive", assessment=load("linda.json"))


def test_voting_subtheory():
    report = contingent.identify(load("voting.json"), load("voting_theory.json"))
    assert report["subtheory"]["generators"] == ["r <-> !b"]
    assert report["subtheory"]["unique"]


def test_hedge_rationalizability():
    model = load("hedge_model.json")
    strategies = load("hedge_menu.json")
    assert contingent.rationalize(model, strategies)["rationalizable"]
    additive = contingent.rationalize(model, strategies, additive_only=True)
    assert not additive["rationalizable"]


def test_choquet_is_exact():
    model = load("layered_source.json")
    assert contingent.choquet(model, ["3", "4", "2"]) == "7/3"


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        contingent.check({"atoms": ["p"], "pi": {"p &": "1/2"}}, ["nt"])


def test_module_origin_matches_stage():
    stage = __import__("os").environ.get("CONTINGENT_PY_STAGE")
    if stage:
        assert contingent._core.__file__.startswith(stage)
