import pytest

import amtlab


def test_example_has_two_stable_models():
    report = amtlab.solve(amtlab.example_program(), lo=-5, hi=5)
    assert report["schema"] == 1
    models = [
        (tuple(m["atoms"]["regular"]), tuple(m["atoms"]["theory"]))
        for m in report["models"]
    ]
    assert (("a",), ("&sum{x;y} = 4", "&sum{y;z} = 2")) in models
    assert ((), ("&sum{x;y} != 4",)) in models
    assert len(models) == 2


def test_witness_satisfies_equations():
    report = amtlab.solve(amtlab.example_program(), lo=-5, hi=5)
    big = next(m for m in report["models"] if m["atoms"]["regular"] == ["a"])
    w = big["witness"]
    assert w["x"] + w["y"] == 4
    assert w["y"] + w["z"] == 2


def test_modes_agree_on_example():
    report = amtlab.diff(amtlab.example_program(), lo=-4, hi=4)
    assert report["agree"] is True
    assert report["mode_models"] == {"transform": 2, "htc-tau": 2, "htc-tau2": 2}


def test_double_negation_is_not_equivalent():
    report = amtlab.equiv("p.", "not not p.", lo=-2, hi=2)
    assert report["equivalent"] is False
    assert report["counterexample"]["here"] == {}
    assert report["counterexample"]["there"] == {"p": True}


def test_corpus_is_deterministic():
    assert amtlab.corpus(7) == amtlab.corpus(7)
    assert amtlab.corpus(7) != amtlab.corpus(8)


def test_parse_error_raises():
    with pytest.raises(amtlab.AmtError):
        amtlab.solve("a :- .")
