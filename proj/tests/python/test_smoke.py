import json
import pathlib

import pytest

import metalogic

PROOFS = pathlib.Path(__file__).resolve().parent.parent / "data" / "proofs"
GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden" / "inputs"


def test_parse():
    r = metalogic.parse("(forall x (= x x))")
    assert r["sexpr"] == "(forall x (= x x))"
    assert r["free_vars"] == []
    assert r["size"] == 2


def test_classify_matches_cli():
    assert metalogic.classify("(exists x (= x 0))") == {"sigma": 1, "pi": 2, "dp": 1, "pdp": 1}


def test_code_roundtrip():
    c = metalogic.encode("(= 0 0)")
    assert c == 6192591036827
    assert metalogic.decode(c) == "(= 0 0)"
    t = metalogic.encode("(+ 1 x)", term=True)
    assert metalogic.decode(t) == "(+ 1 x)"


def test_errors():
    with pytest.raises(metalogic.ParseError):
        metalogic.parse("(forall x")
    with pytest.raises(metalogic.NotACodeError):
        metalogic.decode(12)
    with pytest.raises(ValueError):
        metalogic.forces("0", "(exists x (X x))")


def test_forces():
    phi = "(exists x (and (< x (num 3)) (X x)))"
    assert metalogic.forces("001", phi) == "forced"
    assert metalogic.forces("00", phi) == "not-forced"


def test_check_model():
    r = metalogic.check_model(json.loads((GOLDEN / "hf3.json").read_text()))
    assert r["as1"]["holds"] and r["ext"]["holds"]
    assert not r["as2"]["holds"]


def test_check_proof():
    ok = metalogic.check_proof(json.loads((PROOFS / "identity.json").read_text()))
    assert ok == {"valid": True}
    bad = metalogic.check_proof(json.loads((PROOFS / "identity_bad_mp.json").read_text()))
    assert not bad["valid"] and bad["line"] == 5
