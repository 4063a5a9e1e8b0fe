"""Command-line verbs: payloads, schemas, exit codes, determinism."""

import json
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from qgha.cli import main


def _load_schemas():
    out = {}
    for entry in (resources.files("qgha") / "schemas").iterdir():
        if entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            out[doc["$id"]] = doc
    return out


SCHEMAS = _load_schemas()
REGISTRY = Registry().with_resources(
    [(sid, Resource.from_contents(doc)) for sid, doc in SCHEMAS.items()]
)

BASE = ["--field", "GF(5)", "--q", "2", "--f", "h^2", "--g", "h"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv, schema=None):
    code, out, err = run_cli(capsys, *argv, "--json")
    assert code == 0, err
    payload = json.loads(out)
    if schema is not None:
        jsonschema.Draft202012Validator(SCHEMAS[schema], registry=REGISTRY).validate(payload)
    return payload


def test_normalize(capsys):
    code, out, _ = run_cli(capsys, "normalize", *BASE, "y*x")
    assert code == 0
    assert out.strip() == "h + x * 2 * y"
    payload = run_json(capsys, "normalize", *BASE, "y*x", schema="qgha:element")
    assert payload["element"] == "h + x * 2 * y"
    assert payload["terms"] == [{"x": 0, "y": 0, "h": "h"}, {"x": 1, "y": 1, "h": "2"}]


def test_multiply(capsys):
    payload = run_json(capsys, "multiply", *BASE, "y", "x", schema="qgha:element")
    assert payload["element"] == "h + x * 2 * y"


def test_theta(capsys):
    payload = run_json(capsys, "theta", *BASE, "--k", "2", schema="qgha:poly")
    assert payload == {"k": 2, "poly": "h^2 + 2*h"}


def test_conformal(capsys):
    args = ["conformal", "--field", "Q", "--q", "1", "--f", "h^2", "--g", "h^2 - h"]
    payload = run_json(capsys, *args, schema="qgha:conformal")
    assert payload["status"] == "conformal"
    assert payload["a"] == "h"
    assert payload["residuals"]["ok"] is True
    not_conf = run_json(
        capsys, "conformal", "--field", "Q", "--q", "1", "--f", "h^2", "--g", "1",
        schema="qgha:conformal",
    )
    assert not_conf == {"status": "not_conformal"}


def test_center(capsys):
    args = ["center", "--field", "GF(5)", "--q", "2", "--f", "h^2", "--g", "h^2 + 3*h",
            "--degree-cap", "2048", "--max-xy", "4", "--max-h", "8"]
    payload = run_json(capsys, *args, schema="qgha:center")
    assert payload["dimension"] == 2
    assert payload["basis"][0] == "1"


def test_domain(capsys):
    payload = run_json(capsys, "domain", *BASE, schema="qgha:domain")
    assert payload == {"is_domain": True, "reason": "q nonzero and deg f >= 1"}
    bad = run_json(
        capsys, "domain", "--field", "Q", "--q", "2", "--f", "3", "--g", "h",
        schema="qgha:domain",
    )
    assert bad["is_domain"] is False
    assert bad["witness"]["product"] == "0"


def test_orbits(capsys):
    payload = run_json(
        capsys, "orbits", "--field", "GF(5)", "--q", "2", "--f", "h^3", "--g", "h",
        "--k", "4", schema="qgha:orbits",
    )
    assert payload["orbits"] == [
        {"period": 1, "values": ["0"]},
        {"period": 1, "values": ["1"]},
        {"period": 1, "values": ["4"]},
        {"period": 2, "values": ["2", "3"]},
    ]


def test_mu(capsys):
    payload = run_json(
        capsys, "mu", *BASE, "--alpha", "1", "--beta", "3", "--k", "5", schema="qgha:mu"
    )
    assert payload == {
        "period": 1,
        "values": ["1"],
        "anchor": "3",
        "muPeriod": 4,
        "muValues": ["3", "2", "0", "1", "3"],
    }
    infinite = run_json(
        capsys, "mu", "--field", "Q", "--q", "1", "--f", "h^2", "--g", "h",
        "--alpha", "1", "--beta", "3", schema="qgha:mu",
    )
    assert infinite["muPeriod"] == 0


def test_nu(capsys):
    payload = run_json(capsys, "nu", *BASE, "--alpha", "1", "--k", "4", schema="qgha:nu")
    assert payload == {"alpha": "1", "values": ["0", "1", "3", "2", "0"]}


def test_build_module(capsys):
    payload = run_json(
        capsys, "build-module", *BASE,
        "--family", "A", "--alpha", "1", "--beta", "3", "--gamma", "2",
        schema="qgha:module",
    )
    assert payload["family"] == "A" and payload["dim"] == 4
    assert payload["mu"] == {"anchor": "3", "period": 4}
    assert payload["matrices"]["X"][0] == ["0", "0", "0", "2"]
    c_payload = run_json(
        capsys, "build-module", *BASE, "--family", "C", "--alpha", "1", "--dim", "4",
        schema="qgha:module",
    )
    assert c_payload["alpha"] == "1"
    assert c_payload["matrices"]["Y"][0] == ["0", "1", "0", "0"]


def test_verify_relations(capsys):
    payload = run_json(
        capsys, "verify-relations", *BASE,
        "--family", "B", "--alpha", "1", "--beta", "3", "--gamma", "3",
        schema="qgha:relations",
    )
    assert payload["ok"] is True
    assert all(all(v == "0" for v in row) for row in payload["residuals"]["yx"])


def test_check_simple(capsys):
    payload = run_json(
        capsys, "check-simple", *BASE, "--family", "C", "--alpha", "1", "--dim", "4",
        "--brute", schema="qgha:simple",
    )
    assert payload["simple"] is True and payload["bruteforce"] is True
    nonsimple = run_json(
        capsys, "check-simple", *BASE, "--family", "C", "--alpha", "0", "--dim", "2",
        "--brute", schema="qgha:simple",
    )
    assert nonsimple["simple"] is False and nonsimple["bruteforce"] is False


def test_check_iso(capsys):
    shifted = run_json(
        capsys, "check-iso", *BASE,
        "--family", "A", "--alpha", "1", "--beta", "3", "--gamma", "2",
        "--family2", "A", "--alpha2", "1", "--beta2", "2", "--gamma2", "2",
        "--brute", schema="qgha:iso",
    )
    assert shifted == {"isomorphic": True, "bruteforce": True}
    twisted = run_json(
        capsys, "check-iso", *BASE,
        "--family", "A", "--alpha", "1", "--beta", "3", "--gamma", "2",
        "--family2", "A", "--alpha2", "1", "--beta2", "3", "--gamma2", "1",
        schema="qgha:iso",
    )
    assert twisted == {"isomorphic": False}


def test_enumerate(capsys):
    payload = run_json(
        capsys, "enumerate", "--field", "GF(5)", "--q", "2", "--f", "h^3", "--g", "h",
        "--dim", "2", schema="qgha:enumerate",
    )
    assert payload["count"] == 4
    assert all(m["family"] == "A" for m in payload["modules"])


def test_enumerate_with_extensions(capsys):
    payload = run_json(
        capsys, "enumerate", "--field", "GF(2)", "--q", "1", "--f", "h+1",
        "--g", "h^2+h+1", "--dim", "1", "--ext-bound", "2", schema="qgha:enumerate",
    )
    assert payload["count"] == 0
    assert len(payload["extensions"]) == 2
    assert all(m["field"].startswith("GF(2^2)") for m in payload["extensions"])


def test_exit_code_2_on_parse_errors(capsys):
    code, _, err = run_cli(capsys, "normalize", *BASE, "x +")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "theta", "--field", "GF(5)", "--q", "2",
                           "--f", "h^^2", "--g", "h", "--k", "1")
    assert code == 2 and "error:" in err


def test_exit_code_2_on_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["normalize", "--field", "GF(5)", "--f", "h^2", "--g", "h", "x"])  # no --q
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-verb"])
    assert e.value.code == 2


def test_exit_code_1_on_semantic_errors(capsys):
    code, _, err = run_cli(capsys, "domain", "--field", "GF(4)", "--q", "1",
                           "--f", "h", "--g", "h")
    assert code == 1 and "error:" in err
    # center needs deg f >= 2
    code, _, err = run_cli(capsys, "center", *["--field", "Q", "--q", "2", "--f", "h",
                                               "--g", "h"], "--max-xy", "2", "--max-h", "2")
    assert code == 1
    # enumeration over an infinite field
    code, _, err = run_cli(capsys, "enumerate", "--field", "Q", "--q", "2",
                           "--f", "h^2", "--g", "h", "--dim", "1")
    assert code == 1
    # mu needs q != 0 for its period
    code, _, err = run_cli(capsys, "mu", "--field", "GF(5)", "--q", "0", "--f", "h^2",
                           "--g", "h", "--alpha", "1", "--beta", "3")
    assert code == 1


def test_negative_verdicts_still_exit_0(capsys):
    code, out, _ = run_cli(capsys, "check-iso", *BASE,
                           "--family", "C", "--alpha", "1", "--dim", "4",
                           "--family2", "C", "--alpha2", "2", "--dim2", "4")
    assert code == 0 and "isomorphic: False" in out


def test_enumerate_deterministic(capsys):
    args = ["enumerate", "--field", "GF(5)", "--q", "2", "--f", "h^3", "--g", "h",
            "--dim", "4", "--json"]
    outputs = []
    for _ in range(3):
        code = main(list(args))
        outputs.append(capsys.readouterr().out)
        assert code == 0
    assert outputs[0] == outputs[1] == outputs[2]
