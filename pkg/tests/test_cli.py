import json
from pathlib import Path

import pytest

from pi1red.cli import parse_input, run
from pi1red.gammamod import GammaModule
from pi1red.rootdata import CATALOG_NAMES, RootDatum, standard_group

SAMPLE = str(Path(__file__).resolve().parents[1] / "samples" / "gl2_ses.json")


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(p)


def test_pi1_text_and_json(capsys):
    assert call(capsys, "pi1", "PGL", "3") == (0, "Z/3\n", "")
    code, out, _ = call(capsys, "pi1", "PGL", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pi1"] == "Z/3" and data["torsion"] == [3] and data["free_rank"] == 0


@pytest.mark.parametrize("kind", ["torus", "generic", "m"])
def test_pi1_every_resolution_kind(capsys, kind):
    assert call(capsys, "pi1", "SO", "6", "--resolution", kind)[:2] == (0, "Z/2\n")


def test_check_exact_sample(capsys):
    code, out, _ = call(capsys, "check-exact", SAMPLE)
    assert code == 0
    assert out.splitlines() == ["exact", "0 -> Z -> Z -> Z/2 -> 0"]


def test_non_exact_sequence_exits_one(capsys, tmp_path):
    data = json.loads(Path(SAMPLE).read_text())
    data["q"] = [[1, 1]]
    code, out, _ = call(capsys, "check-exact", write(tmp_path, "bad.json", data))
    assert code == 1 and out.strip()


def test_missing_field_exits_two(capsys, tmp_path):
    data = json.loads(Path(SAMPLE).read_text())
    del data["partition"]
    code, _, err = call(capsys, "check-exact", write(tmp_path, "nopart.json", data))
    assert code == 2 and "schema" in err


def test_pairing_four_exits_two(capsys, tmp_path):
    path = write(tmp_path, "p4.json", {"rank": 1, "roots": [[2], [-2]], "coroots": [[2], [-2]]})
    code, _, err = call(capsys, "pi1", path)
    assert code == 2 and "pairing" in err


def test_malformed_json_exits_two(capsys, tmp_path):
    code, _, err = call(capsys, "pi1", write(tmp_path, "junk.json", "{not json"))
    assert code == 2 and err.startswith("error:")


def test_unknown_verb_and_option(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "pi1", "PGL", "3", "--bogus")[0] == 2


def test_parse_input_datum(tmp_path):
    path = write(tmp_path, "gl2.json", {"rank": 2, "roots": [[1, -1], [-1, 1]],
                                        "coroots": [[1, -1], [-1, 1]]})
    d = parse_input(path)
    assert isinstance(d, RootDatum) and d == standard_group("GL", 2)


def test_invariants(capsys):
    code, out, _ = call(capsys, "invariants", "GL", "2")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["pi1"] == "Z" and lines["mu1*"] == "Z/2" and lines["semisimple"] == "no"


def test_resolve_and_qiso(capsys):
    code, out, _ = call(capsys, "resolve", "PGL", "2")
    assert code == 0 and "pi1: Z/2" in out
    code, out, _ = call(capsys, "resolve", "PGL", "2", "--resolution", "m")
    assert code == 0 and "mu_1*: Z/2" in out
    code, out, _ = call(capsys, "qiso", "PGL", "2")
    assert code == 0 and out.rstrip().endswith("quasi-isomorphic")


def test_cohomology_of_group_and_module(capsys, tmp_path):
    code, out, _ = call(capsys, "cohomology", "PGL", "2", "--json")
    assert code == 0 and json.loads(out)["H"]["0"] == "Z/2"
    sign = {"group": {"cyclic": 2}, "carrier": {"ngens": 1, "relations": []},
            "action": [[[1]], [[-1]]]}
    path = write(tmp_path, "sign.json", sign)
    assert isinstance(parse_input(path), GammaModule)
    code, out, _ = call(capsys, "cohomology", path)
    assert code == 0 and "H^1 = Z/2" in out


def test_catalog(capsys):
    code, out, _ = call(capsys, "catalog", "list")
    assert code == 0 and out.split() == list(CATALOG_NAMES)
    code, out, _ = call(capsys, "catalog", "show", "SO", "5")
    assert code == 0 and json.loads(out)["rank"] == 2


def test_output_is_deterministic(capsys):
    first = call(capsys, "cohomology", "SO", "5", "--json")
    second = call(capsys, "cohomology", "SO", "5", "--json")
    assert first == second


def test_verify_suite_subset(capsys):
    code, out, _ = call(capsys, "verify-suite", "--only", "7")
    assert code == 0 and out.startswith("[PASS] 7.")
