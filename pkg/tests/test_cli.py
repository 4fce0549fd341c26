"""CLI contract: subcommands, exit codes, JSON schema."""

import json

import pytest

from crysref.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_verify_all_pass(capsys):
    code, rep = run_json(capsys, "verify", "C_alpha", "3", "--what", "all")
    assert code == 0
    assert rep["schema"] == 1
    assert rep["pass"] is True
    assert rep["exit_code"] == 0


def test_verify_x_relation(capsys):
    code, rep = run_json(capsys, "verify", "A_alpha", "4", "--what", "x-relation")
    assert code == 0
    assert len(rep["relators"]) == 1


def test_verify_extra_order(capsys):
    code, rep = run_json(capsys, "verify", "C_alpha", "2", "--what", "extra-order")
    assert code == 0
    assert rep["extra_order"]["order"] == 2


def test_verify_invalid_rank_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "C_alpha", "0")
    assert code == 64
    assert "rank" in err


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "Z_gamma", "2")
    assert code == 64


def test_unknown_subcommand_is_usage_error(capsys):
    # argparse exits from inside parse_args on a bad subcommand choice;
    # main converts that to 64
    code = main(["frobnicate"])
    capsys.readouterr()
    assert code == 64


def test_abelianize_output(capsys):
    code, out, _ = run(capsys, "abelianize", "C_alpha", "2")
    assert code == 0
    assert out.strip() == "2 2 2 2"


def test_classes_json(capsys):
    code, rep = run_json(capsys, "classes", "C_alpha", "1")
    assert code == 0
    assert rep["count"] == 4


def test_braid_replay_mode(capsys):
    code, rep = run_json(capsys, "braid", "C_alpha", "3", "--mode", "replay")
    assert code == 0
    assert rep["pass"] is True
    assert rep["space"] == "PuncturedSphere4"


def test_braid_rank_one_routes_to_free_group(capsys):
    code, rep = run_json(capsys, "braid", "A_alpha", "2")
    assert code == 0
    assert rep["space"] == "FreeRank3"


def test_braid_replay_unavailable_elsewhere(capsys):
    code, _, err = run(capsys, "braid", "A_alpha", "3", "--mode", "replay")
    assert code == 64


def test_hecke_gdaha(capsys):
    code, rep = run_json(capsys, "hecke", "gdaha-check", "D4", "2")
    assert code == 0
    assert rep["pass"] is True
    assert rep["legs"] == [2, 2, 2, 2]


def test_hecke_rank_one(capsys):
    code, rep = run_json(capsys, "hecke", "rank-one")
    assert code == 0 and rep["pass"] is True


def test_hecke_tripledot(capsys):
    code, rep = run_json(capsys, "hecke", "tripledot", "3")
    assert code == 0 and rep["pass"] is True


def test_prove_and_replay_round_trip(capsys, tmp_path):
    code, rep = run_json(capsys, "prove", "C_alpha", "2", "s1 s1")
    assert code == 0 and rep["status"] == "proved"
    cert = tmp_path / "cert.txt"
    cert.write_text(rep["certificate"])
    code2, rep2 = run_json(capsys, "replay", "C_alpha", "2", "s1 s1", str(cert))
    assert code2 == 0 and rep2["pass"] is True
    # same certificate against a different word fails
    code3, rep3 = run_json(capsys, "replay", "C_alpha", "2", "s2 s2", str(cert))
    assert code3 == 1 and rep3["pass"] is False


def test_prove_nontrivial_exits_one(capsys):
    code, rep = run_json(capsys, "prove", "C_alpha", "2", "s1")
    assert code == 1 and rep["status"] == "disproved"


def test_prove_unknown_exits_two(capsys):
    # commutator of free generators: no obstruction, no proof
    code, rep = run_json(capsys, "prove", "C_alpha", "1", "s1 s2 s1^-1 s2^-1",
                         "--artin", "--max-depth", "3")
    assert code == 2 and rep["status"] == "unknown"


def test_export_dot_and_text(capsys):
    code, out, _ = run(capsys, "export", "A_alpha", "3", "--dot")
    assert code == 0 and out.startswith("graph")
    code2, out2, _ = run(capsys, "export", "A_alpha", "3", "--text")
    assert code2 == 0 and out2.startswith("gens:")


def test_json_round_trips(capsys):
    _, rep = run_json(capsys, "verify", "G611", "2")
    assert json.loads(json.dumps(rep)) == rep


EXIT_MATRIX = (
    [("C_alpha", n) for n in (1, 2, 3, 4)]
    + [("A_alpha", n) for n in (2, 3, 4)]
    + [(f, n) for f in ("G311", "G411", "G611") for n in (1, 2, 3)]
)


@pytest.mark.parametrize("family,n", EXIT_MATRIX, ids=str)
def test_exit_code_contract_verify_matrix(capsys, family, n):
    code, rep = run_json(capsys, "verify", family, str(n))
    assert code == 0 and rep["pass"] is True
    code2, rep2 = run_json(capsys, "abelianize", family, str(n))
    assert code2 == 0
