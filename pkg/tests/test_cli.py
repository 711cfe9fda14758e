import json

import pytest

from sbuntwist.cli import main, parse_cycle_document, render_cycle_document
from sbuntwist.cycles import BrauerLabel


def write_doc(tmp_path, doc, name="cycle.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


CHAIN_DOC = {
    "label": "gamma",
    "d": 10,
    "orbits": [{"degree": 6, "mult": 12}, {"degree": 3, "mult": 3}],
}


# --- document handling ---

def test_parse_assigns_positional_ids():
    cycle, declared = parse_cycle_document(CHAIN_DOC)
    assert [o.id for o in cycle.orbits] == ["x1", "x2"]
    assert declared is None


def test_parse_reads_declared_target():
    doc = dict(CHAIN_DOC, declared_target="gamma_inv")
    _, declared = parse_cycle_document(doc)
    assert declared is BrauerLabel.GAMMA_INVERSE


@pytest.mark.parametrize(
    "doc,needle",
    [
        ({"label": "nope", "d": 1}, "label"),
        ({"label": "gamma"}, "'d'"),
        ({"label": "gamma", "d": 0}, "'d'"),
        ({"label": "gamma", "d": True}, "'d'"),
        ({"label": "gamma", "d": 1, "orbits": [{"degree": 4, "mult": 1}]}, "orbits[0].degree"),
        ({"label": "gamma", "d": 1, "orbits": [{"degree": 3, "mult": -1}]}, "orbits[0].mult"),
        ({"label": "gamma", "d": 1, "orbits": [{"degree": 3}]}, "orbits[0]"),
        ({"label": "gamma", "d": 1, "bogus": 2}, "bogus"),
        ({"label": "gamma", "d": 1, "declared_target": "x"}, "declared_target"),
    ],
)
def test_parse_errors_name_the_offending_field(doc, needle):
    from sbuntwist.cli import DocumentError

    with pytest.raises(DocumentError, match=None) as err:
        parse_cycle_document(doc)
    assert needle in str(err.value)


def test_document_round_trip_is_canonical_and_idempotent():
    messy = {
        "label": "gamma",
        "d": 10,
        "orbits": [{"degree": 3, "mult": 3}, {"degree": 6, "mult": 12}],
    }
    cycle, declared = parse_cycle_document(messy)
    once = render_cycle_document(cycle, declared)
    cycle2, declared2 = parse_cycle_document(once)
    twice = render_cycle_document(cycle2, declared2)
    assert once == twice
    assert once["orbits"][0] == {"degree": 6, "mult": 12}  # sorted by -mult


# --- exit codes and outputs ---

def test_check_consistent_cycle(tmp_path, capsys):
    rc = main(["check", write_doc(tmp_path, CHAIN_DOC)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pass" in out and "FAIL" not in out


def test_check_machine_format(tmp_path, capsys):
    rc = main(["check", write_doc(tmp_path, CHAIN_DOC), "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["consistent"] is True
    assert data["self_intersection"] == 9
    assert data["anticanonical_degree"] == 9
    assert data["genus"] == 1


def test_check_inconsistent_cycle_exits_1(tmp_path, capsys):
    doc = {"label": "gamma", "d": 2, "orbits": [{"degree": 3, "mult": 2}]}
    rc = main(["check", write_doc(tmp_path, doc), "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert data["e3"] is False
    assert data["anticanonical_degree"] == 12


def test_check_parse_error_exits_2(tmp_path, capsys):
    rc = main(["check", write_doc(tmp_path, {"label": "gamma", "d": -3})])
    err = capsys.readouterr().err
    assert rc == 2
    assert "'d'" in err


def test_push_fresh_phi6_reproduces_anticanonical_image(tmp_path, capsys):
    doc = {"label": "gamma", "d": 1, "orbits": []}
    rc = main(["push", write_doc(tmp_path, doc), "--kind", "phi6"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data == {"label": "gamma_inv", "d": 5, "orbits": [{"degree": 6, "mult": 6}]}


def test_push_output_round_trips_through_check(tmp_path, capsys):
    rc = main(["push", write_doc(tmp_path, CHAIN_DOC), "--kind", "phi6", "--center", "x1"])
    pushed = capsys.readouterr().out
    assert rc == 0
    path = tmp_path / "pushed.json"
    path.write_text(pushed)
    assert main(["check", str(path)]) == 0


def test_push_missing_center_exits_2_and_names_it(tmp_path, capsys):
    rc = main(["push", write_doc(tmp_path, CHAIN_DOC), "--kind", "phi3", "--center", "x9"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "x9" in err


def test_push_wrong_degree_exits_1(tmp_path, capsys):
    rc = main(["push", write_doc(tmp_path, CHAIN_DOC), "--kind", "phi3", "--center", "x1"])
    assert rc == 1
    assert "WrongDegree" in capsys.readouterr().err


def test_untwist_machine_reproduces_factorization(tmp_path, capsys):
    rc = main(["untwist", write_doc(tmp_path, CHAIN_DOC), "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["d_trace"] == [10, 2, 1]
    assert data["parity"] == "even"
    assert [s["kind"] for s in data["steps"]] == ["phi6", "phi3"]
    assert data["terminal_label"] == "gamma"


def test_untwist_empty_word(tmp_path, capsys):
    doc = {"label": "gamma_inv", "d": 1, "orbits": []}
    rc = main(["untwist", write_doc(tmp_path, doc), "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["steps"] == [] and data["parity"] == "even"


def test_untwist_parity_contradiction(tmp_path, capsys):
    rc = main(
        ["untwist", write_doc(tmp_path, CHAIN_DOC), "--target", "gamma_inv", "--format", "machine"]
    )
    data = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert data["error"] == "parity_contradiction"


def test_untwist_inconsistent_input(tmp_path, capsys):
    doc = {"label": "gamma", "d": 2, "orbits": [{"degree": 3, "mult": 2}]}
    rc = main(["untwist", write_doc(tmp_path, doc), "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert data["error"] == "inconsistent_cycle"


def test_verify_oracle_modes(capsys):
    rc = main(["verify", "--mode", "oracle-phi3", "--dmax", "8", "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0 and data["violations"] == 0
    rc = main(["verify", "--mode", "oracle-phi6", "--dmax", "8", "--format", "machine"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0 and data["violations"] == 0


def test_verify_table_mode(capsys):
    rc = main(
        [
            "verify", "--mode", "table", "--prime", "7",
            "--samples", "50", "--seed", "1", "--format", "machine",
        ]
    )
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["unclassifiable"] == 0
    assert [w["lines"] for w in data["witnesses"]] == [1, 6, 10, 8, 11, 13, 11, 9, 7]


def test_verify_requires_seed_for_sampling(capsys):
    rc = main(["verify", "--mode", "lemma3", "--prime", "7"])
    assert rc == 2
    assert "--seed" in capsys.readouterr().err


def test_verify_rejects_bad_prime(capsys):
    rc = main(["verify", "--mode", "lemma3", "--prime", "9", "--seed", "1"])
    assert rc == 2
    rc = main(["verify", "--mode", "lemma3", "--prime", "3", "--seed", "1"])
    assert rc == 2


def test_verify_lemma3_reports_finite_field_violations(capsys):
    # over F_5 the scan is expected to find rational-conic orbits; the
    # command signals them via exit code 1 and itemized counts
    rc = main(
        [
            "verify", "--mode", "lemma3", "--prime", "5",
            "--samples", "40", "--seed", "1", "--format", "machine",
        ]
    )
    data = json.loads(capsys.readouterr().out)
    assert data["checked"] == 40
    assert rc == (1 if data["violations"] else 0)


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["push", "nofile.json"])  # --kind is required
    assert exc.value.code == 2
