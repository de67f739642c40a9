import io
import json

import pytest

from multalg.cli import main
from multalg.grassmann import grassmann_presentation
from multalg.rings import PresentedRing


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def write_fixture(tmp_path, ring, name="ring.json"):
    path = tmp_path / name
    path.write_text(ring.dumps())
    return str(path)


# ---------------------------------------------------------------- output


def test_gaussian_text(capsys):
    rc, out, _ = run(capsys, "gaussian", "-n", "4", "-k", "2")
    assert rc == 0
    assert out == "1 + t + 2*t^2 + t^3 + t^4\n"


def test_gaussian_json(capsys):
    rc, out, _ = run(capsys, "gaussian", "-n", "4", "-k", "2", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["coefficients"] == [1, 1, 2, 1, 1]
    assert data["value_at_1"] == 6


def test_grassmann_json_round_trips(capsys):
    rc, out, _ = run(capsys, "grassmann", "-n", "3", "-k", "1", "--json")
    assert rc == 0
    assert PresentedRing.loads(out) == grassmann_presentation(3, 1)


def test_multiplicity(capsys):
    rc, out, _ = run(capsys, "multiplicity", "-n", "2", "-m", "2")
    assert rc == 0
    assert out.strip() == "1 + 2*t + t^2"
    rc, out, _ = run(capsys, "multiplicity", "-n", "3", "-m", "1,0", "--json")
    assert json.loads(out)["value_at_1"] == 3


def test_analyze_text_and_json(capsys, tmp_path):
    path = write_fixture(tmp_path, grassmann_presentation(2, 1))
    rc, out, _ = run(capsys, "analyze", path)
    assert rc == 0
    assert "dimension: 2" in out

    rc, out, _ = run(capsys, "analyze", path, "--json")
    data = json.loads(out)
    assert data["all_clauses_true"] is True
    assert data["dimension"] == 2
    assert data["poincare"] == "1 + t"


def test_analyze_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(grassmann_presentation(2, 1).dumps()))
    rc, out, _ = run(capsys, "analyze", "-", "--json")
    assert rc == 0
    assert json.loads(out)["all_clauses_true"] is True


def test_equivariant(capsys):
    rc, out, _ = run(capsys, "equivariant", "--domain", "1,1", "--codomain", "1,2")
    assert rc == 0
    assert out.strip() == "1 + t"


def test_hitchin_weights(capsys):
    rc, out, _ = run(capsys, "hitchin-weights", "-n", "2", "-g", "2")
    assert rc == 0
    assert "weights: 1 1 2 2 2" in out
    assert "cardinality: 5" in out
    rc, out, _ = run(capsys, "hitchin-weights", "-n", "3", "-g", "2", "--json")
    assert json.loads(out)["cardinality"] == 10


def test_jet_output_is_a_fixture(capsys, tmp_path):
    path = write_fixture(tmp_path, grassmann_presentation(2, 1))
    rc, out, _ = run(capsys, "jet", path, "-d", "2", "--json")
    assert rc == 0
    jet_ring = PresentedRing.loads(out)
    assert jet_ring.variables == ("p1_0", "p1_1", "q1_0", "q1_1")
    assert jet_ring.weights == (1, 2, 1, 2)
    # and the jet fixture itself feeds back into analyze (which reports the
    # order-2 jet ring of a point as the infinite-dimensional thing it is)
    path2 = tmp_path / "jet.json"
    path2.write_text(out)
    rc, out, _ = run(capsys, "analyze", str(path2), "--json")
    assert rc == 0
    assert json.loads(out) == {"finite_dimensional": False}


def test_jet_invariants_json(capsys, tmp_path):
    ring = PresentedRing.loads('{"variables": ["a"], "generators": ["a^2"]}')
    path = write_fixture(tmp_path, ring)
    rc, out, _ = run(capsys, "jet", path, "-d", "2", "--invariants", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["invariants"]["hilbert_series"] == "(1 + t - t^2)/(1 - t)"
    assert data["invariants"]["krull_dimension"] == 1
    assert data["invariants"]["finite"] is False
    assert "z carries weight 1" in data["invariants"]["grading_assumption"]


def test_dominance(capsys):
    rc, out, _ = run(capsys, "dominance", "1,1", "2,0")
    assert rc == 0 and out.strip() == "true"
    rc, out, _ = run(capsys, "dominance", "2,0", "1,1")
    assert rc == 0 and out.strip() == "false"
    rc, out, _ = run(capsys, "dominance", "(1, 1)", "(2, 0)", "--json")
    assert json.loads(out)["below"] is True


def test_orbit(capsys):
    rc, out, _ = run(capsys, "orbit", "2,1,0")
    assert rc == 0 and out.strip() == "6"


def test_closure(capsys):
    rc, out, _ = run(capsys, "closure", "3,0")
    assert rc == 0
    assert "no closed formula" in out
    assert "order-2 jets" in out
    rc, out, _ = run(capsys, "closure", "3,0", "--json")
    data = json.loads(out)
    assert data["mu"] == [3, 0]
    assert len(data["strata"]) == 2


def test_verify_filtered(capsys):
    rc, out, _ = run(capsys, "verify", "--filter", "poly.")
    assert rc == 0
    data = json.loads(out)
    assert data["failed"] == []
    assert data["counts"]["passed"] > 0
    assert data["untested"]


def test_verify_negative_control_drives_exit_code(capsys):
    rc, out, _ = run(
        capsys, "verify", "--filter", "negative_control", "--include-negative-controls"
    )
    assert rc == 1
    data = json.loads(out)
    assert len(data["failed"]) == 1
    assert data["failed"][0]["witness"]


def test_verify_with_tiny_cap_skips(capsys):
    rc, out, _ = run(
        capsys, "--max-reductions", "1", "verify", "--filter", "grassmann.hilbert"
    )
    assert rc == 0
    data = json.loads(out)
    assert data["counts"]["skipped"] > 0


# ------------------------------------------------------------ exit codes


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["not-a-command"])
    assert err.value.code == 2


def test_malformed_int_list_exits_2(capsys):
    rc, _, err = run(capsys, "multiplicity", "-n", "2", "-m", "1,zebra")
    assert rc == 2 and "error:" in err


def test_bad_weight_vector_exits_2(capsys):
    rc, _, err = run(capsys, "orbit", "1,2")
    assert rc == 2 and "error:" in err


def test_missing_file_exits_2(capsys):
    rc, _, err = run(capsys, "analyze", "/nonexistent/fixture.json")
    assert rc == 2 and "error:" in err


def test_invalid_json_fixture_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{ this is not json")
    rc, _, err = run(capsys, "analyze", str(path))
    assert rc == 2 and "error:" in err


def test_missing_generators_key_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"variables": ["x"]}')
    rc, _, err = run(capsys, "analyze", str(path))
    assert rc == 2 and "error:" in err


def test_nonpositive_cap_exits_2(capsys):
    rc, _, err = run(capsys, "--max-reductions", "0", "gaussian", "-n", "2", "-k", "1")
    assert rc == 2 and "error:" in err


def test_resource_cap_exits_3(capsys, tmp_path):
    path = write_fixture(tmp_path, grassmann_presentation(4, 2))
    rc, _, err = run(capsys, "--max-reductions", "1", "analyze", path)
    assert rc == 3
    assert "cap" in err
