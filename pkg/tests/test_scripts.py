import importlib.util
import json
import sys
from math import comb
from pathlib import Path

import pytest

from multalg.grassmann import gaussian_binomial, grassmann_presentation
from multalg.jets import jet_invariants, jet_presentation

ROOT = Path(__file__).resolve().parent.parent
ARCHIVE = ROOT / "data" / "jet_regression.json"


def load_script(name):
    spec = importlib.util.spec_from_file_location(name, ROOT / "scripts" / f"{name}.py")
    module = importlib.util.module_from_spec(spec)
    sys.modules[name] = module  # dataclasses resolve postponed annotations here
    spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="module")
def archive():
    return json.loads(ARCHIVE.read_text())


def test_archive_schema(archive):
    rows = archive["rows"]
    assert len(rows) == 18  # n in 2..4, k in 1..n-1, order in 1..3
    seen = set()
    for row in rows:
        key = (row["n"], row["k"], row["order"])
        assert key not in seen
        seen.add(key)
        assert row["status"] in {"ok", "skipped"}
        if row["status"] == "ok":
            assert 0 <= row["krull_dimension"] <= row["variables"]
            assert row["finite"] == (row["krull_dimension"] == 0)
            assert len(row["series_weights"]) == row["variables"]
        else:
            assert "cap" in row["reason"]


def test_archive_order_one_rows_are_the_base_rings(archive):
    for row in archive["rows"]:
        if row["order"] != 1 or row["status"] != "ok":
            continue
        n, k = row["n"], row["k"]
        assert row["finite"] is True
        assert row["krull_dimension"] == 0
        assert row["dimension"] == comb(n, k)
        assert row["hilbert_series"] == str(gaussian_binomial(n, k))


def test_archive_respects_block_swap_symmetry(archive):
    # Gr(k,n) and Gr(n-k,n) present the same ring with the two variable
    # blocks exchanged: every invariant must agree row-for-row
    by_key = {(r["n"], r["k"], r["order"]): r for r in archive["rows"]}
    for (n, k, order), row in by_key.items():
        mirror = by_key[(n, n - k, order)]
        assert row["status"] == mirror["status"]
        if row["status"] == "ok":
            assert row["krull_dimension"] == mirror["krull_dimension"]
            assert row["finite"] == mirror["finite"]
            assert row["dimension"] == mirror["dimension"]
            assert row["hilbert_series"] == mirror["hilbert_series"]
            assert sorted(row["series_weights"]) == sorted(mirror["series_weights"])


def test_archive_matches_recomputation_on_cheap_rows(archive):
    for row in archive["rows"]:
        if row["status"] != "ok":
            continue
        if row["n"] > 3 and row["order"] > 2:
            continue  # the 12-variable rows are covered by the symmetry check
        jet = jet_presentation(grassmann_presentation(row["n"], row["k"]), row["order"])
        inv = jet_invariants(jet)
        assert inv.krull_dimension == row["krull_dimension"]
        assert inv.finite == row["finite"]
        assert inv.dimension == row["dimension"]
        assert str(inv.hilbert) == row["hilbert_series"]
        assert list(inv.series_weights) == row["series_weights"]


def test_regression_script_reproduces_archive_rows(tmp_path, capsys):
    script = load_script("jet_regression")
    out = tmp_path / "archive.json"
    rc = script.main(["--max-n", "3", "--out", str(out)])
    assert rc == 0
    fresh = {
        (r["n"], r["k"], r["order"]): r for r in json.loads(out.read_text())["rows"]
    }
    committed = {
        (r["n"], r["k"], r["order"]): r
        for r in json.loads(ARCHIVE.read_text())["rows"]
        if r["n"] <= 3
    }
    assert set(fresh) == set(committed)
    for key, row in fresh.items():
        expect = dict(committed[key])
        row = dict(row)
        row.pop("seconds"), expect.pop("seconds")
        assert row == expect, key


def test_structure_sweep_script_passes(capsys):
    script = load_script("structure_sweep")
    rc = script.main(["--max-n", "3", "--random", "3", "--seed", "5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "0 failures" in out
    assert "FAIL" not in out
