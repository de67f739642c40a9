import json

import pytest

from multalg.groebner import ReductionLimits
from multalg.verification import (
    EXPECTED_MODULES,
    catalogue,
    closure_vs_grassmann_dimensions,
    embedded_point_check,
    run_all,
)
from multalg.weights import DominantWeight


def test_catalogue_is_well_formed():
    cases = catalogue()
    names = [c.name for c in cases]
    assert len(names) == len(set(names))
    assert names == sorted(names)
    for c in cases:
        assert c.tag in {"paper", "trivial", "derived"}
        assert c.anchor.strip()
        assert c.module in EXPECTED_MODULES
    assert sum(1 for c in cases if c.negative_control) == 1


def test_default_run_is_all_green():
    summary = run_all()
    assert summary.failed == ()
    assert summary.skipped == ()
    assert len(summary.excluded_negative_controls) == 1
    assert len(summary.passed) == len(catalogue()) - 1
    assert summary.failure_count == 0


def test_negative_control_fails_with_witness():
    summary = run_all(include_negative_controls=True)
    assert summary.failure_count == 1
    ((name, witness),) = summary.failed
    assert "negative_control" in name
    assert witness  # a concrete polynomial, not a bare assertion
    assert summary.excluded_negative_controls == ()


def test_every_module_is_covered():
    summary = run_all()
    assert set(summary.modules) == set(EXPECTED_MODULES)
    for counts in summary.modules.values():
        assert counts["total"] > 0
        assert counts["run"] > 0
        assert counts["passed"] == counts["run"]


def test_json_output_is_deterministic():
    a = run_all().to_json()
    b = run_all().to_json()
    assert a == b
    data = json.loads(a)
    assert data["failed"] == []
    assert data["counts"]["passed"] == len(catalogue()) - 1


def test_filter_populates_untested():
    summary = run_all(filter_substring="jets.")
    assert summary.passed
    assert summary.untested
    total = (
        len(summary.passed)
        + len(summary.untested)
        + len(summary.excluded_negative_controls)
    )
    assert total == len(catalogue())
    for name in summary.passed:
        assert "jets." in name
    for name in summary.untested:
        assert "jets." not in name


def test_filter_with_no_matches():
    summary = run_all(filter_substring="no-such-case")
    assert summary.passed == ()
    assert len(summary.untested) == len(catalogue())


def test_tiny_cap_produces_skips_with_cap_value():
    limits = ReductionLimits(max_pair_reductions=1)
    summary = run_all(limits=limits)
    assert summary.skipped
    for name, reason in summary.skipped:
        assert "1" in reason and "cap" in reason
    # skips are not failures
    assert summary.failure_count == 0


def test_seed_changes_random_cases_not_the_contract():
    a = run_all(seed=1)
    b = run_all(seed=2)
    assert a.failure_count == b.failure_count == 0
    assert len(a.passed) == len(b.passed)


# ------------------------------------------------------- report helpers


def test_embedded_point_check_holds():
    assert embedded_point_check() is True


def test_closure_report_shapes():
    rep = closure_vs_grassmann_dimensions(DominantWeight((1, 1, 0)))
    assert rep.mu == (1, 1, 0)
    assert rep.strata
    statuses = {s.status for s in rep.strata}
    assert statuses <= {"multiplicity", "no_paper_formula"}
    for s in rep.strata:
        if s.status == "multiplicity":
            assert s.polynomial is not None and s.point_count is not None
        else:
            assert s.polynomial is None and s.point_count is None
    # (1,1,0) is minuscule: a single stratum, multiplicity [3 2]_t
    assert len(rep.strata) == 1
    assert rep.strata[0].polynomial == "1 + t + t^2"
    assert rep.strata[0].point_count == 3


def test_closure_report_central_note():
    rep = closure_vs_grassmann_dimensions(DominantWeight((1, 1)))
    # mu = (1,1) is central: alpha_1 = 0, only the determinant character
    (stratum,) = rep.strata
    assert stratum.note == "central"
    assert stratum.point_count == 1


def test_closure_report_jet_note():
    # a single coefficient >= 2 names the jet order it corresponds to
    rep = closure_vs_grassmann_dimensions(DominantWeight((3, 0)))
    notes = [s.note for s in rep.strata if "jet" in s.note]
    assert notes
    assert any("order-2" in n for n in notes)
    # and the weight right below (3,0), namely (2,1), is a point of Gr(1,2)
    below = {s.weight: s for s in rep.strata}
    assert below[(2, 1)].status == "multiplicity"


def test_closure_report_json():
    rep = closure_vs_grassmann_dimensions(DominantWeight((2, 0)))
    data = rep.to_json_dict()
    assert data["mu"] == [2, 0]
    assert len(data["strata"]) == 2
    json.dumps(data)  # serializable as-is
