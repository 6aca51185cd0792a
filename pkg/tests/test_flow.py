import json
from outerthick.bounds.gallery import k7_minus_e_decomposition
from outerthick.bounds.lower_bound import BoundVerdict
from outerthick.constructions.doubling import doubling_family
from outerthick.constructions.gn import gn_family
from outerthick.core.models import Family
from outerthick.flow import VerificationGraph, VerificationMode, verify_family
from outerthick.formats.report import format_verification, to_json


def test_gn_family_verifies():
    report = verify_family(gn_family(3))
    assert report.valid
    assert report.mode == VerificationMode.MAXIMAL
    assert [m.edge_count for m in report.members] == [21, 21, 21]
    assert all(m.certified for m in report.members)
    assert all(m.max_degree == 6 for m in report.members)
    assert report.disjoint
    assert report.union_edge_count == report.expected_union_edge_count == 63
    assert report.missing_pair_count == 3
    assert report.missing_pairs == [(3, 9), (4, 10), (5, 11)]
    assert report.bound.verdict == BoundVerdict.FEASIBLE
    assert report.errors == []


def test_doubling_family_checks_recorded_steps():
    report = verify_family(doubling_family(2))
    assert report.valid
    assert [m.step for m in report.members] == [1, 5, 9, 13]
    assert all(m.star_property for m in report.members)


def test_wrong_step_metadata_fails():
    f = doubling_family(1)
    swapped = Family(t=f.t, n=f.n, members=f.members, steps=(5, 1))
    report = verify_family(swapped)
    assert not report.valid
    assert [m.star_property for m in report.members] == [False, False]


def test_k7e_needs_nonmaximal_mode():
    f = k7_minus_e_decomposition()
    strict = verify_family(f)
    assert not strict.valid
    assert strict.members[1].reason == "wrong_edge_count"
    assert any(e["step"] == "certify_members" for e in strict.errors)

    relaxed = verify_family(f, allow_nonmaximal=True)
    assert relaxed.valid
    assert relaxed.mode == VerificationMode.OUTERPLANAR
    assert relaxed.members[1].outerplanar
    assert relaxed.missing_pairs == [(0, 4)]
    assert relaxed.expected_union_edge_count is None


def test_colliding_members_are_reported():
    triangle = frozenset({(0, 1), (1, 2), (0, 2)})
    report = verify_family(Family(t=2, n=3, members=(triangle, triangle)))
    assert not report.valid
    assert not report.disjoint
    assert report.collision == (0, 1, (0, 1))
    steps = {e["step"] for e in report.errors}
    assert "check_disjointness" in steps
    assert "bound_checks" in steps


def test_malformed_family_stops_early():
    report = VerificationGraph().verify(Family(t=1, n=2, members=(frozenset({(0, 1)}),)))
    assert not report.valid
    assert report.members == []
    assert report.errors[0]["type"] == "invalid_family"


def test_report_rendering():
    report = verify_family(gn_family(2))
    text = format_verification(report)
    assert text.startswith("family t=2 n=8 mode=maximal\nvalid: yes\n")
    assert "missing pairs (2): 2-6 3-7" in text
    assert text.endswith("\n")

    data = json.loads(to_json(report))
    assert data["valid"] is True
    assert data["union_edge_count"] == 26
    assert to_json(report) == to_json(verify_family(gn_family(2)))
