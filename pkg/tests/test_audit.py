"""Shape and stability of the self-audit report."""

from astheno.audit import run_audit

CHECK_NAMES = (
    "d-squared-reduced",
    "d-squared-residual",
    "j-automorphism",
    "reference-d-omega",
    "reference-dc-omega",
    "reference-ddc-omega",
    "reference-d-wedge-dc",
    "reference-ddc-wedge-omega",
    "expansion-identity",
    "printed-zero-rows",
    "scan-propositions",
)

FINDING_NAMES = ("wedge-identity", "table-rows", "kenmotsu-pair-conditional")


def test_audit_passes_and_is_complete():
    report = run_audit(trials=40)
    assert report.ok
    assert tuple(c.name for c in report.checks) == CHECK_NAMES
    assert tuple(f.name for f in report.findings) == FINDING_NAMES


def test_audit_payload_is_stable():
    first = run_audit(trials=30).to_payload()
    second = run_audit(trials=30).to_payload()
    assert first == second
    assert first["ok"] is True


def test_conditional_finding_contents():
    report = run_audit(trials=10)
    finding = next(f for f in report.findings if f.name == "kenmotsu-pair-conditional")
    assert finding.payload["confirmed"] is True
    cases = finding.payload["cases"]
    assert len(cases) == 6  # three geometries, two conventions
    for case in cases:
        assert case["single_annihilators"] == []
        assert case["pair_annihilators"] == ["b1=0 & b2=0"]


def test_table_finding_lists_both_conventions():
    report = run_audit(trials=10)
    finding = next(f for f in report.findings if f.name == "table-rows")
    assert set(finding.payload) == {"graded", "ungraded"}
    for tables in finding.payload.values():
        assert len(tables) == 10
        assert sum(len(t["rows"]) for t in tables) == 90
