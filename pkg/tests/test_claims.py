import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.claims import (CLAIM_IDS, ClaimPoint, ClaimReport, Config, chebyshev_sum_check,
                            critical_zero_scan, dumps, evaluate_claim, list_claims,
                            validate_document)
from zetalab.claims.report import combine, report_document
from zetalab.claims.series import maslanka_series, refinement_series
from zetalab.errors import DomainError


def test_registry():
    claims = dict(list_claims())
    assert len(claims) == 14
    assert tuple(claims) == CLAIM_IDS
    assert claims["refinement-series"] == "refinement Riemann hypothesis"
    assert claims["maslanka-formula"] == "proposed a new formula"
    assert list_claims() == list_claims()


def test_unknown_claim():
    with pytest.raises(DomainError):
        evaluate_claim("no-such-claim")


def test_point_verdict_thresholds():
    assert ClaimPoint(1, 1.0, 1.0 + 1e-9, 1e-8).verdict == "supported"
    assert ClaimPoint(1, 1.0, 1.0 + 5e-8, 1e-8).verdict == "inconclusive"
    assert ClaimPoint(1, 1.0, 1.0 + 2e-7, 1e-8).verdict == "refuted"


def test_combine():
    assert combine(["supported", "supported"]) == "supported"
    assert combine(["supported", "inconclusive"]) == "inconclusive"
    assert combine(["inconclusive", "refuted"]) == "refuted"


def test_point_rejects_nonfinite():
    with pytest.raises(ValueError):
        ClaimPoint(1, float("inf"), 0.0, 1.0)
    with pytest.raises(ValueError):
        ClaimPoint(1, 0.0, 0.0, -1.0)


def test_eta_representation_at_two():
    r = evaluate_claim("eta-representation", [2.0])
    assert r.verdict == "supported"
    assert r.points[0].rel_err < 1e-10


def test_psf_gaussian_claim():
    r = evaluate_claim("psf-gaussian", [0.3, 0.5, 1, 2, 3])
    assert r.verdict == "supported"
    assert all(p.abs_err < 1e-8 for p in r.points)


def test_out_of_region():
    with pytest.raises(DomainError):
        evaluate_claim("refinement-series", [0.7])
    with pytest.raises(DomainError):
        evaluate_claim("muntz-identity", [1.0])
    with pytest.raises(DomainError):
        evaluate_claim("psf-gaussian", [-1.0])


def test_refinement_series_at_quarter():
    r = evaluate_claim("refinement-series", [0.25])
    assert r.sub_verdicts == {"printed": "refuted", "unit": "refuted"}
    assert r.points[0].rhs.real == pytest.approx(-0.27325266636, abs=1e-10)


def test_muntz_variants():
    r = evaluate_claim("muntz-identity", [0.5 + 3j])
    assert r.sub_verdicts["derived/gaussian"] == "supported"
    assert r.sub_verdicts["derived/cylinder"] == "supported"
    assert r.verdict == "refuted"


def test_report_json_round_trip():
    config = Config()
    doc = report_document([evaluate_claim("eta-representation", [2.0, 0.3 + 2j], config)], config)
    text = dumps(doc)
    validate_document(json.loads(text))
    assert dumps(json.loads(text)) == text
    point = json.loads(text)["claims"][0]["points"][1]
    assert list(point) == ["s", "lhs", "rhs", "abs_err", "rel_err", "err_budget", "variant"]
    assert point["s"] == {"re": 0.3, "im": 2.0}


def test_validate_rejects_bad_document():
    with pytest.raises(ValueError):
        validate_document({"version": "1", "config": {"seed": 0, "precision_bits": 1, "tol": 1},
                           "claims": [{"claim": "x", "verdict": "maybe", "config": {}, "points": []}]})


def test_report_verdict_uses_asserted_variants():
    pts = (ClaimPoint(1, 0.0, 1.0, 1e-3, "printed"), ClaimPoint(1, 0.0, 0.0, 1e-3, "derived"))
    r = ClaimReport("x", pts, ("derived",), Config())
    assert r.verdict == "supported"
    assert r.sub_verdicts == {"printed": "refuted", "derived": "supported"}


def test_precision_doubling_is_stable():
    ids = ["refinement-series", "maslanka-formula", "im-decomposition"]
    for cid in ids:
        a = evaluate_claim(cid, None, Config())
        b = evaluate_claim(cid, None, Config().refined())
        for k, v in a.sub_verdicts.items():
            assert {v, b.sub_verdicts[k]} != {"supported", "refuted"}


def test_refinement_series_remainder():
    lo = refinement_series(0.3 + 2j, 64)
    hi = refinement_series(0.3 + 2j, 256)
    assert abs(lo.value - hi.value) <= lo.err_bound + hi.err_bound


def test_maslanka_literature_converges():
    r = maslanka_series(0.5, 200, 128, "literature")
    assert r.converges
    assert abs(r.value - -1.4603545088095868) <= r.err_bound


def test_maslanka_printed_diverges():
    for variant in ("printed", "sign"):
        assert not maslanka_series(0.3 + 2j, 200, 128, variant).converges


def test_zero_scan():
    assert critical_zero_scan(0, 10, 0.1) == []
    (z,) = critical_zero_scan(10, 20, 0.1)
    assert abs(z - 14.134725) < 1e-4
    zs = critical_zero_scan(0, 30, 0.1)
    assert len(zs) == 3
    assert np.allclose(zs, [14.13, 21.02, 25.01], atol=0.01)
    with pytest.raises(DomainError):
        critical_zero_scan(0, 60, 0.1)


def test_chebyshev_examples():
    assert chebyshev_sum_check([1, 2], [1, 2]) == (True, 0.25)
    ok, gap = chebyshev_sum_check([1, 2], [2, 1])
    assert not ok and gap == -0.25
    with pytest.raises(DomainError):
        chebyshev_sum_check([1, 2], [1])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6)), min_size=1, max_size=40))
def test_chebyshev_similarly_ordered(pairs):
    a = sorted(p[0] for p in pairs)
    b = sorted(p[1] for p in pairs)
    ok, gap = chebyshev_sum_check(a, b)
    assert ok
    n = len(a)
    brute = sum(x * y for x, y in zip(a, b)) / n - (sum(a) / n) * (sum(b) / n)
    assert gap == pytest.approx(brute, rel=1e-9, abs=1e-9 * max(a) * max(b))


def test_mah_claim_reports_scan_zeros():
    r = evaluate_claim("mah-zero-containment")
    assert r.verdict == "supported"
    assert len([p for p in r.points if p.variant == "zeta-t"]) == 3
    assert any("off-line minimum" in n for n in r.notes)
