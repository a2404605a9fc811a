"""Numerical adjudication of identities: registry, evaluators, reports and zero scans."""

from .registry import CLAIM_IDS, claims_document, evaluate_claim, list_claims, run_claims
from .report import (INCONCLUSIVE, REFUTED, SUPPORTED, ClaimPoint, ClaimReport, Config, dumps,
                     validate_document)
from .zeros import chebyshev_sum_check, critical_zero_scan, offline_minimum

__all__ = [
    "CLAIM_IDS", "INCONCLUSIVE", "REFUTED", "SUPPORTED", "ClaimPoint", "ClaimReport", "Config",
    "chebyshev_sum_check", "claims_document", "critical_zero_scan", "dumps", "evaluate_claim",
    "list_claims", "offline_minimum", "run_claims", "validate_document",
]
