"""Registry of claims: anchors, default points, asserted variants and evaluation."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from ..errors import DomainError
from . import evaluators as ev
from .report import ClaimReport, Config, report_document


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    evaluator: Callable
    default_points: tuple
    asserted: tuple[str, ...]


_CLAIMS = (
    Claim("psf-gaussian", "Poisson Summation Formula", ev.psf_gaussian,
          (0.3, 0.5, 1.0, 2.0, 3.0), ("printed",)),
    Claim("muntz-identity", "Muntz relations", ev.muntz_identity,
          (1.5, 0.5 + 3j, 1.2, 0.3 + 1j, 1.7 - 2j), ("printed/gaussian", "printed/cylinder")),
    Claim("continuation-quotient", "meromorphic continuation of the local zeta",
          ev.continuation_quotient, (2.0, 0.5, 0.25 + 5j, 1.5 + 10j, 0.1 - 7j),
          ("printed", "mellin-gaussian-printed")),
    Claim("im-decomposition", "Im[(M(c)\\zeta)(s)]", ev.im_decomposition_claim,
          (0.75 + 2j, 0.3 + 1j, 1.5 - 3j), ("paper",)),
    Claim("wr-averaged-fe", "Reasuming, we finally obtain", ev.wr_averaged_fe,
          (0.3 + 2j, 0.25 + 5j, 0.1 + 1j), ("printed",)),
    Claim("p-general-fe", "new general functional equation for zeta", ev.p_general_fe,
          (0.25, 0.3 + 2j, 0.1 + 1j), ("printed",)),
    Claim("refinement-series", "refinement Riemann hypothesis", ev.refinement_series_claim,
          (0.25, 0.3 + 2j, 0.1 + 1j), ("printed",)),
    Claim("eta-representation", "1-2^{1-s}", ev.eta_representation,
          (2.0, 3.0, 0.5 + 14.134725j, 0.3 + 2j, 0.8 - 20j), ("printed",)),
    Claim("imzeta-star-series", "$Im(\\zeta^{*}(s))$", ev.imzeta_star,
          (0.25 + 3j, 0.3 + 2j, 0.1 + 5j), ("printed",)),
    Claim("maslanka-formula", "proposed a new formula", ev.maslanka,
          (0.3 + 2j, 0.5, 0.7 - 4j), ("printed",)),
    Claim("rwrfe-hyperbola", "marks the hyperbolic curve", ev.rwrfe_hyperbola,
          (0.5 + 14.134725j, 0.3 + 2j, 1.2715403 + 0.5876005j, 1.5 - 1j), ("r-identity", "hyperbola")),
    Claim("mah-zero-containment", "Main Algebraic Hypothesis", ev.mah_zero_containment,
          (), ("zeta-t", "zeta-at-zero")),
    Claim("levy-moment-dichotomy", "moments of the 1/2-stable Levy law", ev.levy_dichotomy,
          (0.1, 0.25, 0.4, 0.5, 0.6), ("monte-carlo", "closed-form", "divergence-flag")),
    Claim("wr-moments", "Non-triviality; Starting point; Vanishing of moments", ev.wr_moments,
          (0.0, 0.5, 1.5, 2.0, 3.0), ("r0", "r1-printed", "r2")),
)

_BY_ID = {c.id: c for c in _CLAIMS}
CLAIM_IDS = tuple(c.id for c in _CLAIMS)


def list_claims() -> list[tuple[str, str]]:
    """``(id, anchor)`` pairs in registry order."""
    return [(c.id, c.anchor) for c in _CLAIMS]


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise DomainError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIM_IDS)}") from None


def evaluate_claim(claim_id: str, points=None, config: Config | None = None) -> ClaimReport:
    """Evaluate one claim at ``points`` (its defaults when ``None``).

    Raises
    ------
    DomainError
        For an unknown id or a point outside the claim's validity region.
    """
    claim = get_claim(claim_id)
    config = config or Config()
    pts = claim.default_points if points is None else tuple(points)
    rows, notes = claim.evaluator(pts, config)
    return ClaimReport(claim.id, tuple(rows), claim.asserted, config, tuple(notes))


def run_claims(ids=None, config: Config | None = None, workers: int = 1) -> list[ClaimReport]:
    """Evaluate several claims, optionally in parallel; the result is sorted by id."""
    config = config or Config()
    ids = list(CLAIM_IDS if ids is None else ids)
    for i in ids:
        get_claim(i)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            reports = list(pool.map(lambda i: evaluate_claim(i, None, config), ids))
    else:
        reports = [evaluate_claim(i, None, config) for i in ids]
    return sorted(reports, key=lambda r: r.claim)


def claims_document(ids=None, config: Config | None = None, workers: int = 1) -> dict:
    config = config or Config()
    return report_document(run_claims(ids, config, workers), config)
