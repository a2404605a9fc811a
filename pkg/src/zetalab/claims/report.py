"""Claim reports: per-point comparisons, three-valued verdicts and their JSON form."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from ..numerics import DEFAULT_TOL

REPORT_VERSION = "1.0"
SUPPORTED, REFUTED, INCONCLUSIVE = "supported", "refuted", "inconclusive"
REFUTE_FACTOR = 10.0


@dataclass(frozen=True)
class Config:
    seed: int = 0
    precision_bits: int = 128
    tol: float = DEFAULT_TOL

    def refined(self) -> "Config":
        """Twice the working precision and half the tolerance."""
        return Config(self.seed, 2 * self.precision_bits, 0.5 * self.tol)

    def to_json(self) -> dict:
        return {"seed": self.seed, "precision_bits": self.precision_bits, "tol": self.tol}


@dataclass(frozen=True)
class ClaimPoint:
    """One comparison ``lhs`` vs ``rhs`` at the argument ``s``."""

    s: complex
    lhs: complex
    rhs: complex
    err_budget: float
    variant: str = "printed"

    def __post_init__(self):
        for name in ("s", "lhs", "rhs"):
            value = complex(getattr(self, name))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if not (self.err_budget >= 0.0 and math.isfinite(self.err_budget)):
            raise ValueError("err_budget must be finite and non-negative")
        object.__setattr__(self, "err_budget", float(self.err_budget))

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_err(self) -> float:
        scale = max(abs(self.lhs), abs(self.rhs))
        return self.abs_err / scale if scale > 0.0 else 0.0

    @property
    def verdict(self) -> str:
        err = self.abs_err
        if err <= self.err_budget:
            return SUPPORTED
        if err > REFUTE_FACTOR * self.err_budget:
            return REFUTED
        return INCONCLUSIVE

    def to_json(self) -> dict:
        return {
            "s": _cjson(self.s),
            "lhs": _cjson(self.lhs),
            "rhs": _cjson(self.rhs),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "err_budget": self.err_budget,
            "variant": self.variant,
        }


def combine(verdicts) -> str:
    """Supported iff all agree; refuted iff any is refuted; else inconclusive."""
    verdicts = list(verdicts)
    if verdicts and all(v == SUPPORTED for v in verdicts):
        return SUPPORTED
    if any(v == REFUTED for v in verdicts):
        return REFUTED
    return INCONCLUSIVE


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of one claim.

    ``verdict`` is taken over the variants the source asserts
    (``asserted``); every variant also gets its own entry in
    ``sub_verdicts``.
    """

    claim: str
    points: tuple[ClaimPoint, ...]
    asserted: tuple[str, ...]
    config: Config
    notes: tuple[str, ...] = field(default=())

    @property
    def variants(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for p in self.points:
            seen.setdefault(p.variant, None)
        return tuple(seen)

    @property
    def sub_verdicts(self) -> dict[str, str]:
        return {v: combine(p.verdict for p in self.points if p.variant == v) for v in self.variants}

    @property
    def verdict(self) -> str:
        return combine(p.verdict for p in self.points if p.variant in self.asserted)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "points": [p.to_json() for p in self.points],
            "verdict": self.verdict,
            "config": self.config.to_json(),
            "asserted_variants": list(self.asserted),
            "sub_verdicts": self.sub_verdicts,
            "notes": list(self.notes),
        }


def _cjson(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def report_document(reports, config: Config) -> dict:
    ordered = sorted(reports, key=lambda r: r.claim)
    return {"version": REPORT_VERSION, "config": config.to_json(),
            "claims": [r.to_json() for r in ordered]}


def dumps(document: dict) -> str:
    """Canonical serialisation: fixed key order, shortest round-trip floats, no NaN."""
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def validate_document(document: dict) -> None:
    """Raise ``ValueError`` unless ``document`` follows the report schema."""
    def need(obj, key, kind):
        if key not in obj or not isinstance(obj[key], kind):
            raise ValueError(f"missing or mistyped field {key!r}")
        return obj[key]

    def need_complex(obj, key):
        value = need(obj, key, dict)
        if set(value) != {"re", "im"}:
            raise ValueError(f"{key!r} must be an object with re and im")
        for part in value.values():
            if not isinstance(part, (int, float)):
                raise ValueError(f"{key!r} parts must be numbers")

    need(document, "version", str)
    cfg = need(document, "config", dict)
    need(cfg, "seed", int)
    need(cfg, "precision_bits", int)
    need(cfg, "tol", (int, float))
    for report in need(document, "claims", list):
        need(report, "claim", str)
        if need(report, "verdict", str) not in (SUPPORTED, REFUTED, INCONCLUSIVE):
            raise ValueError("unknown verdict")
        need(report, "config", dict)
        for point in need(report, "points", list):
            for key in ("s", "lhs", "rhs"):
                need_complex(point, key)
            for key in ("abs_err", "rel_err", "err_budget"):
                if need(point, key, (int, float)) < 0:
                    raise ValueError(f"{key!r} must be non-negative")
