"""Findings, reports and exact-value rendering."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algnum import NumberFieldElement, RealAlgebraic
from .algnum import poly as P

SEVERITY_ORDER = {"error": 0, "warning": 1, "info": 2}


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    witness: tuple = ()
    severity: str = "error"

    def sort_key(self):
        return (SEVERITY_ORDER.get(self.severity, 9), self.code, self.message, repr(self.witness))

    def to_json(self) -> dict:
        return {"severity": self.severity, "code": self.code,
                "message": self.message, "witness": jsonable(list(self.witness))}


def render_algebraic(a: RealAlgebraic | NumberFieldElement | int | Fraction, digits: int = 4) -> str:
    """``minpoly; [lo, hi]; ≈ value``; the interval is omitted for rationals."""
    a = as_real(a)
    approx = a.decimal(digits)
    mp = P.to_str(a.minpoly)
    if a.is_rational():
        return f"{mp}; ≈ {approx}"
    return f"{mp}; [{a.lo}, {a.hi}]; ≈ {approx}"


def as_real(a) -> RealAlgebraic:
    if isinstance(a, NumberFieldElement):
        return a.to_real()
    if isinstance(a, (int, Fraction)):
        return RealAlgebraic.from_rational(a)
    return a


def exact_value(a, digits: int = 6) -> dict:
    a = as_real(a)
    return {"minpoly": list(a.minpoly), "minpoly_text": P.to_str(a.minpoly),
            "interval": [str(a.lo), str(a.hi)], "approx": a.decimal(digits)}


def jsonable(x: Any):
    if isinstance(x, (RealAlgebraic, NumberFieldElement)):
        return exact_value(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Finding):
        return x.to_json()
    return x


@dataclass
class Report:
    command: str
    inputs_digest: str = ""
    findings: list[Finding] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @staticmethod
    def digest(*blobs: bytes | str) -> str:
        h = hashlib.sha256()
        for b in blobs:
            h.update(b.encode() if isinstance(b, str) else b)
            h.update(b"\0")
        return h.hexdigest()

    def to_json(self) -> dict:
        findings = sorted(self.findings, key=Finding.sort_key)
        return {"command": self.command, "inputs_digest": self.inputs_digest,
                "findings": [f.to_json() for f in findings],
                "values": jsonable(self.values)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)
