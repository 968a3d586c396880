"""Structured pass/fail evidence emitted by every identity checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict[str, Any]
    witnesses: tuple[tuple[str, Any], ...]
    passed: bool
    levels: tuple[tuple[int, int], ...] | None = None  # (N, valuation) pairs

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "identity": self.identity,
            "params": {k: _render(v) for k, v in sorted(self.params.items())},
            "pass": self.passed,
        }
        if self.levels is not None:
            d["levels"] = [{"N": n, "valuation": v} for n, v in self.levels]
        d["witnesses"] = [{"case": c, "discrepancy": _render(w)}
                          for c, w in self.witnesses]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _render(v):
    from fractions import Fraction

    from .exact import LogScalar

    if isinstance(v, LogScalar):
        return v.to_json_dict()
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, float):
        return v
    return v
