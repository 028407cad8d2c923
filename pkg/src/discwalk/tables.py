"""Sparse coefficient tables for disc-polynomial expansions, plus JSON IO.

A table stores finitely many complex coefficients a_{m,n} at a fixed disc
parameter alpha (alpha = q - 2 when the table describes an isotropic kernel on
the complex sphere of dimension 2q).  Absent keys mean coefficient zero;
suppressed entries are removed rather than stored as zeros, so support-set
computations see true supports.

File format (entries sorted by (m, n) ascending, floats round-trip exactly):

    { "alpha": <number>,
      "entries": [ { "m": <int>, "n": <int>, "re": <number>, "im": <number> }, ... ] }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError

Key = tuple[int, int]


@dataclass
class CoefficientTable:
    alpha: float
    entries: dict[Key, complex] = field(default_factory=dict)
    #: provenance tag ("exact" closed form vs "extracted" by quadrature); not serialized
    source: str = "exact"

    def __post_init__(self) -> None:
        if not self.alpha > -1.0:
            raise DomainError(f"table parameter must exceed -1, got alpha = {self.alpha}")
        clean: dict[Key, complex] = {}
        for key, value in self.entries.items():
            m, n = key
            if m < 0 or n < 0 or m != int(m) or n != int(n):
                raise DomainError(f"bad table index {key!r}")
            clean[(int(m), int(n))] = complex(value)
        self.entries = clean

    def get(self, m: int, n: int) -> complex:
        return self.entries.get((m, n), 0j)

    def support(self) -> set[Key]:
        return set(self.entries)

    def sorted_items(self) -> list[tuple[Key, complex]]:
        return sorted(self.entries.items())

    def max_abs_imag(self) -> float:
        return max((abs(v.imag) for v in self.entries.values()), default=0.0)

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "entries": [
                {"m": m, "n": n, "re": v.real, "im": v.imag}
                for (m, n), v in self.sorted_items()
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict, source: str = "exact") -> "CoefficientTable":
        try:
            alpha = float(doc["alpha"])
            entries = {
                (int(e["m"]), int(e["n"])): complex(float(e["re"]), float(e["im"]))
                for e in doc["entries"]
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed coefficient table document: {exc}") from exc
        return cls(alpha=alpha, entries=entries, source=source)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str, source: str = "exact") -> "CoefficientTable":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON for coefficient table: {exc}") from exc
        return cls.from_dict(doc, source=source)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path) -> "CoefficientTable":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read())
