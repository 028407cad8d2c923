"""Dimension walks: Descente and Montee operators on coefficient tables.

The Wirtinger derivatives D_z = (D_x - i D_y)/2 and D_zbar = (D_x + i D_y)/2
act on disc-polynomial expansions as exact sparse transforms of the
coefficients, moving between parameter levels alpha and alpha + 1 (i.e.
between spheres of complex dimension q and q + 1):

    descente:  b_{m,n}  at alpha+1  =  c_alpha(m+1, n) a_{m+1,n}  at alpha
    montee:    b_{m,n}  at alpha    =  a_{m-1,n} / c_alpha(m, n)  at alpha+1,  m >= 1

with c_alpha(m, n) = m (n + alpha + 1)/(alpha + 1) > 0 for m >= 1, so both
transforms preserve entrywise nonnegativity by construction.  The Montee
(primitive) operators are implemented only on coefficient space -- that
transform is exact, whereas numerical antidifferentiation is not; the
function-space definition is validated through the round trips
descente(montee(T)) = T.

A Montee result carries the table of the nonconstant part together with the
constant term of the primitive, so constant + synthesize(table) reproduces the
primitive that vanishes at the origin, while synthesize(table) alone is the
shifted primitive that is positive definite whenever the input was.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError
from .special import c_factor, disc_poly_at_zero, ensure_in_disk
from .tables import CoefficientTable


def descente_z(table: CoefficientTable) -> CoefficientTable:
    """Coefficient table of D_z f at level alpha + 1; m = 0 entries have no image."""
    alpha = table.alpha
    entries = {
        (m - 1, n): c_factor(m, n, alpha) * v
        for (m, n), v in table.entries.items()
        if m >= 1
    }
    return CoefficientTable(alpha=alpha + 1.0, entries=entries, source=table.source)


def descente_zbar(table: CoefficientTable) -> CoefficientTable:
    """Coefficient table of D_zbar f at level alpha + 1; n = 0 entries have no image."""
    alpha = table.alpha
    entries = {
        (m, n - 1): c_factor(n, m, alpha) * v
        for (m, n), v in table.entries.items()
        if n >= 1
    }
    return CoefficientTable(alpha=alpha + 1.0, entries=entries, source=table.source)


def descente_x(table: CoefficientTable) -> CoefficientTable:
    """Coefficient table of D_x f = D_z f + D_zbar f at level alpha + 1."""
    a = descente_z(table)
    b = descente_zbar(table)
    entries = dict(a.entries)
    for key, v in b.entries.items():
        entries[key] = entries.get(key, 0j) + v
    return CoefficientTable(alpha=table.alpha + 1.0, entries=entries, source=table.source)


@dataclass
class MonteeResult:
    """Primitive of a table: ``constant + synthesize(table)`` is the primitive
    vanishing at 0; ``table`` has no (0,0) entry (the constant term is split out).
    """

    table: CoefficientTable
    constant: float

    def to_dict(self) -> dict:
        return {"constant": self.constant, "table": self.table.to_dict()}

    @classmethod
    def from_dict(cls, doc: dict) -> "MonteeResult":
        try:
            constant = float(doc["constant"])
            table = CoefficientTable.from_dict(doc["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed montee result document: {exc}") from exc
        return cls(table=table, constant=constant)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "MonteeResult":
        return cls.from_dict(json.loads(text))


def _montee_constant(entries: dict, alpha: float) -> float:
    # -(sum of diagonal entries weighted by the origin values); off-diagonal
    # entries vanish at 0, so only (n, n) with n >= 1 contribute.
    acc = 0j
    for (m, n), v in entries.items():
        if m == n:
            acc -= v * disc_poly_at_zero(n, n, alpha)
    if abs(acc.imag) > 1e-9 * (1.0 + abs(acc.real)):
        raise DomainError(
            "montee constant came out non-real; input table lacks the real/conjugate "
            f"structure of a positive definite expansion (imag = {acc.imag!r})"
        )
    return float(acc.real)


def montee_z(table: CoefficientTable) -> MonteeResult:
    """z-primitive of a table at level alpha+1, expressed at level alpha = alpha+1-1."""
    alpha = table.alpha - 1.0
    if not alpha > -1.0:
        raise DomainError(
            f"montee target parameter alpha = {alpha} must exceed -1 (input table at {table.alpha})"
        )
    entries = {
        (m + 1, n): v / c_factor(m + 1, n, alpha)
        for (m, n), v in table.entries.items()
    }
    constant = _montee_constant(entries, alpha)
    out = CoefficientTable(alpha=alpha, entries=entries, source=table.source)
    return MonteeResult(table=out, constant=constant)


def montee_zbar(table: CoefficientTable) -> MonteeResult:
    """conj(z)-primitive of a table at level alpha+1, expressed at level alpha."""
    alpha = table.alpha - 1.0
    if not alpha > -1.0:
        raise DomainError(
            f"montee target parameter alpha = {alpha} must exceed -1 (input table at {table.alpha})"
        )
    entries = {
        (m, n + 1): v / c_factor(n + 1, m, alpha)
        for (m, n), v in table.entries.items()
    }
    constant = _montee_constant(entries, alpha)
    out = CoefficientTable(alpha=alpha, entries=entries, source=table.source)
    return MonteeResult(table=out, constant=constant)


def wirtinger_dz(f, z: complex, h: float = 1e-5) -> complex:
    """Central-difference Wirtinger z-derivative (D_x f - i D_y f)/2 at an interior point."""
    if abs(z) + h >= 1.0:
        raise DomainError(
            f"finite-difference stencil leaves the disk: |z| + h = {abs(z) + h!r} >= 1"
        )
    ensure_in_disk(z)
    fx = (f(z + h) - f(z - h)) / (2.0 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2.0 * h)
    return (fx - 1j * fy) / 2.0


def wirtinger_dzbar(f, z: complex, h: float = 1e-5) -> complex:
    """Central-difference Wirtinger conj(z)-derivative (D_x f + i D_y f)/2."""
    if abs(z) + h >= 1.0:
        raise DomainError(
            f"finite-difference stencil leaves the disk: |z| + h = {abs(z) + h!r} >= 1"
        )
    ensure_in_disk(z)
    fx = (f(z + h) - f(z - h)) / (2.0 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2.0 * h)
    return (fx + 1j * fy) / 2.0
