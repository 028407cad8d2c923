"""Parametric families of positive definite kernels on complex spheres.

Six families with closed forms on the disk and known disc-polynomial
expansions, used as ground-truth fixtures everywhere else:

* ``product``:     z^m conj(z)^n, coefficients nonnegative; extracted by quadrature.
* ``poisson``:     (1/sigma_2q) (1-r^2)^q / |1 - r z|^(2q); extracted by quadrature
                   (its expansion coefficients have no printed closed form).
* ``exponential``: e^(z + conj z); every coefficient strictly positive:
                   a_{m,n} = h_{m,n}^{q-2} (q-1)! * sum_j 1/(j! (m+n+q-1+j)!).
* ``aktas``:       generating-function kernel with coefficients
                   (q-1)_n t^(m+n)/(m! n!) at table key (m+n, n), 0 < t < 1.
* ``horn``:        double hypergeometric (H4-type) kernel, coefficients
                   (q+n-1)_m (b)_n t^n s^m/(m! n!) at key (m, m+n).
* ``lauricella``:  triple hypergeometric (F14-type) kernel, coefficients
                   (q-1)_n (b)_m t^m s^n/(m! n!) at key (m+n, n).

Series evaluators sum the defining double/triple series with multiplicative
term recurrences, stopping once three consecutive row/term maxima fall below
1e-13 of the partial sum, with a hard cap of 200 terms per index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .positivity import IndexSet, difference_set
from .quadrature import DiskRule, expand
from .special import disc_norm_h, ensure_in_disk, pochhammer
from .tables import CoefficientTable

_SERIES_RTOL = 1e-13
_SERIES_CAP = 200
_SERIES_BLOWUP = 1e120


def sigma_2q(q: int) -> float:
    """Total surface measure of the unit sphere of C^q (= S^{2q-1} in R^{2q})."""
    if q < 1:
        raise DomainError(f"sphere parameter must be >= 1, got q = {q}")
    return 2.0 * math.pi**q / math.factorial(q - 1)


def _check_q(q: int) -> None:
    if q != int(q) or q < 2:
        raise DomainError(f"family requires an integer q >= 2, got {q!r}")


@dataclass(frozen=True)
class ProductKernel:
    m: int
    n: int
    q: int

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.m < 0 or self.n < 0:
            raise DomainError(f"monomial powers must be nonnegative, got ({self.m}, {self.n})")


@dataclass(frozen=True)
class PoissonSzego:
    r: float
    q: int

    def __post_init__(self) -> None:
        _check_q(self.q)
        if not 0.0 <= self.r < 1.0:
            raise DomainError(f"radius must satisfy 0 <= r < 1, got r = {self.r}")


@dataclass(frozen=True)
class Exponential:
    q: int

    def __post_init__(self) -> None:
        _check_q(self.q)


@dataclass(frozen=True)
class Aktas:
    t: float
    q: int

    def __post_init__(self) -> None:
        _check_q(self.q)
        if not 0.0 < self.t < 1.0:
            raise DomainError(f"parameter must satisfy 0 < t < 1, got t = {self.t}")


@dataclass(frozen=True)
class Horn:
    t: float
    s: float
    b: int
    q: int
    # convergence radii of the double series, constrained by 4 rx = (ry - 1)^2;
    # (1, 3) is the smallest positive-integer solution
    rx: float = 1.0
    ry: float = 3.0

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.b < 1 or self.b != int(self.b):
            raise DomainError(f"parameter b must be a positive integer, got {self.b!r}")
        if not (self.t > 0 and self.s > 0):
            raise DomainError(f"parameters must be positive, got t = {self.t}, s = {self.s}")
        if abs(4.0 * self.rx - (self.ry - 1.0) ** 2) > 1e-12:
            raise DomainError(f"radii must satisfy 4 rx = (ry - 1)^2, got ({self.rx}, {self.ry})")
        if not abs(self.s) < 1.0:
            raise DomainError(f"parameter must satisfy |s| < 1, got s = {self.s}")
        if not abs(self.s) / (1.0 - self.s) ** 2 < self.rx:
            raise DomainError(
                f"|s|/(1-s)^2 = {abs(self.s) / (1.0 - self.s) ** 2} exceeds radius {self.rx}"
            )
        if not abs(self.t) / (1.0 - self.s) < self.ry:
            raise DomainError(
                f"|t|/(1-s) = {abs(self.t) / (1.0 - self.s)} exceeds radius {self.ry}"
            )


@dataclass(frozen=True)
class Lauricella:
    t: float
    s: float
    b: int
    q: int
    r2: float = 0.5  # convergence radius for the t-slot; r1 = r2 (1 - r2)

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.b < 1 or self.b != int(self.b):
            raise DomainError(f"parameter b must be a positive integer, got {self.b!r}")
        if not (self.t > 0 and self.s > 0):
            raise DomainError(f"parameters must be positive, got t = {self.t}, s = {self.s}")
        if not 0.0 < self.r2 < 1.0:
            raise DomainError(f"radius must satisfy 0 < r2 < 1, got {self.r2}")
        r1 = self.r2 * (1.0 - self.r2)
        if not abs(self.s) < r1:
            raise DomainError(f"parameter must satisfy |s| < r1 = {r1}, got s = {self.s}")
        if not abs(self.t) < self.r2:
            raise DomainError(f"parameter must satisfy |t| < r2 = {self.r2}, got t = {self.t}")


FamilySpec = ProductKernel | PoissonSzego | Exponential | Aktas | Horn | Lauricella

_FAMILY_NAMES = {
    ProductKernel: "product",
    PoissonSzego: "poisson",
    Exponential: "exponential",
    Aktas: "aktas",
    Horn: "horn",
    Lauricella: "lauricella",
}


def family_alpha(spec: FamilySpec) -> float:
    return float(spec.q - 2)


def make_family(name: str, q: int, params: dict | None = None) -> FamilySpec:
    params = dict(params or {})
    try:
        if name == "product":
            return ProductKernel(m=int(params.pop("m")), n=int(params.pop("n")), q=q, **params)
        if name == "poisson":
            return PoissonSzego(r=float(params.pop("r")), q=q, **params)
        if name == "exponential":
            return Exponential(q=q, **params)
        if name == "aktas":
            return Aktas(t=float(params.pop("t")), q=q, **params)
        if name == "horn":
            return Horn(
                t=float(params.pop("t")),
                s=float(params.pop("s")),
                b=int(params.pop("b")),
                q=q,
                **params,
            )
        if name == "lauricella":
            return Lauricella(
                t=float(params.pop("t")),
                s=float(params.pop("s")),
                b=int(params.pop("b")),
                q=q,
                **params,
            )
    except KeyError as exc:
        raise DomainError(f"family {name!r} is missing required parameter {exc}") from exc
    except TypeError as exc:
        raise DomainError(f"bad parameters for family {name!r}: {exc}") from exc
    raise DomainError(f"unknown family {name!r}")


def family_to_dict(spec: FamilySpec) -> dict:
    name = _FAMILY_NAMES[type(spec)]
    params = {
        k: v for k, v in spec.__dict__.items() if k != "q"
    }
    return {"family": name, "q": spec.q, "params": params}


def family_from_dict(doc: dict) -> FamilySpec:
    try:
        return make_family(str(doc["family"]), int(doc["q"]), doc.get("params", {}))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed family document: {exc}") from exc


# --------------------------------------------------------------------------
# closed-form evaluation


def _horn_h4(a: float, b: float, c: float, d: float, x: complex, y: complex) -> complex:
    """H4-type double series sum_{m,n} (a)_{2m+n} (b)_n / ((c)_m (d)_n) x^m y^n / (m! n!)."""
    total = 0j
    row_head = 1.0 + 0j  # term at (m, 0)
    quiet_rows = 0
    for m in range(_SERIES_CAP + 1):
        if m > 0:
            row_head *= (a + 2 * m - 2) * (a + 2 * m - 1) * x / ((c + m - 1) * m)
        term = row_head
        row_sum = term
        row_max = abs(term)
        quiet = 0
        for n in range(1, _SERIES_CAP + 1):
            term *= (a + 2 * m + n - 1) * (b + n - 1) * y / ((d + n - 1) * n)
            row_sum += term
            row_max = max(row_max, abs(term))
            if abs(term) > _SERIES_BLOWUP:
                raise ConvergenceError("series terms diverge; parameters outside domain")
            if abs(term) <= _SERIES_RTOL * max(1.0, abs(total + row_sum)):
                quiet += 1
                if quiet >= 3:
                    break
            else:
                quiet = 0
        else:
            raise ConvergenceError("inner series failed to converge within the term cap")
        total += row_sum
        if row_max > _SERIES_BLOWUP:
            raise ConvergenceError("series rows diverge; parameters outside domain")
        if row_max <= _SERIES_RTOL * max(1.0, abs(total)):
            quiet_rows += 1
            if quiet_rows >= 3:
                return total
        else:
            quiet_rows = 0
    raise ConvergenceError("outer series failed to converge within the term cap")


def _lauricella_f14(
    a1: float, b1: float, b2: float, c1: float, c2: float,
    x1: complex, x2: complex, x3: complex,
) -> complex:
    """F14-type triple series
    sum (a1)_{m+n+p} (b1)_{m+p} (b2)_n / ((c1)_m (c2)_{n+p}) x1^m x2^n x3^p / (m! n! p!).
    """
    total = 0j
    m_head = 1.0 + 0j  # term at (m, 0, 0)
    quiet_m = 0
    for m in range(_SERIES_CAP + 1):
        if m > 0:
            m_head *= (a1 + m - 1) * (b1 + m - 1) * x1 / ((c1 + m - 1) * m)
        block_sum = 0j
        block_max = 0.0
        n_head = m_head  # term at (m, n, 0)
        quiet_n = 0
        for n in range(_SERIES_CAP + 1):
            if n > 0:
                n_head *= (a1 + m + n - 1) * (b2 + n - 1) * x2 / ((c2 + n - 1) * n)
            term = n_head
            row_sum = term
            row_max = abs(term)
            quiet_p = 0
            for p in range(1, _SERIES_CAP + 1):
                term *= (a1 + m + n + p - 1) * (b1 + m + p - 1) * x3 / ((c2 + n + p - 1) * p)
                row_sum += term
                row_max = max(row_max, abs(term))
                if abs(term) > _SERIES_BLOWUP:
                    raise ConvergenceError("series terms diverge; parameters outside domain")
                if abs(term) <= _SERIES_RTOL * max(1.0, abs(total + block_sum + row_sum)):
                    quiet_p += 1
                    if quiet_p >= 3:
                        break
                else:
                    quiet_p = 0
            else:
                raise ConvergenceError("p-series failed to converge within the term cap")
            block_sum += row_sum
            block_max = max(block_max, row_max)
            if row_max <= _SERIES_RTOL * max(1.0, abs(total + block_sum)):
                quiet_n += 1
                if quiet_n >= 3:
                    break
            else:
                quiet_n = 0
        else:
            raise ConvergenceError("n-series failed to converge within the term cap")
        total += block_sum
        if block_max > _SERIES_BLOWUP:
            raise ConvergenceError("series blocks diverge; parameters outside domain")
        if block_max <= _SERIES_RTOL * max(1.0, abs(total)):
            quiet_m += 1
            if quiet_m >= 3:
                return total
        else:
            quiet_m = 0
    raise ConvergenceError("m-series failed to converge within the term cap")


def eval_family(spec: FamilySpec, z):
    """Closed-form value of a family kernel at z (scalar or array) in the disk."""
    scalar = np.ndim(z) == 0
    arr = ensure_in_disk(z)
    q = spec.q

    if isinstance(spec, ProductKernel):
        out = arr**spec.m * np.conj(arr) ** spec.n
    elif isinstance(spec, PoissonSzego):
        out = (
            (1.0 - spec.r**2) ** q
            / np.abs(1.0 - spec.r * arr) ** (2 * q)
            / sigma_2q(q)
        ).astype(complex)
    elif isinstance(spec, Exponential):
        out = np.exp(2.0 * np.real(arr)).astype(complex)
    elif isinstance(spec, Aktas):
        t = spec.t
        big = np.sqrt(1.0 - 2.0 * (2.0 * np.abs(arr) ** 2 - 1.0) * t + t * t)
        out = (1.0 / big) * (2.0 / (1.0 - t + big)) ** (q - 2) * np.exp(2.0 * t * arr / (1.0 + t + big))
    elif isinstance(spec, Horn):
        xs = spec.s * (np.abs(arr) ** 2 - 1.0) / (1.0 - spec.s) ** 2
        ys = spec.t * np.conj(arr) / (1.0 - spec.s)
        flat = np.array(
            [
                _horn_h4(q - 1.0, float(spec.b), q - 1.0, q - 1.0, complex(xv), complex(yv))
                for xv, yv in zip(np.ravel(xs), np.ravel(ys))
            ],
            dtype=complex,
        )
        out = flat.reshape(arr.shape) / (1.0 - spec.s) ** (q - 1)
    elif isinstance(spec, Lauricella):
        x1 = spec.s * (np.abs(arr) ** 2 - 1.0)
        x2 = spec.t * arr
        x3 = spec.s * np.abs(arr) ** 2
        flat = np.array(
            [
                _lauricella_f14(
                    1.0, q - 1.0, float(spec.b), q - 1.0, 1.0,
                    complex(a), complex(bv), complex(cv),
                )
                for a, bv, cv in zip(np.ravel(x1), np.ravel(x2), np.ravel(x3))
            ],
            dtype=complex,
        )
        out = flat.reshape(arr.shape)
    else:  # pragma: no cover
        raise DomainError(f"unknown family spec {spec!r}")
    return complex(np.ravel(out)[0]) if scalar else np.asarray(out, dtype=complex)


# --------------------------------------------------------------------------
# expansion coefficients


def _exponential_coefficient(q: int, m: int, n: int) -> float:
    # a_{m,n} = h_{m,n}^{q-2} (q-1)! sum_j 1/(j! (m+n+q-1+j)!); the inner sum
    # is summed to a 1e-15 relative tail (terms decay factorially).
    nu = m + n + q - 1
    term = 1.0 / math.factorial(nu)
    total = term
    j = 0
    while True:
        j += 1
        term /= j * (nu + j)
        total += term
        if term <= 1e-15 * total:
            break
    return disc_norm_h(m, n, float(q - 2)) * math.factorial(q - 1) * total


def family_coefficients(
    spec: FamilySpec, m_max: int, n_max: int, rule: DiskRule | None = None
) -> CoefficientTable:
    """Coefficient table of a family up to (m_max, n_max).

    Exponential/Aktas/Horn/Lauricella come from closed-form series re-indexed
    onto disc-polynomial keys; ProductKernel and PoissonSzego are extracted by
    quadrature and tagged ``source="extracted"``.
    """
    if m_max < 0 or n_max < 0:
        raise DomainError("coefficient bounds must be nonnegative")
    q = spec.q
    alpha = family_alpha(spec)

    if isinstance(spec, (ProductKernel, PoissonSzego)):
        return expand(lambda z: eval_family(spec, z), alpha, m_max, n_max, rule=rule)

    entries: dict[tuple[int, int], complex] = {}
    if isinstance(spec, Exponential):
        for m in range(m_max + 1):
            for n in range(n_max + 1):
                entries[(m, n)] = complex(_exponential_coefficient(q, m, n))
    elif isinstance(spec, Aktas):
        # series index (m, n) lands at table key (m+n, n)
        for key_n in range(min(n_max, m_max) + 1):
            for key_m in range(key_n, m_max + 1):
                m, n = key_m - key_n, key_n
                entries[(key_m, key_n)] = complex(
                    pochhammer(q - 1.0, n) * spec.t ** (m + n) / (math.factorial(m) * math.factorial(n))
                )
    elif isinstance(spec, Horn):
        # series index (m, n) lands at table key (m, m+n)
        for key_m in range(min(m_max, n_max) + 1):
            for key_n in range(key_m, n_max + 1):
                m, n = key_m, key_n - key_m
                entries[(key_m, key_n)] = complex(
                    pochhammer(q + n - 1.0, m)
                    * pochhammer(float(spec.b), n)
                    * spec.t**n
                    * spec.s**m
                    / (math.factorial(m) * math.factorial(n))
                )
    elif isinstance(spec, Lauricella):
        # series index (m, n) lands at table key (m+n, n)
        for key_n in range(min(n_max, m_max) + 1):
            for key_m in range(key_n, m_max + 1):
                m, n = key_m - key_n, key_n
                entries[(key_m, key_n)] = complex(
                    pochhammer(q - 1.0, n)
                    * pochhammer(float(spec.b), m)
                    * spec.t**m
                    * spec.s**n
                    / (math.factorial(m) * math.factorial(n))
                )
    else:  # pragma: no cover
        raise DomainError(f"unknown family spec {spec!r}")
    return CoefficientTable(alpha=alpha, entries=entries, source="exact")


def poisson_szego_profile(
    spec: PoissonSzego, m_max: int, n_max: int, rule: DiskRule | None = None
) -> dict[tuple[int, int], float]:
    """Radial profile values S_{m,n}(r) of the Poisson kernel expansion.

    The expansion coefficients factor as a_{m,n} = (h_{m,n}/sigma_2q) S_{m,n}(r)
    with S nonnegative and S -> 1 as r -> 1; this solves for S = a sigma / h.
    The profiles decay like r^(m+n), so large r needs a rule with angular order
    well beyond the default to avoid aliasing (pass ``rule`` explicitly).
    """
    if not isinstance(spec, PoissonSzego):
        raise DomainError(f"profile is defined for the Poisson kernel, got {spec!r}")
    table = family_coefficients(spec, m_max, n_max, rule=rule)
    sigma = sigma_2q(spec.q)
    return {
        (m, n): v.real * sigma / disc_norm_h(m, n, table.alpha)
        for (m, n), v in table.sorted_items()
    }


def difference_pattern(
    spec: FamilySpec,
    threshold: float = 1e-10,
    m_max: int = 8,
    n_max: int = 8,
) -> IndexSet:
    """Exact symbolic difference set of the family's full (untruncated) support.

    Exponential has every coefficient positive (all of Z); Aktas and Lauricella
    are supported on keys (m+n, n), giving Z+; Horn on (m, m+n), giving -Z+.
    ProductKernel and PoissonSzego patterns are read off an extracted table
    with the given threshold.
    """
    if isinstance(spec, Exponential):
        return IndexSet.of(progressions=[(0, 1), (0, -1)])
    if isinstance(spec, (Aktas, Lauricella)):
        return IndexSet.of(progressions=[(0, 1)])
    if isinstance(spec, Horn):
        return IndexSet.of(progressions=[(0, -1)])
    if isinstance(spec, ProductKernel):
        m_max, n_max = spec.m, spec.n
    table = family_coefficients(spec, m_max, n_max)
    return difference_set(table, threshold=threshold, min_index=0)
