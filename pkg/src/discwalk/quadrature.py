"""Quadrature on the unit disk for dnu_alpha, and coefficient extraction.

The measure dnu_alpha = ((alpha+1)/pi) (1-|z|^2)^alpha dx dy factorizes in
polar coordinates.  Substituting u = 2r^2 - 1 maps the radial integral

    int_0^1 g(r) (1-r^2)^alpha r dr  =  2^(-alpha-2) int_{-1}^{1} g(r(u)) (1-u)^alpha du,

a pure Gauss-Jacobi integral with weight (1-u)^alpha, which also matches the
Jacobi argument 2r^2-1 inside the disc polynomials and avoids endpoint
singularity handling for -1 < alpha < 0.  Angular nodes are equispaced with
equal weights (exact for trigonometric polynomials of degree < angular_order).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

from .errors import CapacityError, DomainError
from .special import disc_norm_h, disc_poly, ensure_in_disk, jacobi_R_all
from .tables import CoefficientTable


@dataclass
class DiskRule:
    """Tensor quadrature rule for dnu_alpha; immutable after construction.

    Combined weights are normalized so they sum to one (the measure is a
    probability measure); all nodes are strictly inside the open disk.
    """

    alpha: float
    radial_order: int
    angular_order: int
    radial_nodes: np.ndarray    # r_i in (0, 1)
    radial_weights: np.ndarray  # sums to ~1; angular weights are uniform 1/K
    angular_nodes: np.ndarray   # theta_k = 2 pi k / K

    @property
    def nodes(self) -> np.ndarray:
        """All nodes r_i * exp(i theta_k), flattened row-major (radial outer)."""
        return self.grid().ravel()

    @property
    def weights(self) -> np.ndarray:
        w = np.outer(self.radial_weights, np.full(self.angular_order, 1.0 / self.angular_order))
        return w.ravel()

    def grid(self) -> np.ndarray:
        return self.radial_nodes[:, None] * np.exp(1j * self.angular_nodes)[None, :]


def build_rule(alpha: float, radial_order: int, angular_order: int) -> DiskRule:
    """Gauss-Jacobi (radial) x equispaced-trapezoid (angular) rule for dnu_alpha."""
    if not alpha > -1.0:
        raise DomainError(f"measure parameter must exceed -1, got alpha = {alpha}")
    if radial_order < 1 or angular_order < 1:
        raise DomainError("quadrature orders must be at least 1")
    u, w = roots_jacobi(radial_order, alpha, 0.0)
    r = np.sqrt((1.0 + u) / 2.0)
    radial_w = (alpha + 1.0) * 2.0 ** (-alpha - 1.0) * w
    radial_w /= radial_w.sum()  # exact unit mass despite rounding
    theta = 2.0 * np.pi * np.arange(angular_order) / angular_order
    return DiskRule(
        alpha=float(alpha),
        radial_order=int(radial_order),
        angular_order=int(angular_order),
        radial_nodes=r,
        radial_weights=radial_w,
        angular_nodes=theta,
    )


def default_rule(alpha: float, m_max: int, n_max: int) -> DiskRule:
    """Rule sized for exact extraction up to (m_max, n_max), with a safety margin."""
    deg = m_max + n_max
    return build_rule(alpha, deg + 8, 2 * deg + 8)


def _values_on(f, z: np.ndarray) -> np.ndarray:
    """Evaluate f on an array of points, tolerating scalar-only callables."""
    try:
        vals = np.asarray(f(z), dtype=complex)
        if vals.shape != z.shape:
            vals = np.broadcast_to(vals, z.shape)
        return np.array(vals, dtype=complex)
    except (TypeError, ValueError):
        flat = np.array([complex(f(w)) for w in z.ravel()], dtype=complex)
        return flat.reshape(z.shape)


def integrate(rule: DiskRule, f) -> complex:
    """Integral of f over the disk against dnu_alpha."""
    vals = _values_on(f, rule.nodes)
    return complex(np.sum(rule.weights * vals))


def extract_coefficient(f, m: int, n: int, rule: DiskRule) -> complex:
    """Expansion coefficient a_{m,n} = h_{m,n} * int f conj(R_{m,n}) dnu."""
    z = rule.nodes
    vals = _values_on(f, z)
    basis = disc_poly(m, n, rule.alpha, z)
    return complex(disc_norm_h(m, n, rule.alpha) * np.sum(rule.weights * vals * np.conj(basis)))


def _check_capacity(rule: DiskRule, m_max: int, n_max: int) -> None:
    deg = m_max + n_max
    if rule.radial_order < deg + 2 or rule.angular_order < 2 * deg + 1:
        raise CapacityError(
            f"rule (radial {rule.radial_order}, angular {rule.angular_order}) cannot "
            f"extract up to (m_max, n_max) = ({m_max}, {n_max}); need radial >= {deg + 2} "
            f"and angular >= {2 * deg + 1}"
        )


def expand(f, alpha: float, m_max: int, n_max: int, rule: DiskRule | None = None) -> CoefficientTable:
    """Extract all coefficients with m <= m_max, n <= n_max of f at parameter alpha.

    Equivalent to calling :func:`extract_coefficient` per index, but exploits
    the tensor structure of the rule: one angular Fourier sum per frequency
    d = m - n, then radial Gauss sums against cached Jacobi rows.

    The capacity check guarantees exactness for polynomial f up to the table
    degrees; for non-polynomial f the rule must also resolve f's own spectrum
    (angular modes beyond angular_order alias into the table), so slowly
    decaying kernels need larger orders than the default.
    """
    if m_max < 0 or n_max < 0:
        raise DomainError("expansion bounds must be nonnegative")
    if rule is None:
        rule = default_rule(alpha, m_max, n_max)
    if abs(rule.alpha - alpha) > 1e-12:
        raise DomainError(f"rule has alpha = {rule.alpha}, requested {alpha}")
    _check_capacity(rule, m_max, n_max)

    vals = _values_on(f, rule.grid())                      # (R, K)
    theta = rule.angular_nodes
    ds = np.arange(-n_max, m_max + 1)
    phases = np.exp(-1j * np.outer(ds, theta)) / rule.angular_order
    fourier = vals @ phases.T                              # (R, n_d): sum_k f e^{-i d theta} / K

    t = np.clip(2.0 * rule.radial_nodes**2 - 1.0, -1.0, 1.0)
    kmax = min(m_max, n_max)
    jac: dict[int, np.ndarray] = {
        beta: jacobi_R_all(kmax, alpha, float(beta), t) for beta in range(max(m_max, n_max) + 1)
    }

    entries: dict[tuple[int, int], complex] = {}
    rw = rule.radial_weights
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            d = m - n
            k = min(m, n)
            radial = jac[abs(d)][k] * rule.radial_nodes ** abs(d)
            acc = np.sum(rw * radial * fourier[:, d + n_max])
            entries[(m, n)] = complex(disc_norm_h(m, n, alpha) * acc)
    return CoefficientTable(alpha=float(alpha), entries=entries, source="extracted")


def synthesize(table: CoefficientTable, z):
    """Finite sum  sum a_{m,n} R_{m,n}^alpha(z)  of a coefficient table.

    Accepts scalar or array z; entries are grouped by angular frequency so the
    Jacobi recurrence runs once per frequency.
    """
    scalar = np.ndim(z) == 0
    arr = ensure_in_disk(z)
    out = np.zeros(arr.shape, dtype=complex)
    if table.entries:
        t = np.clip(2.0 * np.abs(arr.ravel()) ** 2 - 1.0, -1.0, 1.0)
        by_freq: dict[int, list[tuple[int, complex]]] = {}
        for (m, n), v in table.entries.items():
            by_freq.setdefault(m - n, []).append((min(m, n), v))
        flat = np.zeros(arr.size, dtype=complex)
        a_flat = arr.ravel()
        for d, terms in by_freq.items():
            kmax = max(k for k, _ in terms)
            rows = jacobi_R_all(kmax, table.alpha, abs(d), t)
            radial = np.zeros(arr.size, dtype=complex)
            for k, v in terms:
                radial += v * rows[k]
            ang = a_flat**d if d >= 0 else np.conj(a_flat) ** (-d)
            flat += ang * radial
        out = flat.reshape(arr.shape)
    return complex(out.ravel()[0]) if scalar else out


def coefficient_sum(table: CoefficientTable, tol: float = 1e-10) -> float:
    """Sum of the (real, nonnegative) coefficients of a table.

    For expansions with nonnegative coefficients the full sum equals the
    synthesized value at z = 1, which makes partial sums a convergence
    diagnostic for truncations.  Entries with imaginary part beyond ``tol`` or
    real part below ``-tol`` are rejected.
    """
    bad = [
        (m, n, v)
        for (m, n), v in table.sorted_items()
        if abs(v.imag) > tol or v.real < -tol
    ]
    if bad:
        head = ", ".join(f"({m},{n})={v}" for m, n, v in bad[:4])
        raise DomainError(f"coefficient_sum requires real nonnegative entries; offending: {head}")
    return float(sum(v.real for v in table.entries.values()))
