"""Shared independent oracles and generators for the test suite.

Everything here deliberately avoids the library's own computational paths:
Simpson quadrature instead of Gauss-Jacobi, explicit Gamma-function closed
forms instead of extraction, cyclic complex Jacobi rotations instead of
LAPACK, so that agreement is a genuine two-route check.
"""

from __future__ import annotations

import math

import numpy as np

from discwalk import CoefficientTable


def simpson_1d(f, a: float, b: float, panels: int) -> complex:
    """Composite Simpson rule with ``panels`` (even) subintervals."""
    if panels % 2:
        panels += 1
    x = np.linspace(a, b, panels + 1)
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    vals = np.asarray(f(x), dtype=complex)
    return complex((b - a) / panels / 3.0 * np.sum(w * vals))


def simpson_disk_monomial(a: int, b: int, alpha: float,
                          r_panels: int = 8192, t_panels: int = 512) -> complex:
    """Brute-force composite-Simpson polar integral of z^a conj(z)^b dnu_alpha.

    The integrand separates into r^(a+b+1) (1-r^2)^alpha and e^(i(a-b)theta),
    so the tensor Simpson rule factors into two 1-d Simpson sums.
    """
    radial = simpson_1d(lambda r: r ** (a + b + 1) * (1.0 - r * r) ** alpha, 0.0, 1.0, r_panels)
    angular = simpson_1d(lambda t: np.exp(1j * (a - b) * t), 0.0, 2.0 * math.pi, t_panels)
    return complex((alpha + 1.0) / math.pi * radial * angular)


def simpson_disk_integral(f, alpha: float, r_panels: int = 512, t_panels: int = 256) -> complex:
    """General 2-d composite-Simpson integral of f against dnu_alpha (moderate accuracy)."""
    if r_panels % 2:
        r_panels += 1
    if t_panels % 2:
        t_panels += 1
    r = np.linspace(0.0, 1.0, r_panels + 1)
    t = np.linspace(0.0, 2.0 * math.pi, t_panels + 1)
    wr = np.ones(r_panels + 1)
    wr[1:-1:2], wr[2:-1:2] = 4.0, 2.0
    wt = np.ones(t_panels + 1)
    wt[1:-1:2], wt[2:-1:2] = 4.0, 2.0
    z = r[:, None] * np.exp(1j * t)[None, :]
    vals = np.asarray(f(z), dtype=complex)
    dens = (alpha + 1.0) / math.pi * r * (1.0 - r * r) ** alpha
    inner = vals @ (wt * (2.0 * math.pi / t_panels / 3.0))
    return complex(np.sum(wr * (1.0 / r_panels / 3.0) * dens * inner))


def jacobi_rotation_min_eig(h: np.ndarray, sweeps: int = 100, tol: float = 1e-13) -> float:
    """Smallest eigenvalue via cyclic complex Jacobi rotations (independent of LAPACK)."""
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    norm = max(np.linalg.norm(a), 1e-300)
    for _ in range(sweeps):
        off = math.sqrt(sum(abs(a[p, q]) ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= 1e-300:
                    continue
                app, aqq, apq = a[p, p].real, a[q, q].real, a[p, q]
                phi = np.angle(apq)
                tau = (app - aqq) / (2.0 * abs(apq))
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = -s * np.exp(1j * phi)
                rot[q, p] = s * np.exp(-1j * phi)
                a = rot.conj().T @ a @ rot
    return float(np.min(np.diag(a).real))


def product_coefficient_closed(q: int, m: int, n: int, j: int) -> float:
    """Closed-form product-kernel coefficient: the weight of R_{m-j,n-j}^{q-2}
    in the expansion of z^m conj(z)^n, via the Rodrigues/Beta integral

        int z^{mu+j} conj(z)^{nu+j} conj(R_{mu,nu}) dnu_alpha
            = Gamma(alpha+2) (mu+j)! (nu+j)! / (j! Gamma(mu+nu+j+alpha+2)).
    """
    from discwalk import disc_norm_h

    alpha = q - 2.0
    mu, nu = m - j, n - j
    lg = math.lgamma
    log_val = (
        lg(alpha + 2.0)
        + lg(m + 1.0)
        + lg(n + 1.0)
        - lg(j + 1.0)
        - lg(mu + nu + j + alpha + 2.0)
    )
    return disc_norm_h(mu, nu, alpha) * math.exp(log_val)


def random_table(rng: np.random.Generator, alpha: float, max_idx: int, count: int,
                 lo: float = 0.1, hi: float = 1.0, signed: bool = False) -> CoefficientTable:
    entries = {}
    for _ in range(count):
        m = int(rng.integers(0, max_idx + 1))
        n = int(rng.integers(0, max_idx + 1))
        v = float(rng.uniform(lo, hi))
        if signed and rng.random() < 0.5:
            v = -v
        entries[(m, n)] = entries.get((m, n), 0.0) + v
    return CoefficientTable(alpha=alpha, entries=entries)


def uniform_disk_points(rng: np.random.Generator, count: int, rmax: float = 1.0) -> np.ndarray:
    r = rmax * np.sqrt(rng.random(count))
    t = 2.0 * math.pi * rng.random(count)
    return r * np.exp(1j * t)


def table_max_diff(a: CoefficientTable, b: CoefficientTable) -> float:
    keys = set(a.entries) | set(b.entries)
    return max((abs(a.get(*k) - b.get(*k)) for k in keys), default=0.0)
