"""Disc (Zernike) polynomials on the closed unit disk and Jacobi machinery.

The two-index disc polynomial of degrees (m, n) in (z, conj z) at parameter
alpha > -1 is

    R_{m,n}^alpha(z) = z^(m-n) * R_k^(alpha,|m-n|)(2|z|^2 - 1),  k = min(m, n),

where a negative power of z means that power of conj(z), and R_k^(a,b) is the
Jacobi polynomial normalized to 1 at t = 1.  Writing the angular factor as
z^(m-n) instead of r^|m-n| e^(i(m-n)theta) makes the formula exact at z = 0:
for m = n it reduces to the Jacobi value at t = -1, i.e.
R_{n,n}^alpha(0) = (-1)^n n! / (alpha+1)_n, and it vanishes for m != n.

These polynomials form a complete orthogonal system on the disk for the
probability measure dnu_alpha(z) = ((alpha+1)/pi) (1 - |z|^2)^alpha dx dy,
with squared norms 1 / h_{m,n}^alpha (see :func:`disc_norm_h`).

All functions accept scalar or ndarray evaluation points and are pure.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

#: slack on |z| <= 1 and |t| <= 1 to absorb polar/Cartesian rounding
BOUNDARY_EPS = 1e-12


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError(f"pochhammer order must be nonnegative, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _require_index(m: int, n: int, alpha: float) -> None:
    if m < 0 or n < 0:
        raise DomainError(f"disc index must be nonnegative, got (m, n) = ({m}, {n})")
    if not alpha > -1.0:
        raise DomainError(f"disc parameter must exceed -1, got alpha = {alpha}")


def ensure_in_disk(z, eps: float = BOUNDARY_EPS) -> np.ndarray:
    """Return ``z`` as a complex array, rejecting points outside the closed disk."""
    arr = np.asarray(z, dtype=complex)
    if arr.size and float(np.max(np.abs(arr))) > 1.0 + eps:
        raise DomainError(
            f"evaluation point outside closed unit disk: max |z| = {float(np.max(np.abs(arr)))!r}"
        )
    return arr


def _jacobi_p_rows(kmax: int, alpha: float, beta: float, t: np.ndarray) -> np.ndarray:
    """Unnormalized Jacobi polynomials P_j^(alpha,beta)(t), rows j = 0..kmax.

    Ascending three-term recurrence; stable on [-1, 1] for the degree range
    used here (k <= ~60).
    """
    rows = np.empty((kmax + 1, t.size), dtype=float)
    rows[0] = 1.0
    if kmax >= 1:
        rows[1] = 0.5 * ((alpha + beta + 2.0) * t + (alpha - beta))
    ab = alpha + beta
    for j in range(2, kmax + 1):
        c1 = 2.0 * j * (j + ab) * (2.0 * j + ab - 2.0)
        c2 = (2.0 * j + ab - 1.0) * (alpha * alpha - beta * beta)
        c3 = (2.0 * j + ab - 2.0) * (2.0 * j + ab - 1.0) * (2.0 * j + ab)
        c4 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * (2.0 * j + ab)
        rows[j] = ((c2 + c3 * t) * rows[j - 1] - c4 * rows[j - 2]) / c1
    return rows


def jacobi_R_all(kmax: int, alpha: float, beta: float, t) -> np.ndarray:
    """Normalized Jacobi values R_j(t) = P_j(t)/P_j(1) for all j = 0..kmax.

    ``t`` may be scalar or 1-d; the result has shape (kmax+1, len(t)).
    """
    if kmax < 0:
        raise DomainError(f"degree must be nonnegative, got {kmax}")
    if not (alpha > -1.0 and beta > -1.0):
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    arr = np.atleast_1d(np.asarray(t, dtype=float))
    if arr.size and float(np.max(np.abs(arr))) > 1.0 + BOUNDARY_EPS:
        raise DomainError(f"Jacobi argument outside [-1, 1]: {float(np.max(np.abs(arr)))!r}")
    arr = np.clip(arr, -1.0, 1.0)
    rows = _jacobi_p_rows(kmax, alpha, beta, arr)
    # P_j(1) = (alpha+1)_j / j!, accumulated incrementally
    norm = 1.0
    for j in range(1, kmax + 1):
        norm *= (alpha + j) / j
        rows[j] /= norm
    return rows


def jacobi_R(k: int, alpha: float, beta: float, t):
    """Jacobi polynomial of degree k normalized so that the value at 1 is 1."""
    scalar = np.ndim(t) == 0
    rows = jacobi_R_all(k, alpha, beta, t)
    out = rows[k]
    return float(out[0]) if scalar else out.reshape(np.shape(t))


def disc_poly(m: int, n: int, alpha: float, z):
    """Disc polynomial R_{m,n}^alpha at z (scalar or array) in the closed disk."""
    _require_index(m, n, alpha)
    scalar = np.ndim(z) == 0
    arr = ensure_in_disk(z)
    d = m - n
    t = np.clip(2.0 * np.abs(arr) ** 2 - 1.0, -1.0, 1.0)
    radial = jacobi_R_all(min(m, n), alpha, abs(d), t.ravel())[-1].reshape(arr.shape)
    ang = arr**d if d >= 0 else np.conj(arr) ** (-d)
    out = ang * radial
    return complex(out.ravel()[0]) if scalar else out


def disc_poly_at_zero(m: int, n: int, alpha: float) -> float:
    """Exact value of R_{m,n}^alpha at the origin.

    Zero off the diagonal; (-1)^n n! / (alpha+1)_n on it.
    """
    _require_index(m, n, alpha)
    if m != n:
        return 0.0
    return (-1.0) ** n * math.factorial(n) / pochhammer(alpha + 1.0, n)


def disc_norm_h(m: int, n: int, alpha: float) -> float:
    """Orthogonality constant h_{m,n}^alpha.

    h = (m+n+alpha+1)/(alpha+1) * C(alpha+m, alpha) * C(alpha+n, alpha), with the
    generalized binomials C(alpha+k, alpha) = Gamma(alpha+k+1)/(Gamma(alpha+1) k!)
    so non-integer alpha works uniformly.  The squared L^2(dnu_alpha) norm of
    R_{m,n}^alpha is 1/h.
    """
    _require_index(m, n, alpha)
    lg = math.lgamma
    log_binoms = (
        lg(alpha + m + 1.0)
        - lg(alpha + 1.0)
        - lg(m + 1.0)
        + lg(alpha + n + 1.0)
        - lg(alpha + 1.0)
        - lg(n + 1.0)
    )
    return (m + n + alpha + 1.0) / (alpha + 1.0) * math.exp(log_binoms)


def c_factor(m: int, n: int, alpha: float) -> float:
    """Multiplier c_alpha(m, n) = m (n + alpha + 1) / (alpha + 1).

    Appears in the Wirtinger derivative identity
    D_z R_{m,n}^alpha = c_alpha(m, n) R_{m-1,n}^(alpha+1) and its conjugate.
    """
    if not alpha > -1.0:
        raise DomainError(f"parameter must exceed -1, got alpha = {alpha}")
    return m * (n + alpha + 1.0) / (alpha + 1.0)


def disc_poly_dz(m: int, n: int, alpha: float, z):
    """Wirtinger z-derivative of R_{m,n}^alpha, via the index-lowering identity."""
    _require_index(m, n, alpha)
    if m == 0:
        arr = ensure_in_disk(z)
        return 0j if np.ndim(z) == 0 else np.zeros(arr.shape, dtype=complex)
    return c_factor(m, n, alpha) * disc_poly(m - 1, n, alpha + 1.0, z)


def disc_poly_dzbar(m: int, n: int, alpha: float, z):
    """Wirtinger conj(z)-derivative of R_{m,n}^alpha."""
    _require_index(m, n, alpha)
    if n == 0:
        arr = ensure_in_disk(z)
        return 0j if np.ndim(z) == 0 else np.zeros(arr.shape, dtype=complex)
    return c_factor(n, m, alpha) * disc_poly(m, n - 1, alpha + 1.0, z)
