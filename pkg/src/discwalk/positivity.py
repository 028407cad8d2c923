"""Positive definiteness deciders for disc-polynomial expansions.

An isotropic kernel f(<xi, eta>) on the complex unit sphere of dimension 2q is
positive definite iff all expansion coefficients a_{m,n}^{q-2} are nonnegative
and summable, and strictly positive definite iff additionally the difference
set {m - n : a_{m,n} > 0} meets every arithmetic progression N Z + j.

Difference sets are represented exactly as a finite part plus half-infinite
progressions {offset + step k : k >= 0}, so membership and intersection with a
residue class are integer-exact.  Strictness over *all* N is undecidable from
a finite table alone; verdicts therefore carry their epistemic status:

* ``certified_exact`` -- a sufficient rule fired (a step-1 progression is
  cofinal in Z+ or -Z+, hence meets everything), or the set is
  progressions-only and the divisor-closure scan over N | lcm(|steps|) is an
  exact decision procedure (coverage mod N depends only on gcd(N, lcm)).
* ``refuted_at`` -- a concrete empty intersection with N Z + j was found.
* ``certified_up_to`` -- mixed finite/progression sets checked for N <= N_max.

Empirical Gram-matrix checks on sampled sphere points are evidence for
positive definiteness, never a certificate of strictness.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, NotPositiveDefiniteError
from .quadrature import _values_on
from .tables import CoefficientTable


# --------------------------------------------------------------------------
# exact integer sets: finite part + arithmetic progressions over k >= 0


@dataclass(frozen=True)
class Progression:
    offset: int
    step: int

    def __post_init__(self) -> None:
        if self.step == 0:
            raise DomainError("progression step must be nonzero")


@dataclass(frozen=True)
class IndexSet:
    finite: frozenset = frozenset()
    progressions: tuple = ()

    @classmethod
    def of(cls, finite=(), progressions=()) -> "IndexSet":
        progs = tuple(
            p if isinstance(p, Progression) else Progression(int(p[0]), int(p[1]))
            for p in progressions
        )
        return cls(finite=frozenset(int(e) for e in finite), progressions=progs)

    def is_empty(self) -> bool:
        return not self.finite and not self.progressions

    def contains(self, e: int) -> bool:
        if e in self.finite:
            return True
        for p in self.progressions:
            diff = e - p.offset
            if diff % p.step == 0 and diff // p.step >= 0:
                return True
        return False

    def elements_within(self, bound: int) -> np.ndarray:
        """All elements with |e| <= bound, sorted and deduplicated."""
        chunks = [np.array([e for e in self.finite if abs(e) <= bound], dtype=np.int64)]
        for p in self.progressions:
            a, d = p.offset, p.step
            # a + k d in [-bound, bound], k >= 0, with integer-exact ceil/floor
            if d > 0:
                kmin = -((bound + a) // d)
                kmax = (bound - a) // d
            else:
                kmin = -((bound - a) // (-d))
                kmax = (bound + a) // (-d)
            kmin = max(kmin, 0)
            if kmax >= kmin:
                chunks.append(a + d * np.arange(kmin, kmax + 1, dtype=np.int64))
        return np.unique(np.concatenate(chunks))

    def negated(self) -> "IndexSet":
        return IndexSet.of(
            finite=(-e for e in self.finite),
            progressions=((-p.offset, -p.step) for p in self.progressions),
        )

    def union(self, other: "IndexSet") -> "IndexSet":
        return IndexSet.of(
            finite=self.finite | other.finite,
            progressions=self.progressions + other.progressions,
        )

    def to_dict(self) -> dict:
        return {
            "finite": sorted(self.finite),
            "progressions": [
                {"offset": p.offset, "step": p.step} for p in self.progressions
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "IndexSet":
        try:
            return cls.of(
                finite=doc.get("finite", ()),
                progressions=[(p["offset"], p["step"]) for p in doc.get("progressions", ())],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed index set document: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "IndexSet":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON for index set: {exc}") from exc


def intersects_progression(s: IndexSet, N: int, j: int) -> bool:
    """Exact test of S intersect (N Z + j) != empty set."""
    if N < 1:
        raise DomainError(f"modulus must be >= 1, got {N}")
    if not 0 <= j < N:
        raise DomainError(f"residue must satisfy 0 <= j < N, got j = {j}")
    for e in s.finite:
        if e % N == j:
            return True
    for p in s.progressions:
        # offset + step k = j (mod N) is solvable iff gcd(|step|, N) | (j - offset);
        # solutions recur with period N/gcd, so some k >= 0 always exists.
        g = math.gcd(abs(p.step), N)
        if (j - p.offset) % g == 0:
            return True
    return False


# --------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class SpdVerdict:
    kind: str                 # "refuted_at" | "certified_exact" | "certified_up_to"
    N: int | None = None
    j: int | None = None
    reason: str | None = None
    n_max: int | None = None

    @property
    def is_spd(self) -> bool:
        return self.kind != "refuted_at"

    @classmethod
    def refuted_at(cls, N: int, j: int) -> "SpdVerdict":
        return cls(kind="refuted_at", N=N, j=j)

    @classmethod
    def certified_exact(cls, reason: str) -> "SpdVerdict":
        return cls(kind="certified_exact", reason=reason)

    @classmethod
    def certified_up_to(cls, n_max: int) -> "SpdVerdict":
        return cls(kind="certified_up_to", n_max=n_max)

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "refuted_at":
            doc["N"] = self.N
            doc["j"] = self.j
        elif self.kind == "certified_exact":
            doc["reason"] = self.reason
        else:
            doc["n_max"] = self.n_max
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "SpdVerdict":
        kind = doc.get("kind")
        if kind == "refuted_at":
            return cls.refuted_at(int(doc["N"]), int(doc["j"]))
        if kind == "certified_exact":
            return cls.certified_exact(str(doc["reason"]))
        if kind == "certified_up_to":
            return cls.certified_up_to(int(doc["n_max"]))
        raise DomainError(f"unknown verdict kind {kind!r}")


def _divisors(n: int) -> list[int]:
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def spd_verdict(s: IndexSet, n_max: int = 64) -> SpdVerdict:
    """Decide whether S meets every residue class N Z + j (all N >= 1)."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if any(abs(p.step) == 1 for p in s.progressions):
        return SpdVerdict.certified_exact("step-1 progression")
    if not s.finite:
        # progressions only (or empty): coverage mod N depends only on
        # gcd(N, L), so scanning the divisors of L decides all N exactly.
        steps = [abs(p.step) for p in s.progressions]
        L = math.lcm(*steps) if steps else 1
        for N in _divisors(L):
            for j in range(N):
                if not intersects_progression(s, N, j):
                    return SpdVerdict.refuted_at(N, j)
        return SpdVerdict.certified_exact("divisor closure")
    for N in range(1, n_max + 1):
        for j in range(N):
            if not intersects_progression(s, N, j):
                return SpdVerdict.refuted_at(N, j)
    return SpdVerdict.certified_up_to(n_max)


# --------------------------------------------------------------------------
# table-level deciders


@dataclass
class PdReport:
    ok: bool
    violations: list = field(default_factory=list)


def is_pd(table: CoefficientTable, tol: float = 1e-10) -> PdReport:
    """Nonnegativity gate: every entry must have |Im| <= tol and Re >= -tol."""
    violations = [
        (m, n, v)
        for (m, n), v in table.sorted_items()
        if abs(v.imag) > tol or v.real < -tol
    ]
    return PdReport(ok=not violations, violations=violations)


def difference_set(table: CoefficientTable, threshold: float = 0.0, min_index: int = 0) -> IndexSet:
    """Exact difference set {m - n : a_{m,n} > threshold, m, n >= min_index}.

    The threshold defaults to 0 for exact tables and should be set explicitly
    (e.g. 1e-10) for quadrature-derived tables, where "zero" entries carry
    roundoff noise.
    """
    if threshold < 0:
        raise DomainError(f"threshold must be nonnegative, got {threshold}")
    finite = {
        m - n
        for (m, n), v in table.entries.items()
        if m >= min_index and n >= min_index and v.real > threshold
    }
    return IndexSet.of(finite=finite)


def is_spd(
    table: CoefficientTable,
    q: int,
    n_max: int = 64,
    tol: float = 1e-10,
    threshold: float = 0.0,
    declared_set: IndexSet | None = None,
) -> SpdVerdict:
    """Strict positive definiteness verdict for a table describing a kernel on
    the 2q-sphere.

    Requires the nonnegativity gate first (raises NotPositiveDefiniteError with
    the violating entries otherwise).  ``declared_set`` substitutes the exact
    symbolic difference set of the untruncated function when the table is a
    finite truncation of a known family.
    """
    if q < 2 or q != int(q):
        raise DomainError(f"sphere parameter must be an integer >= 2, got q = {q}")
    if abs(table.alpha - (q - 2)) > 1e-9:
        raise DomainError(
            f"table parameter alpha = {table.alpha} does not match q - 2 = {q - 2}"
        )
    report = is_pd(table, tol=tol)
    if not report.ok:
        raise NotPositiveDefiniteError(report.violations)
    s = declared_set if declared_set is not None else difference_set(table, threshold, 0)
    return spd_verdict(s, n_max)


# --------------------------------------------------------------------------
# empirical Gram validation


@dataclass
class SpherePointSet:
    q: int
    points: np.ndarray  # (count, q), unit rows
    seed: int


def sample_sphere(q: int, count: int, seed: int = 42) -> SpherePointSet:
    """Deterministic uniform sample on the complex unit sphere in C^q.

    Each point is a q-vector of iid standard complex Gaussians normalized to
    unit length.  The class of kernels on the 2-sphere (q = 1) is different
    and excluded throughout, hence q >= 2.
    """
    if q < 2:
        raise DomainError(f"sphere parameter must be >= 2, got q = {q}")
    if count < 1:
        raise DomainError(f"point count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((count, q)) + 1j * rng.standard_normal((count, q))
    pts = raw / np.linalg.norm(raw, axis=1, keepdims=True)
    return SpherePointSet(q=int(q), points=pts, seed=int(seed))


def gram_matrix(f, pts: SpherePointSet) -> np.ndarray:
    """Gram matrix G[u][v] = f(<xi_u, xi_v>) over a sphere point set.

    Positive definite f satisfies f(conj z) = conj(f(z)), which makes G
    Hermitian; a warning is emitted if that fails beyond 1e-9.
    """
    inner = pts.points @ pts.points.conj().T
    g = _values_on(f, inner)
    dev = float(np.max(np.abs(g - g.conj().T)))
    if dev > 1e-9:
        warnings.warn(
            f"Gram matrix deviates from Hermitian by {dev:.3e}; "
            "the kernel function violates f(conj z) = conj f(z)",
            stacklevel=2,
        )
    return g


def min_eigenvalue(h: np.ndarray) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    h = np.asarray(h, dtype=complex)
    dev = float(np.max(np.abs(h - h.conj().T)))
    if dev > 1e-9:
        raise DomainError(f"matrix is not Hermitian within 1e-9 (deviation {dev:.3e})")
    try:
        return float(np.linalg.eigvalsh(h)[0])
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Hermitian eigensolve failed: {exc}") from exc


# --------------------------------------------------------------------------
# counterexample fixtures: kernels supported on the two coefficient axes
#
# Case "i":  support {(m, 0) : m in Z+}, so the difference set is Z+; the
#            z-derivative keeps it while the conj(z)-derivative kills it.
# Case "ii": the mirror image supported on {(0, n)}.
# Case "iii": axis supports patterned mod 5 so that the function itself meets
#            every residue class, while each derivative misses 5 Z.

_AXES: dict[str, tuple[IndexSet, IndexSet]] = {
    "i": (IndexSet.of(progressions=[(0, 1)]), IndexSet.of()),
    "ii": (IndexSet.of(), IndexSet.of(progressions=[(0, 1)])),
    "iii": (
        IndexSet.of(progressions=[(5, 5), (2, 5), (3, 5), (4, 5)]),
        IndexSet.of(progressions=[(4, 5)]),
    ),
}

#: expected outcomes per case: which of f and its derivatives stay strictly PD
COUNTEREXAMPLE_EXPECTED: dict[str, dict[str, bool]] = {
    "i": {"f": True, "dz": True, "dzbar": False, "dx": True},
    "ii": {"f": True, "dz": False, "dzbar": True, "dx": True},
    "iii": {"f": True, "dz": False, "dzbar": False, "dx": False},
}


def _axis_shift_down(s: IndexSet) -> IndexSet:
    """Image of a nonnegative axis support under index lowering e -> e - 1 (e >= 1)."""
    finite = {e - 1 for e in s.finite if e >= 1}
    progs = []
    for p in s.progressions:
        if p.offset >= 1:
            progs.append((p.offset - 1, p.step))
        else:
            # drops the k = 0 element; the rest starts at step
            progs.append((p.step - 1, p.step))
    return IndexSet.of(finite=finite, progressions=progs)


def _axis_difference(m_axis: IndexSet, n_axis: IndexSet) -> IndexSet:
    return m_axis.union(n_axis.negated())


def counterexample_sets(case: str) -> dict[str, IndexSet]:
    """Exact symbolic difference sets of a case function and its derivatives."""
    if case not in _AXES:
        raise DomainError(f"unknown counterexample case {case!r}; expected i, ii or iii")
    m_axis, n_axis = _AXES[case]
    m_down = _axis_shift_down(m_axis)
    n_down = _axis_shift_down(n_axis)
    return {
        "f": _axis_difference(m_axis, n_axis),
        "dz": _axis_difference(m_down, IndexSet.of()),
        "dzbar": _axis_difference(IndexSet.of(), n_down),
        "dx": _axis_difference(m_down, n_down),
    }


def counterexample_table(case: str, q: int, truncation: int) -> tuple[CoefficientTable, IndexSet]:
    """Truncated coefficient table of a counterexample case plus the exact
    (untruncated) symbolic difference set.

    The magnitudes 2^-(m+n) are a summability choice; only the support pattern
    carries the phenomenon.
    """
    if case not in _AXES:
        raise DomainError(f"unknown counterexample case {case!r}; expected i, ii or iii")
    if q < 2 or q != int(q):
        raise DomainError(f"sphere parameter must be an integer >= 2, got q = {q}")
    if truncation < 0:
        raise DomainError(f"truncation must be nonnegative, got {truncation}")
    m_axis, n_axis = _AXES[case]
    entries: dict[tuple[int, int], complex] = {}
    for m in m_axis.elements_within(truncation):
        entries[(int(m), 0)] = complex(2.0 ** (-int(m)))
    for n in n_axis.elements_within(truncation):
        entries[(0, int(n))] = complex(2.0 ** (-int(n)))
    table = CoefficientTable(alpha=float(q - 2), entries=entries)
    return table, _axis_difference(m_axis, n_axis)
