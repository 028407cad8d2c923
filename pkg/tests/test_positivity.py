"""Index sets, PD/SPD verdicts, Gram validation, counterexample fixtures."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discwalk import (
    COUNTEREXAMPLE_EXPECTED,
    CoefficientTable,
    DomainError,
    IndexSet,
    NotPositiveDefiniteError,
    Progression,
    SpdVerdict,
    counterexample_sets,
    counterexample_table,
    descente_x,
    descente_z,
    descente_zbar,
    difference_set,
    gram_matrix,
    intersects_progression,
    is_pd,
    is_spd,
    min_eigenvalue,
    sample_sphere,
    spd_verdict,
    synthesize,
)
from helpers import jacobi_rotation_min_eig, random_table

# ---------------------------------------------------------------------- sets


def brute_intersects(s: IndexSet, N: int, j: int, bound: int) -> bool:
    els = s.elements_within(bound)
    return bool(els.size) and bool(np.any(np.mod(els, N) == j))


def test_progression_requires_nonzero_step():
    with pytest.raises(DomainError):
        Progression(0, 0)


def test_index_set_membership_and_enumeration():
    s = IndexSet.of(finite=[7, -2], progressions=[(4, 5), (-3, -5)])
    assert s.contains(7) and s.contains(-2)
    assert s.contains(4) and s.contains(19) and not s.contains(3)
    assert s.contains(-3) and s.contains(-13) and not s.contains(-4)
    els = set(s.elements_within(20).tolist())
    want = {7, -2} | {4 + 5 * k for k in range(4)} | {-3 - 5 * k for k in range(4)}
    assert els == want


def test_index_set_negation_union_json():
    s = IndexSet.of(finite=[1], progressions=[(2, 5)])
    neg = s.negated()
    assert neg.contains(-1) and neg.contains(-7) and not neg.contains(7)
    u = s.union(neg)
    assert u.contains(7) and u.contains(-7)
    back = IndexSet.loads(s.dumps())
    assert back == s
    with pytest.raises(DomainError):
        IndexSet.loads("{nope")


def test_intersects_progression_examples():
    s = IndexSet.of(progressions=[(4, 5)])
    assert intersects_progression(s, 3, 0)  # 4 + 5 = 9
    s_skip = IndexSet.of(progressions=[(1, 5), (2, 5), (3, 5), (4, 5)])
    assert not intersects_progression(s_skip, 5, 0)
    z_plus = IndexSet.of(progressions=[(0, 1)])
    for N in (1, 2, 5, 9):
        for j in range(N):
            assert intersects_progression(z_plus, N, j)
    with pytest.raises(DomainError):
        intersects_progression(s, 0, 0)
    with pytest.raises(DomainError):
        intersects_progression(s, 3, 3)


def test_intersects_progression_against_enumeration_randomized():
    rng = np.random.default_rng(123)
    for _ in range(1000):
        n_prog = int(rng.integers(0, 4))
        progs = []
        for _ in range(n_prog):
            step = int(rng.integers(1, 7)) * (1 if rng.random() < 0.5 else -1)
            progs.append((int(rng.integers(-30, 31)), step))
        finite = [int(e) for e in rng.integers(-30, 31, size=int(rng.integers(0, 4)))]
        s = IndexSet.of(finite=finite, progressions=progs)
        N = int(rng.integers(1, 65))
        j = int(rng.integers(0, N))
        L = math.lcm(*[abs(p[1]) for p in progs]) if progs else 1
        bound = 10 * N * L + 31
        assert intersects_progression(s, N, j) == brute_intersects(s, N, j, bound)


@settings(max_examples=80)
@given(
    st.integers(-40, 40),
    st.integers(1, 8),
    st.booleans(),
    st.integers(1, 30),
)
def test_single_progression_intersection_property(offset, step_mag, neg, N):
    step = -step_mag if neg else step_mag
    s = IndexSet.of(progressions=[(offset, step)])
    for j in range(N):
        assert intersects_progression(s, N, j) == brute_intersects(s, N, j, 20 * N * step_mag + abs(offset))


# ------------------------------------------------------------------ verdicts


def test_verdict_step_one_progressions():
    assert spd_verdict(IndexSet.of(progressions=[(0, 1)])).kind == "certified_exact"
    assert spd_verdict(IndexSet.of(progressions=[(3, -1)])).reason == "step-1 progression"


def test_verdict_empty_set_refuted_immediately():
    v = spd_verdict(IndexSet.of())
    assert (v.kind, v.N, v.j) == ("refuted_at", 1, 0)
    assert not v.is_spd


def test_verdict_divisor_closure_certifies_mod5_cover():
    s = IndexSet.of(progressions=[(2, 5), (3, 5), (4, 5), (5, 5), (-4, -5)])
    v = spd_verdict(s)
    assert v.kind == "certified_exact" and v.reason == "divisor closure"


def test_verdict_refutes_single_residue_progression():
    v = spd_verdict(IndexSet.of(progressions=[(-3, -5)]))
    assert (v.N, v.j) == (5, 0)


def test_verdict_mixed_sets_bounded():
    s = IndexSet.of(finite=[0, 1], progressions=[(0, 2)])
    v = spd_verdict(s, n_max=7)
    # evens from the progression plus the finite 1 cover residues only up to N = 2;
    # N = 4 misses j = 3 (odd numbers beyond 1 are absent)
    assert v.kind == "refuted_at" and (v.N, v.j) == (4, 3)
    full = IndexSet.of(finite=[3], progressions=[(0, 2), (1, 4), (7, 4)])
    v2 = spd_verdict(full, n_max=12)
    assert v2.kind in ("certified_up_to", "certified_exact")


def test_verdict_refutations_are_sound():
    rng = np.random.default_rng(7)
    for _ in range(200):
        progs = [
            (int(rng.integers(-20, 21)), int(rng.integers(2, 7)) * (1 if rng.random() < 0.5 else -1))
            for _ in range(int(rng.integers(0, 3)))
        ]
        s = IndexSet.of(progressions=progs)
        v = spd_verdict(s)
        if v.kind == "refuted_at":
            L = math.lcm(*[abs(p[1]) for p in progs]) if progs else 1
            assert not brute_intersects(s, v.N, v.j, 10 * v.N * L + 25)


def test_verdict_json_round_trip():
    for v in (
        SpdVerdict.refuted_at(5, 0),
        SpdVerdict.certified_exact("divisor closure"),
        SpdVerdict.certified_up_to(64),
    ):
        assert SpdVerdict.from_dict(v.to_dict()) == v


# ------------------------------------------------------- table-level deciders


def test_is_pd_examples():
    good = CoefficientTable(alpha=0.0, entries={(0, 0): 1.0, (2, 1): 0.5})
    assert is_pd(good).ok
    bad = CoefficientTable(alpha=0.0, entries={(1, 0): -0.1})
    rep = is_pd(bad)
    assert not rep.ok and rep.violations[0][:2] == (1, 0)


def test_difference_set_examples():
    t = CoefficientTable(alpha=0.0, entries={(3, 1): 1.0, (0, 5): 1.0})
    assert difference_set(t, 0.0, 0).finite == frozenset({2, -5})
    assert difference_set(t, 0.0, 1).finite == frozenset({2})
    assert difference_set(CoefficientTable(alpha=0.0, entries={}), 0.0, 0).is_empty()
    with pytest.raises(DomainError):
        difference_set(t, -1.0)


def test_is_spd_gates_and_declared_sets():
    t = CoefficientTable(alpha=0.0, entries={(m, 0): 2.0 ** (-m) for m in range(6)})
    # finite truncation alone cannot certify
    v = is_spd(t, q=2)
    assert v.kind == "refuted_at"
    # the declared full-support pattern can
    v2 = is_spd(t, q=2, declared_set=IndexSet.of(progressions=[(0, 1)]))
    assert v2.kind == "certified_exact"
    # the conj(z)-derivative of an axis table vanishes
    v3 = is_spd(descente_zbar(t), q=3)
    assert (v3.kind, v3.N, v3.j) == ("refuted_at", 1, 0)
    bad = CoefficientTable(alpha=0.0, entries={(1, 0): -0.5})
    with pytest.raises(NotPositiveDefiniteError) as err:
        is_spd(bad, q=2)
    assert err.value.violations[0][:2] == (1, 0)
    with pytest.raises(DomainError):
        is_spd(t, q=3)
    with pytest.raises(DomainError):
        is_spd(t, q=1)


# --------------------------------------------------------------- sphere/Gram


def test_sample_sphere_contracts():
    pts = sample_sphere(3, 25, seed=9)
    norms = np.linalg.norm(pts.points, axis=1)
    assert np.max(np.abs(norms - 1.0)) < 1e-12
    again = sample_sphere(3, 25, seed=9)
    assert np.array_equal(pts.points, again.points)
    inner = pts.points @ pts.points.conj().T
    assert np.max(np.abs(inner)) <= 1.0 + 1e-12
    with pytest.raises(DomainError):
        sample_sphere(1, 5)
    with pytest.raises(DomainError):
        sample_sphere(2, 0)


def test_gram_constant_kernel_is_all_ones():
    pts = sample_sphere(2, 6, seed=1)
    g = gram_matrix(lambda z: np.ones_like(z), pts)
    assert np.allclose(g, np.ones((6, 6)))
    evals = np.linalg.eigvalsh(g)
    assert evals[-1] == pytest.approx(6.0, abs=1e-9)
    assert np.max(np.abs(evals[:-1])) < 1e-9


def test_gram_identity_kernel_on_orthonormal_points():
    from discwalk import SpherePointSet

    e = np.eye(2, dtype=complex)
    pts = SpherePointSet(q=2, points=e, seed=0)
    g = gram_matrix(lambda z: z, pts)
    assert np.allclose(g, np.eye(2))


def test_gram_warns_on_conjugation_violation():
    pts = sample_sphere(2, 5, seed=3)
    with pytest.warns(UserWarning):
        gram_matrix(lambda z: 1j * z, pts)


def test_pd_tables_have_psd_gram_matrices():
    rng = np.random.default_rng(5)
    for q in (2, 3):
        for seed in range(5):
            t = random_table(rng, float(q - 2), 4, 8)
            scale = sum(v.real for v in t.entries.values())
            t = CoefficientTable(alpha=t.alpha, entries={k: v / max(scale / 10.0, 1.0) for k, v in t.entries.items()})
            pts = sample_sphere(q, 30, seed=seed)
            g = gram_matrix(lambda z: synthesize(t, z), pts)
            assert min_eigenvalue(g) >= -1e-8


def test_min_eigenvalue_examples():
    assert min_eigenvalue(np.eye(5)) == pytest.approx(1.0, abs=1e-12)
    assert min_eigenvalue(np.diag([1.0, 2.0, 3.0])) == pytest.approx(1.0, abs=1e-12)
    h = np.array([[2.0, 1j], [-1j, 2.0]])
    assert min_eigenvalue(h) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DomainError):
        min_eigenvalue(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_min_eigenvalue_against_rotation_oracle():
    rng = np.random.default_rng(13)
    for n in (2, 3, 5, 8):
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = a + a.conj().T
        assert min_eigenvalue(h) == pytest.approx(jacobi_rotation_min_eig(h), abs=1e-10)


def test_gram_eigenvalues_match_rotation_oracle_small():
    t = CoefficientTable(alpha=0.0, entries={(1, 0): 1.0, (0, 1): 1.0})
    pts = sample_sphere(2, 3, seed=11)
    g = gram_matrix(lambda z: synthesize(t, z), pts)
    assert min_eigenvalue(g) == pytest.approx(jacobi_rotation_min_eig(g), abs=1e-10)


# ------------------------------------------------------------ counterexamples


def test_counterexample_case_iii_support_pattern():
    table, s = counterexample_table("iii", q=2, truncation=30)
    for (m, n), v in table.entries.items():
        assert v.real == 2.0 ** (-(m + n)) and v.imag == 0.0
    n_support = sorted(n for (m, n) in table.entries if m == 0)
    assert n_support == [n for n in range(31) if n % 5 == 4]
    m_support = sorted(m for (m, n) in table.entries if n == 0)
    want_m = [m for m in range(31) if m % 5 in (2, 3, 4) or (m % 5 == 0 and m > 0)]
    assert m_support == want_m
    assert (0, 0) not in table.entries
    assert s == IndexSet.of(progressions=[(5, 5), (2, 5), (3, 5), (4, 5), (-4, -5)])


def test_counterexample_symbolic_sets_and_verdicts():
    for case, expected in COUNTEREXAMPLE_EXPECTED.items():
        sets = counterexample_sets(case)
        for op, want_spd in expected.items():
            v = spd_verdict(sets[op])
            assert v.is_spd == want_spd, (case, op, v)
    # precise witnesses
    iii = counterexample_sets("iii")
    for op in ("dz", "dzbar", "dx"):
        v = spd_verdict(iii[op])
        assert (v.N, v.j) == (5, 0)
    assert spd_verdict(counterexample_sets("i")["dzbar"]).N == 1
    assert spd_verdict(counterexample_sets("ii")["dz"]).N == 1


def test_counterexample_case_i_and_ii_sets():
    _, s1 = counterexample_table("i", q=2, truncation=10)
    assert s1 == IndexSet.of(progressions=[(0, 1)])
    _, s2 = counterexample_table("ii", q=3, truncation=10)
    assert s2 == IndexSet.of(progressions=[(0, -1)])


def test_counterexample_tables_walk_consistently_with_symbolic_sets():
    # within the truncation window, walked table supports match the symbolic sets
    for case in ("i", "ii", "iii"):
        table, _ = counterexample_table(case, q=2, truncation=25)
        sets = counterexample_sets(case)
        walked = {
            "dz": descente_z(table),
            "dzbar": descente_zbar(table),
            "dx": descente_x(table),
        }
        for op, wt in walked.items():
            got = {m - n for (m, n), v in wt.entries.items() if v.real > 0}
            sym = set(sets[op].elements_within(24).tolist())
            missing = got - sym
            assert not missing, (case, op, missing)
            # and every symbolic element within a safe window is realized
            window = {e for e in sym if abs(e) <= 18}
            assert window <= got, (case, op, window - got)


def test_counterexample_validation():
    with pytest.raises(DomainError):
        counterexample_table("iv", 2, 10)
    with pytest.raises(DomainError):
        counterexample_table("i", 1, 10)
    with pytest.raises(DomainError):
        counterexample_sets("v")
