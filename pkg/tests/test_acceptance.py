"""Acceptance gate: ten criteria covering the full analysis pipeline.

Each test prints one PASS line on success; run with -v for the per-criterion
verdict lines, or -s to see the printed summaries.
"""

import numpy as np
import pytest

from conftest import random_symmetric
from quadham import (
    Classification,
    ComplexRational,
    DimensionlessModel,
    FockTruncation,
    PhaseSpaceBasis,
    PiScale,
    QuadraticForm,
    adjoint_representation,
    angular_momentum_form,
    apply_quadratic_form,
    build_eigenfunction,
    build_model,
    classify_spectrum,
    eigen_decompose,
    isotropic_form,
    oracle_spectrum,
    phase_scan,
    quadratic_commutator,
    random_positive_definite_form,
    symmetric_energy,
    symmetric_ladders,
    symmetric_raising_pair,
)

SEED = 20260821


def model_form(b):
    return build_model(DimensionlessModel(mu=1.0, k=1.0, b=b))


def psi(m, n):
    zp, zm = symmetric_raising_pair()
    return build_eigenfunction(zp.form, zm.form, m, n)


def group_with_tolerance(values, tol):
    """Sorted values -> list of (center, count) clusters."""
    out = []
    for v in np.sort(np.asarray(values, dtype=float)):
        if out and v - out[-1][0] <= tol:
            c, n = out[-1]
            out[-1] = ((c * n + v) / (n + 1), n + 1)
        else:
            out.append((float(v), 1))
    return out


def test_c01_adjoint_matrix_entries_exact():
    # entrywise bit-exact adjoint for rational couplings
    for b in (-3.0, -2.0, 0.0, 1.0, 2.0, 3.0):
        expected = 1j * np.array([
            [0.0, -b, 2.0, 0.0],
            [b, 0.0, 0.0, 2.0],
            [-2.0, 0.0, 0.0, -b],
            [0.0, -2.0, b, 0.0],
        ])
        got = adjoint_representation(model_form(b)).entries
        assert np.array_equal(got, expected), b
    print("ACCEPTANCE C1: PASS - adjoint matrix entries exact to 0 ulp "
          "for b in {-3,-2,0,1,2,3}")


def test_c02_frequency_formula_random_couplings():
    rng = np.random.default_rng(SEED)
    for _ in range(50):
        b = float(rng.uniform(-5.0, 5.0))
        e = eigen_decompose(adjoint_representation(model_form(b)))
        assert np.max(np.abs(e.eigenvalues.imag)) <= 1e-12
        got = np.sort(e.eigenvalues.real)
        expected = np.sort([-2.0 - b, 2.0 - b, b - 2.0, 2.0 + b])
        assert np.max(np.abs(got - expected)) <= 1e-12, b
    print("ACCEPTANCE C2: PASS - frequencies match the closed formula "
          "within 1e-12 on 50 random couplings")


def test_c03_ground_energy_and_exact_vacuum_relation():
    for b in (0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 1.9, -1.9, 1.999, -1.999):
        rep = classify_spectrum(model_form(b))
        assert rep.classification is Classification.BOUNDED_BELOW_DISCRETE
        assert abs(rep.ground_energy - 2.0) <= 1e-12, b
    # symbolic check: the Gaussian vacuum is an exact eigenstate of energy 2
    ground = psi(0, 0)
    for b in (0.0, 0.7, -1.3, 1.999):
        h = model_form(b)
        diff = apply_quadratic_form(h, ground) - ground.scalar_mul(2)
        assert diff.is_zero, b
    print("ACCEPTANCE C3: PASS - ground energy 2 within 1e-12 for |b| < 2 "
          "and the vacuum relation holds with zero residual")


def test_c04_complete_shells_match_energy_lattice():
    n_max = 8
    for b in (0.0, 0.5, 1.0, 1.5):
        o = oracle_spectrum(model_form(b), FockTruncation(n_max, 2))
        assert o.shell_eigenvalues is not None
        assert o.shell_exact_upto == n_max
        for s in range(n_max + 1):
            observed = np.sort(o.shell_eigenvalues[s])
            expected = np.sort([symmetric_energy(b, m, s - m)
                                for m in range(s + 1)])
            assert observed.size == s + 1
            assert np.max(np.abs(observed - expected)) <= 1e-8, (b, s)
            got_counts = [c for _, c in group_with_tolerance(observed, 1e-8)]
            want_counts = [c for _, c in group_with_tolerance(expected, 1e-8)]
            assert got_counts == want_counts, (b, s)
    print("ACCEPTANCE C4: PASS - complete-shell eigenvalues match the "
          "lattice within 1e-8, degeneracy counts included")


def test_c05_phase_boundary_classification_and_location():
    grid = {
        0.0: Classification.BOUNDED_BELOW_DISCRETE,
        1.0: Classification.BOUNDED_BELOW_DISCRETE,
        1.9: Classification.BOUNDED_BELOW_DISCRETE,
        1.999: Classification.BOUNDED_BELOW_DISCRETE,
        2.0: Classification.CRITICAL_INFINITE_MULTIPLICITY,
        2.001: Classification.UNBOUNDED_LATTICE,
        2.1: Classification.UNBOUNDED_LATTICE,
        3.0: Classification.UNBOUNDED_LATTICE,
        10.0: Classification.UNBOUNDED_LATTICE,
    }
    for b, want in grid.items():
        assert classify_spectrum(model_form(b)).classification is want, b
        assert classify_spectrum(model_form(-b)).classification is want, -b
    res = phase_scan(0.0, 4.0, steps=6)
    assert len(res.transitions) == 1
    assert abs(res.transitions[0].b_star - 2.0) <= 1e-10
    print("ACCEPTANCE C5: PASS - nine-point grid classified exactly and "
          "the boundary bisected to within 1e-10 of 2")


def test_c06_infinite_multiplicity_signature():
    for n_max in (4, 6, 8):
        o = oracle_spectrum(model_form(2.0), FockTruncation(n_max, 2))
        bottom_count = int(np.sum(np.abs(o.eigenvalues - 2.0) <= 1e-10))
        assert bottom_count == n_max + 1, n_max
        pooled = np.concatenate([o.shell_eigenvalues[s]
                                 for s in range(n_max + 1)])
        clusters = group_with_tolerance(pooled, 1e-10)
        assert len(clusters) == n_max + 1
        for k, (center, _) in enumerate(clusters):
            assert abs(center - (2.0 + 4.0 * k)) <= 1e-10, (n_max, k)
    print("ACCEPTANCE C6: PASS - eigenvalue 2 has multiplicity n_max + 1 "
          "and distinct energies step by 4 within 1e-10")


def test_c07_coalescence_keeps_eigenvectors():
    entries = adjoint_representation(model_form(2.0)).entries
    sv = np.linalg.svd(entries, compute_uv=False)
    geometric = entries.shape[0] - int(np.sum(sv > 1e-10))
    assert geometric == 2
    e = eigen_decompose(adjoint_representation(model_form(2.0)))
    zero = [c for c in e.clusters if abs(c.value) <= 1e-10]
    assert len(zero) == 1
    assert zero[0].algebraic == 2
    assert zero[0].geometric == 2
    assert not e.defective
    print("ACCEPTANCE C7: PASS - the zero eigenvalue at the critical "
          "coupling keeps two eigenvectors (no defect)")


def test_c08_exact_eigenfunctions_and_generator_relations():
    s01 = psi(0, 1)
    assert s01.scale == PiScale(1, -2)
    assert s01.poly == {(1, 0): ComplexRational(0, 1),
                        (0, 1): ComplexRational(1, 0)}
    s10 = psi(1, 0)
    assert s10.scale == PiScale(1, -2)
    assert s10.poly == {(1, 0): ComplexRational(0, 1),
                        (0, 1): ComplexRational(-1, 0)}
    s11 = psi(1, 1)
    assert s11.scale == PiScale(1, -2)
    assert s11.poly == {(0, 0): ComplexRational(1, 0),
                        (2, 0): ComplexRational(-1, 0),
                        (0, 2): ComplexRational(-1, 0)}

    h0 = isotropic_form()
    lz = angular_momentum_form()
    for m in range(5):
        for n in range(5 - m):
            state = psi(m, n)
            d0 = apply_quadratic_form(h0, state) - \
                state.scalar_mul(2 + 2 * (m + n))
            assert d0.is_zero, (m, n)
            dz = apply_quadratic_form(lz, state) - state.scalar_mul(m - n)
            assert dz.is_zero, (m, n)
    print("ACCEPTANCE C8: PASS - eigenfunction coefficients exact and both "
          "generator relations hold with zero residual for m + n <= 4")


def test_c09_commuting_generators_and_ladder_table():
    m_iso = adjoint_representation(isotropic_form()).entries
    m_rot = adjoint_representation(angular_momentum_form()).entries
    for b in (0.0, 1.3, -2.7):
        m_full = adjoint_representation(model_form(b)).entries
        for a, c in ((m_full, m_iso), (m_full, m_rot), (m_iso, m_rot)):
            assert np.max(np.abs(a @ c - c @ a)) <= 1e-12

    for other in (isotropic_form(), angular_momentum_form()):
        comm = quadratic_commutator(model_form(1.3), other)
        assert np.count_nonzero(comm.gamma) == 0
        assert comm.offset == 0.0

    # the closed commutation table: each ladder is a simultaneous eigenvector
    # of the uncoupled part (shift) and the rotation generator (weight)
    shifts = (-2.0, 2.0, -2.0, 2.0)
    weights = (-1.0, -1.0, 1.0, 1.0)
    for ladder, shift, weight in zip(symmetric_ladders(), shifts, weights):
        c = ladder.form.coeffs
        assert np.max(np.abs(m_iso @ c - shift * c)) <= 1e-12
        assert np.max(np.abs(m_rot @ c - weight * c)) <= 1e-12
        b = 1.3
        m_full = adjoint_representation(model_form(b)).entries
        assert np.max(np.abs(m_full @ c - (shift + b * weight) * c)) <= 1e-12
    print("ACCEPTANCE C9: PASS - generator adjoints commute to machine "
          "zero and the ladder table is reproduced by adjoint action")


def test_c10_random_form_properties():
    rng = np.random.default_rng(SEED)
    for i in range(100):
        K = 1 + i % 3
        gamma = random_symmetric(rng, 2 * K)
        q = QuadraticForm(PhaseSpaceBasis(K), gamma, 0.0)
        e = eigen_decompose(adjoint_representation(q))
        ev = e.eigenvalues
        atol = 1e-9 * (1.0 + e.matrix_norm)
        # every frequency has a negated partner, in both directions
        dist = np.abs(ev[:, None] + ev[None, :])
        assert np.max(np.min(dist, axis=1)) <= atol, i
        assert np.max(np.min(dist, axis=0)) <= atol, i

    offsets = np.random.default_rng(SEED + 1).uniform(-1.0, 1.0, size=20)
    for seed in range(20):
        base = random_positive_definite_form(2, seed=seed)
        form = QuadraticForm(base.basis, base.gamma, float(offsets[seed]))
        rep = classify_spectrum(form)
        assert rep.classification is Classification.BOUNDED_BELOW_DISCRETE
        o = oracle_spectrum(form, FockTruncation(20, 2))
        assert abs(rep.ground_energy - float(o.eigenvalues[0])) <= 1e-6, seed
    print("ACCEPTANCE C10: PASS - frequency sets are sign-symmetric on 100 "
          "random forms and 20 ground energies match the oracle to 1e-6")
