import math
from fractions import Fraction

import numpy as np
import pytest

from quadham import (
    ComplexRational,
    LinearForm,
    PhaseSpaceBasis,
    PiScale,
    PolyGaussian,
    apply_linear_form,
    apply_quadratic_form,
    build_eigenfunction,
    build_model,
    DimensionlessModel,
    angular_momentum_form,
    inner,
    is_scalar_multiple_exact,
    norm_scale,
    normalized_copy,
    squared_norm,
    symmetric_ladders,
    symmetric_raising_pair,
    vacuum,
    vacuum_annihilation_residual,
)


def psi(m, n):
    zp, zm = symmetric_raising_pair()
    return build_eigenfunction(zp.form, zm.form, m, n)


class TestExactScalars:
    def test_complex_rational_arithmetic(self):
        a = ComplexRational(1, 2)
        b = ComplexRational(3, -1)
        assert a * b == ComplexRational(5, 5)
        assert a + b == ComplexRational(4, 1)
        assert a - b == ComplexRational(-2, 3)
        assert ComplexRational(1, 1) / ComplexRational(0, 2) == ComplexRational(
            Fraction(1, 2), Fraction(-1, 2))
        assert a.conjugate() == ComplexRational(1, -2)
        assert not a.is_zero
        assert ComplexRational(0, 0).is_zero

    def test_complex_rational_from_float(self):
        # floats convert exactly, not through a decimal approximation
        z = ComplexRational.from_number(0.5 + 0.25j)
        assert z == ComplexRational(Fraction(1, 2), Fraction(1, 4))

    def test_pi_scale_arithmetic(self):
        half_pi_power = PiScale(1, -2)
        assert half_pi_power * half_pi_power == PiScale(1, -4)
        assert PiScale(2, 0) * PiScale(2, 0) == PiScale(4, 0)
        assert PiScale(4, 4) / PiScale(1, 2) == PiScale(4, 2)
        assert float(PiScale(1, 4)) == pytest.approx(math.pi, rel=1e-15)
        assert float(PiScale(9, 0)) == 3.0

    def test_pi_scale_display(self):
        assert PiScale(1, 0).display() == "1"
        assert PiScale(1, -2).display() == "1/sqrt(pi)"
        assert PiScale(1, -1).display() == "1/pi^(1/4)"
        assert PiScale(1, 2).display() == "sqrt(pi)"
        assert PiScale(2, 0).display() == "sqrt(2)"
        assert PiScale(1, 4).display() == "pi"
        assert PiScale(4, 4).display() == "2*pi"
        assert PiScale(Fraction(1, 2), -2).display() == "sqrt(1/2)/sqrt(pi)"


class TestVacuum:
    def test_render(self):
        assert vacuum(1).render() == "1/pi^(1/4) * exp(-x^2/2)"
        assert vacuum(2).render() == "1/sqrt(pi) * exp(-(x^2 + y^2)/2)"

    def test_normalised(self):
        for K in (1, 2, 3):
            assert squared_norm(vacuum(K)).is_one

    def test_evaluate_at_origin(self):
        v = vacuum(2)
        assert v.evaluate((0.0, 0.0)) == pytest.approx(1 / math.sqrt(math.pi),
                                                       rel=1e-15)
        # Gaussian decay in one step
        val = v.evaluate((1.0, 0.0))
        assert val == pytest.approx(math.exp(-0.5) / math.sqrt(math.pi),
                                    rel=1e-14)

    def test_momentum_action(self):
        # p acting on exp(-x^2/2) gives i x times the same Gaussian
        v = vacuum(1)
        out = v.apply_momentum(0)
        assert set(out.poly) == {(1,)}
        assert out.poly[(1,)] == ComplexRational(0, 1)

    def test_position_action(self):
        v = vacuum(1)
        out = v.apply_position(0)
        assert set(out.poly) == {(1,)}
        assert out.poly[(1,)] == ComplexRational(1, 0)


class TestEigenfunctions:
    def test_ground_state(self):
        s = psi(0, 0)
        assert s.render() == "1/sqrt(pi) * exp(-(x^2 + y^2)/2)"
        assert s.scale == PiScale(1, -2)
        assert s.poly == {(0, 0): ComplexRational(1, 0)}

    def test_first_excited(self):
        s01 = psi(0, 1)
        assert s01.render() == "1/sqrt(pi) * (i*x + y) * exp(-(x^2 + y^2)/2)"
        assert s01.poly == {(1, 0): ComplexRational(0, 1),
                            (0, 1): ComplexRational(1, 0)}
        s10 = psi(1, 0)
        assert s10.render() == "1/sqrt(pi) * (i*x - y) * exp(-(x^2 + y^2)/2)"
        assert s10.poly == {(1, 0): ComplexRational(0, 1),
                            (0, 1): ComplexRational(-1, 0)}

    def test_diagonal_state(self):
        s = psi(1, 1)
        assert s.render() == ("1/sqrt(pi) * (1 - x^2 - y^2) * "
                              "exp(-(x^2 + y^2)/2)")
        assert s.poly == {(0, 0): ComplexRational(1, 0),
                          (2, 0): ComplexRational(-1, 0),
                          (0, 2): ComplexRational(-1, 0)}
        assert s.scale == PiScale(1, -2)

    def test_second_shell_scale(self):
        s = psi(0, 2)
        assert s.scale == PiScale(Fraction(1, 2), -2)
        assert s.poly == {(2, 0): ComplexRational(-1, 0),
                          (1, 1): ComplexRational(0, 2),
                          (0, 2): ComplexRational(1, 0)}

    def test_orthonormal_family(self):
        states = {(m, n): psi(m, n) for m in range(4) for n in range(4 - m)}
        for (a, sa) in states.items():
            for (b, sb) in states.items():
                amount = inner(sa, sb)
                if a == b:
                    assert amount.is_one
                else:
                    assert amount.is_zero

    def test_energy_eigenrelations(self):
        for b in (0.5, 2.0, -3.0):
            h = build_model(DimensionlessModel(mu=1.0, k=1.0, b=b))
            bq = Fraction(b)
            for m in range(5):
                for n in range(5 - m):
                    s = psi(m, n)
                    out = apply_quadratic_form(h, s)
                    amount = is_scalar_multiple_exact(out, s)
                    assert amount is not None, (b, m, n)
                    energy = 2 + (2 + bq) * m + (2 - bq) * n
                    assert amount.equals_rational(energy), (b, m, n)

    def test_rotation_eigenrelations(self):
        lz = angular_momentum_form()
        for m in range(5):
            for n in range(5 - m):
                s = psi(m, n)
                out = apply_quadratic_form(lz, s)
                amount = is_scalar_multiple_exact(out, s)
                if m == n:
                    # eigenvalue zero: output is the zero state
                    assert out.is_zero
                else:
                    assert amount is not None
                    assert amount.equals_rational(m - n)

    def test_critical_family_degenerate(self):
        # at b = 2 the energy no longer depends on n
        h = build_model(DimensionlessModel(mu=1.0, k=1.0, b=2.0))
        for n in range(4):
            s = psi(1, n)
            out = apply_quadratic_form(h, s)
            amount = is_scalar_multiple_exact(out, s)
            assert amount.equals_rational(6)

    def test_ladder_transport(self):
        zp, zm = symmetric_raising_pair()
        for (m, n) in [(0, 0), (1, 0), (0, 2), (1, 1)]:
            lifted = apply_linear_form(zp.form, psi(m, n))
            target = psi(m + 1, n)
            amount = is_scalar_multiple_exact(lifted.canonical(),
                                              target.canonical())
            assert amount is not None
            assert not amount.is_zero

    def test_invalid_quantum_numbers(self):
        zp, zm = symmetric_raising_pair()
        with pytest.raises(ValueError):
            build_eigenfunction(zp.form, zm.form, -1, 0)


class TestAnnihilation:
    def test_lowering_members_annihilate(self):
        ladders = symmetric_ladders()
        # frequencies (-2-b, 2-b, -2+b, 2+b): the two negative-shift members
        # kill the vacuum, the raising members do not
        assert vacuum_annihilation_residual(ladders[0].form) == 0.0
        assert vacuum_annihilation_residual(ladders[2].form) == 0.0
        assert vacuum_annihilation_residual(ladders[1].form) == 2.0
        assert vacuum_annihilation_residual(ladders[3].form) == 2.0

    def test_matches_exact_application(self):
        ladders = symmetric_ladders()
        v = vacuum(2)
        for ladder in ladders:
            applied = apply_linear_form(ladder.form, v)
            residual = vacuum_annihilation_residual(ladder.form)
            if residual == 0.0:
                assert applied.is_zero
            else:
                n = squared_norm(applied)
                assert float(n.to_complex().real) == pytest.approx(
                    residual ** 2, rel=1e-15)


class TestNorms:
    def test_norm_scale_values(self):
        v = vacuum(1)
        doubled = v.scalar_mul(2)
        assert norm_scale(doubled) == PiScale(4, 0)
        x_state = v.apply_position(0)
        # |x exp(-x^2/2)|^2 = sqrt(pi)/2 against the pi^(-1/2) prefactor
        assert norm_scale(x_state) == PiScale(Fraction(1, 2), 0)

    def test_zero_state_rejected(self):
        z = PolyGaussian(1, {}, PiScale.one())
        with pytest.raises(ValueError):
            normalized_copy(z)

    def test_quadrature_cross_check(self):
        # numeric integral of |psi(1,1)|^2 over a wide grid
        s = psi(1, 1)
        xs = np.linspace(-8.0, 8.0, 401)
        dx = xs[1] - xs[0]
        gx, gy = np.meshgrid(xs, xs, indexing="ij")
        pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
        vals = s.evaluate(pts)
        total = np.sum(np.abs(vals) ** 2) * dx * dx
        assert total == pytest.approx(1.0, abs=1e-6)


class TestAlgebra:
    def test_canonical_moves_content(self):
        v = vacuum(1)
        s = v.scalar_mul(ComplexRational(Fraction(2, 3), 0))
        c = s.canonical()
        # positive rational content lives in the scale after canonicalisation
        assert c.scale == PiScale(Fraction(4, 9), -1)
        assert c.poly == {(0,): ComplexRational(1, 0)}
        assert c.equals_exact(s)

    def test_equals_exact_detects_difference(self):
        v = vacuum(1)
        assert v.equals_exact(v.scalar_mul(1))
        assert not v.equals_exact(v.scalar_mul(-1))
        assert not v.equals_exact(v.apply_position(0))

    def test_addition_collects_terms(self):
        v = vacuum(1)
        s = v.apply_position(0) + v.apply_position(0)
        assert s.poly == {(1,): ComplexRational(2, 0)}
        d = v.apply_position(0) - v.apply_position(0)
        assert d.is_zero

    def test_mode_bounds_checked(self):
        v = vacuum(2)
        with pytest.raises(ValueError):
            v.apply_position(2)
        with pytest.raises(ValueError):
            v.apply_momentum(-1)

    def test_linear_form_application(self):
        basis = PhaseSpaceBasis(1)
        # x - i p doubles the position action; x + i p annihilates
        out = apply_linear_form(LinearForm(basis, [1.0, -1j]), vacuum(1))
        assert out.poly == {(1,): ComplexRational(2, 0)}
        gone = apply_linear_form(LinearForm(basis, [1.0, 1j]), vacuum(1))
        assert gone.is_zero
