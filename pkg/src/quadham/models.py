"""Concrete two-mode models: coupled oscillators in a rotating trap.

The physical system is two oscillators whose coupling rotates at a fixed
rate.  After rescaling to dimensionless coordinates it is governed by three
numbers (mu, k, b): mass ratio, spring ratio, and twice the rotation rate in
units of the first oscillator frequency.  The symmetric case mu = k = 1 has
closed-form ladder operators; |b| = 2 is the boundary where the form matrix
loses definiteness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .phase_space import (
    LinearForm,
    PhaseSpaceBasis,
    QuadraticForm,
    adjoint_representation,
    make_quadratic_form,
)
from .spectral import Classification, SpectrumReport, classify_spectrum
from . import tolerances as tol

# 1-based operator indices for two modes, as make_quadratic_form expects
X, Y, PX, PY = 1, 2, 3, 4


@dataclass(frozen=True)
class PhysicalParameters:
    """Dimensionful inputs: two masses, two spring constants, rotation rate."""

    m1: float
    m2: float
    k1: float
    k2: float
    omega: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m1", "m2", "k1", "k2", "hbar"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number")
        if not (isinstance(self.omega, (int, float)) and math.isfinite(self.omega)):
            raise ValueError("omega must be a finite number")


@dataclass(frozen=True)
class DimensionlessModel:
    """Rescaled model (mu, k, b); energies are in units of energy_scale."""

    mu: float
    k: float
    b: float
    energy_scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu > 0):
            raise ValueError("mu must be positive and finite")
        if not (math.isfinite(self.k) and self.k > 0):
            raise ValueError("k must be positive and finite")
        if not math.isfinite(self.b):
            raise ValueError("b must be finite")
        if not (math.isfinite(self.energy_scale) and self.energy_scale > 0):
            raise ValueError("energy_scale must be positive and finite")

    @property
    def is_symmetric(self) -> bool:
        return self.mu == 1.0 and self.k == 1.0


def reduce_to_dimensionless(p: PhysicalParameters) -> DimensionlessModel:
    """Rescale lengths and momenta mode by mode; returns (mu, k, b).

    The reference frequency is that of the first oscillator; half a quantum
    of it is the energy unit, and b is the rotation rate in those terms.
    """
    omega1 = math.sqrt(p.k1 / p.m1)
    return DimensionlessModel(
        mu=p.m2 / p.m1,
        k=p.k2 / p.k1,
        b=2.0 * p.omega / omega1,
        energy_scale=p.hbar * omega1 / 2.0,
    )


def build_model(d: DimensionlessModel) -> QuadraticForm:
    """x^2 + k y^2 + px^2 + py^2/mu + b (x py - y px) on two modes."""
    return make_quadratic_form(2, [
        (X, X, 1.0),
        (Y, Y, d.k),
        (PX, PX, 1.0),
        (PY, PY, 1.0 / d.mu),
        (X, PY, d.b),
        (Y, PX, -d.b),
    ])


def isotropic_form() -> QuadraticForm:
    """The uncoupled symmetric part x^2 + y^2 + px^2 + py^2."""
    return make_quadratic_form(2, [
        (X, X, 1.0), (Y, Y, 1.0), (PX, PX, 1.0), (PY, PY, 1.0),
    ])


def angular_momentum_form() -> QuadraticForm:
    """x py - y px (the generator the coupling term is proportional to)."""
    return make_quadratic_form(2, [(X, PY, 1.0), (Y, PX, -1.0)])


def sb_operator(B: float) -> QuadraticForm:
    """(px - (B/2) y)^2 + (py + (B/2) x)^2, expanded into basis terms."""
    if not math.isfinite(B):
        raise ValueError("B must be finite")
    c = B * B / 4.0
    terms = [(PX, PX, 1.0), (PY, PY, 1.0)]
    if B != 0.0:
        terms += [(X, X, c), (Y, Y, c), (X, PY, B), (Y, PX, -B)]
    return make_quadratic_form(2, terms)


@dataclass(frozen=True, eq=False)
class LadderSpec:
    """A ladder operator of the symmetric model, valid for every coupling b.

    Its frequency splits into a coupling-independent shift (from the
    isotropic part) plus b times its rotation weight.
    """

    form: LinearForm
    isotropic_shift: float
    rotation_weight: float

    def frequency(self, b: float) -> float:
        return self.isotropic_shift + self.rotation_weight * b


def symmetric_ladders() -> tuple[LadderSpec, ...]:
    """The four b-independent ladder operators of the mu = k = 1 model.

    Coefficient rows are over (x, y, px, py); shifts/weights give frequencies
    (-2 - b, 2 - b, -2 + b, 2 + b).
    """
    basis = PhaseSpaceBasis(2)
    rows = [
        ((-1j, -1.0, 1.0, -1j), -2.0, -1.0),
        ((1j, 1.0, 1.0, -1j), 2.0, -1.0),
        ((-1j, 1.0, 1.0, 1j), -2.0, 1.0),
        ((1j, -1.0, 1.0, 1j), 2.0, 1.0),
    ]
    return tuple(
        LadderSpec(LinearForm(basis, np.array(c, dtype=complex)), shift, weight)
        for c, shift, weight in rows
    )


def symmetric_raising_pair() -> tuple[LadderSpec, ...]:
    """The two raising operators: frequencies 2 + b and 2 - b.

    Applied to the Gaussian ground state they generate the whole lattice;
    the first raises angular momentum by one, the second lowers it.
    """
    ladders = symmetric_ladders()
    return ladders[3], ladders[1]


def symmetric_energy(b: float, m: int, n: int) -> float:
    """Lattice energy 2 + (2 + b) m + (2 - b) n of the symmetric model."""
    return 2.0 + (2.0 + b) * m + (2.0 - b) * n


def random_positive_definite_form(
    K: int, seed: int, spread: tuple[float, float] = (0.6, 1.8)
) -> QuadraticForm:
    """Random gamma with eigenvalues uniform in [spread); reproducible."""
    lo, hi = spread
    if not (0 < lo < hi):
        raise ValueError("spread must satisfy 0 < lo < hi")
    rng = np.random.default_rng(seed)
    n = 2 * K
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    d = rng.uniform(lo, hi, size=n)
    g = (q * d) @ q.T
    g = (g + g.T) / 2.0
    return QuadraticForm(PhaseSpaceBasis(K), g, 0.0)


@dataclass(frozen=True, eq=False)
class SymmetryReport:
    swap_exact: bool
    parity_exact: bool
    swap_matrix: np.ndarray


def symmetry_checks(d: DimensionlessModel) -> SymmetryReport:
    """Exact (bitwise) discrete symmetries of the symmetric model.

    Swapping the two modes maps coupling b to -b; full parity commutes with
    any quadratic form.  Both identities hold entrywise in floats because
    they only permute and negate entries.
    """
    if not d.is_symmetric:
        raise ValueError("mode-swap symmetry needs mu = 1 and k = 1")
    s = np.zeros((4, 4))
    s[0, 1] = s[1, 0] = s[2, 3] = s[3, 2] = 1.0

    m_plus = adjoint_representation(build_model(d)).entries
    flipped = DimensionlessModel(d.mu, d.k, -d.b, d.energy_scale)
    m_minus = adjoint_representation(build_model(flipped)).entries
    swap_exact = bool(np.array_equal(m_minus, s.T @ m_plus @ s))

    gamma = build_model(d).gamma
    parity = -np.eye(4)
    parity_exact = bool(np.array_equal(parity.T @ gamma @ parity, gamma))
    return SymmetryReport(swap_exact=swap_exact, parity_exact=parity_exact,
                          swap_matrix=s)


@dataclass(frozen=True, eq=False)
class ScanSample:
    b: float
    classification: Classification
    margin: float                    # smallest eigenvalue of gamma
    ground_energy: float | None
    generators: tuple[float, ...]


@dataclass(frozen=True, eq=False)
class Transition:
    b_star: float
    bracket_lo: float
    bracket_hi: float


@dataclass(frozen=True, eq=False)
class PhaseScanResult:
    samples: tuple[ScanSample, ...]
    transitions: tuple[Transition, ...]


def _margin(b: float, mu: float, k: float) -> float:
    d = DimensionlessModel(mu=mu, k=k, b=b)
    gamma = build_model(d).gamma
    return float(np.linalg.eigvalsh(gamma)[0])


def phase_scan(
    b_from: float,
    b_to: float,
    steps: int,
    mu: float = 1.0,
    k: float = 1.0,
) -> PhaseScanResult:
    """Classify along a sweep of the coupling and locate boundary crossings.

    steps is the sample count (endpoints included).  A sample sitting on the
    definiteness boundary is itself recorded as a transition; between
    samples whose smallest gamma eigenvalue changes strict sign, the crossing
    is bisected down to a bracket of width 1e-10.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    bs = np.linspace(b_from, b_to, steps)
    samples = []
    for b in bs:
        b = float(b)
        d = DimensionlessModel(mu=mu, k=k, b=b)
        report = classify_spectrum(build_model(d))
        samples.append(ScanSample(
            b=b,
            classification=report.classification,
            margin=_margin(b, mu, k),
            ground_energy=report.ground_energy,
            generators=report.lattice_generators,
        ))

    transitions: list[Transition] = []
    gnorm = max(abs(s.margin) for s in samples) if samples else 1.0
    dead = tol.definiteness_tol(gnorm + 1.0)
    for i in range(len(samples) - 1):
        a, c = samples[i], samples[i + 1]
        if a.classification == c.classification:
            continue
        if abs(a.margin) <= dead:
            transitions.append(Transition(a.b, a.b, a.b))
            continue
        if abs(c.margin) <= dead:
            transitions.append(Transition(c.b, c.b, c.b))
            continue
        if a.margin * c.margin < 0:
            lo, hi = a.b, c.b
            flo = a.margin
            while abs(hi - lo) > 1e-10:
                mid = 0.5 * (lo + hi)
                fmid = _margin(mid, mu, k)
                if fmid == 0.0:
                    lo = hi = mid
                    break
                if (flo < 0) == (fmid < 0):
                    lo, flo = mid, fmid
                else:
                    hi = mid
            transitions.append(Transition(0.5 * (lo + hi), lo, hi))

    deduped: list[Transition] = []
    for t_new in sorted(transitions, key=lambda t: t.b_star):
        if deduped and abs(t_new.b_star - deduped[-1].b_star) <= 1e-9:
            continue
        deduped.append(t_new)
    return PhaseScanResult(samples=tuple(samples), transitions=tuple(deduped))
