"""Phase-space operator basis, quadratic forms and their adjoint matrices.

The operator basis is ordered (x_1..x_K, p_1..p_K) with [x_m, p_n] = i delta_mn
and hbar = 1 internally.  A quadratic form H = sum_ij gamma_ij O_i O_j + offset
acts on the basis by commutation, [H, O_i] = sum_j M_ji O_j, and the matrix M
(the adjoint matrix) has the closed form M = i (gamma + gamma^T) J = 2 i gamma J
for the symmetric gamma stored here.  Ladder operators Z = sum_i c_i O_i with
[H, Z] = lambda Z are exactly the eigenvectors M c = lambda c.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatchError, NonHermitianFormError, QuadhamError
from .tolerances import machine_zero_tol, offset_imag_tol


@dataclass(frozen=True)
class PhaseSpaceBasis:
    """Canonical basis (x_1..x_K, p_1..p_K); hbar fixed to 1 internally."""

    K: int
    hbar: float = 1.0

    def __post_init__(self):
        if not isinstance(self.K, int) or self.K < 1:
            raise ValueError("K must be a positive integer")
        if self.hbar != 1.0:
            raise ValueError(
                "internal units are dimensionless with hbar = 1; rescale "
                "physical inputs before building forms"
            )

    @property
    def dim(self) -> int:
        return 2 * self.K

    def symplectic(self) -> np.ndarray:
        """J with [O_m, O_n] = i J_mn; block form [[0, I], [-I, 0]]."""
        K = self.K
        J = np.zeros((2 * K, 2 * K))
        J[:K, K:] = np.eye(K)
        J[K:, :K] = -np.eye(K)
        return J

    def labels(self) -> list[str]:
        if self.K == 1:
            return ["x", "p"]
        if self.K == 2:
            return ["x", "y", "px", "py"]
        return [f"x{j}" for j in range(1, self.K + 1)] + [
            f"p{j}" for j in range(1, self.K + 1)
        ]


@dataclass(frozen=True, eq=False)
class LinearForm:
    """First-order operator sum_i coeffs[i] O_i."""

    basis: PhaseSpaceBasis
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.basis.dim,):
            raise ValueError(
                f"coefficient vector must have length {self.basis.dim}, "
                f"got shape {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    def adjoint(self) -> "LinearForm":
        """Hermitian adjoint: coefficients conjugated entrywise."""
        return LinearForm(self.basis, np.conj(self.coeffs))


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """H = sum_ij gamma_ij O_i O_j + offset, with gamma real symmetric."""

    basis: PhaseSpaceBasis
    gamma: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        g = np.asarray(self.gamma, dtype=float)
        d = self.basis.dim
        if g.shape != (d, d):
            raise ValueError(f"gamma must be {d}x{d}, got {g.shape}")
        if not np.all(np.isfinite(g)):
            raise ValueError("gamma entries must be finite")
        if not np.array_equal(g, g.T):
            raise ValueError("gamma must be exactly symmetric")
        if not np.isfinite(self.offset):
            raise ValueError("offset must be finite")
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "offset", float(self.offset))

    def _check_basis(self, other: "QuadraticForm") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError("forms live on different bases")

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        self._check_basis(other)
        return QuadraticForm(self.basis, self.gamma + other.gamma,
                             self.offset + other.offset)

    def __sub__(self, other: "QuadraticForm") -> "QuadraticForm":
        self._check_basis(other)
        return QuadraticForm(self.basis, self.gamma - other.gamma,
                             self.offset - other.offset)

    def __mul__(self, scalar) -> "QuadraticForm":
        s = float(scalar)
        return QuadraticForm(self.basis, self.gamma * s, self.offset * s)

    __rmul__ = __mul__

    def __neg__(self) -> "QuadraticForm":
        return self * -1.0


@dataclass(frozen=True, eq=False)
class AdjointMatrix:
    """Matrix of the commutator action of a quadratic form on the basis.

    Column convention: [H, O_i] = sum_j entries[j, i] O_j.
    """

    entries: np.ndarray
    source: QuadraticForm

    @property
    def K(self) -> int:
        return self.source.basis.K

    def norm(self) -> float:
        return float(np.linalg.norm(self.entries, 2))


def make_quadratic_form(K: int, terms) -> QuadraticForm:
    """Assemble a quadratic form from monomials (i, j, coeff).

    Indices are 1-based into the ordering (x_1..x_K, p_1..p_K).  Coefficients
    must be real; each monomial coeff * O_i O_j is split into its symmetric
    part plus the reordering constant coeff * i J_ij / 2.  For a Hermitian
    combination the constants cancel to a real offset; a residual imaginary
    part above tolerance rejects the input.
    """
    basis = PhaseSpaceBasis(K)
    d = basis.dim
    J = basis.symplectic()
    gamma = np.zeros((d, d))
    offset_re = 0.0
    offset_im = 0.0
    for term in terms:
        try:
            i, j, coeff = term
        except (TypeError, ValueError) as exc:
            raise ValueError(f"term {term!r} is not an (i, j, coeff) triple") from exc
        if not (isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer))):
            raise ValueError(f"indices must be integers, got {term!r}")
        if not (1 <= i <= d and 1 <= j <= d):
            raise ValueError(f"index out of range 1..{d} in term {term!r}")
        if isinstance(coeff, bool):
            raise ValueError(f"coefficient must be a real number, got {coeff!r}")
        if isinstance(coeff, complex) and not isinstance(coeff, float):
            raise NonHermitianFormError(
                f"monomial coefficients must be real, got {coeff!r}"
            )
        c = float(coeff)
        if not np.isfinite(c):
            raise ValueError(f"non-finite coefficient in term {term!r}")
        a, b = i - 1, j - 1
        gamma[a, b] += c / 2.0
        gamma[b, a] += c / 2.0
        # O_a O_b = sym(O_a O_b) + (i/2) J_ab
        offset_im += c * J[a, b] / 2.0
    if abs(offset_im) > offset_imag_tol():
        raise NonHermitianFormError(
            f"imaginary reordering residual {offset_im:.3e} exceeds tolerance; "
            "the monomial combination is not Hermitian"
        )
    return QuadraticForm(basis, gamma, offset_re)


def adjoint_representation(q: QuadraticForm) -> AdjointMatrix:
    """Closed-form adjoint matrix 2 i gamma J (gamma stored symmetric)."""
    J = q.basis.symplectic()
    entries = 2j * (q.gamma @ J)
    return AdjointMatrix(entries=entries, source=q)


def linear_commutator(a: LinearForm, b: LinearForm) -> complex:
    """[A, B] = i a^T J b for linear forms; a complex scalar."""
    if a.basis != b.basis:
        raise BasisMismatchError("linear forms live on different bases")
    J = a.basis.symplectic()
    return complex(1j * (a.coeffs @ J @ b.coeffs))


def quadratic_commutator(a: QuadraticForm, b: QuadraticForm) -> QuadraticForm:
    """Hermitian form q with [A, B] = i q.

    Computed through the adjoint matrices: gamma_q = [M_A, M_B] J / 2, which is
    real and symmetric for Hermitian inputs; the offset is exactly zero.  q is
    the zero form precisely when the adjoint matrices commute.
    """
    if a.basis != b.basis:
        raise BasisMismatchError("forms live on different bases")
    A = adjoint_representation(a).entries
    B = adjoint_representation(b).entries
    M = A @ B - B @ A
    J = a.basis.symplectic()
    C = M @ J / 2.0
    scale = float(np.max(np.abs(C))) if C.size else 0.0
    if float(np.max(np.abs(C.imag))) > machine_zero_tol(scale):
        raise QuadhamError("commutator produced a non-real form matrix")
    C = C.real
    if float(np.max(np.abs(C - C.T))) > machine_zero_tol(scale):
        raise QuadhamError("commutator produced a non-symmetric form matrix")
    C = (C + C.T) / 2.0
    return QuadraticForm(a.basis, C, 0.0)
