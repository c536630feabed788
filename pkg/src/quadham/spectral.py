"""Eigenstructure of adjoint matrices: frequencies, pairing, classification.

The adjoint matrix is i R with R = (gamma + gamma^T) J real, so eigenvalues
are computed as i times the eigenvalues of R and no general complex
eigensolver is needed.  Real eigenvalue pairs (+lambda, -lambda) are matched
into ladder pairs normalised so that [lowering, raising] = 1, and the spectrum
class is decided by the definiteness of gamma together with the frequency set.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EigensolverError,
    LadderCheckError,
    LatticeUnavailableError,
    NonRealFrequencyError,
    PairingError,
)
from .phase_space import (
    AdjointMatrix,
    LinearForm,
    PhaseSpaceBasis,
    QuadraticForm,
    adjoint_representation,
)
from . import tolerances as tol


class Classification(str, enum.Enum):
    BOUNDED_BELOW_DISCRETE = "BoundedBelowDiscrete"
    CRITICAL_INFINITE_MULTIPLICITY = "CriticalInfiniteMultiplicity"
    UNBOUNDED_LATTICE = "UnboundedLattice"
    DEFECTIVE_EXCEPTIONAL = "DefectiveExceptional"
    NON_REAL_FREQUENCIES = "NonRealFrequencies"


@dataclass(frozen=True, eq=False)
class EigenCluster:
    """A group of eigenvalues coinciding within tolerance."""

    value: complex
    algebraic: int
    geometric: int
    indices: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class EigenData:
    eigenvalues: np.ndarray          # eigenvalues of the adjoint matrix
    eigenvectors: np.ndarray         # columns, same order
    clusters: tuple[EigenCluster, ...]
    defective: bool
    matrix_norm: float
    source: AdjointMatrix

    @property
    def geometric_multiplicities(self) -> dict[complex, int]:
        return {c.value: c.geometric for c in self.clusters}


@dataclass(frozen=True, eq=False)
class FrequencyPair:
    """A matched (+lambda, -lambda) ladder pair.

    raising/lowering are oriented so norm_constant = [lowering, raising] is
    +1; raising_frequency is the signed eigenvalue of the raising member
    (equal to +lambda_plus except for inverted pairs of indefinite forms).
    """

    lambda_plus: float
    raising: LinearForm
    lowering: LinearForm
    norm_constant: float
    raising_frequency: float


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    classification: Classification
    pairs: tuple[FrequencyPair, ...]
    ground_energy: float | None
    lattice_generators: tuple[float, ...]
    multiplicity_note: str
    vacuum_energy: float | None = None


@dataclass(frozen=True, eq=False)
class LatticeLevel:
    energy: float
    states: tuple[tuple[int, ...], ...]
    degeneracy: int
    infinite: bool = False


def eigen_decompose(m: AdjointMatrix) -> EigenData:
    """Eigenvalues/vectors of the adjoint matrix via its real generator R.

    Geometric multiplicities of clustered eigenvalues come from the SVD rank
    of (M - lambda I); simple eigenvalues skip the SVD.
    """
    entries = m.entries
    R = np.real(-1j * entries)
    # entries are purely imaginary for real gamma; guard against misuse
    resid = float(np.max(np.abs(entries - 1j * R))) if entries.size else 0.0
    if resid > tol.machine_zero_tol(float(np.max(np.abs(entries)))):
        raise ValueError("adjoint matrix is not i times a real matrix")
    try:
        w, V = np.linalg.eig(R)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver did not converge: {exc}") from exc
    eigenvalues = 1j * w
    norm = float(np.linalg.norm(R, 2))
    clusters = _cluster_eigenvalues(eigenvalues, entries, norm)
    defective = any(c.geometric < c.algebraic for c in clusters)
    return EigenData(
        eigenvalues=eigenvalues,
        eigenvectors=V,
        clusters=clusters,
        defective=defective,
        matrix_norm=norm,
        source=m,
    )


def _cluster_eigenvalues(eigenvalues, entries, norm) -> tuple[EigenCluster, ...]:
    t = tol.pairing_tol(norm)
    n = len(eigenvalues)
    order = sorted(range(n), key=lambda i: (eigenvalues[i].real, eigenvalues[i].imag))
    groups: list[list[int]] = []
    for idx in order:
        placed = False
        if groups:
            rep = eigenvalues[groups[-1][0]]
            if abs(eigenvalues[idx] - rep) <= t:
                groups[-1].append(idx)
                placed = True
        if not placed:
            # also merge against earlier groups (conjugate-sorted neighbours)
            for g in groups[:-1]:
                if abs(eigenvalues[idx] - eigenvalues[g[0]]) <= t:
                    g.append(idx)
                    placed = True
                    break
        if not placed:
            groups.append([idx])
    clusters = []
    for g in groups:
        vals = eigenvalues[g]
        value = complex(np.mean(vals))
        alg = len(g)
        if alg == 1:
            geom = 1
        else:
            shifted = entries - value * np.eye(n)
            svals = np.linalg.svd(shifted, compute_uv=False)
            smax = float(svals[0]) if len(svals) else 0.0
            rank = int(np.sum(svals > tol.rank_threshold(smax)))
            geom = n - rank
        clusters.append(EigenCluster(value=value, algebraic=alg,
                                     geometric=geom, indices=tuple(g)))
    clusters.sort(key=lambda c: (c.value.real, c.value.imag))
    return tuple(clusters)


def _check_real_frequencies(e: EigenData) -> np.ndarray:
    t = tol.pairing_tol(e.matrix_norm)
    imag = np.abs(e.eigenvalues.imag)
    if np.any(imag > t):
        worst = float(np.max(imag))
        raise NonRealFrequencyError(
            f"non-real eigenvalue (|Im| up to {worst:.3e}); "
            "the form has no real frequency pairing"
        )
    return e.eigenvalues.real


def _canonical_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate so the first significant coefficient is positive real."""
    mags = np.abs(vec)
    m = float(np.max(mags))
    if m == 0.0:
        return vec
    idx = int(np.argmax(mags > 1e-12 * m))
    pivot = vec[idx]
    return vec * (abs(pivot) / pivot)


def pair_frequencies(e: EigenData, basis: PhaseSpaceBasis) -> list[FrequencyPair]:
    """Match real eigenvalues into K ladder pairs with [lowering, raising] = 1.

    Within each eigenspace the Hermitian form h(u, v) = i u^dag J v is
    diagonalised; h-positive directions are raising members, h-negative ones
    are conjugates of raising members in the opposite eigenspace, and zero
    eigenspaces pair internally.  A null direction (h ~ 0) means the pairing
    is ill-posed and is reported instead of patched.
    """
    if basis != e.source.source.basis:
        raise ValueError("basis does not match the decomposed form")
    freqs = _check_real_frequencies(e)
    t_pair = tol.pairing_tol(e.matrix_norm)
    t_zero = tol.zero_frequency_tol(e.matrix_norm)
    J = basis.symplectic()
    n = len(freqs)

    # group indices by real frequency
    order = sorted(range(n), key=lambda i: freqs[i])
    groups: list[tuple[float, list[int]]] = []
    for idx in order:
        if groups and abs(freqs[idx] - groups[-1][0]) <= t_pair:
            groups[-1][1].append(idx)
        else:
            groups.append((freqs[idx], [idx]))
    groups = [(float(np.mean([freqs[i] for i in g])), g) for _, g in groups]

    zero_groups = [g for g in groups if abs(g[0]) <= t_zero]
    pos_groups = [g for g in groups if g[0] > t_zero]
    neg_groups = {abs(val): len(g) for val, g in groups if val < -t_zero}

    pairs: list[FrequencyPair] = []

    for val, idxs in pos_groups:
        match = [v for v in neg_groups if abs(v - val) <= t_pair]
        if not match or neg_groups[match[0]] != len(idxs):
            raise PairingError(
                f"unpaired eigenvalue {val:.6g}: no matching -lambda group"
            )
        pairs.extend(_pairs_from_group(val, idxs, e.eigenvectors, J, t_zero))

    if zero_groups:
        zval, zidx = zero_groups[0]
        if len(zero_groups) > 1:
            zidx = sorted(itertools.chain.from_iterable(g for _, g in zero_groups))
        if len(zidx) % 2 != 0:
            raise PairingError("zero eigenspace has odd dimension")
        pairs.extend(_pairs_from_zero_group(zidx, e.eigenvectors, J, t_zero))

    if len(pairs) != basis.K:
        raise PairingError(
            f"pairing produced {len(pairs)} pairs, expected {basis.K}"
        )
    pairs.sort(key=lambda p: -p.lambda_plus)
    return [_finalize_pair(p, basis, J) for p in pairs]


@dataclass
class _RawPair:
    lambda_plus: float
    raising_vec: np.ndarray
    raising_frequency: float


def _pairs_from_group(val, idxs, V, J, t_zero) -> list[_RawPair]:
    basis_vecs = V[:, idxs]
    G = 1j * (basis_vecs.conj().T @ J @ basis_vecs)
    G = (G + G.conj().T) / 2.0
    mu, U = np.linalg.eigh(G)
    out = []
    for k in range(len(mu)):
        m = float(mu[k])
        w = basis_vecs @ U[:, k]
        if abs(m) <= t_zero:
            raise PairingError(
                f"symplectically null eigenvector at frequency {val:.6g}"
            )
        w = w / math.sqrt(abs(m))
        if m > 0:
            out.append(_RawPair(val, w, val))
        else:
            out.append(_RawPair(val, np.conj(w), -val))
    return out


def _pairs_from_zero_group(idxs, V, J, t_zero) -> list[_RawPair]:
    basis_vecs = V[:, idxs]
    G = 1j * (basis_vecs.conj().T @ J @ basis_vecs)
    G = (G + G.conj().T) / 2.0
    mu, U = np.linalg.eigh(G)
    positive = [k for k in range(len(mu)) if mu[k] > t_zero]
    if len(positive) != len(idxs) // 2:
        raise PairingError("zero eigenspace does not split into ladder pairs")
    out = []
    for k in positive:
        w = basis_vecs @ U[:, k]
        w = w / math.sqrt(float(mu[k]))
        out.append(_RawPair(0.0, w, 0.0))
    return out


def _finalize_pair(p: _RawPair, basis, J) -> FrequencyPair:
    w = _canonical_phase(p.raising_vec)
    raising = LinearForm(basis, w)
    lowering = LinearForm(basis, np.conj(w))
    nc = complex(1j * (lowering.coeffs @ J @ raising.coeffs))
    return FrequencyPair(
        lambda_plus=float(p.lambda_plus),
        raising=raising,
        lowering=lowering,
        norm_constant=float(nc.real),
        raising_frequency=float(p.raising_frequency),
    )


def ladder_check(q: QuadraticForm, z: LinearForm) -> float:
    """Verify [H, Z] = lambda Z through the adjoint matrix; return lambda."""
    if q.basis != z.basis:
        raise ValueError("form and candidate live on different bases")
    c = z.coeffs
    cn = float(np.linalg.norm(c))
    if cn == 0.0:
        raise ValueError("zero vector is not a ladder operator candidate")
    M = adjoint_representation(q).entries
    hnorm = float(np.linalg.norm(M, 2))
    lam = complex((np.conj(c) @ (M @ c)) / (np.conj(c) @ c))
    residual = float(np.linalg.norm(M @ c - lam * c)) / cn
    t = tol.ladder_residual_tol(hnorm)
    if residual > t:
        raise LadderCheckError(
            f"residual {residual:.3e} exceeds tolerance {t:.3e}", residual
        )
    if abs(lam.imag) > max(t, 1e-300):
        raise LadderCheckError(
            f"eigenvalue {lam} has non-real part beyond tolerance", residual
        )
    return float(lam.real)


def classify_spectrum(q: QuadraticForm) -> SpectrumReport:
    """Decision tree over frequency reality, defectiveness and definiteness."""
    adj = adjoint_representation(q)
    e = eigen_decompose(adj)
    t_pair = tol.pairing_tol(e.matrix_norm)

    if np.any(np.abs(e.eigenvalues.imag) > t_pair):
        return SpectrumReport(
            classification=Classification.NON_REAL_FREQUENCIES,
            pairs=(),
            ground_energy=None,
            lattice_generators=(),
            multiplicity_note=(
                "adjoint eigenvalues include non-real frequencies; no real "
                "ladder structure or energy lattice exists"
            ),
            vacuum_energy=None,
        )

    if e.defective:
        bad = [c for c in e.clusters if c.geometric < c.algebraic]
        desc = ", ".join(
            f"{c.value.real:.6g} (algebraic {c.algebraic}, geometric {c.geometric})"
            for c in bad
        )
        return SpectrumReport(
            classification=Classification.DEFECTIVE_EXCEPTIONAL,
            pairs=(),
            ground_energy=None,
            lattice_generators=(),
            multiplicity_note=(
                f"adjoint matrix is defective at eigenvalue(s) {desc}; "
                "ladder operators do not span and no discrete lattice applies"
            ),
            vacuum_energy=None,
        )

    pairs = tuple(pair_frequencies(e, q.basis))

    gevals = np.linalg.eigvalsh(q.gamma)
    dtol = tol.definiteness_tol(float(np.max(np.abs(gevals))) if gevals.size else 0.0)
    gmin = float(gevals[0])
    t_zero = tol.zero_frequency_tol(e.matrix_norm)
    has_zero_freq = any(p.lambda_plus <= t_zero for p in pairs)

    if gmin > dtol:
        ground = q.offset + 0.5 * sum(p.lambda_plus for p in pairs)
        gens = tuple(p.lambda_plus for p in pairs)
        return SpectrumReport(
            classification=Classification.BOUNDED_BELOW_DISCRETE,
            pairs=pairs,
            ground_energy=float(ground),
            lattice_generators=gens,
            multiplicity_note=(
                "form matrix positive definite; spectrum is the discrete "
                "lattice ground + n . generators with finite degeneracies"
            ),
            vacuum_energy=float(ground),
        )

    if gmin > -dtol:
        # positive semidefinite boundary
        ground = q.offset + 0.5 * sum(p.lambda_plus for p in pairs)
        gens = tuple(
            0.0 if p.lambda_plus <= t_zero else p.lambda_plus for p in pairs
        )
        if has_zero_freq:
            return SpectrumReport(
                classification=Classification.CRITICAL_INFINITE_MULTIPLICITY,
                pairs=pairs,
                ground_energy=float(ground),
                lattice_generators=gens,
                multiplicity_note=(
                    "zero-frequency ladder pair on the semidefinite boundary: "
                    "every lattice level carries infinite multiplicity"
                ),
                vacuum_energy=float(ground),
            )
        return SpectrumReport(
            classification=Classification.BOUNDED_BELOW_DISCRETE,
            pairs=pairs,
            ground_energy=float(ground),
            lattice_generators=gens,
            multiplicity_note=(
                "form matrix semidefinite but all frequencies nonzero; "
                "treated as bounded below"
            ),
            vacuum_energy=float(ground),
        )

    # indefinite with all-real frequencies
    from .wavefunctions import vacuum_annihilation_residual

    gens = []
    fallback = False
    for p in pairs:
        thr_r = tol.annihilation_tol(float(np.linalg.norm(p.raising.coeffs)))
        thr_l = tol.annihilation_tol(float(np.linalg.norm(p.lowering.coeffs)))
        res_r = vacuum_annihilation_residual(p.raising)
        res_l = vacuum_annihilation_residual(p.lowering)
        if res_l <= thr_l and res_r > thr_r:
            gens.append(p.raising_frequency)
        elif res_r <= thr_r and res_l > thr_l:
            gens.append(-p.raising_frequency)
        else:
            gens.append(p.raising_frequency)
            fallback = True
    gens.sort(reverse=True)
    note = (
        "form matrix indefinite with real frequencies: the Gaussian-vacuum "
        "lattice extends without a lower bound (signed generators)"
    )
    if fallback:
        note += (
            "; warning: some pair had no member annihilating the standard "
            "Gaussian vacuum, sign taken from the commutator orientation"
        )
    vac = q.offset + 0.5 * sum(gens)
    return SpectrumReport(
        classification=Classification.UNBOUNDED_LATTICE,
        pairs=pairs,
        ground_energy=None,
        lattice_generators=tuple(gens),
        multiplicity_note=note,
        vacuum_energy=float(vac),
    )


def spectrum_lattice(r: SpectrumReport, max_quanta: int) -> list[LatticeLevel]:
    """Enumerate lattice energies anchor + sum n_i g_i for sum n_i <= max_quanta.

    Zero generators are excluded from enumeration and instead mark every level
    as infinitely degenerate.  Bounded/critical lattices merge equal energies
    globally; unbounded lattices merge only within a total-quanta shell and
    sort by (total quanta, energy).
    """
    if r.classification in (
        Classification.NON_REAL_FREQUENCIES,
        Classification.DEFECTIVE_EXCEPTIONAL,
    ):
        raise LatticeUnavailableError(
            f"no energy lattice for classification {r.classification.value}"
        )
    if max_quanta < 0:
        raise ValueError("max_quanta must be non-negative")
    anchor = r.ground_energy if r.ground_energy is not None else r.vacuum_energy
    if anchor is None:
        raise LatticeUnavailableError("report carries no anchor energy")

    active = [g for g in r.lattice_generators if g != 0.0]
    infinite = len(active) < len(r.lattice_generators)
    unbounded = r.classification is Classification.UNBOUNDED_LATTICE

    entries = []  # (energy, quanta tuple)
    for quanta in _multi_indices(len(active), max_quanta):
        energy = anchor + sum(n * g for n, g in zip(quanta, active))
        entries.append((float(energy), quanta))
    if not entries:
        return []

    emax = max(abs(x[0]) for x in entries)
    t = tol.lattice_merge_tol(emax)

    if unbounded:
        keyed = sorted(entries, key=lambda x: (sum(x[1]), x[0], x[1]))
        levels = []
        for (energy, quanta) in keyed:
            if (
                levels
                and sum(levels[-1].states[0]) == sum(quanta)
                and abs(levels[-1].energy - energy) <= t
            ):
                prev = levels[-1]
                states = prev.states + (quanta,)
                levels[-1] = LatticeLevel(
                    energy=prev.energy,
                    states=states,
                    degeneracy=len(states),
                    infinite=infinite,
                )
            else:
                levels.append(LatticeLevel(energy, (quanta,), 1, infinite))
        return levels

    keyed = sorted(entries, key=lambda x: (x[0], x[1]))
    levels = []
    for (energy, quanta) in keyed:
        if levels and abs(levels[-1].energy - energy) <= t:
            prev = levels[-1]
            states = tuple(sorted(prev.states + (quanta,)))
            levels[-1] = LatticeLevel(
                energy=prev.energy,
                states=states,
                degeneracy=len(states),
                infinite=infinite,
            )
        else:
            levels.append(LatticeLevel(energy, (quanta,), 1, infinite))
    return levels


def _multi_indices(r: int, max_total: int):
    """All tuples n in N^r with sum(n) <= max_total, lexicographic order."""
    if r == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _multi_indices(r - 1, max_total - head):
            yield (head,) + tail
