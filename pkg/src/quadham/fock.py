"""Truncated number-basis matrices: an independent numerical check.

Matrix elements of a quadratic form are assembled per mode.  Same-mode
quadratic products are computed at a padded cutoff and cropped so every
retained entry equals its untruncated value; cross-mode products and linear
forms are elementwise in the mode factors and need no padding.  Basis states
are occupancy tuples in row-major order with mode 1 slowest.

For forms that conserve total occupancy the retained matrix is exactly
block-diagonal over shells (total quanta s <= n_max), and each shell block
reproduces untruncated eigenvalues.  Otherwise eigenvalues of the truncated
matrix are variational approximations converging from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError, FockCapError, HermiticityError
from .phase_space import LinearForm, QuadraticForm
from .spectral import Classification, LatticeLevel
from . import tolerances as tol


@dataclass(frozen=True)
class FockTruncation:
    """Retained occupancies 0..n_max in each of K modes."""

    n_max: int
    K: int
    cap: int = 20000

    def __post_init__(self):
        if not isinstance(self.n_max, int) or self.n_max < 0:
            raise ValueError("n_max must be a non-negative integer")
        if not isinstance(self.K, int) or self.K < 1:
            raise ValueError("K must be a positive integer")
        if self.dim > self.cap:
            raise FockCapError(
                f"truncated dimension {(self.n_max + 1)}^{self.K} = {self.dim} "
                f"exceeds cap {self.cap}"
            )

    @property
    def dim(self) -> int:
        return (self.n_max + 1) ** self.K

    def occupancies(self) -> list[tuple[int, ...]]:
        """Basis order: row-major tuples, mode 1 slowest."""
        return [tuple(idx) for idx in np.ndindex(*(self.n_max + 1,) * self.K)]

    def shell_indices(self) -> dict[int, np.ndarray]:
        """Flat indices grouped by total occupancy."""
        groups: dict[int, list[int]] = {}
        for i, occ in enumerate(self.occupancies()):
            groups.setdefault(sum(occ), []).append(i)
        return {s: np.asarray(ix) for s, ix in sorted(groups.items())}


def _single_mode_ops(levels: int) -> tuple[np.ndarray, np.ndarray]:
    """Position and momentum matrices on occupancies 0..levels-1."""
    a = np.zeros((levels, levels))
    for n in range(levels - 1):
        a[n, n + 1] = math.sqrt(n + 1)
    x = (a + a.T) / math.sqrt(2.0)
    p = 1j * (a.T - a) / math.sqrt(2.0)
    return x.astype(complex), p


def _mode_factor_product(t: FockTruncation, kind_a: int, kind_b: int) -> np.ndarray:
    """Exact same-mode product block: padded product cropped to the window."""
    n = t.n_max + 1
    xp_pad = _single_mode_ops(n + 2)
    prod = xp_pad[kind_a] @ xp_pad[kind_b]
    return prod[:n, :n]


def _kron_chain(factors: dict[int, np.ndarray], K: int, n: int) -> np.ndarray:
    eye = np.eye(n, dtype=complex)
    out = np.ones((1, 1), dtype=complex)
    for j in range(K):
        out = np.kron(out, factors.get(j, eye))
    return out


def build_fock_matrix(q: QuadraticForm, t: FockTruncation) -> np.ndarray:
    """Matrix of the form on the retained basis; exact entries, then checked."""
    K = q.basis.K
    if K != t.K:
        raise ValueError("truncation mode count does not match the form")
    n = t.n_max + 1
    x1, p1 = _single_mode_ops(n)
    singles = (x1, p1)

    h = np.zeros((t.dim, t.dim), dtype=complex)
    gamma = q.gamma
    for a in range(2 * K):
        mode_a, kind_a = a % K, a // K
        for b in range(2 * K):
            g = gamma[a, b]
            if g == 0.0:
                continue
            mode_b, kind_b = b % K, b // K
            if mode_a == mode_b:
                factors = {mode_a: _mode_factor_product(t, kind_a, kind_b)}
            else:
                factors = {mode_a: singles[kind_a], mode_b: singles[kind_b]}
            h += g * _kron_chain(factors, K, n)
    if q.offset:
        h += q.offset * np.eye(t.dim)

    dev = float(np.max(np.abs(h - h.conj().T))) if t.dim else 0.0
    scale = float(np.max(np.abs(h))) if t.dim else 0.0
    if dev > tol.machine_zero_tol(scale):
        raise HermiticityError(
            f"assembled matrix deviates from Hermitian by {dev:.3e}"
        )
    return h


def linear_form_matrix(z: LinearForm, t: FockTruncation) -> np.ndarray:
    """Matrix of a linear form on the retained basis (entries exact)."""
    K = z.basis.K
    if K != t.K:
        raise ValueError("truncation mode count does not match the form")
    n = t.n_max + 1
    singles = _single_mode_ops(n)
    out = np.zeros((t.dim, t.dim), dtype=complex)
    for idx in range(2 * K):
        c = z.coeffs[idx]
        if c == 0:
            continue
        mode, kind = idx % K, idx // K
        out += c * _kron_chain({mode: singles[kind]}, K, n)
    return out


@dataclass(frozen=True, eq=False)
class OracleSpectrum:
    """Eigenvalues of the truncated matrix plus shell structure when exact."""

    eigenvalues: np.ndarray
    clusters: tuple[tuple[float, int], ...]
    shell_exact_upto: int  # 0 when the form does not conserve total quanta
    shell_eigenvalues: dict[int, np.ndarray] | None
    dim: int
    truncation: FockTruncation


def oracle_spectrum(q: QuadraticForm, t: FockTruncation) -> OracleSpectrum:
    h = build_fock_matrix(q, t)
    try:
        evals = np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver did not converge: {exc}") from exc
    evals = np.sort(evals.real)

    shells = t.shell_indices()
    scale = float(np.max(np.abs(h))) if t.dim else 0.0
    mz = tol.machine_zero_tol(scale)
    shell_of = np.empty(t.dim, dtype=int)
    for s, ix in shells.items():
        shell_of[ix] = s
    off_shell = shell_of[:, None] != shell_of[None, :]
    conserves = bool(np.all(np.abs(h[off_shell]) <= mz)) if t.dim > 1 else True

    shell_evals = None
    upto = 0
    if conserves:
        # only shells with total <= n_max retain every state of that total;
        # higher shells are cut and their eigenvalues are not exact
        upto = t.n_max
        shell_evals = {}
        for s, ix in shells.items():
            if s > t.n_max:
                continue
            block = h[np.ix_(ix, ix)]
            try:
                w = np.linalg.eigvalsh(block)
            except np.linalg.LinAlgError as exc:
                raise EigensolverError(
                    f"shell eigensolver did not converge: {exc}"
                ) from exc
            shell_evals[s] = np.sort(w.real)

    clusters = _cluster_sorted(evals)
    return OracleSpectrum(
        eigenvalues=evals,
        clusters=clusters,
        shell_exact_upto=upto,
        shell_eigenvalues=shell_evals,
        dim=t.dim,
        truncation=t,
    )


def _cluster_sorted(values: np.ndarray) -> tuple[tuple[float, int], ...]:
    if len(values) == 0:
        return ()
    t_c = tol.cluster_tol(float(np.max(np.abs(values))))
    out: list[list[float]] = [[float(values[0])]]
    for v in values[1:]:
        if abs(float(v) - out[-1][0]) <= t_c:
            out[-1].append(float(v))
        else:
            out.append([float(v)])
    return tuple((float(np.mean(g)), len(g)) for g in out)


@dataclass(frozen=True, eq=False)
class ComparisonRow:
    expected_energy: float
    observed_energy: float
    abs_diff: float
    expected_degeneracy: int | None
    observed_degeneracy: int | None


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    mode: str                       # "shell", "variational", "critical", "none"
    n_compared: int
    max_abs_diff: float
    degeneracies_agree: bool | None
    rows: tuple[ComparisonRow, ...]
    status: str                     # "PASS", "FAIL", "NOT_APPLICABLE"
    notes: str = ""


def compare_with_lattice(
    o: OracleSpectrum,
    levels: list[LatticeLevel],
    max_levels: int | None = None,
    classification: Classification | None = None,
) -> ComparisonReport:
    """Match truncated eigenvalues against a predicted energy lattice.

    Shell-conserving forms compare the pooled shell eigenvalues (a complete,
    untruncated multiset for total quanta <= n_max) against the expanded
    lattice, degeneracies included.  Other bounded forms compare the lowest
    window variationally.  Infinite-multiplicity lattices compare distinct
    energies only.  Unbounded lattices are not approximated by a truncation
    from below, so no comparison applies.
    """
    if classification is Classification.UNBOUNDED_LATTICE:
        return ComparisonReport(
            mode="none", n_compared=0, max_abs_diff=0.0,
            degeneracies_agree=None, rows=(), status="NOT_APPLICABLE",
            notes=(
                "spectrum is unbounded below; a truncated matrix has no "
                "variational relation to the lattice"
            ),
        )
    if not levels:
        return ComparisonReport(
            mode="none", n_compared=0, max_abs_diff=0.0,
            degeneracies_agree=None, rows=(), status="NOT_APPLICABLE",
            notes="empty lattice",
        )

    infinite = any(level.infinite for level in levels)
    if infinite:
        return _compare_distinct(o, levels, max_levels)
    if o.shell_eigenvalues is not None:
        return _compare_shells(o, levels, max_levels)
    return _compare_variational(o, levels, max_levels)


def _expand_levels(levels) -> list[tuple[float, int]]:
    pairs = sorted((lv.energy, lv.degeneracy) for lv in levels)
    return pairs


def _compare_shells(o, levels, max_levels) -> ComparisonReport:
    pooled = np.sort(np.concatenate(
        [o.shell_eigenvalues[s] for s in sorted(o.shell_eigenvalues)]
    ))
    expected = _expand_levels(levels)
    observed = _cluster_sorted(pooled)
    n = min(len(expected), len(observed))
    if max_levels is not None:
        n = min(n, max_levels)
    rows = []
    max_diff = 0.0
    degeneracies_agree = True
    for k in range(n):
        ee, ed = expected[k]
        oe, od = observed[k]
        diff = abs(ee - oe)
        max_diff = max(max_diff, diff)
        if ed != od:
            degeneracies_agree = False
        rows.append(ComparisonRow(ee, oe, diff, ed, od))
    threshold = tol.oracle_shell_tol()
    status = "PASS" if (max_diff <= threshold and degeneracies_agree) else "FAIL"
    notes = f"pooled shells s <= {o.shell_exact_upto}; threshold {threshold:.1e}"
    if len(expected) != len(observed) and max_levels is None:
        notes += (
            f"; level counts differ (lattice {len(expected)}, "
            f"oracle {len(observed)}), compared the lowest {n}"
        )
    return ComparisonReport(
        mode="shell", n_compared=n, max_abs_diff=max_diff,
        degeneracies_agree=degeneracies_agree, rows=tuple(rows), status=status,
        notes=notes,
    )


def _compare_variational(o, levels, max_levels) -> ComparisonReport:
    expected_multiset: list[float] = []
    for energy, deg in _expand_levels(levels):
        expected_multiset.extend([energy] * deg)
    expected_multiset.sort()
    window = max(1, o.dim // 4)
    n = min(window, len(expected_multiset), len(o.eigenvalues))
    if max_levels is not None:
        n = min(n, max_levels)
    rows = []
    max_diff = 0.0
    for k in range(n):
        ee = expected_multiset[k]
        oe = float(o.eigenvalues[k])
        diff = abs(ee - oe)
        max_diff = max(max_diff, diff)
        rows.append(ComparisonRow(ee, oe, diff, None, None))
    threshold = tol.oracle_variational_tol()
    status = "PASS" if max_diff <= threshold else "FAIL"
    return ComparisonReport(
        mode="variational", n_compared=n, max_abs_diff=max_diff,
        degeneracies_agree=None, rows=tuple(rows), status=status,
        notes=(
            f"lowest {n} of {o.dim} truncated eigenvalues; "
            f"threshold {threshold:.1e}"
        ),
    )


def _compare_distinct(o, levels, max_levels) -> ComparisonReport:
    expected = sorted({lv.energy for lv in levels})
    if o.shell_eigenvalues is not None:
        pooled = np.sort(np.concatenate(
            [o.shell_eigenvalues[s] for s in sorted(o.shell_eigenvalues)]
        ))
        observed = [e for e, _ in _cluster_sorted(pooled)]
        threshold = tol.oracle_shell_tol()
    else:
        observed = [e for e, _ in o.clusters]
        threshold = tol.oracle_variational_tol()
    n = min(len(expected), len(observed))
    if max_levels is not None:
        n = min(n, max_levels)
    rows = []
    max_diff = 0.0
    for k in range(n):
        diff = abs(expected[k] - observed[k])
        max_diff = max(max_diff, diff)
        rows.append(ComparisonRow(expected[k], observed[k], diff, None, None))
    status = "PASS" if max_diff <= threshold else "FAIL"
    return ComparisonReport(
        mode="critical", n_compared=n, max_abs_diff=max_diff,
        degeneracies_agree=None, rows=tuple(rows), status=status,
        notes=(
            "distinct energies only; multiplicities grow with the truncation "
            "and are not compared"
        ),
    )
