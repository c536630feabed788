"""Exact polynomial-times-Gaussian states and ladder actions on them.

A state is scale * f(x) * exp(-|x|^2 / 2) with f a polynomial over exact
complex rationals and scale a PiScale.  Position acts by multiplication,
momentum by p_j = -i d/dx_j, which on the polynomial part is
f -> -i df/dx_j + i x_j f.  Every operation here is exact: floats entering
through form coefficients are dyadic rationals and convert losslessly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._exact import ComplexRational, PiScale, _rational_sqrt
from .phase_space import LinearForm, QuadraticForm

_I = ComplexRational(0, 1)


@dataclass(frozen=True, eq=False)
class ExactAmount:
    """An exact value coeff * factor, factor a positive real PiScale."""

    coeff: ComplexRational
    factor: PiScale

    @property
    def is_zero(self) -> bool:
        return self.coeff.is_zero

    @property
    def is_one(self) -> bool:
        c = self.coeff
        if c.im != 0 or c.re <= 0 or self.factor.quarter != 0:
            return False
        return c.re * c.re * self.factor.q == 1

    def equals_rational(self, value) -> bool:
        r = Fraction(value) if not isinstance(value, Fraction) else value
        c = self.coeff
        if c.im != 0 or self.factor.quarter != 0:
            return False
        if r == 0:
            return c.re == 0
        if (c.re > 0) != (r > 0):
            return False
        return c.re * c.re * self.factor.q == r * r

    def to_complex(self) -> complex:
        return self.coeff.to_complex() * float(self.factor)

    def __repr__(self):
        return f"ExactAmount({self.coeff!r}, {self.factor!r})"


def _clean_poly(K: int, poly) -> dict:
    out = {}
    for exps, coeff in poly.items():
        key = tuple(int(e) for e in exps)
        if len(key) != K:
            raise ValueError(f"exponent tuple {key} does not have length {K}")
        if any(e < 0 for e in key):
            raise ValueError(f"negative exponent in {key}")
        c = ComplexRational.from_number(coeff)
        if not c.is_zero:
            out[key] = c
    return out


@dataclass(frozen=True, eq=False)
class PolyGaussian:
    """scale * (polynomial in x_1..x_K) * exp(-|x|^2/2)."""

    K: int
    poly: dict
    scale: PiScale
    normalized: bool = False

    def __post_init__(self):
        if not isinstance(self.K, int) or self.K < 1:
            raise ValueError("K must be a positive integer")
        object.__setattr__(self, "poly", _clean_poly(self.K, self.poly))
        if not isinstance(self.scale, PiScale):
            raise TypeError("scale must be a PiScale")

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.poly), default=0)

    # ---- linear structure ------------------------------------------------

    def scalar_mul(self, z) -> "PolyGaussian":
        c = ComplexRational.from_number(z)
        if c.is_zero:
            return PolyGaussian(self.K, {}, self.scale, False)
        return PolyGaussian(
            self.K, {k: v * c for k, v in self.poly.items()}, self.scale, False
        )

    def __add__(self, other: "PolyGaussian") -> "PolyGaussian":
        if not isinstance(other, PolyGaussian):
            return NotImplemented
        if self.K != other.K:
            raise ValueError("cannot add states with different mode counts")
        ratio = self.scale.rational_ratio(other.scale)
        if ratio is None:
            raise ValueError(
                "scales differ by an irrational factor; exact addition "
                "is not representable"
            )
        out = {k: v * ratio for k, v in self.poly.items()}
        for k, v in other.poly.items():
            _accumulate(out, k, v)
        return PolyGaussian(self.K, out, other.scale, False)

    def __sub__(self, other: "PolyGaussian") -> "PolyGaussian":
        if not isinstance(other, PolyGaussian):
            return NotImplemented
        return self + other.scalar_mul(-1)

    def __neg__(self) -> "PolyGaussian":
        return self.scalar_mul(-1)

    # ---- operator actions ------------------------------------------------

    def apply_position(self, j: int) -> "PolyGaussian":
        self._check_mode(j)
        out = {}
        for exps, c in self.poly.items():
            _accumulate(out, _bump(exps, j, +1), c)
        return PolyGaussian(self.K, out, self.scale, False)

    def apply_momentum(self, j: int) -> "PolyGaussian":
        # p_j (f G) = (-i df/dx_j + i x_j f) G
        self._check_mode(j)
        out = {}
        for exps, c in self.poly.items():
            if exps[j] > 0:
                _accumulate(out, _bump(exps, j, -1), c * _I * (-exps[j]))
            _accumulate(out, _bump(exps, j, +1), c * _I)
        return PolyGaussian(self.K, out, self.scale, False)

    def apply_operator(self, index: int) -> "PolyGaussian":
        """Apply basis operator by flat index: 0..K-1 positions, K..2K-1 momenta."""
        if not 0 <= index < 2 * self.K:
            raise ValueError(f"operator index {index} out of range")
        if index < self.K:
            return self.apply_position(index)
        return self.apply_momentum(index - self.K)

    def _check_mode(self, j: int) -> None:
        if not 0 <= j < self.K:
            raise ValueError(f"mode index {j} out of range for K={self.K}")

    # ---- canonical form and equality --------------------------------------

    def canonical(self) -> "PolyGaussian":
        """Unique representative: polynomial content moved into the scale.

        After this, equal states compare equal field by field.  The sign and
        phase stay in the polynomial; only positive rational content moves.
        """
        if not self.poly:
            return PolyGaussian(self.K, {}, PiScale.one(), False)
        content = None
        for c in self.poly.values():
            for part in (abs(c.re), abs(c.im)):
                if part == 0:
                    continue
                content = part if content is None else _fraction_gcd(content, part)
        if content is None or content == 1:
            return self
        poly = {k: v / content for k, v in self.poly.items()}
        return PolyGaussian(self.K, poly, self.scale * content, self.normalized)

    def equals_exact(self, other: "PolyGaussian") -> bool:
        if self.K != other.K:
            return False
        a = self.canonical()
        b = other.canonical()
        return a.scale == b.scale and a.poly == b.poly

    # ---- numerics ----------------------------------------------------------

    def evaluate(self, points) -> complex | np.ndarray:
        """Value at points of shape (K,) or (N, K)."""
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        if single:
            pts = pts[None, :]
        if pts.shape[-1] != self.K:
            raise ValueError(f"points must have last dimension {self.K}")
        acc = np.zeros(pts.shape[0], dtype=complex)
        for exps, c in self.poly.items():
            mono = np.ones(pts.shape[0])
            for j, e in enumerate(exps):
                if e:
                    mono = mono * pts[:, j] ** e
            acc += c.to_complex() * mono
        acc *= float(self.scale) * np.exp(-0.5 * np.sum(pts * pts, axis=-1))
        return complex(acc[0]) if single else acc

    # ---- rendering ---------------------------------------------------------

    def render(self) -> str:
        if not self.poly:
            return "0"
        parts = []
        if not self.scale.is_one:
            parts.append(self.scale.display())
        poly_str = _render_poly(self.poly, _position_labels(self.K))
        if poly_str != "1":
            if len(self.poly) > 1:
                poly_str = f"({poly_str})"
            parts.append(poly_str)
        parts.append(_render_gaussian(self.K))
        return " * ".join(parts)

    def __repr__(self):
        return f"PolyGaussian({self.render()!r})"


def _accumulate(table: dict, key: tuple, value: ComplexRational) -> None:
    cur = table.get(key)
    new = value if cur is None else cur + value
    if new.is_zero:
        table.pop(key, None)
    else:
        table[key] = new


def _bump(exps: tuple, j: int, step: int) -> tuple:
    out = list(exps)
    out[j] += step
    return tuple(out)


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(
        math.gcd(a.numerator, b.numerator),
        math.lcm(a.denominator, b.denominator),
    )


def _position_labels(K: int) -> list[str]:
    if K == 1:
        return ["x"]
    if K == 2:
        return ["x", "y"]
    return [f"x{j}" for j in range(1, K + 1)]


def _render_gaussian(K: int) -> str:
    labels = _position_labels(K)
    if K == 1:
        return f"exp(-{labels[0]}^2/2)"
    body = " + ".join(f"{v}^2" for v in labels)
    return f"exp(-({body})/2)"


def _frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _mono_str(exps: tuple, labels: list[str]) -> str:
    pieces = []
    for label, e in zip(labels, exps):
        if e == 1:
            pieces.append(label)
        elif e > 1:
            pieces.append(f"{label}^{e}")
    return "*".join(pieces)


def _term_pieces(c: ComplexRational, mono: str) -> tuple[bool, str]:
    """(is_negative, body) for one rendered term."""
    if c.im == 0:
        neg = c.re < 0
        mag = abs(c.re)
        if mono and mag == 1:
            coeff = ""
        else:
            coeff = _frac_str(mag)
    elif c.re == 0:
        neg = c.im < 0
        mag = abs(c.im)
        coeff = "i" if mag == 1 else f"{_frac_str(mag)}*i"
    else:
        neg = False
        re_s = _frac_str(c.re)
        im_mag = abs(c.im)
        im_s = "i" if im_mag == 1 else f"{_frac_str(im_mag)}*i"
        sign = "+" if c.im > 0 else "-"
        coeff = f"({re_s} {sign} {im_s})"
    if coeff and mono:
        return neg, f"{coeff}*{mono}"
    return neg, coeff or mono


def _render_poly(poly: dict, labels: list[str]) -> str:
    keys = sorted(poly, key=lambda k: (sum(k), tuple(-e for e in k)))
    out = []
    for key in keys:
        neg, body = _term_pieces(poly[key], _mono_str(key, labels))
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


# ---- construction and form actions -----------------------------------------


def vacuum(K: int) -> PolyGaussian:
    """Normalised Gaussian ground state of K modes."""
    return PolyGaussian(K, {(0,) * K: ComplexRational(1)},
                        PiScale(1, -K), normalized=True)


def apply_linear_form(z: LinearForm, s: PolyGaussian) -> PolyGaussian:
    """Act with sum_j (cx_j x_j + cp_j p_j); coefficients convert exactly."""
    K = z.basis.K
    if K != s.K:
        raise ValueError("linear form and state have different mode counts")
    out: dict = {}
    for j in range(K):
        cx = ComplexRational.from_number(complex(z.coeffs[j]))
        cp = ComplexRational.from_number(complex(z.coeffs[K + j]))
        if not cx.is_zero:
            for exps, c in s.poly.items():
                _accumulate(out, _bump(exps, j, +1), c * cx)
        if not cp.is_zero:
            icp = cp * _I
            for exps, c in s.poly.items():
                if exps[j] > 0:
                    _accumulate(out, _bump(exps, j, -1), icp * (-exps[j]) * c)
                _accumulate(out, _bump(exps, j, +1), icp * c)
    return PolyGaussian(s.K, out, s.scale, False)


def apply_quadratic_form(q: QuadraticForm, s: PolyGaussian) -> PolyGaussian:
    """Act with sum_ab gamma_ab O_a O_b + offset, exactly."""
    K = q.basis.K
    if K != s.K:
        raise ValueError("quadratic form and state have different mode counts")
    total = s.scalar_mul(ComplexRational.from_number(q.offset))
    gamma = q.gamma
    for a in range(2 * K):
        for b in range(2 * K):
            g = gamma[a, b]
            if g == 0.0:
                continue
            term = s.apply_operator(b).apply_operator(a)
            total = total + term.scalar_mul(Fraction(float(g)))
    return total


def _even_moment(m: int) -> Fraction:
    """integral x^m e^(-x^2) dx / sqrt(pi) for even m: (m-1)!! / 2^(m/2)."""
    n = m // 2
    return Fraction(math.factorial(2 * n),
                    math.factorial(n) * 4 ** n)


def inner(a: PolyGaussian, b: PolyGaussian) -> ExactAmount:
    """Exact L2 inner product <a, b>, conjugate-linear in a."""
    if a.K != b.K:
        raise ValueError("states have different mode counts")
    factor = a.scale * b.scale * PiScale(1, 2 * a.K)
    total = ComplexRational(0)
    for ea, ca in a.poly.items():
        cac = ca.conjugate()
        for eb, cb in b.poly.items():
            w = Fraction(1)
            ok = True
            for j in range(a.K):
                m = ea[j] + eb[j]
                if m % 2:
                    ok = False
                    break
                w *= _even_moment(m)
            if ok:
                total = total + cac * cb * w
    return ExactAmount(total, factor)


def squared_norm(s: PolyGaussian) -> ExactAmount:
    return inner(s, s)


def norm_scale(s: PolyGaussian) -> PiScale:
    """The exact norm of a nonzero state as a PiScale."""
    sq = squared_norm(s)
    if sq.is_zero:
        raise ValueError("zero state has no normalisation")
    if sq.coeff.im != 0 or sq.coeff.re <= 0:
        raise ValueError("squared norm is not a positive rational multiple")
    radicand = sq.coeff.re * sq.coeff.re * sq.factor.q
    root = _rational_sqrt(radicand)
    if root is None or sq.factor.quarter % 2:
        raise ValueError("norm is not representable as sqrt(q) * pi^(k/4)")
    return PiScale.sqrt_of(root, sq.factor.quarter // 2)


def normalized_copy(s: PolyGaussian) -> PolyGaussian:
    n = norm_scale(s)
    out = PolyGaussian(s.K, dict(s.poly), s.scale / n, normalized=True)
    c = out.canonical()
    return PolyGaussian(c.K, c.poly, c.scale, normalized=True)


def is_scalar_multiple_exact(a: PolyGaussian, b: PolyGaussian) -> ExactAmount | None:
    """The exact amount r with a = r * b, or None if a is not a multiple of b."""
    if a.K != b.K:
        return None
    if b.is_zero:
        return ExactAmount(ComplexRational(1), PiScale.one()) if a.is_zero else None
    if a.is_zero:
        return ExactAmount(ComplexRational(0), PiScale.one())
    if set(a.poly) != set(b.poly):
        return None
    ratio = None
    for key, cb in b.poly.items():
        r = a.poly[key] / cb
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ExactAmount(ratio, a.scale / b.scale)


def build_eigenfunction(z_first: LinearForm, z_second: LinearForm,
                        m: int, n: int) -> PolyGaussian:
    """Normalised state from m hits of z_first after n hits of z_second."""
    if m < 0 or n < 0 or m != int(m) or n != int(n):
        raise ValueError("quantum numbers must be non-negative integers")
    if z_first.basis != z_second.basis:
        raise ValueError("ladder forms live on different bases")
    s = vacuum(z_first.basis.K)
    for _ in range(int(n)):
        s = apply_linear_form(z_second, s)
    for _ in range(int(m)):
        s = apply_linear_form(z_first, s)
    if s.is_zero:
        raise ValueError("ladder application annihilated the state")
    return normalized_copy(s)


def vacuum_annihilation_residual(z: LinearForm) -> float:
    """Norm of z applied to the normalised Gaussian vacuum.

    Zero exactly when cx_j + i cp_j = 0 for every mode, since
    z . vacuum = sum_j (cx_j + i cp_j) x_j . vacuum and <x_j^2> = 1/2.
    """
    K = z.basis.K
    d = z.coeffs[:K] + 1j * z.coeffs[K:]
    return float(np.linalg.norm(d) / math.sqrt(2.0))
