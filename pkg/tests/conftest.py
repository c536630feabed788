import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260821)


def adjoint_by_expansion(gamma: np.ndarray, J: np.ndarray) -> np.ndarray:
    """Independent adjoint construction, term by term.

    [O_a O_b, O_c] = O_a [O_b, O_c] + [O_a, O_c] O_b = i J_bc O_a + i J_ac O_b,
    so each monomial contributes directly to two columns.  No matrix identity
    is used; this is the expansion a hand derivation would write down.
    """
    d = gamma.shape[0]
    m = np.zeros((d, d), dtype=complex)
    for a in range(d):
        for b in range(d):
            g = gamma[a, b]
            if g == 0.0:
                continue
            for c in range(d):
                if J[b, c] != 0.0:
                    m[a, c] += 1j * g * J[b, c]
                if J[a, c] != 0.0:
                    m[b, c] += 1j * g * J[a, c]
    return m


def random_symmetric(rng, d: int, scale: float = 2.0) -> np.ndarray:
    g = rng.uniform(-scale, scale, size=(d, d))
    return (g + g.T) / 2.0
