"""Spectral radius, Perron vector, exact characteristic polynomials and distance-spectrum bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .distance import wiener2_index, wiener_index
from .errors import CapabilityError, GraphSizeError, MatrixValidityError
from .poly import Polynomial, largest_real_root  # noqa: F401  (re-exported)

EIGEN_RTOL = 1e-10
RESIDUAL_RTOL = 1e-9
COMPARE_SLACK = 1e-8
CHAR_POLY_CAP = 40


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    vector: np.ndarray
    residual: float

    @property
    def is_positive(self) -> bool:
        return bool(np.all(self.vector > 0))


def _validate(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise MatrixValidityError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise MatrixValidityError("matrix is not symmetric")
    if (a < 0).any():
        raise MatrixValidityError("matrix has a negative entry")
    return a


def _normalise(v: np.ndarray) -> np.ndarray:
    if v.sum() < 0:
        v = -v
    return v / np.abs(v).max()


def spectral_radius(m, tight: bool = False) -> SpectralResult:
    """Largest eigenvalue and unit-max Perron vector of a symmetric nonnegative matrix.

    The dense symmetric eigensolver (LAPACK ``syevd``) does the work. With
    ``tight=True`` the result is recomputed in 40-digit arithmetic, which is
    what boundary verdicts use.
    """
    a = _validate(m)
    if tight:
        return _spectral_radius_mp(a)
    w, vecs = np.linalg.eigh(a)
    lam = float(w[-1])
    v = _normalise(vecs[:, -1])
    residual = float(np.abs(a @ v - lam * v).max())
    if residual > RESIDUAL_RTOL * max(1.0, abs(lam)):
        # one Rayleigh-quotient refinement before giving up
        lam = float(v @ a @ v / (v @ v))
        shifted = a - (lam + 1e-12 * max(1.0, abs(lam))) * np.eye(a.shape[0])
        v = _normalise(np.linalg.solve(shifted, v))
        lam = float(v @ a @ v / (v @ v))
        residual = float(np.abs(a @ v - lam * v).max())
        if residual > RESIDUAL_RTOL * max(1.0, abs(lam)):
            raise ArithmeticError(f"eigensolver residual {residual:.3e} exceeds tolerance")
    return SpectralResult(lam, v, residual)


def _spectral_radius_mp(a: np.ndarray) -> SpectralResult:
    import mpmath

    with mpmath.workdps(40):
        mat = mpmath.matrix(a.tolist())
        w, q = mpmath.eigsy(mat)
        k = max(range(len(w)), key=lambda i: w[i])
        lam = w[k]
        vec = [q[i, k] for i in range(a.shape[0])]
        scale = max(vec, key=abs)
        vec = [x / scale for x in vec]
        res = max(abs(sum(mat[i, j] * vec[j] for j in range(a.shape[0])) - lam * vec[i]) for i in range(a.shape[0]))
        return SpectralResult(float(lam), np.array([float(x) for x in vec]), float(res))


def _exact_entries(m) -> list[list[int | Fraction]]:
    rows = [list(r) for r in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MatrixValidityError("matrix is not square")
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, float):
                if not x.is_integer():
                    raise MatrixValidityError("char_poly needs exact entries")
                x = int(x)
            row.append(x if isinstance(x, Fraction) else int(x))
        out.append(row)
    return out


def char_poly(m) -> Polynomial:
    """Exact ``det(xI - m)`` by the Faddeev-LeVerrier recurrence.

    Works for integer and ``Fraction`` entries; for integer matrices every
    trace division is exact so all intermediates stay integral.
    """
    a = _exact_entries(m)
    n = len(a)
    if n > CHAR_POLY_CAP:
        raise CapabilityError(f"exact characteristic polynomial is capped at n <= {CHAR_POLY_CAP}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if k > 1:
            c = coeffs[n - k + 1]
            mk = [[sum(a[i][t] * mk[t][j] for t in range(n)) + (c if i == j else 0) for j in range(n)] for i in range(n)]
        trace = sum(sum(a[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        if isinstance(trace, int) and trace % k == 0:
            coeffs[n - k] = -trace // k
        else:
            coeffs[n - k] = -Fraction(trace) / k
    return Polynomial(coeffs)


def rayleigh_lower_bound(dm: np.ndarray) -> float:
    """``2W/n``: the Rayleigh quotient of the all-ones vector, a lower bound on the distance spectral radius."""
    n = dm.shape[0]
    return 2 * wiener_index(dm) / n


def wiener2_upper_bound(dm: np.ndarray) -> float:
    """``sqrt(2(n-1) W2 / n)``, an upper bound on the distance spectral radius (tight only for K_n)."""
    n = dm.shape[0]
    if n < 2:
        raise GraphSizeError("bound needs at least 2 vertices")
    return math.sqrt(2 * (n - 1) * wiener2_index(dm) / n)


def wiener2_lower_bound(dm: np.ndarray) -> float:
    """``sqrt(W2)``; a lower bound only for graphs with exactly one positive distance eigenvalue."""
    if dm.shape[0] < 2:
        raise GraphSizeError("bound needs at least 2 vertices")
    return math.sqrt(wiener2_index(dm))


def positive_eigenvalue_count(m, tol: float = 1e-9) -> int:
    w = np.linalg.eigvalsh(_validate(m))
    return int((w > tol * max(1.0, abs(w[-1]))).sum())
