"""Dense complex linear algebra: validated matrices, SVD, rank truncation.

Every routine is a pure function over C-ordered ``complex128`` arrays, so
repeated runs on one platform and BLAS configuration are bit-stable.
LAPACK (through numpy) supplies the factorizations; the wrappers here pin
down shapes, finiteness and failure behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ShapeError",
    "SvdConvergenceError",
    "SVDResult",
    "as_cmatrix",
    "svd",
    "truncated_rank",
    "frobenius",
    "matmul",
    "adjoint",
]


class ShapeError(ValueError):
    """Operand shapes do not agree for the requested operation."""


class SvdConvergenceError(RuntimeError):
    """The SVD iteration did not converge for the given matrix."""


def as_cmatrix(a, name: str = "matrix") -> np.ndarray:
    """Return ``a`` as a validated C-ordered complex128 2-d array."""
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-d, got ndim={arr.ndim}")
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


@dataclass(frozen=True)
class SVDResult:
    """Reduced SVD ``A = U @ diag(s) @ V.conj().T`` with r = min(m, n).

    ``u`` is m-by-r and ``v`` is n-by-r with orthonormal columns; ``s`` is
    non-negative and descending.
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.s) @ self.v.conj().T


def svd(a) -> SVDResult:
    """Reduced singular value decomposition of a complex matrix."""
    arr = as_cmatrix(a)
    try:
        u, s, vh = np.linalg.svd(arr, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        m, n = arr.shape
        raise SvdConvergenceError(f"SVD did not converge for {m}x{n} matrix") from exc
    return SVDResult(u=u, s=s, v=vh.conj().T)


def truncated_rank(s, tol_rel: float) -> int:
    """Number of leading singular values with ``s[i] >= tol_rel * s[0]``.

    ``s`` must be descending; an empty or all-zero spectrum has rank 0.
    """
    if not 0.0 < tol_rel < 1.0:
        raise ValueError(f"tol_rel must lie in (0, 1), got {tol_rel}")
    s = np.asarray(s, dtype=float)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s >= tol_rel * s[0]))


def frobenius(a) -> float:
    """Frobenius norm with a deterministic reduction order."""
    return float(np.linalg.norm(as_cmatrix(a)))


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = as_cmatrix(a, "left operand")
    b = as_cmatrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T
