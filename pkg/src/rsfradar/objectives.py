"""Waveform-quality objectives for code design.

Both objectives act on the Gram matrix of the (scaled) sub-dictionary
restricted to a support set: the trace of the inverse Gram bounds the mean
squared recovery error from below, and the squared Frobenius norm of the
Gram is its least-squares surrogate.  For the 1/sqrt(N)-scaled
sub-dictionary every Gram diagonal equals one, so both objectives are
floored at the support size and reach it exactly when the target signatures
are mutually orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Gram eigenvalues below this multiple of the support size count as zero.
SINGULARITY_RTOL = 1e-12


@dataclass(frozen=True)
class SubDictionary:
    """Column subset of a dictionary, optionally scaled by 1/sqrt(N)."""

    A: np.ndarray
    normalized: bool

    @property
    def support_size(self) -> int:
        return self.A.shape[1]


def sub_dictionary(
    dictionary: np.ndarray, support, normalized: bool = True
) -> SubDictionary:
    """Select the support columns of a dictionary; scale by 1/sqrt(N) when
    normalized so the Gram diagonal is all ones."""
    support = list(support)
    if not support:
        raise ValueError("support set is empty")
    a = dictionary[:, support]
    if normalized:
        a = a / np.sqrt(dictionary.shape[0])
    return SubDictionary(A=a, normalized=normalized)


def _gram(sub: SubDictionary) -> np.ndarray:
    return sub.A.conj().T @ sub.A


def crb_objective(sub: SubDictionary) -> float:
    """Trace of the inverse Gram, i.e. the sum of reciprocal eigenvalues.

    Returns +inf when the Gram is numerically singular (the support
    signatures are linearly dependent, the worst possible code choice).
    Computed from the eigenvalues of the Hermitian Gram rather than an
    explicit inverse.
    """
    eigenvalues = np.linalg.eigvalsh(_gram(sub))
    if eigenvalues[0] < SINGULARITY_RTOL * sub.support_size:
        return float("inf")
    return float(np.sum(1.0 / eigenvalues))


def ls_objective(sub: SubDictionary) -> float:
    """Squared Frobenius norm of the Gram, i.e. the sum of its squared
    eigenvalues; gradient-friendly surrogate for crb_objective."""
    gram = _gram(sub)
    return float(np.sum(np.abs(gram) ** 2))


def crb_mse_bound(sub: SubDictionary, sigma2: float) -> float:
    """Lower bound on E||x - x_hat||^2 for estimating the support
    coefficients: sigma2 * tr((Phi_L^H Phi_L)^-1) with the unnormalized
    sub-dictionary.  Accepts a normalized sub-dictionary too and undoes the
    1/sqrt(N) scaling."""
    value = crb_objective(sub)
    if sub.normalized:
        value /= sub.A.shape[0]
    return sigma2 * value
