"""Vectorized section evaluation over batches of coefficient vectors.

The Monte Carlo estimators need the unique decomposable polynomial matching
millions of sampled coordinate vectors; doing that one Polynomial at a time
is hopeless in Python.  This module reimplements the section over numpy
float64/complex128 batches: the d-th root of the reversed series comes from
the triangular product-series recurrence (the vectorizable equivalent of the
Newton iteration used on exact scalars), the left component from the same
residual scheme as the scalar path.  Agreement with the exact section is
pinned by tests.

Column convention: a coefficient matrix of shape (N, n-1) holds, per row, the
coefficients of x^1 ... x^(n-1) ascending (column j is the coefficient of
x^(j+1); leading 1 and constant 0 are implicit).
"""

from __future__ import annotations

import numpy as np

from .decompose import nt_set


def series_root_batch(u: np.ndarray, d: int) -> np.ndarray:
    """Row-wise q = u**(1/d) mod x^e for u of shape (N, e) with u[:, 0] = 1.

    Triangular recurrence for powers of a power series: with alpha = 1/d,
    t*q_t = sum_{k=1..t} ((alpha+1)*k - t) * u_k * q_{t-k}.
    """
    n_rows, e = u.shape
    alpha = 1.0 / d
    q = np.zeros_like(u)
    q[:, 0] = 1
    for t in range(1, e):
        acc = np.zeros(n_rows, dtype=u.dtype)
        for k in range(1, t + 1):
            c = (alpha + 1.0) * k - t
            if c != 0.0:
                acc += c * u[:, k] * q[:, t - k]
        q[:, t] = acc / t
    return q


def _poly_mul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise full polynomial product of ascending coefficient matrices."""
    n_rows, la = a.shape
    lb = b.shape[1]
    out = np.zeros((n_rows, la + lb - 1), dtype=np.result_type(a, b))
    for j in range(lb):
        col = b[:, j]
        out[:, j : j + la] += a * col[:, None]
    return out


def section_batch(nt_coords: np.ndarray, n: int, d: int) -> np.ndarray:
    """Full coefficient matrix (N, n-1) of the section at each row of inputs.

    ``nt_coords`` has one column per index of nt_set(n, d).nt in ascending
    index order, i.e. [f_e, f_2e, ..., f_{(d-1)e}, f_{n-e+1}, ..., f_{n-1}].
    """
    ns = nt_set(n, d)
    e = ns.e
    nt_coords = np.asarray(nt_coords)
    n_rows = nt_coords.shape[0]
    if nt_coords.shape[1] != len(ns.nt):
        raise ValueError(f"expected {len(ns.nt)} coordinate columns")
    dtype = np.result_type(nt_coords, np.float64)

    # reversed top coefficients [1, f_{n-1}, ..., f_{n-e+1}]
    u = np.empty((n_rows, e), dtype=dtype)
    u[:, 0] = 1
    for j in range(1, e):
        u[:, j] = nt_coords[:, ns.nt.index(n - j)]
    q = series_root_batch(u, d)

    # right component h ascending, shape (N, e+1)
    h = np.zeros((n_rows, e + 1), dtype=dtype)
    h[:, e] = 1
    for j in range(1, e):
        h[:, j] = q[:, e - j]

    powers = {1: h}
    for j in range(2, d + 1):
        powers[j] = _poly_mul_batch(powers[j - 1], h)

    g = np.zeros((n_rows, d + 1), dtype=dtype)
    g[:, d] = 1
    for i in range(d - 1, 0, -1):
        acc = nt_coords[:, ns.nt.index(e * i)].astype(dtype, copy=True)
        for j in range(i + 1, d + 1):
            acc -= g[:, j] * powers[j][:, e * i]
        g[:, i] = acc

    f = np.zeros((n_rows, n + 1), dtype=dtype)
    for j in range(1, d + 1):
        length = e * j + 1
        f[:, :length] += g[:, j : j + 1] * powers[j]
    return f[:, 1:n]


def complement_batch(nt_coords: np.ndarray, n: int, d: int) -> np.ndarray:
    """Only the complement-index coefficients of the section, (N, codim)."""
    ns = nt_set(n, d)
    full = section_batch(nt_coords, n, d)
    cols = [i - 1 for i in ns.complement]
    return full[:, cols]
