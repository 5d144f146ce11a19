"""Independent reference computations used to freeze expected values.

None of these call into the package's own algorithms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def _signed_permutations(n):
    out = []
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm, sign in _signed_permutations(n):
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
            if not term:
                break
        total += term
    return total


def gauss_det(rows):
    """Determinant by rational Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return int(det)


def euclid_det(rows):
    """Determinant by integer row reduction with Euclid's algorithm down each column."""
    a = [list(r) for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        while True:
            live = [i for i in range(k, n) if a[i][k]]
            if not live:
                return 0
            piv = min(live, key=lambda i: abs(a[i][k]))
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                det = -det
            if len(live) == 1 and live[0] in (k, piv):
                break
            for i in range(k + 1, n):
                q = a[i][k] // a[k][k]
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        det *= a[k][k]
    return det


def minor_gcd_invariants(rows, ncols):
    """Invariant factors from determinantal divisors: d_1...d_i = gcd of all i x i minors."""
    nrows = len(rows)
    divisors = [1]
    for i in range(1, min(nrows, ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(nrows), i):
            for cs in itertools.combinations(range(ncols), i):
                g = gcd(g, leibniz_det([[rows[r][c] for c in cs] for r in rs]))
                if g == 1:  # gcd can fall no further
                    break
            if g == 1:
                break
        divisors.append(g)
    out = []
    for i in range(1, len(divisors)):
        out.append(0 if divisors[i] == 0 else divisors[i] // divisors[i - 1])
    return tuple(out)


def poincare_product(a, b):
    """Coefficients of the product of two Poincare polynomials."""
    out = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out.get(i + j, 0) + x * y
    return [out[k] for k in range(len(a) + len(b) - 1)]


def alternating_sum(seq):
    return sum(x * (-1) ** i for i, x in enumerate(seq))


def handle_count_chi(s, t, d):
    """chi of the d-manifold obtained from s copies of S^1 x S^(d-1) by t loop surgeries.

    Handle decomposition: one 0-handle, s 1-handles, t 2-handles, their
    duals in degrees d-2 and d-1, one d-handle.
    """
    cells = {0: 1, 1: s, d - 1: s, d: 1}
    cells[2] = cells.get(2, 0) + t
    cells[d - 2] = cells.get(d - 2, 0) + t
    return sum(c * (-1) ** k for k, c in cells.items())


def mayer_vietoris_connected_sum(a, b):
    """Betti numbers of A # B: interior degrees add, ends stay 1."""
    d = len(a) - 1
    return [1] + [a[i] + b[i] for i in range(1, d)] + [1]


def _det_batch(m):
    """Determinants of a stack of k x k int64 matrices, k <= 3, by cofactor expansion."""
    k = m.shape[-1]
    if k == 1:
        return m[..., 0, 0]
    if k == 2:
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    return (
        m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
        - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
        + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0])
    )


def minor_gcd_invariants_batch(stack):
    """Vectorized ``minor_gcd_invariants`` for an (N, r, c) int64 array with r, c <= 3."""
    import numpy as np

    n, r, c = stack.shape
    prev = np.ones(n, dtype=np.int64)
    out = []
    for i in range(1, min(r, c) + 1):
        g = np.zeros(n, dtype=np.int64)
        for rs in itertools.combinations(range(r), i):
            for cs in itertools.combinations(range(c), i):
                g = np.gcd(g, _det_batch(stack[:, list(rs)][:, :, list(cs)]))
        safe = np.where(prev == 0, 1, prev)
        out.append(np.where(g == 0, 0, g // safe))
        prev = g
    return np.stack(out, axis=1) if out else np.zeros((n, 0), dtype=np.int64)
