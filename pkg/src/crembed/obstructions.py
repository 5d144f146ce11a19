"""Closed-form obstruction groups.

``kervaire_group(n)`` is the kernel of stabilization pi_{n-1}SO(n) -> pi_{n-1}SO,
the coefficient group of the obstruction to trivializing the tangent bundle of
a stably parallelizable n-manifold.  ``gamma_homotopy(k, n)`` gives the
homotopy groups of SO(2n)/U(n) in the stable range via Bott periodicity.
"""

from __future__ import annotations

from enum import Enum


class GroupValue(str, Enum):
    ZERO = "0"
    Z = "Z"
    Z2 = "Z/2"
    OUT_OF_STABLE_RANGE = "unstable"


def kervaire_group(n: int) -> GroupValue:
    if n < 1:
        raise ValueError(f"K_n is defined for n >= 1, got {n}")
    if n in (1, 3, 7):
        return GroupValue.ZERO
    return GroupValue.Z2 if n % 2 else GroupValue.Z


_BOTT = {
    0: GroupValue.Z2,
    1: GroupValue.ZERO,
    2: GroupValue.Z,
    3: GroupValue.ZERO,
    4: GroupValue.ZERO,
    5: GroupValue.ZERO,
    6: GroupValue.Z,
    7: GroupValue.Z2,
}


def gamma_homotopy(k: int, n: int) -> GroupValue:
    """pi_k(SO(2n)/U(n)) = pi_{k+1}(SO(2n)) for k <= 2n - 2."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    if k > 2 * n - 2:
        return GroupValue.OUT_OF_STABLE_RANGE
    return _BOTT[k % 8]
