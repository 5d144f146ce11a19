"""Betti-number bookkeeping for closed manifolds.

Ranks are stored per degree over Z (torsion-free part) and over Z/2.  An
entry of ``None`` marks a rank the available data does not determine; every
operation propagates it instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatchError, DimensionTooSmallError, EvenDimensionError, UnknownEntriesError

Rank = Optional[int]


def _as_ranks(values: Sequence[Rank], name: str) -> tuple:
    out = []
    for v in values:
        if v is None:
            out.append(None)
        elif isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"{name}: Betti numbers must be non-negative integers or None, got {v!r}")
        else:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class BettiTable:
    dim: int
    betti_z: tuple
    betti_z2: tuple
    closed: bool = True
    orientable: bool = True

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 0:
            raise ValueError(f"dimension must be a non-negative integer, got {self.dim!r}")
        object.__setattr__(self, "betti_z", _as_ranks(self.betti_z, "betti_z"))
        object.__setattr__(self, "betti_z2", _as_ranks(self.betti_z2, "betti_z2"))
        for name in ("betti_z", "betti_z2"):
            if len(getattr(self, name)) != self.dim + 1:
                raise ValueError(f"{name} must have dim+1 = {self.dim + 1} entries")

    @classmethod
    def free(cls, betti: Sequence[Rank], closed: bool = True, orientable: bool = True) -> "BettiTable":
        """Table of a space with torsion-free homology: both coefficient systems agree."""
        return cls(len(betti) - 1, tuple(betti), tuple(betti), closed, orientable)

    @property
    def known(self) -> bool:
        return None not in self.betti_z and None not in self.betti_z2

    def __str__(self):
        def fmt(seq):
            return "[" + ",".join("?" if b is None else str(b) for b in seq) + "]"

        return f"dim {self.dim}: Z {fmt(self.betti_z)} Z/2 {fmt(self.betti_z2)}"


def sphere(p: int) -> BettiTable:
    if p < 1:
        raise ValueError("sphere dimension must be at least 1")
    return BettiTable.free([1] + [0] * (p - 1) + [1])


def _alternating(seq) -> Rank:
    if None in seq:
        return None
    return sum(b if i % 2 == 0 else -b for i, b in enumerate(seq))


def euler_characteristic(t) -> Rank:
    """Alternating sum of Betti numbers, or ``None`` when it is not determined.

    Accepts a :class:`BettiTable` or anything with an ``euler`` attribute
    (a manifold descriptor, whose construction bookkeeping may know chi even
    when the table does not).
    """
    if not isinstance(t, BettiTable):
        return t.euler
    chi = _alternating(t.betti_z)
    if chi is None:
        # chi does not depend on the coefficient field
        chi = _alternating(t.betti_z2)
    if chi is None and t.closed and t.dim % 2 == 1:
        return 0
    return chi


def semi_characteristic_missing(t: BettiTable) -> tuple:
    """Degrees at or below the middle whose mod-2 rank is unknown."""
    k = (t.dim - 1) // 2
    return tuple(i for i in range(k + 1) if t.betti_z2[i] is None)


def semi_characteristic(t: BettiTable) -> Rank:
    """Kervaire semi-characteristic: sum of mod-2 Betti numbers up to the middle, mod 2."""
    if t.dim % 2 == 0:
        raise EvenDimensionError(f"semi-characteristic needs odd dimension, got {t.dim}")
    if not t.closed:
        raise ValueError("semi-characteristic is defined for closed manifolds")
    k = (t.dim - 1) // 2
    lower = t.betti_z2[: k + 1]
    if None in lower:
        return None
    return sum(lower) % 2


def _convolve(a, b) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if out[i + j] is None:
                continue
            if x is None or y is None:
                out[i + j] = None
            else:
                out[i + j] += x * y
    return tuple(out)


def kunneth_product(a: BettiTable, b: BettiTable) -> BettiTable:
    if not (a.closed and b.closed):
        raise ValueError("Kunneth product is only tracked for closed factors")
    if not (a.known and b.known):
        raise UnknownEntriesError("Kunneth product needs fully known Betti tables")
    return BettiTable(
        a.dim + b.dim,
        _convolve(a.betti_z, b.betti_z),
        _convolve(a.betti_z2, b.betti_z2),
        closed=True,
        orientable=a.orientable and b.orientable,
    )


def _sum_interior(a, b, d) -> tuple:
    out = [1]
    for i in range(1, d):
        out.append(None if a[i] is None or b[i] is None else a[i] + b[i])
    out.append(1)
    return tuple(out)


def connected_sum(a: BettiTable, b: BettiTable) -> BettiTable:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"connected sum of dimensions {a.dim} and {b.dim}")
    d = a.dim
    if d < 2:
        raise DimensionTooSmallError("connected sum needs dimension at least 2")
    for t in (a, b):
        if not (t.closed and t.orientable):
            raise ValueError("connected sum is tracked for closed orientable summands only")
    return BettiTable(d, _sum_interior(a.betti_z, b.betti_z, d), _sum_interior(a.betti_z2, b.betti_z2, d))


def euler_of_gluing(chi_a: int, chi_b: int, chi_boundary: int) -> int:
    """chi of A and B glued along a common boundary (inclusion-exclusion)."""
    return chi_a + chi_b - chi_boundary
