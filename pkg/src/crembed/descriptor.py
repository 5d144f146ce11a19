"""Formal records of closed manifolds and their consistency checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .homology import BettiTable, euler_characteristic
from .presentation import GroupPresentation, abelianization


class Evidence(str, Enum):
    ASSERTED = "Asserted"
    BY_CONSTRUCTION = "ByConstruction"
    BY_WALL = "ByWall"


@dataclass(frozen=True)
class CharClassData:
    """Characteristic-class data as vanishing flags plus pairings against [M]."""

    c1_zero: bool = False
    p1_zero: bool = False
    c_top_pairing: Optional[int] = None
    p1_pairings: Optional[tuple] = None

    def __post_init__(self):
        if self.p1_pairings is not None:
            object.__setattr__(self, "p1_pairings", tuple(int(x) for x in self.p1_pairings))


@dataclass(frozen=True)
class LaiPairingData:
    """Entry k is <e(nu)^k . c_{n-k}(TX|M), [M]> for k = 0..n."""

    n: int
    pairings: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(int(x) for x in self.pairings))
        if self.n < 1:
            raise ValueError("lai.n must be positive")
        if len(self.pairings) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} Lai pairings, got {len(self.pairings)}")


@dataclass(frozen=True)
class ManifoldDescriptor:
    betti: BettiTable
    pi1: Optional[GroupPresentation] = None
    simply_connected: bool = False
    torsion_free_homology: bool = False
    stably_parallelizable: bool = False
    w2_zero: bool = False
    bockstein_w2_zero: bool = False
    embeds_codim: Optional[int] = None
    embeds_evidence: Optional[Evidence] = None
    char: CharClassData = field(default_factory=CharClassData)
    lai: Optional[LaiPairingData] = None
    # chi known from construction bookkeeping when the table cannot supply it
    chi: Optional[int] = None

    def __post_init__(self):
        if (self.embeds_codim is None) != (self.embeds_evidence is None):
            raise ValueError("embeds_codim and embeds_evidence must be given together")
        if self.embeds_evidence is not None:
            object.__setattr__(self, "embeds_evidence", Evidence(self.embeds_evidence))

    @property
    def dim(self) -> int:
        return self.betti.dim

    @property
    def closed(self) -> bool:
        return self.betti.closed

    @property
    def orientable(self) -> bool:
        return self.betti.orientable

    @property
    def euler(self) -> Optional[int]:
        chi = euler_characteristic(self.betti)
        return self.chi if chi is None else chi


def _table_violations(t: BettiTable) -> list:
    out = []
    d = t.dim
    for name, seq in (("betti_z", t.betti_z), ("betti_z2", t.betti_z2)):
        if t.closed:
            for i in (0, d):
                if i == d and name == "betti_z" and not t.orientable:
                    continue
                if seq[i] is not None and seq[i] != 1:
                    out.append(f"{name}[{i}] = {seq[i]} but a closed connected manifold has 1")
    if t.closed:
        for i in range(d // 2 + 1):
            a, b = t.betti_z2[i], t.betti_z2[d - i]
            if a is not None and b is not None and a != b:
                out.append(f"Poincare duality over Z/2 fails: betti_z2[{i}] = {a}, betti_z2[{d - i}] = {b}")
            a, b = t.betti_z[i], t.betti_z[d - i]
            if t.orientable and a is not None and b is not None and a != b:
                out.append(f"Poincare duality over Q fails: betti_z[{i}] = {a}, betti_z[{d - i}] = {b}")
    for i, (z, z2) in enumerate(zip(t.betti_z, t.betti_z2)):
        if z is not None and z2 is not None and z > z2:
            out.append(f"betti_z[{i}] = {z} exceeds betti_z2[{i}] = {z2}")
    chi_z = None if None in t.betti_z else sum((-1) ** i * b for i, b in enumerate(t.betti_z))
    chi_2 = None if None in t.betti_z2 else sum((-1) ** i * b for i, b in enumerate(t.betti_z2))
    if chi_z is not None and chi_2 is not None and chi_z != chi_2:
        out.append(f"Euler characteristic over Z ({chi_z}) differs from the one over Z/2 ({chi_2})")
    if t.closed and d % 2 == 1:
        for chi in (chi_z, chi_2):
            if chi not in (None, 0):
                out.append(f"closed odd-dimensional manifold with Euler characteristic {chi}")
                break
    return out


def validate(d) -> list:
    """List every violated consistency condition; an empty list means consistent."""
    if isinstance(d, BettiTable):
        return _table_violations(d)
    out = _table_violations(d.betti)
    t = d.betti
    chi_table = euler_characteristic(t)
    if d.chi is not None and chi_table is not None and d.chi != chi_table:
        out.append(f"recorded chi = {d.chi} disagrees with the Betti table ({chi_table})")
    chi = d.euler
    if t.closed and t.orientable and t.dim % 4 == 2 and chi is not None and chi % 2:
        out.append(f"closed orientable {t.dim}-manifold with odd Euler characteristic {chi}")
    if d.torsion_free_homology:
        for i, (z, z2) in enumerate(zip(t.betti_z, t.betti_z2)):
            if z is not None and z2 is not None and z != z2:
                out.append(f"torsion-free homology but betti_z[{i}] = {z} != betti_z2[{i}] = {z2}")
    if d.pi1 is not None:
        ab = abelianization(d.pi1)
        if t.dim >= 1 and t.betti_z[1] is not None and t.betti_z[1] != ab.free_rank:
            out.append(f"betti_z[1] = {t.betti_z[1]} but pi1 abelianizes to rank {ab.free_rank}")
        if d.simply_connected and not ab.trivial:
            out.append(f"simply connected but pi1 abelianizes to {ab}")
    if d.simply_connected and t.dim >= 1:
        for name, seq in (("betti_z", t.betti_z), ("betti_z2", t.betti_z2)):
            if seq[1] not in (None, 0) and t.dim > 1:
                out.append(f"simply connected but {name}[1] = {seq[1]}")
    if d.w2_zero and not d.bockstein_w2_zero:
        out.append("w2_zero holds but bockstein_w2_zero does not")
    c = d.char
    if c.p1_zero and c.p1_pairings and any(c.p1_pairings):
        out.append("p1_zero holds but some p1 pairing is nonzero")
    if t.dim % 2 == 0 and c.c_top_pairing is not None and chi is not None and c.c_top_pairing != chi:
        out.append(f"top Chern number {c.c_top_pairing} differs from chi = {chi}")
    if d.embeds_codim is not None:
        if t.closed and d.embeds_codim < 1:
            out.append("a closed manifold cannot embed in codimension 0")
        elif t.orientable and d.embeds_codim <= 2 and not d.stably_parallelizable:
            out.append(
                f"embeds in codimension {d.embeds_codim} (trivial normal bundle) but is not marked stably parallelizable"
            )
    if d.lai is not None and (t.dim % 2 or d.lai.n != t.dim // 2):
        out.append(f"lai.n = {d.lai.n} does not match half the dimension {t.dim}")
    return out
