"""Manifolds with prescribed fundamental group, built by surgery.

Pipeline for a presentation with s generators and t relators, target
dimension n:

1. ``build_X_s``: connected sum of s copies of S^1 x S^(n-2), free pi_1.
2. ``surger_relators``: one circle surgery per relator, pi_1 becomes G.
3. ``spin_construction``: cross with S^1, then surger the S^1 factor away.
4. ``kill_euler``: connected sum with S^3 x S^(n-3) so chi becomes 0.

Only chi, H_1 (through the Smith normal form of the relator matrix) and the
Betti numbers untouched by the surgeries are tracked exactly; the rest is
marked unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Optional, Union

from .descriptor import CharClassData, Evidence, LaiPairingData, ManifoldDescriptor
from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    GeneratorCountMismatchError,
    IndeterminateSemiCharacteristicError,
    OddDimensionError,
)
from .homology import (
    BettiTable,
    connected_sum,
    euler_characteristic,
    euler_of_gluing,
    kunneth_product,
    semi_characteristic,
    semi_characteristic_missing,
    sphere,
)
from .obstructions import GroupValue, kervaire_group
from .presentation import (
    TRIVIAL_GROUP,
    GroupPresentation,
    abelianization,
    direct_product,
    free_product,
    is_evidently_trivial,
)

# -- expression tree ---------------------------------------------------------


@dataclass(frozen=True)
class Sphere:
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("sphere dimension must be at least 1")

    @property
    def dim(self):
        return self.p


@dataclass(frozen=True)
class Product:
    left: "Expression"
    right: "Expression"

    @property
    def dim(self):
        return self.left.dim + self.right.dim


@dataclass(frozen=True)
class ConnectedSum:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("empty connected sum")
        dims = {x.dim for x in self.parts}
        if len(dims) != 1:
            raise DimensionMismatchError(f"connected sum of dimensions {sorted(dims)}")

    @property
    def dim(self):
        return self.parts[0].dim


@dataclass(frozen=True)
class SurgerRelators:
    base: "Expression"
    presentation: GroupPresentation

    def __post_init__(self):
        if self.base.dim < 5:
            raise DimensionTooSmallError(f"relator loops need codimension >= 3; dimension {self.base.dim} < 5")

    @property
    def dim(self):
        return self.base.dim


@dataclass(frozen=True)
class Spin:
    base: "Expression"

    @property
    def dim(self):
        return self.base.dim + 1


Expression = Union[Sphere, Product, ConnectedSum, SurgerRelators, Spin]


# -- provenance --------------------------------------------------------------


@dataclass(frozen=True)
class ProvenanceStep:
    op: str
    tag: str
    chi_before: Optional[int]
    chi_after: Optional[int]
    betti_delta: str = ""
    notes: tuple = ()

    def line(self, k: int) -> str:
        def fmt(x):
            return "?" if x is None else str(x)

        return f"STEP {k} {self.op} {self.tag} chi:{fmt(self.chi_before)}->{fmt(self.chi_after)}"


@dataclass(frozen=True)
class ProvenanceLog:
    steps: tuple = ()

    def then(self, step: ProvenanceStep) -> "ProvenanceLog":
        return ProvenanceLog(self.steps + (step,))

    def __add__(self, other: "ProvenanceLog") -> "ProvenanceLog":
        return ProvenanceLog(self.steps + other.steps)

    def lines(self) -> list:
        out = []
        for k, step in enumerate(self.steps, 1):
            out.append(step.line(k))
            if step.betti_delta:
                out.append(f"# betti: {step.betti_delta}")
            out.extend(f"# {note}" for note in step.notes)
        return out

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _delta(before: BettiTable, after: BettiTable) -> str:
    if before.dim != after.dim:
        return f"dim {before.dim}->{after.dim}; {after}"
    changes = []
    for name in ("betti_z", "betti_z2"):
        for i, (a, b) in enumerate(zip(getattr(before, name), getattr(after, name))):
            if a != b:
                changes.append(f"{name}[{i}] {'?' if a is None else a}->{'?' if b is None else b}")
    return ", ".join(changes)


# -- descriptor-level operations --------------------------------------------


def _chi_sphere(p: int) -> int:
    return euler_characteristic(sphere(p))


def _chi_product(p: int, q: int) -> int:
    return euler_characteristic(kunneth_product(sphere(p), sphere(q)))


def sphere_descriptor(p: int) -> ManifoldDescriptor:
    pi1 = GroupPresentation(("a",), ()) if p == 1 else TRIVIAL_GROUP
    t = sphere(p)
    return ManifoldDescriptor(
        t,
        pi1=pi1,
        simply_connected=p >= 2,
        torsion_free_homology=True,
        stably_parallelizable=True,
        w2_zero=True,
        bockstein_w2_zero=True,
        embeds_codim=1,
        embeds_evidence=Evidence.BY_CONSTRUCTION,
        char=CharClassData(c1_zero=p != 2, p1_zero=True),
        chi=_chi_sphere(p),
    )


def _no_h2(t: BettiTable) -> bool:
    return t.dim < 2 or t.betti_z[2] == 0


def product_descriptor(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    t = kunneth_product(a.betti, b.betti)
    pi1 = direct_product(a.pi1, b.pi1) if a.pi1 is not None and b.pi1 is not None else None
    codim = max(a.embeds_codim, b.embeds_codim) if a.embeds_codim and b.embeds_codim else None
    return ManifoldDescriptor(
        t,
        pi1=pi1,
        simply_connected=a.simply_connected and b.simply_connected,
        torsion_free_homology=a.torsion_free_homology and b.torsion_free_homology,
        stably_parallelizable=a.stably_parallelizable and b.stably_parallelizable,
        w2_zero=a.w2_zero and b.w2_zero,
        bockstein_w2_zero=a.w2_zero and b.w2_zero,
        # a product of hypersurfaces S^p x S^q sits in a tubular shell of S^p in R^(p+q+1)
        embeds_codim=codim,
        embeds_evidence=Evidence.BY_CONSTRUCTION if codim else None,
        char=CharClassData(c1_zero=_no_h2(t), p1_zero=a.char.p1_zero and b.char.p1_zero),
        chi=euler_characteristic(t),
    )


def connected_sum_descriptor(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    t = connected_sum(a.betti, b.betti)
    d = t.dim
    chi = None
    if a.euler is not None and b.euler is not None:
        chi = euler_of_gluing(a.euler, b.euler, _chi_sphere(d))
    pi1 = None
    if d >= 3 and a.pi1 is not None and b.pi1 is not None:
        pi1 = free_product(a.pi1, b.pi1)
    codim = max(a.embeds_codim, b.embeds_codim) if a.embeds_codim and b.embeds_codim else None
    return ManifoldDescriptor(
        t,
        pi1=pi1,
        simply_connected=d >= 3 and a.simply_connected and b.simply_connected,
        torsion_free_homology=a.torsion_free_homology and b.torsion_free_homology,
        stably_parallelizable=a.stably_parallelizable and b.stably_parallelizable,
        w2_zero=a.w2_zero and b.w2_zero,
        bockstein_w2_zero=a.w2_zero and b.w2_zero,
        embeds_codim=codim,
        embeds_evidence=Evidence.BY_CONSTRUCTION if codim else None,
        char=CharClassData(c1_zero=_no_h2(t), p1_zero=a.char.p1_zero and b.char.p1_zero),
        chi=chi,
    )


def _is_free_of_rank(p: Optional[GroupPresentation], s: int) -> bool:
    return p is not None and p.s == s and all(not w for w in p.relators)


def relator_surgery_descriptor(x: ManifoldDescriptor, p: GroupPresentation) -> ManifoldDescriptor:
    """Surgery on t disjoint embedded loops spelling the relators of ``p``."""
    d = x.dim
    if d < 5:
        raise DimensionTooSmallError(f"relator loops need codimension >= 3; dimension {d} < 5")
    if not _is_free_of_rank(x.pi1, p.s):
        raise GeneratorCountMismatchError(
            f"base must have free fundamental group of rank {p.s} (the generator count), got {x.pi1}"
        )
    if p.t == 0:
        return replace(x, pi1=p)
    z, z2 = list(x.betti.betti_z), list(x.betti.betti_z2)
    rank = abelianization(p).free_rank
    z[1] = z[d - 1] = rank
    z[2] = z[d - 2] = None
    for i in (1, 2, d - 2, d - 1):
        z2[i] = None
    chi = x.euler
    if chi is not None:
        # each loop: cut out S^1 x D^(d-1), glue in D^2 x S^(d-2) along S^1 x S^(d-2)
        tube = _chi_sphere(1)
        boundary = _chi_product(1, d - 2)
        for _ in range(p.t):
            cut = chi - tube + boundary
            chi = euler_of_gluing(cut, _chi_sphere(d - 2), boundary)
    return ManifoldDescriptor(
        BettiTable(d, z, z2, closed=True, orientable=x.orientable),
        pi1=p,
        simply_connected=is_evidently_trivial(p),
        torsion_free_homology=False,
        stably_parallelizable=x.stably_parallelizable,
        w2_zero=x.w2_zero,
        bockstein_w2_zero=x.bockstein_w2_zero,
        char=CharClassData(c1_zero=False, p1_zero=x.char.p1_zero),
        chi=chi,
    )


def _spin_ranks(b: tuple, d: int) -> tuple:
    # X minus an open disk has the ranks of X with the top one removed;
    # the spun (d+1)-manifold has H_i = H_i(X°) + reduced H_(i-1)(X°).
    punctured = list(b[:d]) + [0]
    out = [1]
    for i in range(1, d + 1):
        shifted = punctured[i - 1] if i - 1 >= 1 else 0
        out.append(None if punctured[i] is None or shifted is None else punctured[i] + shifted)
    out.append(1)
    return tuple(out)


def spin_descriptor(x: ManifoldDescriptor) -> ManifoldDescriptor:
    d = x.dim
    n = d + 1
    t = BettiTable(n, _spin_ranks(x.betti.betti_z, d), _spin_ranks(x.betti.betti_z2, d))
    chi = None
    if x.euler is not None:
        crossed = x.euler * _chi_sphere(1)
        boundary = _chi_product(n - 2, 1)
        # remove D^(n-1) x S^1, glue S^(n-2) x D^2 along S^(n-2) x S^1
        cut = crossed - _chi_sphere(1) + boundary
        chi = euler_of_gluing(cut, _chi_sphere(n - 2), boundary)
    return ManifoldDescriptor(
        t,
        pi1=x.pi1,
        simply_connected=x.simply_connected,
        torsion_free_homology=x.torsion_free_homology,
        stably_parallelizable=x.stably_parallelizable,
        w2_zero=x.w2_zero,
        bockstein_w2_zero=x.bockstein_w2_zero,
        char=CharClassData(c1_zero=_no_h2(t), p1_zero=x.char.p1_zero),
        chi=chi,
    )


def evaluate(expr: Expression) -> ManifoldDescriptor:
    if isinstance(expr, Sphere):
        return sphere_descriptor(expr.p)
    if isinstance(expr, Product):
        return product_descriptor(evaluate(expr.left), evaluate(expr.right))
    if isinstance(expr, ConnectedSum):
        parts = [evaluate(x) for x in expr.parts]
        out = parts[0]
        for part in parts[1:]:
            out = connected_sum_descriptor(out, part)
        return out
    if isinstance(expr, SurgerRelators):
        return relator_surgery_descriptor(evaluate(expr.base), expr.presentation)
    if isinstance(expr, Spin):
        return spin_descriptor(evaluate(expr.base))
    raise TypeError(f"not a sphere-product expression: {expr!r}")


def sphere_product(p: int, q: int) -> Product:
    return Product(Sphere(p), Sphere(q))


# -- the construction --------------------------------------------------------


def build_X_s(s: int, n: int) -> Expression:
    """Connected sum of ``s`` copies of S^1 x S^(n-2); ``s = 0`` gives S^(n-1)."""
    if s < 0:
        raise ValueError("generator count must be non-negative")
    if n - 1 < 5:
        raise DimensionTooSmallError(f"need n - 1 >= 5, got n = {n}")
    if s == 0:
        return Sphere(n - 1)
    if s == 1:
        return sphere_product(1, n - 2)
    return ConnectedSum(tuple(sphere_product(1, n - 2) for _ in range(s)))


def surger_relators(x: Expression, p: GroupPresentation) -> ManifoldDescriptor:
    return relator_surgery_descriptor(evaluate(x), p)


def spin_construction(x: ManifoldDescriptor) -> ManifoldDescriptor:
    return spin_descriptor(x)


def kill_euler(x: ManifoldDescriptor) -> ManifoldDescriptor:
    """Connected sum with S^3 x S^(n-3)."""
    n = x.dim
    if n - 3 < 2:
        raise DimensionTooSmallError(f"S^3 x S^(n-3) needs n - 3 >= 2, got n = {n}")
    return connected_sum_descriptor(x, evaluate(sphere_product(3, n - 3)))


def _sum_step(x, summand, count, op, tag, log):
    for _ in range(count):
        y = connected_sum_descriptor(x, evaluate(summand))
        log = log.then(ProvenanceStep(op, tag, x.euler, y.euler, _delta(x.betti, y.betti)))
        x = y
    return x, log


def _with_z2_overrides(x: ManifoldDescriptor, overrides: Mapping[int, int]) -> ManifoldDescriptor:
    z2 = list(x.betti.betti_z2)
    d = x.dim
    for i, b in overrides.items():
        for j in {i, d - i}:
            if z2[j] is not None and z2[j] != b:
                raise ValueError(f"override betti_z2[{j}] = {b} contradicts known value {z2[j]}")
            z2[j] = b
    return replace(x, betti=replace(x.betti, betti_z2=tuple(z2)))


def even_fixup_counts(chi: int) -> tuple:
    """Smallest ``(r1, r2)`` with ``chi + 2(r1-1) - 2(r2-1) = 0``, r1, r2 >= 1.

    Minimal means smallest r1 + r2, ties to the smallest r1.
    """
    if chi % 2:
        raise ValueError(f"odd Euler characteristic {chi} cannot be cancelled by these summands")
    half = chi // 2
    return (1 - half, 1) if half <= 0 else (1, 1 + half)


def fixup_parallelizable(x: ManifoldDescriptor, z2_overrides: Optional[Mapping[int, int]] = None):
    """Modify a stably parallelizable closed manifold by connected sums until TM is trivial.

    Even dimension: add copies of S^2 x S^(d-2) (chi +2 each) and
    S^3 x S^(d-3) (chi -2 each).  Odd dimension: one S^3 x S^(d-3) summand
    flips the semi-characteristic; two copies leave it unchanged.  Both
    candidates are evaluated and the one with vanishing semi-characteristic
    is returned.

    Returns ``(descriptor, log)``.
    """
    d = x.dim
    if not (x.closed and x.stably_parallelizable):
        raise ValueError("fix-up needs a closed stably parallelizable manifold")
    if d < 5:
        raise DimensionTooSmallError(f"fix-up needs dimension >= 5, got {d}")
    if z2_overrides:
        x = _with_z2_overrides(x, z2_overrides)
    log = ProvenanceLog()

    if d % 2 == 0:
        chi = x.euler
        if chi is None:
            raise IndeterminateSemiCharacteristicError(
                i for i, b in enumerate(x.betti.betti_z) if b is None
            )
        r1, r2 = even_fixup_counts(chi)
        if (r1, r2) == (1, 1):
            return x, log.then(ProvenanceStep("fixup", "even-fixup", chi, chi, notes=("chi = 0 already",)))
        x, log = _sum_step(x, sphere_product(2, d - 2), r1 - 1, "sum_S2xS", "even-fixup", log)
        x, log = _sum_step(x, sphere_product(3, d - 3), r2 - 1, "sum_S3xS", "even-fixup", log)
        return x, log

    chi = x.euler
    if kervaire_group(d) is GroupValue.ZERO:
        note = f"K_{d} = 0: stably parallelizable {d}-manifolds are parallelizable"
        return x, log.then(ProvenanceStep("fixup", "odd-fixup", chi, chi, notes=(note,)))
    value = semi_characteristic(x.betti)
    if value is None:
        raise IndeterminateSemiCharacteristicError(semi_characteristic_missing(x.betti))
    if value == 0:
        return x, log.then(ProvenanceStep("fixup", "odd-fixup", chi, chi, notes=("semi-characteristic already 0",)))
    summand = evaluate(sphere_product(3, d - 3))
    one = connected_sum_descriptor(x, summand)
    two = connected_sum_descriptor(one, summand)
    v1, v2 = semi_characteristic(one.betti), semi_characteristic(two.betti)
    notes = (
        f"two copies of S^3 x S^{d - 3}: semi-characteristic {v2}",
        f"one copy of S^3 x S^{d - 3}: semi-characteristic {v1}",
    )
    chosen = two if v2 == 0 else one
    tag = "two-copies" if chosen is two else "one-copy"
    step = ProvenanceStep("fixup", f"odd-fixup/{tag}", chi, chosen.euler, _delta(x.betti, chosen.betti), notes)
    return chosen, log.then(step)


def construct_M(p: GroupPresentation, dim: int):
    """Closed parallelizable ``dim``-manifold with fundamental group ``p``.

    Returns ``(descriptor, log)``.  The fundamental group is certified only
    through its abelianization.
    """
    if dim % 2:
        raise OddDimensionError(f"target dimension must be even, got {dim}")
    if dim < 6:
        raise DimensionTooSmallError(f"target dimension must be at least 6, got {dim}")
    n = dim
    start = sphere(n - 1)
    x_expr = build_X_s(p.s, n)
    x = evaluate(x_expr)
    notes = ("no generators: the sphere S^%d" % (n - 1),) if p.s == 0 else ()
    log = ProvenanceLog().then(
        ProvenanceStep("build_X_s", "connected-sum", euler_characteristic(start), x.euler, _delta(start, x.betti), notes)
    )

    xg = surger_relators(x_expr, p)
    log = log.then(
        ProvenanceStep(
            "surger_relators",
            "relator-surgery",
            x.euler,
            xg.euler,
            _delta(x.betti, xg.betti),
            (
                f"{p.t} relator loop{'' if p.t == 1 else 's'} in general position; tracked invariants do not depend on the choice",
                f"H_1 = {abelianization(p)} from the Smith normal form of the relator matrix",
            ),
        )
    )

    xs = spin_construction(xg)
    log = log.then(ProvenanceStep("spin_construction", "circle-spin", xg.euler, xs.euler, _delta(xg.betti, xs.betti)))

    m = kill_euler(xs)
    log = log.then(
        ProvenanceStep(
            "kill_euler",
            "euler-cancel",
            xs.euler,
            m.euler,
            _delta(xs.betti, m.betti),
            ("pi_1 certified up to abelianization only",),
        )
    )

    # M is stably parallelizable with chi = 0, so TM is trivial; a framing gives
    # a complex structure with total Chern class 1, and the codimension-2
    # embedding has trivial normal bundle, so every Lai pairing vanishes.
    m = replace(
        m,
        pi1=p,
        simply_connected=is_evidently_trivial(p),
        torsion_free_homology=p.t == 0,
        w2_zero=True,
        bockstein_w2_zero=True,
        embeds_codim=2,
        embeds_evidence=Evidence.BY_CONSTRUCTION,
        char=CharClassData(c1_zero=True, p1_zero=True, c_top_pairing=m.euler),
        lai=LaiPairingData(n // 2, (0,) * (n // 2 + 1)),
    )
    return m, log
