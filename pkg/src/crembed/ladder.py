"""The two-stage obstruction ladder for almost-complex structures on R^8 around a 6-manifold."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .certificate import Verdict, evaluate
from .charclasses import wall_embeds_in_R8
from .errors import WrongDimensionError
from .obstructions import GroupValue, gamma_homotopy


class ObstructionStatus(str, Enum):
    VANISHES = "Vanishes"
    NONZERO_OR_UNKNOWN = "NonzeroOrUnknown"


@dataclass(frozen=True)
class ObstructionReport6D:
    omega2: ObstructionStatus
    omega2_reason: str
    omega6: ObstructionStatus
    omega6_reason: str
    skeleta: tuple = ()
    steps: tuple = ()

    @property
    def both_vanish(self) -> bool:
        return self.omega2 is ObstructionStatus.VANISHES and self.omega6 is ObstructionStatus.VANISHES

    def lines(self) -> list:
        return [
            f"Omega_2: {self.omega2.value} ({self.omega2_reason})",
            *(f"  {note}" for note in self.skeleta),
            f"Omega_6: {self.omega6.value} ({self.omega6_reason})",
        ]


def top_number(m):
    """chi(M), falling back to the recorded top Chern number (they agree for almost-complex M)."""
    chi = m.euler
    return m.char.c_top_pairing if chi is None else chi


def codim2_embedding_known(m) -> tuple:
    """``(embedded, steps)``: codimension <= 2 embedding from the record or, in dimension 6, from Wall."""
    if m.embeds_codim is not None and m.embeds_codim <= 2:
        return True, (evaluate("codim-2-embedding", embeds_codim=m.embeds_codim, evidence=m.embeds_evidence.value),)
    if m.dim == 6:
        wall = wall_embeds_in_R8(m)
        if wall.verdict is Verdict.YES:
            step = evaluate("codim-2-embedding", embeds_codim=2, evidence="ByWall")
            return True, wall.certificate + (step,)
        return False, wall.certificate
    return False, ()


def obstruction_ladder_6d(m) -> ObstructionReport6D:
    """Obstructions to null-homotoping the classifying map of TM + normal bundle into SO(8)/U(4).

    The map only exists once M sits in R^8; without an embedding both
    obstructions are reported as NonzeroOrUnknown.
    """
    if m.dim != 6:
        raise WrongDimensionError(f"obstruction ladder is for 6-manifolds, got dimension {m.dim}")
    embedded, _ = codim2_embedding_known(m)
    skeleta = []
    for k in range(1, 7):
        g = gamma_homotopy(k, 4)
        if g is GroupValue.ZERO:
            skeleta.append(f"{k}-skeleton: pi_{k} = 0, extension unobstructed")
        else:
            skeleta.append(f"{k}-skeleton: pi_{k} = {g.value}, obstruction in H^{k}(M; {g.value})")

    s2 = evaluate("obstruction-omega2", embedded=embedded, c1_zero=m.char.c1_zero,
                  torsion_free_homology=m.torsion_free_homology)
    s6 = evaluate("obstruction-omega6", embedded=embedded, chi=top_number(m))
    if not embedded:
        r2 = r6 = "no embedding into R^8 is known, so the classifying map is undefined"
    else:
        if s2.outcome == "Vanishes":
            r2 = "c1_zero and torsion_free_homology: 2 Omega_2 = c1 = 0 in a torsion-free group"
        elif not m.char.c1_zero:
            r2 = "c1_zero not established"
        else:
            r2 = "torsion_free_homology not established, 2 Omega_2 = 0 does not force Omega_2 = 0"
        chi = top_number(m)
        r6 = "chi unknown" if chi is None else f"chi = {chi}"
    return ObstructionReport6D(
        ObstructionStatus(s2.outcome), r2, ObstructionStatus(s6.outcome), r6, tuple(skeleta), (s2, s6)
    )
