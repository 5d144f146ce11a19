"""Lai indices, Wall's embedding criterion, almost-complex existence in dimension 6."""

from __future__ import annotations

from . import criteria
from .certificate import Decision, Verdict, evaluate
from .descriptor import LaiPairingData, ManifoldDescriptor
from .errors import HypothesisFailureError, WrongDimensionError


def lai_indices(chi: int, d: LaiPairingData) -> tuple:
    """Return ``(I_plus, I_minus)``.

    Raises ParityError when either numerator is odd; genuine geometric data
    always gives even numerators.
    """
    return criteria.lai(chi, d.pairings)


def cr_precondition(chi: int, d: LaiPairingData) -> bool:
    """True iff both Lai indices vanish, the hypothesis for cancelling complex points."""
    return lai_indices(chi, d) == (0, 0)


def _require_dim6(m: ManifoldDescriptor):
    if m.dim != 6:
        raise WrongDimensionError(f"criterion applies to 6-manifolds, got dimension {m.dim}")


def _wall_hypotheses_missing(m: ManifoldDescriptor) -> list:
    flags = {
        "simply_connected": m.simply_connected,
        "torsion_free_homology": m.torsion_free_homology,
        "w2_zero": m.w2_zero,
    }
    return [name for name, ok in flags.items() if not ok]


def wall_embeds_in_R8(m: ManifoldDescriptor) -> Decision:
    _require_dim6(m)
    step = evaluate(
        "wall-embedding",
        simply_connected=m.simply_connected,
        torsion_free_homology=m.torsion_free_homology,
        w2_zero=m.w2_zero,
        p1_zero=m.char.p1_zero,
    )
    if step.outcome == "inapplicable":
        return Decision(Verdict.INDETERMINATE, (step,), tuple(_wall_hypotheses_missing(m)))
    step = evaluate("wall-embedding", decisive=True, **step.inputs)
    return Decision(Verdict.YES if step.outcome == "embeds" else Verdict.NO, (step,))


def admits_ac_structure_6d(m: ManifoldDescriptor) -> Decision:
    _require_dim6(m)
    if not m.orientable:
        raise HypothesisFailureError("almost-complex criterion needs an orientable 6-manifold")
    if not m.torsion_free_homology:
        raise HypothesisFailureError("almost-complex criterion needs torsion-free homology")
    step = evaluate("bockstein-w2", decisive=True, w2_zero=m.w2_zero, bockstein_w2_zero=m.bockstein_w2_zero)
    return Decision(Verdict.YES if step.outcome else Verdict.NO, (step,))
