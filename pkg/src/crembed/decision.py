"""Certified verdicts on parallelizability and codimension-two embeddings.

All three embedding questions share one chain: Kervaire's criteria decide
whether TM is trivial, and a known embedding into R^(2n+2) supplies the
other half of each biconditional.  Missing data yields INDETERMINATE with a
machine-readable list of what would settle it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Decision, Verdict, decided, evaluate
from .charclasses import wall_embeds_in_R8
from .descriptor import ManifoldDescriptor, validate
from .errors import OddDimensionError, ValidationFailureError, WrongDimensionError
from .ladder import codim2_embedding_known, obstruction_ladder_6d, top_number


def _checked(m: ManifoldDescriptor):
    problems = validate(m)
    if problems:
        raise ValidationFailureError(problems)
    if not m.closed:
        raise ValueError("decisions are defined for closed manifolds only")


def decide_parallelizable(m: ManifoldDescriptor) -> Decision:
    _checked(m)
    if m.dim < 1:
        raise WrongDimensionError("parallelizability is decided for dimension >= 1")
    stable = evaluate("stable-parallelizability", stably_parallelizable=m.stably_parallelizable)
    if not stable.outcome:
        return Decision(Verdict.NO, (evaluate("stable-parallelizability", True, **stable.inputs),))
    group = evaluate("kervaire-group", dim=m.dim)
    if group.outcome == "0":
        return Decision(Verdict.YES, (stable, evaluate("kervaire-group", True, dim=m.dim)))
    if group.outcome == "Z/2":
        k = (m.dim - 1) // 2
        lower = m.betti.betti_z2[: k + 1]
        step = evaluate("kervaire-semi-characteristic", betti_z2_lower=lower)
        if step.outcome is None:
            missing = tuple(f"betti_z2[{i}]" for i, b in enumerate(lower) if b is None)
            return Decision(Verdict.INDETERMINATE, (stable, group, step), missing)
    else:
        step = evaluate("kervaire-euler", chi=m.euler)
        if step.outcome is None:
            return Decision(Verdict.INDETERMINATE, (stable, group, step), ("euler characteristic",))
    final = evaluate(step.criterion, True, **step.inputs)
    return Decision(Verdict.YES if final.outcome else Verdict.NO, (stable, group, final))


def _embedding_chain(m: ManifoldDescriptor, forward: str):
    """Shared skeleton of the pseudo-holomorphic and CR decisions.

    Returns either a finished Decision or ``(parallel_steps, embed_steps)``
    when M is parallelizable and embeds in codimension <= 2.
    """
    if m.dim % 2:
        raise OddDimensionError(f"embedding criteria need even dimension, got {m.dim}")
    par = decide_parallelizable(m)
    steps = par.certificate
    if par.verdict is Verdict.NO:
        return decided(Verdict.NO, steps, evaluate(forward, True, parallelizable="NO"))
    if par.verdict is Verdict.INDETERMINATE:
        return Decision(Verdict.INDETERMINATE, steps, par.missing)
    embedded, embed_steps = codim2_embedding_known(m)
    if not embedded:
        return Decision(Verdict.INDETERMINATE, steps + embed_steps, ("codim-2 embedding",))
    return steps, embed_steps


def decide_ph_embedding(m: ManifoldDescriptor) -> Decision:
    """Pseudo-holomorphic embedding into some almost-complex R^(2n+2)."""
    out = _embedding_chain(m, "pseudo-holomorphic-forward")
    if isinstance(out, Decision):
        return out
    steps, embed_steps = out
    final = evaluate("pseudo-holomorphic-backward", True, parallelizable="YES", embedded=True)
    return decided(Verdict.YES, steps + embed_steps, final)


def decide_cr_embedding(m: ManifoldDescriptor) -> Decision:
    """CR regular embedding into C^(n+1)."""
    out = _embedding_chain(m, "cr-forward")
    if isinstance(out, Decision):
        return out
    steps, embed_steps = out
    pairings = evaluate("trivial-bundle-pairings", n=m.dim // 2)
    lai = evaluate("lai-indices", chi=m.euler, pairings=pairings.outcome)
    i_plus, i_minus = lai.outcome
    final = evaluate("slapar-cancellation", True, i_plus=i_plus, i_minus=i_minus)
    verdict = Verdict.YES if final.outcome else Verdict.NO
    return decided(verdict, steps + embed_steps + (pairings, lai), final)


def decide_ph_6d(m: ManifoldDescriptor) -> Decision:
    """Pseudo-holomorphic embedding of an almost-complex 6-manifold into almost-complex R^8."""
    if m.dim != 6:
        raise WrongDimensionError(f"six-dimensional criterion, got dimension {m.dim}")
    _checked(m)
    hyp = evaluate(
        "six-dim-hypotheses",
        simply_connected=m.simply_connected,
        torsion_free_homology=m.torsion_free_homology,
        w2_zero=m.w2_zero,
        c1_zero=m.char.c1_zero,
    )
    if not hyp.outcome:
        missing = tuple(k for k, v in hyp.inputs.items() if not v)
        return Decision(Verdict.INDETERMINATE, (hyp,), missing)
    wall = wall_embeds_in_R8(m)
    ladder = obstruction_ladder_6d(m)
    c3 = evaluate("top-chern-number", c_top=top_number(m))
    p1 = evaluate("first-pontryagin", p1_zero=m.char.p1_zero)
    steps = (hyp,) + wall.certificate + ladder.steps + (c3, p1)
    if c3.outcome is None:
        return Decision(Verdict.INDETERMINATE, steps, ("c_top_pairing or euler characteristic",))
    final = evaluate("six-dim-criterion", True, c3_zero=c3.outcome, p1_zero=p1.outcome)
    return decided(Verdict.YES if final.outcome else Verdict.NO, steps, final)


@dataclass(frozen=True)
class EquivalenceReport:
    ph: Decision
    cr: Decision

    @property
    def consistent(self) -> bool:
        return self.ph.verdict is self.cr.verdict


def check_equivalence(m: ManifoldDescriptor) -> EquivalenceReport:
    return EquivalenceReport(decide_ph_embedding(m), decide_cr_embedding(m))
