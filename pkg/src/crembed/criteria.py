"""The registered criteria that certificates cite.

Each criterion is a pure function of primitive values (ints, bools,
strings, tuples) so recorded certificate steps can be replayed verbatim.
"""

from __future__ import annotations

from .certificate import criterion
from .errors import ParityError
from .obstructions import kervaire_group


@criterion("stable-parallelizability", "hypothesis: TM plus a trivial line bundle is trivial")
def stably_parallelizable(stably_parallelizable):
    return bool(stably_parallelizable)


@criterion("kervaire-group", "Kervaire: K_n = 0 exactly for n = 1, 3, 7; Z/2 for other odd n; Z for even n")
def kervaire(dim):
    return kervaire_group(dim).value


@criterion("kervaire-semi-characteristic", "Kervaire: odd n != 1,3,7, TM trivial iff semi-characteristic = 0")
def semi_characteristic_vanishes(betti_z2_lower):
    if None in betti_z2_lower:
        return None
    return sum(betti_z2_lower) % 2 == 0


@criterion("kervaire-euler", "Kervaire: even n, TM trivial iff chi = 0")
def euler_vanishes(chi):
    return None if chi is None else chi == 0


@criterion("codim-2-embedding", "smooth embedding of the 2n-manifold into R^(2n+2)")
def codim2_embedding(embeds_codim, evidence):
    return embeds_codim is not None and embeds_codim <= 2


@criterion("wall-embedding", "Wall: simply connected, torsion-free, w2 = 0 6-manifold embeds in R^8 iff p1 = 0")
def wall(simply_connected, torsion_free_homology, w2_zero, p1_zero):
    if not (simply_connected and torsion_free_homology and w2_zero):
        return "inapplicable"
    return "embeds" if p1_zero else "does not embed"


@criterion("bockstein-w2", "orientable torsion-free 6-manifold is almost-complex iff Bockstein(w2) = 0")
def bockstein(w2_zero, bockstein_w2_zero):
    return bool(w2_zero or bockstein_w2_zero)


def lai_numerators(chi, pairings):
    plus = chi + sum(pairings)
    minus = chi + sum(p if k % 2 else -p for k, p in enumerate(pairings))
    return plus, minus


@criterion("lai-indices", "Lai: 2 I+- = chi + <sum_k (+-1)^(k+1) e(nu)^k c_(n-k)(TX|M), [M]>")
def lai(chi, pairings):
    plus, minus = lai_numerators(chi, pairings)
    if plus % 2 or minus % 2:
        raise ParityError(f"Lai numerators {plus}, {minus} must both be even")
    return (plus // 2, minus // 2)


@criterion("trivial-bundle-pairings", "TM and the normal bundle trivial: every Lai pairing vanishes")
def trivial_pairings(n):
    return (0,) * (n + 1)


@criterion("slapar-cancellation", "Slapar: when I+ = I- = 0 a generic embedding is isotopic to a CR regular one")
def slapar(i_plus, i_minus):
    return i_plus == 0 and i_minus == 0


@criterion("pseudo-holomorphic-forward", "codim-2 pseudo-holomorphic embedding forces TM trivial")
def ph_forward(parallelizable):
    return parallelizable != "NO"


@criterion("pseudo-holomorphic-backward", "parallelizable + embeds in R^(2n+2) gives a pseudo-holomorphic embedding")
def ph_backward(parallelizable, embedded):
    return parallelizable == "YES" and bool(embedded)


@criterion("cr-forward", "CR regular embedding into C^(n+1) forces I+- = 0, chi = 0 and TM trivial")
def cr_forward(parallelizable):
    return parallelizable != "NO"


@criterion("six-dim-hypotheses", "6-manifold hypotheses: simply connected, torsion-free, w2 = 0, c1 = 0")
def six_dim_hypotheses(simply_connected, torsion_free_homology, w2_zero, c1_zero):
    return bool(simply_connected and torsion_free_homology and w2_zero and c1_zero)


@criterion("top-chern-number", "c3 evaluated on [M] equals chi")
def top_chern_vanishes(c_top):
    return None if c_top is None else c_top == 0


@criterion("first-pontryagin", "p1(M) = 0")
def p1_vanishes(p1_zero):
    return bool(p1_zero)


@criterion("six-dim-criterion", "pseudo-holomorphic embedding into almost-complex R^8 iff c3 = 0 = p1")
def six_dim(c3_zero, p1_zero):
    return bool(c3_zero and p1_zero)


@criterion("obstruction-omega2", "Omega_2 in H^2(M;Z) with 2 Omega_2 = c1(M,J)")
def omega2(embedded, c1_zero, torsion_free_homology):
    if not embedded:
        return "NonzeroOrUnknown"
    return "Vanishes" if c1_zero and torsion_free_homology else "NonzeroOrUnknown"


@criterion("obstruction-omega6", "Omega_6 in H^6(M;Z) identified with chi")
def omega6(embedded, chi):
    if not embedded or chi is None:
        return "NonzeroOrUnknown"
    return "Vanishes" if chi == 0 else "NonzeroOrUnknown"
