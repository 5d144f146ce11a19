from dataclasses import replace

import pytest

from crembed.ladder import ObstructionStatus, obstruction_ladder_6d
from crembed.obstructions import GroupValue, gamma_homotopy, kervaire_group
from crembed.errors import WrongDimensionError
from crembed.surgery import Sphere, evaluate


@pytest.mark.parametrize("n, g", [(7, GroupValue.ZERO), (9, GroupValue.Z2), (6, GroupValue.Z), (1, GroupValue.ZERO)])
def test_kervaire_group(n, g):
    assert kervaire_group(n) is g


@pytest.mark.parametrize(
    "k, n, g",
    [(2, 4, GroupValue.Z), (6, 4, GroupValue.Z), (9, 4, GroupValue.OUT_OF_STABLE_RANGE), (0, 4, GroupValue.Z2)],
)
def test_gamma_homotopy(k, n, g):
    assert gamma_homotopy(k, n) is g


def test_bad_indices():
    with pytest.raises(ValueError):
        kervaire_group(0)
    with pytest.raises(ValueError):
        gamma_homotopy(-1, 3)


def test_ladder_both_vanish(s3xs3):
    r = obstruction_ladder_6d(s3xs3)
    assert r.omega2 is ObstructionStatus.VANISHES and r.omega6 is ObstructionStatus.VANISHES
    assert r.both_vanish
    assert len(r.skeleta) == 6
    assert r.lines()[0].startswith("Omega_2: Vanishes")


def test_ladder_chi_two_blocks_omega6(s3xs3):
    m = replace(s3xs3, chi=None, betti=replace(s3xs3.betti, betti_z=(1, 0, 0, None, 0, 0, 1),
                                                betti_z2=(1, 0, 0, None, 0, 0, 1)),
                char=replace(s3xs3.char, c_top_pairing=2))
    r = obstruction_ladder_6d(m)
    assert r.omega6 is ObstructionStatus.NONZERO_OR_UNKNOWN
    assert r.omega6_reason == "chi = 2"


def test_ladder_c1_nonzero(s3xs3):
    r = obstruction_ladder_6d(replace(s3xs3, char=replace(s3xs3.char, c1_zero=False)))
    assert r.omega2 is ObstructionStatus.NONZERO_OR_UNKNOWN
    assert r.omega6 is ObstructionStatus.VANISHES


def test_ladder_without_embedding(s3xs3):
    r = obstruction_ladder_6d(replace(s3xs3, char=replace(s3xs3.char, p1_zero=False)))
    assert not r.both_vanish
    assert "no embedding" in r.omega2_reason


def test_ladder_dimension():
    with pytest.raises(WrongDimensionError):
        obstruction_ladder_6d(evaluate(Sphere(8)))
