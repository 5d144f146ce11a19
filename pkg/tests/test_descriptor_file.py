import pytest

from crembed.descriptor import Evidence, validate
from crembed.descriptor_file import format_descriptor, parse_descriptor, read_descriptor, write_descriptor
from crembed.errors import DescriptorSyntaxError, DuplicateKeyError, UnknownKeyError
from crembed.presentation import parse_presentation
from crembed.surgery import Sphere, construct_M, evaluate
from conftest import torus

SPHERE = """\
# the round 6-sphere
dim=6
betti_z = 1,0,0,0,0,0,1
betti_z2 = 1,0,0,0,0,0,1
stably_parallelizable = true
"""


def test_minimal_sphere_file():
    m = parse_descriptor(SPHERE)
    assert m.dim == 6 and m.euler == 2 and m.stably_parallelizable
    assert m.closed and m.orientable
    assert validate(m) == []


def test_unknown_markers():
    m = parse_descriptor("dim = 6\nbetti_z = 1,0,?,0,?,0,1\n")
    assert [i for i, b in enumerate(m.betti.betti_z) if b is None] == [2, 4]
    assert m.betti.betti_z2 == (None,) * 7


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("dim = 6\ndim = 6\n", DuplicateKeyError, 2),
        ("dim = 6\ncolour = red\n", UnknownKeyError, 2),
        ("dim = 6\nclosed = True\n", DescriptorSyntaxError, 2),
        ("dim = 2\nbetti_z = 1,0\n", DescriptorSyntaxError, 2),
        ("dim = 2\nbetti_z = 1,x,1\n", DescriptorSyntaxError, 2),
        ("dim = 2\n\nembeds_evidence = ByWall\n", DescriptorSyntaxError, 3),
        ("dim = 2\nlai.n = 1\n", DescriptorSyntaxError, 2),
        ("dim = 2\npi1 = <a | b>\n", DescriptorSyntaxError, 2),
        ("dim 2\n", DescriptorSyntaxError, 1),
        ("closed = true\n", DescriptorSyntaxError, 2),
    ],
)
def test_syntax_errors_carry_line(text, error, line):
    with pytest.raises(error) as info:
        parse_descriptor(text)
    assert info.value.line == line


def test_evidence_defaults_to_asserted():
    m = parse_descriptor("dim = 2\nembeds_codim = 1\n")
    assert m.embeds_evidence is Evidence.ASSERTED


def _samples():
    m, _ = construct_M(parse_presentation("<a, b | a^2 b^-3>"), 8)
    return [evaluate(Sphere(6)), evaluate(torus(4)), m]


def test_round_trip_is_canonical(tmp_path):
    for m in _samples():
        text = format_descriptor(m)
        again = parse_descriptor(text)
        assert format_descriptor(again) == text
        path = tmp_path / "m.desc"
        write_descriptor(again, path)
        assert path.read_bytes() == text.encode()
        assert read_descriptor(path) == again


def test_canonical_ordering_of_a_messy_file():
    messy = "stably_parallelizable=true  # flag\n\n  betti_z2 = 1, 0,0,0,0,0,1\nbetti_z=1,0,0,0,0,0,1\ndim= 6\n"
    text = format_descriptor(parse_descriptor(messy))
    assert text.splitlines()[:5] == [
        "dim = 6",
        "closed = true",
        "orientable = true",
        "betti_z = 1,0,0,0,0,0,1",
        "betti_z2 = 1,0,0,0,0,0,1",
    ]
    assert parse_descriptor(text) == parse_descriptor(messy)
