"""Line-oriented ``key = value`` descriptor files.

``#`` starts a comment.  Unknown and duplicate keys are rejected, booleans
are exactly ``true``/``false``, Betti lists are comma separated with ``?``
for an unknown rank.  Writing emits keys in the canonical order below; every
flag is always written, optional values only when present.
"""

from __future__ import annotations

from pathlib import Path

from .descriptor import CharClassData, Evidence, LaiPairingData, ManifoldDescriptor
from .errors import DescriptorSyntaxError, DuplicateKeyError, InputError, UnknownKeyError
from .homology import BettiTable
from .presentation import format_presentation, parse_presentation

KEYS = (
    "dim",
    "closed",
    "orientable",
    "betti_z",
    "betti_z2",
    "chi",
    "simply_connected",
    "torsion_free",
    "stably_parallelizable",
    "w2_zero",
    "bockstein_w2_zero",
    "c1_zero",
    "p1_zero",
    "c_top_pairing",
    "p1_pairings",
    "embeds_codim",
    "embeds_evidence",
    "pi1",
    "lai.n",
    "lai.pairings",
)
_FLAGS = {
    "simply_connected": "simply_connected",
    "torsion_free": "torsion_free_homology",
    "stably_parallelizable": "stably_parallelizable",
    "w2_zero": "w2_zero",
    "bockstein_w2_zero": "bockstein_w2_zero",
}


def _bool(value, line):
    if value == "true":
        return True
    if value == "false":
        return False
    raise DescriptorSyntaxError(f"expected true or false, got {value!r}", line)


def _int(value, line):
    try:
        return int(value)
    except ValueError:
        raise DescriptorSyntaxError(f"expected an integer, got {value!r}", line) from None


def _int_list(value, line, unknown_ok):
    items = [item.strip() for item in value.split(",")] if value.strip() else []
    out = []
    for item in items:
        if item == "?" and unknown_ok:
            out.append(None)
        else:
            out.append(_int(item, line))
    return out


def parse_descriptor(text: str) -> ManifoldDescriptor:
    records = {}
    lines = {}
    n = 0
    for n, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise DescriptorSyntaxError(f"expected 'key = value', got {content!r}", n)
        key, value = (part.strip() for part in content.split("=", 1))
        if key not in KEYS:
            raise UnknownKeyError(f"unknown key {key!r}", n)
        if key in records:
            raise DuplicateKeyError(f"duplicate key {key!r} (first on line {lines[key]})", n)
        records[key] = value
        lines[key] = n

    def get(key, conv, default=None):
        if key not in records:
            return default
        return conv(records[key], lines[key])

    dim = get("dim", _int)
    if dim is None:
        raise DescriptorSyntaxError("missing required key 'dim'", n + 1)
    if dim < 0:
        raise DescriptorSyntaxError("dim must be non-negative", lines["dim"])
    tables = {}
    for key in ("betti_z", "betti_z2"):
        seq = get(key, lambda v, ln: _int_list(v, ln, True), [None] * (dim + 1))
        if len(seq) != dim + 1:
            raise DescriptorSyntaxError(f"{key} needs dim+1 = {dim + 1} entries, got {len(seq)}", lines[key])
        if any(b is not None and b < 0 for b in seq):
            raise DescriptorSyntaxError(f"{key} entries must be non-negative", lines[key])
        tables[key] = seq
    betti = BettiTable(
        dim, tables["betti_z"], tables["betti_z2"], get("closed", _bool, True), get("orientable", _bool, True)
    )

    pi1 = None
    if "pi1" in records:
        try:
            pi1 = parse_presentation(records["pi1"])
        except InputError as exc:
            raise DescriptorSyntaxError(f"pi1: {exc}", lines["pi1"]) from None

    codim = get("embeds_codim", _int)
    evidence = None
    if "embeds_evidence" in records:
        try:
            evidence = Evidence(records["embeds_evidence"])
        except ValueError:
            choices = ", ".join(e.value for e in Evidence)
            raise DescriptorSyntaxError(f"embeds_evidence must be one of {choices}", lines["embeds_evidence"]) from None
        if codim is None:
            raise DescriptorSyntaxError("embeds_evidence given without embeds_codim", lines["embeds_evidence"])
    elif codim is not None:
        evidence = Evidence.ASSERTED
    if codim is not None and codim < 0:
        raise DescriptorSyntaxError("embeds_codim must be non-negative", lines["embeds_codim"])

    lai = None
    if ("lai.n" in records) != ("lai.pairings" in records):
        key = "lai.n" if "lai.n" in records else "lai.pairings"
        raise DescriptorSyntaxError("lai.n and lai.pairings must be given together", lines[key])
    if "lai.n" in records:
        try:
            lai = LaiPairingData(get("lai.n", _int), get("lai.pairings", lambda v, ln: _int_list(v, ln, False)))
        except ValueError as exc:
            raise DescriptorSyntaxError(str(exc), lines["lai.pairings"]) from None

    p1_pairings = get("p1_pairings", lambda v, ln: _int_list(v, ln, False))
    char = CharClassData(
        c1_zero=get("c1_zero", _bool, False),
        p1_zero=get("p1_zero", _bool, False),
        c_top_pairing=get("c_top_pairing", _int),
        p1_pairings=tuple(p1_pairings) if p1_pairings is not None else None,
    )
    flags = {attr: get(key, _bool, False) for key, attr in _FLAGS.items()}
    return ManifoldDescriptor(
        betti,
        pi1=pi1,
        embeds_codim=codim,
        embeds_evidence=evidence,
        char=char,
        lai=lai,
        chi=get("chi", _int),
        **flags,
    )


def _fmt_list(seq):
    return ",".join("?" if b is None else str(b) for b in seq)


def format_descriptor(m: ManifoldDescriptor) -> str:
    b = "true", "false"

    def flag(v):
        return b[0] if v else b[1]

    values = {
        "dim": str(m.dim),
        "closed": flag(m.closed),
        "orientable": flag(m.orientable),
        "betti_z": _fmt_list(m.betti.betti_z),
        "betti_z2": _fmt_list(m.betti.betti_z2),
        "chi": None if m.chi is None else str(m.chi),
        "c1_zero": flag(m.char.c1_zero),
        "p1_zero": flag(m.char.p1_zero),
        "c_top_pairing": None if m.char.c_top_pairing is None else str(m.char.c_top_pairing),
        "p1_pairings": None if m.char.p1_pairings is None else _fmt_list(m.char.p1_pairings),
        "embeds_codim": None if m.embeds_codim is None else str(m.embeds_codim),
        "embeds_evidence": None if m.embeds_evidence is None else m.embeds_evidence.value,
        "pi1": None if m.pi1 is None else format_presentation(m.pi1),
        "lai.n": None if m.lai is None else str(m.lai.n),
        "lai.pairings": None if m.lai is None else _fmt_list(m.lai.pairings),
    }
    for key, attr in _FLAGS.items():
        values[key] = flag(getattr(m, attr))
    return "".join(f"{key} = {values[key]}\n" for key in KEYS if values[key] is not None)


def read_descriptor(path) -> ManifoldDescriptor:
    return parse_descriptor(Path(path).read_text(encoding="utf-8"))


def write_descriptor(m: ManifoldDescriptor, path) -> None:
    Path(path).write_text(format_descriptor(m), encoding="utf-8")
