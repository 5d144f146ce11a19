"""Finite group presentations: parsing, free reduction, abelianization.

Grammar (whitespace allowed between tokens)::

    presentation := '<' [gen (',' gen)*] '|' [word (',' word)*] '>'
    word         := factor+
    factor       := ident ['^' int]

Words are stored as tuples of ``(generator index, nonzero exponent)`` pairs.
Only abelianization invariants are certified; isomorphism of finitely
presented groups is undecidable in general.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateGeneratorError, PresentationSyntaxError, UnknownGeneratorError
from .snf import IntegerMatrix, smith_normal_form

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<punct>[<>|,^]))")


def free_reduce(word) -> tuple:
    """Merge adjacent powers of the same generator and drop zero exponents."""
    out = []
    for gen, exp in word:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            out.pop()
            if total:
                out.append((gen, total))
        else:
            out.append((gen, exp))
    return tuple(out)


def invert(word) -> tuple:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise DuplicateGeneratorError("duplicate generator in presentation")
        rels = []
        for word in self.relators:
            for g, _ in word:
                if not 0 <= g < len(gens):
                    raise UnknownGeneratorError(f"generator index {g} out of range")
            rels.append(free_reduce(word))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def s(self) -> int:
        return len(self.generators)

    @property
    def t(self) -> int:
        return len(self.relators)

    def __str__(self):
        return format_presentation(self)


def format_word(p: GroupPresentation, word) -> str:
    if not word:
        # the grammar has no identity symbol; g^0 reduces back to the empty word
        if not p.generators:
            raise ValueError("an empty relator over zero generators has no text form")
        return f"{p.generators[0]}^0"
    return " ".join(p.generators[g] if e == 1 else f"{p.generators[g]}^{e}" for g, e in word)


def format_presentation(p: GroupPresentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(p, w) for w in p.relators)
    return f"<{gens} | {rels}>"


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise PresentationSyntaxError(f"unexpected character {text[bad]!r}", len(text[:bad].encode()))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("end", "", len(text.encode())))
    return tokens


def parse_presentation(text: str) -> GroupPresentation:
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def expect(value, what=None):
        nonlocal pos
        kind, val, off = tokens[pos]
        if val != value or kind not in ("punct",):
            raise PresentationSyntaxError(f"expected {what or repr(value)}, found {val or 'end of input'!r}", off)
        pos += 1

    expect("<")
    generators = []
    index = {}
    if peek()[1] != "|":
        while True:
            kind, val, off = peek()
            if kind != "ident":
                raise PresentationSyntaxError(f"expected generator name, found {val or 'end of input'!r}", off)
            if val in index:
                raise DuplicateGeneratorError(f"generator {val!r} listed twice (byte {off})")
            index[val] = len(generators)
            generators.append(val)
            pos += 1
            if peek()[1] == ",":
                pos += 1
                continue
            break
    expect("|")
    relators = []
    if peek()[1] != ">":
        while True:
            word = []
            while peek()[0] == "ident":
                _, name, off = peek()
                if name not in index:
                    raise UnknownGeneratorError(f"relator uses undeclared generator {name!r} (byte {off})")
                pos += 1
                exp = 1
                if peek()[1] == "^":
                    pos += 1
                    kind, val, off = peek()
                    if kind != "int":
                        raise PresentationSyntaxError("expected integer exponent", off)
                    exp = int(val)
                    pos += 1
                word.append((index[name], exp))
            if not word:
                kind, val, off = peek()
                raise PresentationSyntaxError(f"expected relator word, found {val or 'end of input'!r}", off)
            relators.append(tuple(word))
            if peek()[1] == ",":
                pos += 1
                continue
            break
    expect(">")
    kind, val, off = peek()
    if kind != "end":
        raise PresentationSyntaxError(f"trailing input {val!r}", off)
    return GroupPresentation(tuple(generators), tuple(relators))


def relation_matrix(p: GroupPresentation) -> IntegerMatrix:
    """t x s matrix of exponent sums: entry (j, i) is the total power of generator i in relator j."""
    rows = []
    for word in p.relators:
        row = [0] * p.s
        for g, e in word:
            row[g] += e
        rows.append(row)
    return IntegerMatrix.from_rows(rows, p.s)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion_factors: tuple = ()

    def __post_init__(self):
        tf = tuple(self.torsion_factors)
        if any(x < 2 for x in tf) or any(b % a for a, b in zip(tf, tf[1:])):
            raise ValueError(f"torsion factors {tf} do not form a divisibility chain")
        object.__setattr__(self, "torsion_factors", tf)

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_factors

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{k}" for k in self.torsion_factors]
        return " + ".join(parts) if parts else "0"


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    d, _, _ = smith_normal_form(relation_matrix(p))
    nonzero = [x for x in d if x]
    return AbelianInvariants(p.s - len(nonzero), tuple(x for x in nonzero if x > 1))


def is_evidently_trivial(p: GroupPresentation) -> bool:
    """Sound but incomplete triviality test.

    Repeatedly deletes any generator that occurs as a relator of its own
    (``g`` or ``g^-1``), erasing it from the remaining relators.  Returns
    True only if every generator gets deleted.
    """
    alive = set(range(p.s))
    rels = [list(w) for w in p.relators]
    changed = True
    while changed and alive:
        changed = False
        for w in rels:
            reduced = free_reduce((g, e) for g, e in w if g in alive)
            if len(reduced) == 1 and abs(reduced[0][1]) == 1:
                alive.discard(reduced[0][0])
                changed = True
    return not alive


def _shift(word, k):
    return tuple((g + k, e) for g, e in word)


def _merge_names(a: GroupPresentation, b: GroupPresentation) -> tuple:
    names = list(a.generators)
    taken = set(names)
    for name in b.generators:
        new, i = name, 1
        while new in taken:
            new = f"{name}_{i}"
            i += 1
        taken.add(new)
        names.append(new)
    return tuple(names)


def free_product(a: GroupPresentation, b: GroupPresentation) -> GroupPresentation:
    return GroupPresentation(_merge_names(a, b), a.relators + tuple(_shift(w, a.s) for w in b.relators))


def direct_product(a: GroupPresentation, b: GroupPresentation) -> GroupPresentation:
    commutators = tuple(
        ((i, 1), (a.s + j, 1), (i, -1), (a.s + j, -1)) for i in range(a.s) for j in range(b.s)
    )
    return GroupPresentation(_merge_names(a, b), free_product(a, b).relators + commutators)


TRIVIAL_GROUP = GroupPresentation((), ())


def free_group(s: int) -> GroupPresentation:
    return GroupPresentation(tuple(f"g{i + 1}" for i in range(s)), ())
