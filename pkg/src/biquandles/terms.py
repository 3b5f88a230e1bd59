"""Biquandle terms, presentations, and the braid actions that produce them.

A term is either a generator or one of the four binary operations ur, lr,
ul, ll applied to two terms. A presentation lists generators and relations
between terms; closing a braid word yields one presentation per strand.

Presentation text grammar (line oriented, ``#`` starts a comment):

    gens a b c
    rel ur(a,b) = a

with ``TERM := IDENT | OP "(" TERM "," TERM ")"`` and IDENT matching
``[a-z][a-z0-9]*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .braids import BraidWord
from .errors import DomainError, ParseError

OPS = ("ur", "lr", "ul", "ll")


@dataclass(frozen=True)
class BQTerm:
    op: str | None = None
    name: str | None = None
    left: "BQTerm | None" = None
    right: "BQTerm | None" = None

    @classmethod
    def gen(cls, name: str) -> "BQTerm":
        return cls(name=name)

    @classmethod
    def node(cls, op: str, left: "BQTerm", right: "BQTerm") -> "BQTerm":
        if op not in OPS:
            raise ValueError(f"unknown operation {op!r}")
        return cls(op=op, left=left, right=right)

    @property
    def is_gen(self) -> bool:
        return self.op is None

    def render(self) -> str:
        if self.is_gen:
            return self.name
        return f"{self.op}({self.left.render()},{self.right.render()})"

    def __str__(self) -> str:
        return self.render()


def _coerce(x) -> BQTerm:
    return BQTerm.gen(x) if isinstance(x, str) else x


def ur(a, b) -> BQTerm:
    return BQTerm.node("ur", _coerce(a), _coerce(b))


def lr(a, b) -> BQTerm:
    return BQTerm.node("lr", _coerce(a), _coerce(b))


def ul(a, b) -> BQTerm:
    return BQTerm.node("ul", _coerce(a), _coerce(b))


def ll(a, b) -> BQTerm:
    return BQTerm.node("ll", _coerce(a), _coerce(b))


@dataclass(frozen=True)
class BQRelation:
    lhs: BQTerm
    rhs: BQTerm

    def flip(self) -> "BQRelation":
        return BQRelation(self.rhs, self.lhs)

    def render(self) -> str:
        return f"{self.lhs.render()} = {self.rhs.render()}"

    def __str__(self) -> str:
        return self.render()


class BQPresentation:
    """Finitely presented biquandle: generator names plus term relations."""

    def __init__(self, generators: list[str], relations: list[BQRelation]):
        self.generators = list(generators)
        self.relations = list(relations)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        declared = set(self.generators)
        for rel in self.relations:
            for name in _term_gens(rel.lhs) | _term_gens(rel.rhs):
                if name not in declared:
                    raise ValueError(f"relation uses undeclared generator {name!r}")

    def render(self) -> str:
        lines = ["gens " + " ".join(self.generators)]
        lines.extend(f"rel {rel.render()}" for rel in self.relations)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BQPresentation):
            return NotImplemented
        return self.generators == other.generators and self.relations == other.relations


def _term_gens(t: BQTerm) -> set[str]:
    if t.is_gen:
        return {t.name}
    return _term_gens(t.left) | _term_gens(t.right)


_IDENT_RE = re.compile(r"^[a-z][a-z0-9]*$")
_TOKEN_RE = re.compile(r"[a-z][a-z0-9]*|[(),=]|\S")


def _parse_term(tokens: list[str], pos: int, declared: set[str]) -> tuple[BQTerm, int]:
    if pos >= len(tokens):
        raise ParseError("unexpected end of term")
    tok = tokens[pos]
    if tok in OPS and pos + 1 < len(tokens) and tokens[pos + 1] == "(":
        left, pos = _parse_term(tokens, pos + 2, declared)
        if pos >= len(tokens) or tokens[pos] != ",":
            raise ParseError(f"expected ',' in {tok}(...) term")
        right, pos = _parse_term(tokens, pos + 1, declared)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ParseError(f"expected ')' closing {tok}(...) term")
        return BQTerm.node(tok, left, right), pos + 1
    if _IDENT_RE.match(tok):
        if tok not in declared:
            raise ParseError(f"undeclared generator {tok!r}")
        return BQTerm.gen(tok), pos + 1
    raise ParseError(f"unexpected token {tok!r} in term")


def parse_presentation(text: str) -> BQPresentation:
    generators: list[str] | None = None
    relations: list[BQRelation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens"):
            if generators is not None:
                raise ParseError(f"line {lineno}: duplicate gens line")
            names = line[len("gens") :].split()
            if not names:
                raise ParseError(f"line {lineno}: gens line lists no generators")
            for name in names:
                if not _IDENT_RE.match(name) or name in OPS:
                    raise ParseError(f"line {lineno}: bad generator name {name!r}")
            if len(set(names)) != len(names):
                raise ParseError(f"line {lineno}: duplicate generator names")
            generators = names
            continue
        if line.startswith("rel"):
            if generators is None:
                raise ParseError(f"line {lineno}: rel before gens")
            body = line[len("rel") :].strip()
            tokens = _TOKEN_RE.findall(body)
            declared = set(generators)
            lhs, pos = _parse_term(tokens, 0, declared)
            if pos >= len(tokens) or tokens[pos] != "=":
                raise ParseError(f"line {lineno}: expected '=' between relation sides")
            rhs, pos = _parse_term(tokens, pos + 1, declared)
            if pos != len(tokens):
                raise ParseError(f"line {lineno}: trailing tokens after relation")
            relations.append(BQRelation(lhs, rhs))
            continue
        raise ParseError(f"line {lineno}: expected 'gens' or 'rel', got {line!r}")
    if generators is None:
        raise ParseError("presentation has no gens line")
    return BQPresentation(generators, relations)


# Crossing morphisms on pairs of terms. The positive upward crossing sends
# (a, b) to (ur(b,a), lr(a,b)); its inverse and the downward pair follow the
# same switching pattern with the left/right operation roles exchanged.
MORPHISMS = ("phi_u", "phi_u_inv", "phi_d", "phi_d_inv", "tau")


def apply_morphism(kind: str, pair: tuple[BQTerm, BQTerm]) -> tuple[BQTerm, BQTerm]:
    a, b = pair
    if kind == "phi_u":
        return (ur(b, a), lr(a, b))
    if kind == "phi_u_inv":
        return (ll(b, a), ul(a, b))
    if kind == "phi_d":
        return (ul(b, a), ll(a, b))
    if kind == "phi_d_inv":
        return (lr(b, a), ur(a, b))
    if kind == "tau":
        return (b, a)
    raise ValueError(f"unknown morphism {kind!r}")


def _act_at(kind: str, tup: tuple[BQTerm, ...], pos: int) -> tuple[BQTerm, ...]:
    new = apply_morphism(kind, (tup[pos], tup[pos + 1]))
    return tup[:pos] + new + tup[pos + 2 :]


def braid_act_up(w: BraidWord, tup: tuple[BQTerm, ...]) -> tuple[BQTerm, ...]:
    """Push labels up through the braid, first letter first.

    The action is an anti-homomorphism on words, which is exactly this
    left-to-right fold. A letter with index i acts on slots i-1 and i.
    """
    if len(tup) != w.strands:
        raise ValueError(f"tuple length {len(tup)} does not match {w.strands} strands")
    for letter in w.letters:
        if letter.virtual:
            kind = "tau"
        else:
            kind = "phi_u" if letter.exponent > 0 else "phi_u_inv"
        tup = _act_at(kind, tup, letter.index - 1)
    return tup


def braid_act_down(w: BraidWord, tup: tuple[BQTerm, ...]) -> tuple[BQTerm, ...]:
    """Push labels down through the braid, last letter first.

    The downward action is a homomorphism on words, so the fold runs right
    to left. Slot positions count from the top strand: a letter with index i
    acts on slots n-1-i and n-i.
    """
    if len(tup) != w.strands:
        raise ValueError(f"tuple length {len(tup)} does not match {w.strands} strands")
    for letter in reversed(w.letters):
        if letter.virtual:
            kind = "tau"
        else:
            kind = "phi_d" if letter.exponent > 0 else "phi_d_inv"
        tup = _act_at(kind, tup, w.strands - 1 - letter.index)
    return tup


def generator_names(n: int) -> list[str]:
    """a, b, c, ... for up to 26 strands; g1, g2, ... beyond that."""
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"g{i + 1}" for i in range(n)]


def presentation_from_braid(w: BraidWord) -> BQPresentation:
    """Biquandle of the braid closure, traversing the diagram upward.

    One generator per strand; each relation equates the label returned to a
    strand's bottom by the closure arcs with that strand's generator.
    """
    names = generator_names(w.strands)
    gens = tuple(BQTerm.gen(name) for name in names)
    image = braid_act_up(w, gens)
    relations = [BQRelation(image[i], gens[i]) for i in range(w.strands)]
    return BQPresentation(names, relations)


def presentation_from_braid_down(w: BraidWord) -> BQPresentation:
    """Biquandle of the braid closure, traversing the diagram downward.

    The tuple enters at the top, so it lists the generators in reverse strand
    order; the generator list itself is unchanged.
    """
    names = generator_names(w.strands)
    gens = tuple(BQTerm.gen(name) for name in reversed(names))
    image = braid_act_down(w, gens)
    relations = [BQRelation(image[i], gens[i]) for i in range(w.strands)]
    return BQPresentation(names, relations)


def _rename_term(t: BQTerm, mapping: dict[str, str]) -> BQTerm:
    if t.is_gen:
        return BQTerm.gen(mapping[t.name])
    return BQTerm.node(t.op, _rename_term(t.left, mapping), _rename_term(t.right, mapping))


def _relation_key(rel: BQRelation) -> tuple[str, str]:
    sides = sorted((rel.lhs.render(), rel.rhs.render()))
    return (sides[0], sides[1])


def presentations_equal_up_to_renaming(p: BQPresentation, q: BQPresentation) -> bool:
    """True when some bijection of generator names maps one relation multiset
    onto the other. Relations are compared as unordered equations.

    The search tries every bijection, so it is limited to 8 generators.
    """
    if len(p.generators) != len(q.generators):
        return False
    if len(p.relations) != len(q.relations):
        return False
    if len(p.generators) > 8:
        raise DomainError(
            f"renaming search supports at most 8 generators, got {len(p.generators)}"
        )
    target = sorted(_relation_key(rel) for rel in q.relations)
    for perm in permutations(q.generators):
        mapping = dict(zip(p.generators, perm))
        renamed = sorted(
            _relation_key(
                BQRelation(_rename_term(rel.lhs, mapping), _rename_term(rel.rhs, mapping))
            )
            for rel in p.relations
        )
        if renamed == target:
            return True
    return False
