"""
Literal Parsing for the Command Line
====================================
Group specs such as ``gl(n=2,d=1)``, cocharacters such as ``1,0``,
rational points such as ``1/2,1/2`` and affine Weyl elements such as
``1,0|id`` or ``1,0,0,1|t0:s1 t1:s1``.

Every failure raises ParseError with the position of the first offending
character.
"""

from fractions import Fraction
from typing import Optional

from ..core.exceptions import ParseError
from ..groups.root_datum import GroupDatum, GroupKind, build_group
from ..groups.weyl import word_to_element
from ..affine.affine_weyl import ExtAffElt, make_element


class _Cursor:
    """Left-to-right scanner over one literal."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_spaces()
        if not self.text.startswith(token, self.pos):
            raise ParseError(f"expected {token!r}", self.text, self.pos)
        self.pos += len(token)

    def word(self) -> str:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a name", self.text, start)
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if digits == self.pos:
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        numerator = self.integer()
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            denominator = self.integer()
            if denominator <= 0:
                raise ParseError("denominator must be positive", self.text, at)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def at_end(self) -> bool:
        self.skip_spaces()
        return self.pos >= len(self.text)

    def finish(self) -> None:
        if not self.at_end():
            raise ParseError("unexpected trailing input", self.text, self.pos)


def parse_group(text: str) -> GroupDatum:
    """
    Parse ``kind(n=N,d=D)``; ``d`` defaults to 1.

    Raises:
        ParseError: Malformed literal
        GroupDatumError: Well-formed but unsupported (kind, n, d)

    Example:
        >>> parse_group("gsp(n=4,d=1)")
        gsp(n=4,d=1)
    """
    cur = _Cursor(text)
    at = cur.pos
    kind = cur.word().lower()
    if kind not in {k.value for k in GroupKind}:
        raise ParseError(f"unknown group kind {kind!r}", text, at)
    cur.expect("(")
    values = {"d": 1}
    seen = set()
    while True:
        at = cur.pos
        key = cur.word()
        if key not in ("n", "d") or key in seen:
            raise ParseError(f"unexpected parameter {key!r}", text, at)
        seen.add(key)
        cur.expect("=")
        values[key] = cur.integer()
        if cur.peek() == ",":
            cur.pos += 1
            continue
        break
    cur.expect(")")
    cur.finish()
    if "n" not in seen:
        raise ParseError("missing parameter n", text, len(text))
    return build_group(kind, values["n"], values["d"])


def parse_vector(text: str) -> tuple[int, ...]:
    """``1,0,0`` (``;`` may separate slot blocks)."""
    cur = _Cursor(text.replace(";", ","))
    out = [cur.integer()]
    while cur.peek() == ",":
        cur.pos += 1
        out.append(cur.integer())
    cur.finish()
    return tuple(out)


def parse_rational_vector(text: str) -> tuple[Fraction, ...]:
    """``1/2,1/2`` with optional ``;`` between blocks."""
    cur = _Cursor(text.replace(";", ","))
    out = [cur.rational()]
    while cur.peek() == ",":
        cur.pos += 1
        out.append(cur.rational())
    cur.finish()
    return tuple(out)


def _generator(G: GroupDatum, token: str, text: str, at: int) -> int:
    """Simple position of ``s<i>`` or ``t<tau>:s<i>`` (i counted from 1 inside the slot)."""
    tau: Optional[int] = None
    body = token
    if token.startswith("t"):
        head, sep, body = token.partition(":")
        if not sep or not head[1:].isdigit():
            raise ParseError(f"bad generator {token!r}", text, at)
        tau = int(head[1:])
    if not body.startswith("s") or not body[1:].isdigit():
        raise ParseError(f"bad generator {token!r}", text, at)
    i = int(body[1:])
    if tau is None:
        if G.d != 1:
            raise ParseError(f"generator {token!r} needs a slot prefix when d > 1", text, at)
        tau = 0
    if not 0 <= tau < G.d or not 1 <= i < G.n:
        raise ParseError(f"generator {token!r} out of range for {G}", text, at)
    root = G.label_to_root[(G.index(tau, i - 1), G.index(tau, i))]
    if root not in G.simple_roots:
        raise ParseError(f"{token!r} is not a simple reflection of {G}", text, at)
    return G.simple_roots.index(root)


def parse_element(G: GroupDatum, text: str) -> ExtAffElt:
    """
    Parse ``<lambda>|<finite>`` where finite is ``id`` or a word in generators.

    Example:
        >>> parse_element(build_group("gl", 2, 1), "1,0|s1").finite
        (1, 0)
    """
    lam_text, sep, finite_text = text.partition("|")
    if not sep:
        raise ParseError("expected '|' between translation and finite part", text, len(text))
    lam = parse_vector(lam_text)
    if len(lam) != G.rank:
        raise ParseError(f"translation needs {G.rank} entries, got {len(lam)}", text, 0)
    offset = len(lam_text) + 1
    word = []
    stripped = finite_text.strip()
    if stripped != "id":
        if not stripped:
            raise ParseError("empty finite part", text, offset)
        pos = offset
        for token in finite_text.replace(",", " ").split():
            at = text.index(token, pos)
            word.append(_generator(G, token, text, at))
            pos = at + len(token)
    return make_element(G, lam, word_to_element(G, word))


def parse_m_seq(text: str) -> tuple[int, ...]:
    return parse_vector(text)

