"""Construction expressions: the tree, its parser and its canonical rendering.

Grammar (whitespace-insensitive)::

    expr := "Z" int | "Mat(" int "," expr ")" | "UT(" int "," expr ")"
          | "EqDiagUT(" int "," expr ")" | "Triv(" expr ")" | "Dorroh(" expr "," int ")"
          | "PolyNil(" expr "," int ")" | "PolyMod(" expr ",[" name {"," name} "])"
          | "Prod(" expr "," expr ")" | "GroupRing(" expr ",[" int {"," int} "])"
          | "CongMat(" int ")" | "Corner(" expr "," name ")"
          | "Quot(" expr ",[" name {"," name} "])" | "Table(" path ")"

Element names are read as balanced-bracket tokens, so "(1,[[0,0],[0,0]])" is one name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TypeAlias

from centrum.core.errors import ExprSyntaxError

Arg: TypeAlias = "RingExpr | int | str | tuple[int, ...] | tuple[str, ...]"


# ---------------------------------------------------------------------------
# Constructor signatures
# ---------------------------------------------------------------------------

# argument kinds: int, expr, name, names, ints, path
SIGNATURES: dict[str, tuple[str, ...]] = {
    "Z": ("int",),
    "Mat": ("int", "expr"),
    "UT": ("int", "expr"),
    "EqDiagUT": ("int", "expr"),
    "Triv": ("expr",),
    "Dorroh": ("expr", "int"),
    "PolyNil": ("expr", "int"),
    "PolyMod": ("expr", "names"),
    "Prod": ("expr", "expr"),
    "GroupRing": ("expr", "ints"),
    "CongMat": ("int",),
    "Corner": ("expr", "name"),
    "Quot": ("expr", "names"),
    "Table": ("path",),
}


@dataclass(frozen=True)
class RingExpr:
    """One constructor applied to its arguments. Hashable, so builders can cache on it."""

    ctor: str
    args: tuple[Arg, ...]

    def __str__(self) -> str:
        return render(self)

    @property
    def children(self) -> list[RingExpr]:
        return [a for a in self.args if isinstance(a, RingExpr)]

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children), default=-1)


def Z(n: int) -> RingExpr:  # noqa: N802
    return RingExpr("Z", (n,))


def render(e: RingExpr) -> str:
    """Canonical text of an expression; parse(render(e)) == e."""
    if e.ctor == "Z":
        return f"Z {e.args[0]}"
    parts = []
    for kind, arg in zip(SIGNATURES[e.ctor], e.args, strict=True):
        if kind == "expr":
            parts.append(render(arg))  # type: ignore[arg-type]
        elif kind in ("names", "ints"):
            parts.append("[" + ",".join(str(x) for x in arg) + "]")  # type: ignore[union-attr]
        else:
            parts.append(str(arg))
    return f"{e.ctor}({', '.join(parts)})"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, msg: str) -> ExprSyntaxError:
        return ExprSyntaxError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.fail(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected an integer")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        """Balanced-bracket token up to a top-level ',' ')' or ']'."""
        self.skip_ws()
        depth = 0
        chars: list[str] = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if depth == 0 and ch in ",)]":
                break
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            if not ch.isspace():
                chars.append(ch)
            self.pos += 1
        if depth != 0:
            raise self.fail("unbalanced brackets in element name")
        if not chars:
            raise self.fail("expected an element name")
        return "".join(chars)

    def path(self) -> str:
        self.skip_ws()
        start, depth = self.pos, 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == ")" and depth == 0:
                break
            depth += {"(": 1, ")": -1}.get(ch, 0)
            self.pos += 1
        raw = self.text[start : self.pos].strip()
        if not raw:
            raise self.fail("Table needs a path")
        return raw

    def listing(self, item) -> tuple:
        self.expect("[")
        items = [item()]
        while self.peek() == ",":
            self.pos += 1
            items.append(item())
        self.expect("]")
        return tuple(items)

    def expr(self) -> RingExpr:
        ctor = self.ident()
        if ctor not in SIGNATURES:
            known = ", ".join(SIGNATURES)
            raise self.fail(f"unknown constructor {ctor!r} (known: {known})")
        if ctor == "Z":
            return RingExpr("Z", (self.integer(),))
        self.expect("(")
        args: list[Arg] = []
        for i, kind in enumerate(SIGNATURES[ctor]):
            if i:
                self.expect(",")
            if kind == "int":
                args.append(self.integer())
            elif kind == "expr":
                args.append(self.expr())
            elif kind == "name":
                args.append(self.name())
            elif kind == "names":
                args.append(self.listing(self.name))
            elif kind == "ints":
                args.append(self.listing(self.integer))
            else:
                args.append(self.path())
        self.expect(")")
        return RingExpr(ctor, tuple(args))


def parse(text: str) -> RingExpr:
    """Parse a construction expression; ExprSyntaxError on anything malformed."""
    p = _Parser(text)
    e = p.expr()
    if p.peek():
        raise p.fail("trailing input")
    return e


def as_expr(e: RingExpr | str) -> RingExpr:
    return parse(e) if isinstance(e, str) else e


# ---------------------------------------------------------------------------
# Orders without building
# ---------------------------------------------------------------------------

def predicted_order(e: RingExpr) -> int | None:
    """Order of the ring e builds, or None where it depends on the tables (Quot, Corner, Table)."""
    c, a = e.ctor, e.args
    if c == "Z":
        return a[0]
    if c == "CongMat":
        return 2 * a[0] ** 4
    if c in ("Quot", "Corner", "Table"):
        return None
    sub = [predicted_order(x) for x in e.children]
    if any(s is None for s in sub):
        return None
    q = sub[0]
    match c:
        case "Mat":
            return q ** (a[0] * a[0])
        case "UT":
            return q ** (a[0] * (a[0] + 1) // 2)
        case "EqDiagUT":
            return q ** (1 + a[0] * (a[0] - 1) // 2)
        case "Triv":
            return q * q
        case "Dorroh":
            return q * a[1]
        case "PolyNil":
            return q ** a[1]
        case "PolyMod":
            return q ** len(a[1])
        case "Prod":
            return q * sub[1]
        case "GroupRing":
            return q ** math.prod(a[1])
    raise ExprSyntaxError(f"no order rule for {c}")
