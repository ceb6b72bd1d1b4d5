"""Recursive-descent parser and printer for the construction language.

Example::

    param r
    points A B C
    D := on_parallel(B; A, C; r)
    S := intersect(A,B; C,D)
    prove ratio(S,A;A,B) = ratio(S,C;C,D)

Comments start with ``#``; line breaks carry no meaning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import DIST_RATIO, PYTH_DIFF, QUAD_DIST, SIGNED_AREA
from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import (
    Construction,
    Foot,
    FreePoints,
    Intersection,
    OnParallel,
    OnPerpendicular,
)
from areamethod.errors import ParseError, UnknownPoint
from areamethod.frontend.predicates import SIGNATURES, expand_predicate

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<op>:=|==|!=|<=|>=|[<>=()\[\],;+\-*/^])
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<str>"[^"\n]*")
    """,
    re.VERBOSE,
)

RELATIONS = ("=", "==", "!=", "<=", "<", ">=", ">")
KEYWORDS = ("param", "points", "prove", "option")
_RAW_ECS = re.compile(r"ECS([1-5])$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def pos(self) -> tuple[int, int]:
        return (self.line, self.col)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok_text = m.group()
        if kind != "ws":
            tokens.append(Token(kind, tok_text, line, pos - line_start + 1))
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + tok_text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class SourceFile:
    construction: Construction
    conjecture: Conjecture
    options: dict[str, str] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SourceFile):
            return NotImplemented
        return (
            self.construction == other.construction
            and self.conjecture == other.conjecture
            and self.options == other.options
        )


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.c = Construction()
        self.goal: Conjecture | None = None
        self.options: dict[str, str] = {}

    # -- token helpers -------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def ident(self, what: str = "identifier") -> Token:
        if self.tok.kind != "ident":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {what}, found {found!r}")
        return self.advance()

    def point(self) -> str:
        t = self.ident("point name")
        if t.text not in self.c:
            raise UnknownPoint(f"point {t.text!r} used before it is introduced", t.pos)
        return t.text

    # -- statements ------------------------------------------------------
    def parse(self) -> SourceFile:
        while self.tok.kind != "eof":
            self.statement()
        if self.goal is None:
            raise self.error("missing 'prove' statement")
        if not self.c.steps:
            raise self.error("the construction introduces no free points")
        return SourceFile(self.c, self.goal, self.options)

    def statement(self) -> None:
        t = self.tok
        if t.kind != "ident":
            raise self.error(f"expected a statement, found {t.text!r}")
        if self.goal is not None:
            raise self.error("nothing may follow the 'prove' statement")
        if t.text == "param":
            self.advance()
            self.names_until_statement(lambda n: self.declare_param(n))
        elif t.text == "points":
            self.advance()
            names = []
            self.names_until_statement(names.append)
            if not names:
                raise self.error("'points' needs at least one name")
            self.c = self.c.append(FreePoints(tuple(n.text for n in names)), names[0].pos)
        elif t.text == "option":
            self.advance()
            key = self.ident("option name").text
            self.expect("=")
            v = self.advance()
            if v.kind not in ("ident", "int", "str"):
                raise self.error("expected an option value", v)
            self.options[key] = v.text.strip('"')
        elif t.text == "prove":
            self.advance()
            self.goal = self.goal_statement()
        elif _RAW_ECS.match(t.text) and self.peek().text == "(":
            self.raw_ecs()
        elif self.peek().text == ":=":
            self.constructed()
        else:
            raise self.error(f"unknown statement {t.text!r}")

    def names_until_statement(self, sink) -> None:
        while self.tok.kind == "ident" and not self.starts_statement():
            sink(self.advance())

    def starts_statement(self) -> bool:
        t = self.tok
        if t.text in KEYWORDS:
            return True
        nxt = self.peek().text
        return nxt == ":=" or (bool(_RAW_ECS.match(t.text)) and nxt == "(")

    def declare_param(self, tok: Token) -> None:
        self.c = self.c.declare_parameter(tok.text, tok.pos)

    def constructed(self) -> None:
        name_tok = self.advance()
        self.expect(":=")
        ctor = self.ident("constructor")
        y = name_tok.text
        self.expect("(")
        if ctor.text == "on_parallel":
            w = self.point()
            self.expect(";")
            u, v = self.point_pair()
            self.expect(";")
            step = OnParallel(y, w, u, v, self.expr())
        elif ctor.text == "intersect":
            u, v = self.point_pair()
            self.expect(";")
            p, q = self.point_pair()
            step = Intersection(y, u, v, p, q)
        elif ctor.text == "foot":
            p = self.point()
            self.expect(";")
            u, v = self.point_pair()
            step = Foot(y, p, u, v)
        elif ctor.text == "on_perp":
            u, v = self.point_pair()
            self.expect(";")
            step = OnPerpendicular(y, u, v, self.expr())
        elif _RAW_ECS.match(ctor.text):
            step = self.raw_args(int(ctor.text[3]), y, ctor)
        else:
            raise self.error(f"unknown constructor {ctor.text!r}", ctor)
        self.expect(")")
        self.c = self.c.append(step, name_tok.pos)

    def raw_ecs(self) -> None:
        head = self.advance()
        k = int(head.text[3])
        self.expect("(")
        if k == 1:
            names = [self.ident("point name").text]
            while self.at(","):
                self.advance()
                names.append(self.ident("point name").text)
            self.expect(")")
            self.c = self.c.append(FreePoints(tuple(names)), head.pos)
            return
        y = self.ident("point name").text
        self.expect(",")
        step = self.raw_args(k, y, head)
        self.expect(")")
        self.c = self.c.append(step, head.pos)

    def raw_args(self, k: int, y: str, head: Token):
        def pts(n):
            out = [self.point()]
            for _ in range(n - 1):
                self.expect(",")
                out.append(self.point())
            return out

        if k == 2:
            return Intersection(y, *pts(4))
        if k == 3:
            return Foot(y, *pts(3))
        if k == 4:
            w, u, v = pts(3)
            self.expect(",")
            return OnParallel(y, w, u, v, self.expr())
        if k == 5:
            u, v = pts(2)
            self.expect(",")
            return OnPerpendicular(y, u, v, self.expr())
        raise self.error("ECS1 cannot define a single named point", head)

    def point_pair(self) -> tuple[str, str]:
        a = self.point()
        self.expect(",")
        return a, self.point()

    # -- goal ---------------------------------------------------------------
    def goal_statement(self) -> Conjecture:
        t = self.tok
        if t.kind == "ident" and t.text in SIGNATURES and self.peek().text == "(":
            self.advance()
            self.expect("(")
            groups = [[self.point()]]
            while self.at(",") or self.at(";"):
                if self.advance().text == ";":
                    groups.append([])
                groups[-1].append(self.point())
            self.expect(")")
            try:
                return expand_predicate(t.text, groups)
            except ValueError as exc:
                raise self.error(str(exc), t) from None
        lhs = self.expr()
        rel_tok = self.tok
        if rel_tok.text not in RELATIONS:
            raise self.error(f"expected a relation, found {rel_tok.text or 'end of input'!r}")
        self.advance()
        rhs = self.expr()
        return Conjecture((Clause(lhs, Relation.parse(rel_tok.text), rhs),))

    # -- expressions -----------------------------------------------------------
    def expr(self):
        terms = [self.term()]
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self.term()
            terms.append(t if op == "+" else et.Neg(t))
        return terms[0] if len(terms) == 1 else et.Sum(tuple(terms))

    def term(self):
        items = [self.factor()]
        while self.at("*") or self.at("/"):
            op = self.advance().text
            f = self.factor()
            if op == "*":
                items.append(f)
            else:
                num = items[0] if len(items) == 1 else et.Product(tuple(items))
                items = [et.Quotient(num, f)]
        return items[0] if len(items) == 1 else et.Product(tuple(items))

    def factor(self):
        if self.at("-"):
            self.advance()
            return et.Neg(self.factor())
        base = self.atom()
        if self.at("^"):
            self.advance()
            return et.IntPower(base, self.exponent())
        return base

    def exponent(self) -> int:
        if self.at("("):
            self.advance()
            self.expect("-")
            n = -self.integer()
            self.expect(")")
            return n
        if self.at("-"):
            self.advance()
            return -self.integer()
        return self.integer()

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        return int(self.advance().text)

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return et.Const(Fraction(int(t.text)))
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "ident":
            raise self.error(f"expected an expression, found {t.text or 'end of input'!r}")
        nxt = self.peek().text
        if t.text in ("S", "P") and nxt == "[":
            self.advance()
            self.expect("[")
            pts = [self.point()]
            while self.at(","):
                self.advance()
                pts.append(self.point())
            self.expect("]")
            if len(pts) not in (3, 4):
                raise self.error(f"{t.text}[...] takes 3 or 4 points", t)
            return et.quantity(SIGNED_AREA if t.text == "S" else PYTH_DIFF, pts)
        if t.text == "ratio" and nxt == "(":
            self.advance()
            self.expect("(")
            a, b = self.point_pair()
            self.expect(";")
            c, d = self.point_pair()
            self.expect(")")
            if c == d:
                raise self.error(f"ratio({a},{b};{c},{d}) has a zero-length denominator", t)
            return et.Quantity(DIST_RATIO, (a, b, c, d))
        if t.text in ("d2", "dist") and nxt == "(":
            self.advance()
            self.expect("(")
            a, b = self.point_pair()
            self.expect(")")
            leaf = et.Quantity(QUAD_DIST, (a, b))
            return leaf if t.text == "d2" else et.Sqrt(leaf)
        if t.text == "sqrt" and nxt == "(":
            self.advance()
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return et.Sqrt(e)
        self.advance()
        if t.text in self.c.parameters:
            return et.param(t.text)
        if t.text in self.c:
            raise self.error(f"point {t.text!r} cannot be used as a number", t)
        raise UnknownPoint(f"parameter {t.text!r} is not declared", t.pos)


def parse(text: str) -> SourceFile:
    """Parse a construction file into its construction, goal and options."""
    return _Parser(text).parse()


def parse_file(path) -> SourceFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# -- printing -----------------------------------------------------------

def format_step(step) -> str:
    if isinstance(step, FreePoints):
        return "points " + " ".join(step.points)
    if isinstance(step, Intersection):
        return f"{step.y} := intersect({step.u},{step.v}; {step.p},{step.q})"
    if isinstance(step, Foot):
        return f"{step.y} := foot({step.p}; {step.u},{step.v})"
    if isinstance(step, OnParallel):
        return f"{step.y} := on_parallel({step.w}; {step.u},{step.v}; {et.format_expr(step.r)})"
    if isinstance(step, OnPerpendicular):
        return f"{step.y} := on_perp({step.u},{step.v}; {et.format_expr(step.r)})"
    raise TypeError(f"unknown step {step!r}")


def format_goal(conj: Conjecture) -> str:
    if conj.origin:
        return f"prove {conj.origin}"
    if len(conj.clauses) != 1:
        raise ValueError("only single-clause goals or predicates can be printed")
    return f"prove {conj.clauses[0]}"


def format_source(src: SourceFile) -> str:
    lines = []
    if src.construction.parameters:
        lines.append("param " + " ".join(src.construction.parameters))
    for key, value in src.options.items():
        lines.append(f"option {key} = {value}")
    lines.extend(format_step(s) for s in src.construction.steps)
    lines.append(format_goal(src.conjecture))
    return "\n".join(lines) + "\n"
