"""A tiny total expression language over the edge endpoints ``x`` and ``y``.

Grammar (EBNF)::

    expr   := cond
    cond   := "if" cmp "then" expr "else" expr | cmp
    cmp    := sum (("<" | "<=" | "==" | "!=") sum)?
    sum    := term (("+" | "-") term)*
    term   := factor (("*" | "/" | "%") factor)*
    factor := nat | "x" | "y" | "min(" expr "," expr ")"
            | "max(" expr "," expr ")" | "(" expr ")" | "-" factor

All arithmetic is arbitrary-precision signed integer arithmetic; ``/`` is
floor division and ``%`` the matching floor remainder.  Comparisons yield 0
or 1 and the ``if`` condition treats any nonzero value as true.  By default
division and remainder are totalized at zero (``t / 0 == 0`` and
``t % 0 == t``); strict evaluation raises :class:`DivisionByZero` instead.

A coloring built from an expression evaluates it at ``(min(x, y),
max(x, y))`` and reduces the result modulo the color count, which makes it
symmetric and total by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .colorings import Coloring


class DslSyntaxError(ValueError):
    """Position-annotated parse failure with the token kinds expected there."""

    def __init__(self, position: int, expected: frozenset[str], found: str) -> None:
        self.position = position
        self.expected = expected
        self.found = found
        options = ", ".join(sorted(expected))
        super().__init__(
            f"syntax error at position {position}: expected one of {options}, "
            f"found {found}"
        )


class UnknownIdentifier(ValueError):
    def __init__(self, name: str, position: int) -> None:
        self.name = name
        self.position = position
        super().__init__(f"unknown identifier {name!r} at position {position}")


class DivisionByZero(ArithmeticError):
    def __init__(self, op: str) -> None:
        super().__init__(f"{op} by zero in strict mode")


# --- abstract syntax -----------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    name: str  # "x" or "y"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / % min max
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Cmp:
    op: str  # one of < <= == !=
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class If:
    cond: "Expr"
    then: "Expr"
    orelse: "Expr"


Expr = Union[Lit, Var, Neg, BinOp, Cmp, If]


# --- tokenizer -----------------------------------------------------------------

_SYMBOLS = ("<=", "==", "!=", "<", "+", "-", "*", "/", "%", "(", ")", ",")
_KEYWORDS = frozenset({"if", "then", "else", "min", "max", "x", "y"})


@dataclass(frozen=True)
class _Token:
    kind: str  # "nat", "name", a symbol, or "end"
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(_Token("nat", source[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("name", source[i:j], i))
            i = j
            continue
        for sym in _SYMBOLS:
            if source.startswith(sym, i):
                tokens.append(_Token(sym, sym, i))
                i += len(sym)
                break
        else:
            raise DslSyntaxError(i, frozenset({"operator", "number", "name"}), repr(ch))
    tokens.append(_Token("end", "", n))
    return tokens


# --- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _fail(self, expected: set[str]) -> DslSyntaxError:
        tok = self.current
        found = tok.text if tok.kind != "end" else "end of input"
        return DslSyntaxError(tok.pos, frozenset(expected), found)

    def _take(self, kind: str) -> _Token:
        if self.current.kind != kind:
            raise self._fail({kind})
        tok = self.current
        self.index += 1
        return tok

    def _at_keyword(self, name: str) -> bool:
        return self.current.kind == "name" and self.current.text == name

    def _take_keyword(self, name: str) -> None:
        if not self._at_keyword(name):
            raise self._fail({name})
        self.index += 1

    def parse(self) -> Expr:
        expr = self.expr()
        if self.current.kind != "end":
            raise self._fail({"end of input"})
        return expr

    def expr(self) -> Expr:
        return self.cond()

    def cond(self) -> Expr:
        if self._at_keyword("if"):
            self.index += 1
            cond = self.cmp()
            self._take_keyword("then")
            then = self.expr()
            self._take_keyword("else")
            orelse = self.expr()
            return If(cond, then, orelse)
        return self.cmp()

    def cmp(self) -> Expr:
        left = self.sum()
        if self.current.kind in ("<", "<=", "==", "!="):
            op = self.current.kind
            self.index += 1
            return Cmp(op, left, self.sum())
        return left

    def sum(self) -> Expr:
        node = self.term()
        while self.current.kind in ("+", "-"):
            op = self.current.kind
            self.index += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.current.kind in ("*", "/", "%"):
            op = self.current.kind
            self.index += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.current
        if tok.kind == "nat":
            self.index += 1
            return Lit(int(tok.text))
        if tok.kind == "-":
            self.index += 1
            return Neg(self.factor())
        if tok.kind == "(":
            self.index += 1
            inner = self.expr()
            self._take(")")
            return inner
        if tok.kind == "name":
            if tok.text in ("x", "y"):
                self.index += 1
                return Var(tok.text)
            if tok.text in ("min", "max"):
                self.index += 1
                self._take("(")
                left = self.expr()
                self._take(",")
                right = self.expr()
                self._take(")")
                return BinOp(tok.text, left, right)
            if tok.text in ("if", "then", "else"):
                raise self._fail({"number", "x", "y", "min", "max", "(", "-"})
            raise UnknownIdentifier(tok.text, tok.pos)
        raise self._fail({"number", "x", "y", "min", "max", "(", "-"})


def parse(source: str) -> Expr:
    """Parse a coloring expression; raises :class:`DslSyntaxError` or
    :class:`UnknownIdentifier` on bad input, never loops."""
    return _Parser(_tokenize(source)).parse()


# --- pretty printer ------------------------------------------------------------

# Precedence levels, loosest first; used to insert the minimal parentheses
# that the recursive-descent grammar needs to reparse the same shape.
_LEVEL_COND = 0
_LEVEL_CMP = 1
_LEVEL_SUM = 2
_LEVEL_TERM = 3
_LEVEL_FACTOR = 4


def _level(expr: Expr) -> int:
    if isinstance(expr, If):
        return _LEVEL_COND
    if isinstance(expr, Cmp):
        return _LEVEL_CMP
    if isinstance(expr, BinOp):
        if expr.op in ("+", "-"):
            return _LEVEL_SUM
        if expr.op in ("*", "/", "%"):
            return _LEVEL_TERM
        return _LEVEL_FACTOR  # min/max render as calls
    return _LEVEL_FACTOR


def _wrap(expr: Expr, floor: int) -> str:
    text = to_text(expr)
    return f"({text})" if _level(expr) < floor else text


def to_text(expr: Expr) -> str:
    """Canonical rendering; printing, parsing and printing again is a
    fixpoint."""
    if isinstance(expr, Lit):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Neg):
        return "-" + _wrap(expr.operand, _LEVEL_FACTOR)
    if isinstance(expr, Cmp):
        left = _wrap(expr.left, _LEVEL_SUM)
        right = _wrap(expr.right, _LEVEL_SUM)
        return f"{left} {expr.op} {right}"
    if isinstance(expr, If):
        cond = _wrap(expr.cond, _LEVEL_CMP)
        return f"if {cond} then {to_text(expr.then)} else {to_text(expr.orelse)}"
    if isinstance(expr, BinOp):
        if expr.op in ("min", "max"):
            return f"{expr.op}({to_text(expr.left)}, {to_text(expr.right)})"
        if expr.op in ("+", "-"):
            left = _wrap(expr.left, _LEVEL_SUM)
            right = _wrap(expr.right, _LEVEL_TERM)
        else:
            left = _wrap(expr.left, _LEVEL_TERM)
            right = _wrap(expr.right, _LEVEL_FACTOR)
        return f"{left} {expr.op} {right}"
    raise TypeError(f"not an expression node: {expr!r}")


# --- evaluation ----------------------------------------------------------------


def evaluate(expr: Expr, x: int, y: int, strict: bool = False) -> int:
    """Evaluate at concrete endpoints.  Total unless ``strict`` and a
    division or remainder hits a zero divisor."""
    if isinstance(expr, Lit):
        return expr.value
    if isinstance(expr, Var):
        return x if expr.name == "x" else y
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, x, y, strict)
    if isinstance(expr, Cmp):
        left = evaluate(expr.left, x, y, strict)
        right = evaluate(expr.right, x, y, strict)
        if expr.op == "<":
            return int(left < right)
        if expr.op == "<=":
            return int(left <= right)
        if expr.op == "==":
            return int(left == right)
        return int(left != right)
    if isinstance(expr, If):
        if evaluate(expr.cond, x, y, strict) != 0:
            return evaluate(expr.then, x, y, strict)
        return evaluate(expr.orelse, x, y, strict)
    if isinstance(expr, BinOp):
        left = evaluate(expr.left, x, y, strict)
        right = evaluate(expr.right, x, y, strict)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "min":
            return min(left, right)
        if expr.op == "max":
            return max(left, right)
        if expr.op == "/":
            if right == 0:
                if strict:
                    raise DivisionByZero("division")
                return 0
            return left // right
        if right == 0:
            if strict:
                raise DivisionByZero("remainder")
            return left
        return left % right
    raise TypeError(f"not an expression node: {expr!r}")


def dsl_coloring(source: str | Expr, k: int, strict: bool = False) -> Coloring:
    """Wrap an expression as a total symmetric coloring with ``k`` colors."""
    expr = parse(source) if isinstance(source, str) else source
    text = to_text(expr)
    return Coloring(
        k=k,
        pair_color=lambda lo, hi: evaluate(expr, lo, hi, strict) % k,
        name=f"dsl({text})",
    )
