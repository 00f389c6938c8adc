"""Recursive-descent parser and evaluator for small math expressions.

Grammar (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?          -- right-associative, so
                                             2^3^2 = 512 and -x^2 = -(x^2)
    atom   := number | name | name '(' expr ')' | '(' expr ')'
    number := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]

A name followed by '(' must be one of the builtins sin, cos, tan, exp,
ln, sqrt, abs; any other name is a variable and must be declared.
Implicit multiplication is rejected: write 2*x, not 2x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from .errors import CalcVerifyError, DomainError

BUILTIN_FUNCTIONS = ("sin", "cos", "tan", "exp", "ln", "sqrt", "abs")

_DEFAULT_IMPLS: dict[str, Callable[[float], float]] = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "exp": math.exp,
    "ln": math.log,
    "sqrt": math.sqrt,
    "abs": math.fabs,
}


class ParseError(CalcVerifyError):
    """Rejected input text; ``offset`` indexes at or before the bad byte."""

    def __init__(self, message: str, offset: int, expected: str | None = None):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.expected = expected

    def __str__(self) -> str:
        s = f"{self.message} at offset {self.offset}"
        if self.expected:
            s += f" (expected {self.expected})"
        return s


class EvalDomainError(DomainError):
    """Evaluation left the real domain; ``offset`` locates the culprit node."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: float
    offset: int


@dataclass(frozen=True)
class Var:
    name: str
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"
    offset: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"
    offset: int


Expr = Union[Num, Var, Neg, BinOp, Call]


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | NAME | OP | END
    text: str
    offset: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == ".":
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j >= n or not source[j].isdigit():
                    raise ParseError("malformed number", start, "digits in the exponent")
                i = j
                while i < n and source[i].isdigit():
                    i += 1
            tokens.append(_Token("NUMBER", source[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Token("NAME", source[start:i], start))
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        raise ParseError(
            f"unexpected character {ch!r}", i, "a number, name, operator, or parenthesis"
        )
    tokens.append(_Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], variables: Sequence[str]):
        self.tokens = tokens
        self.pos = 0
        self.variables = frozenset(variables)

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def _at_op(self, chars: str) -> bool:
        return self.cur.kind == "OP" and self.cur.text in chars

    def parse(self) -> Expr:
        e = self._expr()
        if self.cur.kind != "END":
            raise ParseError("trailing input", self.cur.offset, "end of input")
        return e

    def _expr(self) -> Expr:
        left = self._term()
        while self._at_op("+-"):
            op = self._advance()
            right = self._term()
            left = BinOp(op.text, left, right, op.offset)
        return left

    def _term(self) -> Expr:
        left = self._factor()
        while self._at_op("*/"):
            op = self._advance()
            right = self._factor()
            left = BinOp(op.text, left, right, op.offset)
        return left

    def _factor(self) -> Expr:
        if self._at_op("-"):
            tok = self._advance()
            return Neg(self._factor(), tok.offset)
        return self._power()

    def _power(self) -> Expr:
        base = self._atom()
        if self._at_op("^"):
            op = self._advance()
            exponent = self._factor()
            return BinOp("^", base, exponent, op.offset)
        return base

    def _atom(self) -> Expr:
        tok = self.cur
        if tok.kind == "NUMBER":
            self._advance()
            return Num(float(tok.text), tok.offset)
        if tok.kind == "NAME":
            self._advance()
            if self._at_op("("):
                if tok.text not in BUILTIN_FUNCTIONS:
                    raise ParseError(
                        f"unknown function '{tok.text}'",
                        tok.offset,
                        "one of " + ", ".join(BUILTIN_FUNCTIONS),
                    )
                self._advance()
                arg = self._expr()
                if not self._at_op(")"):
                    raise ParseError(
                        "unbalanced parenthesis", self.cur.offset, "')'"
                    )
                self._advance()
                return Call(tok.text, arg, tok.offset)
            if tok.text not in self.variables:
                raise ParseError(
                    f"unknown variable '{tok.text}'",
                    tok.offset,
                    "one of: " + ", ".join(sorted(self.variables)),
                )
            return Var(tok.text, tok.offset)
        if self._at_op("("):
            self._advance()
            e = self._expr()
            if not self._at_op(")"):
                raise ParseError("unbalanced parenthesis", self.cur.offset, "')'")
            self._advance()
            return e
        raise ParseError(
            "expected a value",
            tok.offset,
            "a number, variable, function call, or '('",
        )


def parse(source: str, variables: Sequence[str]) -> Expr:
    """Parse ``source`` over the declared variable names."""
    if len(variables) == 0:
        raise DomainError("at least one variable name is required")
    seen = set()
    for name in variables:
        if not (name.isidentifier() and name.isascii()):
            raise DomainError(f"variable name {name!r} is not an ASCII identifier")
        if name in seen:
            raise DomainError(f"duplicate variable name {name!r}")
        seen.add(name)
    return _Parser(_tokenize(source), variables).parse()


def evaluate(
    e: Expr,
    bindings: Mapping[str, float],
    functions: Optional[Mapping[str, Callable[[float], float]]] = None,
) -> float:
    """Evaluate over real arithmetic.

    Division by zero, ln of a non-positive value, sqrt of a negative,
    0 raised to a negative power, and any non-finite intermediate all
    raise EvalDomainError instead of propagating NaN/inf.  ``functions``
    can swap builtin implementations (e.g. CORDIC-backed sin/cos).
    """
    impls = _DEFAULT_IMPLS if functions is None else {**_DEFAULT_IMPLS, **functions}

    def check(v: float, offset: int) -> float:
        if not math.isfinite(v):
            raise EvalDomainError("non-finite result", offset)
        return v

    def ev(node: Expr) -> float:
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Var):
            try:
                return float(bindings[node.name])
            except KeyError:
                raise EvalDomainError(f"unbound variable '{node.name}'", node.offset) from None
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, BinOp):
            a = ev(node.left)
            b = ev(node.right)
            try:
                if node.op == "+":
                    v = a + b
                elif node.op == "-":
                    v = a - b
                elif node.op == "*":
                    v = a * b
                elif node.op == "/":
                    v = a / b
                else:
                    v = math.pow(a, b)
            except ZeroDivisionError:
                raise EvalDomainError("division by zero", node.offset) from None
            except ValueError:
                raise EvalDomainError(f"power {a!r} ^ {b!r} leaves the reals", node.offset) from None
            except OverflowError:
                raise EvalDomainError("overflow", node.offset) from None
            return check(v, node.offset)
        assert isinstance(node, Call)
        arg = ev(node.arg)
        try:
            v = impls[node.func](arg)
        except ValueError:
            raise EvalDomainError(f"{node.func}({arg!r}) is outside the real domain", node.offset) from None
        except OverflowError:
            raise EvalDomainError(f"{node.func}({arg!r}) overflows", node.offset) from None
        return check(v, node.offset)

    return ev(e)


def as_function(
    e: Expr,
    variables: Sequence[str],
    functions: Optional[Mapping[str, Callable[[float], float]]] = None,
) -> Callable[..., float]:
    """Wrap an Expr as a positional callable over ``variables``."""
    names = tuple(variables)

    def f(*values: float) -> float:
        return evaluate(e, dict(zip(names, values)), functions)

    return f


_PREC = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_NEG_PREC = 25


def _node_prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _NEG_PREC
    return 100


def to_string(e: Expr) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""

    def wrap(node: Expr, outer: int, tight: bool) -> str:
        p = _node_prec(node)
        s = render(node)
        if p < outer or (p == outer and tight):
            return f"({s})"
        return s

    def render(node: Expr) -> str:
        if isinstance(node, Num):
            return repr(node.value) if node.value >= 0 else f"({node.value!r})"
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Neg):
            return "-" + wrap(node.operand, _NEG_PREC, False)
        if isinstance(node, BinOp):
            p = _PREC[node.op]
            if node.op == "^":
                return wrap(node.left, p, True) + "^" + wrap(node.right, p, False)
            return wrap(node.left, p, False) + node.op + wrap(node.right, p, True)
        assert isinstance(node, Call)
        return f"{node.func}({render(node.arg)})"

    return render(e)
