"""Element expressions over a tower.

Grammar, loosest binding first::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | power
    power := atom ("^" INT)?
    atom  := INT | "x(" INT "," INT ")" | "y(" INT "," INT ")" | "p(" INT ")" | "(" expr ")"

Expressions evaluate at the top level of the tower; generators born lower
are lifted.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .exceptions import ExprSyntaxError, UnknownGeneratorError
from .ring.elements import PrimeId, PrimeKind, RingElement
from .ring.primes import TrackedPrime
from .ring.tower import Tower


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Gen:
    """A tracked prime by name: x(i,k), y(i,k) or p(i)."""

    pid: PrimeId


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Int, Gen, Add, Sub, Mul, Neg, Pow]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[xyp])|(?P<op>[-+*^(),]))")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = len(text) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[offset]!r}", offset, text)
        kind = match.lastgroup or ""
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def offset(self) -> int:
        token = self.peek()
        return token[2] if token is not None else len(self.text)

    def error(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.offset(), self.text)

    def accept(self, value: str) -> bool:
        token = self.peek()
        if token is not None and token[0] == "op" and token[1] == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            raise self.error(f"expected {value!r}")

    def integer(self) -> int:
        token = self.peek()
        if token is None or token[0] != "int":
            raise self.error("expected an integer")
        self.pos += 1
        return int(token[1])

    def parse(self) -> Expr:
        if not self.tokens:
            raise self.error("empty expression")
        expr = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()[1]!r}")  # type: ignore[index]
        return expr

    def expr(self) -> Expr:
        left = self.term()
        while True:
            if self.accept("+"):
                left = Add(left, self.term())
            elif self.accept("-"):
                left = Sub(left, self.term())
            else:
                return left

    def term(self) -> Expr:
        left = self.unary()
        while self.accept("*"):
            left = Mul(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.accept("^"):
            return Pow(base, self.integer())
        return base

    def atom(self) -> Expr:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of expression")
        kind, value, _ = token
        if kind == "int":
            self.pos += 1
            return Int(int(value))
        if kind == "name":
            self.pos += 1
            self.expect("(")
            i = self.integer()
            if value == "p":
                self.expect(")")
                return Gen(PrimeId.base(i))
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return Gen(PrimeId.gen_x(i, k) if value == "x" else PrimeId.gen_y(i, k))
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"unexpected {value!r}")


def parse_expr(text: str) -> Expr:
    """Parse an element expression; syntax errors carry the offending offset."""
    return _Parser(text).parse()


def eval_expr(tower: Tower, expr: Union[Expr, str], level: Optional[int] = None) -> RingElement:
    """Evaluate at ``level`` (default: the top level)."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    level = tower.top_index if level is None else level
    return _eval(tower, expr, level)


def _eval(tower: Tower, expr: Expr, level: int) -> RingElement:
    if isinstance(expr, Int):
        return tower.int_const(level, expr.value)
    if isinstance(expr, Gen):
        prime: Optional[TrackedPrime]
        if expr.pid.kind is PrimeKind.BASE:
            prime = tower.registry.base_prime(expr.pid.i)
        else:
            prime = tower.registry.find(expr.pid)
        if prime is None or prime.birth_level > level:
            raise UnknownGeneratorError(f"tower has no generator {expr.pid} at level {level}")
        return tower.registry.element(prime.id, level)
    if isinstance(expr, Add):
        return tower.add(_eval(tower, expr.left, level), _eval(tower, expr.right, level))
    if isinstance(expr, Sub):
        return tower.sub(_eval(tower, expr.left, level), _eval(tower, expr.right, level))
    if isinstance(expr, Mul):
        return tower.mul(_eval(tower, expr.left, level), _eval(tower, expr.right, level))
    if isinstance(expr, Neg):
        return tower.neg(_eval(tower, expr.operand, level))
    return tower.power(_eval(tower, expr.base, level), expr.exponent)
