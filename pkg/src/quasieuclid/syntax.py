"""Parser for the textual polynomial syntax used on the command line.

Accepted forms include rational coefficients ("3/2*x^2 - x + 5"), a single
trailing denominator ("(x^2 + x)/2", "x/2"), implicit multiplication
("3x"), parentheses, and unary signs.  Division is restricted to nonzero
rational constants on the right.
"""

from __future__ import annotations

from .poly import RingElement, as_element


class ParseError(ValueError):
    """The input is not a valid polynomial expression."""


_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch in ("x", "X"):
            tokens.append(("x", 0))
            i += 1
        elif ch in _OPS:
            tokens.append((ch, 0))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> RingElement:
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RingElement:
        value = self.unary()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op, _ = self.take()
                rhs = self.unary()
                value = value * rhs if op == "*" else _div_const(value, rhs)
            elif nxt in ("x", "(") or nxt == "int":
                # implicit multiplication, e.g. "3x" or "2(x+1)"
                value = value * self.unary()
            else:
                return value

    def unary(self) -> RingElement:
        if self.peek() in ("+", "-"):
            op, _ = self.take()
            value = self.unary()
            return value if op == "+" else -value
        return self.power()

    def power(self) -> RingElement:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                raise ParseError("negative exponents are not supported")
            kind, value = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer")
            return base ** (sign * value)
        return base

    def atom(self) -> RingElement:
        if self.peek() is None:
            raise ParseError("unexpected end of expression")
        kind, value = self.take()
        if kind == "int":
            return as_element(value)
        if kind == "x":
            return RingElement((0, 1))
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("missing closing parenthesis")
            self.take()
            return inner
        raise ParseError(f"unexpected token {kind!r}")


def _div_const(value: RingElement, divisor: RingElement) -> RingElement:
    if divisor.is_zero:
        raise ParseError("division by zero in expression")
    if divisor.degree > 0:
        raise ParseError("division is only supported by rational constants")
    # multiply by the reciprocal of the constant
    return value * RingElement((divisor.den,), divisor.num[0])


def parse_element(text: str) -> RingElement:
    """Parse an expression into a normalized element of Q[x]."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial expression")
    parser = _Parser(_tokenize(text))
    value = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input starting at token {parser.pos}")
    return value
