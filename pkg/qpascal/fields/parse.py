"""
Recursive-descent parser for the field-element syntax.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom   := INT | 'z' '(' INT ')' | 'L' | '(' expr ')'

``z(N)`` is zeta_N and ``L`` the indeterminate lambda_1.
"""

from __future__ import annotations

from typing import Any, List, Optional, Tuple

from ..errors import ConductorMismatch, DivisionByZero, ExprSyntaxError
from .cyclotomic import Cyc
from .poly import Poly
from .ratfunc import VAR, RatFunc

Token = Tuple[str, str, int]  # (kind, text, position)


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == "z":
            tokens.append(("z", ch, i))
            i += 1
        elif ch == VAR:
            tokens.append(("var", ch, i))
            i += 1
        else:
            raise ExprSyntaxError(text, i, f"unexpected character {ch!r}")
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self, kind: Optional[str] = None) -> Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            raise ExprSyntaxError(self.text, tok[2], f"expected {expected}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def expr(self) -> Any:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Any:
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, at = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise DivisionByZero(f"division by zero at position {at} in {self.text!r}")
                value = value / rhs
        return value

    def unary(self) -> Any:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Any:
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        at = self.take()[2]
        k = self.exponent()
        if k < 0 and not base:
            raise DivisionByZero(f"negative power of zero at position {at} in {self.text!r}")
        return base**k

    def exponent(self) -> int:
        wrapped = self.peek()[0] == "("
        if wrapped:
            self.take()
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        k = int(self.take("int")[1])
        if wrapped:
            self.take(")")
        return sign * k

    def atom(self) -> Any:
        kind, tok_text, at = self.peek()
        if kind == "int":
            self.take()
            return Cyc.rational(int(tok_text))
        if kind == "z":
            self.take()
            self.take("(")
            n_tok = self.take("int")
            n = int(n_tok[1])
            if n < 1:
                raise ExprSyntaxError(self.text, n_tok[2], "conductor must be positive")
            self.take(")")
            return Cyc.zeta(n)
        if kind == "var":
            self.take()
            return RatFunc.variable()
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        found = "end of input" if kind == "end" else repr(tok_text)
        raise ExprSyntaxError(
            self.text, at, f"expected a number, z(N), {VAR} or '(', found {found}"
        )


def _embed_into(value: Any, conductor: int) -> Any:
    if isinstance(value, Cyc):
        return value.embed(conductor)
    if isinstance(value, RatFunc):
        return RatFunc(
            value.num.map_coeffs(lambda c: _as_cyc_in(c, conductor)),
            value.den.map_coeffs(lambda c: _as_cyc_in(c, conductor)),
            normalized=True,
        )
    return value


def _as_cyc_in(c: Any, conductor: int) -> Cyc:
    if isinstance(c, Cyc):
        return c.embed(conductor)
    return Cyc.rational(c).embed(conductor)


def parse_element(text: str, conductor: Optional[int] = None) -> Any:
    """Parse one element; the result is a Cyc, or a RatFunc when ``L`` occurs.

    With a conductor hint the value is embedded into Q(zeta_conductor); a value whose
    conductor does not divide the hint raises ConductorMismatch.
    """
    if not text or not text.strip():
        raise ExprSyntaxError(text, 0, "empty expression")
    parser = _Parser(text)
    value = parser.expr()
    parser.take("end")
    if isinstance(value, RatFunc) and value.is_constant():
        value = value.constant_value()
    if conductor is not None:
        if conductor < 1:
            raise ConductorMismatch(0, conductor)
        value = _embed_into(value, conductor)
    return value


def split_top_level(text: str) -> List[Tuple[str, int]]:
    """Split on commas outside parentheses; returns (piece, offset) pairs."""
    pieces: List[Tuple[str, int]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


def parse_list(text: str, conductor: Optional[int] = None) -> List[Any]:
    """Parse a comma-separated list of elements; positions refer to the whole text."""
    out: List[Any] = []
    for piece, offset in split_top_level(text):
        try:
            out.append(parse_element(piece, conductor))
        except ExprSyntaxError as e:
            raise ExprSyntaxError(text, offset + e.position, e.msg) from None
    return out


def parse_poly(text: str, var: str = VAR) -> Poly:
    """Parse a polynomial in L; a constant parses to a constant polynomial."""
    value = parse_element(text)
    if isinstance(value, RatFunc):
        if not value.is_polynomial():
            raise ExprSyntaxError(text, 0, "expected a polynomial, found a quotient")
        return value.num.scale(1 / value.den.lc).with_var(var)
    return Poly([value], var)
