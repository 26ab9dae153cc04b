"""Ket-expression front end.

Grammar, whitespace insignificant::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary | primary)*      # juxtaposition multiplies
    unary   := ('+' | '-') unary | primary
    primary := NUMBER | 'i' | 'sqrt' '(' expr ')' | '(' expr ')' | KET
    KET     := '|' DIGIT+ '>'

Sub-expressions evaluate either to a complex scalar or to a linear
combination of kets. Scalars scale kets, kets add to kets, and anything
else (ket times ket, ket plus bare scalar, dividing by a ket) is rejected
with the column where it happened.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import DEFAULT_TOL, PureState, Tolerances, make_state
from .errors import DigitExceedsDimension, InconsistentKetLength, KetSyntaxError

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ket>\|[^>|]*>?)
  | (?P<name>[A-Za-z_]+)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise KetSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "ket":
            body = m.group()
            if not body.endswith(">"):
                raise KetSyntaxError("unterminated ket, expected '>'", pos + len(body), text)
            label = body[1:-1].strip()
            if not label:
                raise KetSyntaxError("empty ket label", pos, text)
            if not label.isdigit() or not label.isascii():
                raise KetSyntaxError(f"ket label {label!r} must be digits 0-9", pos + 1, text)
            tokens.append(Token("ket", label, pos))
        elif kind == "name":
            word = m.group()
            if word not in ("i", "sqrt"):
                raise KetSyntaxError(f"unknown name {word!r}; only 'i' and 'sqrt' are allowed", pos, text)
            tokens.append(Token(word, word, pos))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Kets(dict):
    """Linear combination of kets: label -> complex coefficient."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.ket_len: Optional[int] = None
        self.ket_positions: dict[str, int] = {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, pos: Optional[int] = None) -> KetSyntaxError:
        return KetSyntaxError(message, self.tok.pos if pos is None else pos, self.text)

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind and self.tok.text != kind:
            found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            raise self.error(f"expected {what}, found {found}")
        return self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        left = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance()
            right = self.term()
            left = self.combine(left, right, sign=1 if op.text == "+" else -1, pos=op.pos)
        return left

    def combine(self, left, right, sign: int, pos: int):
        if isinstance(left, _Kets) and isinstance(right, _Kets):
            out = _Kets(left)
            for label, c in right.items():
                out[label] = out.get(label, 0) + sign * c
            return out
        if isinstance(left, _Kets) or isinstance(right, _Kets):
            raise self.error("cannot add a bare coefficient to a ket", pos)
        return left + sign * right

    def starts_primary(self) -> bool:
        return self.tok.kind in ("number", "ket", "i", "sqrt") or self.tok.text == "("

    def term(self):
        left = self.unary()
        while True:
            if self.tok.text in ("*", "/"):
                op = self.advance()
                right = self.unary()
                left = self.multiply(left, right, divide=op.text == "/", pos=op.pos)
            elif self.starts_primary():
                pos = self.tok.pos
                right = self.primary()
                left = self.multiply(left, right, divide=False, pos=pos)
            else:
                return left

    def multiply(self, left, right, divide: bool, pos: int):
        if divide:
            if isinstance(right, _Kets):
                raise self.error("cannot divide by a ket", pos)
            if right == 0:
                raise self.error("division by zero", pos)
            right = 1 / right
        if isinstance(left, _Kets) and isinstance(right, _Kets):
            raise self.error("product of two kets is not supported; write the joint ket instead", pos)
        if isinstance(left, _Kets):
            return _Kets({k: c * right for k, c in left.items()})
        if isinstance(right, _Kets):
            return _Kets({k: left * c for k, c in right.items()})
        return left * right

    def unary(self):
        if self.tok.text in ("+", "-"):
            op = self.advance()
            value = self.unary()
            if op.text == "+":
                return value
            if isinstance(value, _Kets):
                return _Kets({k: -c for k, c in value.items()})
            return -value
        return self.primary()

    def primary(self):
        t = self.tok
        if t.kind == "number":
            self.advance()
            return complex(float(t.text))
        if t.kind == "i":
            self.advance()
            return 1j
        if t.kind == "sqrt":
            self.advance()
            self.expect("(", "'(' after sqrt")
            arg = self.expr()
            if isinstance(arg, _Kets):
                raise self.error("sqrt of a ket", t.pos)
            self.expect(")", "')'")
            arg = complex(arg.real + 0.0, arg.imag + 0.0)  # -0.0 imag would pick the lower branch
            return complex(cmath.sqrt(arg)) if arg.imag or arg.real < 0 else complex(math.sqrt(arg.real))
        if t.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")", "')'")
            return value
        if t.kind == "ket":
            self.advance()
            if self.ket_len is None:
                self.ket_len = len(t.text)
            elif len(t.text) != self.ket_len:
                raise InconsistentKetLength(
                    f"ket |{t.text}> has {len(t.text)} digits, earlier kets have {self.ket_len}", t.pos, self.text
                )
            self.ket_positions.setdefault(t.text, t.pos)
            return _Kets({t.text: 1 + 0j})
        if t.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {t.text!r}")


def parse_ket_expr(
    text: str,
    dims_hint: Optional[Sequence[int]] = None,
    normalize: bool = False,
    tol: Tolerances = DEFAULT_TOL,
) -> PureState:
    """Parse text like ``"(|00> + |11>)/sqrt(2)"`` into a :class:`PureState`.

    Without ``dims_hint`` each party's dimension is one more than the largest
    digit seen in that position, and at least 2.
    """
    p = _Parser(text)
    value = p.parse()
    if not isinstance(value, _Kets):
        raise KetSyntaxError("expression contains no ket", 0, text)
    n = p.ket_len
    if dims_hint is not None:
        dims = tuple(int(d) for d in dims_hint)
        if len(dims) != n:
            raise InconsistentKetLength(f"kets have {n} digits but dims_hint names {len(dims)} parties", 0, text)
        for label, pos in p.ket_positions.items():
            for k, ch in enumerate(label):
                if int(ch) >= dims[k]:
                    raise DigitExceedsDimension(
                        f"digit {ch} at party {k} of |{label}> exceeds local dimension {dims[k]}", pos + 1 + k, text
                    )
    else:
        dims = tuple(max(2, 1 + max(int(label[k]) for label in value)) for k in range(n))
    amps = np.zeros(math.prod(dims), dtype=np.complex128)
    for label, c in value.items():
        amps[np.ravel_multi_index(tuple(int(ch) for ch in label), dims)] += c
    return make_state(dims, amps, normalize=normalize, tol=tol)


def _num(x: float, digits: int) -> str:
    s = f"{x:.{digits}g}"
    return "0" if s in ("-0", "0") else s


def _coefficient(c: complex, digits: int, imag_cut: float) -> tuple[str, str]:
    """Split ``c`` into a sign and an unsigned coefficient text."""
    re_, im = c.real, c.imag
    if abs(im) <= imag_cut:
        return ("-" if re_ < 0 else "+"), _num(abs(re_), digits)
    if abs(re_) <= imag_cut:
        return ("-" if im < 0 else "+"), _num(abs(im), digits) + "i"
    sign = "-" if im < 0 else "+"
    return "+", f"({_num(re_, digits)}{sign}{_num(abs(im), digits)}i)"


def format_state(state: PureState, threshold: float = 1e-12, digits: int = 7) -> str:
    """Render ``state`` as a ket expression, terms in ascending basis order.

    ``digits`` significant digits per coefficient; 17 makes the text lossless
    when parsed back with the same dims.
    """
    if max(state.dims) > 10:
        raise ValueError("ket labels are single digits; local dimensions above 10 cannot be written")
    imag_cut = max(threshold, 0.5 * 10.0 ** (-digits)) * 1e-3
    parts = []
    for idx in np.flatnonzero(np.abs(state.amps) > threshold):
        label = "".join(str(int(x)) for x in np.unravel_index(idx, state.dims))
        sign, coef = _coefficient(complex(state.amps[idx]), digits, imag_cut)
        parts.append((sign, f"{coef}|{label}>"))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
