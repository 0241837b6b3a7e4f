"""Formula calculator over a LaTeX subset.

The grammar covers equations of the shape ``lhs = rhs`` with numbers,
single-letter identifiers (Greek commands and Unicode Greek included,
font decorations reduced to the base letter), ``+ - / ^``, ``\\cdot`` and
juxtaposition for multiplication, ``\\frac``, ``\\sqrt``, ``\\pi``, and the
function calls sin, cos, tan, log, ln, exp.

Anything mathematical but outside that subset raises NonAlgebraicFormula
naming the construct: derivatives (``\\frac{dv}{dt}`` shapes, ``\\partial``),
cross products (``\\times``), sums, subscripts, chained equations, unknown
commands.  Only genuinely malformed input (unbalanced braces, dangling
operators, a missing ``=``) is a syntax error.

A formula is calculable when its left side is a single identifier; only
calculable formulas can be evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CalculationError,
    CalculatorContractError,
    FormulaSyntaxError,
    NonAlgebraicFormula,
    UnboundIdentifiers,
    ValidationError,
)
from .identifiers import DECORATIONS, GREEK_COMMANDS, GREEK_LETTERS


# ---------------------------------------------------------------- AST

@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Identifier:
    symbol: str


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * / ^
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class Frac:
    numerator: object
    denominator: object


@dataclass(frozen=True)
class Sqrt:
    child: object


@dataclass(frozen=True)
class Call:
    function: str
    argument: object


@dataclass(frozen=True)
class Equation:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class FormulaExpression:
    equation: Equation
    calculable: bool

    @property
    def lhs_symbol(self):
        lhs = self.equation.lhs
        return lhs.symbol if isinstance(lhs, Identifier) else None


# ---------------------------------------------------------------- tokens

(_NUM, _IDENT, _OP, _LBRACE, _RBRACE, _LPAREN, _RPAREN,
 _FRAC, _SQRT, _FUNC, _SUB, _TEXT) = range(12)

_KIND_NAMES = {_NUM: "number", _IDENT: "identifier", _OP: "operator",
               _LBRACE: "'{'", _RBRACE: "'}'", _LPAREN: "'('",
               _RPAREN: "')'", _FRAC: "\\frac", _SQRT: "\\sqrt",
               _FUNC: "function", _SUB: "'_'", _TEXT: "text block"}


@dataclass(frozen=True)
class _Token:
    kind: int
    value: object = None
    decorated: bool = False


_OP_MAP = {"+": "+", "-": "-", "−": "-", "*": "*", "·": "*", "⋅": "*",
           "/": "/", "^": "^", "=": "="}

# single-argument functions evaluate() knows; \max and \min have no
# one-argument meaning, so they fall through to the unknown-command path
_EVALUABLE_FUNCTIONS = frozenset({"sin", "cos", "tan", "log", "ln", "exp"})

_NONALGEBRAIC_COMMANDS = {
    "times": "cross product",
    "sum": "summation",
    "prod": "product",
    "int": "integral",
    "oint": "integral",
    "partial": "derivative",
    "nabla": "gradient",
    "infty": "infinity",
}


def _group_span(text, i):
    """Inner text of a {...} group starting at or after text[i] and the
    offset just past its closing brace."""
    n = len(text)
    while i < n and text[i].isspace():
        i += 1
    if i >= n or text[i] != "{":
        raise FormulaSyntaxError("expected '{' after command")
    depth = 0
    for j in range(i, n):
        if text[j] == "{":
            depth += 1
        elif text[j] == "}":
            depth -= 1
            if depth == 0:
                return text[i + 1:j], j + 1
    raise FormulaSyntaxError("unbalanced braces")


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "\\":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            if j == i + 1:
                raise FormulaSyntaxError(f"stray backslash at offset {i}")
            name = text[i + 1:j]
            i = j
            if name == "pi":
                # the circle constant, not an unknown; must win over the
                # Greek-letter lookup
                tokens.append(_Token(_NUM, math.pi))
            elif name in GREEK_COMMANDS:
                tokens.append(_Token(_IDENT, GREEK_COMMANDS[name]))
            elif name == "frac":
                tokens.append(_Token(_FRAC))
            elif name == "sqrt":
                tokens.append(_Token(_SQRT))
            elif name == "cdot":
                tokens.append(_Token(_OP, "*"))
            elif name in ("left", "right"):
                pass
            elif name in _EVALUABLE_FUNCTIONS:
                tokens.append(_Token(_FUNC, name))
            elif name in _NONALGEBRAIC_COMMANDS:
                raise NonAlgebraicFormula(_NONALGEBRAIC_COMMANDS[name])
            elif name in DECORATIONS:
                inner, i = _group_span(text, i)
                inner_tokens = _tokenize(inner)
                if len(inner_tokens) != 1 or inner_tokens[0].kind != _IDENT:
                    raise NonAlgebraicFormula(
                        "decorated expression", detail=f"\\{name}{{{inner}}}"
                    )
                tokens.append(_Token(_IDENT, inner_tokens[0].value,
                                     decorated=True))
            elif name == "text":
                _, i = _group_span(text, i)
                tokens.append(_Token(_TEXT))
            else:
                raise NonAlgebraicFormula(f"\\{name}")
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j + 1 < n and text[j] == "." and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(_Token(_NUM, float(text[i:j])))
            i = j
        elif ch == "π":
            tokens.append(_Token(_NUM, math.pi))
            i += 1
        elif ch == "√":
            tokens.append(_Token(_SQRT))
            i += 1
        elif ch == "×":
            raise NonAlgebraicFormula("cross product")
        elif ch in _OP_MAP:
            tokens.append(_Token(_OP, _OP_MAP[ch]))
            i += 1
        elif ch == "_":
            tokens.append(_Token(_SUB))
            i += 1
        elif ch == "{":
            tokens.append(_Token(_LBRACE))
            i += 1
        elif ch == "}":
            tokens.append(_Token(_RBRACE))
            i += 1
        elif ch == "(":
            tokens.append(_Token(_LPAREN))
            i += 1
        elif ch == ")":
            tokens.append(_Token(_RPAREN))
            i += 1
        elif ch.isalpha() or ch in GREEK_LETTERS:
            tokens.append(_Token(_IDENT, ch))
            i += 1
        else:
            raise FormulaSyntaxError(f"unexpected character {ch!r} at offset {i}")
    return tokens


# ---------------------------------------------------------------- parser

_ATOM_STARTERS = {_NUM, _IDENT, _FRAC, _SQRT, _FUNC, _LPAREN, _LBRACE, _TEXT}


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of formula")
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of formula" if tok is None else _KIND_NAMES[tok.kind]
            raise FormulaSyntaxError(f"expected {_KIND_NAMES[kind]}, found {found}")
        return self.take()

    # expression grammar, loosest binding first

    def parse_expr(self):
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == _OP and tok.value in ("+", "-"):
                self.take()
                node = Binary(tok.value, node, self.parse_term())
            else:
                return node

    def parse_term(self):
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok is None:
                return node
            if tok.kind == _SUB:
                raise NonAlgebraicFormula("subscript")
            if tok.kind == _OP and tok.value in ("*", "/"):
                self.take()
                node = Binary(tok.value, node, self.parse_unary())
            elif tok.kind in _ATOM_STARTERS:
                node = Binary("*", node, self.parse_unary())
            else:
                return node

    def parse_unary(self):
        tok = self.peek()
        if tok is not None and tok.kind == _OP and tok.value in ("+", "-"):
            self.take()
            child = self.parse_unary()
            return child if tok.value == "+" else Neg(child)
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        tok = self.peek()
        if tok is not None and tok.kind == _SUB:
            raise NonAlgebraicFormula("subscript")
        if tok is not None and tok.kind == _OP and tok.value == "^":
            self.take()
            nxt = self.peek()
            if nxt is not None and nxt.kind == _LBRACE:
                exponent = self.parse_group(_LBRACE, _RBRACE)
            else:
                exponent = self.parse_unary()
            return Binary("^", base, exponent)
        return base

    def parse_group(self, open_kind, close_kind):
        self.expect(open_kind)
        node = self.parse_expr()
        self.expect(close_kind)
        return node

    def group_tokens(self):
        """Token slice of a braced group, for lookahead before parsing."""
        self.expect(_LBRACE)
        depth = 1
        start = self.pos
        while self.pos < len(self.tokens):
            kind = self.tokens[self.pos].kind
            if kind == _LBRACE:
                depth += 1
            elif kind == _RBRACE:
                depth -= 1
                if depth == 0:
                    inner = self.tokens[start:self.pos]
                    self.pos += 1
                    return inner
            self.pos += 1
        raise FormulaSyntaxError("unbalanced braces")

    def parse_atom(self):
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("expected a value, found end of formula")
        if tok.kind == _NUM:
            self.take()
            return Number(tok.value)
        if tok.kind == _IDENT:
            self.take()
            return Identifier(tok.value)
        if tok.kind == _FRAC:
            self.take()
            return self.parse_frac()
        if tok.kind == _SQRT:
            self.take()
            nxt = self.peek()
            if nxt is not None and nxt.kind == _LPAREN:
                return Sqrt(self.parse_group(_LPAREN, _RPAREN))
            return Sqrt(self.parse_group(_LBRACE, _RBRACE))
        if tok.kind == _FUNC:
            self.take()
            nxt = self.peek()
            if nxt is not None and nxt.kind == _LPAREN:
                return Call(tok.value, self.parse_group(_LPAREN, _RPAREN))
            if nxt is not None and nxt.kind == _LBRACE:
                return Call(tok.value, self.parse_group(_LBRACE, _RBRACE))
            return Call(tok.value, self.parse_power())
        if tok.kind == _LPAREN:
            return self.parse_group(_LPAREN, _RPAREN)
        if tok.kind == _LBRACE:
            return self.parse_group(_LBRACE, _RBRACE)
        if tok.kind == _TEXT:
            raise NonAlgebraicFormula("text block")
        if tok.kind == _SUB:
            raise NonAlgebraicFormula("subscript")
        raise FormulaSyntaxError(
            f"expected a value, found {_KIND_NAMES[tok.kind]}"
        )

    def parse_frac(self):
        numerator = self.group_tokens()
        denominator = self.group_tokens()
        if _is_differential(numerator) and _is_differential(denominator):
            raise NonAlgebraicFormula("derivative")
        return Frac(_parse_tokens(numerator), _parse_tokens(denominator))


def _is_differential(tokens):
    return (len(tokens) >= 2
            and tokens[0].kind == _IDENT and tokens[0].value == "d"
            and not tokens[0].decorated
            and tokens[1].kind == _IDENT)


def _parse_tokens(tokens):
    parser = _Parser(tokens)
    node = parser.parse_expr()
    leftover = parser.peek()
    if leftover is not None:
        if leftover.kind == _SUB:
            raise NonAlgebraicFormula("subscript")
        raise FormulaSyntaxError(
            f"unexpected {_KIND_NAMES[leftover.kind]} after expression"
        )
    return node


def parse_formula(text):
    """Parse ``lhs = rhs`` into a FormulaExpression."""
    if not text or not text.strip():
        raise FormulaSyntaxError("empty formula")
    tokens = _tokenize(text)
    split_points = [k for k, t in enumerate(tokens)
                    if t.kind == _OP and t.value == "="]
    if not split_points:
        raise FormulaSyntaxError("formula has no '='")
    if len(split_points) > 1:
        raise NonAlgebraicFormula("chained equation")
    k = split_points[0]
    lhs = _parse_tokens(tokens[:k])
    rhs = _parse_tokens(tokens[k + 1:])
    equation = Equation(lhs, rhs)
    return FormulaExpression(equation=equation,
                             calculable=isinstance(lhs, Identifier))


# ---------------------------------------------------------------- walkers

def _identifiers(node, out):
    if isinstance(node, Identifier):
        if node.symbol not in out:
            out.append(node.symbol)
    elif isinstance(node, Binary):
        _identifiers(node.left, out)
        _identifiers(node.right, out)
    elif isinstance(node, Neg):
        _identifiers(node.child, out)
    elif isinstance(node, Frac):
        _identifiers(node.numerator, out)
        _identifiers(node.denominator, out)
    elif isinstance(node, Sqrt):
        _identifiers(node.child, out)
    elif isinstance(node, Call):
        _identifiers(node.argument, out)


def _require_calculable(expr):
    if not isinstance(expr, FormulaExpression):
        raise CalculatorContractError("expected a FormulaExpression")
    if not expr.calculable:
        raise CalculatorContractError(
            "formula is not calculable: left side is not a single identifier"
        )


def list_unknowns(expr, bindings=None):
    """Right-side identifiers in first-occurrence order, minus bindings."""
    _require_calculable(expr)
    bound = set(bindings or ())
    unknowns = []
    _identifiers(expr.equation.rhs, unknowns)
    return [sym for sym in unknowns if sym not in bound]


def _check_bindings(expr, bindings):
    rhs_symbols = []
    _identifiers(expr.equation.rhs, rhs_symbols)
    lhs_symbol = expr.lhs_symbol
    for symbol, value in bindings.items():
        if symbol == lhs_symbol:
            raise ValidationError(
                f"cannot bind {symbol!r}: it is the computed left side"
            )
        if symbol not in rhs_symbols:
            raise ValidationError(
                f"cannot bind {symbol!r}: not an identifier of the formula"
            )
        if not isinstance(value, (int, float)) or isinstance(value, bool) \
                or not math.isfinite(float(value)):
            raise ValidationError(f"binding {symbol!r} must be a finite number")
    missing = [sym for sym in rhs_symbols if sym not in bindings]
    if missing:
        raise UnboundIdentifiers(missing)


_CALL_TABLE = {
    "sin": math.sin, "cos": math.cos, "tan": math.tan,
    "log": math.log10, "ln": math.log, "exp": math.exp,
}


def _eval(node, bindings):
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Identifier):
        return float(bindings[node.symbol])
    if isinstance(node, Neg):
        return -_eval(node.child, bindings)
    if isinstance(node, Frac):
        den = _eval(node.denominator, bindings)
        if den == 0.0:
            raise CalculationError("division by zero")
        return _eval(node.numerator, bindings) / den
    if isinstance(node, Sqrt):
        arg = _eval(node.child, bindings)
        if arg < 0.0:
            raise CalculationError("math domain", "square root of a negative")
        return math.sqrt(arg)
    if isinstance(node, Call):
        arg = _eval(node.argument, bindings)
        fn = _CALL_TABLE[node.function]
        try:
            return fn(arg)
        except ValueError:
            raise CalculationError(
                "math domain", f"{node.function}({arg})"
            ) from None
        except OverflowError:
            raise CalculationError("overflow", f"{node.function}({arg})") from None
    if isinstance(node, Binary):
        left = _eval(node.left, bindings)
        right = _eval(node.right, bindings)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            if right == 0.0:
                raise CalculationError("division by zero")
            return left / right
        if node.op == "^":
            try:
                result = left ** right
            except ZeroDivisionError:
                raise CalculationError("division by zero") from None
            except OverflowError:
                raise CalculationError("overflow", f"{left} ^ {right}") from None
            if isinstance(result, complex):
                raise CalculationError(
                    "math domain", "negative base with fractional exponent"
                )
            return result
    raise CalculatorContractError(f"unknown node {node!r}")


def evaluate(expr, bindings):
    """Value of the left side under the bindings; standard 64-bit floats."""
    _require_calculable(expr)
    _check_bindings(expr, bindings)
    result = _eval(expr.equation.rhs, bindings)
    if not math.isfinite(result):
        raise CalculationError("overflow", "result is not finite")
    return result


# ---------------------------------------------------------------- render

_PREC_ATOM = 4
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


def _prec(node):
    if isinstance(node, Binary):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 1
    return _PREC_ATOM


def _wrap(child, parent_prec, right_of_left_assoc=False,
          left_of_right_assoc=False):
    text = _render(child)
    prec = _prec(child)
    if prec < parent_prec:
        return f"({text})"
    if prec == parent_prec and (right_of_left_assoc or left_of_right_assoc):
        return f"({text})"
    return text


def _render_number(value):
    if value == math.pi:
        return "\\pi"
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))


def _render(node):
    if isinstance(node, Number):
        return _render_number(node.value)
    if isinstance(node, Identifier):
        return node.symbol
    if isinstance(node, Neg):
        return "-" + _wrap(node.child, 2)
    if isinstance(node, Frac):
        return f"\\frac{{{_render(node.numerator)}}}{{{_render(node.denominator)}}}"
    if isinstance(node, Sqrt):
        return f"\\sqrt{{{_render(node.child)}}}"
    if isinstance(node, Call):
        return f"\\{node.function}({_render(node.argument)})"
    if isinstance(node, Binary):
        prec = _PREC[node.op]
        if node.op == "^":
            left = _wrap(node.left, prec, left_of_right_assoc=_prec(node.left) == prec)
            right = _render(node.right)
            if _prec(node.right) != _PREC_ATOM:
                right = f"{{{right}}}"
            return f"{left} ^ {right}"
        left = _wrap(node.left, prec)
        right = _wrap(node.right, prec, right_of_left_assoc=_prec(node.right) == prec)
        joiner = " " if node.op == "*" else f" {node.op} "
        return f"{left}{joiner}{right}"
    if isinstance(node, Equation):
        return f"{_render(node.lhs)} = {_render(node.rhs)}"
    raise CalculatorContractError(f"cannot render {node!r}")


def render(expr_or_node):
    """Canonical string form; parsing it back yields an equal tree."""
    if isinstance(expr_or_node, FormulaExpression):
        return _render(expr_or_node.equation)
    return _render(expr_or_node)
