"""A second evaluator for the algebraic formula language, written from
scratch as a test oracle: recursive descent straight to floats, no AST,
no imports from mathqa.  Dual-route evaluation over random bindings
pins the grammar down; a disagreement means one of the two is wrong.

Grammar (loosest first), operators left-associative:

    equation := expr "=" expr          (right side is evaluated)
    expr     := term (("+"|"-") term)*
    term     := unary (("*"|"/") unary | unary)*      juxtaposition = *
    unary    := ("+"|"-") unary | power
    power    := atom ("^" ("{" expr "}" | unary))?
    atom     := number | identifier | "\\frac{..}{..}" | sqrt | call
              | "(" expr ")" | "{" expr "}"
"""

import math

GREEK = {
    "alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "epsilon": "ε",
    "varepsilon": "ε", "zeta": "ζ", "eta": "η", "theta": "θ", "vartheta": "θ",
    "iota": "ι", "kappa": "κ", "lambda": "λ", "mu": "μ", "nu": "ν", "xi": "ξ",
    "rho": "ρ", "sigma": "σ", "tau": "τ", "upsilon": "υ", "phi": "ϕ",
    "varphi": "φ", "chi": "χ", "psi": "ψ", "omega": "ω",
    "Gamma": "Γ", "Delta": "Δ", "Theta": "Θ", "Lambda": "Λ", "Xi": "Ξ",
    "Pi": "Π", "Sigma": "Σ", "Phi": "Φ", "Psi": "Ψ", "Omega": "Ω",
}
GREEK_CHARS = set(GREEK.values())
DECORATIONS = ("mathbf", "boldsymbol", "vec", "hat", "mathrm", "mathit")
FUNCTIONS = {"sin": math.sin, "cos": math.cos, "tan": math.tan,
             "log": math.log10, "ln": math.log, "exp": math.exp}


class TwinFailure(Exception):
    """This evaluator cannot handle the input (not a verdict on mathqa)."""


def _lex(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "\\":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            if j == i + 1:
                raise TwinFailure("lone backslash")
            word = text[i + 1:j]
            i = j
            if word == "pi":
                toks.append(("num", math.pi))
            elif word in GREEK:
                toks.append(("id", GREEK[word]))
            elif word in FUNCTIONS:
                toks.append(("fn", word))
            elif word == "frac":
                toks.append(("frac", None))
            elif word == "sqrt":
                toks.append(("sqrt", None))
            elif word == "cdot":
                toks.append(("op", "*"))
            elif word in ("left", "right"):
                pass
            elif word in DECORATIONS:
                while i < n and text[i].isspace():
                    i += 1
                if i >= n or text[i] != "{":
                    raise TwinFailure(f"\\{word} without a group")
                close = text.find("}", i)
                if close < 0:
                    raise TwinFailure("unclosed decoration group")
                inner = _lex(text[i + 1:close])
                i = close + 1
                if len(inner) != 1 or inner[0][0] != "id":
                    raise TwinFailure("decoration around a non-identifier")
                toks.append(inner[0])
            else:
                raise TwinFailure(f"unsupported command \\{word}")
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j + 1 < n and text[j] == "." and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            toks.append(("num", float(text[i:j])))
            i = j
        elif c == "π":
            toks.append(("num", math.pi))
            i += 1
        elif c == "√":
            toks.append(("sqrt", None))
            i += 1
        elif c in "+-*/^=":
            toks.append(("op", c))
            i += 1
        elif c == "−":
            toks.append(("op", "-"))
            i += 1
        elif c in "·⋅":
            toks.append(("op", "*"))
            i += 1
        elif c in "(){}":
            toks.append((c, None))
            i += 1
        elif c.isalpha() or c in GREEK_CHARS:
            toks.append(("id", c))
            i += 1
        else:
            raise TwinFailure(f"unexpected character {c!r}")
    return toks


_ATOM_HEADS = {"num", "id", "frac", "sqrt", "fn", "(", "{"}


class _Walker:
    def __init__(self, toks, env):
        self.toks = toks
        self.env = env
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def next(self):
        kind, value = self.peek()
        if kind is None:
            raise TwinFailure("ran off the end")
        self.i += 1
        return kind, value

    def expr(self):
        value = self.term()
        while True:
            kind, op = self.peek()
            if kind == "op" and op in "+-":
                self.i += 1
                right = self.term()
                value = value + right if op == "+" else value - right
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, op = self.peek()
            if kind == "op" and op in "*/":
                self.i += 1
                right = self.unary()
                value = value * right if op == "*" else value / right
            elif kind in _ATOM_HEADS:
                value = value * self.unary()
            else:
                return value

    def unary(self):
        kind, op = self.peek()
        if kind == "op" and op in "+-":
            self.i += 1
            inner = self.unary()
            return inner if op == "+" else -inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, op = self.peek()
        if kind == "op" and op == "^":
            self.i += 1
            if self.peek()[0] == "{":
                exponent = self.group("{", "}")
            else:
                exponent = self.unary()
            return base ** exponent
        return base

    def group(self, open_tok, close_tok):
        kind, _ = self.next()
        if kind != open_tok:
            raise TwinFailure(f"expected {open_tok!r}")
        value = self.expr()
        kind, _ = self.next()
        if kind != close_tok:
            raise TwinFailure(f"expected {close_tok!r}")
        return value

    def atom(self):
        kind, value = self.next()
        if kind == "num":
            return value
        if kind == "id":
            if value not in self.env:
                raise TwinFailure(f"unbound {value!r}")
            return float(self.env[value])
        if kind == "frac":
            numerator = self.group("{", "}")
            denominator = self.group("{", "}")
            return numerator / denominator
        if kind == "sqrt":
            if self.peek()[0] == "(":
                return math.sqrt(self.group("(", ")"))
            return math.sqrt(self.group("{", "}"))
        if kind == "fn":
            head = self.peek()[0]
            if head == "(":
                argument = self.group("(", ")")
            elif head == "{":
                argument = self.group("{", "}")
            else:
                argument = self.power()
            return FUNCTIONS[value](argument)
        if kind == "(":
            self.i -= 1
            return self.group("(", ")")
        if kind == "{":
            self.i -= 1
            return self.group("{", "}")
        raise TwinFailure(f"no atom starts with {kind!r}")


def evaluate_rhs(formula, env):
    """Value of the right side of ``lhs = rhs`` under ``env``."""
    toks = _lex(formula)
    splits = [k for k, (kind, value) in enumerate(toks)
              if kind == "op" and value == "="]
    if len(splits) != 1:
        raise TwinFailure("need exactly one '='")
    walker = _Walker(toks[splits[0] + 1:], env)
    value = walker.expr()
    if walker.peek()[0] is not None:
        raise TwinFailure("trailing tokens after expression")
    return value
