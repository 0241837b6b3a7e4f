"""Identifier symbol conventions shared by the corpus reader, the
retrieval engine, and the formula calculator.

An identifier is a base symbol with subscript indices neglected: the
``c`` in ``a_c`` indexes ``a``, it is not a second unknown.  Font
decorations (bold, vector arrows, hats) carry no meaning here and are
reduced to the base letter.
"""

from __future__ import annotations

import re

# Names that appear inside <mi> or as \commands but denote functions,
# never unknowns.
FUNCTION_NAMES = frozenset({"sin", "cos", "tan", "log", "ln", "exp", "max", "min"})

# Decoration commands reduced to their argument's base symbol.
DECORATIONS = frozenset({"mathbf", "boldsymbol", "vec", "hat", "mathrm", "mathit"})

GREEK_COMMANDS = {
    "alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "epsilon": "ε",
    "varepsilon": "ε", "zeta": "ζ", "eta": "η", "theta": "θ", "vartheta": "θ",
    "iota": "ι", "kappa": "κ", "lambda": "λ", "mu": "μ", "nu": "ν", "xi": "ξ",
    "pi": "π", "rho": "ρ", "sigma": "σ", "tau": "τ", "upsilon": "υ",
    "phi": "ϕ", "varphi": "φ", "chi": "χ", "psi": "ψ", "omega": "ω",
    "Gamma": "Γ", "Delta": "Δ", "Theta": "Θ", "Lambda": "Λ", "Xi": "Ξ",
    "Pi": "Π", "Sigma": "Σ", "Phi": "Φ", "Psi": "Ψ", "Omega": "Ω",
}

GREEK_LETTERS = frozenset(GREEK_COMMANDS.values())

# Operator glyphs that may appear in catalog formula strings (from <mo>).
OPERATOR_TOKENS = frozenset(
    {"=", "+", "-", "−", "*", "·", "⋅", "×", "/", "^", "_", "(", ")", "{", "}",
     "[", "]", ",", "±", "≈", "<", ">", "≤", "≥", "→", "′", "!", "|"}
)

# Unicode subscript digits and letters occasionally typed directly.
_SUBSCRIPT_CHARS = "₀₁₂₃₄₅₆₇₈₉ₐₑₒₓₕₖₗₘₙₚₛₜᵢⱼ"

# A command name ends at the first non-letter, so \theta_1 is \theta
# followed by a subscript; \b would treat the underscore as word-internal.
_GREEK_CMD_RE = re.compile(
    r"\\(" + "|".join(sorted(GREEK_COMMANDS, key=len, reverse=True))
    + r")(?![a-zA-Z])"
)
_TEXT_GROUP_RE = re.compile(r"\\text\s*\{[^{}]*\}")
_COMMAND_RE = re.compile(r"\\[a-zA-Z]+")
_SUBSCRIPT_RE = re.compile(r"_(\{[^{}]*\}|.)")
# \vec{x} reduces to x in place, keeping d\vec{x} adjacent for the
# differential rule below
_DECORATED_GROUP_RE = re.compile(
    r"\\(?:" + "|".join(sorted(DECORATIONS)) + r")\s*\{([^{}]*)\}"
)


def _unwrap_decorations(s):
    previous = None
    while previous != s:
        previous = s
        s = _DECORATED_GROUP_RE.sub(r"\1", s)
    return s


def strip_subscript_chars(symbol):
    return "".join(ch for ch in symbol if ch not in _SUBSCRIPT_CHARS)


def is_identifier_symbol(token):
    """True for a token that names an unknown in a formula string."""
    if not token or token in OPERATOR_TOKENS:
        return False
    if token in FUNCTION_NAMES:
        return False
    first = token[0]
    return first.isalpha() or first in GREEK_LETTERS


def latex_to_unicode(text):
    """Replace Greek letter commands with their Unicode characters."""
    return _GREEK_CMD_RE.sub(lambda m: GREEK_COMMANDS[m.group(1)], text)


def identifiers_in_latex(formula):
    """Ordered distinct identifier symbols of a LaTeX-subset formula.

    Subscript groups are neglected, decorations and \\text blocks are
    dropped, a ``d`` that prefixes another letter is read as the
    differential operator.  ``π`` is a constant, never an identifier.
    """
    s = latex_to_unicode(formula)
    s = _TEXT_GROUP_RE.sub(" ", s)
    s = _unwrap_decorations(s)
    s = _SUBSCRIPT_RE.sub(" ", s)
    s = _COMMAND_RE.sub(" ", s)
    seen = []
    chars = list(s)
    for i, ch in enumerate(chars):
        if not (ch.isalpha() or ch in GREEK_LETTERS):
            continue
        if ch == "π":
            continue
        if ch == "d" and i + 1 < len(chars) and chars[i + 1].isalpha():
            continue  # differential prefix, as in dv/dt
        if ch not in seen:
            seen.append(ch)
    return seen


def identifiers_in_catalog_formula(formula):
    """Ordered distinct identifiers of a normalized catalog formula string.

    Catalog strings are space-separated token sequences; the token after
    ``_`` is a subscript index and is skipped.
    """
    seen = []
    tokens = formula.split()
    skip_next = False
    for tok in tokens:
        if skip_next:
            skip_next = False
            continue
        if tok == "_":
            skip_next = True
            continue
        if tok == "π":
            continue
        if is_identifier_symbol(tok) and tok not in seen:
            seen.append(tok)
    return seen


def symbol_occurs_in_formula(symbol, formula):
    """Containment check used when validating benchmark annotations."""
    if " " in formula.strip() and "\\" not in formula and "{" not in formula:
        # already a catalog-style token string
        found = identifiers_in_catalog_formula(formula)
        if symbol in found:
            return True
    s = latex_to_unicode(formula)
    s = _TEXT_GROUP_RE.sub(" ", s)
    s = _unwrap_decorations(s)
    s = _SUBSCRIPT_RE.sub(" ", s)  # the c in a_c is an index, not a use
    s = _COMMAND_RE.sub(" ", s)
    return all(ch in s for ch in symbol)
