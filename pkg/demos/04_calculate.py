# Turning an answered formula into a number
#
# Formulas arrive as LaTeX-flavored strings.  The calculator parses the
# algebraic subset (arithmetic, powers, fractions, roots, elementary
# functions, pi) into an expression tree and evaluates the right-hand
# side under explicit bindings.  Everything outside that subset raises
# a typed error naming the construct, so callers can explain *why* a
# formula is not a plug-in-numbers affair.

from mathqa.calculator import evaluate, list_unknowns, parse_formula
from mathqa.errors import (CalculationError, NonAlgebraicFormula,
                           UnboundIdentifiers)

# The happy path: parse once, ask what needs binding, evaluate.
expr = parse_formula("v = \\frac{s}{t}")
print("lhs:", expr.lhs_symbol)
print("unknowns:", list_unknowns(expr))
print("v =", evaluate(expr, {"s": 100.0, "t": 9.58}))

# Decorated identifiers unwrap to their base symbol, and the usual
# LaTeX spellings of multiplication and grouping are understood.
expr = parse_formula("E = mc^2")
print("\nE =", evaluate(expr, {"m": 1.0, "c": 299792458.0}))

expr = parse_formula("C = 2 \\pi r")
print("C =", evaluate(expr, {"r": 1.0}))

# Missing bindings fail with the symbols listed, not mid-arithmetic.
try:
    evaluate(parse_formula("v = s/t"), {"s": 100.0})
except UnboundIdentifiers as exc:
    print("\nunbound:", exc.symbols)

# Numeric trouble is reported by kind.
try:
    evaluate(parse_formula("v = s/t"), {"s": 1.0, "t": 0.0})
except CalculationError as exc:
    print("calculation error kind:", exc.kind)

# Non-algebraic structure is recognized, named, and refused up front --
# derivatives, vector products, summations, subscripted families.
for formula in ("\\mathbf{a} = \\frac{d\\mathbf{v}}{dt}",
                "L = r \\times p",
                "x_{cm} = \\frac{\\sum m_i x_i}{\\sum m_i}",
                "a_c = \\frac{v^2}{r}"):
    try:
        parse_formula(formula)
    except NonAlgebraicFormula as exc:
        print(f"{formula!r}: non-algebraic ({exc.construct})")
