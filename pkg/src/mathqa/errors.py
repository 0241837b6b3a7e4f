"""Exception types shared across the package."""

from __future__ import annotations


class MathQaError(Exception):
    """Base class for all package errors."""


class ValidationError(MathQaError):
    """A record or argument violates a documented constraint."""


class CatalogFormatError(MathQaError):
    """A catalog file is unreadable, truncated, or of an unknown version."""

    def __init__(self, message, path=None, line=None):
        if line is not None:
            message = f"{message} (line {line})"
        if path is not None:
            message = f"{message} [{path}]"
        super().__init__(message)
        self.path = path
        self.line = line


class UnrecognizedQuestion(MathQaError):
    """The question matched no known template.

    Carries whatever partial (subject, predicate, object) triple could be
    read off the text, for diagnostics.
    """

    def __init__(self, text, triple=None):
        super().__init__(f"unrecognized question: {text!r}")
        self.text = text
        self.triple = triple


class FormulaSyntaxError(MathQaError):
    """Malformed formula input: unbalanced braces, dangling operator, no '='."""


class NonAlgebraicFormula(MathQaError):
    """The formula parses as mathematics but falls outside the
    algebraic subset; ``construct`` names the offending construct."""

    def __init__(self, construct, detail=""):
        message = f"non-algebraic construct: {construct}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.construct = construct


class CalculationError(MathQaError):
    """Arithmetic failure during evaluation (division by zero, domain)."""

    def __init__(self, kind, detail=""):
        message = kind if not detail else f"{kind}: {detail}"
        super().__init__(message)
        self.kind = kind


class CalculatorContractError(MathQaError):
    """An operation was applied to a non-calculable expression."""


class UnboundIdentifiers(ValidationError):
    """Evaluation was requested with unknowns left unbound."""

    def __init__(self, symbols):
        super().__init__(f"unbound identifiers: {', '.join(symbols)}")
        self.symbols = tuple(symbols)


class TransportError(MathQaError):
    """The SPARQL endpoint could not be reached or returned garbage."""


class FixtureMissing(MathQaError):
    """Offline mode had no recorded response for the query."""

    def __init__(self, query_hash, fixture_dir):
        super().__init__(
            f"no recorded response for query hash {query_hash} in {fixture_dir}"
        )
        self.query_hash = query_hash


class SchemaDriftDetected(MathQaError):
    """A knowledge-graph response no longer matches either known
    annotation scheme or the expected column shape."""


class DisambiguationNeeded(MathQaError):
    """Several knowledge-graph items share the query label and none can be
    preferred automatically; ``candidates`` is a list of (qid, label)."""

    def __init__(self, label, candidates):
        names = ", ".join(qid for qid, _ in candidates)
        super().__init__(f"ambiguous label {label!r}: {names}")
        self.label = label
        self.candidates = list(candidates)


class ConfigurationError(MathQaError):
    """The service or CLI was configured inconsistently."""
