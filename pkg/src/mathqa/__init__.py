"""Semantic formula search and mathematical question answering.

Catalogs mined from text windows around formulas answer four question
shapes (formula by concept name, geometry property, identifier-name and
identifier-symbol relationships); a knowledge-graph client supplies
curated formulas and identifier annotations; a small LaTeX-subset
calculator evaluates the answers.
"""

from .calculator import evaluate, list_unknowns, parse_formula, render
from .catalogs import (
    Catalog,
    CatalogKind,
    build_formula_catalog,
    build_identifier_catalog,
    build_symbol_formula_catalog,
    invert_catalog,
    load_catalog,
    save_catalog,
)
from .corpus import (
    Document,
    GoldRecord,
    IdentifierAnnotation,
    Source,
    extract_formula_occurrences,
    load_corpus,
    load_gold_benchmark,
)
from .errors import (
    CalculationError,
    CatalogFormatError,
    ConfigurationError,
    DisambiguationNeeded,
    FixtureMissing,
    FormulaSyntaxError,
    MathQaError,
    NonAlgebraicFormula,
    SchemaDriftDetected,
    TransportError,
    UnboundIdentifiers,
    UnrecognizedQuestion,
    ValidationError,
)
from .evaluation import dcg, run_mode, run_modes, score_results, top1_accuracy
from .kg import EndpointConfig, KnowledgeGraph, QueryCache, SparqlQuery
from .questions import QuestionIntent, QuestionVariant, parse_question
from .retrieval import (
    CatalogSet,
    build_catalog_set,
    formulas_by_concept,
    formulas_by_identifiers,
    load_catalog_set,
    names_to_symbols,
    save_catalog_set,
    symbols_to_names,
)
from .service import AnswerEnvelope, FormulaAnswer, Outcome, QaService

__version__ = "0.1.0"

__all__ = [
    "AnswerEnvelope",
    "CalculationError",
    "Catalog",
    "CatalogFormatError",
    "CatalogKind",
    "CatalogSet",
    "ConfigurationError",
    "DisambiguationNeeded",
    "Document",
    "EndpointConfig",
    "FixtureMissing",
    "FormulaAnswer",
    "FormulaSyntaxError",
    "GoldRecord",
    "IdentifierAnnotation",
    "KnowledgeGraph",
    "MathQaError",
    "NonAlgebraicFormula",
    "Outcome",
    "QaService",
    "QueryCache",
    "QuestionIntent",
    "QuestionVariant",
    "SchemaDriftDetected",
    "Source",
    "SparqlQuery",
    "TransportError",
    "UnboundIdentifiers",
    "UnrecognizedQuestion",
    "ValidationError",
    "build_catalog_set",
    "build_formula_catalog",
    "build_identifier_catalog",
    "build_symbol_formula_catalog",
    "dcg",
    "evaluate",
    "extract_formula_occurrences",
    "formulas_by_concept",
    "formulas_by_identifiers",
    "invert_catalog",
    "list_unknowns",
    "load_catalog",
    "load_catalog_set",
    "load_corpus",
    "load_gold_benchmark",
    "names_to_symbols",
    "parse_formula",
    "parse_question",
    "render",
    "run_mode",
    "run_modes",
    "save_catalog",
    "save_catalog_set",
    "score_results",
    "symbols_to_names",
    "top1_accuracy",
    "__version__",
]
