"""Question answering service: parse the question, fetch candidate
formulas from the knowledge graph (first choice) or a semantic index
(fallback), annotate identifiers, and drive the calculator.

Failures never escape answer_question; they surface as envelope
outcomes (NO_RESULT, DISAMBIGUATION_NEEDED, UNRECOGNIZED) plus
diagnostics.  calculate() raises typed errors which the API layer maps
to machine-readable codes via error_code().
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import retrieval
from .calculator import evaluate, list_unknowns, parse_formula
from .corpus import Source
from .errors import (
    CalculationError,
    CalculatorContractError,
    ConfigurationError,
    DisambiguationNeeded,
    FixtureMissing,
    FormulaSyntaxError,
    NonAlgebraicFormula,
    SchemaDriftDetected,
    TransportError,
    UnboundIdentifiers,
    UnrecognizedQuestion,
    ValidationError,
)
from .identifiers import identifiers_in_catalog_formula, identifiers_in_latex
from .questions import QuestionVariant, parse_question

# constants the calculator may fill in unasked; user bindings always win
GLOBAL_CONSTANT_SYMBOLS = frozenset({"c", "h", "G"})

MAX_ALTERNATIVES = 9


class Provenance(enum.Enum):
    KG = "KG"
    ARXIV_INDEX = "ARXIV_INDEX"
    WIKIPEDIA_INDEX = "WIKIPEDIA_INDEX"


class Outcome(enum.Enum):
    ANSWERED = "ANSWERED"
    NO_RESULT = "NO_RESULT"
    DISAMBIGUATION_NEEDED = "DISAMBIGUATION_NEEDED"
    UNRECOGNIZED = "UNRECOGNIZED"


class BindingOrigin(enum.Enum):
    USER = "USER"
    CONSTANT = "CONSTANT"


_INDEX_PROVENANCE = {
    Source.ARXIV: Provenance.ARXIV_INDEX,
    Source.WIKIPEDIA: Provenance.WIKIPEDIA_INDEX,
}


@dataclass(frozen=True)
class IdentifierInfo:
    symbol: str
    name: str | None = None
    qid: str | None = None
    constant_value: float | None = None
    bindable: bool = True

    def to_dict(self):
        return {
            "symbol": self.symbol,
            "name": self.name,
            "qid": self.qid,
            "constant_value": self.constant_value,
            "bindable": self.bindable,
        }


@dataclass(frozen=True)
class Alternative:
    formula: str
    concept_name: str | None = None
    qid: str | None = None

    def to_dict(self):
        return {"formula": self.formula, "concept_name": self.concept_name,
                "qid": self.qid}


@dataclass(frozen=True)
class FormulaAnswer:
    formula: str
    concept_name: str | None
    qid: str | None
    identifiers: tuple
    provenance: Provenance
    alternatives: tuple = ()
    lhs: str | None = None
    calculable: bool = False
    non_algebraic: str | None = None

    def to_dict(self):
        return {
            "formula": self.formula,
            "concept_name": self.concept_name,
            "qid": self.qid,
            "identifiers": [i.to_dict() for i in self.identifiers],
            "provenance": self.provenance.value,
            "alternatives": [a.to_dict() for a in self.alternatives],
            "lhs": self.lhs,
            "calculable": self.calculable,
            "non_algebraic": self.non_algebraic,
        }


@dataclass(frozen=True)
class AnswerEnvelope:
    intent: object  # QuestionIntent, or None when unrecognized
    answer: FormulaAnswer | None
    outcome: Outcome
    diagnostics: tuple = ()

    def to_dict(self):
        return {
            "intent": self.intent.to_dict() if self.intent else None,
            "answer": self.answer.to_dict() if self.answer else None,
            "outcome": self.outcome.value,
            "diagnostics": list(self.diagnostics),
        }


def _formula_shape(formula):
    """(lhs symbol, calculable, non-algebraic construct) of a formula."""
    try:
        expr = parse_formula(formula)
    except NonAlgebraicFormula as exc:
        return None, False, exc.construct
    except FormulaSyntaxError:
        return None, False, None
    return expr.lhs_symbol, expr.calculable, None


class QaService:
    """One loaded instance of the whole pipeline.

    indices maps Source.ARXIV / Source.WIKIPEDIA to CatalogSet; kg is an
    optional KnowledgeGraph.  Constants default to the knowledge graph's
    recorded numeric values, restricted to the universal symbols.
    """

    _INDEX_SOURCES = (Source.ARXIV, Source.WIKIPEDIA)

    def __init__(self, indices=None, kg=None, constants=None, k=10):
        self.indices = dict(indices or {})
        for key in self.indices:
            if key not in self._INDEX_SOURCES:
                valid = ", ".join(s.name for s in self._INDEX_SOURCES)
                raise ConfigurationError(
                    f"unknown index source {key!r}: use one of {valid}"
                )
        self.kg = kg
        self.k = k
        if constants is None:
            constants = {}
            if kg is not None:
                constants = {
                    symbol: value
                    for symbol, value in kg.constants().items()
                    if symbol in GLOBAL_CONSTANT_SYMBOLS
                }
        self.constants = dict(constants)
        if not self.indices and self.kg is None:
            raise ConfigurationError(
                "service needs at least one source (index or knowledge graph)"
            )

    # ------------------------------------------------------------ sources

    def source_inventory(self):
        inventory = []
        if Source.ARXIV in self.indices:
            inventory.append("arxiv-index")
        if Source.WIKIPEDIA in self.indices:
            inventory.append("wikipedia-index")
        if self.kg is not None:
            inventory.append("knowledge-graph")
        return inventory

    # ------------------------------------------------------------ answers

    def answer_question(self, text, lang="en"):
        if lang != "en":
            return AnswerEnvelope(
                intent=None, answer=None, outcome=Outcome.UNRECOGNIZED,
                diagnostics=(f"language {lang!r} is not supported; use 'en'",),
            )
        try:
            intent = parse_question(text)
        except UnrecognizedQuestion as exc:
            return AnswerEnvelope(
                intent=None, answer=None, outcome=Outcome.UNRECOGNIZED,
                diagnostics=(str(exc),),
            )

        diagnostics = []
        try:
            answer = self._route(intent, diagnostics)
        except DisambiguationNeeded as exc:
            listing = [f"candidate {qid}: {label}" for qid, label in exc.candidates]
            return AnswerEnvelope(
                intent=intent, answer=None,
                outcome=Outcome.DISAMBIGUATION_NEEDED,
                diagnostics=(f"ambiguous concept {exc.label!r}", *listing),
            )
        if answer is None:
            diagnostics.append("no candidate formula in any configured source")
            return AnswerEnvelope(intent=intent, answer=None,
                                  outcome=Outcome.NO_RESULT,
                                  diagnostics=tuple(diagnostics))
        return AnswerEnvelope(intent=intent, answer=answer,
                              outcome=Outcome.ANSWERED,
                              diagnostics=tuple(diagnostics))

    def _route(self, intent, diagnostics):
        variant = intent.variant
        if variant is QuestionVariant.FORMULA_NAME:
            answer = self._kg_concept(intent.concept, diagnostics)
            if answer is None:
                answer = self._index_concept(intent.concept, diagnostics)
            return answer
        if variant is QuestionVariant.GEOMETRY:
            answer = self._kg_geometry(intent, diagnostics)
            if answer is None:
                phrase = f"{intent.geometry_property} {intent.geometry_object}"
                answer = self._index_concept(phrase, diagnostics)
            return answer
        if variant is QuestionVariant.RELATIONSHIP_NAMES:
            answer = self._kg_relationship_names(intent.names, diagnostics)
            if answer is None:
                answer = self._index_relationship(intent.names, "names",
                                                  diagnostics)
            return answer
        answer = self._kg_relationship_symbols(intent.symbols, diagnostics)
        if answer is None:
            answer = self._index_relationship(intent.symbols, "symbols",
                                              diagnostics)
        return answer

    # ------------------------------------------------------------ KG side

    def _kg_guard(self, action, diagnostics):
        """Run a KG callable; infrastructure failures become diagnostics."""
        if self.kg is None:
            return None
        try:
            return action()
        except (TransportError, FixtureMissing, SchemaDriftDetected) as exc:
            diagnostics.append(f"knowledge graph unavailable: {exc}")
            return None

    def _kg_answer(self, candidates, concept_name=None):
        first = candidates[0]
        links = []
        if self.kg is not None:
            try:
                links = self.kg.identifier_links(first["qid"])
            except (TransportError, FixtureMissing, SchemaDriftDetected):
                links = []
        alternatives = tuple(
            Alternative(formula=c["formula"], concept_name=c.get("label"),
                        qid=c.get("qid"))
            for c in candidates[1:1 + MAX_ALTERNATIVES]
        )
        link_info = {
            link.symbol: (link.name, link.linked_qid, link.constant_value)
            for link in links
        }
        return self._make_answer(
            formula=first["formula"],
            concept_name=concept_name or first.get("label"),
            qid=first.get("qid"),
            link_info=link_info,
            provenance=Provenance.KG,
            alternatives=alternatives,
            extractor=identifiers_in_latex,
        )

    def _kg_concept(self, concept, diagnostics):
        if self.kg is None:
            return None
        try:
            resolved = self.kg.resolve_concept(concept)
        except (TransportError, FixtureMissing, SchemaDriftDetected) as exc:
            diagnostics.append(f"knowledge graph unavailable: {exc}")
            return None
        if resolved is None:
            diagnostics.append(
                f"knowledge graph has no item labeled {concept!r}"
            )
            return None
        chosen, others = resolved
        if not chosen["formula"]:
            diagnostics.append(
                f"knowledge graph item {chosen['qid']} has no defining formula"
            )
            return None
        candidates = [chosen] + [c for c in others if c.get("formula")]
        return self._kg_answer(candidates)

    def _kg_geometry(self, intent, diagnostics):
        candidates = self._kg_guard(
            lambda: self.kg.geometry_candidates(intent.geometry_object,
                                                intent.geometry_property),
            diagnostics,
        )
        if not candidates:
            return None
        name = f"{intent.geometry_property} of {intent.geometry_object}"
        return self._kg_answer(candidates, concept_name=name)

    def _kg_relationship_names(self, names, diagnostics):
        if self.kg is None:
            return None
        qids = []
        for name in names:
            found = self._kg_guard(lambda n=name: self.kg.label_to_qids(n),
                                   diagnostics)
            if not found:
                diagnostics.append(
                    f"knowledge graph has no item labeled {name!r}"
                )
                return None
            qids.append(found[0][0])
        if len(qids) < 2:
            return None
        candidates = self._kg_guard(
            lambda: self.kg.relationship_candidates(qids), diagnostics
        )
        if not candidates:
            return None
        return self._kg_answer(candidates)

    def _kg_relationship_symbols(self, symbols, diagnostics):
        candidates = self._kg_guard(
            lambda: self.kg.formulas_by_symbols(symbols), diagnostics
        )
        if not candidates:
            return None
        return self._kg_answer(candidates)

    # ------------------------------------------------------------ indices

    def _index_results(self, intent_kind, query_or_operands, catalogs):
        if intent_kind == "concept":
            return retrieval.formulas_by_concept(
                query_or_operands, catalogs.term_to_formula, self.k
            )
        operands, mode = query_or_operands
        if len(operands) < 2:
            return []
        return retrieval.formulas_by_identifiers(operands, mode, catalogs,
                                                 self.k)

    def _index_answer(self, source, results, concept_name=None):
        catalogs = self.indices[source]
        first = results[0]
        alternatives = tuple(
            Alternative(formula=r.value)
            for r in results[1:1 + MAX_ALTERNATIVES]
        )
        link_info = {}
        for symbol in identifiers_in_catalog_formula(first.value):
            names = retrieval.symbols_to_names(symbol, catalogs.symbol_to_name,
                                               k=1)
            link_info[symbol] = (names[0].value if names else None, None, None)
        return self._make_answer(
            formula=first.value,
            concept_name=concept_name,
            qid=None,
            link_info=link_info,
            provenance=_INDEX_PROVENANCE[source],
            alternatives=alternatives,
            extractor=identifiers_in_catalog_formula,
        )

    def _index_concept(self, phrase, diagnostics):
        for source in (Source.ARXIV, Source.WIKIPEDIA):
            catalogs = self.indices.get(source)
            if catalogs is None:
                continue
            results = self._index_results("concept", phrase, catalogs)
            if results:
                diagnostics.append(
                    f"answered from the {source.value} index"
                )
                return self._index_answer(source, results, concept_name=phrase)
        return None

    def _index_relationship(self, operands, mode, diagnostics):
        for source in (Source.ARXIV, Source.WIKIPEDIA):
            catalogs = self.indices.get(source)
            if catalogs is None:
                continue
            try:
                results = self._index_results("identifiers", (operands, mode),
                                              catalogs)
            except ValidationError:
                return None
            if results:
                diagnostics.append(
                    f"answered from the {source.value} index"
                )
                return self._index_answer(source, results)
        return None

    # ------------------------------------------------------------ shaping

    def _make_answer(self, formula, concept_name, qid, link_info, provenance,
                     alternatives, extractor):
        """link_info: symbol -> (name, qid, constant_value)."""
        lhs, calculable, construct = _formula_shape(formula)
        ordered = list(extractor(formula))
        for symbol in link_info:
            if symbol not in ordered:
                ordered.append(symbol)
        infos = []
        for symbol in ordered:
            name, link_qid, constant = link_info.get(symbol, (None, None, None))
            bindable = constant is None and symbol != lhs
            infos.append(
                IdentifierInfo(symbol=symbol, name=name, qid=link_qid,
                               constant_value=constant, bindable=bindable)
            )
        return FormulaAnswer(
            formula=formula,
            concept_name=concept_name,
            qid=qid,
            identifiers=tuple(infos),
            provenance=provenance,
            alternatives=alternatives,
            lhs=lhs,
            calculable=calculable,
            non_algebraic=construct,
        )

    # ------------------------------------------------------------ calculate

    def calculate(self, formula, bindings=None):
        """Evaluate ``lhs = rhs`` under the bindings; unbound universal
        constants are filled from the service's constant table."""
        expr = parse_formula(formula)
        unknowns = list_unknowns(expr)
        merged = {}
        origins = {}
        for symbol, value in (bindings or {}).items():
            try:
                merged[symbol] = float(value)
            except (TypeError, ValueError):
                raise ValidationError(
                    f"binding {symbol}={value!r} is not numeric"
                )
            origins[symbol] = BindingOrigin.USER
        for symbol in unknowns:
            if symbol not in merged and symbol in self.constants:
                merged[symbol] = self.constants[symbol]
                origins[symbol] = BindingOrigin.CONSTANT
        value = evaluate(expr, merged)
        return {
            "lhs": expr.lhs_symbol,
            "value": value,
            "bindings": {
                symbol: {"value": merged[symbol],
                         "origin": origins[symbol].value}
                for symbol in sorted(merged)
            },
        }


def error_code(exc):
    """Machine-readable code for a calculate() failure."""
    if isinstance(exc, NonAlgebraicFormula):
        return "non_algebraic"
    if isinstance(exc, FormulaSyntaxError):
        return "syntax_error"
    if isinstance(exc, UnboundIdentifiers):
        return "unbound_identifiers"
    if isinstance(exc, CalculationError):
        return exc.kind.replace(" ", "_")
    if isinstance(exc, CalculatorContractError):
        return "not_calculable"
    if isinstance(exc, ValidationError):
        return "invalid_request"
    return "internal_error"
