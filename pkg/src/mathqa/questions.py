"""Question understanding over a closed template grammar.

Four intents are recognized:

  FORMULA_NAME          "What is the formula for momentum?"
  GEOMETRY              "What is the volume of a sphere?"
  RELATIONSHIP_NAMES    "What is the relationship between energy and mass?"
  RELATIONSHIP_SYMBOLS  "What is the relationship between the symbols m and E?"

plus the paraphrase frames "how to calculate X" and "give me the formula
for X".  Classification is case-insensitive; extracted names are lowercase
with edge stopwords removed, extracted symbols keep their case (m and M
are different identifiers).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import UnrecognizedQuestion
from .text import geometry_properties, is_stopword


class QuestionVariant(enum.Enum):
    FORMULA_NAME = "formula_name"
    GEOMETRY = "geometry"
    RELATIONSHIP_NAMES = "relationship_names"
    RELATIONSHIP_SYMBOLS = "relationship_symbols"


@dataclass(frozen=True)
class Triple:
    subject: str | None = None
    predicate: str | None = None
    obj: str | None = None


@dataclass(frozen=True)
class QuestionIntent:
    variant: QuestionVariant
    concept: str | None = None
    geometry_object: str | None = None
    geometry_property: str | None = None
    names: tuple = ()
    symbols: tuple = ()
    language: str = "en"

    def to_dict(self):
        payload = {"variant": self.variant.value, "language": self.language}
        for key in ("concept", "geometry_object", "geometry_property"):
            value = getattr(self, key)
            if value is not None:
                payload[key] = value
        if self.names:
            payload["names"] = list(self.names)
        if self.symbols:
            payload["symbols"] = list(self.symbols)
        return payload


_RELATION_KEYWORD_RE = re.compile(r"\brelation(?:s|ship|ships)?\b", re.IGNORECASE)
_BETWEEN_RE = re.compile(r"\bbetween\b\s*(.+)$", re.IGNORECASE | re.DOTALL)
_OPERAND_SPLIT_RE = re.compile(r"\s*,\s*|\s+and\s+", re.IGNORECASE)
_SYMBOL_KEYWORD_RE = re.compile(r"\bsymbols?\b", re.IGNORECASE)

# tokens that announce the operand list rather than belonging to a name
_OPERAND_FILLERS = frozenset(
    {"symbol", "symbols", "formula", "formulas", "constituent",
     "constituents", "quantity", "quantities", "following"}
)

# predicates that request a formula rather than naming part of the concept:
# "what is the formula for X" asks for X, but in "what is the speed of
# light" the whole phrase is the concept
_REQUEST_WORDS = frozenset({"formula", "equation", "expression", "definition"})

_WHAT_IS_RE = re.compile(
    r"^what\s*(?:is|are|'s|s)\s+(?:the\s+|a\s+|an\s+)?(.+?)\s+(of|for)\s+(.+)$",
    re.IGNORECASE | re.DOTALL,
)
_HOW_TO_RE = re.compile(
    r"^how\s+(?:to|do\s+(?:you|i|we)|can\s+(?:you|i|we))\s+"
    r"(?:calculate|compute|find|determine)\s+(?:the\s+|a\s+|an\s+)?(.+)$",
    re.IGNORECASE | re.DOTALL,
)
_GIVE_ME_RE = re.compile(
    r"^(?:please\s+)?(?:give|show|tell)\s+(?:me\s+|us\s+)?the\s+"
    r"(formula|equation)\s+(?:of|for)\s+(.+)$",
    re.IGNORECASE | re.DOTALL,
)


def _tidy(text):
    text = re.sub(r"\s+", " ", text).strip()
    return text.strip(" \t\"'").rstrip("?!.").rstrip()


def _strip_edge_stopwords(words):
    """Drop stopwords at either end, never emptying the phrase."""
    words = list(words)
    while len(words) > 1 and is_stopword(words[0]):
        words.pop(0)
    while len(words) > 1 and is_stopword(words[-1]):
        words.pop()
    return words


def _clean_phrase(text):
    words = _strip_edge_stopwords(text.lower().split())
    return " ".join(words)


def _relationship_operands(clause):
    operands = []
    for part in _OPERAND_SPLIT_RE.split(clause):
        words = [w for w in part.split() if w.lower() not in _OPERAND_FILLERS]
        words = _strip_edge_stopwords(words)
        if words and any(w.strip() for w in words):
            operands.append(" ".join(words))
    return operands


def _looks_like_symbol(operand):
    return (" " not in operand and len(operand) <= 2
            and not is_stopword(operand))


def to_triple(text):
    """Read "what is the X of/for Y" into a (Y, X, ?) triple."""
    tidied = _tidy(text)
    m = _WHAT_IS_RE.match(tidied)
    if m is None:
        raise UnrecognizedQuestion(text, triple=_partial_triple(tidied))
    predicate = _clean_phrase(m.group(1))
    subject = _clean_phrase(m.group(3))
    return Triple(subject=subject, predicate=predicate, obj=None)


def _partial_triple(tidied):
    m = re.match(r"^what\s*(?:is|are|'s|s)\s+(?:the\s+)?(.+)$", tidied,
                 re.IGNORECASE | re.DOTALL)
    if m:
        return Triple(predicate=_clean_phrase(m.group(1)))
    return Triple()


def _parse_relationship(text, tidied, language):
    m = _BETWEEN_RE.search(tidied)
    if m is None:
        raise UnrecognizedQuestion(text, triple=_partial_triple(tidied))
    operands = _relationship_operands(m.group(1))
    if len(operands) < 2:
        raise UnrecognizedQuestion(text, triple=_partial_triple(tidied))
    symbol_mode = (_SYMBOL_KEYWORD_RE.search(tidied) is not None
                   or all(_looks_like_symbol(op) for op in operands))
    if symbol_mode:
        return QuestionIntent(
            variant=QuestionVariant.RELATIONSHIP_SYMBOLS,
            symbols=tuple(operands),
            language=language,
        )
    return QuestionIntent(
        variant=QuestionVariant.RELATIONSHIP_NAMES,
        names=tuple(op.lower() for op in operands),
        language=language,
    )


def parse_question(text, language="en"):
    """Classify a question; raises UnrecognizedQuestion with whatever
    partial triple could still be read."""
    tidied = _tidy(text)
    if not tidied:
        raise UnrecognizedQuestion(text)

    if _RELATION_KEYWORD_RE.search(tidied):
        return _parse_relationship(text, tidied, language)

    predicate = complement = None
    m = _WHAT_IS_RE.match(tidied)
    if m is not None:
        predicate = _clean_phrase(m.group(1))
        complement = _clean_phrase(m.group(3))
        if (predicate not in _REQUEST_WORDS
                and predicate not in geometry_properties()):
            # "what is the speed of light": the split is not a request
            # wrapper, the whole phrase names the concept
            complement = _clean_phrase(
                f"{m.group(1)} {m.group(2)} {m.group(3)}"
            )
            predicate = "formula"
    else:
        m = _HOW_TO_RE.match(tidied)
        if m is not None:
            body = m.group(1)
            parts = re.split(r"\s+of\s+", body, maxsplit=1,
                             flags=re.IGNORECASE)
            if len(parts) == 2 and _clean_phrase(parts[0]) in \
                    geometry_properties():
                predicate = _clean_phrase(parts[0])
                complement = _clean_phrase(parts[1])
            else:
                # "calculate center of mass" keeps its inner "of"
                predicate = "formula"
                complement = _clean_phrase(body)
        else:
            m = _GIVE_ME_RE.match(tidied)
            if m is not None:
                predicate = m.group(1).lower()
                complement = _clean_phrase(m.group(2))

    if predicate is None or not complement:
        raise UnrecognizedQuestion(text, triple=_partial_triple(tidied))

    if predicate in geometry_properties():
        return QuestionIntent(
            variant=QuestionVariant.GEOMETRY,
            geometry_object=complement,
            geometry_property=predicate,
            language=language,
        )
    return QuestionIntent(
        variant=QuestionVariant.FORMULA_NAME,
        concept=complement,
        language=language,
    )
