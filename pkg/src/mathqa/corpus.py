"""Corpus model: documents with embedded Presentation-MathML, the formula
occurrences extracted from them, and the gold benchmark records.

A corpus is a directory tree of UTF-8 text files.  The first path segment
under the root names the subject class; files directly under the root have
none.  Math regions are delimited by ``<math`` and ``</math>`` in the raw
body and must be well-formed XML to be read; a region that does not parse
is skipped with a warning, never fatally.
"""

from __future__ import annotations

import enum
import warnings
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ValidationError
from .identifiers import (
    FUNCTION_NAMES,
    strip_subscript_chars,
    symbol_occurs_in_formula,
)
from .text import normalize_formula

MATH_OPEN = "<math"
MATH_CLOSE = "</math>"


class Source(enum.Enum):
    ARXIV = "arxiv"
    WIKIPEDIA = "wikipedia"
    FIXTURE = "fixture"
    WIKIDATA = "wikidata"  # labels knowledge-graph-derived catalogs only


@dataclass(frozen=True)
class Document:
    doc_id: str
    body: str
    source: Source
    subject_classes: tuple = ()

    def __post_init__(self):
        if not self.doc_id:
            raise ValidationError("doc_id must be non-empty")


@dataclass(frozen=True)
class FormulaOccurrence:
    """One math region: its normalized token string, raw character span
    in the document body, and the distinct identifier symbols it binds."""

    doc_id: str
    formula: str
    span: tuple
    identifiers: tuple


@dataclass(frozen=True)
class IdentifierAnnotation:
    symbol: str
    name: str
    item_id: str | None = None


@dataclass(frozen=True)
class GoldRecord:
    gold_id: int
    qid: str
    concept_name: str
    formula: str
    annotations: tuple = ()
    synonyms: dict = field(default_factory=dict)


def math_region_spans(body):
    """Raw character spans of math regions, in document order.

    An opening tag without a matching close runs to the end of the body
    and is reported as unbalanced by the extractor.
    """
    spans = []
    pos = 0
    while True:
        start = body.find(MATH_OPEN, pos)
        if start == -1:
            break
        end = body.find(MATH_CLOSE, start)
        if end == -1:
            spans.append((start, len(body), False))
            break
        end += len(MATH_CLOSE)
        spans.append((start, end, True))
        pos = end
    return spans


def _local(tag):
    return tag.rsplit("}", 1)[-1]


_SKIPPED_TAGS = {"annotation", "annotation-xml", "mspace", "mphantom"}


def _serialize(el, out):
    """Flatten a MathML element into its operator/identifier token list."""
    tag = _local(el.tag)
    if tag in _SKIPPED_TAGS:
        return
    children = list(el)
    if tag in ("mi", "mo", "mn", "mtext"):
        text = (el.text or "").strip()
        if text:
            out.append(text)
    elif tag in ("msub", "msubsup") and len(children) >= 2:
        _serialize(children[0], out)
        out.append("_")
        _serialize(children[1], out)
        if tag == "msubsup" and len(children) >= 3:
            out.append("^")
            _serialize(children[2], out)
    elif tag == "msup" and len(children) >= 2:
        _serialize(children[0], out)
        out.append("^")
        _serialize(children[1], out)
    elif tag == "mfrac" and len(children) >= 2:
        _serialize(children[0], out)
        out.append("/")
        _serialize(children[1], out)
    elif tag == "msqrt":
        out.append("√")
        out.append("(")
        for c in children:
            _serialize(c, out)
        out.append(")")
    elif tag in ("mover", "munder", "munderover") and children:
        # accents and arrows are decorations; keep the base only
        _serialize(children[0], out)
    else:
        for c in children:
            _serialize(c, out)


def _collect_identifiers(el, out, in_subscript=False):
    tag = _local(el.tag)
    if tag in _SKIPPED_TAGS:
        return
    if tag == "mi" and not in_subscript:
        text = strip_subscript_chars((el.text or "").strip())
        if text and text not in FUNCTION_NAMES and text not in out:
            out.append(text)
        return
    children = list(el)
    if tag in ("mover", "munder", "munderover") and children:
        children = children[:1]
    for i, child in enumerate(children):
        sub = in_subscript or (tag in ("msub", "msubsup") and i == 1)
        _collect_identifiers(child, out, sub)


def extract_formula_occurrences(doc):
    """All readable math regions of a document, in document order."""
    occurrences = []
    for start, end, balanced in math_region_spans(doc.body):
        region = doc.body[start:end]
        if not balanced:
            warnings.warn(
                f"{doc.doc_id}: unbalanced math markup at offset {start}, "
                "region skipped"
            )
            continue
        try:
            root = ET.fromstring(region)
        except ET.ParseError as exc:
            warnings.warn(
                f"{doc.doc_id}: unparseable math region at offset {start} "
                f"({exc}), region skipped"
            )
            continue
        tokens = []
        _serialize(root, tokens)
        identifiers = []
        _collect_identifiers(root, identifiers)
        occurrences.append(
            FormulaOccurrence(
                doc_id=doc.doc_id,
                formula=" ".join(tokens),
                span=(start, end),
                identifiers=tuple(identifiers),
            )
        )
    return occurrences


def load_corpus(root, source, subjects=None):
    """Load every readable file under ``root`` as a Document.

    Returns documents sorted by doc_id.  Unreadable or non-UTF-8 files are
    skipped with a warning; an unreadable root raises.
    """
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus root is not a directory: {root}")
    wanted = set(subjects) if subjects else None
    documents = []
    for path in sorted(p for p in root.rglob("*") if p.is_file()):
        rel = path.relative_to(root).as_posix()
        if any(part.startswith(".") for part in rel.split("/")):
            continue
        try:
            body = path.read_text("utf-8")
        except (UnicodeDecodeError, OSError) as exc:
            warnings.warn(f"skipping malformed corpus file {rel}: {exc}")
            continue
        parts = rel.split("/")
        subject_classes = (parts[0],) if len(parts) > 1 else ()
        if wanted is not None and not wanted.intersection(subject_classes):
            continue
        documents.append(
            Document(doc_id=rel, body=body, source=source,
                     subject_classes=subject_classes)
        )
    documents.sort(key=lambda d: d.doc_id)
    return documents


GOLD_HEADER = ["gold_id", "qid", "name", "formula", "annotations", "synonyms"]


def _parse_annotations(field_text, gold_id):
    annotations = []
    if not field_text:
        return tuple(annotations)
    for chunk in field_text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValidationError(
                f"gold {gold_id}: annotation {chunk!r} lacks 'symbol=name'"
            )
        symbol, rest = chunk.split("=", 1)
        item_id = None
        name = rest
        if "@" in rest:
            name, item_id = rest.rsplit("@", 1)
        annotations.append(
            IdentifierAnnotation(symbol.strip(), name.strip(), item_id)
        )
    return tuple(annotations)


def _parse_synonyms(field_text, gold_id):
    synonyms = {}
    if not field_text:
        return synonyms
    for chunk in field_text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ValidationError(
                f"gold {gold_id}: synonym group {chunk!r} lacks 'slot:alts'"
            )
        slot, alts = chunk.split(":", 1)
        synonyms[slot.strip()] = frozenset(
            a.strip() for a in alts.split("|") if a.strip()
        )
    return synonyms


def _validate_record(record):
    if not record.formula.strip():
        raise ValidationError(f"gold {record.gold_id}: empty formula")
    if not record.concept_name.strip():
        raise ValidationError(f"gold {record.gold_id}: empty name")
    for ann in record.annotations:
        if not ann.symbol or " " in ann.symbol:
            raise ValidationError(
                f"gold {record.gold_id}: bad annotation symbol {ann.symbol!r}"
            )
        if not symbol_occurs_in_formula(ann.symbol, record.formula):
            raise ValidationError(
                f"gold {record.gold_id}: symbol {ann.symbol!r} does not "
                f"occur in formula {record.formula!r}"
            )
    for slot, alts in record.synonyms.items():
        gold_value = (normalize_formula(record.formula)
                      if slot == "formula" else slot)
        for alt in alts:
            key = normalize_formula(alt) if slot == "formula" else alt
            if key == gold_value:
                raise ValidationError(
                    f"gold {record.gold_id}: synonym slot {slot!r} "
                    "contains the exact gold value"
                )


def load_gold_benchmark(path):
    """Read the benchmark TSV; validates every record, returns them sorted
    by gold_id."""
    path = Path(path)
    lines = path.read_text("utf-8").splitlines()
    if not lines or lines[0].split("\t") != GOLD_HEADER:
        raise ValidationError(f"{path}: missing or wrong benchmark header")
    records = []
    seen_ids = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(GOLD_HEADER):
            raise ValidationError(
                f"{path}: line {lineno}: expected {len(GOLD_HEADER)} "
                f"fields, found {len(fields)}"
            )
        raw_id, qid, name, formula, annotations, synonyms = fields
        try:
            gold_id = int(raw_id)
        except ValueError:
            raise ValidationError(
                f"{path}: line {lineno}: gold_id {raw_id!r} is not an integer"
            ) from None
        if gold_id in seen_ids:
            raise ValidationError(
                f"{path}: line {lineno}: duplicate gold_id {gold_id}"
            )
        seen_ids.add(gold_id)
        record = GoldRecord(
            gold_id=gold_id,
            qid=qid,
            concept_name=name,
            formula=formula,
            annotations=_parse_annotations(annotations, gold_id),
            synonyms=_parse_synonyms(synonyms, gold_id),
        )
        _validate_record(record)
        records.append(record)
    records.sort(key=lambda r: r.gold_id)
    return records


def save_gold_benchmark(records, path):
    lines = ["\t".join(GOLD_HEADER)]
    for record in sorted(records, key=lambda r: r.gold_id):
        _validate_record(record)
        annotations = ";".join(
            f"{a.symbol}={a.name}@{a.item_id}" if a.item_id
            else f"{a.symbol}={a.name}"
            for a in record.annotations
        )
        synonyms = ";".join(
            f"{slot}:{'|'.join(sorted(alts))}"
            for slot, alts in sorted(record.synonyms.items())
        )
        lines.append("\t".join([
            str(record.gold_id), record.qid, record.concept_name,
            record.formula, annotations, synonyms,
        ]))
    Path(path).write_text("\n".join(lines) + "\n", "utf-8")
