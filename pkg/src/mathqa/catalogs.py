"""Frequency-ranked catalogs mined from formula surroundings.

Every formula occurrence contributes the words found within a fixed
character radius around its math region (markup excluded).  Counting
those co-occurrences yields:

  SYMBOL_TO_NAME     identifier symbol -> candidate names
  NAME_TO_SYMBOL     name -> candidate symbols (inversion of the first)
  TERM_TO_FORMULA    window term -> formula strings
  SYMBOL_TO_FORMULA  identifier symbol -> formula strings

Entry lists are sorted by frequency descending, ties lexicographic by
value.  Builds are deterministic: the same corpus yields byte-identical
saved catalogs.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Source, extract_formula_occurrences
from .errors import CatalogFormatError, ValidationError
from .text import strip_markup, word_tokens

FORMAT_MAGIC = "mathqa-catalog"
FORMAT_VERSION = "v1"
DEFAULT_RADIUS = 500


class CatalogKind(enum.Enum):
    SYMBOL_TO_NAME = "symbol_to_name"
    NAME_TO_SYMBOL = "name_to_symbol"
    TERM_TO_FORMULA = "term_to_formula"
    SYMBOL_TO_FORMULA = "symbol_to_formula"


LOWERCASE_KEY_KINDS = frozenset(
    {CatalogKind.NAME_TO_SYMBOL, CatalogKind.TERM_TO_FORMULA}
)


@dataclass(frozen=True)
class TokenWindow:
    """The cleaned words around one math region, left side first."""

    tokens: tuple
    doc_id: str
    span: tuple


@dataclass
class Catalog:
    kind: CatalogKind
    entries: dict
    source: Source
    doc_count: int
    # doc ids per (key, value); in-memory only, the file format has no
    # provenance column, so it is excluded from equality
    provenance: dict = field(default_factory=dict, compare=False)

    def lookup(self, key):
        if self.kind in LOWERCASE_KEY_KINDS:
            key = key.lower()
        return self.entries.get(key, [])

    def total_mass(self):
        return sum(f for values in self.entries.values() for _, f in values)


def tokenize_window(doc, span, radius=DEFAULT_RADIUS):
    """Words within ``radius`` raw characters on each side of ``span``.

    The radius is measured in characters of the stored body including
    markup; the formula's own markup is excluded, and markup inside the
    window is stripped before tokenization.
    """
    start, end = span
    left = doc.body[max(0, start - radius):start]
    right = doc.body[end:end + radius]
    tokens = word_tokens(strip_markup(left)) + word_tokens(strip_markup(right))
    return TokenWindow(tokens=tuple(tokens), doc_id=doc.doc_id, span=(start, end))


def _filtered(docs, subject_filter):
    docs = list(docs)
    if subject_filter is None:
        return docs
    wanted = set(subject_filter)
    return [d for d in docs if wanted.intersection(d.subject_classes)]


def _infer_source(docs, source):
    if source is not None:
        return source
    found = {d.source for d in docs}
    if len(found) > 1:
        raise ValidationError(f"mixed document sources: {sorted(s.value for s in found)}")
    return found.pop() if found else Source.FIXTURE


def _finalize(kind, counts, provenance, source, doc_count):
    entries = {}
    for key in sorted(counts):
        ranked = sorted(counts[key].items(), key=lambda kv: (-kv[1], kv[0]))
        entries[key] = [(value, freq) for value, freq in ranked]
    prov = {pair: tuple(sorted(ids)) for pair, ids in provenance.items()}
    return Catalog(kind=kind, entries=entries, source=source,
                   doc_count=doc_count, provenance=prov)


def _build(kind, docs, pairs_of, source, radius, subject_filter):
    docs = _filtered(docs, subject_filter)
    source = _infer_source(docs, source)
    counts = defaultdict(lambda: defaultdict(int))
    provenance = defaultdict(set)
    for doc in docs:
        for occ in extract_formula_occurrences(doc):
            if not occ.formula:
                continue
            window = tokenize_window(doc, occ.span, radius)
            for key, value in pairs_of(occ, window.tokens):
                counts[key][value] += 1
                provenance[(key, value)].add(doc.doc_id)
    return _finalize(kind, counts, provenance, source, len(docs))


def build_identifier_catalog(docs, source=None, radius=DEFAULT_RADIUS,
                             subject_filter=None):
    """SYMBOL_TO_NAME: count every (identifier, window token) co-occurrence.

    Tokens count with multiplicity; each occurrence's window is counted
    independently even where windows overlap.
    """
    def pairs(occ, tokens):
        for sym in occ.identifiers:
            for tok in tokens:
                yield sym, tok

    return _build(CatalogKind.SYMBOL_TO_NAME, docs, pairs, source, radius,
                  subject_filter)


def build_formula_catalog(docs, source=None, radius=DEFAULT_RADIUS,
                          subject_filter=None):
    """TERM_TO_FORMULA: count every (window token, formula string) pair."""
    def pairs(occ, tokens):
        for tok in tokens:
            yield tok, occ.formula

    return _build(CatalogKind.TERM_TO_FORMULA, docs, pairs, source, radius,
                  subject_filter)


def build_symbol_formula_catalog(docs, source=None, radius=DEFAULT_RADIUS,
                                 subject_filter=None):
    """SYMBOL_TO_FORMULA: formula duplicate counts per identifier symbol.

    Keyed by the identifiers the formula itself binds, not window words;
    supports conjunctive symbol search over formulas.
    """
    def pairs(occ, tokens):
        for sym in occ.identifiers:
            yield sym, occ.formula

    return _build(CatalogKind.SYMBOL_TO_FORMULA, docs, pairs, source, radius,
                  subject_filter)


def invert_catalog(catalog):
    """Swap keys and values between SYMBOL_TO_NAME and NAME_TO_SYMBOL.

    Total frequency mass is preserved; inverted keys follow the target
    kind's casing rule.
    """
    if catalog.kind == CatalogKind.SYMBOL_TO_NAME:
        target = CatalogKind.NAME_TO_SYMBOL
    elif catalog.kind == CatalogKind.NAME_TO_SYMBOL:
        target = CatalogKind.SYMBOL_TO_NAME
    else:
        raise ValidationError(f"cannot invert a {catalog.kind.value} catalog")
    lower = target in LOWERCASE_KEY_KINDS
    counts = defaultdict(lambda: defaultdict(int))
    provenance = defaultdict(set)
    for key, values in catalog.entries.items():
        for value, freq in values:
            new_key = value.lower() if lower else value
            counts[new_key][key] += freq
            provenance[(new_key, key)].update(
                catalog.provenance.get((key, value), ())
            )
    return _finalize(target, counts, provenance, catalog.source,
                     catalog.doc_count)


def _check_writable(text, what):
    if "\t" in text or "\n" in text or "\r" in text:
        raise ValidationError(f"{what} contains tab or newline: {text!r}")


def save_catalog(catalog, path):
    """Write the catalog in its line format:

        mathqa-catalog v1 <kind> <source> <doc_count>
        key<TAB>value<TAB>frequency   (sorted by key, then rank)
    """
    lines = [
        f"{FORMAT_MAGIC} {FORMAT_VERSION} {catalog.kind.value} "
        f"{catalog.source.value} {catalog.doc_count}"
    ]
    for key in sorted(catalog.entries):
        _check_writable(key, "catalog key")
        for value, freq in catalog.entries[key]:
            _check_writable(value, "catalog value")
            lines.append(f"{key}\t{value}\t{freq}")
    Path(path).write_text("\n".join(lines) + "\n", "utf-8")


def load_catalog(path):
    path = Path(path)
    lines = path.read_text("utf-8").splitlines()
    if not lines:
        raise CatalogFormatError("empty catalog file", path=path)
    header = lines[0].split(" ")
    if len(header) != 5 or header[0] != FORMAT_MAGIC:
        raise CatalogFormatError("missing catalog header", path=path, line=1)
    if header[1] != FORMAT_VERSION:
        raise CatalogFormatError(
            f"unsupported catalog version {header[1]!r}", path=path, line=1
        )
    try:
        kind = CatalogKind(header[2])
        source = Source(header[3])
        doc_count = int(header[4])
    except ValueError as exc:
        raise CatalogFormatError(str(exc), path=path, line=1) from None
    entries = {}
    lower = kind in LOWERCASE_KEY_KINDS
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise CatalogFormatError(
                f"expected 3 tab-separated fields, found {len(fields)}",
                path=path, line=lineno,
            )
        key, value, raw_freq = fields
        try:
            freq = int(raw_freq)
        except ValueError:
            raise CatalogFormatError(
                f"frequency {raw_freq!r} is not an integer",
                path=path, line=lineno,
            ) from None
        if freq < 1:
            raise CatalogFormatError(
                f"frequency must be >= 1, found {freq}", path=path, line=lineno
            )
        if lower and key != key.lower():
            raise CatalogFormatError(
                f"{kind.value} keys must be lowercase, found {key!r}",
                path=path, line=lineno,
            )
        ranked = entries.setdefault(key, [])
        if ranked:
            last_value, last_freq = ranked[-1]
            if freq > last_freq or (freq == last_freq and value <= last_value):
                raise CatalogFormatError(
                    "entries out of rank order (frequency desc, ties "
                    "lexicographic)", path=path, line=lineno,
                )
        ranked.append((value, freq))
    return Catalog(kind=kind, entries=entries, source=source,
                   doc_count=doc_count)
