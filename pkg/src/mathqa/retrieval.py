"""Top-k lookups over the mined catalogs.

All functions are total: an unknown key yields an empty list, never an
error.  Scores are the catalog frequencies (summed where a query has
several parts); ranks are contiguous from 1 and scores never increase
with rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

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
from .errors import ValidationError
from .identifiers import identifiers_in_catalog_formula
from .text import word_tokens

DEFAULT_K = 10


@dataclass(frozen=True)
class RankedResult:
    value: str
    score: int
    rank: int
    provenance: tuple = ()


@dataclass
class CatalogSet:
    """The four catalogs of one indexed corpus."""

    symbol_to_name: Catalog
    name_to_symbol: Catalog
    term_to_formula: Catalog
    symbol_to_formula: Catalog

    @property
    def source(self):
        return self.symbol_to_name.source


_SET_FILES = {
    "symbol_to_name": CatalogKind.SYMBOL_TO_NAME,
    "name_to_symbol": CatalogKind.NAME_TO_SYMBOL,
    "term_to_formula": CatalogKind.TERM_TO_FORMULA,
    "symbol_to_formula": CatalogKind.SYMBOL_TO_FORMULA,
}


def build_catalog_set(docs, source=None, radius=None, subject_filter=None):
    docs = list(docs)
    kwargs = {"source": source, "subject_filter": subject_filter}
    if radius is not None:
        kwargs["radius"] = radius
    symbol_to_name = build_identifier_catalog(docs, **kwargs)
    return CatalogSet(
        symbol_to_name=symbol_to_name,
        name_to_symbol=invert_catalog(symbol_to_name),
        term_to_formula=build_formula_catalog(docs, **kwargs),
        symbol_to_formula=build_symbol_formula_catalog(docs, **kwargs),
    )


def save_catalog_set(catalog_set, directory):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in _SET_FILES:
        save_catalog(getattr(catalog_set, name), directory / f"{name}.tsv")


def load_catalog_set(directory):
    directory = Path(directory)
    catalogs = {}
    for name, kind in _SET_FILES.items():
        catalog = load_catalog(directory / f"{name}.tsv")
        if catalog.kind != kind:
            raise ValidationError(
                f"{directory / name}.tsv holds a {catalog.kind.value} catalog"
            )
        catalogs[name] = catalog
    return CatalogSet(**catalogs)


def _require_kind(catalog, kind):
    if catalog.kind != kind:
        raise ValidationError(
            f"expected a {kind.value} catalog, got {catalog.kind.value}"
        )


def _ranked(catalog, key, k):
    lookup_key = key.lower() if catalog.kind in (
        CatalogKind.NAME_TO_SYMBOL, CatalogKind.TERM_TO_FORMULA) else key
    results = []
    for i, (value, freq) in enumerate(catalog.lookup(key)[:k]):
        provenance = catalog.provenance.get((lookup_key, value), ())
        results.append(RankedResult(value=value, score=freq, rank=i + 1,
                                    provenance=provenance))
    return results


def names_to_symbols(name, catalog, k=DEFAULT_K):
    """Candidate symbols for an identifier name, most frequent first."""
    _require_kind(catalog, CatalogKind.NAME_TO_SYMBOL)
    return _ranked(catalog, name, k)


def symbols_to_names(symbol, catalog, k=DEFAULT_K):
    """Candidate names for an identifier symbol; case matters."""
    _require_kind(catalog, CatalogKind.SYMBOL_TO_NAME)
    return _ranked(catalog, symbol, k)


def formulas_by_concept(concept, catalog, k=DEFAULT_K):
    """Formulas whose windows mention the concept's words.

    Multi-word concepts take the union over their words with scores
    summed; stopwords contribute nothing.
    """
    _require_kind(catalog, CatalogKind.TERM_TO_FORMULA)
    scores = {}
    provenance = {}
    for word in word_tokens(concept):
        for value, freq in catalog.lookup(word):
            scores[value] = scores.get(value, 0) + freq
            provenance.setdefault(value, set()).update(
                catalog.provenance.get((word, value), ())
            )
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return [
        RankedResult(value=value, score=score, rank=i + 1,
                     provenance=tuple(sorted(provenance[value])))
        for i, (value, score) in enumerate(ranked)
    ]


def formulas_by_identifiers(operands, mode, catalogs, k=DEFAULT_K):
    """Formulas containing ALL the requested identifiers.

    ``mode`` is "symbols" (operands are identifier symbols) or "names"
    (each operand is first translated to its top-1 symbol; an operand
    with no translation makes the result empty).  Ranking is by the
    summed (symbol, formula) pair frequency.
    """
    operands = list(operands)
    if len(operands) < 2:
        raise ValidationError("identifier search needs at least two operands")
    if mode == "names":
        symbols = []
        for name in operands:
            top = names_to_symbols(name, catalogs.name_to_symbol, k=1)
            if not top:
                return []
            if top[0].value not in symbols:
                symbols.append(top[0].value)
    elif mode == "symbols":
        symbols = list(dict.fromkeys(operands))
    else:
        raise ValidationError(f"unknown identifier search mode {mode!r}")

    catalog = catalogs.symbol_to_formula
    _require_kind(catalog, CatalogKind.SYMBOL_TO_FORMULA)
    postings = []
    for symbol in symbols:
        entries = dict(catalog.lookup(symbol))
        if not entries:
            return []
        postings.append((symbol, entries))

    candidates = set(postings[0][1])
    for _, entries in postings[1:]:
        candidates &= set(entries)
    results = []
    for formula in candidates:
        # containment re-checked against the formula string itself
        found = identifiers_in_catalog_formula(formula)
        if not all(sym in found for sym in symbols):
            continue
        score = sum(entries[formula] for _, entries in postings)
        provenance = set()
        for symbol, _ in postings:
            provenance.update(catalog.provenance.get((symbol, formula), ()))
        results.append((formula, score, tuple(sorted(provenance))))
    results.sort(key=lambda item: (-item[1], item[0]))
    return [
        RankedResult(value=formula, score=score, rank=i + 1, provenance=prov)
        for i, (formula, score, prov) in enumerate(results[:k])
    ]
