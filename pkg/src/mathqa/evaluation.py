"""Ranking evaluation: fifteen modes crossing five query tasks with
three sources, scored 0/1/2 against the gold benchmark and reported as
top-1 accuracy and mean DCG per mode.

Mode numbering is fixed: (mode_id - 1) // 3 selects the task
(names to symbols, symbols to names, identifier names, identifier
symbols, formula names) and (mode_id - 1) % 3 the source (arXiv,
Wikipedia, Wikidata).  Scoring is mechanical: 2 for the gold value,
1 for a listed synonym, 0 otherwise, with result strings compared
whitespace-stripped.  mean DCG averages over queries, zeros included.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from . import retrieval
from .corpus import Source
from .errors import ConfigurationError, ValidationError
from .text import normalize_formula

DEFAULT_CUTOFF = 10


class RankedJudgment(NamedTuple):
    score: int
    rank: int


class QueryKind(enum.Enum):
    NAMES_TO_SYMBOLS = "names to symbols"
    SYMBOLS_TO_NAMES = "symbols to names"
    REL_NAMES = "identifier names"
    REL_SYMBOLS = "identifier symbols"
    CONCEPT_NAME = "formula names"


_KIND_ORDER = (
    QueryKind.NAMES_TO_SYMBOLS,
    QueryKind.SYMBOLS_TO_NAMES,
    QueryKind.REL_NAMES,
    QueryKind.REL_SYMBOLS,
    QueryKind.CONCEPT_NAME,
)
_SOURCE_ORDER = (Source.ARXIV, Source.WIKIPEDIA, Source.WIKIDATA)
_SOURCE_LABELS = {
    Source.ARXIV: "arXiv",
    Source.WIKIPEDIA: "Wikipedia",
    Source.WIKIDATA: "Wikidata",
}


@dataclass(frozen=True)
class EvalMode:
    mode_id: int
    query_kind: QueryKind
    source: Source

    @property
    def label(self):
        return f"{self.query_kind.value}, {_SOURCE_LABELS[self.source]}"


def eval_mode(mode_id):
    if not 1 <= mode_id <= 15:
        raise ValidationError(f"mode id must be 1..15, got {mode_id}")
    return EvalMode(
        mode_id=mode_id,
        query_kind=_KIND_ORDER[(mode_id - 1) // 3],
        source=_SOURCE_ORDER[(mode_id - 1) % 3],
    )


def all_modes():
    return [eval_mode(i) for i in range(1, 16)]


def parse_mode_spec(spec):
    """Mode selections like "1-15", "9", or "1,4,9-12" -> sorted ids."""
    ids = set()
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" in chunk:
            lo, _, hi = chunk.partition("-")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise ValidationError(f"bad mode range {chunk!r}")
            if lo > hi:
                raise ValidationError(f"bad mode range {chunk!r}")
            ids.update(range(lo, hi + 1))
        else:
            try:
                ids.add(int(chunk))
            except ValueError:
                raise ValidationError(f"bad mode id {chunk!r}")
    if not ids:
        raise ValidationError(f"no modes in spec {spec!r}")
    for i in ids:
        if not 1 <= i <= 15:
            raise ValidationError(f"mode id must be 1..15, got {i}")
    return sorted(ids)


# ---------------------------------------------------------------- scoring

def dcg(judgments, p=DEFAULT_CUTOFF):
    """Sum of score / log2(rank + 1); ranks are 1-based, cutoff at p."""
    total = 0.0
    seen = set()
    for judgment in judgments:
        score, rank = judgment
        if score not in (0, 1, 2):
            raise ValidationError(f"relevance must be 0, 1 or 2, got {score}")
        if not isinstance(rank, int) or not 1 <= rank <= p:
            raise ValidationError(f"rank must be an integer in 1..{p}, got {rank}")
        if rank in seen:
            raise ValidationError(f"duplicate rank {rank}")
        seen.add(rank)
        total += score / math.log2(rank + 1)
    return total


def score_results(ranked, gold_value, synonyms=()):
    """(score, rank) judgments for a ranked result list.

    2 for the gold value, 1 for a synonym, zero-score results omitted.
    Values compare whitespace-stripped; case matters.
    """
    gold_norm = normalize_formula(gold_value)
    synonym_norms = {normalize_formula(s) for s in synonyms}
    if gold_norm in synonym_norms:
        raise ValidationError(
            f"gold value {gold_value!r} listed among its own synonyms"
        )
    judgments = []
    for position, result in enumerate(ranked):
        value = getattr(result, "value", result)
        rank = getattr(result, "rank", position + 1)
        norm = normalize_formula(value)
        if norm == gold_norm:
            judgments.append(RankedJudgment(2, rank))
        elif norm in synonym_norms:
            judgments.append(RankedJudgment(1, rank))
    return judgments


def top1_accuracy(top_scores):
    scores = list(top_scores)
    if not scores:
        raise ValidationError("top-1 accuracy over an empty query list")
    return sum(1 for s in scores if s >= 1) / len(scores)


# ---------------------------------------------------------------- running

@dataclass(frozen=True)
class QueryResult:
    gold_id: int
    query: str
    benchmark: str
    matches: tuple
    judgments: tuple
    dcg: float


@dataclass(frozen=True)
class ModeResult:
    mode: EvalMode
    per_query: tuple
    top1_accuracy: float
    mean_dcg: float


@dataclass
class EvalSources:
    """Whatever sources are on hand; a mode checks for its own."""

    arxiv: object = None      # retrieval.CatalogSet
    wikipedia: object = None  # retrieval.CatalogSet
    kg: object = None         # kg.KnowledgeGraph
    _wikidata_catalogs: object = field(default=None, init=False, repr=False)

    def wikidata_catalogs(self):
        if self._wikidata_catalogs is None:
            symbol_to_name, name_to_symbol = self.kg.symbol_catalogs()
            self._wikidata_catalogs = (symbol_to_name, name_to_symbol)
        return self._wikidata_catalogs


def _queries_for(kind, record):
    """(query display, benchmark, synonym slot, operand payload) rows."""
    if kind is QueryKind.NAMES_TO_SYMBOLS:
        return [(a.name, a.symbol, a.symbol, a) for a in record.annotations]
    if kind is QueryKind.SYMBOLS_TO_NAMES:
        return [(a.symbol, a.name, a.name, a) for a in record.annotations]
    if kind in (QueryKind.REL_NAMES, QueryKind.REL_SYMBOLS):
        if kind is QueryKind.REL_NAMES:
            operands = [a.name for a in record.annotations]
        else:
            operands = [a.symbol for a in record.annotations]
        return [(", ".join(operands), record.formula, "formula", record)]
    return [(record.concept_name, record.formula, "formula", record)]


def _index_results(kind, catalogs, query, record, k):
    if kind is QueryKind.NAMES_TO_SYMBOLS:
        return retrieval.names_to_symbols(query, catalogs.name_to_symbol, k)
    if kind is QueryKind.SYMBOLS_TO_NAMES:
        return retrieval.symbols_to_names(query, catalogs.symbol_to_name, k)
    if kind is QueryKind.CONCEPT_NAME:
        return retrieval.formulas_by_concept(query, catalogs.term_to_formula, k)
    if kind is QueryKind.REL_NAMES:
        operands = [a.name for a in record.annotations]
        mode = "names"
    else:
        operands = [a.symbol for a in record.annotations]
        mode = "symbols"
    if len(operands) < 2:
        return []
    return retrieval.formulas_by_identifiers(operands, mode, catalogs, k)


def _wikidata_results(kind, sources, query, record, k):
    kg = sources.kg
    if kind is QueryKind.NAMES_TO_SYMBOLS:
        _, name_to_symbol = sources.wikidata_catalogs()
        return retrieval.names_to_symbols(query, name_to_symbol, k)
    if kind is QueryKind.SYMBOLS_TO_NAMES:
        symbol_to_name, _ = sources.wikidata_catalogs()
        return retrieval.symbols_to_names(query, symbol_to_name, k)
    if kind is QueryKind.CONCEPT_NAME:
        candidates = kg.concept_candidates(query)
        return [c["formula"] for c in candidates if c["formula"]][:k]
    if kind is QueryKind.REL_NAMES:
        qids = [a.item_id for a in record.annotations if a.item_id]
        if len(qids) < 2:
            return []
        return [c["formula"] for c in kg.relationship_candidates(qids)][:k]
    symbols = [a.symbol for a in record.annotations]
    if len(symbols) < 2:
        return []
    return [c["formula"] for c in kg.formulas_by_symbols(symbols)][:k]


def _require_source(mode, sources):
    needed = {
        Source.ARXIV: sources.arxiv,
        Source.WIKIPEDIA: sources.wikipedia,
        Source.WIKIDATA: sources.kg,
    }[mode.source]
    if needed is None:
        raise ConfigurationError(
            f"mode {mode.mode_id} ({mode.label}) has no "
            f"{_SOURCE_LABELS[mode.source]} source configured"
        )
    return needed


def run_mode(mode, gold, sources, k=DEFAULT_CUTOFF):
    if isinstance(mode, int):
        mode = eval_mode(mode)
    gold = list(gold)
    if not gold:
        raise ValidationError("empty gold benchmark")
    source_artifact = _require_source(mode, sources)

    per_query = []
    for record in gold:
        for query, benchmark, slot, _ in _queries_for(mode.query_kind, record):
            if mode.source is Source.WIKIDATA:
                results = _wikidata_results(mode.query_kind, sources, query,
                                            record, k)
            else:
                results = _index_results(mode.query_kind, source_artifact,
                                         query, record, k)
            results = list(results)[:k]
            synonyms = record.synonyms.get(slot, ())
            judgments = score_results(results, benchmark, synonyms)
            by_rank = {}
            for position, result in enumerate(results):
                rank = getattr(result, "rank", position + 1)
                by_rank[rank] = getattr(result, "value", result)
            matches = tuple(by_rank[j.rank] for j in judgments)
            per_query.append(
                QueryResult(
                    gold_id=record.gold_id,
                    query=query,
                    benchmark=benchmark,
                    matches=matches,
                    judgments=tuple(judgments),
                    dcg=dcg(judgments, p=k),
                )
            )

    if per_query:
        tops = [
            next((j.score for j in q.judgments if j.rank == 1), 0)
            for q in per_query
        ]
        top1 = top1_accuracy(tops)
        mean_dcg = sum(q.dcg for q in per_query) / len(per_query)
    else:
        top1 = 0.0
        mean_dcg = 0.0
    return ModeResult(mode=mode, per_query=tuple(per_query),
                      top1_accuracy=top1, mean_dcg=mean_dcg)


def run_modes(mode_ids, gold, sources, k=DEFAULT_CUTOFF):
    return [run_mode(i, gold, sources, k=k) for i in mode_ids]


# ---------------------------------------------------------------- reports

SUMMARY_HEADER = "Mode\tQuery\tTop1 Acc.\tmean(DCG)"
DETAIL_HEADER = "GoldID\tQuery\tBenchmark\tMatches\t(Score, Rank)\tDCG"


def format_dcg(value):
    """Two decimals with trailing zeros trimmed: 1.94, 0.5, 1, 0."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text or "0"


def format_judgments(judgments):
    if not judgments:
        return "-"
    return ", ".join(f"({score},{rank})" for score, rank in judgments)


def format_matches(matches):
    return ", ".join(matches) if matches else "-"


def emit_report(results, out_dir):
    """summary.tsv (one row per mode) and detail.tsv (one row per query,
    mode blocks separated by '# mode N:' banner lines)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    summary_lines = [SUMMARY_HEADER]
    for result in results:
        summary_lines.append(
            f"{result.mode.mode_id}\t{result.mode.label}"
            f"\t{result.top1_accuracy:.2f}\t{result.mean_dcg:.2f}"
        )
    summary_path = out_dir / "summary.tsv"
    summary_path.write_text("\n".join(summary_lines) + "\n", "utf-8")

    detail_lines = [DETAIL_HEADER]
    for result in results:
        detail_lines.append(f"# mode {result.mode.mode_id}: {result.mode.label}")
        for q in result.per_query:
            detail_lines.append(
                f"{q.gold_id}\t{q.query}\t{q.benchmark}"
                f"\t{format_matches(q.matches)}"
                f"\t{format_judgments(q.judgments)}"
                f"\t{format_dcg(q.dcg)}"
            )
    detail_path = out_dir / "detail.tsv"
    detail_path.write_text("\n".join(detail_lines) + "\n", "utf-8")
    return summary_path, detail_path
