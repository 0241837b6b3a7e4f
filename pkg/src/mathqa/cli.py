"""Command line interface.

Every option can also come from the environment with the MATHQA_ prefix
(e.g. MATHQA_SERVE_PORT for `mathqa serve --port`).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import evaluation, retrieval
from .calculator import evaluate, parse_formula
from .corpus import Source, load_corpus, load_gold_benchmark
from .errors import ConfigurationError, MathQaError
from .kg import EndpointConfig, KnowledgeGraph, QueryCache, WIKIDATA_ENDPOINT
from .service import QaService, error_code


@click.group()
def cli():
    """Semantic formula search and mathematical question answering."""


def _fail(exc):
    raise click.ClickException(f"[{error_code(exc)}] {exc}")


def _source_from(value):
    try:
        return Source(value)
    except ValueError:
        raise click.ClickException(f"unknown source {value!r}")


def _load_indices(paths):
    indices = {}
    for path in paths:
        catalog_set = retrieval.load_catalog_set(Path(path))
        source = catalog_set.source
        if source in indices:
            raise click.ClickException(
                f"two indices with source {source.value!r} given"
            )
        indices[source] = catalog_set
    return indices


def _make_kg(fixture_dir, offline, endpoint, cache_dir):
    if fixture_dir is None and offline:
        return None
    config = EndpointConfig(
        url=endpoint or WIKIDATA_ENDPOINT,
        fixture_dir=Path(fixture_dir) if fixture_dir else None,
        offline=offline,
    )
    cache = QueryCache(Path(cache_dir)) if cache_dir else None
    return KnowledgeGraph(config, cache=cache)


def _make_service(index_paths, kg_fixtures, offline, endpoint, cache_dir):
    indices = _load_indices(index_paths)
    kg = _make_kg(kg_fixtures, offline, endpoint, cache_dir)
    try:
        return QaService(indices=indices, kg=kg)
    except ConfigurationError as exc:
        raise click.ClickException(str(exc))


# ---------------------------------------------------------------- index

@cli.group()
def index():
    """Build and inspect semantic catalogs."""


@index.command("build")
@click.option("--corpus", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--source", required=True,
              type=click.Choice(["arxiv", "wikipedia", "fixture"]))
@click.option("--out", required=True, type=click.Path(file_okay=False))
@click.option("--subjects", default=None,
              help="Comma-separated subject directories to keep.")
@click.option("--radius", default=None, type=int,
              help="Context window radius in characters (default 500).")
def index_build(corpus, source, out, subjects, radius):
    """Build all catalogs for a corpus directory."""
    source = _source_from(source)
    subject_filter = (
        tuple(s.strip() for s in subjects.split(",") if s.strip())
        if subjects else None
    )
    docs = load_corpus(Path(corpus), source, subjects=subject_filter)
    if not docs:
        raise click.ClickException(f"no documents found under {corpus}")
    try:
        catalog_set = retrieval.build_catalog_set(docs, source=source,
                                                  radius=radius)
    except MathQaError as exc:
        _fail(exc)
    retrieval.save_catalog_set(catalog_set, Path(out))
    for name, catalog in (
        ("symbol_to_name", catalog_set.symbol_to_name),
        ("name_to_symbol", catalog_set.name_to_symbol),
        ("term_to_formula", catalog_set.term_to_formula),
        ("symbol_to_formula", catalog_set.symbol_to_formula),
    ):
        click.echo(f"{name}: {len(catalog.entries)} keys "
                   f"({catalog.total_mass()} counted pairs)")
    click.echo(f"wrote catalogs for {len(docs)} documents to {out}")


# ---------------------------------------------------------------- search

_SEARCH_MODES = ("names2symbols", "symbols2names", "rel-names",
                 "rel-symbols", "concept")


def _split_operands(query):
    return [part.strip() for part in query.split(",") if part.strip()]


@cli.command("search")
@click.option("--mode", required=True, type=click.Choice(_SEARCH_MODES))
@click.option("--query", required=True)
@click.option("--index", "index_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--k", default=retrieval.DEFAULT_K, show_default=True, type=int)
def search(mode, query, index_dir, k):
    """Query a catalog directory; prints rank, value and score."""
    catalogs = retrieval.load_catalog_set(Path(index_dir))
    try:
        if mode == "names2symbols":
            results = retrieval.names_to_symbols(query,
                                                 catalogs.name_to_symbol, k)
        elif mode == "symbols2names":
            results = retrieval.symbols_to_names(query,
                                                 catalogs.symbol_to_name, k)
        elif mode == "concept":
            results = retrieval.formulas_by_concept(query,
                                                    catalogs.term_to_formula, k)
        else:
            operands = _split_operands(query)
            kind = "names" if mode == "rel-names" else "symbols"
            results = retrieval.formulas_by_identifiers(operands, kind,
                                                        catalogs, k)
    except MathQaError as exc:
        _fail(exc)
    for result in results:
        click.echo(f"{result.rank}\t{result.value}\t{result.score}")
    if not results:
        click.echo("no results", err=True)


# ---------------------------------------------------------------- calc

def _parse_bindings(pairs):
    bindings = {}
    for pair in pairs:
        symbol, sep, value = pair.partition("=")
        symbol = symbol.strip()
        if not sep or not symbol:
            raise click.ClickException(
                f"--bind wants symbol=value, got {pair!r}"
            )
        try:
            bindings[symbol] = float(value)
        except ValueError:
            raise click.ClickException(f"binding {pair!r} is not numeric")
    return bindings


@cli.command("calc")
@click.option("--formula", required=True)
@click.option("--bind", "binds", multiple=True,
              help="Identifier binding, e.g. --bind m=2 (repeatable).")
def calc(formula, binds):
    """Evaluate a formula's left side under the given bindings.

    Standalone calculator: no sources, so every identifier must be
    bound explicitly (constants are a service feature).
    """
    bindings = _parse_bindings(binds)
    try:
        expr = parse_formula(formula)
        value = evaluate(expr, bindings)
    except MathQaError as exc:
        _fail(exc)
    click.echo(f"{expr.lhs_symbol} = {value}")


# ---------------------------------------------------------------- eval

@cli.command("eval")
@click.option("--modes", default="1-15", show_default=True)
@click.option("--gold", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--arxiv-index", default=None,
              type=click.Path(exists=True, file_okay=False))
@click.option("--wiki-index", default=None,
              type=click.Path(exists=True, file_okay=False))
@click.option("--kg-fixtures", default=None,
              type=click.Path(exists=True, file_okay=False))
@click.option("--out", required=True, type=click.Path(file_okay=False))
def eval_command(modes, gold, arxiv_index, wiki_index, kg_fixtures, out):
    """Run evaluation modes and write summary.tsv / detail.tsv."""
    try:
        mode_ids = evaluation.parse_mode_spec(modes)
        records = load_gold_benchmark(Path(gold))
        sources = evaluation.EvalSources(
            arxiv=(retrieval.load_catalog_set(Path(arxiv_index))
                   if arxiv_index else None),
            wikipedia=(retrieval.load_catalog_set(Path(wiki_index))
                       if wiki_index else None),
            kg=(_make_kg(kg_fixtures, offline=True, endpoint=None,
                         cache_dir=None) if kg_fixtures else None),
        )
        results = evaluation.run_modes(mode_ids, records, sources)
    except MathQaError as exc:
        _fail(exc)
    summary_path, detail_path = evaluation.emit_report(results, Path(out))
    for result in results:
        click.echo(f"mode {result.mode.mode_id} ({result.mode.label}): "
                   f"top1 {result.top1_accuracy:.2f}, "
                   f"mean DCG {result.mean_dcg:.2f}")
    click.echo(f"wrote {summary_path} and {detail_path}")


# ---------------------------------------------------------------- ask

@cli.command("ask")
@click.argument("question")
@click.option("--lang", default="en", show_default=True)
@click.option("--index", "index_dirs", multiple=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--kg-fixtures", default=None,
              type=click.Path(exists=True, file_okay=False))
@click.option("--offline", is_flag=True, default=False)
@click.option("--endpoint", default=None, help="SPARQL endpoint URL.")
def ask(question, lang, index_dirs, kg_fixtures, offline, endpoint):
    """Answer a natural-language formula question."""
    service = _make_service(index_dirs, kg_fixtures, offline, endpoint, None)
    envelope = service.answer_question(question, lang=lang)
    click.echo(f"outcome: {envelope.outcome.value}")
    answer = envelope.answer
    if answer is not None:
        if answer.concept_name:
            click.echo(f"concept: {answer.concept_name}"
                       + (f" ({answer.qid})" if answer.qid else ""))
        click.echo(f"formula: {answer.formula}")
        for info in answer.identifiers:
            parts = [info.symbol]
            if info.name:
                parts.append(f"({info.name})")
            if info.constant_value is not None:
                parts.append(f"= {info.constant_value}")
            click.echo("  " + " ".join(parts))
        if answer.alternatives:
            click.echo(f"{len(answer.alternatives)} alternative(s):")
            for alt in answer.alternatives:
                label = f" — {alt.concept_name}" if alt.concept_name else ""
                click.echo(f"  {alt.formula}{label}")
    for line in envelope.diagnostics:
        click.echo(f"note: {line}", err=True)
    if envelope.outcome is not envelope.outcome.ANSWERED:
        sys.exit(1)


# ---------------------------------------------------------------- serve

@cli.command("serve")
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--index", "index_dirs", multiple=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--kg-fixtures", default=None,
              type=click.Path(exists=True, file_okay=False))
@click.option("--offline", is_flag=True, default=False)
@click.option("--endpoint", default=None, help="SPARQL endpoint URL.")
@click.option("--cache-dir", default=None, type=click.Path(file_okay=False))
@click.option("--static", "static_dir", default=None,
              type=click.Path(file_okay=False),
              help="Directory of frontend assets to serve at /.")
def serve(port, host, index_dirs, kg_fixtures, offline, endpoint, cache_dir,
          static_dir):
    """Run the HTTP API (and the frontend, when built)."""
    import uvicorn

    from .api import create_app

    service = _make_service(index_dirs, kg_fixtures, offline, endpoint,
                            cache_dir)
    if static_dir is None:
        default_static = Path("frontend") / "dist"
        if default_static.is_dir():
            static_dir = default_static
    app = create_app(service, static_dir=static_dir)
    click.echo(f"sources: {', '.join(service.source_inventory())}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


def main():
    cli(auto_envvar_prefix="MATHQA")


if __name__ == "__main__":
    main()
