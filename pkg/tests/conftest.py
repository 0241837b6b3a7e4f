"""Shared fixtures: the packaged desk-scale corpora, gold benchmark,
fixture-backed knowledge graph, and an assembled service.

The whole suite runs with outbound networking disabled (sockets refuse
to connect); everything must come from local fixtures.
"""

import socket
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
ARXIV_CORPUS = FIXTURES / "corpus_arxiv"
WIKIPEDIA_CORPUS = FIXTURES / "corpus_wikipedia"
KG_FIXTURES = FIXTURES / "kg"
GOLD_PATH = FIXTURES / "gold" / "benchmark.tsv"


def pytest_sessionstart(session):
    def _blocked(*args, **kwargs):
        raise RuntimeError("network access is disabled in the test suite")

    socket.socket.connect = _blocked
    socket.socket.connect_ex = _blocked
    socket.create_connection = _blocked


# ------------------------------------------------------------- fixtures

@pytest.fixture(scope="session")
def arxiv_docs():
    from mathqa.corpus import Source, load_corpus

    return load_corpus(ARXIV_CORPUS, Source.ARXIV)


@pytest.fixture(scope="session")
def wikipedia_docs():
    from mathqa.corpus import Source, load_corpus

    return load_corpus(WIKIPEDIA_CORPUS, Source.WIKIPEDIA)


@pytest.fixture(scope="session")
def arxiv_catalogs(arxiv_docs):
    from mathqa import retrieval

    return retrieval.build_catalog_set(arxiv_docs)


@pytest.fixture(scope="session")
def wikipedia_catalogs(wikipedia_docs):
    from mathqa import retrieval

    return retrieval.build_catalog_set(wikipedia_docs)


@pytest.fixture(scope="session")
def gold_records():
    from mathqa.corpus import load_gold_benchmark

    return load_gold_benchmark(GOLD_PATH)


@pytest.fixture(scope="session")
def knowledge_graph():
    from mathqa.kg import EndpointConfig, KnowledgeGraph

    config = EndpointConfig(url="https://unreachable.invalid/sparql",
                            fixture_dir=KG_FIXTURES, offline=True)
    return KnowledgeGraph(config)


@pytest.fixture(scope="session")
def qa_service(arxiv_catalogs, wikipedia_catalogs, knowledge_graph):
    from mathqa.corpus import Source
    from mathqa.service import QaService

    return QaService(
        indices={Source.ARXIV: arxiv_catalogs,
                 Source.WIKIPEDIA: wikipedia_catalogs},
        kg=knowledge_graph,
    )


# --------------------------------------------- acceptance result lines

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = item.function.__doc__ or item.name
    label = doc.strip().splitlines()[0]
    entry = _ACCEPTANCE.setdefault(
        label, {"passed": 0, "failed": 0, "xfailed": 0, "skipped": 0}
    )
    if hasattr(report, "wasxfail"):
        entry["xfailed" if report.skipped else "failed"] += 1
    elif report.passed:
        entry["passed"] += 1
    elif report.skipped:
        entry["skipped"] += 1
    else:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, entry in _ACCEPTANCE.items():
        if entry["failed"] or entry["skipped"]:
            status = "FAILED"
        else:
            status = "PASSED"
        note = ""
        if entry["xfailed"]:
            note = (f" ({entry['xfailed']} expected failure:"
                    " published table value differs from its own formula)")
        terminalreporter.write_line(f"[acceptance] {label}: {status}{note}")
