# Answering natural-language questions, end to end and offline
#
# The question service chains the pieces: a template grammar classifies
# the question, the knowledge graph (served here from recorded query
# fixtures, no network) is tried first, and corpus indexes answer when
# the graph cannot.  Every answer names its identifiers so a caller can
# turn it into a computation.

from pathlib import Path

from mathqa import corpus, retrieval
from mathqa.kg import EndpointConfig, KnowledgeGraph
from mathqa.service import QaService

ROOT = Path(__file__).resolve().parent.parent

kg = KnowledgeGraph(EndpointConfig(
    url="https://example.invalid/sparql",      # never contacted
    fixture_dir=ROOT / "fixtures" / "kg",
    offline=True,
))
docs = corpus.load_corpus(ROOT / "fixtures" / "corpus_arxiv",
                          source=corpus.Source.ARXIV)
service = QaService(
    indices={corpus.Source.ARXIV: retrieval.build_catalog_set(docs)},
    kg=kg,
)


def show(question):
    print(f"\nQ: {question}")
    envelope = service.answer_question(question)
    source = envelope.answer.provenance.value if envelope.answer else "-"
    print(f"   outcome: {envelope.outcome.value}  (source: {source})")
    if envelope.answer:
        print(f"   formula: {envelope.answer.formula}")
        for ident in envelope.answer.identifiers:
            extra = (f" = {ident.constant_value}"
                     if ident.constant_value is not None else "")
            print(f"     {ident.symbol} ({ident.name}){extra}")
    for note in envelope.diagnostics:
        print(f"   note: {note}")


# A concept question resolved by the knowledge graph, identifiers and all.
show("What is the formula for speed?")

# A relationship question: both named quantities must appear in the
# returned formula.  The speed of light arrives as a bound constant.
show("What is the relationship between energy and mass?")

# The same template accepts bare symbols.
show("What is the relation between the symbols F, m and a?")

# Two graph items share the label "work", so instead of guessing the
# service reports both candidates and asks the caller to choose.
show("What is the formula for work?")

# No graph item is labeled "energy"; the corpus index answers instead,
# and the diagnostics say exactly which fallback fired.  Index answers
# name identifiers by corpus statistics, so expect rough edges: in this
# tiny corpus "energy" outranks "mass" even inside m's windows.
show("What is the formula for energy?")

# Text outside the template grammar is rejected, not misread.
show("Why is the sky blue?")
