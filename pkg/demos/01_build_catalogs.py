# Building formula catalogs from a document corpus
#
# A catalog is a ranked co-occurrence table: for every key (an identifier
# symbol, an identifier name, or a subject term) it stores the values seen
# near that key in running text, ordered by how often the pair occurred.
# This script walks the small corpus shipped under fixtures/, builds all
# four catalog kinds, and pokes at the results.

from pathlib import Path

from mathqa import corpus, retrieval
from mathqa.catalogs import invert_catalog

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "fixtures" / "corpus_arxiv"

# Each document is one plain-text file; subdirectories name subject
# classes (astro-ph, hep-th, ...) which later allow filtered builds.
docs = corpus.load_corpus(CORPUS, source=corpus.Source.ARXIV)
print(f"loaded {len(docs)} documents")
print(f"first: {docs[0].doc_id} ({docs[0].subject_classes or 'no subject'})")

# The builder scans every document once: it finds formulas, reads the
# identifier symbols out of them, and pairs each symbol with candidate
# names from the surrounding window of text.
catalogs = retrieval.build_catalog_set(docs)

for catalog in (catalogs.symbol_to_name, catalogs.name_to_symbol,
                catalogs.term_to_formula, catalogs.symbol_to_formula):
    print(f"{catalog.kind.value}: {len(catalog.entries)} keys, "
          f"{catalog.total_mass()} counted pairs")

# Ranked entries answer "what does E usually mean around here?"
print("\nE ->", catalogs.symbol_to_name.entries["E"][:3])
print("energy ->", catalogs.name_to_symbol.entries["energy"][:3])

# Inversion turns a symbol->name catalog into a name->symbol catalog by
# re-ranking the transposed pairs.  Frequencies are preserved exactly,
# so inverting twice gets the original mass back.
inverted = invert_catalog(catalogs.symbol_to_name)
print("\ninverted E->energy frequency:",
      dict(inverted.entries["energy"])["E"])
print("mass preserved:",
      inverted.total_mass() == catalogs.symbol_to_name.total_mass())

# Catalogs serialize to a plain TSV-in-sections format, so a build can be
# shipped and reloaded without recounting the corpus.
out = Path("/tmp/demo-catalogs")
retrieval.save_catalog_set(catalogs, out)
reloaded = retrieval.load_catalog_set(out)
print("\nsave/load round trip intact:",
      reloaded.symbol_to_name.entries == catalogs.symbol_to_name.entries)
