# Searching with catalogs: four ways to ask for a formula
#
# Once a corpus is indexed, the catalogs support four query shapes:
#   - a name, asking for the symbols that usually denote it
#   - a symbol, asking for the names it usually denotes
#   - several identifiers (by name or by symbol), asking for the
#     formula that relates all of them
#   - a concept phrase, asking for its defining formula by summed
#     word evidence ("kinetic energy" still ranks on partial matches)

from pathlib import Path

from mathqa import corpus, retrieval

ROOT = Path(__file__).resolve().parent.parent

docs = corpus.load_corpus(ROOT / "fixtures" / "corpus_arxiv",
                          source=corpus.Source.ARXIV)
catalogs = retrieval.build_catalog_set(docs)

# Single-identifier lookups are direct ranked reads.
print("symbols for 'energy':",
      [(r.value, r.score)
       for r in retrieval.names_to_symbols("energy",
                                           catalogs.name_to_symbol, k=3)])
print("names for 'v':      ",
      [(r.value, r.score)
       for r in retrieval.symbols_to_names("v",
                                           catalogs.symbol_to_name, k=3)])

# Relationship search by names first maps every name to its most likely
# symbol, then intersects the formulas containing all of those symbols.
print("\nrelationship(energy, mass):")
for hit in retrieval.formulas_by_identifiers(["energy", "mass"], "names",
                                             catalogs, k=3):
    print(f"  {hit.value}  (score {hit.score})")

# The same search skips the mapping step when the caller already has
# symbols.  The conjunction is strict: every symbol must occur.
print("\nrelationship(E, m, c):")
for hit in retrieval.formulas_by_identifiers(["E", "m", "c"], "symbols",
                                             catalogs, k=3):
    print(f"  {hit.value}  (score {hit.score})")

# Concept search splits the phrase into content words and sums their
# per-word formula evidence.
print("\nconcept 'kinetic energy':")
for hit in retrieval.formulas_by_concept("kinetic energy",
                                         catalogs.term_to_formula, k=3):
    print(f"  {hit.value}  (score {hit.score})")

# Queries the corpus cannot support come back empty, never raise.
print("\nconcept 'florbleflux':",
      retrieval.formulas_by_concept("florbleflux",
                                    catalogs.term_to_formula, k=3))
