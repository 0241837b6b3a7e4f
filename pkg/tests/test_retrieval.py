import pytest

from mathqa import retrieval
from mathqa.catalogs import CatalogKind
from mathqa.corpus import Source
from mathqa.errors import CatalogFormatError, ValidationError
from mathqa.retrieval import (
    build_catalog_set,
    formulas_by_concept,
    formulas_by_identifiers,
    load_catalog_set,
    names_to_symbols,
    save_catalog_set,
    symbols_to_names,
)


@pytest.fixture(scope="module")
def catalogs(arxiv_docs):
    return build_catalog_set(arxiv_docs)


def test_catalog_set_source(catalogs):
    assert catalogs.source is Source.ARXIV


def test_names_to_symbols_ranked(catalogs):
    results = names_to_symbols("velocity", catalogs.name_to_symbol)
    assert results, "corpus must mention velocity near identifiers"
    assert results[0].value == "v"
    assert [r.rank for r in results] == list(range(1, len(results) + 1))
    scores = [r.score for r in results]
    assert scores == sorted(scores, reverse=True)


def test_names_to_symbols_case_insensitive_query(catalogs):
    assert (names_to_symbols("Velocity", catalogs.name_to_symbol)
            == names_to_symbols("velocity", catalogs.name_to_symbol))


def test_symbols_to_names_case_sensitive_key(catalogs):
    upper = symbols_to_names("E", catalogs.symbol_to_name)
    lower = symbols_to_names("e", catalogs.symbol_to_name)
    assert upper and upper[0].value == "energy"
    assert upper != lower


def test_unknown_key_yields_empty_not_error(catalogs):
    assert names_to_symbols("nonexistentword", catalogs.name_to_symbol) == []
    assert symbols_to_names("Ξ", catalogs.symbol_to_name) == []
    assert formulas_by_concept("nonexistentword", catalogs.term_to_formula) == []


def test_k_truncates(catalogs):
    results = symbols_to_names("E", catalogs.symbol_to_name, k=3)
    assert len(results) == 3
    assert [r.rank for r in results] == [1, 2, 3]


def test_formulas_by_concept_sums_over_words(catalogs):
    single = {r.value: r.score
              for r in formulas_by_concept("energy", catalogs.term_to_formula,
                                           k=50)}
    combined = formulas_by_concept("kinetic energy", catalogs.term_to_formula,
                                   k=50)
    kinetic = {r.value: r.score
               for r in formulas_by_concept("kinetic", catalogs.term_to_formula,
                                            k=50)}
    for result in combined:
        expected = single.get(result.value, 0) + kinetic.get(result.value, 0)
        assert result.score == expected


def test_formulas_by_concept_ignores_stopwords(catalogs):
    assert (formulas_by_concept("the energy", catalogs.term_to_formula)
            == formulas_by_concept("energy", catalogs.term_to_formula))


def test_formulas_by_concept_top_hit(catalogs):
    results = formulas_by_concept("energy", catalogs.term_to_formula)
    assert results[0].value == "E = m c ^ 2"


def test_formulas_by_identifiers_symbols(catalogs):
    results = formulas_by_identifiers(["E", "m", "c"], "symbols", catalogs)
    assert results
    assert results[0].value == "E = m c ^ 2"
    for result in results:
        # conjunctive: every operand occurs in every hit
        from mathqa.identifiers import identifiers_in_catalog_formula
        found = identifiers_in_catalog_formula(result.value)
        assert {"E", "m", "c"} <= set(found)


def test_formulas_by_identifiers_names_translates_first():
    from mathqa.corpus import Document

    # a corpus where each name translates cleanly to one symbol
    docs = [
        Document("e.html", "energy energy <math><mi>E</mi></math> energy",
                 Source.FIXTURE),
        Document("m.html", "mass mass <math><mi>m</mi></math> mass",
                 Source.FIXTURE),
        Document("f.html", "relation <math><mi>E</mi><mo>=</mo><mi>m</mi>"
                           "<msup><mi>c</mi><mn>2</mn></msup></math>",
                 Source.FIXTURE),
    ]
    catalog_set = build_catalog_set(docs)
    results = formulas_by_identifiers(["energy", "mass"], "names", catalog_set)
    assert [r.value for r in results] == ["E = m c ^ 2"]


def test_formulas_by_identifiers_names_on_corpus(catalogs):
    # translation uses each name's top-1 symbol; every hit must contain
    # all translated symbols
    from mathqa.identifiers import identifiers_in_catalog_formula

    top_energy = names_to_symbols("energy", catalogs.name_to_symbol, k=1)
    top_mass = names_to_symbols("mass", catalogs.name_to_symbol, k=1)
    needed = {top_energy[0].value, top_mass[0].value}
    results = formulas_by_identifiers(["energy", "mass"], "names", catalogs)
    assert results
    for result in results:
        assert needed <= set(identifiers_in_catalog_formula(result.value))


def test_formulas_by_identifiers_unknown_operand_empty(catalogs):
    assert formulas_by_identifiers(["E", "Ξ"], "symbols", catalogs) == []
    assert formulas_by_identifiers(["nonexistentword", "energy"], "names",
                                   catalogs) == []


def test_formulas_by_identifiers_needs_two_operands(catalogs):
    with pytest.raises(ValidationError, match="two operands"):
        formulas_by_identifiers(["E"], "symbols", catalogs)
    with pytest.raises(ValidationError, match="mode"):
        formulas_by_identifiers(["E", "m"], "latin", catalogs)


def test_wrong_catalog_kind_rejected(catalogs):
    with pytest.raises(ValidationError, match="expected a"):
        names_to_symbols("velocity", catalogs.symbol_to_name)
    with pytest.raises(ValidationError, match="expected a"):
        symbols_to_names("v", catalogs.name_to_symbol)
    with pytest.raises(ValidationError, match="expected a"):
        formulas_by_concept("energy", catalogs.symbol_to_formula)


def test_results_carry_document_provenance(catalogs, arxiv_docs):
    results = symbols_to_names("E", catalogs.symbol_to_name, k=1)
    known_ids = {d.doc_id for d in arxiv_docs}
    assert results[0].provenance
    assert set(results[0].provenance) <= known_ids


def test_save_load_catalog_set_round_trip(tmp_path, catalogs):
    save_catalog_set(catalogs, tmp_path / "index")
    names = sorted(p.name for p in (tmp_path / "index").iterdir())
    assert names == ["name_to_symbol.tsv", "symbol_to_formula.tsv",
                     "symbol_to_name.tsv", "term_to_formula.tsv"]
    loaded = load_catalog_set(tmp_path / "index")
    assert loaded.symbol_to_name == catalogs.symbol_to_name
    assert loaded.name_to_symbol == catalogs.name_to_symbol
    assert loaded.term_to_formula == catalogs.term_to_formula
    assert loaded.symbol_to_formula == catalogs.symbol_to_formula
    # searches behave identically on the reloaded set
    assert (names_to_symbols("velocity", loaded.name_to_symbol)[0].value
            == "v")


def test_load_catalog_set_checks_file_kinds(tmp_path, catalogs):
    save_catalog_set(catalogs, tmp_path / "index")
    sym = (tmp_path / "index" / "symbol_to_name.tsv").read_text("utf-8")
    (tmp_path / "index" / "term_to_formula.tsv").write_text(sym, "utf-8")
    with pytest.raises(ValidationError, match="holds a"):
        load_catalog_set(tmp_path / "index")


def test_load_catalog_set_missing_file(tmp_path):
    with pytest.raises((FileNotFoundError, CatalogFormatError)):
        load_catalog_set(tmp_path)


def test_build_catalog_set_kinds(catalogs):
    assert catalogs.symbol_to_name.kind is CatalogKind.SYMBOL_TO_NAME
    assert catalogs.name_to_symbol.kind is CatalogKind.NAME_TO_SYMBOL
    assert catalogs.term_to_formula.kind is CatalogKind.TERM_TO_FORMULA
    assert catalogs.symbol_to_formula.kind is CatalogKind.SYMBOL_TO_FORMULA


def test_default_k_is_ten(catalogs):
    results = retrieval.formulas_by_concept("energy", catalogs.term_to_formula)
    assert len(results) <= 10
