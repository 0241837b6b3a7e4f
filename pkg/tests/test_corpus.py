import warnings

import pytest

from mathqa.corpus import (
    Document,
    GoldRecord,
    IdentifierAnnotation,
    Source,
    extract_formula_occurrences,
    load_corpus,
    load_gold_benchmark,
    math_region_spans,
    save_gold_benchmark,
)
from mathqa.errors import ValidationError


def doc(body, doc_id="d", source=Source.FIXTURE):
    return Document(doc_id=doc_id, body=body, source=source)


# ------------------------------------------------------------- regions

def test_math_region_spans_multiple():
    body = 'a <math><mi>x</mi></math> b <math display="block"><mi>y</mi></math>'
    spans = math_region_spans(body)
    assert len(spans) == 2
    for start, end, balanced in spans:
        assert balanced
        assert body[start:start + 5] == "<math"
        assert body[end - 7:end] == "</math>"


def test_math_region_spans_unbalanced_tail():
    body = "text <math><mi>x</mi>"
    spans = math_region_spans(body)
    assert spans == [(5, len(body), False)]


def test_math_region_spans_none():
    assert math_region_spans("no math at all") == []


# ------------------------------------------------------- serialization

def occ(body):
    occurrences = extract_formula_occurrences(doc(body))
    assert len(occurrences) == 1
    return occurrences[0]


def test_serialize_superscript():
    o = occ("<math><mi>E</mi><mo>=</mo><mi>m</mi>"
            "<msup><mi>c</mi><mn>2</mn></msup></math>")
    assert o.formula == "E = m c ^ 2"
    assert o.identifiers == ("E", "m", "c")


def test_serialize_subscript_and_fraction():
    o = occ("<math><msub><mi>a</mi><mi>c</mi></msub><mo>=</mo>"
            "<mfrac><msup><mi>v</mi><mn>2</mn></msup><mi>r</mi></mfrac>"
            "</math>")
    assert o.formula == "a _ c = v ^ 2 / r"
    # the c in a_c indexes a; it is not an unknown of its own
    assert o.identifiers == ("a", "v", "r")


def test_serialize_msubsup():
    o = occ("<math><msubsup><mi>x</mi><mn>1</mn><mn>2</mn></msubsup></math>")
    assert o.formula == "x _ 1 ^ 2"
    assert o.identifiers == ("x",)


def test_serialize_sqrt_groups_with_parens():
    o = occ("<math><mi>v</mi><mo>=</mo><msqrt><mn>2</mn><mi>g</mi><mi>h</mi>"
            "</msqrt></math>")
    assert o.formula == "v = √ ( 2 g h )"


def test_serialize_mover_keeps_base_only():
    o = occ("<math><mover><mi>v</mi><mo>→</mo></mover></math>")
    assert o.formula == "v"
    assert o.identifiers == ("v",)


def test_serialize_skips_annotation_subtree():
    o = occ("<math><semantics><mi>p</mi>"
            "<annotation>p = m v in TeX</annotation></semantics></math>")
    assert o.formula == "p"


def test_function_name_mi_is_not_an_identifier():
    o = occ("<math><mi>x</mi><mo>=</mo><mi>cos</mi><mi>t</mi></math>")
    assert o.formula == "x = cos t"
    assert o.identifiers == ("x", "t")


def test_identifiers_deduplicated_in_first_seen_order():
    o = occ("<math><mi>m</mi><mi>v</mi><mi>m</mi></math>")
    assert o.identifiers == ("m", "v")


def test_unicode_subscript_chars_stripped_from_identifier():
    o = occ("<math><mi>E₀</mi></math>")
    assert o.identifiers == ("E",)


def test_unparseable_region_skipped_with_warning():
    body = "<math><mi>broken</math> and <math><mi>v</mi></math>"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        occurrences = extract_formula_occurrences(doc(body))
    assert [o.formula for o in occurrences] == ["v"]
    assert any("unparseable" in str(w.message) for w in caught)


def test_unbalanced_region_skipped_with_warning():
    body = "fine <math><mi>x</mi></math> then <math><mi>y</mi>"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        occurrences = extract_formula_occurrences(doc(body))
    assert [o.formula for o in occurrences] == ["x"]
    assert any("unbalanced" in str(w.message) for w in caught)


def test_occurrence_span_points_at_region():
    body = "lead <math><mi>f</mi></math> tail"
    o = occ(body)
    start, end = o.span
    assert body[start:end] == "<math><mi>f</mi></math>"


# ------------------------------------------------------------- loading

def test_load_corpus_sorted_ids_and_subjects(tmp_path):
    (tmp_path / "astro").mkdir()
    (tmp_path / "astro" / "b.html").write_text("<p>b</p>", "utf-8")
    (tmp_path / "a.html").write_text("<p>a</p>", "utf-8")
    docs = load_corpus(tmp_path, Source.ARXIV)
    assert [d.doc_id for d in docs] == ["a.html", "astro/b.html"]
    assert docs[0].subject_classes == ()
    assert docs[1].subject_classes == ("astro",)
    assert all(d.source is Source.ARXIV for d in docs)


def test_load_corpus_subject_filter(tmp_path):
    (tmp_path / "astro").mkdir()
    (tmp_path / "hep").mkdir()
    (tmp_path / "astro" / "x.html").write_text("x", "utf-8")
    (tmp_path / "hep" / "y.html").write_text("y", "utf-8")
    docs = load_corpus(tmp_path, Source.ARXIV, subjects=["astro"])
    assert [d.doc_id for d in docs] == ["astro/x.html"]


def test_load_corpus_skips_dot_files(tmp_path):
    (tmp_path / ".hidden").write_text("x", "utf-8")
    (tmp_path / "seen.html").write_text("y", "utf-8")
    assert [d.doc_id for d in load_corpus(tmp_path, Source.FIXTURE)] \
        == ["seen.html"]


def test_load_corpus_skips_non_utf8_with_warning(tmp_path):
    (tmp_path / "bad.bin").write_bytes(b"\xff\xfe\x00broken")
    (tmp_path / "good.html").write_text("fine", "utf-8")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        docs = load_corpus(tmp_path, Source.FIXTURE)
    assert [d.doc_id for d in docs] == ["good.html"]
    assert any("bad.bin" in str(w.message) for w in caught)


def test_load_corpus_missing_root_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "absent", Source.FIXTURE)


# ---------------------------------------------------------------- gold

def sample_record():
    return GoldRecord(
        gold_id=1,
        qid="Q1",
        concept_name="speed",
        formula="v = s/t",
        annotations=(
            IdentifierAnnotation("v", "speed", "Q1"),
            IdentifierAnnotation("s", "distance", "Q2"),
            IdentifierAnnotation("t", "duration", None),
        ),
        synonyms={"speed": frozenset({"velocity"}),
                  "v": frozenset({"c", "u"})},
    )


def test_gold_round_trip(tmp_path):
    path = tmp_path / "gold.tsv"
    save_gold_benchmark([sample_record()], path)
    loaded = load_gold_benchmark(path)
    assert loaded == [sample_record()]


def test_gold_records_sorted_by_id(tmp_path):
    a = sample_record()
    b = GoldRecord(gold_id=0, qid="Q9", concept_name="force",
                   formula="F = m a")
    path = tmp_path / "gold.tsv"
    save_gold_benchmark([a, b], path)
    assert [r.gold_id for r in load_gold_benchmark(path)] == [0, 1]


def test_gold_rejects_header_mismatch(tmp_path):
    path = tmp_path / "gold.tsv"
    path.write_text("gold_id\tqid\n", "utf-8")
    with pytest.raises(ValidationError):
        load_gold_benchmark(path)


def test_gold_rejects_annotation_symbol_missing_from_formula(tmp_path):
    record = GoldRecord(gold_id=2, qid="Q2", concept_name="force",
                        formula="F = m a",
                        annotations=(IdentifierAnnotation("z", "nothing"),))
    with pytest.raises(ValidationError, match="does not"):
        save_gold_benchmark([record], tmp_path / "gold.tsv")


def test_gold_annotation_against_latex_formula():
    # \theta_1 binds θ: command boundaries end at the underscore
    record = GoldRecord(
        gold_id=3, qid="Q3", concept_name="snell's law",
        formula=r"\frac{\sin \theta_1}{\sin \theta_2} = \frac{v_1}{v_2}",
        annotations=(IdentifierAnnotation("θ", "angle"),
                     IdentifierAnnotation("v", "velocity")),
    )
    from mathqa.corpus import _validate_record
    _validate_record(record)


def test_gold_rejects_synonym_equal_to_gold_value(tmp_path):
    record = GoldRecord(gold_id=4, qid="Q4", concept_name="speed",
                        formula="v = s/t",
                        synonyms={"formula": frozenset({"v=s / t"})})
    with pytest.raises(ValidationError, match="synonym"):
        save_gold_benchmark([record], tmp_path / "gold.tsv")


def test_gold_rejects_empty_formula(tmp_path):
    record = GoldRecord(gold_id=5, qid="Q5", concept_name="speed",
                        formula="  ")
    with pytest.raises(ValidationError, match="empty formula"):
        save_gold_benchmark([record], tmp_path / "gold.tsv")


def test_shipped_benchmark_loads_and_validates(gold_records):
    assert len(gold_records) == 65
    ids = [r.gold_id for r in gold_records]
    assert ids == sorted(ids)
    assert len(set(ids)) == 65
    by_id = {r.gold_id: r for r in gold_records}
    speed = by_id[363]
    assert speed.concept_name == "speed"
    assert speed.formula == "v = s/t"
    assert {a.symbol for a in speed.annotations} == {"v", "s", "t"}
