import json

import pytest

from doctopics.corpus import (
    ENGLISH_STOPWORDS,
    PreprocessOptions,
    SectionSpec,
    build_vocabulary,
    load_manifest,
    preprocess,
    split_sections,
    stem,
    to_bow,
)
from doctopics.corpus.sections import Section, preamble
from doctopics.errors import (
    DuplicateDocId,
    EmptyVocabulary,
    MissingFile,
    NoSectionMatched,
    SchemaViolation,
)


def write_manifest(tmp_path, documents, structure=None):
    for doc in documents:
        (tmp_path / doc["text"]).write_text(f"A. Intro\nbody of {doc['doc_id']}\n")
    manifest = {
        "version": 1,
        "language": "en",
        "stopwords_extra": [],
        "structure": structure or {"sections": [{"id": "A", "header_pattern": "^A\\."}]},
        "documents": documents,
    }
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(manifest))
    return path


class TestManifest:
    def test_fixture_roundtrip(self, tmp_path):
        docs = [
            {"doc_id": d, "entity_id": d, "text": f"{d}.txt", "covariates": {"gdp": 1.0}}
            for d in ("AT", "SE", "DE")
        ]
        m = load_manifest(write_manifest(tmp_path, docs))
        assert m.doc_ids == ["AT", "SE", "DE"]
        assert m.covariate_names == ["gdp"]

    def test_duplicate_doc_id(self, tmp_path):
        docs = [
            {"doc_id": "AT", "entity_id": "AT", "text": "a.txt", "covariates": {}},
            {"doc_id": "AT", "entity_id": "AT", "text": "b.txt", "covariates": {}},
        ]
        with pytest.raises(DuplicateDocId, match="AT"):
            load_manifest(write_manifest(tmp_path, docs))

    def test_missing_text_file(self, tmp_path):
        docs = [{"doc_id": "AT", "entity_id": "AT", "text": "a.txt", "covariates": {}}]
        path = write_manifest(tmp_path, docs)
        (tmp_path / "a.txt").unlink()
        with pytest.raises(MissingFile, match="a.txt"):
            load_manifest(path)

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(MissingFile):
            load_manifest(tmp_path / "nope.json")

    def test_covariate_keys_must_match(self, tmp_path):
        docs = [
            {"doc_id": "AT", "entity_id": "AT", "text": "a.txt", "covariates": {"gdp": 1.0}},
            {"doc_id": "SE", "entity_id": "SE", "text": "b.txt", "covariates": {}},
        ]
        with pytest.raises(SchemaViolation, match="gdp"):
            load_manifest(write_manifest(tmp_path, docs))

    def test_null_covariate_allowed(self, tmp_path):
        docs = [
            {"doc_id": "AT", "entity_id": "AT", "text": "a.txt", "covariates": {"gdp": 1.0}},
            {"doc_id": "SE", "entity_id": "SE", "text": "b.txt", "covariates": {"gdp": None}},
        ]
        m = load_manifest(write_manifest(tmp_path, docs))
        assert m.documents[1].covariates["gdp"] is None

    def test_bad_pattern_named(self, tmp_path):
        docs = [{"doc_id": "AT", "entity_id": "AT", "text": "a.txt", "covariates": {}}]
        structure = {"sections": [{"id": "A", "header_pattern": "["}]}
        with pytest.raises(SchemaViolation, match="header_pattern"):
            load_manifest(write_manifest(tmp_path, docs, structure))


class TestSplitSections:
    spec = SectionSpec(sections=(("A", r"^A\."), ("B", r"^B\.")))

    def test_two_header_split(self):
        text = "A. Intro\nfoo\nB. Plan\nbar"
        secs = split_sections(text, self.spec, doc_id="X")
        assert [s.section_id for s in secs] == ["A", "B"]
        assert secs[0].body == "foo\n"
        assert secs[1].body == "bar"

    def test_partial_structure(self):
        secs = split_sections("B. Plan\nbar", self.spec)
        assert [s.section_id for s in secs] == ["B"]

    def test_no_headers(self):
        with pytest.raises(NoSectionMatched):
            split_sections("nothing here", self.spec)

    def test_lossless_reassembly(self):
        text = "preamble stuff\nA. Intro\nfoo\nB. Plan\nbar\ntail"
        secs = split_sections(text, self.spec)
        rebuilt = preamble(text, secs) + "".join(s.raw_text for s in secs)
        assert rebuilt == text

    def test_offsets_mode(self):
        spec = SectionSpec(offsets={"X": [("A", 0), ("B", 4)]})
        secs = split_sections("aaaabbbb", spec, doc_id="X")
        assert [(s.section_id, s.raw_text) for s in secs] == [("A", "aaaa"), ("B", "bbbb")]
        assert preamble("aaaabbbb", secs) == ""


class TestPreprocess:
    def test_stem_and_stopwords(self):
        # hand-traced: plans -(1a)-> plan; running -(1b)-> runn -> run
        assert preprocess("The plans ARE Running") == ["plan", "run"]

    def test_empty(self):
        assert preprocess("") == []

    def test_all_stopwords(self):
        assert preprocess("a an the") == []

    def test_digits_punctuation_stripped(self):
        opts = PreprocessOptions(stemming=False)
        assert preprocess("energy2030, policy!", opts) == ["energy", "policy"]

    def test_min_token_len(self):
        opts = PreprocessOptions(stemming=False, min_token_len=5)
        assert preprocess("grid solar we", opts) == ["solar"]

    def test_lemma_table_precedence(self):
        opts = PreprocessOptions(lemma_table={"mice": "mouse"})
        assert preprocess("mice running", opts) == ["mouse", "run"]

    def test_idempotent_without_stemming(self):
        opts = PreprocessOptions(stemming=False)
        tokens = preprocess("Solar grids and wind turbines everywhere", opts)
        assert preprocess(" ".join(tokens), opts) == tokens

    def test_stemmer_fixed_point_on_fixture_tokens(self, fixture_manifest):
        corpus_dir = fixture_manifest.parent
        opts = PreprocessOptions()
        for text_file in sorted((corpus_dir / "texts").glob("*.txt")):
            for token in preprocess(text_file.read_text(), opts):
                assert stem(token) == token

    def test_porter_reference_words(self):
        expected = {
            "caresses": "caress", "ponies": "poni", "relational": "relat",
            "hopping": "hop", "happy": "happi", "agreed": "agre",
            "conditional": "condit", "sized": "size", "feed": "feed",
        }
        for word, out in expected.items():
            assert stem(word) == out


def make_sections(token_lists):
    return [
        Section(doc_id=f"D{i}", section_id="s", raw_text="", body="", tokens=toks)
        for i, toks in enumerate(token_lists)
    ]


class TestVocabulary:
    def test_min_df_retains(self):
        secs = make_sections([["energy"], ["energy"], ["energy"]])
        vocab = build_vocabulary(secs, min_df=2, max_df=1.0)
        assert vocab.tokens == ("energy",)

    def test_max_df_drops(self):
        secs = make_sections([["energy", "plan"], ["energy", "plan"], ["energy"], ["energy"]])
        vocab = build_vocabulary(secs, min_df=2, max_df=0.5)
        assert "energy" not in vocab.tokens  # df 4/4 > 0.5
        assert "plan" in vocab.tokens        # df 2/4 = 0.5

    def test_empty_vocabulary(self):
        secs = make_sections([["one"], ["two"], ["three"]])
        with pytest.raises(EmptyVocabulary):
            build_vocabulary(secs, min_df=2, max_df=1.0)

    def test_ids_lexicographic_and_stable(self):
        secs = make_sections([["zeta", "alpha"], ["zeta", "alpha"]])
        v1 = build_vocabulary(secs, min_df=2, max_df=1.0)
        v2 = build_vocabulary(list(reversed(secs)), min_df=2, max_df=1.0)
        assert v1.tokens == ("alpha", "zeta") == v2.tokens


class TestToBow:
    def make_vocab(self):
        secs = make_sections([["plan", "risk"], ["plan", "risk"]])
        return build_vocabulary(secs, min_df=1, max_df=1.0)

    def test_direct_count(self):
        vocab = self.make_vocab()
        ids, counts = to_bow(["plan", "plan", "risk"], vocab)
        assert dict(zip(ids.tolist(), counts.tolist())) == {vocab.id_of["plan"]: 2, vocab.id_of["risk"]: 1}

    def test_oov_dropped(self):
        ids, counts = to_bow(["unknown"], self.make_vocab())
        assert len(ids) == 0 and len(counts) == 0

    def test_empty(self):
        ids, counts = to_bow([], self.make_vocab())
        assert len(ids) == 0

    def test_count_sum_equals_in_vocab_tokens(self):
        vocab = self.make_vocab()
        tokens = ["plan", "risk", "plan", "oov", "risk", "plan"]
        _, counts = to_bow(tokens, vocab)
        in_vocab = [t for t in tokens if t in vocab.id_of]
        assert counts.sum() == len(in_vocab)
