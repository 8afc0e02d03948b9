import numpy as np
import pytest
from pydantic import ValidationError

import errors
from prereg import HypothesisDoc, canonicalize, digest, sha256_hex, verify
from tests.helpers.prereg_helpers import TEXT_ALPHABET, hypothesis, make_doc, next_character, random_doc

pytestmark = pytest.mark.unit


def test_sha256_reference_vectors() -> None:
    assert sha256_hex(b"") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    assert sha256_hex(b"abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"


def test_digest_shape() -> None:
    value = digest(make_doc())
    assert len(value) == 64
    assert value == value.lower()


def test_canonical_form_is_compact_and_sorted() -> None:
    text = canonicalize(make_doc()).decode("utf-8")
    assert ", " not in text and ": " not in text
    assert text.index('"author"') < text.index('"direction"') < text.index('"experiment_id"')


def test_key_order_does_not_matter() -> None:
    shuffled = dict(reversed(list(hypothesis().items())))
    assert digest(HypothesisDoc.model_validate(shuffled)) == digest(make_doc())


def test_float_spelling_does_not_matter() -> None:
    a = HypothesisDoc.model_validate_json('{"experiment_id": "x", "statement_texts": ["s"], '
                                          '"similar_pair": {"layer_a": "p", "layer_b": "q", '
                                          '"classification": "similar"}, "thresholds": {"floor": 0.20}}')
    b = HypothesisDoc.model_validate_json('{"experiment_id": "x", "statement_texts": ["s"], '
                                          '"similar_pair": {"layer_a": "p", "layer_b": "q", '
                                          '"classification": "similar"}, "thresholds": {"floor": 0.2}}')
    assert digest(a) == digest(b)


def test_unicode_is_kept_verbatim() -> None:
    text = canonicalize(make_doc(notes="Δr ≥ 0.2")).decode("utf-8")
    assert "Δr ≥ 0.2" in text


@pytest.mark.parametrize("mutation", [
    {"statement_texts": ["A different claim."]},
    {"direction": "less"},
    {"thresholds": {"delta_r_floor": 0.25, "alpha": 0.05}},
    {"notes": "added later"},
    {"dissimilar_pair": None},
    {"similar_pair": {"layer_a": "imports", "layer_b": "co_change", "classification": "similar"}},
])
def test_any_mutation_changes_digest(mutation) -> None:
    assert digest(make_doc(**mutation)) != digest(make_doc())


def test_verify() -> None:
    d = make_doc()
    assert verify(d, digest(d))
    assert verify(d, digest(d).upper())
    assert not verify(make_doc(notes="edited"), digest(d))


def test_legacy_prefix() -> None:
    d = make_doc()
    short = digest(d)[:16]
    assert verify(d, short, legacy=True)
    assert not verify(make_doc(notes="edited"), short, legacy=True)
    with pytest.raises(errors.MalformedDigest) as excinfo:
        verify(d, short)
    assert "legacy" in str(excinfo.value)


@pytest.mark.parametrize("claimed", ["", "xyz", "0" * 63, "g" * 64])
def test_malformed_digest(claimed) -> None:
    with pytest.raises(errors.MalformedDigest):
        verify(make_doc(), claimed)


@pytest.mark.parametrize("override", [
    {"experiment_id": "   "},
    {"statement_texts": []},
    {"thresholds": {"alpha": float("nan")}},
    {"extra": 1},
])
def test_invalid_documents(override) -> None:
    with pytest.raises(ValidationError):
        make_doc(**override)


def with_statements(doc: HypothesisDoc, texts) -> HypothesisDoc:
    return HypothesisDoc.model_validate({**doc.model_dump(), "statement_texts": list(texts)})


def single_character_edits(text: str, position: int, inserted: str):
    yield text[:position] + next_character(text[position]) + text[position + 1:]
    yield text[:position] + inserted + text[position:]
    if len(text) > 1:
        yield text[:position] + text[position + 1:]


def test_round_trip_on_random_docs() -> None:
    rng = np.random.default_rng(1729)
    for _ in range(1000):
        doc = random_doc(rng)
        value = digest(doc)
        assert verify(doc, value)
        assert digest(HypothesisDoc.model_validate_json(doc.model_dump_json())) == value


def test_random_statement_edits_fail_verification() -> None:
    rng = np.random.default_rng(4242)
    for _ in range(1000):
        doc = random_doc(rng)
        value = digest(doc)
        for index, text in enumerate(doc.statement_texts):
            position = int(rng.integers(0, len(text)))
            inserted = TEXT_ALPHABET[int(rng.integers(0, len(TEXT_ALPHABET)))]
            for edited in single_character_edits(text, position, inserted):
                texts = list(doc.statement_texts)
                texts[index] = edited
                assert not verify(with_statements(doc, texts), value)


def test_every_statement_position_is_covered() -> None:
    rng = np.random.default_rng(99)
    for _ in range(25):
        doc = random_doc(rng)
        value = digest(doc)
        for index, text in enumerate(doc.statement_texts):
            for position in range(len(text)):
                for edited in single_character_edits(text, position, "x"):
                    texts = list(doc.statement_texts)
                    texts[index] = edited
                    assert not verify(with_statements(doc, texts), value), (index, position, edited)
