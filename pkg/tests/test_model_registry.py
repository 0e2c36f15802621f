import json
import math
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mahanlp.backends.stub import StubBackend, fnv1a64, hash_text, load_stub_vocab
from mahanlp.errors import CapabilityError, CatalogError, InputError, ModelLoadError
from mahanlp.model_registry import (
    FEATURES,
    BackendConfig,
    ModelDescriptor,
    list_models,
    load_backend,
    resolve,
)

DATA_DIR = Path(__file__).parent / "data"

DEVANAGARI_TEXT = st.text(
    alphabet="अआइईउकखगघचजटडतथदनपबमयरलवशसहािीुूेोौं् ",
    min_size=1, max_size=40,
).filter(str.strip)

# Published FNV-1a 64-bit reference vectors; anchor both implementations.
FNV_VECTORS = [
    (b"", 0xCBF29CE484222325),
    (b"a", 0xAF63DC4C8601EC8C),
    (b"foobar", 0x85944171F73967E8),
]


class TestHashFoundations:
    @pytest.mark.parametrize("data,expected", FNV_VECTORS)
    def test_package_hash_reference_vectors(self, data, expected):
        assert fnv1a64(data) == expected

    @pytest.mark.parametrize("data,expected", FNV_VECTORS)
    def test_oracle_hash_reference_vectors(self, data, expected):
        assert oracles.fnv1a_64(data) == expected

    def test_hash_is_nfc_normalized(self):
        # composed and decomposed spellings of the same text hash identically
        assert hash_text("की") == hash_text("की")

    def test_vocab_resource_matches_golden_copy(self):
        assert load_stub_vocab() == oracles.STUB_VOCAB


class TestCatalog:
    def test_features(self):
        assert FEATURES == ("sentiment", "hate", "tagger", "autocomplete",
                            "mask_fill", "similarity")

    def test_default_ids_match_fixture(self):
        fixture = json.loads((DATA_DIR / "default_models.json").read_text("utf-8"))
        for feature in FEATURES:
            default = next(d for d in list_models(feature) if d.is_default)
            assert default.model_id == fixture[feature]

    def test_exactly_one_default_per_feature(self):
        for feature in FEATURES:
            entries = list_models(feature)
            assert entries
            assert sum(1 for d in entries if d.is_default) == 1

    def test_tagger_default(self):
        default = next(d for d in list_models("tagger") if d.is_default)
        assert default.model_id == "l3cube-pune/marathi-ner"

    def test_mask_fill_default(self):
        default = next(d for d in list_models("mask_fill") if d.is_default)
        assert default.model_id == "l3cube-pune/marathi-bert-v2"

    def test_unknown_feature_rejected(self):
        with pytest.raises(CatalogError):
            list_models("bogus")

    def test_stub_registered_everywhere(self):
        for feature in FEATURES:
            assert any(d.model_id == "stub" and d.backend_kind == "stub"
                       for d in list_models(feature))


class TestResolve:
    def test_absent_name_gives_default(self):
        assert resolve("sentiment", None).model_id == "l3cube-pune/MarathiSentiment"

    def test_known_name_gives_catalog_entry(self):
        desc = resolve("hate", "l3cube-pune/mahahate-bert")
        assert desc.is_default
        assert desc.backend_kind == "hub"

    def test_unknown_name_passes_through_as_hub(self):
        desc = resolve("sentiment", "custom/x")
        assert desc.model_id == "custom/x"
        assert desc.backend_kind == "hub"
        assert not desc.is_default

    def test_unknown_feature_rejected(self):
        with pytest.raises(CatalogError):
            resolve("bogus", None)

    def test_empty_model_id_rejected(self):
        with pytest.raises(InputError):
            ModelDescriptor(feature="sentiment", model_id="")


class TestBackendConfig:
    def test_defaults(self):
        config = BackendConfig()
        assert config.gpu_enabled is False
        assert config.max_input_tokens == 512

    @pytest.mark.parametrize("bad", [0, -1])
    def test_max_tokens_must_be_positive(self, bad):
        with pytest.raises(InputError):
            BackendConfig(max_input_tokens=bad)


def stub_backend(**config_kwargs):
    descriptor = resolve("sentiment", "stub")
    return load_backend(descriptor, BackendConfig(**config_kwargs))


class TestLoadBackend:
    def test_stub_loads_and_ignores_gpu(self):
        backend = stub_backend(gpu_enabled=True)
        out = backend.classify("मी", ["a", "b", "c"])
        assert 0 <= out.label_index < 3

    def test_stub_thread_safe_flag(self):
        assert stub_backend().thread_safe is True

    def test_unknown_backend_kind(self):
        desc = ModelDescriptor(feature="sentiment", model_id="x",
                               backend_kind="weird")
        with pytest.raises(CatalogError):
            load_backend(desc, BackendConfig())

    def test_hub_gpu_without_cuda_is_capability_error(self):
        torch = pytest.importorskip("torch")
        if torch.cuda.is_available():
            pytest.skip("machine has a GPU")
        desc = resolve("sentiment", None)
        with pytest.raises(CapabilityError):
            load_backend(desc, BackendConfig(gpu_enabled=True))


class TestStubAgainstOracle:
    def test_classify_worked_example(self):
        # classify("मी") over three labels
        backend = stub_backend()
        out = backend.classify("मी", ["a", "b", "c"])
        h = oracles.text_hash("मी")
        assert out.label_index == h % 3
        assert out.score == 0.5 + (h % 4096) / 8192

    def test_determinism(self):
        backend = stub_backend()
        a = backend.classify("मी घरी जातो", ["x", "y"])
        b = backend.classify("मी घरी जातो", ["x", "y"])
        assert a == b

    @given(DEVANAGARI_TEXT)
    @settings(max_examples=150, deadline=None)
    def test_classify_matches_oracle(self, text):
        out = StubBackend().classify(text, ["p", "n", "u"])
        idx, score, truncated = oracles.oracle_classify(text, ["p", "n", "u"])
        assert out.label_index == idx
        assert out.score == score
        assert out.truncated == truncated
        assert 0.5 <= out.score < 1.0

    @given(st.lists(DEVANAGARI_TEXT, min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_tag_matches_oracle(self, tokens):
        tagset = ["O", "A", "B", "C"]
        out = StubBackend().tag(tokens, tagset)
        expected, truncated = oracles.oracle_tag(tokens, tagset)
        assert list(out.entries) == expected
        assert out.truncated == truncated
        for _, score in out.entries:
            assert 0.5 <= score < 1.0

    @given(DEVANAGARI_TEXT, st.integers(min_value=0, max_value=20))
    @settings(max_examples=100, deadline=None)
    def test_generate_matches_oracle(self, text, n):
        out = StubBackend().generate(text, n)
        expected, _ = oracles.oracle_generate(text, n)
        assert list(out.words) == expected

    @given(DEVANAGARI_TEXT, st.integers(min_value=1, max_value=16))
    @settings(max_examples=100, deadline=None)
    def test_fill_mask_matches_oracle(self, text, k):
        out = StubBackend().fill_mask(text, k)
        expected, _ = oracles.oracle_fill_mask(text, k)
        got = [(c.token, c.score) for c in out.candidates]
        assert [t for t, _ in got] == [t for t, _ in expected]
        for (_, got_score), (_, want_score) in zip(got, expected):
            assert math.isclose(got_score, want_score, rel_tol=0, abs_tol=1e-12)

    def test_fill_mask_scores_positive_and_sum_to_one(self):
        out = StubBackend().fill_mask("मी घरी", 16)
        scores = [c.score for c in out.candidates]
        assert all(0 < s <= 1 for s in scores)
        assert math.isclose(sum(scores), 1.0, abs_tol=1e-9)

    def test_fill_mask_sorted_descending_ties_by_token(self):
        out = StubBackend().fill_mask("मी घरी", 16)
        pairs = [(c.score, c.token) for c in out.candidates]
        for (s1, t1), (s2, t2) in zip(pairs, pairs[1:]):
            assert s1 > s2 or (s1 == s2 and t1 < t2)

    @pytest.mark.parametrize("bad_k", [0, -3, 17, 100])
    def test_fill_mask_k_bounds(self, bad_k):
        with pytest.raises(InputError):
            StubBackend().fill_mask("मी", bad_k)

    @given(DEVANAGARI_TEXT)
    @settings(max_examples=100, deadline=None)
    def test_embed_matches_oracle(self, text):
        out = StubBackend().embed(text)
        expected, _ = oracles.oracle_embed(text)
        assert len(out.vector) == 16
        assert list(out.vector) == expected
        assert all(0.0 <= v <= 1.0 for v in out.vector)

    def test_truncation_sets_flag_and_matches_oracle(self):
        config = BackendConfig(max_input_tokens=4)
        backend = StubBackend(config)
        text = "एक दोन तीन चार पाच सहा"
        out = backend.classify(text, ["a", "b"])
        assert out.truncated is True
        idx, score, truncated = oracles.oracle_classify(text, ["a", "b"], limit=4)
        assert truncated is True
        assert (out.label_index, out.score) == (idx, score)
        # truncated call equals a direct call on the kept prefix
        direct = backend.classify("एक दोन तीन चार", ["a", "b"])
        assert (out.label_index, out.score) == (direct.label_index, direct.score)

    def test_tag_truncation(self):
        backend = StubBackend(BackendConfig(max_input_tokens=2))
        out = backend.tag(["एक", "दोन", "तीन"], ["O", "X"])
        assert out.truncated is True
        assert len(out.entries) == 2

    def test_embed_self_cosine_exactly_one(self):
        v = StubBackend().embed("मी घरी जातो").vector
        dot = sum(a * b for a, b in zip(v, v))
        norm = math.sqrt(dot)
        assert dot / (norm * norm) == 1.0
