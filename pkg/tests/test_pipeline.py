"""
Tests for the end-to-end pipeline.
"""

import random

import pytest

from sentifuzz.analytics import build_report
from sentifuzz.fuzzy import SentimentClass
from sentifuzz.ingest import ingest
from sentifuzz.lexicon import Lexicon
from sentifuzz.pipeline import SentimentPipeline
from sentifuzz.scoring import load_weights
from sentifuzz.tagging import parse_pretagged
from sentifuzz.textproc import RawPost, load_stopwords, load_translations

from .conftest import GOLDEN_LABELS, GOLDEN_SCORES, GOLDEN_WEIGHTS


@pytest.fixture
def pipeline(fixture_lexicon):
    return SentimentPipeline(
        fixture_lexicon, stopwords=load_stopwords(), weights=load_weights()
    )


def pretagged_post(line, post_id="1"):
    return RawPost(id=post_id, text=line, tagged=tuple(parse_pretagged(line)))


class TestGoldenCorpus:
    """Tests for the ten reference posts."""

    def test_pretagged(self, pipeline, golden_posts):
        scored = pipeline.analyze_corpus(golden_posts)
        assert [s.total_score for s in scored] == GOLDEN_SCORES
        assert [s.weight for s in scored] == GOLDEN_WEIGHTS
        assert [s.label.value for s in scored] == GOLDEN_LABELS

    def test_raw_text_with_translations(
        self, fixture_lexicon, golden_raw_path, golden_translations_path
    ):
        """Test raw posts reach the same totals through the built-in tagger."""
        pipeline = SentimentPipeline(
            fixture_lexicon,
            stopwords=load_stopwords(),
            weights=load_weights(),
            translator=load_translations(golden_translations_path),
        )
        scored = pipeline.analyze_corpus(ingest(golden_raw_path, "text"))
        assert [s.total_score for s in scored] == GOLDEN_SCORES
        assert [s.label.value for s in scored] == GOLDEN_LABELS
        assert pipeline.warnings == []

    def test_raw_text_with_emoticons(
        self, fixture_lexicon, golden_raw_path, golden_translations_path
    ):
        """Test the trailing smiley of the last post adds half a point."""
        pipeline = SentimentPipeline(
            fixture_lexicon,
            stopwords=load_stopwords(),
            translator=load_translations(golden_translations_path),
            emoticons=True,
        )
        scored = pipeline.analyze_corpus(ingest(golden_raw_path, "text"))
        assert [s.total_score for s in scored] == GOLDEN_SCORES[:-1] + [1.1875]
        assert scored[-1].label is SentimentClass.STRONG_POSITIVE


class TestPipeline:
    """Tests for individual stages."""

    def test_untranslated_post_scores_nothing(self, fixture_lexicon):
        pipeline = SentimentPipeline(fixture_lexicon)
        scored = pipeline.analyze(RawPost(id="1", text="J'aime mon Iphone4S."))
        assert scored.total_score == 0.0
        assert scored.label is SentimentClass.OBJECTIVE

    def test_pretagged_tags_trusted(self, fixture_lexicon):
        pipeline = SentimentPipeline(fixture_lexicon)
        scored = pipeline.analyze(pretagged_post("Damn/NN iphone/NN"))
        assert scored.total_score == 0.0

    def test_pretagged_retagged(self, fixture_lexicon):
        """Test pre-tagged posts are re-tagged when their tags are not trusted."""
        pipeline = SentimentPipeline(fixture_lexicon, use_pretagged=False)
        scored = pipeline.analyze(pretagged_post("Damn/NN iphone/NN"))
        assert scored.total_score == -0.75
        assert [t.tag.value for t in scored.tagged] == ["JJ", "NN"]

    def test_no_weights_means_unit_weight(self, fixture_lexicon):
        pipeline = SentimentPipeline(fixture_lexicon)
        scored = pipeline.analyze(RawPost(id="1", text="iphone is good"))
        assert scored.weight == 1.0

    def test_custom_tagger(self, fixture_lexicon):
        """Test any NLTK-style tagger can stand in for the built-in one."""
        from nltk.tag import DefaultTagger

        pipeline = SentimentPipeline(fixture_lexicon, tagger=DefaultTagger("JJ"))
        scored = pipeline.analyze(RawPost(id="1", text="good bad"))
        assert scored.total_score == 0.625 - 0.75

    def test_warnings_in_input_order(self, fixture_lexicon):
        """Test translation failures are reported in input order under threads."""

        def translator(text):
            if text.startswith("fail"):
                raise RuntimeError("offline")
            return text

        posts = [
            RawPost(id=str(i), text="fail" if i % 7 == 0 else "good")
            for i in range(1, 50)
        ]
        pipeline = SentimentPipeline(fixture_lexicon, translator=translator)
        pipeline.analyze_corpus(posts, workers=4)
        expected_ids = [str(i) for i in range(1, 50) if i % 7 == 0]
        assert len(pipeline.warnings) == len(expected_ids)
        for warning, post_id in zip(pipeline.warnings, expected_ids):
            assert f"post {post_id}:" in warning

    def test_empty_corpus(self, pipeline):
        assert pipeline.analyze_corpus([]) == []


class TestParallelScoring:
    """Tests for order-preserving parallel scoring."""

    VOCABULARY = [
        "good",
        "bad",
        "not",
        "never",
        "iphone",
        "iphone4s",
        "is",
        "lovely",
        "damn",
        "@user",
        "#tag",
        "http://t.co/x",
        "amazing",
        "sloppy",
        "the",
        "battery",
        ":)",
        ":(",
        "running",
        "4",
    ]

    def random_posts(self, rng, count):
        return [
            RawPost(
                id=str(i),
                text=" ".join(
                    rng.choice(self.VOCABULARY) for _ in range(rng.randint(0, 12))
                ),
            )
            for i in range(count)
        ]

    def test_parallel_report_matches_sequential(self, fixture_lexicon):
        """Test worker count never changes the report bytes."""
        rng = random.Random(41)
        posts = self.random_posts(rng, 600)
        reports = []
        for workers in (1, 4, 8):
            pipeline = SentimentPipeline(
                fixture_lexicon,
                stopwords=load_stopwords(),
                weights=load_weights(),
                emoticons=True,
            )
            scored = pipeline.analyze_corpus(posts, workers=workers)
            reports.append(build_report(scored, pipeline.warnings).to_json())
        assert reports[0] == reports[1] == reports[2]

    def test_empty_lexicon_scores_zero(self):
        rng = random.Random(42)
        pipeline = SentimentPipeline(Lexicon())
        for scored in pipeline.analyze_corpus(self.random_posts(rng, 500), workers=4):
            assert scored.total_score == 0.0
            assert scored.label is SentimentClass.OBJECTIVE
