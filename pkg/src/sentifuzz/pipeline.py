"""
The end-to-end sentiment pipeline.

Stage order is fixed: translate, map emoticons (optional), clean,
tokenize, tag (or take the pre-tagged tokens), filter opinion words,
detect negation, remove stopwords, score, grade.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import AbstractSet, List, Optional, Sequence, Tuple

from nltk.tag.api import TaggerI

from .fuzzy import FuzzyPartition, classify, default_partition
from .lexicon import Lexicon
from .scoring import ScoredPost, WeightTable, score_post
from .tagging import TaggedToken, build_baseline_tagger, tag
from .textproc import (
    EmoticonPolarity,
    RawPost,
    Translator,
    clean,
    identity_translator,
    map_emoticons,
    tokenize,
    translate_hook,
)

logger = logging.getLogger(__name__)


class SentimentPipeline:
    """
    Lexicon-based sentiment scorer for micro-blog posts.

    Holds the immutable resources of a run (lexicon, stopwords, weights,
    partition, tagger) and scores posts one by one or as a corpus.
    """

    def __init__(
        self,
        lexicon: Lexicon,
        stopwords: AbstractSet[str] = frozenset(),
        weights: Optional[WeightTable] = None,
        partition: Optional[FuzzyPartition] = None,
        tagger: Optional[TaggerI] = None,
        translator: Translator = identity_translator,
        emoticons: bool = False,
        use_pretagged: bool = True,
    ):
        """
        Initialize the pipeline.

        Args:
            lexicon: Polarity lexicon
            stopwords: Words removed after negation detection
            weights: Term weights; all posts weigh 1.0 when None
            partition: Fuzzy partition; the default one when None
            tagger: NLTK-compatible tagger; the baseline tagger when None
            translator: Text translator applied first
            emoticons: Map emoticons to polarity hits before cleaning
            use_pretagged: Trust tags shipped with pre-tagged posts; when
                False those posts are re-tagged from their surfaces
        """
        self.lexicon = lexicon
        self.stopwords = frozenset(stopwords)
        self.weights = weights if weights is not None else WeightTable()
        self.partition = partition if partition is not None else default_partition()
        self.tagger = tagger if tagger is not None else build_baseline_tagger(lexicon)
        self.translator = translator
        self.emoticons = emoticons
        self.use_pretagged = use_pretagged
        self.warnings: List[str] = []

    def prepare(
        self, post: RawPost, warnings: Optional[List[str]] = None
    ) -> Tuple[List[TaggedToken], List[EmoticonPolarity]]:
        """Run the stages up to tagging; return tagged tokens and emoticon hits."""
        if post.tagged is not None:
            if self.use_pretagged:
                return list(post.tagged), []
            tokens = tokenize(" ".join(t.normalized for t in post.tagged))
            return tag(tokens, self.tagger), []

        post = translate_hook(post, self.translator, warnings)
        text = post.text
        hits: List[EmoticonPolarity] = []
        if self.emoticons:
            text, hits = map_emoticons(text)
        tokens = tokenize(clean(text))
        return tag(tokens, self.tagger), hits

    def _analyze(self, post: RawPost) -> Tuple[ScoredPost, List[str]]:
        warnings: List[str] = []
        tagged, hits = self.prepare(post, warnings)
        scored = score_post(
            post,
            tagged,
            self.lexicon,
            weights=self.weights,
            stopwords=self.stopwords,
            emoticons=hits,
        )
        graded = replace(scored, label=classify(scored.total_score, self.partition))
        return graded, warnings

    def analyze(self, post: RawPost) -> ScoredPost:
        """Score and grade a single post."""
        scored, warnings = self._analyze(post)
        self.warnings.extend(warnings)
        return scored

    def analyze_corpus(
        self, posts: Sequence[RawPost], workers: int = 1
    ) -> List[ScoredPost]:
        """
        Score every post, preserving input order.

        Workers only change how the posts are scheduled; results and
        warnings are collected back in input order.

        Args:
            posts: Posts to score
            workers: Thread count; 1 scores sequentially

        Returns:
            list: Scored posts in the order given
        """
        if workers <= 1 or len(posts) < 2:
            outcomes = [self._analyze(post) for post in posts]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                outcomes = list(executor.map(self._analyze, posts))

        results = []
        for scored, warnings in outcomes:
            results.append(scored)
            self.warnings.extend(warnings)
        unmatched = sum(r.unmatched for r in results)
        if unmatched:
            logger.info("%d opinion words had no lexicon entry", unmatched)
        return results
