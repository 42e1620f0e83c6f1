"""
Per-token sentiment contributions, negation inversion, term weights and
post totals.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import (
    AbstractSet,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .exceptions import InputFormatError
from .fuzzy import SentimentClass
from .lexicon import Lexicon, PosCategory
from .resources import WEIGHTS_FILE, data_file
from .tagging import PennTag, TaggedToken
from .textproc import EmoticonPolarity, RawPost, filter_opinion_words, remove_stopwords

logger = logging.getLogger(__name__)

NEGATION_PARTICLES = frozenset({"not", "no", "never", "n't"})
NEGATION_WINDOW = 2

_TAG_CATEGORIES: Dict[PennTag, PosCategory] = {
    PennTag.JJ: PosCategory.ADJECTIVE,
    PennTag.JJR: PosCategory.ADJECTIVE,
    PennTag.JJS: PosCategory.ADJECTIVE,
    PennTag.RB: PosCategory.ADVERB,
    PennTag.RBR: PosCategory.ADVERB,
    PennTag.RBS: PosCategory.ADVERB,
    PennTag.VB: PosCategory.VERB,
    PennTag.VBD: PosCategory.VERB,
    PennTag.VBG: PosCategory.VERB,
    PennTag.VBN: PosCategory.VERB,
    PennTag.VBP: PosCategory.VERB,
    PennTag.VBZ: PosCategory.VERB,
    PennTag.NN: PosCategory.NOUN,
    PennTag.NNS: PosCategory.NOUN,
}


def tag_to_category(tag: PennTag) -> Optional[PosCategory]:
    """Map a Penn tag to its lexicon category; None for non-opinion tags."""
    return _TAG_CATEGORIES.get(tag)


@dataclass(frozen=True)
class TokenScore:
    """Lexicon scores of one token and whether negation flipped it."""

    token: TaggedToken
    pos: float
    neg: float
    negated: bool = False
    matched: bool = True

    @property
    def net(self) -> float:
        raw = self.pos - self.neg
        return -raw if self.negated else raw


@dataclass(frozen=True)
class WeightTable:
    """Importance weights in (0, 1] for product terms; 1.0 when unlisted."""

    weights: Mapping[str, float] = field(default_factory=dict)
    default: float = 1.0

    def __post_init__(self) -> None:
        for term, weight in self.weights.items():
            if not 0.0 < weight <= 1.0:
                raise ValueError(f"Weight for {term!r} outside (0,1]: {weight}")
        normalized = {term.lower(): weight for term, weight in self.weights.items()}
        object.__setattr__(self, "weights", MappingProxyType(normalized))

    def post_weight(self, terms: Iterable[str]) -> float:
        """Largest weight among listed terms present; the default otherwise."""
        lowered = [t.lower() for t in terms]
        present = [self.weights[t] for t in lowered if t in self.weights]
        return max(present) if present else self.default


def load_weights(path: Optional[Union[str, Path]] = None) -> WeightTable:
    """
    Load a "term<TAB>weight" file.

    Args:
        path: Weight file; the bundled example table when None

    Raises:
        InputFormatError: On a malformed line or an out-of-range weight
    """
    if path is None:
        path = data_file(WEIGHTS_FILE)
    weights: Dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise InputFormatError(
                    str(path), line_number, "expected term<TAB>weight"
                )
            term, raw = parts[0].strip().lower(), parts[1].strip()
            try:
                weight = float(raw)
            except ValueError:
                raise InputFormatError(
                    str(path), line_number, f"weight is not numeric: {raw!r}"
                ) from None
            if not 0.0 < weight <= 1.0:
                raise InputFormatError(
                    str(path), line_number, f"weight outside (0,1]: {weight}"
                )
            weights[term] = weight
    return WeightTable(weights)


def apply_negation(tokens: Sequence[TaggedToken]) -> List[Tuple[TaggedToken, bool]]:
    """
    Flag adjectives governed by a negation particle.

    Each particle marks the nearest adjective among the next two tokens;
    a second particle on the same adjective toggles the flag back. The
    particles stay in the list and keep their own lexicon score.
    """
    negated = [False] * len(tokens)
    for position, token in enumerate(tokens):
        if token.normalized not in NEGATION_PARTICLES:
            continue
        end = min(position + 1 + NEGATION_WINDOW, len(tokens))
        window = range(position + 1, end)
        for target in window:
            if tag_to_category(tokens[target].tag) is PosCategory.ADJECTIVE:
                negated[target] = not negated[target]
                break
    return list(zip(tokens, negated))


def score_tokens(
    tokens: Sequence[Tuple[TaggedToken, bool]], lexicon: Lexicon
) -> List[TokenScore]:
    """
    Look every token up under its tag's category.

    Tokens without a category or without an entry contribute zero.
    """
    scores = []
    for token, negated in tokens:
        category = tag_to_category(token.tag)
        entry = None if category is None else lexicon.get(token.normalized, category)
        if entry is None:
            scores.append(TokenScore(token, 0.0, 0.0, negated, matched=False))
        else:
            scores.append(
                TokenScore(token, entry.pos_score, entry.neg_score, negated)
            )
    return scores


@dataclass(frozen=True)
class ScoredPost:
    """A post with its token contributions, total score and weight."""

    post: RawPost
    tagged: Tuple[TaggedToken, ...]
    token_scores: Tuple[TokenScore, ...]
    total_score: float
    weight: float = 1.0
    emoticons: Tuple[EmoticonPolarity, ...] = ()
    label: Optional[SentimentClass] = None

    @property
    def unmatched(self) -> int:
        """Opinion words the lexicon had no entry for."""
        return sum(1 for s in self.token_scores if not s.matched)

    @property
    def negated_tokens(self) -> List[str]:
        return [s.token.normalized for s in self.token_scores if s.negated]


def score_post(
    post: RawPost,
    tagged: Sequence[TaggedToken],
    lexicon: Lexicon,
    weights: Optional[WeightTable] = None,
    stopwords: AbstractSet[str] = frozenset(),
    emoticons: Sequence[EmoticonPolarity] = (),
) -> ScoredPost:
    """
    Score one tagged post.

    Runs opinion filtering, negation, stopword removal and lexicon scoring
    in that order, then sums the contributions in token order followed by
    any emoticon contributions.

    Args:
        post: The post being scored
        tagged: Every tagged token of the post, before filtering
        lexicon: Polarity lexicon
        weights: Term weights; every post weighs 1.0 when None
        stopwords: Words dropped after negation detection
        emoticons: Emoticon hits recorded before cleaning

    Returns:
        ScoredPost: Contributions, total score and post weight
    """
    opinion = filter_opinion_words(tagged, keep=NEGATION_PARTICLES)
    flagged = apply_negation(opinion)
    kept = {t.index for t in remove_stopwords(opinion, stopwords)}
    flagged = [(t, negated) for t, negated in flagged if t.index in kept]
    token_scores = score_tokens(flagged, lexicon)

    total = 0.0
    for token_score in token_scores:
        total += token_score.net
    for hit in emoticons:
        total += hit.contribution

    weight = (
        1.0 if weights is None else weights.post_weight(t.normalized for t in tagged)
    )
    return ScoredPost(
        post=post,
        tagged=tuple(tagged),
        token_scores=tuple(token_scores),
        total_score=total,
        weight=weight,
        emoticons=tuple(emoticons),
    )
