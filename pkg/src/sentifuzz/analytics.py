"""
Corpus statistics over scored posts: polarity counts, arithmetic and
weighted means, sentiment percentages, class histogram and pie data.

Every sum runs sequentially in input order so identical corpora give
bit-identical reports.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple, Union

from .exceptions import DomainError, ReportError
from .fuzzy import SentimentClass, classify
from .scoring import ScoredPost
from .tagging import format_tagged

logger = logging.getLogger(__name__)


class PolarityCounts(NamedTuple):
    positive: int
    negative: int
    objective: int

    @property
    def total(self) -> int:
        return self.positive + self.negative + self.objective


def count_polarities(posts: Sequence[ScoredPost]) -> PolarityCounts:
    """Count posts by the sign of their total score."""
    positive = sum(1 for p in posts if p.total_score > 0)
    negative = sum(1 for p in posts if p.total_score < 0)
    return PolarityCounts(positive, negative, len(posts) - positive - negative)


def arithmetic_mean(posts: Sequence[ScoredPost]) -> float:
    """
    Total of the post scores divided by the number of posts.

    Raises:
        DomainError: If there are no posts
    """
    if not posts:
        raise DomainError("Arithmetic mean of an empty corpus is undefined")
    total = 0.0
    for post in posts:
        total += post.total_score
    return total / len(posts)


def weighted_mean(posts: Sequence[ScoredPost]) -> float:
    """
    Sum of weight × score over the sum of weights.

    Raises:
        DomainError: If there are no posts or the weights sum to zero
    """
    if not posts:
        raise DomainError("Weighted mean of an empty corpus is undefined")
    weighted_total = 0.0
    weight_total = 0.0
    for post in posts:
        weighted_total += post.weight * post.total_score
        weight_total += post.weight
    if weight_total <= 0:
        raise DomainError("Weighted mean needs a positive weight sum")
    return weighted_total / weight_total


def sentiment_percentages(counts: PolarityCounts) -> Tuple[float, float]:
    """
    Positive and negative shares of all posts, in percent.

    Raises:
        DomainError: If there are no posts
    """
    if counts.total == 0:
        raise DomainError("Sentiment percentages of an empty corpus are undefined")
    return (
        counts.positive * 100.0 / counts.total,
        counts.negative * 100.0 / counts.total,
    )


@dataclass(frozen=True)
class PostSummary:
    """Per-post line of the report."""

    id: str
    author: Union[str, None]
    tokens: str
    score: float
    label: str
    weight: float
    negated: List[str] = field(default_factory=list)
    unmatched: int = 0


@dataclass(frozen=True)
class CorpusReport:
    """Corpus-level sentiment statistics."""

    total_posts: int
    positive_count: int
    negative_count: int
    objective_count: int
    class_histogram: Dict[SentimentClass, int]
    arithmetic_mean: float
    weighted_mean: float
    positive_percent: float
    negative_percent: float
    unmatched_word_count: int = 0
    warnings: List[str] = field(default_factory=list)
    posts: List[PostSummary] = field(default_factory=list)

    @property
    def objective_percent(self) -> float:
        return self.objective_count * 100.0 / self.total_posts

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total_posts": self.total_posts,
            "positive_count": self.positive_count,
            "negative_count": self.negative_count,
            "objective_count": self.objective_count,
            "class_histogram": {c.value: n for c, n in self.class_histogram.items()},
            "arithmetic_mean": self.arithmetic_mean,
            "weighted_mean": self.weighted_mean,
            "positive_percent": self.positive_percent,
            "negative_percent": self.negative_percent,
            "objective_percent": self.objective_percent,
            "unmatched_word_count": self.unmatched_word_count,
            "warnings": list(self.warnings),
            "pie": [
                {"label": label, "percent": percent}
                for label, percent in pie_chart_data(self)
            ],
            "posts": [
                {
                    "id": p.id,
                    "author": p.author,
                    "tokens": p.tokens,
                    "score": p.score,
                    "label": p.label,
                    "weight": p.weight,
                    "negated": list(p.negated),
                    "unmatched": p.unmatched,
                }
                for p in self.posts
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _label_of(post: ScoredPost) -> SentimentClass:
    return post.label if post.label is not None else classify(post.total_score)


def build_report(
    posts: Sequence[ScoredPost],
    warnings: Sequence[str] = (),
    drop_objective: bool = False,
) -> CorpusReport:
    """
    Fold scored posts into a CorpusReport.

    Args:
        posts: Scored posts in input order
        warnings: Run warnings to carry into the report
        drop_objective: Leave zero-score posts out entirely

    Raises:
        DomainError: If no posts remain
    """
    if drop_objective:
        kept = [p for p in posts if p.total_score != 0]
        if len(kept) != len(posts):
            logger.info("Dropped %d objective posts", len(posts) - len(kept))
        posts = kept
    if not posts:
        raise DomainError("Cannot report on an empty corpus")

    counts = count_polarities(posts)
    positive_percent, negative_percent = sentiment_percentages(counts)
    histogram = {c: 0 for c in SentimentClass}
    summaries = []
    for post in posts:
        label = _label_of(post)
        histogram[label] += 1
        summaries.append(
            PostSummary(
                id=post.post.id,
                author=post.post.author,
                tokens=format_tagged(post.tagged),
                score=post.total_score,
                label=label.value,
                weight=post.weight,
                negated=post.negated_tokens,
                unmatched=post.unmatched,
            )
        )

    return CorpusReport(
        total_posts=counts.total,
        positive_count=counts.positive,
        negative_count=counts.negative,
        objective_count=counts.objective,
        class_histogram=histogram,
        arithmetic_mean=arithmetic_mean(posts),
        weighted_mean=weighted_mean(posts),
        positive_percent=positive_percent,
        negative_percent=negative_percent,
        unmatched_word_count=sum(p.unmatched for p in posts),
        warnings=list(warnings),
        posts=summaries,
    )


def pie_chart_data(report: CorpusReport) -> List[Tuple[str, float]]:
    """
    Slices for every non-empty class, in class order, as percentages.

    Raises:
        DomainError: If the report covers no posts
    """
    if report.total_posts == 0:
        raise DomainError("Pie chart of an empty corpus is undefined")
    return [
        (sentiment_class.value, count * 100.0 / report.total_posts)
        for sentiment_class, count in report.class_histogram.items()
        if count > 0
    ]


def write_report(report: CorpusReport, path: Union[str, Path]) -> Path:
    """
    Write the report JSON, creating parent directories.

    Raises:
        ReportError: If the file cannot be written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.to_json(), encoding="utf-8")
    except OSError as e:
        raise ReportError(f"Failed to write report to {path}: {e}") from e
    logger.info("Report written to %s", path)
    return path.absolute()
