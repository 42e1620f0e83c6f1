"""
Fuzzy grading of post scores.

SO polarity separates objective (score exactly 0) from subjective posts,
PN polarity gives the sign, and six trapezoidal membership functions grade
the degree of positivity or negativity. The crisp class is the one with
the highest membership, ties going to the milder class.
"""

import json
import logging
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Union

from .exceptions import DomainError, PartitionError
from .resources import PARTITION_FILE, data_file

logger = logging.getLogger(__name__)


class SOPolarity(Enum):
    SUBJECTIVE = "subjective"
    OBJECTIVE = "objective"


class PNPolarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class SentimentClass(Enum):
    """Degree classes, ordered from most negative to most positive."""

    STRONG_NEGATIVE = "strong_negative"
    NEGATIVE = "negative"
    WEAK_NEGATIVE = "weak_negative"
    OBJECTIVE = "objective"
    WEAK_POSITIVE = "weak_positive"
    POSITIVE = "positive"
    STRONG_POSITIVE = "strong_positive"

    @property
    def intensity(self) -> int:
        """0 for objective, 1 weak, 2 moderate, 3 strong."""
        return abs(_ORDER.index(self) - 3)

    @property
    def polarity(self) -> Optional[PNPolarity]:
        offset = _ORDER.index(self) - 3
        if offset == 0:
            return None
        return PNPolarity.POSITIVE if offset > 0 else PNPolarity.NEGATIVE

    @property
    def mirror(self) -> "SentimentClass":
        return _ORDER[6 - _ORDER.index(self)]


_ORDER: List[SentimentClass] = list(SentimentClass)

GRADED_CLASSES = tuple(c for c in SentimentClass if c is not SentimentClass.OBJECTIVE)


def so_polarity(score: float) -> SOPolarity:
    """Objective iff the score is exactly zero."""
    return SOPolarity.OBJECTIVE if score == 0 else SOPolarity.SUBJECTIVE


def pn_polarity(score: float) -> PNPolarity:
    """
    Sign of a subjective score.

    Raises:
        DomainError: If the score is zero; route through so_polarity first
    """
    if score > 0:
        return PNPolarity.POSITIVE
    if score < 0:
        return PNPolarity.NEGATIVE
    raise DomainError("PN polarity is undefined for an objective (zero) score")


@dataclass(frozen=True)
class TrapezoidalMF:
    """
    Trapezoidal membership function with breakpoints a <= b <= c <= d.

    Membership is 0 outside [a, d], 1 on [b, c] and linear on the
    shoulders. Breakpoints may be infinite for open-ended classes.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        points = (self.a, self.b, self.c, self.d)
        if any(math.isnan(p) for p in points):
            raise PartitionError(f"Breakpoints must not be NaN: {points}")
        if not self.a <= self.b <= self.c <= self.d:
            raise PartitionError(
                f"Breakpoints must satisfy a <= b <= c <= d, got {points}"
            )

    def evaluate(self, x: float) -> float:
        if self.b <= x <= self.c:
            return 1.0
        if x <= self.a or x >= self.d:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.d - x) / (self.d - self.c)

    def mirrored(self) -> "TrapezoidalMF":
        return TrapezoidalMF(
            _negate(self.d), _negate(self.c), _negate(self.b), _negate(self.a)
        )

    def as_list(self) -> List[float]:
        return [self.a, self.b, self.c, self.d]


def _negate(value: float) -> float:
    return -value if value else 0.0


class FuzzyPartition:
    """
    One membership function per graded class.

    Immutable after construction.
    """

    def __init__(self, functions: Mapping[SentimentClass, TrapezoidalMF]):
        missing = [c.value for c in GRADED_CLASSES if c not in functions]
        if missing:
            raise PartitionError(f"Partition is missing classes: {', '.join(missing)}")
        if SentimentClass.OBJECTIVE in functions:
            raise PartitionError("The objective class is crisp and takes no function")
        self._functions = MappingProxyType(dict(functions))

    @property
    def functions(self) -> Mapping[SentimentClass, TrapezoidalMF]:
        return self._functions

    def __getitem__(self, sentiment_class: SentimentClass) -> TrapezoidalMF:
        return self._functions[sentiment_class]

    def is_symmetric(self) -> bool:
        return all(
            self._functions[c.mirror] == self._functions[c].mirrored()
            for c in GRADED_CLASSES
        )

    def to_dict(self) -> Dict[str, List[Union[float, str]]]:
        return {
            c.value: [_dump_point(p) for p in self._functions[c].as_list()]
            for c in GRADED_CLASSES
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyPartition):
            return NotImplemented
        return dict(self._functions) == dict(other._functions)

    def __repr__(self) -> str:
        return f"FuzzyPartition({self.to_dict()})"


def default_partition() -> FuzzyPartition:
    """
    Return the built-in partition.

    Positive side: weak (0, 0, 0.1875, 0.25), moderate (0.1875, 0.25,
    0.9375, 1.0625), strong (0.9375, 1.0625, inf, inf); the negative side
    mirrors it.
    """
    inf = math.inf
    positive = {
        SentimentClass.WEAK_POSITIVE: TrapezoidalMF(0.0, 0.0, 0.1875, 0.25),
        SentimentClass.POSITIVE: TrapezoidalMF(0.1875, 0.25, 0.9375, 1.0625),
        SentimentClass.STRONG_POSITIVE: TrapezoidalMF(0.9375, 1.0625, inf, inf),
    }
    functions = dict(positive)
    for sentiment_class, mf in positive.items():
        functions[sentiment_class.mirror] = mf.mirrored()
    return FuzzyPartition(functions)


def _dump_point(value: float) -> Union[float, str]:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def _load_point(value: object, class_name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise PartitionError(
            f"Breakpoint for '{class_name}' is not a number: {value!r}"
        )
    try:
        return float(value)
    except ValueError:
        raise PartitionError(
            f"Breakpoint for '{class_name}' is not a number: {value!r}"
        ) from None


def parse_partition(data: Mapping[str, Sequence[object]]) -> FuzzyPartition:
    """
    Build a partition from a class-name → [a, b, c, d] mapping.

    Infinite breakpoints may be written as "inf" / "-inf". An asymmetric
    partition is accepted with a warning.

    Raises:
        PartitionError: On unknown classes, wrong arity or bad breakpoints
    """
    if not isinstance(data, Mapping):
        raise PartitionError("Partition must be an object of class → breakpoints")
    functions: Dict[SentimentClass, TrapezoidalMF] = {}
    for name, points in data.items():
        try:
            sentiment_class = SentimentClass(name)
        except ValueError:
            raise PartitionError(f"Unknown sentiment class '{name}'") from None
        if not isinstance(points, (list, tuple)) or len(points) != 4:
            raise PartitionError(f"Class '{name}' needs exactly four breakpoints")
        a, b, c, d = (_load_point(p, name) for p in points)
        functions[sentiment_class] = TrapezoidalMF(a, b, c, d)

    partition = FuzzyPartition(functions)
    if not partition.is_symmetric():
        logger.warning("Fuzzy partition is not sign-symmetric")
    return partition


def load_partition(path: Optional[Union[str, Path]] = None) -> FuzzyPartition:
    """
    Load a partition from a JSON file; the bundled default when None.

    Raises:
        PartitionError: If the file is not valid JSON or not a valid partition
    """
    if path is None:
        path = data_file(PARTITION_FILE)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise PartitionError(f"{path}: invalid JSON: {e}") from None
    partition = parse_partition(data)
    logger.debug("Loaded fuzzy partition from %s", path)
    return partition


def membership_vector(
    score: float, partition: Optional[FuzzyPartition] = None
) -> Dict[SentimentClass, float]:
    """
    Evaluate every class at the score.

    The objective class is crisp: membership 1 exactly at zero, where the
    graded classes are held at 0.
    """
    if partition is None:
        partition = default_partition()
    if so_polarity(score) is SOPolarity.OBJECTIVE:
        return {
            c: 1.0 if c is SentimentClass.OBJECTIVE else 0.0 for c in SentimentClass
        }
    vector = {c: 0.0 for c in SentimentClass}
    for sentiment_class in GRADED_CLASSES:
        vector[sentiment_class] = partition[sentiment_class].evaluate(score)
    return vector


def classify(
    score: float, partition: Optional[FuzzyPartition] = None
) -> SentimentClass:
    """
    Return the class of highest membership, ties going to the milder class.

    Only classes on the side of the score's sign compete, so a sparse
    custom partition can never flip the polarity.
    """
    if so_polarity(score) is SOPolarity.OBJECTIVE:
        return SentimentClass.OBJECTIVE
    vector = membership_vector(score, partition)
    side = pn_polarity(score)
    candidates = [c for c in GRADED_CLASSES if c.polarity is side]
    return max(candidates, key=lambda c: (vector[c], -c.intensity))
