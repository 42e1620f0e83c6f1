"""
Polarity lexicon: SentiWordNet-format import and (lemma, category) lookup.
"""

import gzip
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from types import MappingProxyType
from typing import (
    DefaultDict,
    Dict,
    IO,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
    Union,
)

from .exceptions import LexiconParseError
from .resources import FIXTURE_LEXICON_FILE, data_file

logger = logging.getLogger(__name__)


class PosCategory(Enum):
    """The four opinion-word categories, valued by their file codes."""

    ADJECTIVE = "a"
    NOUN = "n"
    VERB = "v"
    ADVERB = "r"

    @classmethod
    def parse(cls, text: str) -> "PosCategory":
        """
        Parse a category from a file code or a category name.

        Adjective satellites ('s') are folded into adjectives.

        Raises:
            ValueError: If the text names no category
        """
        value = text.strip().lower()
        if value == "s":
            return cls.ADJECTIVE
        for category in cls:
            if value in (category.value, category.name.lower()):
                return category
        raise ValueError(f"Unknown part-of-speech category: {text!r}")


class LexiconFormat(Enum):
    """Supported lexicon file layouts."""

    SENTIWORDNET = "sentiwordnet"
    SIMPLE = "simple"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class LexiconEntry:
    """One merged lemma+category row with its polarity scores."""

    lemma: str
    category: PosCategory
    pos_score: float
    neg_score: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.pos_score <= 1.0:
            raise ValueError(f"pos_score out of [0,1]: {self.pos_score}")
        if not 0.0 <= self.neg_score <= 1.0:
            raise ValueError(f"neg_score out of [0,1]: {self.neg_score}")
        if self.pos_score + self.neg_score > 1.0:
            raise ValueError(
                f"pos_score + neg_score exceeds 1 for {self.lemma!r}: "
                f"{self.pos_score} + {self.neg_score}"
            )

    @property
    def obj_score(self) -> float:
        """Objectivity, derived so the three scores sum to 1."""
        return 1.0 - self.pos_score - self.neg_score


@dataclass(frozen=True)
class Lexicon:
    """
    Immutable polarity table keyed by (lemma, category).

    Built once by one of the import functions and safe to share between
    threads afterwards.
    """

    entries: Mapping[Tuple[str, PosCategory], LexiconEntry] = field(
        default_factory=dict
    )
    source: str = "<empty>"
    _categories: Mapping[str, FrozenSet[PosCategory]] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        frozen = MappingProxyType(dict(self.entries))
        object.__setattr__(self, "entries", frozen)
        categories: DefaultDict[str, Set[PosCategory]] = defaultdict(set)
        for lemma, category in frozen:
            categories[lemma].add(category)
        object.__setattr__(
            self,
            "_categories",
            {lemma: frozenset(cats) for lemma, cats in categories.items()},
        )

    @property
    def entry_count(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self.entries.values())

    def get(self, lemma: str, category: PosCategory) -> Optional[LexiconEntry]:
        return self.entries.get((lemma, category))

    def categories_of(self, lemma: str) -> FrozenSet[PosCategory]:
        """Return every category the lemma has an entry under."""
        return self._categories.get(lemma, frozenset())

    def __repr__(self) -> str:
        return f"Lexicon(source={self.source!r}, entries={self.entry_count})"


def lookup(
    lexicon: Lexicon, lemma: str, category: PosCategory
) -> Optional[Tuple[float, float]]:
    """
    Look up the merged (pos, neg) scores for a lowercase lemma.

    Returns:
        The score pair, or None when the key is absent
    """
    entry = lexicon.get(lemma, category)
    if entry is None:
        return None
    return (entry.pos_score, entry.neg_score)


def _parse_score(raw: str, name: str, line_number: int, source: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise LexiconParseError(
            line_number, f"{name} is not numeric: {raw!r}", source
        ) from None
    if not 0.0 <= value <= 1.0:
        raise LexiconParseError(
            line_number, f"{name} outside [0,1]: {raw!r}", source
        )
    return value


def _content_lines(stream: Iterable[str]) -> Iterable[Tuple[int, str]]:
    """Yield (line number, line) pairs, skipping comments and blank lines."""
    for line_number, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield line_number, line


def _merge_senses(
    contributions: Mapping[Tuple[str, PosCategory], List[Tuple[float, float]]],
) -> Dict[Tuple[str, PosCategory], LexiconEntry]:
    merged = {}
    for (lemma, category), senses in contributions.items():
        count = len(senses)
        # fsum is correctly rounded, so the mean does not depend on line order
        pos = math.fsum(p for p, _ in senses) / count
        neg = math.fsum(n for _, n in senses) / count
        # each sense has pos + neg <= 1; the rounded means may overshoot by an ulp
        if pos + neg > 1.0:
            neg = 1.0 - pos
        merged[(lemma, category)] = LexiconEntry(lemma, category, pos, neg)
        if count > 1:
            logger.debug(
                "Merged %d senses of %s#%s", count, lemma, category.value
            )
    return merged


def import_sentiwordnet(stream: Iterable[str], source: str = "<stream>") -> Lexicon:
    """
    Parse SentiWordNet 3.0 tab-separated lines into a merged Lexicon.

    Each line holds POS, ID, PosScore, NegScore, SynsetTerms and Gloss.
    Every "lemma#sense" term contributes to its (lemma, category) key, and
    the senses of one key are merged by arithmetic mean.

    Args:
        stream: Iterable of text lines
        source: Name used in error messages and in the Lexicon metadata

    Returns:
        Lexicon: The merged table (empty when the stream has no data lines)

    Raises:
        LexiconParseError: On any malformed data line
    """
    contributions: DefaultDict[
        Tuple[str, PosCategory], List[Tuple[float, float]]
    ] = defaultdict(list)

    for line_number, line in _content_lines(stream):
        fields = line.split("\t")
        if len(fields) < 6:
            raise LexiconParseError(
                line_number,
                f"expected 6 tab-separated fields, got {len(fields)}",
                source,
            )
        try:
            category = PosCategory.parse(fields[0])
        except ValueError as e:
            raise LexiconParseError(line_number, str(e), source) from None
        pos = _parse_score(fields[2], "PosScore", line_number, source)
        neg = _parse_score(fields[3], "NegScore", line_number, source)
        if pos + neg > 1.0:
            raise LexiconParseError(
                line_number, f"PosScore + NegScore exceeds 1 ({pos} + {neg})", source
            )
        terms = fields[4].split()
        if not terms:
            raise LexiconParseError(line_number, "empty SynsetTerms", source)
        for term in terms:
            lemma, _, _sense = term.rpartition("#")
            lemma = (lemma or term).lower()
            contributions[(lemma, category)].append((pos, neg))

    lexicon = Lexicon(_merge_senses(contributions), source=source)
    logger.debug("Imported %s", lexicon)
    return lexicon


def import_simple(stream: Iterable[str], source: str = "<stream>") -> Lexicon:
    """
    Parse the 4-column "lemma<TAB>category<TAB>pos<TAB>neg" format.

    The format carries one already-merged row per key, so a repeated key
    is an error.

    Raises:
        LexiconParseError: On any malformed line or duplicated key
    """
    entries: Dict[Tuple[str, PosCategory], LexiconEntry] = {}

    for line_number, line in _content_lines(stream):
        fields = line.split("\t")
        if len(fields) != 4:
            raise LexiconParseError(
                line_number,
                f"expected 4 tab-separated fields, got {len(fields)}",
                source,
            )
        lemma = fields[0].strip().lower()
        if not lemma:
            raise LexiconParseError(line_number, "empty lemma", source)
        try:
            category = PosCategory.parse(fields[1])
        except ValueError as e:
            raise LexiconParseError(line_number, str(e), source) from None
        pos = _parse_score(fields[2], "pos", line_number, source)
        neg = _parse_score(fields[3], "neg", line_number, source)
        if pos + neg > 1.0:
            raise LexiconParseError(
                line_number, f"pos + neg exceeds 1 ({pos} + {neg})", source
            )
        if (lemma, category) in entries:
            raise LexiconParseError(
                line_number, f"duplicate entry {lemma}#{category.value}", source
            )
        entries[(lemma, category)] = LexiconEntry(lemma, category, pos, neg)

    return Lexicon(entries, source=source)


def _open_text(path: Path) -> IO[str]:
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, "r", encoding="utf-8")


def load_lexicon(
    path: Optional[Union[str, Path]],
    format: Union[str, LexiconFormat] = LexiconFormat.SENTIWORDNET,
) -> Lexicon:
    """
    Load a lexicon file in the given format.

    Args:
        path: Lexicon file; optional for the fixture format
        format: sentiwordnet, simple or fixture

    Returns:
        Lexicon: The loaded table
    """
    format = LexiconFormat(format)
    if format is LexiconFormat.FIXTURE and path is None:
        return load_fixture_lexicon()
    if path is None:
        raise ValueError(f"A lexicon path is required for format '{format.value}'")

    path = Path(path)
    with _open_text(path) as f:
        if format is LexiconFormat.SENTIWORDNET:
            lexicon = import_sentiwordnet(f, source=path.name)
        else:
            lexicon = import_simple(f, source=path.name)
    logger.info("Loaded %d lexicon entries from %s", len(lexicon), path)
    return lexicon


def load_fixture_lexicon() -> Lexicon:
    """
    Return the bundled fixture lexicon.

    Its rows reproduce the per-post scores of the reference ten-post
    iPhone corpus (see ``data/golden_pretagged.txt``).
    """
    path = data_file(FIXTURE_LEXICON_FILE)
    with open(path, "r", encoding="utf-8") as f:
        return import_simple(f, source=FIXTURE_LEXICON_FILE)
