"""
Penn Treebank tagging: tag set, tagged tokens, the built-in baseline
tagger and the "surface/TAG" pre-tagged line format.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from nltk.tag import DefaultTagger, RegexpTagger, UnigramTagger
from nltk.tag.api import TaggerI
from nltk.tag.util import str2tuple, tuple2str

from .exceptions import PretaggedParseError
from .lexicon import Lexicon, PosCategory

logger = logging.getLogger(__name__)


class PennTag(Enum):
    """Penn Treebank part-of-speech tags, including punctuation tags."""

    CC = "CC"
    CD = "CD"
    DT = "DT"
    EX = "EX"
    FW = "FW"
    IN = "IN"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    LS = "LS"
    MD = "MD"
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    NNPS = "NNPS"
    PDT = "PDT"
    POS = "POS"
    PRP = "PRP"
    PRP_POSSESSIVE = "PRP$"
    RB = "RB"
    RBR = "RBR"
    RBS = "RBS"
    RP = "RP"
    SYM = "SYM"
    TO = "TO"
    UH = "UH"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    WDT = "WDT"
    WP = "WP"
    WP_POSSESSIVE = "WP$"
    WRB = "WRB"
    HASH = "#"
    DOLLAR = "$"
    OPEN_QUOTE = "``"
    CLOSE_QUOTE = "''"
    COMMA = ","
    PERIOD = "."
    COLON = ":"
    LEFT_PAREN = "("
    RIGHT_PAREN = ")"
    LEFT_BRACKET = "-LRB-"
    RIGHT_BRACKET = "-RRB-"
    NONE = "-NONE-"

    @classmethod
    def parse(cls, text: str) -> "PennTag":
        """
        Parse a tag string, case-insensitively.

        Raises:
            ValueError: If the tag is not in the tag set
        """
        return cls(text.strip().upper())


BRACKET_TAGS = frozenset({PennTag.LEFT_BRACKET, PennTag.RIGHT_BRACKET})

CATEGORY_TAGS: Dict[PosCategory, PennTag] = {
    PosCategory.ADJECTIVE: PennTag.JJ,
    PosCategory.NOUN: PennTag.NN,
    PosCategory.VERB: PennTag.VB,
    PosCategory.ADVERB: PennTag.RB,
}


@dataclass(frozen=True)
class Token:
    """A whitespace-delimited token and its position in the post."""

    surface: str
    index: int

    @property
    def normalized(self) -> str:
        return self.surface.lower()


@dataclass(frozen=True)
class TaggedToken:
    """A token with its Penn Treebank tag."""

    token: Token
    tag: PennTag

    @property
    def surface(self) -> str:
        return self.token.surface

    @property
    def normalized(self) -> str:
        return self.token.normalized

    @property
    def index(self) -> int:
        return self.token.index

    def __str__(self) -> str:
        return tuple2str((self.surface, self.tag.value))


# Closed-class words: determiners, pronouns, prepositions, conjunctions,
# modals, wh-words, auxiliaries and negation particles.
CLOSED_CLASS_TAGS: Dict[str, str] = {
    **dict.fromkeys(
        "a an the this that these those each every some any no another "
        "either neither".split(),
        "DT",
    ),
    **dict.fromkeys(["all", "both", "half"], "PDT"),
    **dict.fromkeys(
        "i me you he she it we they him us them myself yourself himself "
        "herself itself ourselves themselves her".split(),
        "PRP",
    ),
    **dict.fromkeys("my your his its our their mine yours".split(), "PRP$"),
    **dict.fromkeys(
        "in on at of for with by from about above after before below between "
        "into through during under over against among without within toward "
        "towards upon since until than as because if while although like "
        "off via".split(),
        "IN",
    ),
    "to": "TO",
    **dict.fromkeys("and or but nor yet so".split(), "CC"),
    **dict.fromkeys(
        "can could may might must shall should will would".split(), "MD"
    ),
    **dict.fromkeys(["what", "who", "whom"], "WP"),
    "whose": "WP$",
    "which": "WDT",
    **dict.fromkeys(["when", "where", "why", "how"], "WRB"),
    "there": "EX",
    **dict.fromkeys(["is", "has", "does"], "VBZ"),
    **dict.fromkeys(["are", "am", "have", "do"], "VBP"),
    **dict.fromkeys(["was", "were", "had", "did"], "VBD"),
    "be": "VB",
    "been": "VBN",
    "being": "VBG",
    **dict.fromkeys(["not", "never", "n't"], "RB"),
}

SUFFIX_PATTERNS: List[Tuple[str, str]] = [
    (r".+ly$", "RB"),
    (r".+ing$", "VBG"),
    (r".+ed$", "VBD"),
    (r".+est$", "JJS"),
    (r".+er$", "JJR"),
    (r"^[-+]?\d+([.,]\d+)*$", "CD"),
]


def build_baseline_tagger(lexicon: Optional[Lexicon] = None) -> TaggerI:
    """
    Build the rule-based fallback tagger as an NLTK backoff chain.

    Priority: closed-class table, then the lexicon's category hint for
    lemmas listed under exactly one category, then suffix rules, then
    numerals, then NN.

    Args:
        lexicon: Lexicon providing category hints (optional)

    Returns:
        TaggerI: A tagger over lowercase word lists
    """
    hints: Dict[str, str] = {}
    if lexicon is not None:
        for entry in lexicon:
            categories = lexicon.categories_of(entry.lemma)
            if len(categories) == 1:
                hints[entry.lemma] = CATEGORY_TAGS[entry.category].value
    logger.debug("Baseline tagger built with %d lexicon hints", len(hints))

    backoff: TaggerI = RegexpTagger(SUFFIX_PATTERNS, backoff=DefaultTagger("NN"))
    # nltk rejects an empty model, so the hint stage needs at least one entry
    if hints:
        backoff = UnigramTagger(model=hints, backoff=backoff)
    return UnigramTagger(model=CLOSED_CLASS_TAGS, backoff=backoff)


def tag(tokens: Sequence[Token], tagger: Optional[TaggerI] = None) -> List[TaggedToken]:
    """
    Assign one Penn Treebank tag to every token.

    Args:
        tokens: Tokens to tag
        tagger: Any NLTK-compatible tagger; the baseline tagger by default

    Returns:
        list: One TaggedToken per input token, in order

    Raises:
        ValueError: If the tagger yields a tag outside the tag set
    """
    if not tokens:
        return []
    if tagger is None:
        tagger = build_baseline_tagger()
    tagged = tagger.tag([t.normalized for t in tokens])
    if len(tagged) != len(tokens):
        raise ValueError(
            f"Tagger returned {len(tagged)} tags for {len(tokens)} tokens"
        )
    return [
        TaggedToken(token, PennTag.parse(tag_string or "NN"))
        for token, (_, tag_string) in zip(tokens, tagged)
    ]


def _is_separator(item: str) -> bool:
    return len(item) >= 2 and set(item) == {":"}


def split_pretagged(line: str) -> Tuple[List[str], List[str]]:
    """
    Split a pre-tagged line into its username prefix and body items.

    The first item made only of colons ("::" or ":::") ends the prefix.
    Without a separator the whole line is body.
    """
    items = line.split()
    for position, item in enumerate(items):
        if _is_separator(item):
            return items[:position], items[position + 1 :]
    return [], items


def _parse_item(item: str) -> Tuple[str, PennTag]:
    if "/" not in item:
        raise PretaggedParseError(item, "missing '/TAG'")
    surface, tag_string = str2tuple(item)
    if not surface:
        raise PretaggedParseError(item, "empty surface form")
    if not tag_string:
        raise PretaggedParseError(item, "empty tag")
    try:
        return surface, PennTag.parse(tag_string)
    except ValueError:
        raise PretaggedParseError(item, f"unknown tag '{tag_string}'") from None


def parse_pretagged(line: str) -> List[TaggedToken]:
    """
    Parse a line of "surface/TAG" items into tagged tokens.

    The username prefix is discarded, as are further separators and the
    -LRB-/-RRB- bracket escapes. Surfaces are lowercased and indices are
    reassigned over the body.

    Raises:
        PretaggedParseError: On an item without a tag or with an unknown tag
    """
    _, body = split_pretagged(line)
    tagged: List[TaggedToken] = []
    for item in body:
        if _is_separator(item):
            continue
        surface, penn_tag = _parse_item(item)
        if penn_tag in BRACKET_TAGS:
            continue
        tagged.append(TaggedToken(Token(surface.lower(), len(tagged)), penn_tag))
    return tagged


def pretagged_author(line: str) -> Optional[str]:
    """Return the username named in a pre-tagged line's prefix, if any."""
    prefix, _ = split_pretagged(line)
    names = [str2tuple(item)[0].lstrip("@") for item in prefix]
    names = [name for name in names if name]
    return names[-1] if names else None


def format_tagged(tokens: Sequence[TaggedToken]) -> str:
    """Render tagged tokens back into a "surface/TAG" line."""
    return " ".join(str(t) for t in tokens)
