"""
Text processing for micro-blog posts: translation hook, emoticon mapping,
cleaning, tokenization, opinion-word filtering and stopword removal.
"""

import logging
import re
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import (
    AbstractSet,
    Callable,
    Dict,
    FrozenSet,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from nltk.tokenize import WhitespaceTokenizer

from .resources import STOPWORDS_FILE, data_file
from .tagging import PennTag, TaggedToken, Token

logger = logging.getLogger(__name__)

Translator = Callable[[str], str]

PUNCTUATION = "!@#(){}[]:;,.?'\"~*^&%$"

_URL_RE = re.compile(r"(?<!\S)https?://\S*", re.IGNORECASE)
_MENTION_RE = re.compile(r"(?<!\S)@\S*")
_HASHTAG_RE = re.compile(r"(?<!\S)#\S*")
_PUNCTUATION_RE = re.compile("[" + re.escape(PUNCTUATION) + "]")

_tokenizer = WhitespaceTokenizer()

OPINION_TAGS = frozenset(
    {
        PennTag.JJ,
        PennTag.JJR,
        PennTag.JJS,
        PennTag.RB,
        PennTag.RBR,
        PennTag.RBS,
        PennTag.VB,
        PennTag.VBD,
        PennTag.VBG,
        PennTag.VBN,
        PennTag.VBP,
        PennTag.VBZ,
        PennTag.NN,
        PennTag.NNS,
    }
)


@dataclass(frozen=True)
class RawPost:
    """
    One micro-blog post as ingested.

    ``tagged`` is set only for pre-tagged input, where the tags come with
    the corpus instead of from a tagger.
    """

    id: str
    text: str
    author: Optional[str] = None
    language: Optional[str] = None
    tagged: Optional[Tuple[TaggedToken, ...]] = None


class EmoticonPolarity(Enum):
    """Polarity of a recognised emoticon and its score contribution."""

    POSITIVE = 0.5
    NEGATIVE = -0.5
    NEUTRAL = 0.0

    @property
    def contribution(self) -> float:
        return float(self.value)


EMOTICONS: Dict[str, EmoticonPolarity] = {
    ":D": EmoticonPolarity.POSITIVE,
    "C:": EmoticonPolarity.POSITIVE,
    "☺": EmoticonPolarity.POSITIVE,
    ":)": EmoticonPolarity.POSITIVE,
    ":-)": EmoticonPolarity.POSITIVE,
    "☹": EmoticonPolarity.NEGATIVE,
    "D8": EmoticonPolarity.NEGATIVE,
    "D;": EmoticonPolarity.NEGATIVE,
    ":(": EmoticonPolarity.NEGATIVE,
    ":-(": EmoticonPolarity.NEGATIVE,
    ":|": EmoticonPolarity.NEUTRAL,
    ": |": EmoticonPolarity.NEUTRAL,
}

_EMOTICON_RE = re.compile(
    r"(?<!\S)(?:"
    + "|".join(re.escape(e) for e in sorted(EMOTICONS, key=len, reverse=True))
    + r")(?!\S)"
)


def identity_translator(text: str) -> str:
    return text


class DictionaryTranslator:
    """Offline translator looking whole post texts up in a table."""

    def __init__(self, table: Dict[str, str]):
        self.table = dict(table)

    def __call__(self, text: str) -> str:
        return self.table.get(text.strip(), text)

    def __len__(self) -> int:
        return len(self.table)


def load_translations(path: Union[str, Path]) -> DictionaryTranslator:
    """
    Load a "source<TAB>english" translation table.

    Lines starting with '#' and blank lines are ignored; lines without a
    tab are skipped with a warning.
    """
    table: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            source, sep, target = line.partition("\t")
            if not sep:
                logger.warning("%s:%d: no tab, line skipped", path, line_number)
                continue
            table[source.strip()] = target.strip()
    return DictionaryTranslator(table)


def translate_hook(
    post: RawPost,
    translator: Translator = identity_translator,
    warnings: Optional[List[str]] = None,
) -> RawPost:
    """
    Replace the post text by its translation.

    A failing translator leaves the post unchanged; the failure is logged
    and appended to ``warnings`` when a list is given.
    """
    try:
        translated = translator(post.text)
    except Exception as e:
        message = f"translation failed for post {post.id}: {e}"
        logger.warning(message)
        if warnings is not None:
            warnings.append(message)
        return post
    if translated == post.text:
        return post
    return replace(post, text=translated)


def map_emoticons(text: str) -> Tuple[str, List[EmoticonPolarity]]:
    """
    Remove recognised emoticons from the text and report their polarities.

    Emoticons only match as whole whitespace-delimited tokens.
    """
    hits = [EMOTICONS[m.group(0)] for m in _EMOTICON_RE.finditer(text)]
    if not hits:
        return text, []
    stripped = _EMOTICON_RE.sub(" ", text)
    return " ".join(stripped.split()), hits


def clean(text: str) -> str:
    """
    Normalize raw post text.

    Removes URLs, @mentions and #hashtags as whole tokens, then every
    character of the punctuation class, collapses whitespace and
    lowercases.
    """
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    text = _PUNCTUATION_RE.sub("", text)
    return " ".join(text.split()).lower()


def tokenize(text: str) -> List[Token]:
    """Split cleaned text on whitespace into indexed lowercase tokens."""
    return [
        Token(surface.lower(), index)
        for index, surface in enumerate(_tokenizer.tokenize(text))
    ]


def filter_opinion_words(
    tokens: Sequence[TaggedToken], keep: AbstractSet[str] = frozenset()
) -> List[TaggedToken]:
    """
    Keep adjectives, adverbs, verbs and common nouns; drop everything else.

    Words listed in ``keep`` survive whatever their tag.
    """
    return [t for t in tokens if t.tag in OPINION_TAGS or t.normalized in keep]


def remove_stopwords(
    tokens: Sequence[TaggedToken], stopwords: AbstractSet[str]
) -> List[TaggedToken]:
    return [t for t in tokens if t.normalized not in stopwords]


def load_stopwords(path: Optional[Union[str, Path]] = None) -> FrozenSet[str]:
    """
    Load a stopword list, one lowercase word per line.

    Args:
        path: Stopword file; the bundled list when None

    Returns:
        frozenset: The stopwords
    """
    if path is None:
        path = data_file(STOPWORDS_FILE)
    words = set()
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    logger.debug("Loaded %d stopwords from %s", len(words), path)
    return frozenset(words)
