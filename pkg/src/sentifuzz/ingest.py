"""
Corpus ingestion from line-oriented files.
"""

import gzip
import json
import logging
import re
from enum import Enum
from pathlib import Path
from typing import IO, Iterator, List, Set, Tuple, Union

from .exceptions import InputFormatError, PretaggedParseError
from .tagging import parse_pretagged, pretagged_author
from .textproc import RawPost

logger = logging.getLogger(__name__)

_AUTHOR_PREFIX_RE = re.compile(r"^@([^\s:]+):(.*)$", re.DOTALL)


class InputFormat(Enum):
    """Supported corpus layouts."""

    TEXT = "text"
    PRETAGGED = "pretagged"
    JSONL = "jsonl"


def _open(path: Path) -> IO[str]:
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, "r", encoding="utf-8")


def _read_lines(path: Path) -> Iterator[Tuple[int, str]]:
    """Yield (line number, line) for non-blank lines."""
    try:
        with _open(path) as f:
            for line_number, line in enumerate(f, start=1):
                line = line.rstrip("\r\n")
                if line.strip():
                    yield line_number, line
    except (OSError, UnicodeDecodeError) as e:
        raise InputFormatError(str(path), None, f"cannot read file: {e}") from e


def parse_text_line(line: str, post_id: str) -> RawPost:
    """Parse a raw text line with an optional "@user:" prefix."""
    match = _AUTHOR_PREFIX_RE.match(line.strip())
    if match:
        return RawPost(id=post_id, text=match.group(2).strip(), author=match.group(1))
    return RawPost(id=post_id, text=line.strip())


def _parse_jsonl_line(line: str, line_number: int, path: Path) -> RawPost:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise InputFormatError(
            str(path), line_number, f"malformed JSON: {e.msg}"
        ) from None
    if not isinstance(obj, dict):
        raise InputFormatError(str(path), line_number, "expected a JSON object")
    text = obj.get("text")
    if not isinstance(text, str):
        raise InputFormatError(str(path), line_number, "missing string field 'text'")
    post_id = obj.get("id")
    author = obj.get("author")
    language = obj.get("language")
    return RawPost(
        id=str(line_number) if post_id is None else str(post_id),
        text=text,
        author=None if author is None else str(author),
        language=None if language is None else str(language),
    )


def ingest(
    path: Union[str, Path], format: Union[str, InputFormat] = InputFormat.TEXT
) -> List[RawPost]:
    """
    Read a corpus file into posts.

    Blank lines are skipped. Ids default to the line number. ``.gz``
    files are decompressed transparently.

    Args:
        path: Corpus file
        format: text, pretagged or jsonl

    Returns:
        list: Posts in file order

    Raises:
        InputFormatError: If the file cannot be read or a line is malformed
    """
    path = Path(path)
    format = InputFormat(format)
    posts: List[RawPost] = []
    seen: Set[str] = set()

    for line_number, line in _read_lines(path):
        if format is InputFormat.TEXT:
            post = parse_text_line(line, str(line_number))
        elif format is InputFormat.JSONL:
            post = _parse_jsonl_line(line, line_number, path)
        else:
            try:
                tagged = parse_pretagged(line)
            except PretaggedParseError as e:
                raise InputFormatError(str(path), line_number, str(e)) from e
            post = RawPost(
                id=str(line_number),
                text=line.strip(),
                author=pretagged_author(line),
                tagged=tuple(tagged),
            )
        if post.id in seen:
            raise InputFormatError(
                str(path), line_number, f"duplicate post id {post.id!r}"
            )
        seen.add(post.id)
        posts.append(post)

    logger.info("Ingested %d posts from %s", len(posts), path)
    return posts
