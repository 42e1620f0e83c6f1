"""
sentifuzz

Lexicon-based sentiment analysis of micro-blog posts: SentiWordNet
scoring with negation, fuzzy six-class grading and corpus statistics.
"""

__version__ = "1.0.0"
__author__ = "Dang Linh Anh"
__license__ = "MIT"

from .analytics import CorpusReport, build_report, pie_chart_data
from .exceptions import (
    ConfigurationError,
    DomainError,
    InputFormatError,
    LexiconParseError,
    PretaggedParseError,
    SentiFuzzError,
)
from .fuzzy import SentimentClass, classify, default_partition
from .ingest import ingest
from .lexicon import Lexicon, PosCategory, load_fixture_lexicon, load_lexicon
from .pipeline import SentimentPipeline
from .textproc import RawPost

__all__ = [
    "SentimentPipeline",
    "RawPost",
    "Lexicon",
    "PosCategory",
    "load_lexicon",
    "load_fixture_lexicon",
    "ingest",
    "SentimentClass",
    "classify",
    "default_partition",
    "CorpusReport",
    "build_report",
    "pie_chart_data",
    "SentiFuzzError",
    "LexiconParseError",
    "PretaggedParseError",
    "InputFormatError",
    "DomainError",
    "ConfigurationError",
]
