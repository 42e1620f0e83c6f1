"""
Location of the bundled data files.
"""

import os
from pathlib import Path

DATA_DIR_ENV = "SENTIFUZZ_DATA_DIR"

FIXTURE_LEXICON_FILE = "fixture_lexicon.tsv"
STOPWORDS_FILE = "stopwords.txt"
WEIGHTS_FILE = "weights.tsv"
PARTITION_FILE = "partition.json"
GOLDEN_PRETAGGED_FILE = "golden_pretagged.txt"
GOLDEN_RAW_FILE = "golden_raw.txt"
GOLDEN_TRANSLATIONS_FILE = "golden_translations.tsv"
SENTIWORDNET_SAMPLE_FILE = "sentiwordnet_sample.txt"


def data_dir() -> Path:
    """Return the data directory, honouring ``SENTIFUZZ_DATA_DIR``."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override).expanduser()
    return Path(__file__).parent / "data"


def data_file(name: str) -> Path:
    return data_dir() / name
