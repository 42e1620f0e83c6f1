"""
Tests for the lexicon module.
"""

import gzip
import io
import random
from collections import defaultdict
from fractions import Fraction

import pytest

from sentifuzz.exceptions import LexiconParseError
from sentifuzz.lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconFormat,
    PosCategory,
    import_sentiwordnet,
    import_simple,
    load_lexicon,
    lookup,
)
from sentifuzz.resources import SENTIWORDNET_SAMPLE_FILE


def swn_line(pos, offset, pos_score, neg_score, terms, gloss="a gloss"):
    return f"{pos}\t{offset:08d}\t{pos_score}\t{neg_score}\t{terms}\t{gloss}\n"


class TestPosCategory:
    """Tests for PosCategory parsing."""

    def test_file_codes(self):
        """Test the four file codes."""
        assert PosCategory.parse("a") is PosCategory.ADJECTIVE
        assert PosCategory.parse("n") is PosCategory.NOUN
        assert PosCategory.parse("v") is PosCategory.VERB
        assert PosCategory.parse("r") is PosCategory.ADVERB

    def test_names_and_satellites(self):
        """Test category names and the adjective satellite code."""
        assert PosCategory.parse("Adjective") is PosCategory.ADJECTIVE
        assert PosCategory.parse(" adverb ") is PosCategory.ADVERB
        assert PosCategory.parse("s") is PosCategory.ADJECTIVE

    def test_unknown(self):
        """Test an unknown category."""
        with pytest.raises(ValueError):
            PosCategory.parse("x")

    def test_exactly_four(self):
        assert len(PosCategory) == 4


class TestLexiconEntry:
    """Tests for LexiconEntry invariants."""

    def test_obj_score_derived(self):
        """Test the derived objectivity score."""
        entry = LexiconEntry("good", PosCategory.ADJECTIVE, 0.625, 0.125)
        assert entry.obj_score == 0.25
        assert entry.pos_score + entry.neg_score + entry.obj_score == 1.0

    @pytest.mark.parametrize("pos,neg", [(-0.1, 0), (0, 1.5), (0.75, 0.5)])
    def test_invalid_scores(self, pos, neg):
        """Test out-of-range scores are rejected."""
        with pytest.raises(ValueError):
            LexiconEntry("x", PosCategory.NOUN, pos, neg)


class TestImportSentiWordNet:
    """Tests for the SentiWordNet importer."""

    def test_first_distribution_line(self):
        """Test the first data line of the SentiWordNet 3.0 file."""
        lexicon = import_sentiwordnet(
            [swn_line("a", 1740, 0.125, 0, "able#1", "(usually followed by `to')")]
        )
        assert lookup(lexicon, "able", PosCategory.ADJECTIVE) == (0.125, 0.0)

    def test_comment_and_blank_lines(self):
        """Test comment and blank lines emit nothing."""
        lexicon = import_sentiwordnet(["# comment\n", "\n", "   \n"])
        assert len(lexicon) == 0

    def test_empty_stream(self):
        """Test an empty stream gives an empty lexicon."""
        assert len(import_sentiwordnet([])) == 0

    def test_senses_merged_by_mean(self):
        """Test two senses of one key are averaged."""
        lexicon = import_sentiwordnet(
            [
                swn_line("a", 1, 0.75, 0, "good#1"),
                swn_line("a", 2, 0.5, 0, "good#2"),
            ]
        )
        assert lookup(lexicon, "good", PosCategory.ADJECTIVE) == (0.625, 0.0)
        assert len(lexicon) == 1

    def test_synset_terms_and_multiwords(self):
        """Test every term of a synset contributes; '_' is kept."""
        lexicon = import_sentiwordnet(
            [swn_line("n", 5, 0, 0.25, "Let_Down#1 disappointment#2")]
        )
        assert lookup(lexicon, "let_down", PosCategory.NOUN) == (0.0, 0.25)
        assert lookup(lexicon, "disappointment", PosCategory.NOUN) == (0.0, 0.25)

    def test_satellite_folded_into_adjective(self):
        lexicon = import_sentiwordnet(
            [
                swn_line("a", 1, 0.5, 0, "bright#1"),
                swn_line("s", 2, 0.25, 0, "bright#2"),
            ]
        )
        assert lookup(lexicon, "bright", PosCategory.ADJECTIVE) == (0.375, 0.0)

    def test_categories_kept_apart(self):
        """Test the same lemma under two categories stays two entries."""
        lexicon = import_sentiwordnet(
            [swn_line("a", 1, 0.5, 0, "fine#1"), swn_line("n", 2, 0, 0.5, "fine#1")]
        )
        assert lexicon.categories_of("fine") == frozenset(
            {PosCategory.ADJECTIVE, PosCategory.NOUN}
        )
        assert lexicon.categories_of("missing") == frozenset()

    @pytest.mark.parametrize(
        "line",
        [
            "a\t1\t0.5\t0\tgood#1\n",
            "a\t1\tzero\t0\tgood#1\tgloss\n",
            "a\t1\t1.5\t0\tgood#1\tgloss\n",
            "a\t1\t0.75\t0.5\tgood#1\tgloss\n",
            "x\t1\t0.5\t0\tgood#1\tgloss\n",
            "a\t1\t0.5\t0\t \tgloss\n",
        ],
    )
    def test_malformed_lines(self, line):
        """Test malformed lines raise with the line number."""
        with pytest.raises(LexiconParseError) as exc_info:
            import_sentiwordnet(["# header\n", line], source="swn.txt")
        assert exc_info.value.line_number == 2
        assert "swn.txt:2" in str(exc_info.value)


class TestImportSimple:
    """Tests for the 4-column importer."""

    def test_basic(self):
        lexicon = import_simple(["good\ta\t0.625\t0\n", "Damn\tadjective\t0\t0.75\n"])
        assert lookup(lexicon, "good", PosCategory.ADJECTIVE) == (0.625, 0.0)
        assert lookup(lexicon, "damn", PosCategory.ADJECTIVE) == (0.0, 0.75)

    def test_duplicate_key(self):
        """Test a repeated key is an error."""
        with pytest.raises(LexiconParseError) as exc_info:
            import_simple(["good\ta\t0.5\t0\n", "good\ta\t0.25\t0\n"])
        assert exc_info.value.line_number == 2

    def test_wrong_arity(self):
        with pytest.raises(LexiconParseError):
            import_simple(["good\ta\t0.5\n"])

    def test_idempotent_reimport(self, fixture_lexicon):
        """Test re-importing a merged lexicon reproduces it."""
        dumped = [
            f"{e.lemma}\t{e.category.value}\t{e.pos_score}\t{e.neg_score}\n"
            for e in fixture_lexicon
        ]
        again = import_simple(dumped)
        assert dict(again.entries) == dict(fixture_lexicon.entries)


class TestLookup:
    """Tests for lookups against the fixture lexicon."""

    @pytest.mark.parametrize(
        "lemma,category,expected",
        [
            ("good", PosCategory.ADJECTIVE, (0.625, 0.0)),
            ("damn", PosCategory.ADJECTIVE, (0.0, 0.75)),
            ("amazing", PosCategory.ADJECTIVE, (0.6875, 0.0)),
            ("not", PosCategory.ADVERB, (0.0, 0.375)),
            ("bad", PosCategory.ADJECTIVE, (0.0, 0.75)),
            ("love", PosCategory.VERB, (0.25, 0.0)),
            ("sloppy", PosCategory.ADJECTIVE, (0.1875, 0.0)),
        ],
    )
    def test_fixture_values(self, fixture_lexicon, lemma, category, expected):
        assert lookup(fixture_lexicon, lemma, category) == expected

    def test_absent_keys(self, fixture_lexicon):
        """Test absent keys give no entry."""
        assert lookup(fixture_lexicon, "nokia", PosCategory.NOUN) is None
        assert lookup(fixture_lexicon, "iphone", PosCategory.NOUN) is None
        assert lookup(fixture_lexicon, "good", PosCategory.NOUN) is None
        assert lookup(Lexicon(), "good", PosCategory.ADJECTIVE) is None

    def test_fixture_values_are_sixteenths(self, fixture_lexicon):
        """Test every fixture score is a multiple of 1/16."""
        for entry in fixture_lexicon:
            assert (entry.pos_score * 16).is_integer()
            assert (entry.neg_score * 16).is_integer()

    def test_lexicon_is_read_only(self, fixture_lexicon):
        with pytest.raises(TypeError):
            fixture_lexicon.entries[("x", PosCategory.NOUN)] = None


class TestSentiWordNetSample:
    """Tests against the bundled 200-line SentiWordNet-layout sample."""

    @pytest.fixture
    def sample_lines(self, data_dir):
        with open(data_dir / SENTIWORDNET_SAMPLE_FILE, encoding="utf-8") as f:
            return f.readlines()

    def expected_entries(self, lines):
        """Merge the sample independently with exact fractions."""
        senses = defaultdict(list)
        for line in lines:
            if line.startswith("#") or not line.strip():
                continue
            fields = line.rstrip("\n").split("\t")
            category = PosCategory.parse(fields[0])
            for term in fields[4].split():
                lemma = term.rsplit("#", 1)[0].lower()
                senses[(lemma, category)].append(
                    (Fraction(fields[2]), Fraction(fields[3]))
                )
        return {
            key: (
                float(sum(p for p, _ in values) / len(values)),
                float(sum(n for _, n in values) / len(values)),
            )
            for key, values in senses.items()
        }

    def test_sample_has_two_hundred_data_lines(self, sample_lines):
        data = [line for line in sample_lines if not line.startswith("#")]
        assert len(data) == 200

    def test_import_matches_independent_merge(self, sample_lines):
        """Test every key against an exact-fraction merge."""
        lexicon = import_sentiwordnet(sample_lines)
        expected = self.expected_entries(sample_lines)
        assert len(lexicon) == len(expected) == 164
        for (lemma, category), scores in expected.items():
            assert lookup(lexicon, lemma, category) == scores

    def test_known_entries(self, sample_lines):
        lexicon = import_sentiwordnet(sample_lines)
        assert lookup(lexicon, "able", PosCategory.ADJECTIVE) == (0.125, 0.0)
        assert lookup(lexicon, "unable", PosCategory.ADJECTIVE) == (0.0, 0.75)
        assert lookup(lexicon, "bad", PosCategory.VERB) == (0.0, 0.46875)
        assert lookup(lexicon, "good_up", PosCategory.ADJECTIVE) == (0.75, 0.125)

    def test_shuffled_import_is_identical(self, sample_lines):
        """Test merging does not depend on line order."""
        reference = import_sentiwordnet(sample_lines)
        rng = random.Random(20120615)
        for _ in range(20):
            shuffled = list(sample_lines)
            rng.shuffle(shuffled)
            assert dict(import_sentiwordnet(shuffled).entries) == dict(
                reference.entries
            )

    def test_every_term_reachable(self, sample_lines):
        """Test import-then-lookup reaches every lemma#sense of the input."""
        lexicon = import_sentiwordnet(sample_lines)
        for line in sample_lines[1:]:
            fields = line.split("\t")
            category = PosCategory.parse(fields[0])
            for term in fields[4].split():
                assert lexicon.get(term.rsplit("#", 1)[0], category) is not None


class TestRandomValidLines:
    """Property checks over seeded random SentiWordNet lines."""

    def test_imported_scores_stay_in_range(self):
        rng = random.Random(7)
        lemmas = [f"word{i}" for i in range(40)]
        for case in range(500):
            lines = []
            for offset in range(rng.randint(1, 12)):
                pos = rng.randint(0, 8)
                neg = rng.randint(0, 8 - pos)
                lines.append(
                    swn_line(
                        rng.choice("anvrs"),
                        offset,
                        pos / 8,
                        neg / 8,
                        f"{rng.choice(lemmas)}#{rng.randint(1, 4)}",
                    )
                )
            lexicon = import_sentiwordnet(lines)
            for entry in lexicon:
                assert 0.0 <= entry.pos_score <= 1.0
                assert 0.0 <= entry.neg_score <= 1.0
                assert entry.pos_score + entry.neg_score <= 1.0
            shuffled = list(lines)
            rng.shuffle(shuffled)
            assert dict(import_sentiwordnet(shuffled).entries) == dict(
                lexicon.entries
            ), f"case {case}"

    def test_rounded_means_stay_valid(self):
        """Test sense means that round past 1 are pulled back into range."""
        lines = [
            swn_line("a", 1, 0.15, 0.85, "w#1"),
            swn_line("a", 2, 0.07, 0.93, "w#2"),
            swn_line("a", 3, 0.21, 0.79, "w#3"),
        ]
        entry = import_sentiwordnet(lines).get("w", PosCategory.ADJECTIVE)
        assert entry.pos_score == pytest.approx(0.43 / 3)
        assert entry.pos_score + entry.neg_score <= 1.0
        assert entry.neg_score == pytest.approx(1.0 - entry.pos_score)

    def test_saturated_decimal_scores(self):
        """Test senses whose scores sum to exactly 1 merge without errors."""
        rng = random.Random(19)
        for case in range(500):
            lines = []
            for offset in range(rng.randint(1, 9)):
                pos = rng.randint(0, 100) / 100
                neg = (100 - round(pos * 100)) / 100
                if pos + neg > 1.0:
                    continue
                lines.append(swn_line("a", offset, pos, neg, f"w{case % 5}#{offset}"))
            lexicon = import_sentiwordnet(lines)
            for entry in lexicon:
                assert entry.pos_score + entry.neg_score <= 1.0, f"case {case}"


class TestLoadLexicon:
    """Tests for loading lexicon files."""

    def test_fixture_format_without_path(self):
        lexicon = load_lexicon(None, LexiconFormat.FIXTURE)
        assert lookup(lexicon, "good", PosCategory.ADJECTIVE) == (0.625, 0.0)

    def test_simple_file(self, temp_dir):
        path = temp_dir / "lex.tsv"
        path.write_text("happy\ta\t0.5\t0\n", encoding="utf-8")
        lexicon = load_lexicon(path, "simple")
        assert lexicon.source == "lex.tsv"
        assert lookup(lexicon, "happy", PosCategory.ADJECTIVE) == (0.5, 0.0)

    def test_gzipped_sentiwordnet(self, temp_dir):
        """Test .gz files are read transparently."""
        path = temp_dir / "swn.txt.gz"
        with gzip.open(path, "wt", encoding="utf-8") as f:
            f.write(swn_line("a", 1740, 0.125, 0, "able#1"))
        lexicon = load_lexicon(path, "sentiwordnet")
        assert lookup(lexicon, "able", PosCategory.ADJECTIVE) == (0.125, 0.0)

    def test_path_required_for_file_formats(self):
        with pytest.raises(ValueError):
            load_lexicon(None, "sentiwordnet")

    def test_stream_import(self):
        stream = io.StringIO(swn_line("r", 3, 0, 0.5, "badly#1"))
        lexicon = import_sentiwordnet(stream)
        assert lookup(lexicon, "badly", PosCategory.ADVERB) == (0.0, 0.5)

    def test_data_dir_override(self, temp_dir, monkeypatch):
        """Test SENTIFUZZ_DATA_DIR redirects the bundled fixture lookup."""
        (temp_dir / "fixture_lexicon.tsv").write_text(
            "# lemma\tpos\tpositive\tnegative\nzesty\ta\t0.5\t0\n", encoding="utf-8"
        )
        monkeypatch.setenv("SENTIFUZZ_DATA_DIR", str(temp_dir))
        lexicon = load_lexicon(None, "fixture")
        assert lookup(lexicon, "zesty", PosCategory.ADJECTIVE) == (0.5, 0.0)
        assert lookup(lexicon, "good", PosCategory.ADJECTIVE) is None
