"""
Command-line interface for sentifuzz.
"""

import argparse
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from . import __version__
from .analytics import CorpusReport, build_report, pie_chart_data, write_report
from .charts import render_pie
from .config import Config, RunConfig, TaggerMode
from .exceptions import SentiFuzzError
from .fuzzy import load_partition
from .ingest import InputFormat, ingest
from .lexicon import LexiconFormat, load_lexicon
from .pipeline import SentimentPipeline
from .scoring import ScoredPost, load_weights
from .tagging import format_tagged
from .textproc import identity_translator, load_stopwords, load_translations

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def generate_report_filename() -> str:
    """
    Generate a default report filename with timestamp.

    Returns:
        str: Generated filename
    """
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return f"sentiment_report_{timestamp}.json"


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Route library logging to stderr at the level the flags ask for."""
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, format=LOG_FORMAT, stream=sys.stderr, force=True
    )


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser.

    Returns:
        argparse.ArgumentParser: Configured parser
    """
    parser = argparse.ArgumentParser(
        prog="sentifuzz",
        description="Lexicon-based fuzzy sentiment analysis of micro-blog posts",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Score a plain-text corpus with the bundled fixture lexicon
  sentifuzz --input posts.txt

  # Score pre-tagged posts against SentiWordNet and keep its tags
  sentifuzz --input tagged.txt --input-format pretagged --tagger pretagged \\
      --lexicon SentiWordNet_3.0.0.txt --lexicon-format sentiwordnet

  # Weighted mean, JSON report and a pie chart
  sentifuzz --input posts.txt --weights weights.tsv \\
      --report report.json --pie pie.svg

  # Show current configuration
  sentifuzz --show-config
        """,
    )

    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    # Resources
    parser.add_argument(
        "--lexicon",
        type=str,
        metavar="PATH",
        help="Polarity lexicon file (default: from config, else bundled fixture)",
    )

    parser.add_argument(
        "--lexicon-format",
        type=str,
        choices=[f.value for f in LexiconFormat],
        help="Lexicon layout (default: from config)",
    )

    parser.add_argument(
        "--stopwords",
        type=str,
        metavar="PATH",
        help="Stopword list, one word per line (default: bundled list)",
    )

    parser.add_argument(
        "--weights",
        type=str,
        metavar="PATH",
        help="Term weights as term<TAB>weight (default: every post weighs 1.0)",
    )

    parser.add_argument(
        "--partition",
        type=str,
        metavar="PATH",
        help="Fuzzy partition JSON (default: bundled partition)",
    )

    parser.add_argument(
        "--translations",
        type=str,
        metavar="PATH",
        help="Translation table as source<TAB>english (default: none)",
    )

    # Input
    parser.add_argument(
        "-i",
        "--input",
        type=str,
        metavar="PATH",
        help="Corpus file; .gz files are decompressed",
    )

    parser.add_argument(
        "--input-format",
        type=str,
        choices=[f.value for f in InputFormat],
        default=InputFormat.TEXT.value,
        help="Corpus layout (default: text)",
    )

    parser.add_argument(
        "--tagger",
        type=str,
        choices=[m.value for m in TaggerMode],
        help="builtin re-tags every post; pretagged keeps the tags shipped "
        "with pre-tagged input (default: pretagged for pre-tagged input)",
    )

    parser.add_argument(
        "--emoticons",
        action="store_true",
        help="Score emoticons before punctuation is stripped",
    )

    parser.add_argument(
        "--drop-objective",
        action="store_true",
        help="Leave zero-score posts out of every statistic",
    )

    parser.add_argument(
        "--workers",
        type=int,
        metavar="N",
        help="Threads used for scoring (default: from config)",
    )

    # Output
    parser.add_argument(
        "-o",
        "--report",
        type=str,
        metavar="PATH",
        help="Report JSON path (default: auto-generated in the output directory)",
    )

    parser.add_argument(
        "--pie",
        type=str,
        metavar="PATH",
        help="Write a pie chart; .svg gives SVG, other suffixes use Pillow",
    )

    # Configuration options
    parser.add_argument(
        "--config",
        type=str,
        metavar="PATH",
        help="Configuration file (default: ~/.config/sentifuzz/config.json)",
    )

    parser.add_argument(
        "--show-config",
        action="store_true",
        help="Display current configuration and exit",
    )

    parser.add_argument(
        "--set-default-lexicon",
        type=str,
        metavar="PATH",
        help="Set default lexicon path in config",
    )

    parser.add_argument(
        "--set-default-weights",
        type=str,
        metavar="PATH",
        help="Set default weight file in config",
    )

    # Verbosity
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable debug logging"
    )

    parser.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        help="Print only the summary and errors",
    )

    return parser


def handle_config_display(config: Config) -> None:
    """Display current configuration."""
    print("Current Configuration:")
    print(f"  Lexicon Format: {config.lexicon_format}")
    print(f"  Lexicon: {config.lexicon_path or '(bundled fixture)'}")
    print(f"  Stopwords: {config.stopwords_path or '(bundled list)'}")
    print(f"  Weights: {config.weights_path or '(none)'}")
    print(f"  Partition: {config.partition_path or '(default)'}")
    print(f"  Output Directory: {config.output_dir}")
    print(f"  Precision: {config.precision}")
    print(f"  Workers: {config.workers}")
    print(f"  Config File: {config.config_file}")


def handle_config_update(config: Config, args: argparse.Namespace) -> None:
    """Update configuration based on arguments."""
    if args.set_default_lexicon:
        config.lexicon_path = Path(args.set_default_lexicon)
        config.lexicon_format = (
            args.lexicon_format or LexiconFormat.SENTIWORDNET.value
        )
        print(f"Default lexicon set to: {config.lexicon_path}")

    if args.set_default_weights:
        config.weights_path = Path(args.set_default_weights)
        print(f"Default weights set to: {config.weights_path}")

    config.save()
    print("Configuration saved successfully")


def _optional_path(value: Optional[str], fallback: Optional[Path]) -> Optional[Path]:
    return Path(value) if value else fallback


def build_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    """
    Merge command-line flags over the stored defaults.

    A lexicon given on the command line without a format is read as
    SentiWordNet.
    """
    if args.lexicon:
        lexicon_path: Optional[Path] = Path(args.lexicon)
        lexicon_format = args.lexicon_format or LexiconFormat.SENTIWORDNET.value
    else:
        lexicon_path = config.lexicon_path
        lexicon_format = args.lexicon_format or config.lexicon_format

    tagger = args.tagger
    if tagger is None:
        tagger = (
            TaggerMode.PRETAGGED.value
            if args.input_format == InputFormat.PRETAGGED.value
            else TaggerMode.BUILTIN.value
        )

    if args.report:
        report_path = Path(args.report)
    else:
        report_path = config.output_dir / generate_report_filename()

    return RunConfig(
        input_path=Path(args.input),
        report_path=report_path,
        input_format=args.input_format,
        lexicon_format=lexicon_format,
        lexicon_path=lexicon_path,
        stopwords_path=_optional_path(args.stopwords, config.stopwords_path),
        weights_path=_optional_path(args.weights, config.weights_path),
        partition_path=_optional_path(args.partition, config.partition_path),
        translations_path=_optional_path(args.translations, None),
        tagger=tagger,
        emoticons=args.emoticons,
        drop_objective=args.drop_objective,
        pie_path=_optional_path(args.pie, None),
        workers=args.workers if args.workers is not None else config.workers,
        precision=config.precision,
    )


def build_pipeline(run_config: RunConfig) -> SentimentPipeline:
    """Load every resource a run needs and assemble the pipeline."""
    lexicon = load_lexicon(run_config.lexicon_path, run_config.lexicon_format)
    translator = (
        load_translations(run_config.translations_path)
        if run_config.translations_path is not None
        else identity_translator
    )
    return SentimentPipeline(
        lexicon=lexicon,
        stopwords=load_stopwords(run_config.stopwords_path),
        weights=(
            load_weights(run_config.weights_path)
            if run_config.weights_path is not None
            else None
        ),
        partition=load_partition(run_config.partition_path),
        translator=translator,
        emoticons=run_config.emoticons,
        use_pretagged=run_config.tagger == TaggerMode.PRETAGGED.value,
    )


def print_posts(posts: List[ScoredPost], precision: int) -> None:
    """Echo each post's tagged tokens followed by its score and class."""
    for post in posts:
        print(format_tagged(post.tagged))
        label = post.label.value if post.label is not None else ""
        print(f"{round(post.total_score, precision)} {label}")


def print_summary(report: CorpusReport, precision: int) -> None:
    """Print the corpus summary block."""
    print(f"Total no of tweets is: {report.total_posts}")
    print(f"Total no of positive tweets: {report.positive_count}")
    print(f"Total no of negative tweets: {report.negative_count}")
    print(f"Arithmetic mean is: {round(report.arithmetic_mean, precision)}")
    print(f"Weighted mean is: {round(report.weighted_mean, precision)}")
    print("Sentiment by Percent")
    print(f"Positive sentiment % is: {round(report.positive_percent, precision)}")
    print(f"Negative sentiment % is: {round(report.negative_percent, precision)}")


def run(run_config: RunConfig, quiet: bool = False) -> int:
    """
    Execute one analysis run.

    The report is written only after every stage has succeeded.

    Args:
        run_config: Settings for the run
        quiet: Skip the per-post echo

    Returns:
        int: 0 once the report has been written

    Raises:
        SentiFuzzError: If any stage fails
    """
    run_config.validate()
    pipeline = build_pipeline(run_config)
    posts = ingest(run_config.input_path, run_config.input_format)
    scored = pipeline.analyze_corpus(posts, workers=run_config.workers)
    report = build_report(
        scored, warnings=pipeline.warnings, drop_objective=run_config.drop_objective
    )

    if not quiet:
        print_posts(scored, run_config.precision)
    print_summary(report, run_config.precision)

    if run_config.pie_path is not None:
        render_pie(pie_chart_data(report), run_config.pie_path)
    report_path = write_report(report, run_config.report_path)
    if not quiet:
        print(f"Report saved to: {report_path}")
    return 0


def main(argv: Optional[list] = None) -> int:
    """
    Main CLI entry point.

    Args:
        argv: Command-line arguments (uses sys.argv if None)

    Returns:
        int: Exit code (0 for success, non-zero for errors)
    """
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        config = Config(Path(args.config) if args.config else None)

        if args.show_config:
            handle_config_display(config)
            return 0

        if args.set_default_lexicon or args.set_default_weights:
            handle_config_update(config, args)
            return 0

        if not args.input:
            print("Error: --input is required", file=sys.stderr)
            return 1

        run_config = build_run_config(args, config)
        logger.debug("Run configuration: %s", run_config)
        return run(run_config, quiet=args.quiet)

    except SentiFuzzError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 130
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
