"""Command line: perdt2ud convert | validate | stats | diff."""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from . import conll
from .lexicon import LexiconConfig
from .pipeline import EXIT_ERRORS, EXIT_OK, EXIT_USAGE, PipelineConfig, run_convert, run_diff
from .stats import format_text, format_tsv, vocab_stats
from .validate import validate_treebank


def _add_convert(sub):
    p = sub.add_parser("convert", help="convert PerDT CoNLL to CoNLL-U")
    p.add_argument("inputs", nargs="*", help="PerDT files ('-' for stdin)")
    p.add_argument("-o", "--output", help="output CoNLL-U file (default stdout)")
    p.add_argument("--config", help="key: value config file; flags override it")
    p.add_argument("--ner", help="NER sidecar, one tag per line, blank line between sentences")
    p.add_argument("--lexicon-dir", help="directory holding the lexicon data files")
    p.add_argument("--rules", help="dependency rule table to use instead of the built-in one")
    p.add_argument("--passive-main", choices=["participle", "shodan"],
                   help="which part of a split passive verb is the main verb")
    p.add_argument("--skip-tokenization", action="store_true", default=None)
    p.add_argument("--skip-systematic-fixes", action="store_true", default=None)
    p.add_argument("--report", help="write validation issues (TSV) here")
    p.add_argument("--corrections-report", help="write the corrections summary (TSV) here")
    p.add_argument("--fail-on-warn", action="store_true", default=None,
                   help="treat warnings and skipped input sentences as failures")
    p.add_argument("--no-gate", action="store_true", default=None,
                   help="write output even when validation finds errors")


def _config(args) -> PipelineConfig:
    cfg = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    if args.inputs:
        cfg.inputs = list(args.inputs)
    for key in ("output", "ner", "lexicon_dir", "rules", "passive_main", "skip_tokenization",
                "skip_systematic_fixes", "report", "corrections_report", "fail_on_warn", "no_gate"):
        value = getattr(args, key)
        if value is not None:
            setattr(cfg, key, value)
    return cfg


def _read_ud(path: str):
    with (sys.stdin if path == "-" else open(path, encoding="utf-8")) as fh:
        tb, diags = conll.read_conllu(fh)
    for d in diags:
        print("%s: %s" % (path, d), file=sys.stderr)
    return tb, diags


def cmd_validate(args) -> int:
    tb, diags = _read_ud(args.input)
    lexicon = LexiconConfig.load(args.lexicon_dir) if args.lexicon_dir else None
    summary = validate_treebank(tb.sentences, lexicon=lexicon)
    sys.stdout.write(summary.format_report())
    sys.stderr.write(summary.format_summary())
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(summary.format_summary())
    if any(d.severity == "ERROR" for d in diags):
        return EXIT_ERRORS
    return summary.exit_status(args.fail_on_warn)


def cmd_stats(args) -> int:
    tb, _ = _read_ud(args.input)
    stats = vocab_stats(tb.sentences)
    sys.stdout.write(format_tsv(stats) if args.format == "tsv" else format_text(stats))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perdt2ud", description="Convert PerDT to Universal Dependencies.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_convert(sub)
    p = sub.add_parser("validate", help="check a CoNLL-U file")
    p.add_argument("input")
    p.add_argument("--lexicon-dir")
    p.add_argument("--summary", help="also write the key: value summary here")
    p.add_argument("--fail-on-warn", action="store_true")
    p = sub.add_parser("stats", help="corpus statistics of a CoNLL-U file")
    p.add_argument("input")
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p = sub.add_parser("diff", help="compare two CoNLL-U analyses")
    p.add_argument("file_a")
    p.add_argument("file_b")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        if args.command == "convert":
            return run_convert(_config(args))
        if args.command == "validate":
            return cmd_validate(args)
        if args.command == "stats":
            return cmd_stats(args)
        return run_diff(args.file_a, args.file_b)
    except (OSError, ValueError) as exc:
        print("perdt2ud: %s" % exc, file=sys.stderr)
        return EXIT_ERRORS


if __name__ == "__main__":
    sys.exit(main())
