"""End-to-end conversion of a PerDT file to CoNLL-U."""
from __future__ import annotations

import logging
import sys
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from . import conll
from .depmap import convert_sentence, default_rules, load_rules
from .fixes import apply_systematic_fixes, corrections_summary, format_corrections
from .lexicon import LexiconConfig
from .model import Sentence
from .pos import apply_ner, map_sentence_pos, read_ner_sidecar
from .prepass import prepass
from .tokenize import retokenize
from .validate import ValidationSummary, validate_treebank

log = logging.getLogger(__name__)

EXIT_OK, EXIT_ERRORS, EXIT_USAGE = 0, 1, 2


@dataclass
class PipelineConfig:
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    ner: Optional[str] = None
    lexicon_dir: Optional[str] = None
    rules: Optional[str] = None
    passive_main: Optional[str] = None
    skip_tokenization: bool = False
    skip_systematic_fixes: bool = False
    report: Optional[str] = None
    corrections_report: Optional[str] = None
    fail_on_warn: bool = False
    no_gate: bool = False

    BOOL_KEYS = ("skip_tokenization", "skip_systematic_fixes", "fail_on_warn", "no_gate")

    @classmethod
    def from_file(cls, path) -> "PipelineConfig":
        """Read ``key: value`` lines; ``input`` may repeat."""
        cfg = cls()
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition(":")
                if not sep:
                    raise ValueError("%s:%d: expected key: value" % (path, line_no))
                cfg.set(key.strip(), value.strip())
        return cfg

    def set(self, key: str, value: str) -> None:
        key = key.replace("-", "_")
        if key in ("input", "inputs"):
            self.inputs.append(value)
        elif key in self.BOOL_KEYS:
            setattr(self, key, value.lower() in ("1", "yes", "true", "on"))
        elif key in self.__dataclass_fields__:
            setattr(self, key, value or None)
        else:
            raise ValueError("unknown config key %r" % key)


@dataclass
class ConversionResult:
    sentences: List[Sentence]
    diagnostics: List[conll.ParseDiagnostic]
    warnings: List[str]
    counters: Counter
    fixed: List[Sentence]

    def validation(self, lexicon=None) -> ValidationSummary:
        return validate_treebank(self.sentences, lexicon=lexicon)


def convert_sentences(sentences: Sequence[Sentence], lexicon: LexiconConfig, rules=None,
                      ner: Optional[Sequence[Sequence[str]]] = None, skip_tokenization: bool = False,
                      skip_systematic_fixes: bool = False) -> Tuple[List[Sentence], List[Sentence], List[str], Counter]:
    """Run every stage on PerDT sentences.

    Returns (converted, after-fixes, warnings, stage counters).
    """
    rules = rules if rules is not None else default_rules()
    if ner is not None and len(ner) != len(sentences):
        raise ValueError("NER sidecar has %d sentences for %d read" % (len(ner), len(sentences)))
    out, fixed_all, warnings = [], [], []
    counters: Counter = Counter()
    for i, sent in enumerate(sentences):
        counters["read"] += 1
        if ner is not None:
            # tags follow the input tokens, so they go on before any splitting
            sent = apply_ner(sent, ner[i], lexicon)
        if not skip_systematic_fixes:
            sent = apply_systematic_fixes(sent, lexicon)
            counters["fixed"] += 1
        fixed_all.append(sent)
        if not skip_tokenization:
            before = len(sent)
            sent = retokenize(sent, lexicon)
            counters["tokens_added"] += len(sent) - before
        if ner is None:
            sent = apply_ner(sent, None, lexicon)
        sent = map_sentence_pos(sent, lexicon)
        sent = prepass(sent, lexicon)
        sent = convert_sentence(sent, rules, lexicon, warnings)
        counters["converted"] += 1
        counters["tokens"] += len(sent)
        out.append(sent)
    return out, fixed_all, warnings, counters


def _open_text(path: str):
    return sys.stdin if path == "-" else open(path, encoding="utf-8")


def convert_files(cfg: PipelineConfig, lexicon: Optional[LexiconConfig] = None) -> ConversionResult:
    lexicon = lexicon or LexiconConfig.load(cfg.lexicon_dir, cfg.passive_main)
    rules = load_rules(cfg.rules) if cfg.rules else None
    sentences, diags = [], []
    next_id = 1
    for path in cfg.inputs:
        with _open_text(path) as fh:
            tb, d = conll.read_perdt(fh, next_id)
        skipped = sum(1 for x in d if x.message.endswith("skipped"))
        # ids run on across files so a multi-file corpus has unique ids
        next_id += len(tb.sentences) + skipped
        if len(cfg.inputs) > 1:
            for x in d:
                x.source = path
        sentences.extend(tb.sentences)
        diags.extend(d)
    ner = None
    if cfg.ner:
        with open(cfg.ner, encoding="utf-8") as fh:
            ner = read_ner_sidecar(fh)
    converted, fixed, warnings, counters = convert_sentences(
        sentences, lexicon, rules, ner, cfg.skip_tokenization, cfg.skip_systematic_fixes)
    counters["skipped"] = sum(1 for d in diags if d.message.endswith("skipped"))
    return ConversionResult(converted, diags, warnings, counters, fixed)


def run_convert(cfg: PipelineConfig, err: Optional[TextIO] = None) -> int:
    """Convert, validate, and write output only if the gate passes."""
    err = err or sys.stderr
    if not cfg.inputs:
        print("convert: no input given", file=err)
        return EXIT_USAGE
    lexicon = LexiconConfig.load(cfg.lexicon_dir, cfg.passive_main)
    result = convert_files(cfg, lexicon)
    for d in result.diagnostics:
        print(str(d), file=err)
    for w in result.warnings:
        print("WARN: " + w, file=err)
    summary = result.validation(lexicon)
    for stage in ("read", "fixed", "tokens_added", "converted", "tokens", "skipped"):
        print("%s: %d" % (stage, result.counters[stage]), file=err)
    print("validation_errors: %d" % summary.errors, file=err)
    print("validation_warnings: %d" % summary.warnings, file=err)
    if cfg.report:
        Path(cfg.report).write_text(summary.format_report(), encoding="utf-8")
    if cfg.corrections_report:
        Path(cfg.corrections_report).write_text(format_corrections(corrections_summary(result.fixed)),
                                                encoding="utf-8")
    status = summary.exit_status(cfg.fail_on_warn)
    parse_errors = any(d.severity == "ERROR" for d in result.diagnostics)
    if status and not cfg.no_gate:
        print("validation failed; no output written", file=err)
        return EXIT_ERRORS
    text = conll.write_conllu(result.sentences)
    if cfg.output and cfg.output != "-":
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if parse_errors and cfg.fail_on_warn:
        return EXIT_ERRORS
    return EXIT_OK


@dataclass
class DiffReport:
    disagreements: List[Tuple[str, int, str, str, str]]
    confusion: Counter
    notes: List[str]
    compared_tokens: int = 0

    def format(self) -> str:
        lines = ["sent_id\ttoken\tfield\ta\tb"]
        lines += ["%s\t%d\t%s\t%s\t%s" % d for d in self.disagreements]
        lines.append("")
        lines.append("label_a\tlabel_b\tcount")
        for (a, b), n in sorted(self.confusion.items(), key=lambda kv: (-kv[1], kv[0])):
            lines.append("%s\t%s\t%d" % (a, b, n))
        lines.append("")
        lines.append("compared_tokens: %d" % self.compared_tokens)
        lines.append("disagreements: %d" % len(self.disagreements))
        lines += ["note: " + n for n in self.notes]
        return "\n".join(lines) + "\n"


def diff_sentences(a: Sequence[Sentence], b: Sequence[Sentence]) -> DiffReport:
    """Token-level comparison of two analyses of the same sentences.

    Sentences are paired by sent_id when both sides have ids, else by
    position.  Pairs whose tokenization differs are reported and skipped.
    """
    report = DiffReport([], Counter(), [])
    by_id = {s.sent_id: s for s in b}
    for i, sa in enumerate(a):
        sb = by_id.get(sa.sent_id) if sa.sent_id else (b[i] if i < len(b) else None)
        if sb is None:
            report.notes.append("sentence %s missing from second file" % sa.sent_id)
            continue
        if [t.form for t in sa.tokens] != [t.form for t in sb.tokens]:
            report.notes.append("sentence %s: tokenization differs; excluded" % sa.sent_id)
            continue
        for ta, tb in zip(sa.tokens, sb.tokens):
            report.compared_tokens += 1
            for name in ("upos", "head", "deprel"):
                va, vb = getattr(ta, name), getattr(tb, name)
                if va != vb:
                    report.disagreements.append((sa.sent_id, ta.id, name, str(va), str(vb)))
            if ta.deprel != tb.deprel:
                report.confusion[(ta.deprel, tb.deprel)] += 1
    return report


def run_diff(file_a: str, file_b: str, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    tbs = []
    for path in (file_a, file_b):
        with _open_text(path) as fh:
            tb, diags = conll.read_conllu(fh)
        for d in diags:
            print("%s: %s" % (path, d), file=err)
        tbs.append(tb.sentences)
    report = diff_sentences(*tbs)
    out.write(report.format())
    return EXIT_OK
