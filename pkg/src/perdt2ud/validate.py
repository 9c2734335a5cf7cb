"""Well-formedness checks and linguistic lints for converted sentences.

Rule codes, severities and messages live in ``data/validation_rules.tsv``;
each row names one of the check functions registered in ``CHECKS``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from . import labels
from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence

REGISTRY_PATH = Path(__file__).parent / "data" / "validation_rules.tsv"
SEVERITIES = ("ERROR", "WARN")
NMOD_HEADS = frozenset(["NOUN", "PROPN", "PRON", "NUM"])


@dataclass(frozen=True)
class ValidationIssue:
    sent_id: str
    token_id: Optional[int]
    rule: str
    severity: str
    message: str

    def as_tsv(self) -> str:
        tok = "_" if self.token_id is None else str(self.token_id)
        return "\t".join([self.sent_id, tok, self.rule, self.severity, self.message])


@dataclass(frozen=True)
class RegistryEntry:
    code: str
    severity: str
    check: str
    message: str


# A check yields (token id or None, extra detail) for every violation.
Check = Callable[[Sentence, LexiconConfig], Iterator[Tuple[Optional[int], str]]]
CHECKS: Dict[str, Check] = {}


def check(name: str):
    def register(fn):
        CHECKS[name] = fn
        return fn
    return register


def load_registry(path=None) -> List[RegistryEntry]:
    path = Path(path) if path else REGISTRY_PATH
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            code, severity, name, message = line.split("\t")
            if severity not in SEVERITIES:
                raise ValueError("bad severity %r for %s" % (severity, code))
            if name not in CHECKS:
                raise ValueError("unknown check %r for %s" % (name, code))
            out.append(RegistryEntry(code, severity, name, message))
    return out


def _valid_heads(sentence: Sentence) -> bool:
    n = len(sentence)
    return all(0 <= t.head <= n for t in sentence.tokens)


@check("root_count")
def _root_count(s: Sentence, lex):
    roots = [t.id for t in s.tokens if t.head == 0]
    if len(roots) != 1:
        yield (roots[1] if len(roots) > 1 else None), "%d roots" % len(roots)


@check("cycle")
def _cycle(s: Sentence, lex):
    if not _valid_heads(s):
        return
    reported = set()
    for tok in s.tokens:
        seen = []
        node = tok.id
        while node and node not in seen:
            seen.append(node)
            node = s[node].head
        if node:
            loop = frozenset(seen[seen.index(node):])
            if loop not in reported:
                reported.add(loop)
                yield min(loop), "through tokens %s" % ",".join(map(str, sorted(loop)))


@check("dangling_head")
def _dangling(s: Sentence, lex):
    for tok in s.tokens:
        if not 0 <= tok.head <= len(s) or tok.head == tok.id:
            yield tok.id, "head %d" % tok.head


@check("root_label")
def _root_label(s: Sentence, lex):
    for tok in s.tokens:
        if (tok.head == 0) != (tok.deprel == "root"):
            yield tok.id, "head %d, label %s" % (tok.head, tok.deprel)


@check("leaf")
def _leaf(s: Sentence, lex):
    heads = Counter(t.head for t in s.tokens)
    for tok in s.tokens:
        if tok.deprel in labels.LEAF_LABELS and heads[tok.id]:
            yield tok.id, "%s has %d dependents" % (tok.deprel, heads[tok.id])


@check("inventory")
def _inventory(s: Sentence, lex):
    for tok in s.tokens:
        if tok.deprel not in labels.ALLOWED_LABELS:
            yield tok.id, "label %s" % tok.deprel


@check("shodan_cop")
def _shodan_cop(s: Sentence, lex):
    for tok in s.tokens:
        if tok.deprel == "cop" and (lex.is_shodan_lemma(tok.lemma) or lex.is_shodan_form(tok.form)):
            yield tok.id, tok.form


def _head(s: Sentence, tok):
    return s[tok.head] if 0 < tok.head <= len(s) else None


@check("nmod_head")
def _nmod_head(s: Sentence, lex):
    for tok in s.tokens:
        head = _head(s, tok)
        if tok.deprel == "nmod" and head is not None and head.upos not in NMOD_HEADS:
            yield tok.id, "head is %s" % head.upos


@check("lv_obj")
def _lv_obj(s: Sentence, lex):
    for tok in s.tokens:
        head = _head(s, tok)
        if tok.deprel == "obj" and tok.form in lex.two_word_preverbs and head is not None and lex.is_kardan(head.lemma):
            yield tok.id, tok.form


@check("csubj")
def _csubj(s: Sentence, lex):
    for tok in s.tokens:
        if tok.upos != "ADJ":
            continue
        rels = {t.deprel for t in s.tokens if t.head == tok.id}
        if "cop" in rels and "ccomp" in rels and not rels & {"nsubj", "nsubj:pass", "csubj"}:
            yield tok.id, tok.form


_registry: Optional[List[RegistryEntry]] = None


def default_registry() -> List[RegistryEntry]:
    global _registry
    if _registry is None:
        _registry = load_registry()
    return _registry


def validate(sentence: Sentence, registry: Optional[List[RegistryEntry]] = None,
             lexicon: Optional[LexiconConfig] = None) -> List[ValidationIssue]:
    registry = registry if registry is not None else default_registry()
    lexicon = lexicon or default_lexicon()
    issues = []
    for entry in registry:
        for token_id, detail in CHECKS[entry.check](sentence, lexicon):
            msg = entry.message + (" (%s)" % detail if detail else "")
            issues.append(ValidationIssue(str(sentence.sent_id), token_id, entry.code, entry.severity, msg))
    return issues


@dataclass
class ValidationSummary:
    issues: List[ValidationIssue]
    sentences: int

    @property
    def counts(self) -> Counter:
        return Counter(i.rule for i in self.issues)

    @property
    def errors(self) -> int:
        return sum(1 for i in self.issues if i.severity == "ERROR")

    @property
    def warnings(self) -> int:
        return sum(1 for i in self.issues if i.severity == "WARN")

    def exit_status(self, fail_on_warn: bool = False) -> int:
        return 1 if self.errors or (fail_on_warn and self.warnings) else 0

    def format_summary(self) -> str:
        lines = ["sentences: %d" % self.sentences, "errors: %d" % self.errors,
                 "warnings: %d" % self.warnings]
        for code, n in sorted(self.counts.items()):
            lines.append("rule.%s: %d" % (code, n))
        lines.append("status: %d" % self.exit_status())
        return "\n".join(lines) + "\n"

    def format_report(self) -> str:
        return "".join(i.as_tsv() + "\n" for i in self.issues)


def validate_treebank(sentences: Iterable[Sentence], registry=None, lexicon=None) -> ValidationSummary:
    issues: List[ValidationIssue] = []
    n = 0
    for sent in sentences:
        n += 1
        issues.extend(validate(sent, registry, lexicon))
    return ValidationSummary(issues, n)
