"""Corpus size, vocabulary and relation-frequency statistics."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from .model import Sentence

DIVERGENCE_LIMIT = 0.10


def label_frequencies(sentences: Iterable[Sentence]) -> Dict[str, Tuple[int, float]]:
    """label -> (count, percent of all tokens)."""
    counts: Counter = Counter()
    for sent in sentences:
        counts.update(t.deprel for t in sent.tokens)
    total = sum(counts.values())
    return {label: (n, 100.0 * n / total) for label, n in counts.items()}


def _is_verb(tok) -> bool:
    if tok.upos is not None:
        return tok.upos == "VERB"
    return tok.xpos == "V"


@dataclass
class CorpusStats:
    sentence_count: int = 0
    token_count: int = 0
    word_type_count: int = 0
    lemma_type_count: int = 0
    verb_lemma_type_count: int = 0
    label_frequencies: Dict[str, Tuple[int, float]] = field(default_factory=dict)

    def notes(self) -> List[str]:
        """Informational remarks; nothing here is an error."""
        out = []
        npass = self.label_frequencies.get("nsubj:pass", (0, 0.0))[0]
        apass = self.label_frequencies.get("aux:pass", (0, 0.0))[0]
        if max(npass, apass) and abs(npass - apass) > DIVERGENCE_LIMIT * max(npass, apass):
            out.append("nsubj:pass (%d) and aux:pass (%d) differ by more than %d%%"
                       % (npass, apass, round(DIVERGENCE_LIMIT * 100)))
        return out


def vocab_stats(sentences: Iterable[Sentence]) -> CorpusStats:
    sentences = list(sentences)
    words, lemmas, verbs = set(), set(), set()
    tokens = 0
    for sent in sentences:
        for tok in sent.tokens:
            tokens += 1
            words.add(tok.form)
            lemmas.add(tok.lemma)
            if _is_verb(tok):
                verbs.add(tok.lemma)
    return CorpusStats(len(sentences), tokens, len(words), len(lemmas), len(verbs),
                       label_frequencies(sentences))


def format_percent(pct: float) -> str:
    """One decimal, or enough digits to show a small nonzero value."""
    if pct == 0 or pct >= 0.1:
        return "%.1f" % pct
    digits = 2
    while round(pct, digits) == 0 and digits < 6:
        digits += 1
    return "%.*f" % (digits, pct)


def _rows(stats: CorpusStats) -> List[Tuple[str, str]]:
    rows = [("sentences", str(stats.sentence_count)), ("tokens", str(stats.token_count)),
            ("word_types", str(stats.word_type_count)), ("lemma_types", str(stats.lemma_type_count)),
            ("verb_lemma_types", str(stats.verb_lemma_type_count))]
    return rows


def _label_rows(stats: CorpusStats):
    return sorted(stats.label_frequencies.items(), key=lambda kv: (-kv[1][0], kv[0]))


def format_tsv(stats: CorpusStats) -> str:
    lines = ["%s\t%s" % row for row in _rows(stats)]
    lines.append("")
    lines.append("label\tcount\tpercent")
    for label, (n, pct) in _label_rows(stats):
        lines.append("%s\t%d\t%s" % (label, n, format_percent(pct)))
    lines.extend("# " + note for note in stats.notes())
    return "\n".join(lines) + "\n"


def format_text(stats: CorpusStats) -> str:
    lines = ["%-18s %s" % row for row in _rows(stats)]
    lines.append("")
    labels = _label_rows(stats)
    width = max([len(label) for label, _ in labels] + [5])
    lines.append("%-*s %8s %8s" % (width, "label", "count", "percent"))
    for label, (n, pct) in labels:
        lines.append("%-*s %8d %8s" % (width, label, n, format_percent(pct)))
    lines.extend("note: " + note for note in stats.notes())
    return "\n".join(lines) + "\n"


def compare_published(stats: CorpusStats, published_counts: Dict[str, int], tolerance: float) -> List[str]:
    """Labels whose count is off the published count by more than ``tolerance`` (a fraction)."""
    out = []
    for label, expected in sorted(published_counts.items()):
        got = stats.label_frequencies.get(label, (0, 0.0))[0]
        if abs(got - expected) > tolerance * expected:
            out.append("%s: %d vs %d" % (label, got, expected))
    return out
