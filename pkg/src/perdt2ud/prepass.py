"""Labels assigned before rule-based mapping: goeswith, flat:name, flat:num.

These spans are not compositional, so they are flattened onto their first
token and given final UD labels that the rule engine leaves alone.
"""
from __future__ import annotations

from typing import Callable, List, Optional, Sequence

from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence


def _depth(sentence: Sentence, tid: int) -> int:
    d = 0
    while sentence[tid].head:
        tid = sentence[tid].head
        d += 1
    return d


def _connected(sentence: Sentence, span: Sequence[int]) -> bool:
    members = set(span)
    return sum(1 for i in span if sentence[i].head not in members) == 1


def _flatten(sentence: Sentence, span: Sequence[int], label_of: Callable[[int], tuple]) -> None:
    """Hang every member of ``span`` off its first token (in place).

    The first token takes over the external attachment of the span's
    highest member; ``label_of(member)`` gives (head, label) for the others.
    Dependents outside the span move to the first token.
    """
    first = span[0]
    members = set(span)
    top = min(span, key=lambda i: (_depth(sentence, i), i))
    if top != first:
        sentence[first].head = sentence[top].head
        sentence[first].deprel = sentence[top].deprel
    for i in span[1:]:
        sentence[i].head, sentence[i].deprel = label_of(i)
    for tok in sentence.tokens:
        if tok.id not in members and tok.head in members and tok.head != first:
            tok.head = first


def _goeswith_spans(sentence: Sentence, lexicon: LexiconConfig) -> List[List[int]]:
    spans: List[List[int]] = []
    for tok in sentence.tokens:
        if tok.id == 1:
            continue
        prev = sentence[tok.id - 1]
        flagged = tok.misc.get("GoesWith") == "Yes" or (prev.form, tok.form) in lexicon.goeswith_pairs
        if not flagged:
            continue
        if spans and spans[-1][-1] == prev.id:
            spans[-1].append(tok.id)
        else:
            spans.append([prev.id, tok.id])
    return spans


def _runs(sentence: Sentence, ok: Callable[[int], bool]) -> List[List[int]]:
    runs, cur = [], []
    for tok in sentence.tokens:
        if ok(tok.id):
            cur.append(tok.id)
        else:
            if cur:
                runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def _connected_spans(sentence: Sentence, run: List[int], valid: Callable[[List[int]], bool]) -> List[List[int]]:
    """Greedy left-to-right longest sub-runs that are connected and valid."""
    out = []
    i = 0
    while i < len(run):
        found = None
        for j in range(len(run), i + 1, -1):
            span = run[i:j]
            if valid(span) and _connected(sentence, span):
                found = span
                break
        if found:
            out.append(found)
            i += len(found)
        else:
            i += 1
    return out


def _name_spans(sentence: Sentence) -> List[List[int]]:
    def valid(span):
        return all(sentence[i].deprel != "MOZ" or sentence[i].head not in span for i in span)

    # titles are modifiers of the name, not part of it
    runs = _runs(sentence, lambda i: sentence[i].upos == "PROPN" and sentence[i].xpos != "IDEN")
    return [s for run in runs for s in _connected_spans(sentence, run, valid)]


def _number_spans(sentence: Sentence, lexicon: LexiconConfig) -> List[List[int]]:
    def is_conj(i):
        return sentence[i].form in lexicon.number_conjunctions

    def valid(span):
        if is_conj(span[0]) or is_conj(span[-1]):
            return False
        return all(not (is_conj(a) and is_conj(b)) for a, b in zip(span, span[1:]))

    runs = _runs(sentence, lambda i: sentence[i].upos == "NUM" or is_conj(i))
    return [s for run in runs for s in _connected_spans(sentence, run, valid)]


def prepass(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    """Flatten typo splits, multiword names and complex numerals.

    * parts of a split word become ``goeswith`` of the first part
    * adjacent proper nouns forming one subtree without Ezafe links become
      ``flat:name`` of the first
    * numerals forming one number become ``flat:num`` of the first numeral,
      a conjunction inside the number becomes ``cc`` of the numeral after it
    """
    lexicon = lexicon or default_lexicon()
    out = sentence.copy()
    for span in _goeswith_spans(out, lexicon):
        _flatten(out, span, lambda i, f=span[0]: (f, "goeswith"))
    for span in _name_spans(out):
        _flatten(out, span, lambda i, f=span[0]: (f, "flat:name"))
    for span in _number_spans(out, lexicon):
        def label_of(i, f=span[0]):
            if out[i].form in lexicon.number_conjunctions:
                return i + 1, "cc"
            return f, "flat:num"
        _flatten(out, span, label_of)
    return out
