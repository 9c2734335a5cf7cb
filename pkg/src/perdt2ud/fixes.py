"""Systematic corrections applied to PerDT before dependency mapping.

Each fix notes what it touched in the token's ``Retag`` misc entry so a
corrections summary can be produced afterwards.
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, List, Optional

from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence

NUMERAL_XPOS = frozenset(["PRENUM", "POSTNUM"])


def _vconj_chains(sentence: Sentence) -> List[List[int]]:
    """Maximal VCONJ paths between verbs, each listed top first."""
    def is_link(tok):
        return (tok.deprel == "VCONJ" and tok.xpos == "V" and tok.head
                and sentence[tok.head].xpos == "V")

    below: Dict[int, List[int]] = {}
    linked = set()
    for tok in sentence.tokens:
        if is_link(tok):
            below.setdefault(tok.head, []).append(tok.id)
            linked.add(tok.id)
    chains = []
    for top in below:
        if top in linked:
            continue
        chain = [top]
        node = top
        while node in below:
            if len(below[node]) != 1:
                # branching coordination is not a chain; leave it alone
                chain = []
                break
            node = below[node][0]
            chain.append(node)
        if len(chain) > 1:
            chains.append(chain)
    return chains


def reverse_verbal_conjunction_chains(sentence: Sentence) -> Sentence:
    """Reverse the direction of every VCONJ chain.

    The bottom verb of a chain takes over the external attachment of the top
    verb, and each remaining link is turned around.  Non-verbal dependents
    stay with their verbs.  Applying the function twice restores the input.
    """
    out = sentence.copy()
    for chain in _vconj_chains(out):
        top, bottom = out[chain[0]], out[chain[-1]]
        ext_head, ext_label = top.head, top.deprel
        for upper, lower in zip(chain, chain[1:]):
            tok = out[upper]
            tok.head = lower
            tok.deprel = "VCONJ"
        bottom.head, bottom.deprel = ext_head, ext_label
        for tid in chain:
            tok = out[tid]
            orig = sentence[tid]
            if tok.head != orig.head:
                tok.add_note("Retag", "vconj-head")
            if tok.deprel != orig.deprel:
                tok.add_note("Retag", "vconj-label")
    return out


def _numeral_material(tok, lexicon: LexiconConfig) -> bool:
    return (tok.xpos in NUMERAL_XPOS or tok.form in lexicon.number_conjunctions
            or (tok.xpos == "N" and lexicon.scale_base(tok.form) is not None))


def _linked(sentence: Sentence, a: int, b: int, lexicon: LexiconConfig) -> bool:
    """a reaches b going up through numeral material only (or the reverse)."""
    for x, y in ((a, b), (b, a)):
        node = x
        while node:
            head = sentence[node].head
            if head == y:
                return True
            if not head or not _numeral_material(sentence[head], lexicon):
                break
            node = head
    return False


def _counted_noun(sentence: Sentence, tid: int, step: int, lexicon: LexiconConfig) -> Optional[int]:
    i = tid + step
    while 1 <= i <= len(sentence) and _numeral_material(sentence[i], lexicon):
        i += step
    if not 1 <= i <= len(sentence):
        return None
    cand = sentence[i]
    if cand.xpos == "N" and lexicon.scale_base(cand.form) is None and _linked(sentence, tid, i, lexicon):
        return i
    return None


def retag_scale_numerals(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    """Retag scale words (thousand, million, ...) tagged N as numerals.

    The numeral becomes PRENUM when the counted noun follows it and POSTNUM
    when it precedes.  A plural scale word with no counted noun is a real
    noun and is left alone.
    """
    lexicon = lexicon or default_lexicon()
    out = sentence.copy()
    for tok in out.tokens:
        if tok.xpos != "N":
            continue
        found = lexicon.scale_base(tok.form)
        if found is None:
            continue
        _, plural = found
        if _counted_noun(sentence, tok.id, 1, lexicon):
            tok.xpos = "PRENUM"
        elif _counted_noun(sentence, tok.id, -1, lexicon):
            tok.xpos = "POSTNUM"
        elif not plural:
            tok.xpos = "PRENUM"
        else:
            continue
        tok.add_note("Retag", "scale-numeral")
    return out


def fix_passive_lemma(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    """Give shodan inflections their own lemma instead of kardan.

    PerDT also marks these tokens passive in FPOS; that mark is reset to
    active, since the voice came from the same assumption.
    """
    lexicon = lexicon or default_lexicon()
    out = sentence.copy()
    for tok in out.tokens:
        if tok.xpos != "V" or not lexicon.is_kardan(tok.lemma):
            continue
        if not any(lexicon.is_shodan_form(part) for part in tok.form.split()):
            continue
        tok.lemma = lexicon.shodan_lemma_like(tok.lemma)
        tok.add_note("Retag", "lemma-shodan")
        if tok.feats.get("fpos") == lexicon.passive_fpos:
            tok.feats["fpos"] = lexicon.active_fpos
            tok.add_note("Retag", "fpos-shodan")
    return out


def apply_systematic_fixes(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    lexicon = lexicon or default_lexicon()
    out = reverse_verbal_conjunction_chains(sentence)
    out = retag_scale_numerals(out, lexicon)
    return fix_passive_lemma(out, lexicon)


CORRECTION_CATEGORIES = (
    ("Lemma", "lemma-shodan"),
    ("POS", "scale-numeral"),
    ("FPOS", "fpos-shodan"),
    ("Dependency head", "vconj-head"),
    ("Dependency label", "vconj-label"),
)


def corrections_summary(sentences: Iterable[Sentence]) -> List[tuple]:
    """Rows of (category, kind, count, percent of tokens)."""
    counts: Counter = Counter()
    forms = 0
    total = 0
    for sent in sentences:
        for tok in sent.tokens:
            total += 1
            for note in tok.misc.get("Retag", "").split(","):
                if note:
                    counts[note] += 1
            if "OrigForm" in tok.misc:
                forms += 1
    rows = []
    for name, key in CORRECTION_CATEGORIES:
        rows.append((name, "Systematic", counts[key], _pct(counts[key], total)))
    rows.append(("Word Form", "", forms, _pct(forms, total)))
    return rows


def _pct(n: int, total: int) -> float:
    return round(100.0 * n / total, 3) if total else 0.0


def format_corrections(rows) -> str:
    lines = ["category\tkind\tcount\tpercent"]
    for name, kind, count, pct in rows:
        lines.append("%s\t%s\t%d\t%.3f" % (name, kind, count, pct))
    return "\n".join(lines) + "\n"
