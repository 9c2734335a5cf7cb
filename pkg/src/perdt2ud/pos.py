"""PerDT part-of-speech tags to UD UPOS, with named-entity input."""
from __future__ import annotations

from typing import List, Optional, Sequence

from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence, Token

NER_KEEP = {"PER": "PER", "PERSON": "PER", "PERS": "PER", "LOC": "LOC", "LOCATION": "LOC"}
NER_PROPN = frozenset(["PER", "LOC", "LIST"])

# tags whose mapping needs no condition
SIMPLE_POS = {
    "V": "VERB", "SUBR": "SCONJ", "CONJ": "CCONJ", "ADV": "ADV", "PR": "PRON",
    "PUNC": "PUNCT", "ADR": "INTJ", "IDEN": "PROPN", "PREM": "DET",
    "PREP": "ADP", "POSTP": "ADP", "PSUS": "INTJ",
    # introduced by verb splitting
    "AUX": "AUX",
}


class UnknownTag(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


def normalize_ner_tag(tag: str) -> Optional[str]:
    """PER or LOC for person/location tags (BIO prefixes allowed), else None."""
    tag = tag.strip().upper()
    if tag[:2] in ("B-", "I-", "E-", "S-"):
        tag = tag[2:]
    return NER_KEEP.get(tag)


def apply_ner(sentence: Sentence, ner: Optional[Sequence[str]] = None,
              lexicon: Optional[LexiconConfig] = None) -> Sentence:
    """Record entity tags in misc ``NER``.

    Only person and location entities are kept.  Without an external tag
    sequence, names inside a noun phrase headed by an IDEN title are found
    heuristically.
    """
    lexicon = lexicon or default_lexicon()
    out = sentence.copy()
    if ner is not None:
        if len(ner) != len(out):
            raise LengthMismatch("sentence %s: %d NER tags for %d tokens" % (out.sent_id, len(ner), len(out)))
        for tok, tag in zip(out.tokens, ner):
            kept = normalize_ner_tag(tag)
            if kept:
                tok.misc["NER"] = kept
    else:
        _iden_heuristic(out)
    for tok in out.tokens:
        if tok.form in lexicon.propn_overrides and "NER" not in tok.misc:
            tok.misc["NER"] = "LIST"
    return out


def _iden_heuristic(sentence: Sentence) -> None:
    for iden in sentence.tokens:
        if iden.xpos != "IDEN":
            continue
        stack = [iden.id]
        while stack:
            head = stack.pop()
            for tok in sentence.tokens:
                if tok.head != head or tok.id < iden.id or tok.deprel == "MOZ":
                    continue
                if tok.xpos in ("N", "ADJ") and "NER" not in tok.misc:
                    tok.misc["NER"] = "PER"
                    tok.misc["NERSource"] = "IDEN"
                    stack.append(tok.id)


def has_ner(token: Token) -> bool:
    return token.misc.get("NER") in NER_PROPN


def map_pos(token: Token, lexicon: Optional[LexiconConfig] = None) -> str:
    lexicon = lexicon or default_lexicon()
    tag = token.xpos
    if tag in SIMPLE_POS:
        return SIMPLE_POS[tag]
    if tag == "N":
        return "PROPN" if has_ner(token) else "NOUN"
    if tag == "ADJ":
        return "PROPN" if has_ner(token) else "ADJ"
    if tag == "PART":
        if token.form in lexicon.part_adp:
            return "ADP"
        if token.form in lexicon.part_intj:
            return "INTJ"
        return "PART"
    if tag in ("PRENUM", "POSTNUM"):
        return "ADJ" if lexicon.is_ordinal(token.form) else "NUM"
    raise UnknownTag("unknown PerDT tag %r on %r" % (tag, token.form))


def map_sentence_pos(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    lexicon = lexicon or default_lexicon()
    out = sentence.copy()
    for tok in out.tokens:
        tok.upos = map_pos(tok, lexicon)
    return out


def read_ner_sidecar(stream) -> List[List[str]]:
    """One tag per line, a blank line between sentences."""
    out: List[List[str]] = []
    current: List[str] = []
    for line in stream:
        line = line.strip()
        if line:
            current.append(line.split("\t")[-1])
        elif current:
            out.append(current)
            current = []
    if current:
        out.append(current)
    return out
