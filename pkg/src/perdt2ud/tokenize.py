"""Re-tokenization: split grouped verb inflections and detach pronominal clitics."""
from __future__ import annotations

from typing import Dict, List, Optional

from .lexicon import ZWNJ, LexiconConfig, VerbConstructions, default_lexicon
from .model import Sentence, Token, splice

CLITIC_HOSTS = frozenset(["N", "PREP", "POSTP", "PR", "ADJ"])
NOMINAL_XPOS = frozenset(["N", "PR"])


def split_multiword_verbs(sentence: Sentence, rules: Optional[VerbConstructions] = None) -> Sentence:
    """Split verb tokens whose form contains spaces into main verb + auxiliaries.

    The main part keeps the original head, label, lemma and features; the
    other parts become AUX dependents of it labelled aux or aux:pass.  A
    token no rule matches is left whole and flagged ``Warn=NoVerbRule``.
    """
    rules = rules or default_lexicon().verb_constructions
    replacements: Dict[int, List[Token]] = {}
    anchors: Dict[int, Token] = {}
    links = []
    work = sentence.copy()
    for tok in work.tokens:
        if tok.xpos != "V" or " " not in tok.form:
            continue
        parts = tok.form.split()
        found = rules.match(parts)
        if found is None:
            tok.misc["Warn"] = "NoVerbRule"
            continue
        rule, classes = found
        labels = rule.part_labels()
        main = tok.copy()
        main.form = parts[rule.main_index]
        space_after = main.misc.pop("SpaceAfter", None)
        new = []
        for i, (part, label) in enumerate(zip(parts, labels)):
            if label is None:
                new.append(main)
                continue
            aux = Token(0, part, rules.aux_lemma(part, classes[i]), "AUX", "AUX", {}, 0, label, {})
            links.append((aux, main))
            new.append(aux)
        if space_after:
            new[-1].misc["SpaceAfter"] = space_after
        replacements[tok.id] = new
        anchors[tok.id] = main
    return splice(work, replacements, anchors, links)


def _clitic_split(tok: Token, clitics: Dict[str, str]):
    if tok.xpos not in CLITIC_HOSTS or tok.lemma in ("_", "", tok.form):
        return None
    for form in sorted(clitics, key=len, reverse=True):
        if len(tok.form) <= len(form) or not tok.form.endswith(form):
            continue
        rest = tok.form[: -len(form)]
        bare = rest.rstrip(ZWNJ)
        if bare == tok.lemma:
            return bare, rest != bare, form, clitics[form]
    return None


def detach_clitics(sentence: Sentence, clitic_forms: Optional[Dict[str, str]] = None) -> Sentence:
    """Detach pronominal clitics recoverable from the lemma.

    A host whose form is its lemma plus a known clitic is cut in two; the
    clitic becomes a PR token labelled MOZ, attached to the nearest nominal
    word at or left of the host (the host itself when nothing qualifies).
    """
    clitics = clitic_forms if clitic_forms is not None else default_lexicon().clitics
    replacements: Dict[int, List[Token]] = {}
    links = []
    for tok in sentence.tokens:
        found = _clitic_split(tok, clitics)
        if found is None:
            continue
        bare, had_zwnj, form, lemma = found
        host = tok.copy()
        host.form = bare
        space_after = host.misc.pop("SpaceAfter", None)
        host.misc["SpaceAfter"] = "No"
        if had_zwnj:
            host.misc["ZWNJAfter"] = "Yes"
        clitic = Token(0, form, lemma, None, "PR", {}, 0, "MOZ", {})
        if space_after:
            clitic.misc["SpaceAfter"] = space_after
        replacements[tok.id] = [host, clitic]
        head = _closest_nominal(sentence, tok.id)
        if head is None or head == tok.id:
            links.append((clitic, host))
        else:
            clitic.head = head
    anchors = {i: toks[0] for i, toks in replacements.items()}
    return splice(sentence, replacements, anchors, links)


def _closest_nominal(sentence: Sentence, host_id: int) -> Optional[int]:
    for i in range(host_id, 0, -1):
        if sentence[i].xpos in NOMINAL_XPOS:
            return i
    return None


def retokenize(sentence: Sentence, lexicon: Optional[LexiconConfig] = None) -> Sentence:
    lexicon = lexicon or default_lexicon()
    out = split_multiword_verbs(sentence, lexicon.verb_constructions)
    return detach_clitics(out, lexicon.clitics)
