"""Head rotations that turn function-word-headed PerDT structures content-headed.

The underscore functions edit a sentence in place and touch structure only
(heads), so the rule engine can decide labels itself.  The public wrappers
copy the sentence and also rewrite labels.
"""
from __future__ import annotations

from typing import Callable, List, Optional, Tuple

from . import labels
from .model import Sentence, _reattach, is_descendant

CASE, MARK = "case", "mark"

FUNCTION_UPOS = {CASE: frozenset(["ADP"]), MARK: frozenset(["SCONJ", "ADP"])}

PROMOTION_PRIORITY = ("NOUN", "PROPN", "PRON", "ADJ", "NUM", "VERB", "ADV")


class NoPromotableDependent(ValueError):
    pass


def promotion_candidate(sentence: Sentence, func_id: int) -> Optional[int]:
    """Dependent of ``func_id`` that a case/mark rotation would promote."""
    kids = [t for t in sentence.tokens if t.head == func_id]
    content = [t for t in kids if t.upos != "PUNCT"] or kids
    if not content:
        return None

    def key(tok):
        rank = PROMOTION_PRIORITY.index(tok.upos) if tok.upos in PROMOTION_PRIORITY else len(PROMOTION_PRIORITY)
        return rank, abs(tok.id - func_id), tok.id

    return min(content, key=key).id


def can_rotate(sentence: Sentence, func_id: int, role: str) -> bool:
    tok = sentence[func_id]
    return tok.upos in FUNCTION_UPOS[role] and promotion_candidate(sentence, func_id) is not None


def _cmr(sentence: Sentence, func_id: int) -> int:
    """Promote the best dependent of ``func_id`` into its place (structure only)."""
    cand = promotion_candidate(sentence, func_id)
    if cand is None:
        raise NoPromotableDependent("token %d has no dependents" % func_id)
    func = sentence[func_id]
    promoted = sentence[cand]
    promoted.head = func.head
    func.head = cand
    for tok in sentence.tokens:
        if tok.head == func_id:
            tok.head = cand
    return cand


def cmr(sentence: Sentence, func_id: int, role: str) -> Tuple[Sentence, int]:
    """Case/mark rotation.

    Returns the edited copy and the id of the promoted content word, which
    takes over the function word's attachment and label; the function word
    becomes its ``case``/``mark`` leaf.
    """
    if role not in (CASE, MARK):
        raise ValueError("role must be case or mark")
    out = sentence.copy()
    label = out[func_id].deprel
    cand = _cmr(out, func_id)
    out[cand].deprel = label
    out[func_id].deprel = role
    return out, cand


def conj_members(sentence: Sentence, start: int, is_conj: Callable[[int], bool]) -> List[int]:
    """All conjuncts connected to ``start`` through conjunct arcs, in surface order."""
    members = {start}
    changed = True
    while changed:
        changed = False
        for tok in sentence.tokens:
            if not is_conj(tok.id):
                continue
            if tok.id in members and tok.head and tok.head not in members:
                members.add(tok.head)
                changed = True
            elif tok.head in members and tok.id not in members:
                members.add(tok.id)
                changed = True
    return sorted(members)


def _conj_rotate(sentence: Sentence, members: List[int], is_conj: Callable[[int], bool]) -> Tuple[int, int, List[int]]:
    """Bouquet-ify one coordination (structure only).

    Returns (first conjunct, former top, ids of conjunction words moved).
    """
    member_set = set(members)
    tops = [m for m in members if not (is_conj(m) and sentence[m].head in member_set)]
    top = tops[0]
    first = members[0]
    if first != top:
        sentence[first].head = sentence[top].head
    for m in members:
        if m != first:
            _reattach(sentence, m, first)
    moved = []
    for tok in sentence.tokens:
        if tok.head in member_set and tok.id not in member_set and tok.upos == "CCONJ":
            following = [m for m in members if m > tok.id]
            if following and following[0] != tok.head and not is_descendant(sentence, following[0], tok.id):
                tok.head = following[0]
            if following:
                moved.append(tok.id)
    return first, top, moved


def conj_rotation(sentence: Sentence, chain_head: int) -> Sentence:
    """Flatten a chain of *CONJ arcs into first-conjunct-headed coordination."""
    out = sentence.copy()

    def is_conj(tid):
        return out[tid].deprel in labels.CONJ_LABELS or out[tid].deprel == "conj"

    members = conj_members(out, chain_head, is_conj)
    if len(members) < 2:
        return out
    first, top, moved = _conj_rotate(out, members, is_conj)
    ext_label = out[top].deprel
    out[first].deprel = ext_label
    for m in members:
        if m != first:
            out[m].deprel = "conj"
    for c in moved:
        out[c].deprel = "cc"
    return out


def _npp(sentence: Sentence, npp_id: int) -> Optional[int]:
    """Promote the complement of an NPP preposition and hang it on the light verb."""
    if not can_rotate(sentence, npp_id, CASE):
        return None
    noun = sentence[npp_id].head
    verb = sentence[noun].head if noun else 0
    cand = _cmr(sentence, npp_id)
    if verb:
        _reattach(sentence, cand, verb)
    return cand


def npp_rotation(sentence: Sentence, npp_id: int) -> Sentence:
    out = sentence.copy()
    head = out[npp_id].head
    if head and out[head].deprel in ("NVE", "ENC"):
        cand = _npp(out, npp_id)
        if cand is not None:
            out[cand].deprel = "obl:arg"
            out[npp_id].deprel = CASE
            return out
    if can_rotate(out, npp_id, CASE):
        cand = _cmr(out, npp_id)
        out[cand].deprel = "nmod"
        out[npp_id].deprel = CASE
    else:
        out[npp_id].deprel = "nmod"
    return out
