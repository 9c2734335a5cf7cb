"""PerDT dependency relations to UD relations.

Rules are chosen for every token against the tree as it stands after the
pre-pass, so later rotations cannot change which rule applies.  Chosen
relations then travel with the token that ends up bearing them:

1. flips (copulas, modals, measure words, participle clauses), deepest first
2. coordination rotations
3. case/mark and NPP rotations, deepest first
4. label assignment
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from . import labels
from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence, _flip
from .rotations import CASE, MARK, _cmr, _conj_rotate, _npp, can_rotate, conj_members, promotion_candidate

log = logging.getLogger(__name__)

RULES_PATH = Path(__file__).parent / "data" / "dep_rules.tsv"

PREACTIONS = ("-", "CMR_CASE", "CMR_MARK", "CONJ_ROTATION", "NPP_ROTATION", "FLIP")
CMR_ROLE = {"CMR_CASE": CASE, "CMR_MARK": MARK}
POS_MACROS = {"nominal": labels.NOMINAL_UPOS, "cardinal": frozenset(["NUM"])}
CARRYING_FLIPS = frozenset(["cop", "aux", "aux:pass"])
TEST_KINDS = ("head", "dep", "lex", "sib", "voice", "head-modal", "head-rel", "has-dep", "child")


class RuleError(ValueError):
    pass


class Voice(enum.Enum):
    ACTIVE = "ACTIVE"
    PASSIVE = "PASSIVE"


@dataclass(frozen=True)
class Test:
    kind: str
    values: frozenset = frozenset()
    negate: bool = False


@dataclass(frozen=True)
class MappingRule:
    source_label: str
    precondition: Tuple[Test, ...]
    preaction: str
    target: str
    priority: int
    text: str = "*"

    @property
    def is_fallback(self) -> bool:
        return not self.precondition


def parse_precondition(text: str) -> Tuple[Test, ...]:
    text = text.strip()
    if text in ("*", ""):
        return ()
    tests = []
    for part in text.split("&"):
        part = part.strip()
        negate = part.startswith("!")
        part = part.lstrip("!")
        kind, _, arg = part.partition(":")
        if kind not in TEST_KINDS:
            raise RuleError("unknown precondition test %r" % part)
        values = set()
        for v in arg.split(","):
            v = v.strip()
            if v:
                values |= POS_MACROS.get(v, {v}) if kind in ("head", "dep", "child") else {v}
        tests.append(Test(kind, frozenset(values), negate))
    return tuple(tests)


def load_rules(path=None) -> Dict[str, List[MappingRule]]:
    """Read a rule table; rules keep file order within each label."""
    path = Path(path) if path else RULES_PATH
    table: Dict[str, List[MappingRule]] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise RuleError("%s:%d: expected 4 tab-separated columns" % (path, line_no))
            label, pre, action, target = (c.strip() for c in cols)
            if action not in PREACTIONS:
                raise RuleError("%s:%d: unknown preaction %r" % (path, line_no, action))
            rules = table.setdefault(label, [])
            rules.append(MappingRule(label, parse_precondition(pre), action, target, len(rules), pre))
    for label, rules in table.items():
        if not rules[-1].is_fallback:
            raise RuleError("rules for %s do not end in an unconditional row" % label)
    return table


_default_rules: Optional[Dict[str, List[MappingRule]]] = None


def default_rules() -> Dict[str, List[MappingRule]]:
    global _default_rules
    if _default_rules is None:
        _default_rules = load_rules()
    return _default_rules


def effective_pos(tok, lexicon: LexiconConfig) -> Optional[str]:
    if lexicon.is_copula(tok):
        return "AUX"
    return tok.upos


def detect_voice(sentence: Sentence, verb_id: int, lexicon: Optional[LexiconConfig] = None) -> Voice:
    """Passive when features say so, an aux:pass hangs off the verb, or the
    verb is a shodan inflection right after a past participle."""
    lexicon = lexicon or default_lexicon()
    if not verb_id:
        return Voice.ACTIVE
    tok = sentence[verb_id]
    if tok.xpos not in ("V", "AUX") and tok.upos not in ("VERB", "AUX"):
        return Voice.ACTIVE
    if tok.feats.get("fpos") == lexicon.passive_fpos:
        return Voice.PASSIVE
    for key, value in tok.feats.items():
        if key.lower() == "voice" and value.lower().startswith("pass"):
            return Voice.PASSIVE
    if any(t.head == verb_id and t.deprel == "aux:pass" for t in sentence.tokens):
        return Voice.PASSIVE
    participle = lexicon.verb_constructions.classes.get("PARTICIPLE")
    if verb_id > 1 and participle is not None:
        prev = sentence[verb_id - 1]
        if (lexicon.is_shodan_form(tok.form) and prev.xpos in ("V", "AUX")
                and participle.fullmatch(prev.form)):
            return Voice.PASSIVE
    return Voice.ACTIVE


def _dep_pos(sentence: Sentence, tok, rule: MappingRule, lexicon: LexiconConfig) -> set:
    out = {effective_pos(tok, lexicon)}
    role = CMR_ROLE.get(rule.preaction)
    if rule.preaction == "NPP_ROTATION":
        role = CASE
    if role and can_rotate(sentence, tok.id, role):
        out.add(sentence[promotion_candidate(sentence, tok.id)].upos)
    return out


def _check(test: Test, sentence: Sentence, tok, rule: MappingRule, lexicon: LexiconConfig) -> bool:
    head = sentence[tok.head] if tok.head else None
    kind = test.kind
    if kind == "head":
        ok = head is not None and effective_pos(head, lexicon) in test.values
    elif kind == "dep":
        ok = bool(_dep_pos(sentence, tok, rule, lexicon) & test.values)
    elif kind == "lex":
        ok = tok.form in test.values
    elif kind == "sib":
        ok = any(t.head == tok.head and t.id != tok.id and t.deprel in test.values for t in sentence.tokens)
    elif kind == "voice":
        voice = detect_voice(sentence, tok.head, lexicon)
        ok = voice.value.lower() in test.values
    elif kind == "head-modal":
        ok = head is not None and lexicon.is_modal(head)
    elif kind == "head-rel":
        ok = head is not None and head.deprel in test.values
    elif kind == "has-dep":
        ok = any(t.head == tok.id for t in sentence.tokens)
    elif kind == "child":
        ok = any(t.head == tok.id and t.upos in test.values for t in sentence.tokens)
    else:
        raise RuleError(kind)
    return ok != test.negate


def select_rule(sentence: Sentence, token_id: int, rules=None, lexicon=None) -> Optional[MappingRule]:
    """First rule for the token's PerDT label whose precondition holds."""
    rules = rules if rules is not None else default_rules()
    lexicon = lexicon or default_lexicon()
    tok = sentence[token_id]
    for rule in rules.get(tok.deprel, ()):
        if all(_check(t, sentence, tok, rule, lexicon) for t in rule.precondition):
            return rule
    return None


class _Rel:
    """A chosen rule travelling with whichever token bears the relation."""
    __slots__ = ("rule", "done", "source_id")

    def __init__(self, rule: MappingRule, source_id: int):
        self.rule = rule
        self.done = False
        self.source_id = source_id


Bearer = Union[_Rel, str]


def _depths(sentence: Sentence) -> Dict[int, int]:
    out = {}
    for tok in sentence.tokens:
        d, node, seen = 0, tok.id, set()
        while sentence[node].head and node not in seen:
            seen.add(node)
            node = sentence[node].head
            d += 1
        out[tok.id] = d
    return out


def _next_pending(sentence: Sentence, rel: Dict[int, Bearer], want) -> Optional[int]:
    depths = _depths(sentence)
    best = None
    for tok in sentence.tokens:
        r = rel[tok.id]
        if isinstance(r, _Rel) and not r.done and want(tok, r):
            if best is None or depths[tok.id] > depths[best] or (depths[tok.id] == depths[best] and tok.id < best):
                best = tok.id
    return best


def _fallback(rules, label: str) -> Optional[MappingRule]:
    rows = rules.get(label, ())
    return rows[-1] if rows else None


def convert_sentence(sentence: Sentence, rules=None, lexicon: Optional[LexiconConfig] = None,
                     report: Optional[List[str]] = None) -> Sentence:
    """Map every PerDT relation of a POS-mapped, pre-passed sentence to UD.

    Problems that do not stop conversion (unknown labels, degenerate
    rotations) are appended to ``report`` and logged.
    """
    rules = rules if rules is not None else default_rules()
    lexicon = lexicon or default_lexicon()
    notes = report if report is not None else []

    def warn(msg):
        notes.append("%s: %s" % (sentence.sent_id, msg))
        log.warning("%s: %s", sentence.sent_id, msg)

    s = sentence.copy()
    rel: Dict[int, Bearer] = {}
    for tok in sentence.tokens:
        if tok.deprel in labels.PERDT_LABELS:
            rule = select_rule(sentence, tok.id, rules, lexicon)
            if rule is None:
                warn("no rule for %s on token %d; using dep" % (tok.deprel, tok.id))
                rel[tok.id] = "dep"
            else:
                rel[tok.id] = _Rel(rule, tok.id)
        elif tok.deprel in labels.ALLOWED_LABELS:
            rel[tok.id] = tok.deprel
        else:
            warn("unknown source label %r on token %d; using dep" % (tok.deprel, tok.id))
            rel[tok.id] = "dep"

    _apply_flips(s, rel, warn)
    _apply_conj(s, rel)
    _apply_cmr(s, rel, rules, warn)

    for tok in s.tokens:
        r = rel[tok.id]
        if isinstance(r, _Rel):
            if r.rule.preaction == "FLIP" and not r.done:
                warn("could not flip token %d (%s)" % (tok.id, r.rule.source_label))
            tok.deprel = r.rule.target
        else:
            tok.deprel = r
    _finish(s, warn)
    return s


def _apply_flips(s: Sentence, rel: Dict[int, Bearer], warn) -> None:
    while True:
        tid = _next_pending(s, rel, lambda tok, r: r.rule.preaction == "FLIP")
        if tid is None:
            return
        r = rel[tid]
        r.done = True
        dep = s[tid]
        if not dep.head:
            continue
        head_id = dep.head
        # a demoted function word hands its dependents over; a demoted
        # content word (measure noun, clause) keeps its own
        _flip(s, tid, None, None, carry=r.rule.target in CARRYING_FLIPS)
        rel[tid], rel[head_id] = rel[head_id], r.rule.target
        if r.rule.target == "conj":
            # the coordinator now belongs to the conjunct that follows it
            for tok in s.tokens:
                if tok.head == tid and tok.upos == "CCONJ" and min(tid, head_id) < tok.id < max(tid, head_id):
                    tok.head = head_id
                    rel[tok.id] = "cc"


def _is_conj_rel(r: Bearer) -> bool:
    return isinstance(r, _Rel) and r.rule.preaction == "CONJ_ROTATION"


def _apply_conj(s: Sentence, rel: Dict[int, Bearer]) -> None:
    # a coordinator carrying the conjunct arc hands it to its complement
    for tok in s.tokens:
        if _is_conj_rel(rel[tok.id]) and tok.upos == "CCONJ":
            kids = [t for t in s.tokens if t.head == tok.id and t.upos not in ("PUNCT", "CCONJ")]
            if kids:
                new = kids[0].id
                _cmr_to(s, tok.id, new)
                rel[new], rel[tok.id] = rel[tok.id], "cc"

    def is_conj(tid):
        return _is_conj_rel(rel[tid])

    seen = set()
    for tok in s.tokens:
        if not is_conj(tok.id) or tok.id in seen:
            continue
        members = conj_members(s, tok.id, is_conj)
        seen.update(members)
        first, top, moved = _conj_rotate(s, members, is_conj)
        if first != top:
            rel[first], rel[top] = rel[top], rel[first]
        for c in moved:
            rel[c] = "cc"


def _cmr_to(s: Sentence, func_id: int, cand: int) -> None:
    func = s[func_id]
    s[cand].head = func.head
    func.head = cand
    for tok in s.tokens:
        if tok.head == func_id:
            tok.head = cand


def _apply_cmr(s: Sentence, rel: Dict[int, Bearer], rules, warn) -> None:
    def want(tok, r):
        if r.rule.preaction in ("CMR_CASE", "CMR_MARK", "NPP_ROTATION"):
            return True
        # coordinated prepositions: each conjunct's preposition still rotates
        return r.rule.preaction == "CONJ_ROTATION" and can_rotate(s, tok.id, CASE)

    while True:
        tid = _next_pending(s, rel, want)
        if tid is None:
            return
        r = rel[tid]
        r.done = True
        action = r.rule.preaction
        if action == "NPP_ROTATION":
            cand = _npp(s, tid)
            if cand is None:
                warn("NPP on token %d cannot rotate; falling back" % tid)
                fb = _fallback(rules, r.rule.source_label)
                if fb is not None and fb is not r.rule:
                    rel[tid] = _Rel(fb, tid)
                    rel[tid].done = True
                    if can_rotate(s, tid, CASE):
                        cand = _cmr(s, tid)
                        rel[cand], rel[tid] = rel[tid], CASE
                continue
            rel[cand], rel[tid] = r, CASE
            continue
        role = CMR_ROLE.get(action, CASE)
        if not can_rotate(s, tid, role):
            continue
        cand = _cmr(s, tid)
        if r.rule.target == role:
            rel[cand], rel[tid] = "obl", role
        else:
            # the promoted word carries the relation, conjunct ones included
            rel[cand], rel[tid] = r, role


def _finish(s: Sentence, warn) -> None:
    for tok in s.tokens:
        if tok.head == 0:
            if tok.deprel != "root":
                warn("root token %d labelled %s; relabelled root" % (tok.id, tok.deprel))
                tok.deprel = "root"
        elif tok.deprel == "root":
            warn("non-root token %d labelled root; using dep" % tok.id)
            tok.deprel = "dep"
        if tok.deprel in ("cop", "aux", "aux:pass") and tok.upos == "VERB":
            tok.upos = "AUX"
    _lift_from_leaves(s, warn)


def _lift_from_leaves(s: Sentence, warn) -> None:
    """Dependents of leaf-only relations move up to the leaf's head."""
    changed = True
    while changed:
        changed = False
        for tok in s.tokens:
            if tok.head == 0:
                continue
            head = s[tok.head]
            if head.deprel in labels.LEAF_LABELS and head.head:
                tok.head = head.head
                warn("token %d moved off %s token %d" % (tok.id, head.deprel, head.id))
                changed = True
