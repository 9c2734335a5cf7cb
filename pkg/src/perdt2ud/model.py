"""Core treebank data types and structural editing primitives.

Every transformation in the package goes through the few primitives here
(``reattach``, ``flip``, ``reindex``) so that tree well-formedness is checked
in one place.  Public operations never mutate their input; they return a
fresh :class:`Sentence`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

UPOS_TAGS = frozenset([
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM", "PART",
    "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
])

KEEP = "KEEP"


class TreeError(ValueError):
    """Base class for structural errors; ``ids`` names the offending tokens."""

    def __init__(self, message: str, ids: Sequence[int] = ()):
        super().__init__(message)
        self.ids = tuple(ids)


class MultipleRoots(TreeError):
    pass


class NoRoot(TreeError):
    pass


class CycleDetected(TreeError):
    pass


class WouldCreateCycle(TreeError):
    pass


class DanglingHead(TreeError):
    pass


class DepIsRoot(TreeError):
    pass


class UnknownToken(TreeError):
    pass


class Scheme(enum.Enum):
    PERDT = "PERDT"
    UD = "UD"


@dataclass
class Token:
    id: int
    form: str
    lemma: str = "_"
    upos: Optional[str] = None
    xpos: str = "_"
    feats: Dict[str, str] = field(default_factory=dict)
    head: int = 0
    deprel: str = "_"
    misc: Dict[str, str] = field(default_factory=dict)

    def copy(self) -> "Token":
        return Token(self.id, self.form, self.lemma, self.upos, self.xpos,
                     dict(self.feats), self.head, self.deprel, dict(self.misc))

    @property
    def fpos(self) -> Optional[str]:
        return self.feats.get("fpos")

    def add_note(self, key: str, value: str) -> None:
        """Append ``value`` to a comma-separated misc entry."""
        old = self.misc.get(key)
        if old is None:
            self.misc[key] = value
        elif value not in old.split(","):
            self.misc[key] = old + "," + value


@dataclass
class Sentence:
    tokens: List[Token]
    sent_id: str = ""
    text: str = ""
    comments: List[str] = field(default_factory=list)

    def copy(self) -> "Sentence":
        return Sentence([t.copy() for t in self.tokens], self.sent_id,
                        self.text, list(self.comments))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, token_id: int) -> Token:
        """1-based token lookup."""
        if not 1 <= token_id <= len(self.tokens):
            raise UnknownToken("no token %d" % token_id, [token_id])
        return self.tokens[token_id - 1]

    def heads(self) -> List[int]:
        return [t.head for t in self.tokens]

    def children(self, token_id: int) -> List[int]:
        return [t.id for t in self.tokens if t.head == token_id]

    def check_ids(self) -> None:
        for i, tok in enumerate(self.tokens, 1):
            if tok.id != i:
                raise TreeError("token ids are not 1..n (found %d at %d)" % (tok.id, i), [tok.id])
        n = len(self.tokens)
        for tok in self.tokens:
            if tok.head == tok.id or not 0 <= tok.head <= n:
                raise DanglingHead("token %d has invalid head %d" % (tok.id, tok.head), [tok.id])


@dataclass
class Treebank:
    sentences: List[Sentence] = field(default_factory=list)
    source_scheme: Scheme = Scheme.PERDT

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


@dataclass
class DependencyTree:
    root_id: int
    children: Dict[int, List[int]]
    parent: Dict[int, int]

    def descendants(self, token_id: int) -> List[int]:
        out, stack = [], list(self.children.get(token_id, ()))
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(self.children.get(node, ()))
        return out

    def depth(self, token_id: int) -> int:
        d = 0
        while token_id != self.root_id:
            token_id = self.parent[token_id]
            d += 1
        return d


def build_tree(sentence: Sentence) -> DependencyTree:
    sentence.check_ids()
    roots = [t.id for t in sentence.tokens if t.head == 0]
    if not roots:
        raise NoRoot("sentence %r has no root" % sentence.sent_id)
    if len(roots) > 1:
        raise MultipleRoots("sentence %r has roots %s" % (sentence.sent_id, roots), roots)
    children: Dict[int, List[int]] = {t.id: [] for t in sentence.tokens}
    parent = {}
    for tok in sentence.tokens:
        if tok.head:
            children[tok.head].append(tok.id)
            parent[tok.id] = tok.head
    seen = set()
    stack = [roots[0]]
    while stack:
        node = stack.pop()
        seen.add(node)
        stack.extend(children[node])
    if len(seen) != len(sentence.tokens):
        cyclic = sorted(set(children) - seen)
        raise CycleDetected("sentence %r has a cycle through %s" % (sentence.sent_id, cyclic), cyclic)
    return DependencyTree(roots[0], children, parent)


def is_descendant(sentence: Sentence, node: int, ancestor: int) -> bool:
    """True if ``ancestor`` dominates ``node`` (or they are equal)."""
    seen = set()
    while node and node not in seen:
        if node == ancestor:
            return True
        seen.add(node)
        node = sentence[node].head
    return False


# In-place variants.  Callers own the sentence they pass in.

def _reattach(sentence: Sentence, dep_id: int, new_head: int, new_label: Optional[str] = None) -> None:
    if dep_id == new_head:
        raise WouldCreateCycle("token %d cannot head itself" % dep_id, [dep_id])
    if new_head and is_descendant(sentence, new_head, dep_id):
        raise WouldCreateCycle("token %d dominates %d" % (dep_id, new_head), [dep_id, new_head])
    tok = sentence[dep_id]
    tok.head = new_head
    if new_label is not None:
        tok.deprel = new_label


def _flip(sentence: Sentence, dep_id: int, new_dep_label: Optional[str],
          promoted_label: Optional[str] = KEEP, carry: bool = True) -> int:
    dep = sentence[dep_id]
    if dep.head == 0:
        raise DepIsRoot("token %d is the root; nothing to flip with" % dep_id, [dep_id])
    old_head = sentence[dep.head]
    dep.head = old_head.head
    if promoted_label == KEEP:
        dep.deprel = old_head.deprel
    elif promoted_label is not None:
        dep.deprel = promoted_label
    old_head.head = dep_id
    if new_dep_label is not None:
        old_head.deprel = new_dep_label
    if carry:
        for tok in sentence.tokens:
            if tok.head == old_head.id and tok.id != dep_id:
                tok.head = dep_id
    return old_head.id


def reattach(sentence: Sentence, dep_id: int, new_head: int, new_label: Optional[str] = None) -> Sentence:
    """Move ``dep_id`` under ``new_head`` (0 for the root), optionally relabelled."""
    out = sentence.copy()
    if new_head:
        out[new_head]
    _reattach(out, dep_id, new_head, new_label)
    return out


def flip(sentence: Sentence, dep_id: int, new_dep_label: str, promoted_label: str = KEEP,
         carry: bool = True) -> Sentence:
    """Swap a dependent with its head.

    The dependent takes over the head's attachment (and its label when
    ``promoted_label`` is ``KEEP``); the former head ends up under the
    promoted token, and so do its other dependents when ``carry`` is set.
    """
    out = sentence.copy()
    _flip(out, dep_id, new_dep_label, promoted_label, carry)
    return out


@dataclass
class Insert:
    """Insert ``token`` after old position ``after`` (0 = sentence start).

    ``token.head`` is read in the old numbering.
    """
    after: int
    token: Token


@dataclass
class Delete:
    position: int


Edit = Union[Insert, Delete]


def reindex(sentence: Sentence, edits: Iterable[Edit]) -> Sentence:
    edits = list(edits)
    n = len(sentence)
    deleted = set()
    inserts: Dict[int, List[Token]] = {}
    for e in edits:
        if isinstance(e, Delete):
            if not 1 <= e.position <= n:
                raise UnknownToken("cannot delete token %d" % e.position, [e.position])
            deleted.add(e.position)
        else:
            if not 0 <= e.after <= n:
                raise UnknownToken("cannot insert after %d" % e.after, [e.after])
            inserts.setdefault(e.after, []).append(e.token)
    order: List[Token] = []
    new_id: Dict[int, int] = {}
    for tok in inserts.get(0, []):
        order.append(tok.copy())
    for old in sentence.tokens:
        if old.id not in deleted:
            order.append(old.copy())
            new_id[old.id] = len(order)
        for tok in inserts.get(old.id, []):
            order.append(tok.copy())
    for i, tok in enumerate(order, 1):
        if tok.head:
            if tok.head in deleted or tok.head not in new_id:
                raise DanglingHead("token %r points at deleted head %d" % (tok.form, tok.head), [tok.head])
            tok.head = new_id[tok.head]
        tok.id = i
    return Sentence(order, sentence.sent_id, sentence.text, list(sentence.comments))


def splice(sentence: Sentence, replacements: Dict[int, List[Token]], anchors: Dict[int, Token],
           links: Sequence[Tuple[Token, Token]] = ()) -> Sentence:
    """Replace tokens by token lists and renumber.

    ``replacements[old_id]`` lists the tokens standing in for ``old_id`` and
    ``anchors[old_id]`` is the one that inherits arcs pointing at it.  Heads
    of new tokens are old ids, unless ``links`` pairs the token with the new
    token it should attach to.
    """
    order: List[Token] = []
    for old in sentence.tokens:
        order.extend(replacements.get(old.id, [old]))
    pos = {id(tok): i for i, tok in enumerate(order, 1)}
    linked = {id(dep): pos[id(head)] for dep, head in links}
    old_to_new = {old.id: pos[id(anchors.get(old.id, old))] for old in sentence.tokens}
    out = []
    for i, tok in enumerate(order, 1):
        new = tok.copy()
        new.id = i
        if id(tok) in linked:
            new.head = linked[id(tok)]
        elif tok.head:
            new.head = old_to_new[tok.head]
        out.append(new)
    return Sentence(out, sentence.sent_id, sentence.text, list(sentence.comments))


def detokenize(tokens: Sequence[Token]) -> str:
    parts = []
    for i, tok in enumerate(tokens):
        parts.append(tok.form)
        if tok.misc.get("ZWNJAfter") == "Yes":
            parts.append("‌")
        elif i + 1 < len(tokens) and tok.misc.get("SpaceAfter") != "No":
            parts.append(" ")
    return "".join(parts)
