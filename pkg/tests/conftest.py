from pathlib import Path

import pytest
from hypothesis import strategies as st

from perdt2ud.model import Sentence, Token

DATA = Path(__file__).parent / "data"
RULE_FIXTURES = DATA / "rule_fixtures"


def tok(tid, form, lemma=None, xpos="N", head=0, deprel="_", upos=None, fpos=None, **misc):
    feats = {"fpos": fpos or xpos} if xpos != "_" else {}
    return Token(tid, form, lemma or form, upos, xpos, feats, head, deprel, dict(misc))


def sent(*rows, sent_id="s1"):
    """Rows are (form, xpos, head, deprel[, upos[, lemma]])."""
    tokens = []
    for i, row in enumerate(rows, 1):
        form, xpos, head, deprel = row[:4]
        upos = row[4] if len(row) > 4 else None
        lemma = row[5] if len(row) > 5 else None
        tokens.append(tok(i, form, lemma, xpos, head, deprel, upos))
    return Sentence(tokens, sent_id=sent_id)


@st.composite
def trees(draw, min_size=1, max_size=9, labels=("X",), upos=("NOUN",)):
    """A random valid dependency tree with a single root."""
    n = draw(st.integers(min_size, max_size))
    parents = [0] + [draw(st.integers(0, i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(range(1, n + 1)))
    heads = {}
    for node, parent in enumerate(parents):
        heads[perm[node]] = perm[parent] if node else 0
    tokens = []
    for tid in range(1, n + 1):
        head = heads[tid]
        tokens.append(Token(tid, "w%d" % tid, "w%d" % tid, draw(st.sampled_from(upos)), "N", {}, head,
                            "ROOT" if head == 0 else draw(st.sampled_from(labels)), {}))
    return Sentence(tokens, sent_id="h")


@st.composite
def verb_chains(draw):
    """A tree of verbs and nouns where some verb-verb arcs are VCONJ."""
    n = draw(st.integers(2, 9))
    parents = [0] + [draw(st.integers(1, i)) for i in range(1, n)]
    xpos = [draw(st.sampled_from(["V", "V", "N"])) for _ in range(n)]
    tokens = []
    for i in range(1, n + 1):
        head = parents[i - 1]
        label = "ROOT" if head == 0 else (
            "VCONJ" if xpos[i - 1] == "V" and xpos[head - 1] == "V" and draw(st.booleans()) else "X")
        tokens.append(Token(i, "w%d" % i, "w", None, xpos[i - 1], {}, head, label, {}))
    return Sentence(tokens)


def is_tree(s: Sentence) -> bool:
    if sum(1 for t in s.tokens if t.head == 0) != 1:
        return False
    for t in s.tokens:
        seen, node = set(), t.id
        while node:
            if node in seen or not 0 <= s[node].head <= len(s):
                return False
            seen.add(node)
            node = s[node].head
    return True


@pytest.fixture
def lexicon():
    from perdt2ud.lexicon import default_lexicon
    return default_lexicon()
