from hypothesis import given, settings, strategies as st

from perdt2ud.model import detokenize
from perdt2ud.tokenize import detach_clitics, retokenize, split_multiword_verbs

from conftest import sent, tok
from perdt2ud.model import Sentence


def verb_sentence(form, lemma="خواند#خوان", fpos="PASS"):
    return Sentence([tok(1, "کتاب", xpos="N", head=2, deprel="SBJ"),
                     tok(2, form, lemma, "V", 0, "ROOT", fpos=fpos)], sent_id="v")


def test_passive_split_participle_is_main(lexicon):
    out = split_multiword_verbs(verb_sentence("خوانده شد"), lexicon.verb_constructions)
    assert [t.form for t in out.tokens] == ["کتاب", "خوانده", "شد"]
    main, aux = out[2], out[3]
    assert (main.head, main.deprel, main.lemma, main.fpos) == (0, "ROOT", "خواند#خوان", "PASS")
    assert (aux.head, aux.deprel, aux.upos, aux.lemma) == (2, "aux:pass", "AUX", "شد#شو")
    assert out[1].head == 2


def test_passive_split_shodan_main_option():
    from perdt2ud.lexicon import LexiconConfig
    lex = LexiconConfig.load(passive_main="shodan")
    out = split_multiword_verbs(verb_sentence("خوانده شد"), lex.verb_constructions)
    assert out[3].deprel == "ROOT" and out[2].deprel == "aux:pass" and out[2].head == 3


def test_future_and_perfect(lexicon):
    out = split_multiword_verbs(verb_sentence("خواهد رفت", "رفت#رو", "ACT"), lexicon.verb_constructions)
    assert [(t.form, t.deprel) for t in out.tokens[1:]] == [("خواهد", "aux"), ("رفت", "ROOT")]
    out = split_multiword_verbs(verb_sentence("رفته است", "رفت#رو", "ACT"), lexicon.verb_constructions)
    assert [(t.form, t.deprel, t.lemma) for t in out.tokens[1:]] == [
        ("رفته", "ROOT", "رفت#رو"), ("است", "aux", "است#هست")]


def test_three_part_passive_perfect(lexicon):
    out = split_multiword_verbs(verb_sentence("خوانده شده است"), lexicon.verb_constructions)
    assert [t.deprel for t in out.tokens[1:]] == ["ROOT", "aux:pass", "aux"]
    assert out[3].head == 2 and out[4].head == 2


def test_unmatched_verb_is_flagged(lexicon):
    out = split_multiword_verbs(verb_sentence("الف ب ج د"), lexicon.verb_constructions)
    assert len(out) == 2 and out[2].misc["Warn"] == "NoVerbRule"


def test_space_after_moves_to_last_part(lexicon):
    s = verb_sentence("خوانده شد")
    s[2].misc["SpaceAfter"] = "No"
    out = split_multiword_verbs(s, lexicon.verb_constructions)
    assert "SpaceAfter" not in out[2].misc and out[3].misc["SpaceAfter"] == "No"


def test_clitic_detached_onto_host(lexicon):
    s = Sentence([tok(1, "کتابش", "کتاب", "N", 2, "OBJ"), tok(2, "خرید", "خرید#خر", "V", 0, "ROOT")])
    out = detach_clitics(s, lexicon.clitics)
    assert [(t.form, t.lemma, t.xpos, t.head, t.deprel) for t in out.tokens] == [
        ("کتاب", "کتاب", "N", 3, "OBJ"), ("ش", "او", "PR", 1, "MOZ"), ("خرید", "خرید#خر", "V", 0, "ROOT")]
    assert out[1].misc["SpaceAfter"] == "No"
    assert detokenize(out.tokens) == "کتابش خرید"


def test_clitic_after_zwnj(lexicon):
    s = Sentence([tok(1, "خانه‌اش", "خانه", "N", 0, "ROOT")])
    out = detach_clitics(s, lexicon.clitics)
    assert [t.form for t in out.tokens] == ["خانه", "اش"]
    assert out[1].misc["ZWNJAfter"] == "Yes"
    assert detokenize(out.tokens) == "خانه‌اش"


def test_clitic_on_preposition_attaches_to_previous_nominal(lexicon):
    s = Sentence([tok(1, "کتاب", "کتاب", "N", 3, "OBJ"), tok(2, "برایش", "برای", "PREP", 3, "VPP"),
                  tok(3, "خرید", "خرید#خر", "V", 0, "ROOT")])
    out = detach_clitics(s, lexicon.clitics)
    assert out[3].form == "ش" and out[3].head == 1


def test_no_split_when_lemma_does_not_explain_form(lexicon):
    s = Sentence([tok(1, "مردم", "مردم", "N", 0, "ROOT")])
    assert len(detach_clitics(s, lexicon.clitics)) == 1


def test_retokenize_leaves_plain_sentence(lexicon):
    s = sent(("او", "PR", 2, "SBJ"), ("رفت", "V", 0, "ROOT"))
    assert retokenize(s, lexicon).tokens == s.tokens


@settings(max_examples=200)
@given(st.lists(st.sampled_from(["کتابش", "خانه‌ام", "خوانده شد", "رفته است", "او", "خواهد رفت", "کتاب"]),
                min_size=1, max_size=6))
def test_retokenize_preserves_text_and_tree(forms):
    from perdt2ud.lexicon import default_lexicon
    lex = default_lexicon()
    lemmas = {"کتابش": "کتاب", "خانه‌ام": "خانه"}
    tokens = []
    for i, f in enumerate(forms, 1):
        xpos = "V" if " " in f else "N"
        tokens.append(tok(i, f, lemmas.get(f, f), xpos, 0 if i == 1 else 1, "ROOT" if i == 1 else "X"))
    s = Sentence(tokens)
    out = retokenize(s, lex)
    assert detokenize(out.tokens).replace(" ", "") == detokenize(s.tokens).replace(" ", "")
    assert sum(1 for t in out.tokens if t.head == 0) == 1
    assert all(0 <= t.head <= len(out) and t.head != t.id for t in out.tokens)
