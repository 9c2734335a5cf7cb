import shutil

import pytest

from perdt2ud.lexicon import DATA_DIR, REQUIRED_FILES, LexiconConfig, LexiconError, verb_keys

from conftest import tok


def test_required_files_present():
    for name in REQUIRED_FILES:
        assert (DATA_DIR / name).is_file()


def test_missing_file_is_reported(tmp_path):
    for name in REQUIRED_FILES[1:]:
        shutil.copy(DATA_DIR / name, tmp_path / name)
    with pytest.raises(LexiconError, match=REQUIRED_FILES[0]):
        LexiconConfig.load(tmp_path)


def test_verb_keys_match_both_notations(lexicon):
    assert lexicon.lemma_in("کرد#کن", frozenset(["کردن"]))
    assert lexicon.lemma_in("کردن", frozenset(["کرد#کن"]))
    assert not lexicon.lemma_in("رفت#رو", frozenset(["کردن"]))
    assert "کردن" in verb_keys("کرد#کن")


def test_copula_and_modal(lexicon):
    assert lexicon.is_copula(tok(1, "است", "است#هست", "V"))
    assert lexicon.is_copula(tok(1, "بود", "بود#باش", "V"))
    assert not lexicon.is_copula(tok(1, "شد", "شد#شو", "V"))
    assert lexicon.is_modal(tok(1, "باید", "بایست#باید", "V", fpos="MOD"))
    assert lexicon.is_modal(tok(1, "توانست", "توانست#توان", "V"))
    assert not lexicon.is_modal(tok(1, "خواهد", "خواست#خواه", "AUX"))


def test_shodan_forms(lexicon):
    for form in ("شد", "می‌شود", "نمی‌شوند", "شده", "بشود"):
        assert lexicon.is_shodan_form(form), form
    assert not lexicon.is_shodan_form("شدید‌تر")
    assert lexicon.shodan_lemma_like("کرد#کن") == "شد#شو"
    assert lexicon.shodan_lemma_like("کردن") == "شدن"


def test_ordinals(lexicon):
    assert lexicon.is_ordinal("پنجم")
    assert lexicon.is_ordinal("پنجمین")
    assert lexicon.is_ordinal("اول")
    assert not lexicon.is_ordinal("پنج")
    assert not lexicon.is_ordinal("نیم")


def test_scale_base(lexicon):
    assert lexicon.scale_base("هزار") == ("هزار", False)
    assert lexicon.scale_base("میلیون‌ها") == ("میلیون", True)
    assert lexicon.scale_base("هزاران") == ("هزار", True)
    assert lexicon.scale_base("کتاب") is None


def test_passive_main_switch():
    shodan = LexiconConfig.load(passive_main="shodan")
    rule, _ = shodan.verb_constructions.match(["خوانده", "شد"])
    assert rule.main_index == 1 and rule.passive_index == 0
    default = LexiconConfig.load()
    rule, _ = default.verb_constructions.match(["خوانده", "شد"])
    assert rule.main_index == 0 and rule.passive_index == 1
