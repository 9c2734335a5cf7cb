import pytest

from perdt2ud.validate import (
    CHECKS, ValidationSummary, default_registry, load_registry, validate, validate_treebank,
)

from conftest import sent


def good():
    # او به خانه رفت
    return sent(("او", "PR", 4, "nsubj", "PRON"), ("به", "P", 3, "case", "ADP"), ("خانه", "N", 4, "obl", "NOUN"),
                ("رفت", "V", 0, "root", "VERB", "رفت#رو"))


def codes(s):
    return [i.rule for i in validate(s)]


def test_clean_sentence_has_no_issues():
    assert codes(good()) == []


def test_second_root():
    s = good()
    s[1].head, s[1].deprel = 0, "root"
    assert codes(s) == ["root-count"]


def test_no_root():
    s = good()
    s[4].head, s[4].deprel = 1, "conj"
    s[1].head = 4
    assert codes(s) == ["root-count", "cycle"]


def test_cycle():
    s = sent(("a", "N", 3, "nsubj", "NOUN"), ("b", "N", 1, "nmod", "NOUN"), ("c", "V", 0, "root", "VERB"))
    s[1].head = 2
    assert codes(s) == ["cycle"]


def test_dangling_head():
    s = good()
    s[1].head = 9
    assert codes(s) == ["dangling-head"]


def test_dependent_under_case_token():
    s = good()
    s[1].head = 2
    assert codes(s) == ["leaf"]


def test_root_label_on_non_root():
    s = good()
    s[1].deprel = "root"
    assert codes(s) == ["root-label"]


def test_label_outside_inventory():
    s = good()
    s[1].deprel = "SBJ"
    assert codes(s) == ["inventory"]


def test_shodan_as_copula():
    s = sent(("هوا", "N", 2, "nsubj", "NOUN"), ("سرد", "ADJ", 0, "root", "ADJ"),
             ("شد", "V", 2, "cop", "AUX", "شد#شو"))
    issues = validate(s)
    assert [i.rule for i in issues] == ["L1-shodan-cop"]
    assert issues[0].severity == "ERROR" and issues[0].token_id == 3


def test_nmod_under_verb_warns():
    s = good()
    s[3].deprel = "nmod"
    issues = validate(s)
    assert [(i.rule, i.severity) for i in issues] == [("L2-nmod-head", "WARN")]


def test_two_word_preverb_as_object_warns():
    s = sent(("پیدا", "ADJ", 2, "obj", "ADJ"), ("کرد", "V", 0, "root", "VERB", "کرد#کن"))
    assert codes(s) == ["L3-lv-obj"]


def test_clausal_complement_of_copular_adjective_warns():
    s = sent(("لازم", "ADJ", 0, "root", "ADJ"), ("است", "V", 1, "cop", "AUX", "است#است"),
             ("که", "SUBR", 4, "mark", "SCONJ"), ("برود", "V", 1, "ccomp", "VERB", "رفت#رو"))
    assert codes(s) == ["L4-csubj"]


def test_registry_covers_every_check():
    registry = default_registry()
    assert {e.check for e in registry} == set(CHECKS)
    assert {e.severity for e in registry if e.code.startswith("L")} == {"ERROR", "WARN"}


def test_registry_severity_is_data(tmp_path):
    p = tmp_path / "rules.tsv"
    p.write_text("leaf\tWARN\tleaf\tdemoted\n", encoding="utf-8")
    s = good()
    s[1].head = 2
    issues = validate(s, load_registry(p))
    assert [(i.rule, i.severity) for i in issues] == [("leaf", "WARN")]


def test_registry_rejects_unknown_check(tmp_path):
    p = tmp_path / "rules.tsv"
    p.write_text("x\tERROR\tnope\tmsg\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_registry(p)


def test_empty_issue_list_exits_zero():
    summary = validate_treebank([good(), good()])
    assert summary.exit_status() == 0
    assert "status: 0" in summary.format_summary()


def test_one_error_exits_nonzero_and_is_listed_once():
    bad = good()
    bad[1].head, bad[1].deprel = 0, "root"
    summary = validate_treebank([good(), bad])
    assert summary.exit_status() == 1
    assert "rule.root-count: 1" in summary.format_summary().splitlines()
    assert summary.format_report().count("\troot-count\tERROR\t") == 1


def test_warnings_alone_exit_zero():
    def warned():
        s = good()
        s[3].deprel = "nmod"
        return s
    summary = validate_treebank([warned() for _ in range(5)])
    assert summary.exit_status() == 0 and summary.warnings == 5
    assert summary.exit_status(fail_on_warn=True) == 1


def test_validation_is_order_independent():
    bad = good()
    bad[1].head = 9
    a = validate_treebank([good(), bad]).counts
    b = validate_treebank([bad, good()]).counts
    assert a == b


def test_summary_counts():
    summary = ValidationSummary([], 0)
    assert summary.errors == summary.warnings == 0
