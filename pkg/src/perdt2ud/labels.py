"""Tag and label inventories of the two annotation schemes."""

PERDT_POS = (
    "V", "N", "SUBR", "CONJ", "ADV", "ADJ", "PR", "PUNC", "ADR", "IDEN",
    "PART", "PREM", "PRENUM", "PREP", "POSTP", "POSTNUM", "PSUS",
)
# PREP and POSTP are listed together in one table row, which is why the
# inventory is usually quoted as 16 tags; there are 17 strings.

PERDT_LABELS = frozenset("""
ACL ADV ADVC AJCONJ AJPP AJUCL APOSTMOD APP APREMOD AVCONJ COMPPP ENC LVP MESU
MOS MOZ NADV NCL NCONJ NE NEZ NPOSTMOD NPP NPREMOD NPRT NVE OBJ OBJ2 PARCL PART
PCONJ POSDEP PRD PREDEP PROG PUNC ROOT SBJ TAM VCL VCONJ VPP VPRT
""".split())

CONJ_LABELS = frozenset(["AJCONJ", "AVCONJ", "NCONJ", "PCONJ", "VCONJ"])

# Converted-corpus label inventory; "name:flat" in the frequency table is
# the same relation as flat:name.
UD_LABELS = frozenset("""
case conj acl obl punct cop det advmod aux:pass nmod appos aux amod
compound:lvc nsubj:pass nsubj flat:name dep cc root advcl obj xcomp parataxis
ccomp obl:arg flat:num nummod mark fixed compound:lv csubj vocative compound
iobj dislocated
""".split())

ALLOWED_LABELS = UD_LABELS | {"goeswith"}

LEAF_LABELS = frozenset(["case", "mark", "cc", "aux", "aux:pass", "cop", "det", "fixed", "goeswith", "punct"])

NOMINAL_UPOS = frozenset(["NOUN", "PROPN", "PRON"])

# Reported counts on the full converted corpus (label -> count).
PUBLISHED_LABEL_COUNTS = {
    "case": 71118, "conj": 23739, "acl": 10034, "obl": 30737, "punct": 44336,
    "cop": 6366, "det": 10273, "advmod": 9158, "aux:pass": 822, "nmod": 59442,
    "appos": 1059, "aux": 12886, "amod": 22576, "compound:lvc": 32339,
    "nsubj:pass": 822, "nsubj": 27181, "flat:name": 7899, "dep": 2035,
    "cc": 21300, "root": 29107, "advcl": 4228, "obj": 19999, "xcomp": 4920,
    "parataxis": 82, "ccomp": 6945, "obl:arg": 21510, "flat:num": 607,
    "nummod": 5459, "mark": 11982, "fixed": 144, "compound:lv": 439,
    "csubj": 682, "vocative": 174, "compound": 42, "iobj": 6, "dislocated": 1,
}

PUBLISHED_CORPUS = {
    "sentences": 29107, "tokens": 509_000, "word_types": 36_700,
    "lemma_types": 21_600, "verb_lemma_types": 5413,
}
