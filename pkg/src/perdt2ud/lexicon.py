"""Word lists and construction tables, loaded from a lexicon directory."""
from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

DATA_DIR = Path(__file__).parent / "data"

REQUIRED_FILES = ("verb_constructions.ini", "clitics.ini", "scale_numerals.txt", "lexicon.ini")

ZWNJ = "‌"


class LexiconError(ValueError):
    pass


@dataclass
class VerbConstructionRule:
    name: str
    pattern: Tuple[str, ...]
    main_index: int
    passive_index: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.main_index < len(self.pattern):
            raise LexiconError("rule %s: main index out of range" % self.name)
        if len(self.pattern) < 2:
            raise LexiconError("rule %s needs at least one non-main part" % self.name)
        if self.passive_index is not None and not 0 <= self.passive_index < len(self.pattern):
            raise LexiconError("rule %s: passive index out of range" % self.name)

    def part_labels(self) -> List[Optional[str]]:
        """Label per part; None for the main part."""
        out = []
        for i in range(len(self.pattern)):
            if i == self.main_index:
                out.append(None)
            elif i == self.passive_index:
                out.append("aux:pass")
            else:
                out.append("aux")
        return out


@dataclass
class VerbConstructions:
    classes: Dict[str, "re.Pattern[str]"]
    rules: List[VerbConstructionRule]
    aux_lemmas: Dict[str, str] = field(default_factory=dict)
    form_lemmas: Dict[str, str] = field(default_factory=dict)

    def match(self, parts: List[str]) -> Optional[Tuple[VerbConstructionRule, List[str]]]:
        """First rule whose pattern fully matches ``parts``; also returns the part classes."""
        for rule in self.rules:
            if len(rule.pattern) != len(parts):
                continue
            if all(self.classes[c].fullmatch(p) for c, p in zip(rule.pattern, parts)):
                return rule, list(rule.pattern)
        return None

    def aux_lemma(self, form: str, part_class: str) -> str:
        return self.form_lemmas.get(form, self.aux_lemmas.get(part_class, form))


def _parser() -> configparser.ConfigParser:
    cp = configparser.ConfigParser(delimiters=(":",), interpolation=None, comment_prefixes=("#",))
    cp.optionxform = str
    return cp


def load_verb_constructions(path, passive_main: Optional[str] = None) -> VerbConstructions:
    cp = _parser()
    cp.read(path, encoding="utf-8")
    classes = {k: re.compile(v) for k, v in cp["classes"].items()}
    mode = passive_main or cp.get("options", "passive_main", fallback="participle")
    if mode not in ("participle", "shodan"):
        raise LexiconError("passive_main must be participle or shodan, not %r" % mode)
    rules = []
    for section in cp.sections():
        if not section.startswith("rule:"):
            continue
        sec = cp[section]
        pattern = tuple(sec["pattern"].split())
        for c in pattern:
            if c not in classes:
                raise LexiconError("rule %s uses unknown class %s" % (section, c))
        main = int(sec["main"]) - 1
        passive = int(sec["passive"]) - 1 if "passive" in sec else None
        if passive is not None and mode == "shodan":
            main, passive = passive, main
        rules.append(VerbConstructionRule(section[5:], pattern, main, passive))
    aux = dict(cp["aux_lemmas"]) if cp.has_section("aux_lemmas") else {}
    forms = dict(cp["form_lemmas"]) if cp.has_section("form_lemmas") else {}
    return VerbConstructions(classes, rules, aux, forms)


def load_clitics(path) -> Dict[str, str]:
    """Clitic surface form -> full pronoun lemma."""
    cp = _parser()
    cp.read(path, encoding="utf-8")
    out = {}
    for section in cp.sections():
        lemma = cp[section]["lemma"]
        for form in cp[section]["forms"].split():
            out[form] = lemma
    return out


def load_word_list(path) -> FrozenSet[str]:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                words.add(line)
    return frozenset(words)


def verb_keys(lemma: str) -> FrozenSet[str]:
    """Spellings under which a verb lemma may be listed.

    PerDT writes verb lemmas as ``past#present`` stem pairs; lists may use
    either that or the infinitive (past stem + ن).
    """
    keys = {lemma}
    if "#" in lemma:
        past, _, present = lemma.partition("#")
        if past:
            keys.add(past + "ن")
        if present:
            keys.add(present + "ن")
    return frozenset(keys)


def _words(sec, key) -> FrozenSet[str]:
    return frozenset(sec.get(key, "").split())


@dataclass
class LexiconConfig:
    verb_constructions: VerbConstructions
    clitics: Dict[str, str]
    scale_numerals: FrozenSet[str]
    part_adp: FrozenSet[str] = frozenset()
    part_intj: FrozenSet[str] = frozenset()
    ordinal_suffixes: Tuple[str, ...] = ()
    ordinal_words: FrozenSet[str] = frozenset()
    cardinal_exceptions: FrozenSet[str] = frozenset()
    propn_overrides: FrozenSet[str] = frozenset()
    modal_lemmas: FrozenSet[str] = frozenset()
    copula_lemmas: FrozenSet[str] = frozenset()
    shodan_lemma: str = "شدن"
    kardan_lemmas: FrozenSet[str] = frozenset()
    passive_fpos: str = "PASS"
    active_fpos: str = "ACT"
    modal_fpos: str = "MOD"
    two_word_preverbs: FrozenSet[str] = frozenset()
    scale_plural_suffixes: Tuple[str, ...] = ()
    number_conjunctions: FrozenSet[str] = frozenset()
    goeswith_pairs: FrozenSet[Tuple[str, str]] = frozenset()

    @classmethod
    def load(cls, directory=None, passive_main: Optional[str] = None) -> "LexiconConfig":
        directory = Path(directory) if directory else DATA_DIR
        missing = [f for f in REQUIRED_FILES if not (directory / f).is_file()]
        if missing:
            raise LexiconError("lexicon directory %s lacks %s" % (directory, ", ".join(missing)))
        cp = _parser()
        cp.read(directory / "lexicon.ini", encoding="utf-8")
        pos, verbs, lv, nums = cp["pos"], cp["verbs"], cp["lv"], cp["numbers"]
        pairs = set()
        if cp.has_section("prepass"):
            for item in cp["prepass"].get("goeswith_pairs", "").split():
                a, _, b = item.partition("+")
                pairs.add((a, b))
        return cls(
            verb_constructions=load_verb_constructions(directory / "verb_constructions.ini", passive_main),
            clitics=load_clitics(directory / "clitics.ini"),
            scale_numerals=load_word_list(directory / "scale_numerals.txt"),
            part_adp=_words(pos, "part_adp"),
            part_intj=_words(pos, "part_intj"),
            # longest suffix first
            ordinal_suffixes=tuple(sorted(pos.get("ordinal_suffixes", "").split(), key=len, reverse=True)),
            ordinal_words=_words(pos, "ordinal_words"),
            cardinal_exceptions=_words(pos, "cardinal_exceptions"),
            propn_overrides=_words(pos, "propn_overrides"),
            modal_lemmas=_words(verbs, "modal_lemmas"),
            copula_lemmas=_words(verbs, "copula_lemmas"),
            shodan_lemma=verbs.get("shodan_lemma", "شدن"),
            kardan_lemmas=_words(verbs, "kardan_lemmas"),
            passive_fpos=verbs.get("passive_fpos", "PASS"),
            active_fpos=verbs.get("active_fpos", "ACT"),
            modal_fpos=verbs.get("modal_fpos", "MOD"),
            two_word_preverbs=_words(lv, "two_word_preverbs"),
            scale_plural_suffixes=tuple(sorted(nums.get("scale_plural_suffixes", "").split(), key=len, reverse=True)),
            number_conjunctions=_words(nums, "conjunctions"),
            goeswith_pairs=frozenset(pairs),
        )

    # -- lexical predicates shared by several stages --

    def lemma_in(self, lemma: str, words: FrozenSet[str]) -> bool:
        return not verb_keys(lemma).isdisjoint({k for w in words for k in verb_keys(w)})

    def is_copula(self, token) -> bool:
        return token.xpos == "V" and self.lemma_in(token.lemma, self.copula_lemmas)

    def is_modal(self, token) -> bool:
        if token.xpos != "V":
            return False
        return token.fpos == self.modal_fpos or self.lemma_in(token.lemma, self.modal_lemmas)

    def is_kardan(self, lemma: str) -> bool:
        return self.lemma_in(lemma, self.kardan_lemmas)

    def is_shodan_lemma(self, lemma: str) -> bool:
        return self.lemma_in(lemma, {self.shodan_lemma})

    def shodan_lemma_like(self, lemma: str) -> str:
        """The shodan lemma written in the same notation as ``lemma``."""
        if "#" in lemma:
            return "شد#شو"
        return self.shodan_lemma

    def is_shodan_form(self, form: str) -> bool:
        shodan = self.verb_constructions.classes.get("SHODAN")
        return bool(shodan and shodan.fullmatch(form))

    def is_ordinal(self, form: str) -> bool:
        bare = form.replace(ZWNJ, "")
        if form in self.ordinal_words or bare in self.ordinal_words:
            return True
        if form in self.cardinal_exceptions or bare in self.cardinal_exceptions:
            return False
        return any(bare.endswith(s) and len(bare) > len(s) for s in self.ordinal_suffixes)

    def scale_base(self, form: str) -> Optional[Tuple[str, bool]]:
        """(base numeral, is_plural) when ``form`` is a scale word, else None."""
        if form in self.scale_numerals:
            return form, False
        for suffix in self.scale_plural_suffixes:
            if form.endswith(suffix):
                base = form[: -len(suffix)].rstrip(ZWNJ)
                if base in self.scale_numerals:
                    return base, True
        return None


_default: Optional[LexiconConfig] = None


def default_lexicon() -> LexiconConfig:
    global _default
    if _default is None:
        _default = LexiconConfig.load()
    return _default
