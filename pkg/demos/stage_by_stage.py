"""Follow one PerDT sentence through every conversion stage.

The sentence has a coordination of two verbs in PerDT's last-verb-headed
style and a prepositional argument:

    او کتاب خرید و به خانه رفت    "he bought a book and went home"

Run:  python3 demos/stage_by_stage.py
"""
import io

from perdt2ud import conll
from perdt2ud.depmap import convert_sentence
from perdt2ud.fixes import apply_systematic_fixes
from perdt2ud.lexicon import default_lexicon
from perdt2ud.pos import apply_ner, map_sentence_pos
from perdt2ud.prepass import prepass
from perdt2ud.tokenize import retokenize
from perdt2ud.validate import validate

PERDT = """\
1	او	او	PR	PR	_	3	SBJ	_	_
2	کتاب	کتاب	N	N	_	3	OBJ	_	_
3	خرید	خرید#خر	V	ACT	_	7	VCONJ	_	_
4	و	و	CONJ	CONJ	_	7	PREDEP	_	_
5	به	به	PREP	PREP	_	7	VPP	_	_
6	خانه	خانه	N	N	_	5	POSDEP	_	_
7	رفت	رفت#رو	V	ACT	_	0	ROOT	_	_
"""


def show(title, sentence):
    print("== " + title)
    for t in sentence.tokens:
        print("  %d %-6s %-7s %-6s head=%d %s" % (t.id, t.form, t.xpos, t.upos or "-", t.head, t.deprel))
    print()


def main():
    lexicon = default_lexicon()
    tb, _ = conll.read_perdt(io.StringIO(PERDT))
    s = tb.sentences[0]
    show("PerDT input", s)
    s = apply_systematic_fixes(s, lexicon)
    show("after systematic fixes (verb chain now first-verb-headed)", s)
    s = retokenize(s, lexicon)
    s = map_sentence_pos(apply_ner(s, None, lexicon), lexicon)
    show("after tokenization and POS mapping", s)
    s = prepass(s, lexicon)
    s = convert_sentence(s, lexicon=lexicon)
    show("after dependency mapping (content words head function words)", s)
    print("validation issues:", validate(s, lexicon=lexicon) or "none")
    print()
    print(conll.write_conllu([s]), end="")


if __name__ == "__main__":
    main()
