"""Convert the Persian PerDT dependency treebank to Universal Dependencies."""
from .conll import read_conllu, read_perdt, write_conllu
from .depmap import convert_sentence, detect_voice, load_rules
from .fixes import apply_systematic_fixes
from .lexicon import LexiconConfig, default_lexicon
from .model import Sentence, Token, Treebank
from .pipeline import PipelineConfig, convert_sentences
from .pos import apply_ner, map_pos, map_sentence_pos
from .prepass import prepass
from .stats import label_frequencies, vocab_stats
from .tokenize import retokenize
from .validate import validate, validate_treebank

__version__ = "0.1.0"

__all__ = [
    "read_conllu", "read_perdt", "write_conllu", "convert_sentence", "detect_voice", "load_rules",
    "apply_systematic_fixes", "LexiconConfig", "default_lexicon", "Sentence", "Token", "Treebank",
    "PipelineConfig", "convert_sentences", "apply_ner", "map_pos", "map_sentence_pos", "prepass",
    "label_frequencies", "vocab_stats", "retokenize", "validate", "validate_treebank",
]
