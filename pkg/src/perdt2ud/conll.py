"""Readers and writers for legacy PerDT CoNLL and CoNLL-U."""
from __future__ import annotations

import io
import re
from dataclasses import dataclass
from typing import IO, Dict, Iterator, List, Optional, Tuple, Union

from .model import Scheme, Sentence, Token, Treebank, detokenize
from . import labels

ARABIC_TO_PERSIAN = str.maketrans({"ي": "ی", "ك": "ک", "ى": "ی"})

COMMENT_RE = re.compile(r"^#\s*([^=]+?)\s*=\s?(.*)$")


class UnmappedToken(ValueError):
    pass


@dataclass
class ParseDiagnostic:
    line_no: int
    severity: str
    message: str
    source: str = ""

    def __str__(self):
        where = "%s:%d" % (self.source, self.line_no) if self.source else "line %d" % self.line_no
        return "%s: %s: %s" % (where, self.severity, self.message)


def _text_stream(stream) -> IO[str]:
    if isinstance(stream, (bytes, bytearray)):
        return io.StringIO(stream.decode("utf-8"))
    if isinstance(stream, str):
        return io.StringIO(stream)
    if isinstance(stream, io.TextIOBase):
        return stream
    return io.TextIOWrapper(stream, encoding="utf-8")


def _blocks(stream) -> Iterator[List[Tuple[int, str]]]:
    block: List[Tuple[int, str]] = []
    for line_no, line in enumerate(_text_stream(stream), 1):
        line = line.rstrip("\r\n")
        if line.strip():
            block.append((line_no, line))
        elif block:
            yield block
            block = []
    if block:
        yield block


def parse_kv(field: str) -> Dict[str, str]:
    if field in ("_", ""):
        return {}
    out = {}
    for item in field.split("|"):
        key, sep, value = item.partition("=")
        out[key] = value if sep else ""
    return out


def format_kv(d: Dict[str, str], sort: bool) -> str:
    if not d:
        return "_"
    keys = sorted(d) if sort else list(d)
    return "|".join(k + "=" + d[k] if d[k] != "" else k for k in keys)


def normalize_chars(text: str) -> str:
    return text.translate(ARABIC_TO_PERSIAN)


def read_perdt(stream, first_id: int = 1) -> Tuple[Treebank, List[ParseDiagnostic]]:
    """Read 10-column PerDT CoNLL (ID FORM LEMMA CPOS FPOS FEATS HEAD DEPREL PHEAD PDEPREL).

    Sentences are numbered from ``first_id`` in file order, skipped ones
    included.  PHEAD/PDEPREL are dropped.  Arabic Yeh/Kaf are rewritten to their
    Persian code points; the original form is kept under ``OrigForm``.
    """
    diags: List[ParseDiagnostic] = []
    sentences = []
    for index, block in enumerate(_blocks(stream), first_id):
        sent_id = str(index)
        tokens = []
        bad = False
        for line_no, line in block:
            cols = line.split("\t")
            if len(cols) != 10:
                diags.append(ParseDiagnostic(line_no, "ERROR", "sentence %s: expected 10 columns, got %d" % (sent_id, len(cols))))
                bad = True
                break
            try:
                tid, head = int(cols[0]), int(cols[6])
            except ValueError:
                diags.append(ParseDiagnostic(line_no, "ERROR", "sentence %s: non-numeric id or head" % sent_id))
                bad = True
                break
            form, lemma = cols[1], cols[2]
            misc = {}
            norm_form, norm_lemma = normalize_chars(form), normalize_chars(lemma)
            if norm_form != form:
                misc["OrigForm"] = form
                diags.append(ParseDiagnostic(line_no, "WARN", "sentence %s: normalized form %r" % (sent_id, form)))
            feats = parse_kv(cols[5])
            if cols[4] not in ("_", ""):
                feats["fpos"] = cols[4]
            tokens.append(Token(tid, norm_form, norm_lemma, None, cols[3], feats, head, cols[7], misc))
        if not bad:
            problem = _structure_problem(tokens)
            if problem:
                diags.append(ParseDiagnostic(block[0][0], "ERROR", "sentence %s: %s" % (sent_id, problem)))
                bad = True
        if bad:
            diags.append(ParseDiagnostic(block[0][0], "ERROR", "sentence %s skipped" % sent_id))
            continue
        sent = Sentence(tokens, sent_id=sent_id)
        sent.text = detokenize(tokens)
        sentences.append(sent)
    return Treebank(sentences, Scheme.PERDT), diags


def _structure_problem(tokens: List[Token]) -> Optional[str]:
    n = len(tokens)
    for i, tok in enumerate(tokens, 1):
        if tok.id != i:
            return "token ids not consecutive at %d" % tok.id
        if not 0 <= tok.head <= n or tok.head == tok.id:
            return "token %d has invalid head %d" % (tok.id, tok.head)
    return None


def read_conllu(stream) -> Tuple[Treebank, List[ParseDiagnostic]]:
    diags: List[ParseDiagnostic] = []
    sentences = []
    for block in _blocks(stream):
        sent = Sentence([])
        ranges = {}
        bad = False
        seen = set()
        for line_no, line in block:
            if line.startswith("#"):
                m = COMMENT_RE.match(line)
                if m and m.group(1) == "sent_id":
                    sent.sent_id = m.group(2)
                elif m and m.group(1) == "text":
                    sent.text = m.group(2)
                else:
                    sent.comments.append(line)
                continue
            cols = line.split("\t")
            if len(cols) != 10:
                diags.append(ParseDiagnostic(line_no, "ERROR", "expected 10 columns, got %d" % len(cols)))
                bad = True
                break
            if "-" in cols[0]:
                start, _, end = cols[0].partition("-")
                ranges[int(start)] = (int(end), cols[1], parse_kv(cols[9]))
                continue
            if "." in cols[0]:
                diags.append(ParseDiagnostic(line_no, "WARN", "empty node %s dropped" % cols[0]))
                continue
            try:
                tid, head = int(cols[0]), int(cols[6])
            except ValueError:
                diags.append(ParseDiagnostic(line_no, "ERROR", "non-numeric id or head"))
                bad = True
                break
            if tid in seen:
                diags.append(ParseDiagnostic(line_no, "ERROR", "duplicated token id %d" % tid))
                bad = True
                break
            seen.add(tid)
            xpos, feats = cols[4], parse_kv(cols[5])
            if "," in xpos:
                xpos, _, fpos = xpos.partition(",")
                feats["fpos"] = fpos
            elif xpos not in ("_", ""):
                feats.setdefault("fpos", xpos)
            upos = None if cols[3] in ("_", "") else cols[3]
            sent.tokens.append(Token(tid, cols[1], cols[2], upos, xpos, feats, head, cols[7], parse_kv(cols[9])))
        if not bad:
            problem = _structure_problem(sent.tokens)
            if problem:
                diags.append(ParseDiagnostic(block[0][0], "ERROR", "sentence %s: %s" % (sent.sent_id, problem)))
                bad = True
        if bad:
            diags.append(ParseDiagnostic(block[0][0], "ERROR", "sentence %s skipped" % (sent.sent_id or "?")))
            continue
        for start, (end, form, rmisc) in ranges.items():
            if start - 1 < len(sent.tokens):
                first = sent.tokens[start - 1]
                first.misc["MWT"] = "%d:%s" % (end - start + 1, form)
                if rmisc.get("SpaceAfter") == "No":
                    first.misc["MWTSpaceAfter"] = "No"
        sentences.append(sent)
    return Treebank(sentences, Scheme.UD), diags


def _xpos_column(tok: Token) -> str:
    fpos = tok.feats.get("fpos")
    if fpos and fpos != tok.xpos:
        return "%s,%s" % (tok.xpos, fpos)
    return tok.xpos or "_"


def check_mapped(sentence: Sentence) -> None:
    for tok in sentence.tokens:
        if tok.upos is None:
            raise UnmappedToken("sentence %s token %d (%s) has no UPOS" % (sentence.sent_id, tok.id, tok.form))
        if tok.deprel in labels.PERDT_LABELS:
            raise UnmappedToken("sentence %s token %d carries PerDT label %s" % (sentence.sent_id, tok.id, tok.deprel))


def format_sentence(sentence: Sentence) -> str:
    lines = []
    if sentence.sent_id:
        lines.append("# sent_id = " + sentence.sent_id)
    lines.append("# text = " + (sentence.text or detokenize(sentence.tokens)))
    lines.extend(sentence.comments)
    for tok in sentence.tokens:
        misc = dict(tok.misc)
        mwt = misc.pop("MWT", None)
        mwt_space = misc.pop("MWTSpaceAfter", None)
        if mwt:
            length, _, form = mwt.partition(":")
            rmisc = "SpaceAfter=No" if mwt_space == "No" else "_"
            lines.append("%d-%d\t%s\t_\t_\t_\t_\t_\t_\t_\t%s" % (tok.id, tok.id + int(length) - 1, form, rmisc))
        feats = {k: v for k, v in tok.feats.items() if k != "fpos"}
        lines.append("\t".join([
            str(tok.id), tok.form, tok.lemma or "_", tok.upos or "_", _xpos_column(tok),
            format_kv(feats, sort=True), str(tok.head), tok.deprel or "_", "_",
            format_kv(misc, sort=False),
        ]))
    return "\n".join(lines) + "\n\n"


def write_conllu(treebank: Union[Treebank, List[Sentence]], stream=None) -> Optional[str]:
    """Serialize; returns the text when ``stream`` is None."""
    sentences = treebank.sentences if isinstance(treebank, Treebank) else treebank
    for sent in sentences:
        check_mapped(sent)
    text = "".join(format_sentence(s) for s in sentences)
    if stream is None:
        return text
    if isinstance(stream, io.TextIOBase):
        stream.write(text)
    else:
        stream.write(text.encode("utf-8"))
    return None


def format_perdt(sentence: Sentence) -> str:
    """Inverse of :func:`read_perdt` for a single sentence (used by test fixtures)."""
    lines = []
    for tok in sentence.tokens:
        feats = {k: v for k, v in tok.feats.items() if k != "fpos"}
        lines.append("\t".join([
            str(tok.id), tok.form, tok.lemma, tok.xpos, tok.feats.get("fpos", tok.xpos),
            format_kv(feats, sort=True), str(tok.head), tok.deprel, "_", "_",
        ]))
    return "\n".join(lines) + "\n\n"
