"""Line-oriented text format for directive sequences.

    # Fibonacci
    alphabet 0: 0 1
    morphism 0:
      0 -> 0 1
      1 -> 0
    tail repeat 1

`alphabet k` declares A_k; undeclared alphabets default to A_0, and an undeclared A_0
to the letters on the left of `morphism 0`. `morphism k` maps A_{k+1} into A_k.
`tail repeat p` repeats the last p morphisms forever, `tail finite` stops the
sequence, and `hint primitive` marks the sequence primitive.
"""

import logging
import re
from dataclasses import dataclass, field

from .errors import DirSeqSyntaxError, InvalidArgumentError
from .morphisms import Morphism
from .subshift import DirectiveSequence
from .words import Alphabet, Word

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
ALPHABET_LINE = re.compile(r"alphabet\s+(\d+)\s*:(.*)$")
MORPHISM_LINE = re.compile(r"morphism\s+(\d+)\s*:\s*$")
RULE_LINE = re.compile(r"(\S+)\s*->(.*)$")
TAIL_LINE = re.compile(r"tail\s+(?:repeat\s+(\d+)|(finite))\s*$")
HINT_LINE = re.compile(r"hint\s+primitive\s*$")


@dataclass
class _Block:
    line: int
    rules: list[tuple[int, int, str, str]] = field(default_factory=list)


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def _tokens(text: str, alphabet: Alphabet) -> list[str]:
    parts = text.split()
    if len(parts) == 1 and alphabet.glyphs is not None and parts[0] not in alphabet.glyphs:
        return list(parts[0])
    return parts


def parse_dirseq(text: str) -> DirectiveSequence:
    """Parses the text format.

    Raises:
        DirSeqSyntaxError: with the 1-based line and column of the first problem.
    """
    alphabets: dict[int, tuple[Alphabet, int]] = {}
    blocks: dict[int, _Block] = {}
    tail: int | None = 1
    primitive = False
    current: _Block | None = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        column = len(line) - len(line.lstrip()) + 1
        content = line.strip()
        if raw[:1].isspace() and current is not None:
            match = RULE_LINE.match(content)
            if not match:
                msg = f"Expected '<letter> -> <symbols>', got {content!r}"
                raise DirSeqSyntaxError(msg, number, column)
            current.rules.append((number, column, match.group(1), match.group(2)))
            continue
        current = None
        if match := ALPHABET_LINE.match(content):
            level = int(match.group(1))
            glyphs = match.group(2).split()
            if level in alphabets:
                msg = f"Alphabet {level} is declared twice"
                raise DirSeqSyntaxError(msg, number, column)
            try:
                alphabets[level] = (Alphabet.from_glyphs(glyphs), number)
            except InvalidArgumentError as e:
                raise DirSeqSyntaxError(str(e), number, column + match.start(2)) from e
        elif match := MORPHISM_LINE.match(content):
            level = int(match.group(1))
            if level in blocks:
                msg = f"Morphism {level} is declared twice"
                raise DirSeqSyntaxError(msg, number, column)
            current = blocks[level] = _Block(number)
        elif match := TAIL_LINE.match(content):
            tail = None if match.group(2) else int(match.group(1))
        elif HINT_LINE.match(content):
            primitive = True
        else:
            msg = f"Unrecognized statement {content.split()[0]!r}"
            raise DirSeqSyntaxError(msg, number, column)

    if not blocks:
        msg = "No morphism declared"
        raise DirSeqSyntaxError(msg, max(len(text.splitlines()), 1))
    count = len(blocks)
    missing = [k for k in range(count) if k not in blocks]
    if missing:
        msg = f"Morphism levels must be 0..{count - 1}; level {missing[0]} is missing"
        raise DirSeqSyntaxError(msg, blocks[max(blocks)].line)
    empty = next((k for k in range(count) if not blocks[k].rules), None)
    if empty is not None:
        msg = f"Morphism {empty} has no rules"
        raise DirSeqSyntaxError(msg, blocks[empty].line)

    def alphabet(k: int) -> Alphabet:
        if k in alphabets:
            return alphabets[k][0]
        if 0 in alphabets:
            return alphabets[0][0]
        return Alphabet.from_glyphs(dict.fromkeys(rule[2] for rule in blocks[0].rules))

    levels = []
    for k in range(count):
        block = blocks[k]
        source, target = alphabet(k + 1), alphabet(k)
        mapping: dict[int, Word] = {}
        for number, column, letter, rhs in block.rules:
            try:
                symbol = source.symbol_for(letter)
            except InvalidArgumentError as e:
                raise DirSeqSyntaxError(f"Morphism {k}: {e}", number, column) from e
            if symbol in mapping:
                msg = f"Morphism {k}: letter {letter!r} has two images"
                raise DirSeqSyntaxError(msg, number, column)
            image_column = column + len(letter) + 1
            try:
                mapping[symbol] = Word.of((target.symbol_for(t) for t in _tokens(rhs, target)), target)
            except InvalidArgumentError as e:
                raise DirSeqSyntaxError(f"Morphism {k}: {e}", number, image_column) from e
        try:
            levels.append(Morphism.from_mapping(source, target, mapping))
        except InvalidArgumentError as e:
            raise DirSeqSyntaxError(f"Morphism {k}: {e}", block.line) from e

    try:
        dirseq = DirectiveSequence(tuple(levels), tail_period=tail, primitive_hint=primitive)
    except InvalidArgumentError as e:
        raise DirSeqSyntaxError(str(e), blocks[count - 1].line) from e
    logger.debug("Parsed directive sequence with %d levels, tail %s", count, tail)
    return dirseq


def serialize_dirseq(dirseq: DirectiveSequence) -> str:
    """Canonical text: every alphabet declared, one rule per letter, glyphs separated by spaces."""
    lines = []
    for k in range(len(dirseq.levels) + 1):
        source = dirseq.levels[k - 1].source if k else dirseq.levels[0].target
        lines.append(f"alphabet {k}: " + " ".join(source.glyph(s) for s in source.symbols))
    for k, sigma in enumerate(dirseq.levels):
        lines.append(f"morphism {k}:")
        for letter, image in zip(sigma.source.symbols, sigma.images, strict=True):
            rendered = " ".join(sigma.target.glyph(s) for s in image.symbols)
            lines.append(f"  {sigma.source.glyph(letter)} -> {rendered}")
    lines.append("tail finite" if dirseq.tail_period is None else f"tail repeat {dirseq.tail_period}")
    if dirseq.primitive_hint:
        lines.append("hint primitive")
    return "\n".join(lines) + "\n"
