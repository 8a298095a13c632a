"""Turn raw article text into an immutable structured Document.

The Document records paragraphs, sentences and tokens with character
offsets into one normalized text string; that string is the single
source of truth for every downstream artifact (JSON, UI highlighting).

Segmentation and tokenization follow documented rules rather than an
external NLP library so that results are auditable and bit-for-bit
reproducible:

- Paragraphs are blocks separated by one or more blank lines.
- A sentence ends at ``.``, ``!`` or ``?`` (plus an optional closing
  double quote) when followed by whitespace and an uppercase letter or
  an opening quote, unless the preceding word is a listed abbreviation,
  a single capital letter (an initial), or a double quote is still open.
- Words are maximal runs of letters and digits with internal
  apostrophes or hyphens; every other non-space character is a
  one-character token. ``"`` is the quote-mark kind; everything else
  non-word is punctuation.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field

from .errors import IngestError
from .resources import load_wordlist

VOWELS = frozenset("aeiouy")

# Curly quotes normalize to their ASCII equivalents so offsets, quote
# balancing and lexicon matching all operate on one representation.
_QUOTE_MAP = {
    "‘": "'",
    "’": "'",
    "‚": "'",
    "‛": "'",
    "“": '"',
    "”": '"',
    "„": '"',
    "‟": '"',
}

_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:['\-][A-Za-z0-9]+)*")
_SENT_PUNCT = frozenset(".!?")


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    kind: str  # word | number | punctuation | quote-mark
    start: int
    end: int
    syllables: int


@dataclass(frozen=True)
class SentenceSpan:
    index: int
    paragraph: int
    start: int
    end: int
    tokens: tuple[Token, ...]

    def text_in(self, text: str) -> str:
        return text[self.start:self.end]

    def word_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.kind == "word"]

    def lexical_tokens(self) -> list[Token]:
        """Word and number tokens; the units counted as words."""
        return [t for t in self.tokens if t.kind in ("word", "number")]


@dataclass(frozen=True)
class ParagraphSpan:
    index: int
    start: int
    end: int


@dataclass(frozen=True)
class Document:
    id: str
    title: str | None
    text: str
    paragraphs: tuple[ParagraphSpan, ...]
    sentences: tuple[SentenceSpan, ...]
    word_count: int
    syllable_count: int

    def sentence_text(self, index: int) -> str:
        return self.sentences[index].text_in(self.text)


def normalize_text(raw: str | bytes) -> str:
    """Map curly quotes to ASCII and CRLF to LF; idempotent."""
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"input is not valid UTF-8: {exc}") from exc
    text = raw.replace("\r\n", "\n")
    return text.translate({ord(k): v for k, v in _QUOTE_MAP.items()})


def split_paragraphs(text: str) -> list[ParagraphSpan]:
    """Paragraphs are maximal blocks not separated by blank lines.

    Spans are trimmed to the first/last non-whitespace character;
    whitespace-only blocks are dropped.
    """
    spans: list[ParagraphSpan] = []
    for block in re.finditer(r"(?:[^\n]*\S[^\n]*\n?)+", text):
        chunk = block.group(0)
        lstrip = len(chunk) - len(chunk.lstrip())
        rstrip = len(chunk) - len(chunk.rstrip())
        start = block.start() + lstrip
        end = block.end() - rstrip
        if start < end:
            spans.append(ParagraphSpan(index=len(spans), start=start, end=end))
    return spans


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def _abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = frozenset(
            w.lower() for w in load_wordlist("abbreviations.txt")
        )
    return _DEFAULT_ABBREVIATIONS


def _is_abbreviation(text: str, dot_pos: int, abbreviations: frozenset[str]) -> bool:
    """True when the word ending at text[dot_pos] == '.' must not break."""
    i = dot_pos
    j = i
    while j > 0 and not text[j - 1].isspace() and text[j - 1] not in "\"'(":
        j -= 1
    word = text[j:i + 1]  # includes the trailing dot
    if not word:
        return False
    core = word.rstrip(".")
    # A lone capital letter is an initial: "John F. Kennedy".
    if len(core) == 1 and core.isalpha() and core.isupper():
        return True
    return word.lower() in abbreviations


def segment_sentences(
    text: str,
    para_start: int,
    para_end: int,
    paragraph_index: int,
    first_index: int,
    abbreviations: frozenset[str] | None = None,
) -> list[SentenceSpan]:
    """Split one paragraph of `text` into sentence spans.

    `first_index` is the document-wide index of the first sentence
    produced, so indices stay contiguous across paragraphs.
    """
    if abbreviations is None:
        abbreviations = _abbreviations()
    breaks: list[int] = []  # offsets one past each sentence end
    quote_open = False
    i = para_start
    while i < para_end:
        ch = text[i]
        if ch == '"':
            quote_open = not quote_open
            i += 1
            continue
        if ch in _SENT_PUNCT:
            j = i + 1
            closing_quote = False
            if j < para_end and text[j] == '"' and quote_open:
                # terminator inside a quotation that closes right here
                closing_quote = True
                j += 1
            k = j
            while k < para_end and text[k] in " \t\n":
                k += 1
            followed_ok = k > j and k < para_end and (
                text[k].isupper() or text[k] == '"'
            )
            if (
                followed_ok
                and not (quote_open and not closing_quote)
                and not (ch == "." and _is_abbreviation(text, i, abbreviations))
            ):
                breaks.append(j)
                if closing_quote:
                    quote_open = False
                i = k
                continue
            if closing_quote:
                quote_open = False
                i = j
                continue
        i += 1

    spans: list[SentenceSpan] = []
    prev = para_start
    for cut in breaks + [para_end]:
        chunk = text[prev:cut]
        lstrip = len(chunk) - len(chunk.lstrip())
        rstrip = len(chunk) - len(chunk.rstrip())
        start = prev + lstrip
        end = cut - rstrip
        if start < end:
            spans.append(
                SentenceSpan(
                    index=first_index + len(spans),
                    paragraph=paragraph_index,
                    start=start,
                    end=end,
                    tokens=tuple(tokenize(text, start, end)),
                )
            )
        prev = cut
    return spans


def tokenize(text: str, start: int, end: int) -> list[Token]:
    """Tokenize text[start:end]; every non-whitespace char lands in a token."""
    tokens: list[Token] = []
    i = start
    while i < end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _WORD_RE.match(text, i)
        if m and m.end() <= end:
            surface = m.group(0)
            lower = surface.lower()
            kind = "word" if any(c.isalpha() for c in surface) else "number"
            syl = count_syllables(lower) if kind == "word" else 0
            tokens.append(Token(surface, lower, kind, m.start(), m.end(), syl))
            i = m.end()
            continue
        kind = "quote-mark" if ch == '"' else "punctuation"
        tokens.append(Token(ch, ch.lower(), kind, i, i + 1, 0))
        i += 1
    return tokens


def count_syllables(word: str) -> int:
    """Heuristic syllable count: maximal vowel groups (aeiouy), minus a
    terminal silent 'e' (unless that empties the count), plus one for
    terminal 'le' after a consonant; never below 1."""
    w = word.lower()
    groups = 0
    prev_vowel = False
    for ch in w:
        is_vowel = ch in VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    count = groups
    if w.endswith("e") and count > 1:
        count -= 1
    if len(w) >= 3 and w.endswith("le") and w[-3] not in VOWELS and w[-3].isalpha():
        count += 1
    return max(1, count)


def ingest(
    raw: str | bytes,
    title: str | None = None,
    abbreviations: frozenset[str] | None = None,
) -> Document:
    """Build a Document from raw article text."""
    text = normalize_text(raw)
    paragraphs = split_paragraphs(text)
    sentences: list[SentenceSpan] = []
    for para in paragraphs:
        sentences.extend(
            segment_sentences(
                text,
                para.start,
                para.end,
                para.index,
                first_index=len(sentences),
                abbreviations=abbreviations,
            )
        )
    word_count = sum(len(s.lexical_tokens()) for s in sentences)
    syllable_count = sum(t.syllables for s in sentences for t in s.tokens)
    return Document(
        id=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        title=title,
        text=text,
        paragraphs=tuple(paragraphs),
        sentences=tuple(sentences),
        word_count=word_count,
        syllable_count=syllable_count,
    )
