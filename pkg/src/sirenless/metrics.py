"""Lexicon-based sentence sentiment, article aggregates, and Flesch score.

Matching is on the lowercased surface with a light suffix-strip
(-s, -ed, -ing) fallback. A negator within the two preceding word
tokens multiplies a hit's polarity by -0.5; an intensifier immediately
before a hit multiplies it by the intensifier's factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IoError, MetricError, ParseError
from .ingest import Document, Token
from .resources import data_path, load_wordlist
from .stemming import strip_candidates

EXTREME_THRESHOLD = 0.5  # |polarity| above this marks a sentence extreme

FLESCH_BASE = 206.835
FLESCH_SENTENCE_WEIGHT = 1.015
FLESCH_SYLLABLE_WEIGHT = 84.6


@dataclass(frozen=True)
class SentimentLexicon:
    entries: dict[str, tuple[float, float]]  # lemma -> (polarity, subjectivity)
    negators: frozenset[str] = frozenset()
    intensifiers: dict[str, float] = field(default_factory=dict)
    duplicate_warnings: int = 0

    def __post_init__(self):
        overlap = self.negators & set(self.intensifiers)
        if overlap:
            raise ValueError(f"negators and intensifiers overlap: {sorted(overlap)}")

    def lookup(self, lower: str) -> tuple[float, float] | None:
        """Exact match, then suffix-stripped candidates, most specific first."""
        hit = self.entries.get(lower)
        if hit is not None:
            return hit
        for cand in strip_candidates(lower):
            hit = self.entries.get(cand)
            if hit is not None:
                return hit
        return None


@dataclass(frozen=True)
class SentenceSentiment:
    polarity: float
    subjectivity: float
    extreme: bool


@dataclass(frozen=True)
class ArticleMetrics:
    article_polarity: float
    article_subjectivity: float
    flesch_score: float


def parse_lexicon(
    content: str,
    negators: frozenset[str] = frozenset(),
    intensifiers: dict[str, float] | None = None,
) -> SentimentLexicon:
    """Parse lexicon TSV content: lemma<TAB>polarity<TAB>subjectivity."""
    entries: dict[str, tuple[float, float]] = {}
    duplicates = 0
    for lineno, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 3:
            raise ParseError(f"expected 3 tab-separated columns, got {len(cols)}", lineno)
        lemma = cols[0].strip().lower()
        if not lemma:
            raise ParseError("empty lemma", lineno)
        try:
            polarity = float(cols[1])
            subjectivity = float(cols[2])
        except ValueError:
            raise ParseError(f"non-numeric score in {cols[1]!r}/{cols[2]!r}", lineno) from None
        if not -1.0 <= polarity <= 1.0:
            raise ParseError(f"polarity {polarity} outside [-1, 1]", lineno)
        if not 0.0 <= subjectivity <= 1.0:
            raise ParseError(f"subjectivity {subjectivity} outside [0, 1]", lineno)
        if lemma in entries:
            duplicates += 1
        entries[lemma] = (polarity, subjectivity)
    return SentimentLexicon(
        entries=entries,
        negators=negators,
        intensifiers=dict(intensifiers or {}),
        duplicate_warnings=duplicates,
    )


def load_lexicon(
    path: str,
    negators: frozenset[str] = frozenset(),
    intensifiers: dict[str, float] | None = None,
) -> SentimentLexicon:
    try:
        with open(path, encoding="utf-8") as fh:
            content = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read lexicon {path}: {exc}") from exc
    return parse_lexicon(content, negators, intensifiers)


def _parse_intensifiers(content: str) -> dict[str, float]:
    out: dict[str, float] = {}
    for lineno, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = stripped.split("\t")
        if len(cols) != 2:
            raise ParseError(f"expected 2 tab-separated columns, got {len(cols)}", lineno)
        factor = float(cols[1])
        if not 0.0 < factor <= 2.0:
            raise ParseError(f"multiplier {factor} outside (0, 2]", lineno)
        out[cols[0].strip().lower()] = factor
    return out


_DEFAULT_LEXICON: SentimentLexicon | None = None


def default_lexicon() -> SentimentLexicon:
    """The bundled lexicon plus bundled negators and intensifiers."""
    global _DEFAULT_LEXICON
    if _DEFAULT_LEXICON is None:
        negators = frozenset(w.lower() for w in load_wordlist("negators.txt"))
        with open(data_path("intensifiers.tsv"), encoding="utf-8") as fh:
            intensifiers = _parse_intensifiers(fh.read())
        _DEFAULT_LEXICON = load_lexicon(
            data_path("lexicon.tsv"), negators=negators, intensifiers=intensifiers
        )
    return _DEFAULT_LEXICON


def sentence_sentiment(
    tokens: list[Token] | tuple[Token, ...], lexicon: SentimentLexicon
) -> SentenceSentiment:
    """Score one tokenized sentence; (0, 0) when nothing matches."""
    words = [t for t in tokens if t.kind == "word"]
    polarities: list[float] = []
    subjectivities: list[float] = []
    for i, token in enumerate(words):
        hit = lexicon.lookup(token.lower)
        if hit is None:
            continue
        polarity, subjectivity = hit
        window = [w.lower for w in words[max(0, i - 2):i]]
        if any(w in lexicon.negators for w in window):
            polarity *= -0.5
        if i > 0 and words[i - 1].lower in lexicon.intensifiers:
            polarity *= lexicon.intensifiers[words[i - 1].lower]
        polarities.append(polarity)
        subjectivities.append(subjectivity)
    if not polarities:
        return SentenceSentiment(0.0, 0.0, False)
    polarity = _clamp(sum(polarities) / len(polarities), -1.0, 1.0)
    subjectivity = _clamp(sum(subjectivities) / len(subjectivities), 0.0, 1.0)
    return SentenceSentiment(polarity, subjectivity, abs(polarity) > EXTREME_THRESHOLD)


def flesch_raw(word_count: int, sentence_count: int, syllable_count: int) -> float:
    """Unclamped reading-ease value; raises MetricError when undefined."""
    if sentence_count < 1 or word_count < 1:
        raise MetricError(
            f"reading ease undefined for {word_count} words, {sentence_count} sentences"
        )
    return (
        FLESCH_BASE
        - FLESCH_SENTENCE_WEIGHT * (word_count / sentence_count)
        - FLESCH_SYLLABLE_WEIGHT * (syllable_count / word_count)
    )


def flesch_reading_ease(word_count: int, sentence_count: int, syllable_count: int) -> float:
    return _clamp(flesch_raw(word_count, sentence_count, syllable_count), 0.0, 100.0)


def article_metrics(
    document: Document, sentiments: list[SentenceSentiment]
) -> ArticleMetrics:
    """Aggregate per-sentence scores; Flesch falls back to 0 for documents
    with no lexical words (all-punctuation text)."""
    n = len(sentiments)
    polarity = sum(s.polarity for s in sentiments) / n if n else 0.0
    subjectivity = sum(s.subjectivity for s in sentiments) / n if n else 0.0
    if document.word_count >= 1 and len(document.sentences) >= 1:
        flesch = flesch_reading_ease(
            document.word_count, len(document.sentences), document.syllable_count
        )
    else:
        flesch = 0.0
    return ArticleMetrics(polarity, subjectivity, flesch)


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))
