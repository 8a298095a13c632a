"""Article summary levels, radar-chart aggregates, and misleading-news
pattern detectors.

The summary scheme grades an article on four axes and bins each grade
into three levels; all grades clamp into their bin domain first, so
every input lands in exactly one level. Readability levels follow the
reading-ease convention: a high score means an easy read.

The pattern detectors flag distributions that warrant a human look;
they never render a fake/real verdict. Their thresholds live in one
config block and can be overridden from a JSON file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace

from .characters import Character
from .discourse import DiscourseMode
from .errors import ParseError
from .metrics import SentenceSentiment

WRITING_STYLE_LEVELS = ("Rigorous", "Balanced", "Literative")
SENTIMENT_LEVELS = ("Calm", "Regular", "Emotional")
READABILITY_LEVELS = ("Easy", "Medium", "Hard")
RELIABILITY_LEVELS = ("Low", "Medium", "High")

SENTIMENT_BIN_NAMES = ("strong_negative", "negative", "neutral", "positive", "strong_positive")


@dataclass(frozen=True)
class DetectorThresholds:
    """Tunable detector constants; every value is an artifact choice,
    not a published calibration."""

    version: str = "1"
    emotional_polarity: float = 0.3  # |polarity| marking a sentence emotional
    dominance_min_sentences: int = 5
    dominance_share: float = 0.75
    oscillation_share: float = 0.30
    subjectivity_warning: float = 0.2
    subjectivity_alert: float = 0.4
    easy_read_score: float = 30.0
    argument_share: float = 0.25
    character_min_mentions: int = 3
    character_bias_mean: float = 0.25
    quote_min_sentences: int = 5
    emotional_quote_share: float = 0.40


def load_thresholds(path: str) -> DetectorThresholds:
    """Read threshold overrides from a JSON object file."""
    with open(path, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid thresholds JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("thresholds file must hold a JSON object")
    known = {f.name for f in fields(DetectorThresholds)}
    unknown = set(raw) - known
    if unknown:
        raise ParseError(f"unknown threshold keys: {sorted(unknown)}")
    if "version" in raw:
        raw["version"] = str(raw["version"])
    return replace(DetectorThresholds(), **raw)


@dataclass(frozen=True)
class LevelGrade:
    level: str
    grade: float


@dataclass(frozen=True)
class ArticleSummary:
    writing_style: LevelGrade
    sentiment_level: str
    readability_level: str
    reliability: LevelGrade


@dataclass(frozen=True)
class RadarData:
    sentiment_axes: tuple[int, int, int, int, int]  # SENTIMENT_BIN_NAMES order
    discourse_axes: tuple[float, float, float, float, float]  # DISCOURSE_AXIS_ORDER


DISCOURSE_AXIS_ORDER = (
    DiscourseMode.NARRATION,
    DiscourseMode.ARGUMENT,
    DiscourseMode.QUOTE,
    DiscourseMode.DESCRIPTION,
    DiscourseMode.BACKGROUND,
)


@dataclass(frozen=True)
class Finding:
    kind: str
    severity: str  # info | warning | alert
    evidence: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class PatternReport:
    findings: tuple[Finding, ...]


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))


def writing_style(histogram: dict[DiscourseMode, int]) -> LevelGrade:
    """Grade = (arguments + quotes - descriptions - backgrounds) / narrations,
    clamped to [0, 1]; Rigorous < 0.2 <= Balanced < 0.4 <= Literative."""
    a = histogram.get(DiscourseMode.ARGUMENT, 0)
    q = histogram.get(DiscourseMode.QUOTE, 0)
    d = histogram.get(DiscourseMode.DESCRIPTION, 0)
    b = histogram.get(DiscourseMode.BACKGROUND, 0)
    n = histogram.get(DiscourseMode.NARRATION, 0)
    grade = _clamp((a + q - d - b) / max(n, 1), 0.0, 1.0)
    if grade < 0.2:
        level = "Rigorous"
    elif grade < 0.4:
        level = "Balanced"
    else:
        level = "Literative"
    return LevelGrade(level, grade)


def sentiment_level(article_polarity: float) -> str:
    """Calm / Regular / Emotional by the magnitude of the article polarity."""
    p = _clamp(abs(article_polarity), 0.0, 1.0)
    if p < 0.1:
        return "Calm"
    if p < 0.2:
        return "Regular"
    return "Emotional"


def readability_level(flesch_score: float) -> str:
    """High reading-ease reads easily: Hard < 30 <= Medium < 70 <= Easy."""
    s = _clamp(flesch_score, 0.0, 100.0)
    if s < 30:
        return "Hard"
    if s < 70:
        return "Medium"
    return "Easy"


def reliability(article_polarity: float, article_subjectivity: float) -> LevelGrade:
    """Grade = 100 - (|polarity| + subjectivity) * 100, clamped to [0, 100];
    Low < 40 <= Medium < 70 <= High."""
    grade = _clamp(100.0 - (abs(article_polarity) + article_subjectivity) * 100.0, 0.0, 100.0)
    if grade < 40:
        level = "Low"
    elif grade < 70:
        level = "Medium"
    else:
        level = "High"
    return LevelGrade(level, grade)


def summarize(
    histogram: dict[DiscourseMode, int],
    article_polarity: float,
    article_subjectivity: float,
    flesch_score: float,
) -> ArticleSummary:
    return ArticleSummary(
        writing_style=writing_style(histogram),
        sentiment_level=sentiment_level(article_polarity),
        readability_level=readability_level(flesch_score),
        reliability=reliability(article_polarity, article_subjectivity),
    )


def sentiment_bin(polarity: float) -> int:
    """Index into SENTIMENT_BIN_NAMES; the five bins partition [-1, 1]."""
    if polarity <= -0.5:
        return 0
    if polarity <= -0.1:
        return 1
    if polarity < 0.1:
        return 2
    if polarity < 0.5:
        return 3
    return 4


def radar_data(
    sentiments: list[SentenceSentiment], histogram: dict[DiscourseMode, int]
) -> RadarData:
    bins = [0, 0, 0, 0, 0]
    for s in sentiments:
        bins[sentiment_bin(s.polarity)] += 1
    total = sum(histogram.values())
    shares = tuple(
        (histogram.get(mode, 0) / total) if total else 0.0
        for mode in DISCOURSE_AXIS_ORDER
    )
    return RadarData(sentiment_axes=tuple(bins), discourse_axes=shares)


def detect_patterns(
    sentiments: list[SentenceSentiment],
    modes: list[DiscourseMode],
    article_subjectivity: float,
    flesch_score: float,
    characters: list[Character],
    thresholds: DetectorThresholds | None = None,
) -> PatternReport:
    """Run the seven detectors; at most one finding per kind."""
    th = thresholds or DetectorThresholds()
    findings: list[Finding] = []

    emotional = [
        (i, s.polarity)
        for i, s in enumerate(sentiments)
        if abs(s.polarity) >= th.emotional_polarity
    ]
    positive = [i for i, p in emotional if p > 0]
    negative = [i for i, p in emotional if p < 0]

    if len(emotional) >= th.dominance_min_sentences:
        dominant = positive if len(positive) >= len(negative) else negative
        share = len(dominant) / len(emotional)
        if share >= th.dominance_share:
            sign = "positive" if dominant is positive else "negative"
            findings.append(
                Finding(
                    kind="SentimentDominance",
                    severity="alert",
                    evidence=tuple(dominant),
                    detail=(
                        f"{len(dominant)} of {len(emotional)} emotional sentences "
                        f"({share:.0%}) lean {sign}"
                    ),
                )
            )

    if len(emotional) >= th.dominance_min_sentences:
        pos_share = len(positive) / len(emotional)
        neg_share = len(negative) / len(emotional)
        if pos_share >= th.oscillation_share and neg_share >= th.oscillation_share:
            findings.append(
                Finding(
                    kind="SentimentOscillation",
                    severity="alert",
                    evidence=tuple(i for i, _ in emotional),
                    detail=(
                        f"emotional sentences split {pos_share:.0%} positive / "
                        f"{neg_share:.0%} negative"
                    ),
                )
            )

    if article_subjectivity >= th.subjectivity_warning:
        severity = "alert" if article_subjectivity >= th.subjectivity_alert else "warning"
        contributors = tuple(
            i for i, s in enumerate(sentiments) if s.subjectivity >= th.subjectivity_warning
        )
        findings.append(
            Finding(
                kind="HighSubjectivity",
                severity=severity,
                evidence=contributors,
                detail=f"article subjectivity {article_subjectivity:.3f}",
            )
        )

    if flesch_score > th.easy_read_score:
        findings.append(
            Finding(
                kind="EasyRead",
                severity="info",
                evidence=(),
                detail=f"reading ease {flesch_score:.1f} exceeds {th.easy_read_score:.0f}",
            )
        )

    if modes:
        argument_idx = [i for i, m in enumerate(modes) if m == DiscourseMode.ARGUMENT]
        share = len(argument_idx) / len(modes)
        if share >= th.argument_share:
            findings.append(
                Finding(
                    kind="ArgumentHeavy",
                    severity="warning",
                    evidence=tuple(argument_idx),
                    detail=f"{share:.0%} of sentences argue",
                )
            )

    biased: list[tuple[int, float]] = []
    for character in characters:
        if len(character.mention_sentences) < th.character_min_mentions:
            continue
        mention_polarities = [
            sentiments[i].polarity
            for i in character.mention_sentences
            if i < len(sentiments)
        ]
        if not mention_polarities:
            continue
        mean = sum(mention_polarities) / len(mention_polarities)
        if abs(mean) >= th.character_bias_mean:
            biased.append((character.id, mean))
    if biased:
        has_positive = any(mean > 0 for _, mean in biased)
        has_negative = any(mean < 0 for _, mean in biased)
        severity = "alert" if has_positive and has_negative else "warning"
        findings.append(
            Finding(
                kind="CharacterSentimentBias",
                severity=severity,
                evidence=tuple(cid for cid, _ in biased),
                detail="; ".join(
                    f"character {cid} mean polarity {mean:+.2f}" for cid, mean in biased
                ),
            )
        )

    quote_idx = [i for i, m in enumerate(modes) if m == DiscourseMode.QUOTE]
    if len(quote_idx) >= th.quote_min_sentences:
        extreme_quotes = [i for i in quote_idx if sentiments[i].extreme]
        share = len(extreme_quotes) / len(quote_idx)
        if share >= th.emotional_quote_share:
            findings.append(
                Finding(
                    kind="EmotionalQuotes",
                    severity="alert",
                    evidence=tuple(extreme_quotes),
                    detail=(
                        f"{len(extreme_quotes)} of {len(quote_idx)} quoted sentences "
                        "carry extreme sentiment"
                    ),
                )
            )

    return PatternReport(findings=tuple(findings))
