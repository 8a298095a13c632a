"""Full analysis pipeline and the canonical analysis JSON.

``analyze`` runs ingest -> sentiment -> discourse -> characters/topics
-> scoring and returns one JSON-ready dict. The result embeds the
configuration that produced it, carries no timestamps, and serializes
canonically, so identical text + config + seed yields identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import characters as characters_mod
from . import discourse as discourse_mod
from . import metrics as metrics_mod
from . import scoring as scoring_mod
from . import topics as topics_mod
from .errors import AnalyzeError, TopicError
from .ingest import Document, ingest
from .resources import data_path
from .scoring import DetectorThresholds

SCHEMA_VERSION = 1

DEFAULT_TOPIC_TOP_N = 5


@dataclass(frozen=True)
class AnalyzeConfig:
    seed: int = 0
    topics_k: int = topics_mod.DEFAULT_K
    lda_alpha: float | None = None  # defaults to 50/K
    lda_beta: float = topics_mod.DEFAULT_BETA
    lda_iterations: int = topics_mod.DEFAULT_ITERATIONS
    topic_top_n: int = DEFAULT_TOPIC_TOP_N
    lexicon_path: str | None = None  # bundled lexicon when None
    model_path: str | None = None  # rule baseline when None
    thresholds: DetectorThresholds = field(default_factory=DetectorThresholds)


def _lexicon_for(config: AnalyzeConfig) -> tuple[metrics_mod.SentimentLexicon, str]:
    if config.lexicon_path is None:
        lexicon = metrics_mod.default_lexicon()
        path = data_path("lexicon.tsv")
    else:
        lexicon = metrics_mod.load_lexicon(
            config.lexicon_path,
            negators=metrics_mod.default_lexicon().negators,
            intensifiers=metrics_mod.default_lexicon().intensifiers,
        )
        path = config.lexicon_path
    with open(path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    return lexicon, digest


def _model_for(config: AnalyzeConfig) -> discourse_mod.DiscourseModel | None:
    if config.model_path is None:
        return None
    with open(config.model_path, encoding="utf-8") as fh:
        return discourse_mod.DiscourseModel.from_json(json.load(fh))


def label_document(
    document: Document,
    model: discourse_mod.DiscourseModel | None = None,
    cues: discourse_mod.CueLexicons | None = None,
) -> list[discourse_mod.DiscourseLabel]:
    """Greedy left-to-right labeling over a whole document."""
    if cues is None:
        cues = discourse_mod.default_cues()
    labels: list[discourse_mod.DiscourseLabel] = []
    seen: set[str] = set()
    prev: discourse_mod.DiscourseMode | None = None
    total = len(document.sentences)
    for sentence in document.sentences:
        ctx = discourse_mod.SentenceContext(
            prev_mode=prev,
            index=sentence.index,
            total=total,
            seen_entities=frozenset(seen),
        )
        features = discourse_mod.extract_features(sentence, ctx, cues)
        if model is None:
            label = discourse_mod.rule_baseline(features)
        else:
            label = discourse_mod.classify(features, model)
        labels.append(label)
        words = sentence.word_tokens()
        seen.update(
            t.lower for i, t in enumerate(words) if i > 0 and t.surface[0].isupper()
        )
        prev = label.mode
    return labels


def analyze(
    text: str | bytes,
    title: str | None = None,
    config: AnalyzeConfig | None = None,
) -> dict:
    """Run the whole pipeline; returns the analysis as a JSON-ready dict."""
    config = config or AnalyzeConfig()
    document = ingest(text, title=title)
    if not document.text.strip():
        raise AnalyzeError("text is empty after normalization")

    lexicon, lexicon_digest = _lexicon_for(config)
    model = _model_for(config)

    sentiments = [
        metrics_mod.sentence_sentiment(s.tokens, lexicon) for s in document.sentences
    ]
    labels = label_document(document, model=model)
    modes = [label.mode for label in labels]

    chars = characters_mod.extract_characters(document)
    stopwords = characters_mod.default_stopwords()

    pseudo_docs: list[list[str]] = []
    for para in document.paragraphs:
        stems: list[str] = []
        for sentence in document.sentences:
            if sentence.paragraph == para.index:
                stems.extend(characters_mod.content_stems(sentence, stopwords))
        pseudo_docs.append(stems)
    try:
        topic_model = topics_mod.lda_fit(
            pseudo_docs,
            k=config.topics_k,
            alpha=config.lda_alpha,
            beta=config.lda_beta,
            iterations=config.lda_iterations,
            seed=config.seed,
        )
        topic_list = topics_mod.topics_from_model(topic_model, config.topic_top_n)
    except TopicError:
        # No content words at all (e.g. every token is a stopword).
        topic_model = None
        topic_list = []

    markers = characters_mod.assign_markers(
        document,
        chars,
        {t.id: [s for s, _ in t.keywords] for t in topic_list},
    )
    markers_by_sentence: dict[int, list[characters_mod.Marker]] = {}
    for marker in markers:
        markers_by_sentence.setdefault(marker.sentence, []).append(marker)

    article = metrics_mod.article_metrics(document, sentiments)
    histogram = {mode: modes.count(mode) for mode in discourse_mod.TIE_ORDER}
    radar = scoring_mod.radar_data(sentiments, histogram)
    summary = scoring_mod.summarize(
        histogram, article.article_polarity, article.article_subjectivity,
        article.flesch_score,
    )
    patterns = scoring_mod.detect_patterns(
        sentiments,
        modes,
        article.article_subjectivity,
        article.flesch_score,
        chars,
        config.thresholds,
    )
    cloud = characters_mod.wordcloud_counts(document, stopwords)

    sentences_json = []
    for sentence, sentiment, label in zip(document.sentences, sentiments, labels):
        sentences_json.append(
            {
                "index": sentence.index,
                "paragraph": sentence.paragraph,
                "span": [sentence.start, sentence.end],
                "text": document.sentence_text(sentence.index),
                "polarity": sentiment.polarity,
                "subjectivity": sentiment.subjectivity,
                "extreme": sentiment.extreme,
                "mode": label.mode.value,
                "confidence": label.confidence,
                "markers": [
                    {
                        "kind": m.kind,
                        "ref_id": m.ref_id,
                        "stack_position": m.stack_position,
                    }
                    for m in markers_by_sentence.get(sentence.index, [])
                ],
            }
        )

    result = {
        "schema_version": SCHEMA_VERSION,
        "id": document.id,
        "title": document.title,
        "counts": {
            "paragraphs": len(document.paragraphs),
            "sentences": len(document.sentences),
            "words": document.word_count,
            "syllables": document.syllable_count,
        },
        "sentences": sentences_json,
        "characters": [
            {
                "id": c.id,
                "canonical": c.canonical,
                "aliases": list(c.aliases),
                "mention_sentences": list(c.mention_sentences),
            }
            for c in chars
        ],
        "topics": [
            {
                "id": t.id,
                "weight": t.weight,
                "keywords": [[s, w] for s, w in t.keywords],
            }
            for t in topic_list
        ],
        "stats": {
            "article_polarity": article.article_polarity,
            "article_subjectivity": article.article_subjectivity,
            "flesch_score": article.flesch_score,
            "histogram": {mode.value: histogram[mode] for mode in discourse_mod.TIE_ORDER},
            "radar": {
                "sentiment_axes": {
                    name: count
                    for name, count in zip(
                        scoring_mod.SENTIMENT_BIN_NAMES, radar.sentiment_axes
                    )
                },
                "discourse_axes": {
                    mode.value: share
                    for mode, share in zip(
                        scoring_mod.DISCOURSE_AXIS_ORDER, radar.discourse_axes
                    )
                },
            },
        },
        "summary": {
            "writing_style": {
                "level": summary.writing_style.level,
                "grade": summary.writing_style.grade,
            },
            "sentiment": summary.sentiment_level,
            "readability": summary.readability_level,
            "reliability": {
                "level": summary.reliability.level,
                "grade": summary.reliability.grade,
            },
        },
        "patterns": [
            {
                "kind": f.kind,
                "severity": f.severity,
                "evidence": list(f.evidence),
                "detail": f.detail,
            }
            for f in patterns.findings
        ],
        "wordcloud": [[stem, count] for stem, count in cloud],
        "config": {
            "seed": config.seed,
            "topics_k": config.topics_k,
            "lda_alpha": (
                config.lda_alpha
                if config.lda_alpha is not None
                else topics_mod.default_alpha(config.topics_k)
            ),
            "lda_beta": config.lda_beta,
            "lda_iterations": config.lda_iterations,
            "topic_top_n": config.topic_top_n,
            "labeler": "rule" if model is None else "model",
            "lexicon_sha256": lexicon_digest,
            "thresholds_version": config.thresholds.version,
        },
    }
    return result


def canonical_json(result: dict) -> str:
    """The canonical byte layout for analysis JSON."""
    return json.dumps(result, ensure_ascii=False, sort_keys=True,
                      separators=(",", ":")) + "\n"


class ValidationFailure(AssertionError):
    """An analysis dict violates the schema or its internal invariants."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationFailure(message)


def validate_analysis(result: dict) -> None:
    """Check schema shape and cross-field invariants of an analysis dict."""
    _require(result.get("schema_version") == SCHEMA_VERSION, "bad schema_version")
    for key in (
        "id", "counts", "sentences", "characters", "topics", "stats",
        "summary", "patterns", "wordcloud", "config",
    ):
        _require(key in result, f"missing key {key}")

    sentences = result["sentences"]
    counts = result["counts"]
    _require(counts["sentences"] == len(sentences), "sentence count mismatch")

    histogram = result["stats"]["histogram"]
    _require(
        sum(histogram.values()) == len(sentences), "histogram total != sentence count"
    )
    radar = result["stats"]["radar"]
    _require(
        sum(radar["sentiment_axes"].values()) == len(sentences),
        "radar sentiment total != sentence count",
    )
    share_sum = sum(radar["discourse_axes"].values())
    _require(
        abs(share_sum - 1.0) <= 1e-9 or (not sentences and share_sum == 0.0),
        "discourse shares do not sum to 1",
    )

    character_ids = {c["id"] for c in result["characters"]}
    topic_ids = {t["id"] for t in result["topics"]}
    for record in sentences:
        _require(
            0 <= record["index"] < len(sentences), f"bad sentence index {record['index']}"
        )
        _require(-1.0 <= record["polarity"] <= 1.0, "polarity out of range")
        _require(0.0 <= record["subjectivity"] <= 1.0, "subjectivity out of range")
        _require(
            record["extreme"] == (abs(record["polarity"]) > metrics_mod.EXTREME_THRESHOLD),
            "extreme flag inconsistent",
        )
        stack = [m["stack_position"] for m in record["markers"]]
        _require(stack == list(range(len(stack))), "marker stack not 0..n-1")
        for m in record["markers"]:
            pool = character_ids if m["kind"] == "character" else topic_ids
            _require(m["ref_id"] in pool, f"marker ref {m['ref_id']} unresolved")

    # Character mention lists must equal the sentences carrying their markers.
    marked: dict[int, set[int]] = {}
    for record in sentences:
        for m in record["markers"]:
            if m["kind"] == "character":
                marked.setdefault(m["ref_id"], set()).add(record["index"])
    for c in result["characters"]:
        _require(
            sorted(marked.get(c["id"], set())) == list(c["mention_sentences"]),
            f"character {c['id']} markers disagree with mention_sentences",
        )

    stats = result["stats"]
    summary = result["summary"]
    rebuilt = scoring_mod.summarize(
        {
            discourse_mod.DiscourseMode(name): count
            for name, count in histogram.items()
        },
        stats["article_polarity"],
        stats["article_subjectivity"],
        stats["flesch_score"],
    )
    _require(
        summary["writing_style"]["level"] == rebuilt.writing_style.level
        and summary["writing_style"]["grade"] == rebuilt.writing_style.grade,
        "writing style not re-derivable from stats",
    )
    _require(summary["sentiment"] == rebuilt.sentiment_level, "sentiment level mismatch")
    _require(
        summary["readability"] == rebuilt.readability_level, "readability level mismatch"
    )
    _require(
        summary["reliability"]["level"] == rebuilt.reliability.level
        and summary["reliability"]["grade"] == rebuilt.reliability.grade,
        "reliability not re-derivable from stats",
    )

    for finding in result["patterns"]:
        _require(
            finding["severity"] in ("info", "warning", "alert"), "bad severity"
        )
        if finding["kind"] == "CharacterSentimentBias":
            _require(
                all(e in character_ids for e in finding["evidence"]),
                "bias evidence references unknown character",
            )
        else:
            _require(
                all(0 <= e < len(sentences) for e in finding["evidence"]),
                f"finding {finding['kind']} evidence out of range",
            )
    kinds = [f["kind"] for f in result["patterns"]]
    _require(len(kinds) == len(set(kinds)), "duplicate finding kinds")

    _require(len(result["wordcloud"]) <= 50, "wordcloud exceeds 50 stems")
