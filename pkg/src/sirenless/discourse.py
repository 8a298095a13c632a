"""Five-way per-sentence discourse mode labeling.

Two labelers share one feature extractor:

- ``rule_baseline``: deterministic first-match rules, always available.
- ``DiscourseModel``: an averaged-perceptron multinomial linear model
  trained from a JSONL corpus, for callers who have labeled data.

Both label sentences greedily left to right; the previous sentence's
label is a feature, so a document is labeled in one pass.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import EvalError, ModelError, TrainError
from .ingest import SentenceSpan, Token, normalize_text, tokenize
from .resources import load_wordlist
from .stemming import matches_cue


class DiscourseMode(str, Enum):
    NARRATION = "Narration"
    ARGUMENT = "Argument"
    QUOTE = "Quote"
    DESCRIPTION = "Description"
    BACKGROUND = "Background"


# Deterministic tie-break order for equal classifier scores.
TIE_ORDER = (
    DiscourseMode.NARRATION,
    DiscourseMode.DESCRIPTION,
    DiscourseMode.QUOTE,
    DiscourseMode.BACKGROUND,
    DiscourseMode.ARGUMENT,
)

FEATURE_VERSION = 1

FEATURE_NAMES = (
    "quoted_token_fraction",
    "has_reporting_verb",
    "first_person",
    "opinion_cue_count",
    "modal_count",
    "past_tense_fraction",
    "date_or_year_present",
    "numeric_density",
    "sentence_position",
    "token_count",
    "has_sensory_adjective",
    "entity_recurrence",
    "prev=Narration",
    "prev=Argument",
    "prev=Quote",
    "prev=Description",
    "prev=Background",
)

# Rule-baseline thresholds (documented artifact choices).
QUOTE_FRACTION_MIN = 0.5
NUMERIC_DENSITY_MIN = 0.2
MODAL_COUNT_MIN = 2

_FIRST_PERSON = frozenset(
    {"i", "we", "me", "us", "my", "our", "mine", "ours", "myself", "ourselves"}
)

_IRREGULAR_PAST = frozenset("""
said told saw went came made took got gave found knew thought left brought began
kept held wrote stood heard let meant met ran paid sat spoke lay led grew lost
fell sent built understood drew broke spent rose drove bought wore chose fought
threw caught dealt won forgot laid sought flew swore tore fled shot struck sank
sprang rang sang drank swam blew froze stole spun strove bore beat became befell
""".split())

_MONTHS = frozenset(
    "january february march april may june july august september october november december".split()
)
_WEEKDAYS = frozenset(
    "monday tuesday wednesday thursday friday saturday sunday".split()
)
_YEAR_RE = re.compile(r"^(1[0-9]{3}|2[0-9]{3})$")


@dataclass(frozen=True)
class CueLexicons:
    reporting_verbs: frozenset[str]
    opinion_cues: frozenset[str]
    modals: frozenset[str]
    sensory_adjectives: frozenset[str]


_DEFAULT_CUES: CueLexicons | None = None


def default_cues() -> CueLexicons:
    global _DEFAULT_CUES
    if _DEFAULT_CUES is None:
        _DEFAULT_CUES = CueLexicons(
            reporting_verbs=frozenset(w.lower() for w in load_wordlist("reporting_verbs.txt")),
            opinion_cues=frozenset(w.lower() for w in load_wordlist("opinion_cues.txt")),
            modals=frozenset(w.lower() for w in load_wordlist("modals.txt")),
            sensory_adjectives=frozenset(w.lower() for w in load_wordlist("sensory_adjectives.txt")),
        )
    return _DEFAULT_CUES


@dataclass(frozen=True)
class SentenceContext:
    """Document-side inputs to feature extraction for one sentence."""

    prev_mode: DiscourseMode | None = None
    index: int = 0
    total: int = 1
    seen_entities: frozenset[str] = frozenset()


@dataclass(frozen=True)
class FeatureVector:
    quoted_token_fraction: float = 0.0
    has_reporting_verb: bool = False
    first_person: bool = False
    opinion_cue_count: int = 0
    modal_count: int = 0
    past_tense_fraction: float = 0.0
    date_or_year_present: bool = False
    numeric_density: float = 0.0
    sentence_position: float = 0.0
    token_count: int = 0
    has_sensory_adjective: bool = False
    entity_recurrence: bool = False
    prev_mode: DiscourseMode | None = None

    def to_dict(self) -> dict[str, float]:
        """Sparse named features consumed by the linear model."""
        values = {
            "quoted_token_fraction": self.quoted_token_fraction,
            "has_reporting_verb": float(self.has_reporting_verb),
            "first_person": float(self.first_person),
            "opinion_cue_count": float(self.opinion_cue_count),
            "modal_count": float(self.modal_count),
            "past_tense_fraction": self.past_tense_fraction,
            "date_or_year_present": float(self.date_or_year_present),
            "numeric_density": self.numeric_density,
            "sentence_position": self.sentence_position,
            "token_count": float(self.token_count),
            "has_sensory_adjective": float(self.has_sensory_adjective),
            "entity_recurrence": float(self.entity_recurrence),
        }
        if self.prev_mode is not None:
            values[f"prev={self.prev_mode.value}"] = 1.0
        return {k: v for k, v in values.items() if v != 0.0}


@dataclass(frozen=True)
class DiscourseLabel:
    mode: DiscourseMode
    confidence: float
    source: str  # rule | model


def quoted_word_indices(tokens: tuple[Token, ...] | list[Token]) -> set[int]:
    """Indices (into the word-token list) lying inside balanced quote pairs."""
    inside: set[int] = set()
    word_idx = 0
    open_since: int | None = None
    pending: list[int] = []
    for token in tokens:
        if token.kind == "quote-mark":
            if open_since is None:
                open_since = word_idx
                pending = []
            else:
                inside.update(pending)
                open_since = None
        elif token.kind == "word":
            if open_since is not None:
                pending.append(word_idx)
            word_idx += 1
    return inside


def extract_features(
    sentence: SentenceSpan,
    context: SentenceContext | None = None,
    cues: CueLexicons | None = None,
) -> FeatureVector:
    if context is None:
        context = SentenceContext()
    if cues is None:
        cues = default_cues()
    tokens = sentence.tokens
    words = [t for t in tokens if t.kind == "word"]
    lexical = [t for t in tokens if t.kind in ("word", "number")]
    quoted = quoted_word_indices(tokens)
    n_words = len(words)
    past = sum(
        1
        for t in words
        if t.lower in _IRREGULAR_PAST or (len(t.lower) >= 4 and t.lower.endswith("ed"))
    )
    numbers = [t for t in tokens if t.kind == "number"]
    date_present = any(
        t.lower in _MONTHS or t.lower in _WEEKDAYS for t in words
    ) or any(_YEAR_RE.match(t.surface) for t in numbers)

    recurrence = False
    if context.seen_entities:
        recurrence = any(
            t.surface[0].isupper() and t.lower in context.seen_entities for t in words
        )

    return FeatureVector(
        quoted_token_fraction=(len(quoted) / n_words) if n_words else 0.0,
        has_reporting_verb=any(matches_cue(t.lower, cues.reporting_verbs) for t in words),
        first_person=any(t.lower in _FIRST_PERSON for t in words),
        opinion_cue_count=sum(1 for t in words if matches_cue(t.lower, cues.opinion_cues)),
        modal_count=sum(1 for t in words if t.lower in cues.modals),
        past_tense_fraction=(past / n_words) if n_words else 0.0,
        date_or_year_present=date_present,
        numeric_density=len(numbers) / len(lexical) if lexical else 0.0,
        sentence_position=_position(context),
        token_count=len(tokens),
        has_sensory_adjective=any(
            matches_cue(t.lower, cues.sensory_adjectives) for t in words
        ),
        entity_recurrence=recurrence,
        prev_mode=context.prev_mode,
    )


def _position(context: SentenceContext) -> float:
    if context.total <= 1:
        return 0.0
    return context.index / (context.total - 1)


def rule_baseline(features: FeatureVector) -> DiscourseLabel:
    """First matching rule wins; the fallback mode is Narration."""
    if features.quoted_token_fraction >= QUOTE_FRACTION_MIN or (
        features.quoted_token_fraction > 0 and features.has_reporting_verb
    ):
        mode = DiscourseMode.QUOTE
    elif (
        features.opinion_cue_count >= 1
        or features.first_person
        or features.modal_count >= MODAL_COUNT_MIN
    ):
        mode = DiscourseMode.ARGUMENT
    elif features.date_or_year_present and features.entity_recurrence:
        mode = DiscourseMode.BACKGROUND
    elif (
        features.numeric_density >= NUMERIC_DENSITY_MIN
        or features.has_sensory_adjective
    ):
        mode = DiscourseMode.DESCRIPTION
    else:
        mode = DiscourseMode.NARRATION
    return DiscourseLabel(mode=mode, confidence=1.0, source="rule")


# ---------------------------------------------------------------------------
# Trainable model
# ---------------------------------------------------------------------------


@dataclass
class DiscourseModel:
    feature_names: tuple[str, ...]
    weights: dict[DiscourseMode, list[float]]
    bias: dict[DiscourseMode, float]
    feature_version: int = FEATURE_VERSION
    metadata: dict = field(default_factory=dict)

    def score(self, features: FeatureVector) -> dict[DiscourseMode, float]:
        if self.feature_version != FEATURE_VERSION:
            raise ModelError(
                f"model feature version {self.feature_version} != {FEATURE_VERSION}"
            )
        index = {name: i for i, name in enumerate(self.feature_names)}
        sparse = features.to_dict()
        unknown = set(sparse) - set(index)
        if unknown:
            raise ModelError(f"features unknown to model: {sorted(unknown)}")
        scores: dict[DiscourseMode, float] = {}
        for mode in TIE_ORDER:
            w = self.weights[mode]
            scores[mode] = self.bias[mode] + sum(
                value * w[index[name]] for name, value in sparse.items()
            )
        return scores

    def to_json(self) -> dict:
        return {
            "format": "sirenless-discourse-model",
            "version": 1,
            "feature_version": self.feature_version,
            "feature_names": list(self.feature_names),
            "classes": [m.value for m in TIE_ORDER],
            "weights": {m.value: self.weights[m] for m in TIE_ORDER},
            "bias": {m.value: self.bias[m] for m in TIE_ORDER},
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "DiscourseModel":
        try:
            names = tuple(payload["feature_names"])
            weights = {
                DiscourseMode(m): [float(x) for x in w]
                for m, w in payload["weights"].items()
            }
            bias = {DiscourseMode(m): float(b) for m, b in payload["bias"].items()}
            version = int(payload.get("feature_version", -1))
        except (KeyError, ValueError, TypeError) as exc:
            raise ModelError(f"malformed model payload: {exc}") from exc
        dims = {len(w) for w in weights.values()}
        if len(dims) != 1 or dims != {len(names)}:
            raise ModelError("class weight vectors have inconsistent dimensions")
        return cls(
            feature_names=names,
            weights=weights,
            bias=bias,
            feature_version=version,
            metadata=dict(payload.get("metadata") or {}),
        )


def classify(features: FeatureVector, model: DiscourseModel) -> DiscourseLabel:
    """Argmax class with softmax confidence; ties break by TIE_ORDER."""
    scores = model.score(features)
    best = max(TIE_ORDER, key=lambda m: (scores[m], -TIE_ORDER.index(m)))
    peak = max(scores.values())
    exp = {m: math.exp(scores[m] - peak) for m in TIE_ORDER}
    total = sum(exp.values())
    return DiscourseLabel(mode=best, confidence=exp[best] / total, source="model")


@dataclass(frozen=True)
class CorpusSentence:
    text: str
    mode: DiscourseMode
    doc: str
    index: int


def load_corpus(path: str) -> list[CorpusSentence]:
    """Read a JSONL corpus: {"text", "mode", "doc", "index"} per line."""
    sentences: list[CorpusSentence] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                sentences.append(
                    CorpusSentence(
                        text=str(obj["text"]),
                        mode=DiscourseMode(obj["mode"]),
                        doc=str(obj.get("doc", "")),
                        index=int(obj.get("index", lineno - 1)),
                    )
                )
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise TrainError(f"corpus line {lineno}: {exc}") from exc
    return sentences


def _corpus_sentence_span(text: str) -> SentenceSpan:
    normalized = normalize_text(text)
    return SentenceSpan(
        index=0,
        paragraph=0,
        start=0,
        end=len(normalized),
        tokens=tuple(tokenize(normalized, 0, len(normalized))),
    )


def _corpus_features(
    corpus: list[CorpusSentence], cues: CueLexicons
) -> list[tuple[dict[str, float], DiscourseMode]]:
    """Feature dicts per corpus sentence, with gold previous-label context."""
    by_doc: dict[str, list[CorpusSentence]] = {}
    for cs in corpus:
        by_doc.setdefault(cs.doc, []).append(cs)
    examples: list[tuple[dict[str, float], DiscourseMode]] = []
    for doc in sorted(by_doc):
        doc_sents = sorted(by_doc[doc], key=lambda cs: cs.index)
        seen: set[str] = set()
        prev: DiscourseMode | None = None
        for pos, cs in enumerate(doc_sents):
            span = _corpus_sentence_span(cs.text)
            ctx = SentenceContext(
                prev_mode=prev,
                index=pos,
                total=len(doc_sents),
                seen_entities=frozenset(seen),
            )
            feats = extract_features(span, ctx, cues)
            examples.append((feats.to_dict(), cs.mode))
            seen.update(_capitalized_lowers(span))
            prev = cs.mode
    return examples


def _capitalized_lowers(span: SentenceSpan) -> set[str]:
    words = span.word_tokens()
    return {
        t.lower for i, t in enumerate(words) if i > 0 and t.surface[0].isupper()
    }


def train(
    corpus: list[CorpusSentence],
    epochs: int = 10,
    seed: int = 0,
    cues: CueLexicons | None = None,
) -> DiscourseModel:
    """Averaged-perceptron training; bit-identical for a fixed seed+corpus."""
    if not corpus:
        raise TrainError("empty corpus")
    labels = {cs.mode for cs in corpus}
    if len(labels) < 2:
        raise TrainError(f"corpus has a single label {labels.pop().value!r}")
    if cues is None:
        cues = default_cues()

    examples = _corpus_features(corpus, cues)
    names = FEATURE_NAMES
    index = {name: i for i, name in enumerate(names)}
    dim = len(names)
    weights = {m: [0.0] * dim for m in TIE_ORDER}
    bias = {m: 0.0 for m in TIE_ORDER}
    acc_weights = {m: [0.0] * dim for m in TIE_ORDER}
    acc_bias = {m: 0.0 for m in TIE_ORDER}
    steps = 0

    rng = random.Random(seed)
    order = list(range(len(examples)))
    for _ in range(max(1, epochs)):
        rng.shuffle(order)
        for i in order:
            sparse, gold = examples[i]
            scores = {
                m: bias[m] + sum(v * weights[m][index[n]] for n, v in sparse.items())
                for m in TIE_ORDER
            }
            pred = max(TIE_ORDER, key=lambda m: (scores[m], -TIE_ORDER.index(m)))
            if pred != gold:
                for n, v in sparse.items():
                    weights[gold][index[n]] += v
                    weights[pred][index[n]] -= v
                bias[gold] += 1.0
                bias[pred] -= 1.0
            steps += 1
            for m in TIE_ORDER:
                wm, am = weights[m], acc_weights[m]
                for d in range(dim):
                    am[d] += wm[d]
                acc_bias[m] += bias[m]

    averaged = {m: [a / steps for a in acc_weights[m]] for m in TIE_ORDER}
    avg_bias = {m: acc_bias[m] / steps for m in TIE_ORDER}
    corpus_hash = hashlib.sha256(
        "\n".join(f"{cs.doc}\t{cs.index}\t{cs.mode.value}\t{cs.text}" for cs in corpus).encode("utf-8")
    ).hexdigest()
    return DiscourseModel(
        feature_names=names,
        weights=averaged,
        bias=avg_bias,
        metadata={"seed": seed, "epochs": epochs, "corpus_hash": corpus_hash,
                  "examples": len(examples)},
    )


def predict_corpus(
    model: DiscourseModel, corpus: list[CorpusSentence], cues: CueLexicons | None = None
) -> list[DiscourseMode]:
    """Greedy left-to-right decoding with the model's own previous labels."""
    if cues is None:
        cues = default_cues()
    by_doc: dict[str, list[tuple[int, CorpusSentence]]] = {}
    for pos, cs in enumerate(corpus):
        by_doc.setdefault(cs.doc, []).append((pos, cs))
    out: list[DiscourseMode | None] = [None] * len(corpus)
    for doc in sorted(by_doc):
        doc_sents = sorted(by_doc[doc], key=lambda pair: pair[1].index)
        seen: set[str] = set()
        prev: DiscourseMode | None = None
        for rank, (pos, cs) in enumerate(doc_sents):
            span = _corpus_sentence_span(cs.text)
            ctx = SentenceContext(
                prev_mode=prev,
                index=rank,
                total=len(doc_sents),
                seen_entities=frozenset(seen),
            )
            label = classify(extract_features(span, ctx, cues), model)
            out[pos] = label.mode
            seen.update(_capitalized_lowers(span))
            prev = label.mode
    return [m for m in out if m is not None]


@dataclass(frozen=True)
class EvalReport:
    per_class: dict[DiscourseMode, dict[str, float]]
    macro_f1: float
    accuracy: float
    absent_classes: tuple[DiscourseMode, ...]


def evaluate(
    model: DiscourseModel, corpus: list[CorpusSentence], cues: CueLexicons | None = None
) -> EvalReport:
    """One-vs-rest precision/recall/F1 per class plus unweighted macro-F1."""
    if not corpus:
        raise EvalError("empty corpus")
    predictions = predict_corpus(model, corpus, cues)
    gold = [cs.mode for cs in corpus]
    per_class: dict[DiscourseMode, dict[str, float]] = {}
    absent: list[DiscourseMode] = []
    for mode in TIE_ORDER:
        tp = sum(1 for p, g in zip(predictions, gold) if p == mode and g == mode)
        fp = sum(1 for p, g in zip(predictions, gold) if p == mode and g != mode)
        fn = sum(1 for p, g in zip(predictions, gold) if p != mode and g == mode)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[mode] = {"precision": precision, "recall": recall, "f1": f1}
        if tp + fn == 0:
            absent.append(mode)
    macro = sum(per_class[m]["f1"] for m in TIE_ORDER) / len(TIE_ORDER)
    accuracy = sum(1 for p, g in zip(predictions, gold) if p == g) / len(gold)
    return EvalReport(
        per_class=per_class,
        macro_f1=macro,
        accuracy=accuracy,
        absent_classes=tuple(absent),
    )
