"""News-article linguistic analysis: per-sentence discourse mode,
sentiment and subjectivity, Flesch readability, characters and topic
keywords, article summary levels, and misleading-news pattern flags."""

from .errors import (
    AnalyzeError,
    EvalError,
    IngestError,
    IoError,
    MetricError,
    ModelError,
    ParseError,
    SirenlessError,
    StoreError,
    TopicError,
    TrainError,
)
from .ingest import Document, ingest, normalize_text
from .metrics import (
    SentimentLexicon,
    default_lexicon,
    flesch_reading_ease,
    load_lexicon,
    sentence_sentiment,
)
from .discourse import DiscourseMode, extract_features, rule_baseline, train
from .characters import extract_characters, assign_markers, wordcloud_counts
from .topics import TopicModel, lda_fit, top_keywords
from .scoring import (
    ArticleSummary,
    DetectorThresholds,
    detect_patterns,
    radar_data,
    readability_level,
    reliability,
    sentiment_level,
    summarize,
    writing_style,
)
from .pipeline import AnalyzeConfig, analyze, canonical_json, validate_analysis
from .store import AnalysisStore

__version__ = "0.1.0"
