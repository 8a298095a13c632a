"""Latent Dirichlet allocation by collapsed Gibbs sampling.

Pure-Python and fully deterministic: a fixed (corpus, K, alpha, beta,
iterations, seed) tuple yields a bit-identical model on any platform.
Documents are bags of stems; inside the pipeline each paragraph of an
article is one pseudo-document.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import TopicError

DEFAULT_K = 3
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 500


def default_alpha(k: int) -> float:
    """Conventional symmetric document-topic prior."""
    return 50.0 / k


@dataclass(frozen=True)
class Topic:
    id: int
    keywords: tuple[tuple[str, float], ...]  # (stem, weight), weight desc
    weight: float  # share of corpus tokens assigned to this topic


@dataclass(frozen=True)
class TopicModel:
    k: int
    alpha: float
    beta: float
    vocabulary: tuple[str, ...]
    phi: tuple[tuple[float, ...], ...]  # K x V topic-word distributions
    theta: tuple[tuple[float, ...], ...]  # per-document topic distributions
    topic_weights: tuple[float, ...]  # token share per topic
    seed: int
    iterations: int


def lda_fit(
    documents: list[list[str]],
    k: int = DEFAULT_K,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
) -> TopicModel:
    """Fit topics over stemmed bag-of-words documents."""
    if k < 1:
        raise TopicError(f"topic count must be >= 1, got {k}")
    if iterations < 1:
        raise TopicError(f"iterations must be >= 1, got {iterations}")
    if alpha is None:
        alpha = default_alpha(k)
    if alpha <= 0 or beta <= 0:
        raise TopicError("alpha and beta must be positive")

    vocabulary = tuple(sorted({w for doc in documents for w in doc}))
    if not vocabulary:
        raise TopicError("empty vocabulary")
    vocab_index = {w: i for i, w in enumerate(vocabulary)}
    v = len(vocabulary)

    # Flattened corpus: per token, its document and vocabulary index.
    doc_of: list[int] = []
    term_of: list[int] = []
    for m, doc in enumerate(documents):
        for w in doc:
            doc_of.append(m)
            term_of.append(vocab_index[w])
    n_docs = len(documents)
    n_tokens = len(doc_of)

    rng = random.Random(seed)
    assignment = [rng.randrange(k) for _ in range(n_tokens)]

    # Count tables as flat lists for speed in the sampling loop.
    n_kt = [0] * (k * v)  # topic-term
    n_k = [0] * k  # topic totals
    n_mk = [[0] * k for _ in range(n_docs)]  # document-topic
    for i in range(n_tokens):
        z = assignment[i]
        n_kt[z * v + term_of[i]] += 1
        n_k[z] += 1
        n_mk[doc_of[i]][z] += 1

    beta_v = beta * v
    rand = rng.random
    probs = [0.0] * k
    for _ in range(iterations):
        for i in range(n_tokens):
            z = assignment[i]
            t = term_of[i]
            m = doc_of[i]
            row = n_mk[m]
            n_kt[z * v + t] -= 1
            n_k[z] -= 1
            row[z] -= 1
            total = 0.0
            for topic in range(k):
                total += (
                    (n_kt[topic * v + t] + beta)
                    / (n_k[topic] + beta_v)
                    * (row[topic] + alpha)
                )
                probs[topic] = total
            target = rand() * total
            z = 0
            while probs[z] < target:
                z += 1
            assignment[i] = z
            n_kt[z * v + t] += 1
            n_k[z] += 1
            row[z] += 1

    phi = tuple(
        tuple(
            (n_kt[topic * v + t] + beta) / (n_k[topic] + beta_v) for t in range(v)
        )
        for topic in range(k)
    )
    theta = tuple(
        tuple(
            (n_mk[m][topic] + alpha) / (len(documents[m]) + alpha * k)
            for topic in range(k)
        )
        for m in range(n_docs)
    )
    weights = tuple(
        (n_k[topic] / n_tokens) if n_tokens else (1.0 / k) for topic in range(k)
    )
    return TopicModel(
        k=k,
        alpha=alpha,
        beta=beta,
        vocabulary=vocabulary,
        phi=phi,
        theta=theta,
        topic_weights=weights,
        seed=seed,
        iterations=iterations,
    )


def top_keywords(model: TopicModel, topic_id: int, n: int) -> list[str]:
    """The n most probable stems of one topic; ties break alphabetically.
    Asking for more stems than the vocabulary holds returns all of it."""
    if not 0 <= topic_id < model.k:
        raise TopicError(f"topic id {topic_id} outside [0, {model.k})")
    if n < 1:
        raise TopicError(f"keyword count must be >= 1, got {n}")
    row = model.phi[topic_id]
    ranked = sorted(zip(model.vocabulary, row), key=lambda kv: (-kv[1], kv[0]))
    return [stem for stem, _ in ranked[:n]]


def topics_from_model(model: TopicModel, top_n: int) -> list[Topic]:
    """Topic summaries carrying each topic's top keywords and weights."""
    topics = []
    for topic_id in range(model.k):
        phi_row = dict(zip(model.vocabulary, model.phi[topic_id]))
        stems = top_keywords(model, topic_id, top_n)
        topics.append(
            Topic(
                id=topic_id,
                keywords=tuple((s, phi_row[s]) for s in stems),
                weight=model.topic_weights[topic_id],
            )
        )
    return topics
