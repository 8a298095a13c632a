"""News characters ("who"), per-sentence markers, and word-cloud counts.

Characters come from capitalization heuristics, not a learned tagger:

- A candidate mention is a maximal run of capitalized word tokens.
  Tokens may be joined across a period when the left token is a single
  capital (an initial) or an honorific ("John F. Kennedy", "Mr. Lee").
- Leading honorifics are stripped from the mention but rescue it: a
  rescued run is admitted even at sentence start and survives the
  single-token/single-mention drop.
- A run starting at the sentence's first word is otherwise admitted
  only when its first token also appears capitalized mid-sentence
  somewhere in the document.
- Mentions whose token sequence is contained in a longer mention merge
  into one character; the longest mention is the canonical form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ingest import Document, SentenceSpan, Token
from .resources import load_wordlist
from .stemming import stem

# Personal names rarely exceed four tokens; longer capitalized runs are
# headline case or title case, not mentions.
MAX_MENTION_TOKENS = 4

# Capitalized by convention, never a name on its own.
_NON_NAME = frozenset(
    {"i", "i'm", "i've", "i'll", "i'd"}
    | set("january february march april may june july august september october november december".split())
    | set("monday tuesday wednesday thursday friday saturday sunday".split())
)

# Articles dropped from the front of sentence-initial runs.
_LEADING_ARTICLES = frozenset({"the", "a", "an"})

_WS_RUN = re.compile(r"\s+")


@dataclass(frozen=True)
class Character:
    id: int
    canonical: str
    aliases: tuple[str, ...]
    mention_sentences: tuple[int, ...]


@dataclass(frozen=True)
class Marker:
    sentence: int
    kind: str  # character | keyword
    ref_id: int
    stack_position: int


@dataclass(frozen=True)
class _Mention:
    sentence: int
    words: tuple[str, ...]  # token surfaces
    token_starts: tuple[int, ...]
    token_ends: tuple[int, ...]
    rescued: bool  # preceded by an honorific
    sentence_initial: bool  # run starts at the sentence's first word token

    @property
    def start(self) -> int:
        return self.token_starts[0]

    @property
    def end(self) -> int:
        return self.token_ends[-1]

    def trimmed(self, k: int) -> "_Mention":
        """Copy without the first k tokens."""
        return _Mention(
            sentence=self.sentence,
            words=self.words[k:],
            token_starts=self.token_starts[k:],
            token_ends=self.token_ends[k:],
            rescued=self.rescued,
            sentence_initial=self.sentence_initial,
        )


_DEFAULT_HONORIFICS: frozenset[str] | None = None


def _honorifics() -> frozenset[str]:
    global _DEFAULT_HONORIFICS
    if _DEFAULT_HONORIFICS is None:
        _DEFAULT_HONORIFICS = frozenset(
            w.lower().rstrip(".") for w in load_wordlist("honorifics.txt")
        )
    return _DEFAULT_HONORIFICS


def _is_capitalized(token: Token) -> bool:
    return (
        token.kind == "word"
        and token.surface[0].isupper()
        and token.lower not in _NON_NAME
    )


def _candidate_runs(sentence: SentenceSpan, honorifics: frozenset[str]) -> list[_Mention]:
    """Capitalized runs in one sentence, honorifics stripped."""
    tokens = sentence.tokens
    runs: list[list[int]] = []
    current: list[int] = []
    for pos, token in enumerate(tokens):
        if _is_capitalized(token):
            if current:
                prev = tokens[current[-1]]
                gap = tokens[current[-1] + 1:pos]
                joinable = not gap or (
                    len(gap) == 1
                    and gap[0].surface == "."
                    and (len(prev.surface) == 1 or prev.lower in honorifics)
                )
                if joinable:
                    current.append(pos)
                    continue
                runs.append(current)
            current = [pos]
        elif token.kind in ("word", "number"):
            if current:
                runs.append(current)
                current = []
    if current:
        runs.append(current)

    first_word_pos = next(
        (i for i, t in enumerate(tokens) if t.kind == "word"), None
    )
    mentions: list[_Mention] = []
    for run in runs:
        rescued = False
        start_at_first = run[0] == first_word_pos
        if start_at_first and run and tokens[run[0]].lower in _LEADING_ARTICLES:
            run = run[1:]
        while run and tokens[run[0]].lower in honorifics:
            run = run[1:]
            rescued = True
        if not run or len(run) > MAX_MENTION_TOKENS:
            continue
        mentions.append(
            _Mention(
                sentence=sentence.index,
                words=tuple(tokens[i].surface for i in run),
                token_starts=tuple(tokens[i].start for i in run),
                token_ends=tuple(tokens[i].end for i in run),
                rescued=rescued,
                sentence_initial=start_at_first and not rescued,
            )
        )
    return mentions


def _contains(longer: tuple[str, ...], shorter: tuple[str, ...]) -> bool:
    if len(shorter) > len(longer):
        return False
    return any(
        longer[i:i + len(shorter)] == shorter
        for i in range(len(longer) - len(shorter) + 1)
    )


def extract_characters(
    document: Document, honorifics: frozenset[str] | None = None
) -> list[Character]:
    if honorifics is None:
        honorifics = _honorifics()

    mentions: list[_Mention] = []
    for sentence in document.sentences:
        mentions.extend(_candidate_runs(sentence, honorifics))

    # A sentence-initial token is capitalized by position, so it only
    # counts as name material when the same token also shows up
    # capitalized away from sentence start somewhere in the document.
    # Leading tokens without that evidence are trimmed; a run trimmed
    # to nothing is dropped. Honorific-rescued runs skip the check.
    mid_sentence: set[str] = set()
    for sentence in document.sentences:
        words = sentence.word_tokens()
        mid_sentence.update(
            t.lower for i, t in enumerate(words) if i > 0 and _is_capitalized(t)
        )
    admitted = []
    for m in mentions:
        if not m.sentence_initial:
            admitted.append(m)
            continue
        k = 0
        while k < len(m.words) and m.words[k].lower() not in mid_sentence:
            k += 1
        if k < len(m.words):
            admitted.append(m.trimmed(k))

    # Group identical token sequences, keeping first-occurrence order.
    groups: dict[tuple[str, ...], list[_Mention]] = {}
    for m in admitted:
        groups.setdefault(m.words, []).append(m)

    # Merge each sequence into the longest sequence containing it; ties
    # go to the earlier first mention.
    def first_occurrence(words: tuple[str, ...]) -> tuple[int, int]:
        head = min(groups[words], key=lambda m: (m.sentence, m.start))
        return (head.sentence, head.start)

    sequences = sorted(groups, key=lambda w: (-len(w), first_occurrence(w)))
    owner: dict[tuple[str, ...], tuple[str, ...]] = {}
    for seq in sequences:
        host = next(
            (s for s in sequences if s != seq and len(s) > len(seq) and _contains(s, seq)),
            None,
        )
        owner[seq] = host if host is not None else seq

    merged: dict[tuple[str, ...], list[_Mention]] = {}
    for seq, ms in groups.items():
        root = seq
        while owner[root] != root:
            root = owner[root]
        merged.setdefault(root, []).extend(ms)

    characters: list[Character] = []
    ordered = sorted(
        merged.items(),
        key=lambda kv: min((m.sentence, m.start) for m in kv[1]),
    )
    for canonical_words, ms in ordered:
        rescued = any(m.rescued for m in ms)
        if len(ms) == 1 and len(canonical_words) == 1 and not rescued:
            continue
        canonical_mention = next(m for m in ms if m.words == canonical_words)
        canonical = _WS_RUN.sub(" ", document.text[canonical_mention.start:canonical_mention.end])
        alias_first: dict[tuple[str, ...], _Mention] = {}
        for m in ms:
            if m.words != canonical_words and m.words not in alias_first:
                alias_first[m.words] = m
        aliases = sorted(
            _WS_RUN.sub(" ", document.text[m.start:m.end])
            for m in alias_first.values()
        )
        sentences = tuple(sorted({m.sentence for m in ms}))
        characters.append(
            Character(
                id=len(characters),
                canonical=canonical,
                aliases=tuple(aliases),
                mention_sentences=sentences,
            )
        )
    return characters


def assign_markers(
    document: Document,
    characters: list[Character],
    topic_keywords: dict[int, list[str]],
) -> list[Marker]:
    """One marker per (sentence, character) mention and per (sentence,
    topic) keyword hit; characters stack below keywords."""
    keyword_sets = {
        topic_id: set(keywords) for topic_id, keywords in topic_keywords.items()
    }
    markers: list[Marker] = []
    char_sentences = {c.id: set(c.mention_sentences) for c in characters}
    for sentence in document.sentences:
        stack = 0
        for character in characters:
            if sentence.index in char_sentences[character.id]:
                markers.append(
                    Marker(sentence.index, "character", character.id, stack)
                )
                stack += 1
        stems = {stem(t.lower) for t in sentence.word_tokens()}
        for topic_id in sorted(keyword_sets):
            if stems & keyword_sets[topic_id]:
                markers.append(Marker(sentence.index, "keyword", topic_id, stack))
                stack += 1
    return markers


_DEFAULT_STOPWORDS: frozenset[str] | None = None


def default_stopwords() -> frozenset[str]:
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        _DEFAULT_STOPWORDS = frozenset(
            w.lower() for w in load_wordlist("stopwords.txt")
        )
    return _DEFAULT_STOPWORDS


def content_stems(
    sentence: SentenceSpan, stopwords: frozenset[str]
) -> list[str]:
    """Stems of the sentence's non-stopword word tokens."""
    return [
        stem(t.lower)
        for t in sentence.word_tokens()
        if t.lower not in stopwords
    ]


def wordcloud_counts(
    document: Document,
    stopwords: frozenset[str] | None = None,
    limit: int = 50,
) -> list[tuple[str, int]]:
    """Stemmed high-frequency words: count desc, then stem asc, top 50."""
    if stopwords is None:
        stopwords = default_stopwords()
    counts: dict[str, int] = {}
    for sentence in document.sentences:
        for s in content_stems(sentence, stopwords):
            counts[s] = counts.get(s, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:limit]
