"""Deterministic suffix-stripping stemmer and light inflection stripping.

Two distinct tools live here:

- ``stem``: the word-cloud / topic stemmer. Applies at most one rule
  from a longest-match-first table, undoubles a trailing doubled
  consonant left by -ed/-ing removal, and folds a final consonant-y
  to i so inflected and base forms land on the same stem
  (stories/story -> stori, happily/happy -> happi).
- ``strip_candidates``: the lexicon fallback. Yields plausible base
  forms for an inflected word (-s, -ed, -ing) without deciding which
  is right; callers probe their own tables with each candidate.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")

# (suffix, replacement, minimum result length)
_RULES: tuple[tuple[str, str, int], ...] = (
    ("ations", "ate", 2),
    ("ation", "ate", 2),
    ("tions", "t", 3),
    ("tion", "t", 3),
    ("sses", "ss", 2),
    ("ies", "i", 2),
    ("ied", "i", 2),
    ("ing", "", 3),
    ("ed", "", 3),
    ("ly", "", 3),
    ("es", "", 3),
    ("s", "", 3),
)

_KEEP_FINAL_S = ("ss", "us", "is")


def stem(word: str) -> str:
    """Stem a lowercase word; unknown shapes pass through unchanged."""
    w = word
    applied = ""
    for suffix, repl, min_len in _RULES:
        if not w.endswith(suffix):
            continue
        if suffix in ("s", "es") and w.endswith(_KEEP_FINAL_S):
            continue
        candidate = w[: len(w) - len(suffix)] + repl
        if len(candidate) < min_len:
            continue
        w = candidate
        applied = suffix
        break
    if (
        applied in ("ing", "ed")
        and len(w) >= 3
        and w[-1] == w[-2]
        and w[-1] not in _VOWELS
        and w[-1] not in "ls"
    ):
        w = w[:-1]
    if len(w) >= 3 and w.endswith("y") and w[-2].isalpha() and w[-2] not in _VOWELS:
        w = w[:-1] + "i"
    return w


def strip_candidates(word: str) -> list[str]:
    """Base-form candidates for -s/-ed/-ing inflections, most specific first."""
    cands: list[str] = []

    def push(c: str) -> None:
        if len(c) >= 2 and c != word and c not in cands:
            cands.append(c)

    if word.endswith("ing"):
        base = word[:-3]
        push(base)
        push(base + "e")
        if len(base) >= 2 and base[-1] == base[-2]:
            push(base[:-1])
    if word.endswith("ied"):
        push(word[:-3] + "y")
    if word.endswith("ed"):
        base = word[:-2]
        push(base)
        if not base.endswith("e"):
            push(base + "e")
        if len(base) >= 2 and base[-1] == base[-2]:
            push(base[:-1])
    if word.endswith("ies"):
        push(word[:-3] + "y")
    if word.endswith("es"):
        push(word[:-2])
    if word.endswith("s") and not word.endswith("ss"):
        push(word[:-1])
    return cands


def matches_cue(lower: str, cues: frozenset[str]) -> bool:
    """True when the token or any stripped base form is in the cue set."""
    if lower in cues:
        return True
    return any(c in cues for c in strip_candidates(lower))
