"""Access to the bundled data files (lexicons, cue lists, stopwords).

All list files share one format: UTF-8, one entry per line, blank lines
and ``#`` comment lines ignored.
"""

from __future__ import annotations

from importlib import resources


def _data_dir():
    return resources.files("sirenless") / "data"


def data_path(name: str) -> str:
    """Filesystem path of a bundled data file."""
    return str(_data_dir() / name)


def load_wordlist(name: str) -> list[str]:
    """Read a bundled one-entry-per-line list, skipping comments."""
    return parse_wordlist((_data_dir() / name).read_text(encoding="utf-8"))


def parse_wordlist(content: str) -> list[str]:
    entries = []
    for line in content.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries
