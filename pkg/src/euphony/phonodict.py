"""ARPABET pronouncing dictionary parsing and word lookup.

The expected file format is the plain-text CMU dictionary convention:
one ``HEADWORD  PH1 PH2 ...`` entry per line, ``;;;`` comment lines,
``(n)`` suffixes marking alternate pronunciations. Stress digits are
stripped at parse time, so every phoneme ends up in the 39-symbol
stress-free inventory.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

log = logging.getLogger(__name__)

VOWELS = frozenset(
    "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split()
)
PLOSIVES = frozenset("P B T D K G".split())
OTHER_CONSONANTS = frozenset(
    "CH DH F HH JH L M N NG R S SH TH V W Y Z ZH".split()
)
PHONEMES = VOWELS | PLOSIVES | OTHER_CONSONANTS

# a pronunciation is a tuple of stress-stripped symbols, e.g. ("D", "AO", "G")
Pronunciation = tuple[str, ...]

_VARIANT_RE = re.compile(r"^(?P<head>.+)\((?P<idx>\d+)\)$")
_STRESS_RE = re.compile(r"[012]$")


class DictParseError(ValueError):
    """Raised for malformed dictionary input; message names line numbers."""


def phoneme_class(symbol: str) -> str:
    """Classify a stress-free ARPABET symbol as vowel/plosive/other-consonant."""
    if symbol in VOWELS:
        return "vowel"
    if symbol in PLOSIVES:
        return "plosive"
    if symbol in OTHER_CONSONANTS:
        return "other-consonant"
    raise ValueError(f"unknown ARPABET symbol: {symbol!r}")


@dataclass(frozen=True)
class PronDict:
    """Immutable word -> pronunciation-variants mapping.

    ``entries`` maps uppercase headwords to their pronunciation variants in
    file order (base entry first). Lookup is case-insensitive and returns
    the first variant.
    """

    entries: dict[str, list[Pronunciation]] = field(default_factory=dict)
    source_version: str = ""

    def lookup(self, word: str) -> Pronunciation | None:
        variants = self.entries.get(word.upper())
        return variants[0] if variants else None

    def variants(self, word: str) -> list[Pronunciation]:
        return list(self.entries.get(word.upper(), []))

    def __contains__(self, word: str) -> bool:
        return word.upper() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def _strip_stress(symbol: str) -> str:
    return _STRESS_RE.sub("", symbol)


def parse_dict(raw_text: str, source_version: str = "") -> PronDict:
    """Parse CMU-format dictionary text into a :class:`PronDict`.

    Stress digits are removed from every phoneme. ``HEAD(n)`` lines are
    appended to HEAD's variant list. A duplicate base headword keeps the
    first entry and logs a warning; an unknown phoneme symbol or a line
    without a pronunciation raises :class:`DictParseError` naming the line.
    """
    entries: dict[str, list[Pronunciation]] = {}
    for lineno, line in enumerate(raw_text.splitlines(), start=1):
        line = line.rstrip()
        if not line or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise DictParseError(f"line {lineno}: no pronunciation: {line!r}")
        head, raw_phones = parts[0], parts[1:]
        phones = []
        for raw in raw_phones:
            symbol = _strip_stress(raw)
            if symbol not in PHONEMES:
                raise DictParseError(
                    f"line {lineno}: unknown phoneme symbol {raw!r} in entry {head!r}"
                )
            phones.append(symbol)
        variant = _VARIANT_RE.match(head)
        if variant:
            head = variant.group("head")
        head = head.upper()
        if head in entries:
            if not variant:
                log.warning("line %d: duplicate entry for %r; keeping first", lineno, head)
                continue
            entries[head].append(tuple(phones))
        else:
            entries[head] = [tuple(phones)]
    return PronDict(entries=entries, source_version=source_version)


def load_dict(path: str | Path) -> PronDict:
    """Read a dictionary file (Latin-1, per the CMU distribution) from disk."""
    path = Path(path)
    raw = path.read_text(encoding="latin-1")
    pd = parse_dict(raw, source_version=path.name)
    return PronDict(
        entries=pd.entries,
        source_version=f"{path.name} ({len(pd)} headwords)",
    )


def fixture_path() -> Path:
    """Path of the small lexicon bundled for tests and demos."""
    return Path(__file__).parent / "data" / "cmudict_fixture.txt"
