"""Paired-sentence corpora: loading, symmetrization, and text normalization.

The canonical pair format is a 4-column table (``pair_id``, ``left``,
``right``, ``label``) serialized either as TSV with a header row or as
JSONL. ``label`` names the persuasive side of the pair.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from pathlib import Path

LABELS = ("left", "right")

URL_TAG = "_URL_"
MENTION_TAG = "_MENTION_"

# tag matches include the tags themselves so re-tokenizing tagged text
# is a no-op (idempotence)
_TAG_RE = re.compile(
    r"(?P<url>(?:https?://|www\.)\S+)"
    r"|(?P<mention>(?<!\w)@\w+)"
    r"|(?P<tag>_(?:URL|MENTION)_)",
    re.IGNORECASE,
)

# characters kept by the tokenizers; everything else is deleted in place
_NGRAM_STRIP = re.compile(r"[^a-z\s]+")
_PHONETIC_STRIP = re.compile(r"[^a-z'\s]+")


class CorpusFormatError(ValueError):
    """Raised when a pair file contains malformed rows; lists row numbers."""

    def __init__(self, path, problems: list[tuple[int, str]]):
        self.path = str(path)
        self.problems = problems
        lines = "; ".join(f"row {n}: {msg}" for n, msg in problems)
        super().__init__(f"{path}: {lines}")


@dataclass(frozen=True)
class SentencePair:
    pair_id: str
    left: str
    right: str
    label: str  # side holding the persuasive sentence

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValueError(f"pair {self.pair_id!r}: empty side")
        if self.label not in LABELS:
            raise ValueError(f"pair {self.pair_id!r}: bad label {self.label!r}")

    @property
    def persuasive(self) -> str:
        return self.left if self.label == "left" else self.right

    @property
    def non_persuasive(self) -> str:
        return self.right if self.label == "left" else self.left

    def swapped(self) -> "SentencePair":
        flipped = "right" if self.label == "left" else "left"
        return SentencePair(self.pair_id + "#rev", self.right, self.left, flipped)


@dataclass(frozen=True)
class PairCorpus:
    name: str
    pairs: tuple[SentencePair, ...]
    symmetrized: bool = False
    twitter_mode: bool = False

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class TokenizedSentence:
    tokens: tuple[str, ...]
    raw: str


def base_pair_id(pair_id: str) -> str:
    """Identifier shared by a pair and its swapped twin."""
    return pair_id[:-4] if pair_id.endswith("#rev") else pair_id


def _infer_format(path: Path) -> str:
    return "jsonl" if path.suffix.lower() in (".jsonl", ".json") else "tsv"


def load_pairs(
    path: str | Path,
    format: str | None = None,
    name: str | None = None,
    twitter_mode: bool = False,
) -> PairCorpus:
    """Load an unsymmetrized pair corpus from TSV (headered) or JSONL.

    All malformed rows are collected and raised together as a
    :class:`CorpusFormatError`; an unreadable file raises ``OSError``.
    """
    path = Path(path)
    fmt = format or _infer_format(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    pairs: list[SentencePair] = []
    problems: list[tuple[int, str]] = []

    if fmt == "tsv":
        if not lines:
            raise CorpusFormatError(path, [(1, "missing header row")])
        header = lines[0].split("\t")
        if header != ["pair_id", "left", "right", "label"]:
            raise CorpusFormatError(path, [(1, f"bad header: {lines[0]!r}")])
        rows = enumerate(lines[1:], start=2)
        for rowno, line in rows:
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                problems.append((rowno, f"expected 4 fields, got {len(fields)}"))
                continue
            try:
                pairs.append(SentencePair(*fields))
            except ValueError as exc:
                problems.append((rowno, str(exc)))
    elif fmt == "jsonl":
        for rowno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                pairs.append(
                    SentencePair(
                        str(obj["pair_id"]), obj["left"], obj["right"], obj["label"]
                    )
                )
            except (ValueError, KeyError, TypeError) as exc:
                problems.append((rowno, str(exc)))
    else:
        raise ValueError(f"unknown pair format: {fmt!r}")

    if problems:
        raise CorpusFormatError(path, problems)
    return PairCorpus(
        name=name or path.stem,
        pairs=tuple(pairs),
        symmetrized=False,
        twitter_mode=twitter_mode,
    )


def save_pairs(corpus: PairCorpus, path: str | Path, format: str | None = None) -> None:
    """Serialize a corpus back to the canonical TSV or JSONL layout."""
    path = Path(path)
    fmt = format or _infer_format(path)
    with open(path, "w", encoding="utf-8") as fh:
        if fmt == "tsv":
            fh.write("pair_id\tleft\tright\tlabel\n")
            for p in corpus.pairs:
                fh.write(f"{p.pair_id}\t{p.left}\t{p.right}\t{p.label}\n")
        elif fmt == "jsonl":
            for p in corpus.pairs:
                fh.write(
                    json.dumps(
                        {
                            "pair_id": p.pair_id,
                            "left": p.left,
                            "right": p.right,
                            "label": p.label,
                        },
                        ensure_ascii=False,
                    )
                    + "\n"
                )
        else:
            raise ValueError(f"unknown pair format: {fmt!r}")


def symmetrize(corpus: PairCorpus) -> PairCorpus:
    """Append the swapped twin of every pair so labels balance exactly."""
    if corpus.symmetrized:
        raise ValueError(f"corpus {corpus.name!r} is already symmetrized")
    twins = tuple(p.swapped() for p in corpus.pairs)
    return replace(corpus, pairs=corpus.pairs + twins, symmetrized=True)


def _strip_ascii(text: str) -> str:
    return text.encode("ascii", errors="ignore").decode("ascii")


def _segments(text: str, mode: str):
    """Split text into ("text", chunk) / ("tag", token) runs."""
    if mode != "twitter":
        yield ("text", text)
        return
    idx = 0
    for m in _TAG_RE.finditer(text):
        yield ("text", text[idx : m.start()])
        yield ("tag", MENTION_TAG if m.group("mention") else URL_TAG if m.group("url") else m.group("tag").upper())
        idx = m.end()
    yield ("text", text[idx:])


def _tokenize(text: str, mode: str, strip_re: re.Pattern) -> tuple[str, ...]:
    tokens: list[str] = []
    for kind, chunk in _segments(text, mode):
        if kind == "tag":
            tokens.append(chunk)
            continue
        work = strip_re.sub("", _strip_ascii(chunk).lower())
        tokens.extend(work.split())
    return tuple(tokens)


def normalize(text: str, mode: str = "generic") -> TokenizedSentence:
    """Tokenize for n-gram features: lowercase, ASCII only, no punctuation
    or digits. ``twitter`` mode replaces URLs and @-mentions with the
    ``_URL_`` / ``_MENTION_`` tags before stripping.
    """
    return TokenizedSentence(tokens=_tokenize(text, mode, _NGRAM_STRIP), raw=text)


def normalize_phonetic(text: str, mode: str = "generic") -> TokenizedSentence:
    """Lighter tokenization for dictionary lookup: like :func:`normalize`
    but word-internal apostrophes survive (the lexicon carries entries such
    as DON'T) and no stopword filtering is ever applied downstream.
    """
    raw_tokens = _tokenize(text, mode, _PHONETIC_STRIP)
    tokens = tuple(t for t in (tok.strip("'") for tok in raw_tokens) if t)
    return TokenizedSentence(tokens=tokens, raw=text)


def _load_default_stopwords() -> frozenset[str]:
    path = Path(__file__).parent / "data" / "stopwords.txt"
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.update(normalize(line).tokens)
    return frozenset(words)


DEFAULT_STOPWORDS = _load_default_stopwords()


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a one-word-per-line stopword file, normalized like the tokens."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.update(normalize(line).tokens)
    return frozenset(words)


def stopword_filter(
    tokens: tuple[str, ...] | list[str], stopwords: frozenset[str] | None = None
) -> tuple[str, ...]:
    """Drop stopword tokens (used for unigram features only)."""
    sw = DEFAULT_STOPWORDS if stopwords is None else stopwords
    return tuple(t for t in tokens if t not in sw)
