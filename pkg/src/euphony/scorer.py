"""Phoneme-level euphony scores for a sentence.

Four scores, each normalized by the sentence's total phoneme count and
therefore bounded to [0, 1]:

* rhyme - per word, the longest phonetic suffix shared with any other
  word; lengths >= 1 are summed over words and divided by the total.
* alliteration - the mirror image with shared phonetic prefixes.
* plosive - fraction of phonemes that are plosives (P B T D K G).
* homogeneity - one minus the ratio of distinct to total phonemes.

Words missing from the dictionary contribute no phonemes; an empty
phoneme sequence scores zero everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .corpus import normalize_phonetic
from .phonodict import PLOSIVES, PronDict, Pronunciation


@dataclass(frozen=True)
class PhoneticProfile:
    rhyme: float
    alliteration: float
    plosive: float
    homogeneity: float
    total_phonemes: int
    distinct_phonemes: int
    oov_tokens: int
    covered_tokens: int

    def score(self, device: str) -> float:
        return getattr(self, device)


DEVICES = ("rhyme", "alliteration", "plosive", "homogeneity")

EMPTY_PROFILE = PhoneticProfile(0.0, 0.0, 0.0, 0.0, 0, 0, 0, 0)


@dataclass(frozen=True)
class SentencePhonemes:
    """Per-word pronunciations of the in-dictionary tokens of a sentence."""

    words: tuple[Pronunciation, ...]
    oov_tokens: int = 0

    @cached_property
    def flat(self) -> tuple[str, ...]:
        return tuple(ph for word in self.words for ph in word)


def phonemize(tokens, pron_dict: PronDict) -> SentencePhonemes:
    """Resolve tokens to pronunciations; OOV and non-alphabetic tokens are
    dropped (the latter without counting as OOV)."""
    words: list[Pronunciation] = []
    oov = 0
    for token in tokens:
        if not any(c.isalpha() for c in token):
            continue
        pron = pron_dict.lookup(token)
        if pron is None:
            oov += 1
        else:
            words.append(pron)
    return SentencePhonemes(words=tuple(words), oov_tokens=oov)


def _common_prefix_len(a: Pronunciation, b: Pronunciation) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def _affix_score(words: tuple[Pronunciation, ...], total: int, reverse: bool) -> float:
    if total == 0 or len(words) < 2:
        return 0.0
    seqs = [w[::-1] for w in words] if reverse else list(words)
    matched = 0
    for i, wi in enumerate(seqs):
        best = 0
        for j, wj in enumerate(seqs):
            if i == j:
                continue
            best = max(best, _common_prefix_len(wi, wj))
        matched += best
    return matched / total


def plosive_score(sp: SentencePhonemes) -> float:
    flat = sp.flat
    if not flat:
        return 0.0
    return sum(ph in PLOSIVES for ph in flat) / len(flat)


def homogeneity_score(sp: SentencePhonemes) -> float:
    flat = sp.flat
    if not flat:
        return 0.0
    return 1.0 - len(set(flat)) / len(flat)


def alliteration_score(sp: SentencePhonemes) -> float:
    return _affix_score(sp.words, len(sp.flat), reverse=False)


def rhyme_score(sp: SentencePhonemes) -> float:
    return _affix_score(sp.words, len(sp.flat), reverse=True)


def profile(sp: SentencePhonemes) -> PhoneticProfile:
    """All four scores plus coverage diagnostics for phonemized input."""
    flat = sp.flat
    return PhoneticProfile(
        rhyme=rhyme_score(sp),
        alliteration=alliteration_score(sp),
        plosive=plosive_score(sp),
        homogeneity=homogeneity_score(sp),
        total_phonemes=len(flat),
        distinct_phonemes=len(set(flat)),
        oov_tokens=sp.oov_tokens,
        covered_tokens=len(sp.words),
    )


def score_sentence(text: str, pron_dict: PronDict, mode: str = "generic") -> PhoneticProfile:
    """Normalize, phonemize and score a raw sentence."""
    tokens = normalize_phonetic(text, mode=mode).tokens
    return profile(phonemize(tokens, pron_dict))
