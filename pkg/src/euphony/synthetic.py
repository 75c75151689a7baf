"""Seeded generators for synthetic paired corpora.

These corpora pair a deliberately euphonic sentence (built from rhyme or
alliteration word families covered by the bundled lexicon) with a plain
prose sentence of the same length. They exercise the full pipeline
without any external data and give classifiers a known signal to find.
"""

from __future__ import annotations

import random

from .corpus import PairCorpus, SentencePair

RHYME_FAMILIES = [
    ["night", "right", "light", "sight", "fight", "tight", "might", "bright", "white", "kite"],
    ["day", "way", "say", "play", "stay", "gray", "clay"],
    ["sing", "ring", "king", "bring", "spring", "thing"],
    ["bell", "tell", "well", "sell", "shell", "spell", "fell"],
    ["bake", "cake", "lake", "make", "take", "shake", "snake"],
    ["glow", "snow", "grow", "flow", "slow", "show", "know"],
    ["green", "queen", "seen", "keen", "clean"],
    ["moon", "noon", "soon", "spoon"],
    ["buy", "fly", "dry", "try", "why"],
    ["cow", "how", "now"],
]

ALLITERATION_FAMILIES = [
    ["peter", "piper", "picked", "peck", "pickled", "peppers", "pit", "pat", "pot", "pipe"],
    ["sells", "sea", "sand", "sun", "silly", "seven", "sailors", "second", "system"],
    ["she", "shells", "shore", "sheep", "ship", "shake", "show", "shell"],
    ["betty", "bought", "butter", "bitter", "batter", "big", "busy", "bee", "buzzing"],
    ["fuzzy", "fresh", "fried", "fish", "fly", "free", "fight", "fell"],
    ["wood", "would", "woodchuck", "wicked", "witch", "wish", "wash", "win", "winter"],
    ["tongue", "twister", "twist", "tiny", "tip", "top", "ten", "time", "tight"],
    ["king", "kite", "keen", "cake", "coffee", "country", "cow"],
]

PLAIN_WORDS = [
    "about", "after", "again", "always", "answer", "because", "before", "children",
    "country", "different", "during", "every", "example", "family", "garden",
    "however", "important", "morning", "mountain", "number", "office", "people",
    "question", "river", "school", "second", "student", "system", "together",
    "under", "water", "window", "winter", "yellow", "market", "paper", "report",
    "history", "music", "doctor", "evening", "village", "teacher", "letter",
    "coffee", "table", "person", "story", "forest", "animal", "orange", "purple",
    "circle", "middle", "modern", "nature", "picture", "problem", "project",
    "travel", "valley", "weather", "yesterday", "measure",
]

# words whose pronunciations contain no plosive at all
PLOSIVE_FREE_WORDS = [
    "so", "sea", "she", "shore", "sun", "fish", "wish", "wash", "well", "fell",
    "sell", "shell", "sing", "ring", "moon", "noon", "soon", "seen", "know",
    "snow", "slow", "flow", "show", "fly", "why", "now", "how", "free", "fresh",
    "win", "silly", "seven", "family", "animal", "valley", "river", "measure",
]

PLOSIVE_FREE_FAMILIES = [
    ["sing", "ring", "thing"],
    ["moon", "noon", "soon"],
    ["snow", "slow", "flow", "show", "know"],
    ["well", "fell", "sell", "shell"],
    ["fish", "wish"],
    ["now", "how"],
    ["fly", "why"],
]


def _sentence(words: list[str]) -> str:
    return " ".join(words).capitalize() + "."


def _euphonic_words(rng: random.Random, families, n_words: int) -> list[str]:
    family = rng.choice(families)
    return [rng.choice(family) for _ in range(n_words)]


def _plain_words(rng: random.Random, pool, n_words: int) -> list[str]:
    return rng.sample(pool, k=min(n_words, len(pool)))


def euphonic_vs_plain(
    n_pairs: int, seed: int = 0, name: str = "synthetic", pool: str = "all"
) -> PairCorpus:
    """Pairs of a tongue-twister-style sentence and a length-matched plain
    sentence; the euphonic side is the persuasive one and lands on a random
    side. ``pool`` of "a"/"b" restricts word families to disjoint halves so
    two corpora can be built with non-overlapping vocabularies."""
    rng = random.Random(seed)
    families = RHYME_FAMILIES + ALLITERATION_FAMILIES
    plain = PLAIN_WORDS
    if pool == "a":
        families = families[0::2]
        plain = PLAIN_WORDS[0::2]
    elif pool == "b":
        families = families[1::2]
        plain = PLAIN_WORDS[1::2]
    pairs = []
    for i in range(n_pairs):
        n_words = rng.randint(4, 8)
        eu = _sentence(_euphonic_words(rng, families, n_words))
        pl = _sentence(_plain_words(rng, plain, n_words))
        if rng.random() < 0.5:
            pairs.append(SentencePair(f"{name}-{i}", eu, pl, "left"))
        else:
            pairs.append(SentencePair(f"{name}-{i}", pl, eu, "right"))
    return PairCorpus(name=name, pairs=tuple(pairs))


def rhyme_signal_corpus(n_pairs: int, seed: int = 0, name: str = "rhyme-signal") -> PairCorpus:
    """Pairs where the persuasive side rhymes and both sides draw on the
    same vocabulary: the persuasive sentence samples one rhyme family with
    repetition, the other side takes one word from each of several
    families, so word identity alone is a weak predictor."""
    rng = random.Random(seed)
    pairs = []
    for i in range(n_pairs):
        n_words = rng.randint(4, 6)
        family = rng.choice(RHYME_FAMILIES)
        rhyming = [rng.choice(family) for _ in range(n_words)]
        spread = [rng.choice(f) for f in rng.sample(RHYME_FAMILIES, k=n_words)]
        eu, pl = _sentence(rhyming), _sentence(spread)
        if rng.random() < 0.5:
            pairs.append(SentencePair(f"{name}-{i}", eu, pl, "left"))
        else:
            pairs.append(SentencePair(f"{name}-{i}", pl, eu, "right"))
    return PairCorpus(name=name, pairs=tuple(pairs))


def plosive_free_corpus(n_pairs: int, seed: int = 0, name: str = "no-plosive") -> PairCorpus:
    """Rhyme-signal pairs built entirely from plosive-free words, making
    the plosive score identically zero on both sides."""
    rng = random.Random(seed)
    pairs = []
    for i in range(n_pairs):
        n_words = rng.randint(4, 6)
        family = rng.choice(PLOSIVE_FREE_FAMILIES)
        eu = _sentence([rng.choice(family) for _ in range(n_words)])
        pl = _sentence(_plain_words(rng, PLOSIVE_FREE_WORDS, n_words))
        if rng.random() < 0.5:
            pairs.append(SentencePair(f"{name}-{i}", eu, pl, "left"))
        else:
            pairs.append(SentencePair(f"{name}-{i}", pl, eu, "right"))
    return PairCorpus(name=name, pairs=tuple(pairs))
