"""Analysis battery for paired corpora: summary statistics with rank-sum
significance, above-threshold (CCDF) comparisons, threshold derivation
from a euphonic reference corpus, and McNemar classifier comparison.

Conventions, fixed so that desk-scale runs are trustworthy:

* Mann-Whitney uses midranks; exact enumeration when n*m < 20, otherwise
  the normal approximation with tie-corrected variance and continuity
  correction.
* The two-sample Kolmogorov-Smirnov p comes from the asymptotic
  Kolmogorov distribution at effective size n*m/(n+m).
* McNemar uses the exact binomial two-sided p when the disagreement
  count is < 20 and the continuity-corrected chi-square tail otherwise.
* CCDF values count scores strictly greater than the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np
from scipy.stats import rankdata

from .corpus import PairCorpus
from .phonodict import PronDict
from .scorer import DEVICES, score_sentence

MCNEMAR_EXACT_MAX = 20  # below this many disagreements, use the binomial
MWU_EXACT_MAX = 20  # below this n*m product, enumerate rank assignments


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    std: float
    n: int


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_raw: float
    p_adjusted: float

    @property
    def tier(self) -> str:
        if self.p_adjusted < 0.001:
            return "***"
        if self.p_adjusted < 0.01:
            return "**"
        if self.p_adjusted < 0.05:
            return "*"
        return "ns"

    def adjust(self, m: int) -> "TestResult":
        return replace(self, p_adjusted=bonferroni(self.p_raw, m))


@dataclass(frozen=True)
class Thresholds:
    rhyme: float
    alliteration: float
    plosive: float
    homogeneity: float
    source_size: int

    def for_device(self, device: str) -> float:
        return getattr(self, device)


# Average scores of a 534-item tongue-twister reference corpus; used as
# the default "clearly euphonic" cutoffs when no reference file is given.
REFERENCE_THRESHOLDS = Thresholds(
    rhyme=0.55, alliteration=0.58, plosive=0.20, homogeneity=0.68, source_size=534
)


def summarize(scores, population: bool = True) -> SummaryStats:
    """Mean and (by default population) standard deviation."""
    xs = np.asarray(list(scores), dtype=float)
    if xs.size == 0:
        raise ValueError("empty sample")
    return SummaryStats(
        mean=float(xs.mean()),
        std=float(xs.std(ddof=0 if population else 1)),
        n=int(xs.size),
    )


def bonferroni(p: float, m: int) -> float:
    if m < 1:
        raise ValueError(f"comparison count must be >= 1, got {m}")
    return min(1.0, m * p)


def _normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _chi2_sf_1df(x: float) -> float:
    return math.erfc(math.sqrt(x / 2.0))


def mann_whitney_u(a, b) -> TestResult:
    """Two-sided Mann-Whitney rank-sum test; statistic is U of the first
    sample. ``p_adjusted`` starts equal to ``p_raw``."""
    a = np.asarray(list(a), dtype=float)
    b = np.asarray(list(b), dtype=float)
    n, m = a.size, b.size
    if n == 0 or m == 0:
        raise ValueError("empty sample")
    pooled = np.concatenate([a, b])
    ranks = rankdata(pooled)
    u1 = float(ranks[:n].sum() - n * (n + 1) / 2.0)
    mu = n * m / 2.0

    if n * m < MWU_EXACT_MAX:
        p = _mwu_exact_p(ranks, n, u1)
    else:
        nn = n + m
        _, counts = np.unique(pooled, return_counts=True)
        tie_term = float(((counts**3 - counts).sum()) / (nn * (nn - 1)))
        var = n * m / 12.0 * ((nn + 1) - tie_term)
        if var <= 0:
            p = 1.0
        else:
            z = max(0.0, abs(u1 - mu) - 0.5) / math.sqrt(var)
            p = min(1.0, 2.0 * _normal_sf(z))
    return TestResult(statistic=u1, p_raw=p, p_adjusted=p)


def _mwu_exact_p(ranks: np.ndarray, n: int, u_obs: float) -> float:
    """Exact two-sided p by enumerating which pooled observations form the
    first sample; valid with ties because midranks are held fixed."""
    total = len(ranks)
    mu = n * (total - n) / 2.0
    dev = abs(u_obs - mu)
    offset = n * (n + 1) / 2.0
    hits = 0
    count = 0
    for subset in combinations(range(total), n):
        u = ranks[list(subset)].sum() - offset
        if abs(u - mu) >= dev - 1e-9:
            hits += 1
        count += 1
    return hits / count


def ks_two_sample(a, b) -> TestResult:
    """Two-tailed two-sample Kolmogorov-Smirnov test."""
    a = np.sort(np.asarray(list(a), dtype=float))
    b = np.sort(np.asarray(list(b), dtype=float))
    n, m = a.size, b.size
    if n == 0 or m == 0:
        raise ValueError("empty sample")
    grid = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, grid, side="right") / n
    cdf_b = np.searchsorted(b, grid, side="right") / m
    d = float(np.abs(cdf_a - cdf_b).max())
    lam = math.sqrt(n * m / (n + m)) * d
    p = _kolmogorov_sf(lam)
    return TestResult(statistic=d, p_raw=p, p_adjusted=p)


def _kolmogorov_sf(lam: float) -> float:
    if lam <= 0:
        return 1.0
    total = 0.0
    for k in range(1, 1001):
        term = 2.0 * (-1.0) ** (k - 1) * math.exp(-2.0 * k * k * lam * lam)
        total += term
        if abs(term) < 1e-12:
            break
    return min(1.0, max(0.0, total))


def ccdf_at(scores, t: float) -> float:
    """Fraction of scores strictly greater than t."""
    xs = np.asarray(list(scores), dtype=float)
    if xs.size == 0:
        raise ValueError("empty sample")
    return float((xs > t).mean())


def mcnemar(correct_a, correct_b) -> TestResult:
    """Paired comparison of two classifiers from per-instance correctness
    vectors on the same instances."""
    ca = np.asarray(list(correct_a), dtype=bool)
    cb = np.asarray(list(correct_b), dtype=bool)
    if ca.shape != cb.shape:
        raise ValueError("correctness vectors differ in length")
    b = int((ca & ~cb).sum())
    c = int((~ca & cb).sum())
    if b + c == 0:
        return TestResult(statistic=0.0, p_raw=1.0, p_adjusted=1.0)
    stat = (abs(b - c) - 1) ** 2 / (b + c)
    if b + c < MCNEMAR_EXACT_MAX:
        k, nn = min(b, c), b + c
        tail = sum(math.comb(nn, i) for i in range(k + 1)) / 2.0**nn
        p = min(1.0, 2.0 * tail)
    else:
        p = _chi2_sf_1df(stat)
    return TestResult(statistic=stat, p_raw=p, p_adjusted=p)


def derive_thresholds(sentences, pron_dict: PronDict, mode: str = "generic") -> Thresholds:
    """Per-device thresholds as mean scores over a euphonic reference set."""
    profiles = [score_sentence(s, pron_dict, mode=mode) for s in sentences]
    if not profiles:
        raise ValueError("empty reference corpus")
    return Thresholds(
        rhyme=float(np.mean([p.rhyme for p in profiles])),
        alliteration=float(np.mean([p.alliteration for p in profiles])),
        plosive=float(np.mean([p.plosive for p in profiles])),
        homogeneity=float(np.mean([p.homogeneity for p in profiles])),
        source_size=len(profiles),
    )


def side_scores(corpus: PairCorpus, pron_dict: PronDict) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Per device, the (persuasive, non-persuasive) score samples of a
    corpus; pairs are read as labeled, so pass the unsymmetrized corpus."""
    mode = "twitter" if corpus.twitter_mode else "generic"
    cache = {}

    def prof(text):
        if text not in cache:
            cache[text] = score_sentence(text, pron_dict, mode=mode)
        return cache[text]

    out = {}
    for device in DEVICES:
        pos = np.array([prof(p.persuasive).score(device) for p in corpus.pairs])
        neg = np.array([prof(p.non_persuasive).score(device) for p in corpus.pairs])
        out[device] = (pos, neg)
    return out


@dataclass(frozen=True)
class DeviceStats:
    device: str
    persuasive: SummaryStats
    non_persuasive: SummaryStats
    test: TestResult


@dataclass(frozen=True)
class DeviceCcdf:
    device: str
    f_persuasive: float
    f_non_persuasive: float
    test: TestResult


def means_report(
    corpus: PairCorpus, pron_dict: PronDict, family_size: int = 4
) -> list[DeviceStats]:
    """Per-device mean/std for each side plus a Bonferroni-adjusted
    Mann-Whitney comparison."""
    rows = []
    for device, (pos, neg) in side_scores(corpus, pron_dict).items():
        rows.append(
            DeviceStats(
                device=device,
                persuasive=summarize(pos),
                non_persuasive=summarize(neg),
                test=mann_whitney_u(pos, neg).adjust(family_size),
            )
        )
    return rows


def above_threshold_report(
    corpus: PairCorpus,
    pron_dict: PronDict,
    thresholds: Thresholds,
    family_size: int = 4,
) -> list[DeviceCcdf]:
    """Per-device above-threshold probabilities for each side plus a
    Bonferroni-adjusted Kolmogorov-Smirnov comparison of the score samples."""
    rows = []
    for device, (pos, neg) in side_scores(corpus, pron_dict).items():
        t = thresholds.for_device(device)
        rows.append(
            DeviceCcdf(
                device=device,
                f_persuasive=ccdf_at(pos, t),
                f_non_persuasive=ccdf_at(neg, t),
                test=ks_two_sample(pos, neg).adjust(family_size),
            )
        )
    return rows
