"""Pairwise persuasiveness prediction.

A pair (left, right) becomes one instance whose features are the
side-tagged concatenation [features(left); features(right)]; the label
says which side is persuasive. Feature sets:

* ``phonetic``  - the four euphony scores per side (8 dimensions).
* ``ngram``     - binary uni/bi/trigram indicators per side, with
  information-gain selection of the top-k n-grams (k from grid search).
* ``all``       - union of the two.
* ``ngram+<device>`` - n-grams plus one euphony score per side
  (ablation variants).

Models are margin classifiers: degree-1 (linear) and degree-2
polynomial kernels, the latter via an explicit quadratic map on small
feature spaces and a kernelized solver on large ones. Cross-validation
keeps a pair and its swapped twin in the same fold.
"""

from __future__ import annotations

import base64
import json
import logging
import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import sparse
from sklearn.svm import SVC, LinearSVC

from .corpus import PairCorpus, base_pair_id, normalize, stopword_filter
from .phonodict import PronDict
from .scorer import DEVICES, score_sentence
from .stats import TestResult, mcnemar

log = logging.getLogger(__name__)

KINDS = ("phonetic", "ngram", "all") + tuple(f"ngram+{d}" for d in DEVICES)

K_GRID_DEFAULT = tuple(range(1000, 20001, 1000))
EXPLICIT_MAP_MAX_DIM = 64  # above this, degree-2 falls back to the kernelized solver
SVM_MAX_ITER = 20000
SVM_TOL = 1e-4


def kind_components(kind: str) -> tuple[tuple[str, ...], bool]:
    """The phonetic devices and n-gram flag a feature-set name implies."""
    if kind == "phonetic":
        return DEVICES, False
    if kind == "ngram":
        return (), True
    if kind == "all":
        return DEVICES, True
    if kind.startswith("ngram+"):
        device = kind[len("ngram+"):]
        if device in DEVICES:
            return (device,), True
    raise ValueError(f"unknown feature kind: {kind!r}")


class SentenceCache:
    """Memoized per-sentence phonetic profiles and n-gram sets."""

    def __init__(self, pron_dict: PronDict, mode: str = "generic", stopwords=None):
        self.pron_dict = pron_dict
        self.mode = mode
        self.stopwords = stopwords
        self._profiles: dict[str, object] = {}
        self._ngrams: dict[str, frozenset[str]] = {}

    def profile(self, text: str):
        if text not in self._profiles:
            self._profiles[text] = score_sentence(text, self.pron_dict, mode=self.mode)
        return self._profiles[text]

    def ngrams(self, text: str) -> frozenset[str]:
        if text not in self._ngrams:
            tokens = normalize(text, mode=self.mode).tokens
            self._ngrams[text] = extract_ngrams(tokens, self.stopwords)
        return self._ngrams[text]


def extract_ngrams(tokens, stopwords=None) -> frozenset[str]:
    """Uni/bi/trigram names from a normalized token sequence. Stopwords are
    filtered from unigrams only; higher-order n-grams keep them so longer
    usage patterns survive. Names are namespaced by n."""
    tokens = tuple(tokens)
    grams = {f"1:{t}" for t in stopword_filter(tokens, stopwords)}
    grams.update(f"2:{a}_{b}" for a, b in zip(tokens, tokens[1:]))
    grams.update(f"3:{a}_{b}_{c}" for a, b, c in zip(tokens, tokens[1:], tokens[2:]))
    return frozenset(grams)


@dataclass(frozen=True)
class FeatureSpace:
    kind: str
    phonetic_features: tuple[str, ...]
    vocabulary: tuple[str, ...]  # candidate n-gram names (lexicographic)
    selected: tuple[str, ...]  # chosen n-grams, information-gain order

    @property
    def side_dim(self) -> int:
        return len(self.phonetic_features) + len(self.selected)

    @property
    def dim(self) -> int:
        return 2 * self.side_dim

    def feature_names(self) -> tuple[str, ...]:
        per_side = tuple(f"ph:{d}" for d in self.phonetic_features) + self.selected
        return tuple(f"L:{n}" for n in per_side) + tuple(f"R:{n}" for n in per_side)


@dataclass(frozen=True)
class PairFeatureVector:
    values: dict[int, float]
    label: str


def _entropy_bits(p: np.ndarray) -> np.ndarray:
    """Binary entropy of P(positive)=p, elementwise, with 0*log0 = 0."""
    p = np.clip(p, 0.0, 1.0)
    out = np.zeros_like(p)
    for q in (p, 1.0 - p):
        nz = q > 0
        out[nz] -= q[nz] * np.log2(q[nz])
    return out


def information_gain(feature, labels) -> float:
    """Mutual information (bits) between a binary presence column and
    binary labels, from empirical distributions."""
    x = np.asarray(feature, dtype=bool)
    y = np.asarray(labels, dtype=bool)
    if x.shape != y.shape or x.size == 0:
        raise ValueError("feature and label columns must be equal-length and non-empty")
    return float(_ig_from_counts(x.size, y.sum(), np.array([x.sum()]), np.array([(x & y).sum()]))[0])


def _ig_from_counts(n: int, n_pos: int, present: np.ndarray, present_pos: np.ndarray) -> np.ndarray:
    h_label = _entropy_bits(np.array([n_pos / n]))[0]
    absent = n - present
    absent_pos = n_pos - present_pos
    with np.errstate(invalid="ignore", divide="ignore"):
        h_present = _entropy_bits(np.where(present > 0, present_pos / np.maximum(present, 1), 0.0))
        h_absent = _entropy_bits(np.where(absent > 0, absent_pos / np.maximum(absent, 1), 0.0))
    h_cond = (present / n) * np.where(present > 0, h_present, 0.0) + (
        absent / n
    ) * np.where(absent > 0, h_absent, 0.0)
    return h_label - h_cond


def _presence_matrix(ngram_sets, name_index: dict[str, int]) -> sparse.csr_matrix:
    indptr = [0]
    indices: list[int] = []
    for grams in ngram_sets:
        cols = sorted(name_index[g] for g in grams if g in name_index)
        indices.extend(cols)
        indptr.append(len(indices))
    data = np.ones(len(indices), dtype=np.float64)
    return sparse.csr_matrix(
        (data, np.asarray(indices, dtype=np.int32), np.asarray(indptr, dtype=np.int32)),
        shape=(len(indptr) - 1, len(name_index)),
    )


def labels_to_y(labels) -> np.ndarray:
    return np.array([1.0 if lab == "left" else -1.0 for lab in labels])


def rank_ngrams(pairs, cache: SentenceCache) -> tuple[str, ...]:
    """All candidate n-gram names of the given (training) pairs, ranked by
    information gain (ties broken lexicographically). A name's gain is the
    mean of its left-column and right-column gains."""
    vocab = sorted({g for p in pairs for g in cache.ngrams(p.left) | cache.ngrams(p.right)})
    if not vocab:
        return ()
    name_index = {g: i for i, g in enumerate(vocab)}
    left = _presence_matrix([cache.ngrams(p.left) for p in pairs], name_index)
    right = _presence_matrix([cache.ngrams(p.right) for p in pairs], name_index)
    y = labels_to_y([p.label for p in pairs]) > 0
    n, n_pos = len(pairs), int(y.sum())
    yf = y.astype(np.float64)
    gains = 0.0
    for mat in (left, right):
        present = np.asarray(mat.sum(axis=0)).ravel()
        present_pos = np.asarray(mat.T @ yf).ravel()
        gains = gains + _ig_from_counts(n, n_pos, present, present_pos)
    gains = gains / 2.0
    order = sorted(range(len(vocab)), key=lambda i: (-gains[i], vocab[i]))
    return tuple(vocab[i] for i in order)


def fit_space(pairs, kind: str, k: int | None, cache: SentenceCache, ranked=None) -> FeatureSpace:
    """Build a feature space from training pairs: vocabulary, gain ranking
    and top-k selection. ``ranked`` short-circuits the ranking when the
    caller already computed it for these pairs."""
    devices, use_ngrams = kind_components(kind)
    if not use_ngrams:
        return FeatureSpace(kind=kind, phonetic_features=devices, vocabulary=(), selected=())
    if ranked is None:
        ranked = rank_ngrams(pairs, cache)
    if k is None:
        k = len(ranked)
    if k > len(ranked):
        log.warning("requested %d features but only %d exist; clamping", k, len(ranked))
        k = len(ranked)
    return FeatureSpace(
        kind=kind,
        phonetic_features=devices,
        vocabulary=tuple(sorted(ranked)),
        selected=tuple(ranked[:k]),
    )


def select_top_k(space: FeatureSpace, pairs, cache: SentenceCache, k: int) -> FeatureSpace:
    """Re-select the k highest-gain n-grams of a space on training pairs."""
    return fit_space(pairs, space.kind, k, cache)


def _side_values(text: str, space: FeatureSpace, cache: SentenceCache, sel_index) -> dict[int, float]:
    values: dict[int, float] = {}
    if space.phonetic_features:
        prof = cache.profile(text)
        for i, device in enumerate(space.phonetic_features):
            values[i] = prof.score(device)
    if sel_index:
        offset = len(space.phonetic_features)
        for g in cache.ngrams(text):
            col = sel_index.get(g)
            if col is not None:
                values[offset + col] = 1.0
    return values


def build_features(pair, space: FeatureSpace, cache: SentenceCache) -> PairFeatureVector:
    """Sparse feature map of one pair under a fitted space."""
    sel_index = {g: i for i, g in enumerate(space.selected)}
    values = dict(_side_values(pair.left, space, cache, sel_index))
    for col, val in _side_values(pair.right, space, cache, sel_index).items():
        values[space.side_dim + col] = val
    return PairFeatureVector(values=values, label=pair.label)


def build_matrix(pairs, space: FeatureSpace, cache: SentenceCache):
    """CSR design matrix and +-1 label vector for a list of pairs."""
    sel_index = {g: i for i, g in enumerate(space.selected)}
    side_dim = space.side_dim
    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for pair in pairs:
        row: dict[int, float] = dict(_side_values(pair.left, space, cache, sel_index))
        for col, val in _side_values(pair.right, space, cache, sel_index).items():
            row[side_dim + col] = val
        for col in sorted(row):
            indices.append(col)
            data.append(row[col])
        indptr.append(len(indices))
    x = sparse.csr_matrix(
        (np.asarray(data), np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
        shape=(len(pairs), space.dim),
    )
    return x, labels_to_y([p.label for p in pairs])


def quadratic_map(x) -> np.ndarray:
    """Explicit feature map of the degree-2 polynomial kernel (x.y + 1)^2:
    [1, sqrt(2) x_i, x_i^2, sqrt(2) x_i x_j for i<j]."""
    dense = x.toarray() if sparse.issparse(x) else np.asarray(x, dtype=float)
    n, d = dense.shape
    root2 = np.sqrt(2.0)
    blocks = [np.ones((n, 1)), root2 * dense, dense**2]
    cross = [root2 * (dense[:, i] * dense[:, j])[:, None] for i in range(d) for j in range(i + 1, d)]
    return np.hstack(blocks + cross) if cross else np.hstack(blocks)


@dataclass(frozen=True)
class LinearWeights:
    coef: np.ndarray
    intercept: float
    mapped: bool  # coefficients live in the quadratic-map space


@dataclass(frozen=True)
class KernelWeights:
    support: sparse.csr_matrix
    dual_coef: np.ndarray
    intercept: float


@dataclass
class Model:
    kind: str
    kernel_degree: int
    selected_k: int
    space: FeatureSpace
    weights: LinearWeights | KernelWeights
    degenerate: bool
    training_meta: dict = field(default_factory=dict)

    def decision_values(self, x) -> np.ndarray:
        w = self.weights
        if isinstance(w, LinearWeights):
            xs = quadratic_map(x) if w.mapped else x
            return np.asarray(xs @ w.coef).ravel() + w.intercept
        k = (np.asarray((x @ w.support.T).todense() if sparse.issparse(x) else x @ w.support.T) + 1.0) ** 2
        return (k @ w.dual_coef).ravel() + w.intercept

    def predict(self, x) -> np.ndarray:
        """+1 for "left", -1 for "right"; zero decisions resolve to -1."""
        return np.where(self.decision_values(x) > 0, 1.0, -1.0)

    def predict_pairs(self, pairs, cache: SentenceCache) -> np.ndarray:
        x, _ = build_matrix(pairs, self.space, cache)
        return self.predict(x)


def train(x, y, degree: int, c: float = 1.0, seed: int = 0) -> tuple:
    """Fit a margin classifier; returns (weights, degenerate flag).

    Degree 1 trains a linear hinge-loss SVM by dual coordinate descent;
    degree 2 uses the explicit quadratic map when the raw dimension is
    small and a kernelized solver otherwise. Deterministic given seed.
    """
    y = np.asarray(y, dtype=float)
    if y.size < 2:
        raise ValueError("need at least 2 training instances")
    if len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")
    if degree not in (1, 2):
        raise ValueError(f"kernel degree must be 1 or 2, got {degree}")

    if degree == 2 and x.shape[1] > EXPLICIT_MAP_MAX_DIM:
        svc = SVC(kernel="poly", degree=2, gamma=1.0, coef0=1.0, C=c)
        svc.fit(x, y)
        support = sparse.csr_matrix(x[svc.support_])
        weights = KernelWeights(
            support=support,
            dual_coef=svc.dual_coef_.ravel().copy(),
            intercept=float(svc.intercept_[0]),
        )
        return weights, False

    xs = quadratic_map(x) if degree == 2 else x
    clf = LinearSVC(
        loss="hinge", C=c, random_state=seed, max_iter=SVM_MAX_ITER, tol=SVM_TOL, dual=True
    )
    clf.fit(xs, y)
    coef = clf.coef_.ravel().copy()
    weights = LinearWeights(coef=coef, intercept=float(clf.intercept_[0]), mapped=degree == 2)
    return weights, not np.any(coef)


def train_model(pairs, kind: str, degree: int, k: int | None, cache: SentenceCache,
                c: float = 1.0, seed: int = 0, meta: dict | None = None) -> Model:
    """Fit a feature space and classifier on the given pairs."""
    space = fit_space(pairs, kind, k, cache)
    x, y = build_matrix(pairs, space, cache)
    weights, degenerate = train(x, y, degree, c=c, seed=seed)
    selected_k = len(space.selected) if space.selected else space.dim
    return Model(
        kind=kind,
        kernel_degree=degree,
        selected_k=selected_k,
        space=space,
        weights=weights,
        degenerate=degenerate,
        training_meta=dict(meta or {}),
    )


def assign_folds(corpus: PairCorpus, n_folds: int, seed: int) -> np.ndarray:
    """Fold index per instance; a pair and its swapped twin share a fold."""
    bases = list(dict.fromkeys(base_pair_id(p.pair_id) for p in corpus.pairs))
    if len(bases) < n_folds:
        raise ValueError(f"{len(bases)} pairs cannot fill {n_folds} folds")
    rng = random.Random(seed)
    rng.shuffle(bases)
    fold_of = {b: i % n_folds for i, b in enumerate(bases)}
    return np.array([fold_of[base_pair_id(p.pair_id)] for p in corpus.pairs])


@dataclass(frozen=True)
class EvalReport:
    dataset: str
    kind: str
    accuracy: float
    best_degree: int
    best_k: int | None
    grid: tuple[tuple[int, int | None, float], ...]  # (degree, k, accuracy)
    correct: tuple[bool, ...]
    n_instances: int
    seed: int


def default_grid(kind: str, k_values=K_GRID_DEFAULT, degrees_phonetic=(1, 2), degrees_ngram=(1,)):
    """Grid points as (degree, k); k is None for the phonetic-only space."""
    _, use_ngrams = kind_components(kind)
    if not use_ngrams:
        return tuple((d, None) for d in degrees_phonetic)
    return tuple((d, k) for d in degrees_ngram for k in k_values)


def cross_validate(
    corpus: PairCorpus,
    kind: str,
    pron_dict: PronDict,
    grid=None,
    seed: int = 0,
    n_folds: int = 10,
    c: float = 1.0,
    stopwords=None,
    cache: SentenceCache | None = None,
) -> tuple[Model, EvalReport]:
    """Grid-searched grouped k-fold cross-validation.

    For every grid point the vocabulary, feature ranking and selection are
    refit on each fold's training split, so held-out folds never leak into
    the feature space. Returns the best configuration retrained on the
    full corpus plus its pooled CV report.
    """
    if not corpus.symmetrized:
        raise ValueError("cross_validate expects a symmetrized corpus")
    mode = "twitter" if corpus.twitter_mode else "generic"
    cache = cache or SentenceCache(pron_dict, mode=mode, stopwords=stopwords)
    grid = tuple(grid) if grid is not None else default_grid(kind)
    folds = assign_folds(corpus, n_folds, seed)
    pairs = corpus.pairs
    n = len(pairs)
    y = labels_to_y([p.label for p in pairs])
    _, use_ngrams = kind_components(kind)

    point_correct = {point: np.zeros(n, dtype=bool) for point in grid}
    for fold in range(n_folds):
        train_idx = np.flatnonzero(folds != fold)
        test_idx = np.flatnonzero(folds == fold)
        train_pairs = [pairs[i] for i in train_idx]
        test_pairs = [pairs[i] for i in test_idx]
        ranked = rank_ngrams(train_pairs, cache) if use_ngrams else ()
        for degree, k in grid:
            space = fit_space(train_pairs, kind, k, cache, ranked=ranked)
            x_train, y_train = build_matrix(train_pairs, space, cache)
            x_test, _ = build_matrix(test_pairs, space, cache)
            weights, _ = train(x_train, y_train, degree, c=c, seed=seed)
            model = Model(kind, degree, k or space.dim, space, weights, False)
            preds = model.predict(x_test)
            point_correct[(degree, k)][test_idx] = preds == y[test_idx]

    grid_rows = tuple(
        (degree, k, float(point_correct[(degree, k)].mean())) for degree, k in grid
    )
    best_degree, best_k, best_acc = grid_rows[0]
    for degree, k, acc in grid_rows[1:]:
        if acc > best_acc:
            best_degree, best_k, best_acc = degree, k, acc

    meta = {
        "dataset": corpus.name,
        "kind": kind,
        "seed": seed,
        "folds": n_folds,
        "c": c,
        "cv_accuracy": best_acc,
    }
    model = train_model(
        list(pairs), kind, best_degree, best_k, cache, c=c, seed=seed, meta=meta
    )
    report = EvalReport(
        dataset=corpus.name,
        kind=kind,
        accuracy=best_acc,
        best_degree=best_degree,
        best_k=best_k,
        grid=grid_rows,
        correct=tuple(bool(v) for v in point_correct[(best_degree, best_k)]),
        n_instances=n,
        seed=seed,
    )
    return model, report


@dataclass(frozen=True)
class WithinReport:
    dataset: str
    reports: dict[str, EvalReport]
    comparisons: dict[str, TestResult]  # kind -> McNemar vs the previous kind


def within_dataset_run(
    corpus, pron_dict, kinds=("phonetic", "ngram", "all"), grids=None, **cv_kwargs
) -> tuple[dict[str, Model], WithinReport]:
    """Cross-validate several feature sets on one corpus and compare each
    to its predecessor with McNemar on the pooled CV predictions."""
    grids = grids or {}
    models: dict[str, Model] = {}
    reports: dict[str, EvalReport] = {}
    for kind in kinds:
        models[kind], reports[kind] = cross_validate(
            corpus, kind, pron_dict, grid=grids.get(kind), **cv_kwargs
        )
    comparisons = {}
    for prev, kind in zip(kinds, kinds[1:]):
        comparisons[kind] = mcnemar(reports[kind].correct, reports[prev].correct)
    return models, WithinReport(corpus.name, reports, comparisons)


@dataclass(frozen=True)
class AblationReport:
    dataset: str
    baseline: EvalReport
    enriched: dict[str, EvalReport]
    comparisons: dict[str, TestResult]  # kind -> McNemar vs the n-gram baseline


def ablation_run(corpus, pron_dict, grids=None, **cv_kwargs) -> tuple[dict[str, Model], AblationReport]:
    """The n-gram baseline plus each single euphony feature on top of it."""
    grids = grids or {}
    kinds = ("ngram",) + tuple(f"ngram+{d}" for d in DEVICES)
    models: dict[str, Model] = {}
    reports: dict[str, EvalReport] = {}
    for kind in kinds:
        models[kind], reports[kind] = cross_validate(
            corpus, kind, pron_dict, grid=grids.get(kind), **cv_kwargs
        )
    comparisons = {
        kind: mcnemar(reports[kind].correct, reports["ngram"].correct)
        for kind in kinds[1:]
    }
    return models, AblationReport(corpus.name, reports["ngram"],
                                  {k: reports[k] for k in kinds[1:]}, comparisons)


@dataclass(frozen=True)
class CrossCell:
    train: str
    test: str
    kind: str
    accuracy: float
    best_degree: int
    best_k: int | None
    train_cv_accuracy: float


def cross_dataset_eval(
    train_corpus: PairCorpus,
    test_corpus: PairCorpus,
    pron_dict: PronDict,
    kinds=("phonetic", "ngram", "all"),
    grids=None,
    allow_same: bool = False,
    seed: int = 0,
    **cv_kwargs,
) -> list[CrossCell]:
    """Evaluate each feature set's training-corpus-best model on the full
    test corpus. Vocabulary and selection come from the training corpus
    only; identical corpus names are refused unless ``allow_same``."""
    if train_corpus.name == test_corpus.name and not allow_same:
        raise ValueError(
            f"train and test corpus are both {train_corpus.name!r}; "
            "pass allow_same=True for a sanity run"
        )
    grids = grids or {}
    test_mode = "twitter" if test_corpus.twitter_mode else "generic"
    test_cache = SentenceCache(pron_dict, mode=test_mode, stopwords=cv_kwargs.get("stopwords"))
    y_test = labels_to_y([p.label for p in test_corpus.pairs])
    cells = []
    for kind in kinds:
        model, report = cross_validate(
            train_corpus, kind, pron_dict, grid=grids.get(kind), seed=seed, **cv_kwargs
        )
        preds = model.predict_pairs(test_corpus.pairs, test_cache)
        cells.append(
            CrossCell(
                train=train_corpus.name,
                test=test_corpus.name,
                kind=kind,
                accuracy=float((preds == y_test).mean()),
                best_degree=report.best_degree,
                best_k=report.best_k,
                train_cv_accuracy=report.accuracy,
            )
        )
    return cells


# --- model serialization (versioned JSON container) ---

_MODEL_FORMAT = "euphony-model/1"


def _encode_array(a: np.ndarray) -> dict:
    a = np.ascontiguousarray(a)
    return {
        "dtype": str(a.dtype),
        "shape": list(a.shape),
        "data": base64.b64encode(a.tobytes()).decode("ascii"),
    }


def _decode_array(obj: dict) -> np.ndarray:
    raw = base64.b64decode(obj["data"])
    return np.frombuffer(raw, dtype=obj["dtype"]).reshape(obj["shape"]).copy()


def model_to_dict(model: Model) -> dict:
    w = model.weights
    if isinstance(w, LinearWeights):
        weights = {
            "type": "linear",
            "coef": _encode_array(w.coef),
            "intercept": w.intercept,
            "mapped": w.mapped,
        }
    else:
        csr = w.support.tocsr()
        weights = {
            "type": "kernel",
            "support_data": _encode_array(csr.data),
            "support_indices": _encode_array(csr.indices),
            "support_indptr": _encode_array(csr.indptr),
            "support_shape": list(csr.shape),
            "dual_coef": _encode_array(w.dual_coef),
            "intercept": w.intercept,
        }
    return {
        "format": _MODEL_FORMAT,
        "kind": model.kind,
        "kernel_degree": model.kernel_degree,
        "selected_k": model.selected_k,
        "space": {
            "kind": model.space.kind,
            "phonetic_features": list(model.space.phonetic_features),
            "vocabulary": list(model.space.vocabulary),
            "selected": list(model.space.selected),
        },
        "weights": weights,
        "degenerate": model.degenerate,
        "training_meta": model.training_meta,
    }


def model_from_dict(obj: dict) -> Model:
    if obj.get("format") != _MODEL_FORMAT:
        raise ValueError(f"unsupported model container: {obj.get('format')!r}")
    sp = obj["space"]
    space = FeatureSpace(
        kind=sp["kind"],
        phonetic_features=tuple(sp["phonetic_features"]),
        vocabulary=tuple(sp["vocabulary"]),
        selected=tuple(sp["selected"]),
    )
    wobj = obj["weights"]
    if wobj["type"] == "linear":
        weights = LinearWeights(
            coef=_decode_array(wobj["coef"]),
            intercept=wobj["intercept"],
            mapped=wobj["mapped"],
        )
    else:
        weights = KernelWeights(
            support=sparse.csr_matrix(
                (
                    _decode_array(wobj["support_data"]),
                    _decode_array(wobj["support_indices"]),
                    _decode_array(wobj["support_indptr"]),
                ),
                shape=tuple(wobj["support_shape"]),
            ),
            dual_coef=_decode_array(wobj["dual_coef"]),
            intercept=wobj["intercept"],
        )
    return Model(
        kind=obj["kind"],
        kernel_degree=obj["kernel_degree"],
        selected_k=obj["selected_k"],
        space=space,
        weights=weights,
        degenerate=obj["degenerate"],
        training_meta=obj["training_meta"],
    )


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model)), encoding="utf-8")


def load_model(path: str | Path) -> Model:
    return model_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
