"""Hamming, Lee, Euclidean, Chinese-Euclidean and homogeneous weights.

Every weight here is a sum of a per-coordinate weight, so each kind is backed
by a lookup table over the m residues. Chinese-Euclidean values are floats;
everything else is an exact integer.
"""

import enum
from collections import Counter
from functools import lru_cache

import numpy as np

from .ring import RingError, RingSpec

TOL = 1e-9
ROUND_DIGITS = 9


class WeightKind(str, enum.Enum):
    HAMMING = "hamming"
    LEE = "lee"
    EUCLIDEAN = "euclidean"
    CHINESE_EUCLIDEAN = "chinese_euclidean"
    HOMOGENEOUS = "homogeneous"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        aliases = {"h": "hamming", "l": "lee", "e": "euclidean", "ce": "chinese_euclidean", "hw": "homogeneous"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown weight kind {name!r}") from None

    @property
    def is_real(self):
        return self is WeightKind.CHINESE_EUCLIDEAN


class TrivialCodeError(ValueError):
    """Minimum weight requested for a code with no nonzero word."""


def homogeneous_coordinate(u, spec):
    """Homogeneous weight of one residue.

    The p^{s-1}Z branch is tested first, so s=1 never touches the
    fractional p^{s-2}(p-1) factor.
    """
    u = int(u) % spec.m
    if u == 0:
        return 0
    if u % spec.p ** (spec.s - 1) == 0:
        return spec.p ** (spec.s - 1)
    return spec.p ** (spec.s - 2) * (spec.p - 1)


@lru_cache(maxsize=None)
def _table(p, s, kind):
    spec = RingSpec(p, s)
    m = spec.m
    u = np.arange(m, dtype=np.int64)
    if kind is WeightKind.HAMMING:
        t = (u != 0).astype(np.int64)
    elif kind is WeightKind.LEE:
        t = np.minimum(u, m - u)
    elif kind is WeightKind.EUCLIDEAN:
        t = np.minimum(u * u, (m - u) * (m - u))
    elif kind is WeightKind.CHINESE_EUCLIDEAN:
        t = 2.0 - 2.0 * np.cos(2.0 * np.pi * u / m)
        t[0] = 0.0
    else:
        t = np.array([homogeneous_coordinate(x, spec) for x in range(m)], dtype=np.int64)
    t.setflags(write=False)
    return t


def weight_table(spec, kind):
    """Per-residue weights as a read-only array of length m."""
    return _table(spec.p, spec.s, WeightKind.parse(kind))


def _as_vec(x, spec):
    x = np.asarray(x, dtype=np.int64)
    if x.size and (x.min() < 0 or x.max() >= spec.m):
        raise RingError(f"vector entries must be reduced mod {spec.m}")
    return x


def weight(x, spec, kind):
    """Weight of a vector (or of each row of a 2-d array)."""
    kind = WeightKind.parse(kind)
    x = _as_vec(x, spec)
    w = weight_table(spec, kind)[x].sum(axis=-1)
    if kind.is_real:
        return float(w) if np.ndim(w) == 0 else w
    return int(w) if np.ndim(w) == 0 else w


def hamming_weight(x, spec):
    return weight(x, spec, WeightKind.HAMMING)


def lee_weight(x, spec):
    return weight(x, spec, WeightKind.LEE)


def euclidean_weight(x, spec):
    return weight(x, spec, WeightKind.EUCLIDEAN)


def chinese_euclidean_weight(x, spec):
    return weight(x, spec, WeightKind.CHINESE_EUCLIDEAN)


def homogeneous_weight(x, spec):
    return weight(x, spec, WeightKind.HOMOGENEOUS)


def distance(x, y, spec, kind):
    x, y = _as_vec(x, spec), _as_vec(y, spec)
    if x.shape != y.shape:
        raise RingError(f"length mismatch: {x.shape} vs {y.shape}")
    return weight((x - y) % spec.m, spec, kind)


def _bucket(w, kind):
    return round(float(w), ROUND_DIGITS) if kind.is_real else int(w)


def weight_enumerator(codewords, spec, kind):
    """Histogram weight -> count, sorted by weight.

    ``codewords`` may be a 2-d array or any iterable of vectors.
    Real-valued weights are bucketed after rounding to 9 decimals.
    """
    kind = WeightKind.parse(kind)
    hist = Counter()
    if isinstance(codewords, np.ndarray) and codewords.ndim == 2:
        ws = np.atleast_1d(weight(codewords, spec, kind))
        if kind.is_real:
            ws = np.round(ws, ROUND_DIGITS)
        vals, counts = np.unique(ws, return_counts=True)
        for v, c in zip(vals, counts):
            hist[_bucket(v, kind)] += int(c)
    else:
        for c in codewords:
            hist[_bucket(weight(c, spec, kind), kind)] += 1
    return dict(sorted(hist.items()))


def min_weight(codewords, spec, kind):
    """Smallest weight among the nonzero words."""
    kind = WeightKind.parse(kind)
    best = None
    if isinstance(codewords, np.ndarray) and codewords.ndim == 2:
        nz = codewords[(codewords != 0).any(axis=1)]
        if len(nz):
            best = np.min(weight(nz, spec, kind))
    else:
        for c in codewords:
            c = np.asarray(c)
            if not c.any():
                continue
            w = weight(c, spec, kind)
            if best is None or w < best:
                best = w
    if best is None:
        raise TrivialCodeError("trivial code: no nonzero codeword")
    return float(best) if kind.is_real else int(best)
