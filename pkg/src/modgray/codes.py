"""Linear codes over Z_{p^s}.

Standard form, p-basis, codeword enumeration, duals and the p-linear
independence test. Codes are small (desk scale); enumeration materialises
the codeword set as an array and refuses to go past a cap.
"""

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .ring import RingError, RingSpec

DEFAULT_CAP = 2**26


class CapExceeded(RuntimeError):
    """A brute-force computation would exceed the enumeration cap."""


def enumeration_cap():
    env = os.environ.get("RINGCODE_CAP")
    if env:
        try:
            return int(env, 0)
        except ValueError:
            raise ValueError(f"RINGCODE_CAP={env!r} is not an integer") from None
    return DEFAULT_CAP


def _check_cap(size, cap, what):
    cap = enumeration_cap() if cap is None else cap
    if size > cap:
        raise CapExceeded(f"{what}: {size} exceeds cap {cap}")


@dataclass(frozen=True, eq=False)
class LinearCode:
    """The Z_{p^s}-span of the rows of ``gen``."""

    spec: RingSpec
    gen: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gen, dtype=np.int64)
        if g.ndim != 2:
            raise RingError("generator must be a 2-d array")
        g = g % self.spec.m
        g.setflags(write=False)
        object.__setattr__(self, "gen", g)

    @classmethod
    def from_rows(cls, rows, p, s, n=None):
        spec = RingSpec(p, s)
        return cls(spec, spec.matrix(rows, ncols=n))

    @classmethod
    def zero(cls, spec, n):
        return cls(spec, np.zeros((0, n), dtype=np.int64))

    @property
    def n(self):
        return self.gen.shape[1]

    def __repr__(self):
        return f"LinearCode({self.spec}, n={self.n}, rows={self.gen.shape[0]})"


@dataclass(frozen=True, eq=False)
class StandardForm:
    """Permuted generator in block upper-triangular form.

    ``matrix[:, j]`` is column ``column_permutation[j]`` of the original code.
    ``profile`` is (k_0, ..., k_s); block i has k_i rows carrying p^i I on
    its diagonal block.
    """

    spec: RingSpec
    column_permutation: tuple
    matrix: np.ndarray
    profile: tuple

    @property
    def n(self):
        return len(self.column_permutation)

    @property
    def p_dimension(self):
        s = self.spec.s
        return sum((s - i) * k for i, k in enumerate(self.profile[:s]))

    def block_of_row(self):
        out = []
        for i, k in enumerate(self.profile[: self.spec.s]):
            out.extend([i] * k)
        return out

    def unpermute(self, a):
        """Map columns of an array in standard-form order back to original order."""
        a = np.asarray(a)
        out = np.empty_like(a)
        out[..., list(self.column_permutation)] = a
        return out

    def code(self):
        return LinearCode(self.spec, self.unpermute(self.matrix))


@dataclass(frozen=True, eq=False)
class PBasis:
    spec: RingSpec
    rows: np.ndarray

    @property
    def k(self):
        return self.rows.shape[0]


def standard_form(code):
    """Reduce ``code`` to the block form up to a column permutation.

    Each step picks the remaining entry of least p-valuation (leftmost
    column first, then lowest row), moves it to the diagonal, normalises it
    to p^v and clears the rest of its column wherever the entry is a
    multiple of p^v.
    """
    spec = code.spec
    p, s, m = spec.p, spec.s, spec.m
    a = code.gen.copy()
    r, n = a.shape
    perm = list(range(n))
    vals = []
    t = 0
    while t < min(r, n):
        sub = a[t:, t:]
        if not sub.any():
            break
        best = None
        for j in range(sub.shape[1]):
            for i in range(sub.shape[0]):
                v = spec.valuation(sub[i, j])
                if v < s and (best is None or v < best[0]):
                    best = (v, i, j)
            if best is not None and best[0] == 0:
                break
        v, i, j = best
        i, j = i + t, j + t
        a[[t, i]] = a[[i, t]]
        a[:, [t, j]] = a[:, [j, t]]
        perm[t], perm[j] = perm[j], perm[t]
        unit = (int(a[t, t]) // p**v) % m
        a[t] = (a[t] * spec.inverse(unit)) % m
        pv = p**v
        for i2 in range(t + 1, r):
            q = int(a[i2, t]) // pv
            if q:
                a[i2] = (a[i2] - q * a[t]) % m
        vals.append(v)
        t += 1
    a = a[:t]
    # back-substitute so that each pivot column is reduced above its pivot
    for t2, v in enumerate(vals):
        pv = p**v
        for i2 in range(t2):
            q = int(a[i2, t2]) // pv
            if q:
                a[i2] = (a[i2] - q * a[t2]) % m
    profile = [0] * (s + 1)
    for v in vals:
        profile[v] += 1
    profile[s] = n - len(vals)
    a.setflags(write=False)
    return StandardForm(spec, tuple(perm), a, tuple(profile))


def cardinality(sf):
    """|C| = p^k with k = sum (s-i) k_i."""
    return sf.spec.p ** sf.p_dimension


def p_basis_matrix(sf, original_order=False):
    """Rows p^j * (block-i rows), j = 0..s-1-i, ordered block by block."""
    spec = sf.spec
    blocks = sf.block_of_row()
    rows = []
    start = 0
    for i, k in enumerate(sf.profile[: spec.s]):
        blk = sf.matrix[start : start + k]
        start += k
        for j in range(spec.s - i):
            for row in blk:
                rows.append((row * spec.p**j) % spec.m)
    assert start == len(blocks)
    out = np.array(rows, dtype=np.int64).reshape(-1, sf.n)
    if original_order:
        out = sf.unpermute(out)
    return PBasis(spec, out)


def p_span(rows, spec, cap=None):
    """All sum(l_i * rows[i]) with l_i in [0, p), as an array of shape (p^k, n).

    Row order is lexicographic in (l_1, ..., l_k) with l_k fastest.
    """
    rows = np.asarray(rows, dtype=np.int64)
    k, n = rows.shape
    _check_cap(spec.p**k, cap, "p-linear span")
    out = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        shifts = (np.arange(spec.p, dtype=np.int64)[:, None] * row[None, :]) % spec.m
        out = ((out[:, None, :] + shifts[None, :, :]) % spec.m).reshape(-1, n)
    return out


def enumerate_codewords(code, cap=None):
    """Every codeword exactly once, as a (|C|, n) array in original coordinates."""
    sf = standard_form(code)
    basis = p_basis_matrix(sf, original_order=True)
    return p_span(basis.rows, code.spec, cap=cap)


def iter_codewords(code, cap=None):
    for row in enumerate_codewords(code, cap=cap):
        yield row


def codeword_set(code, cap=None):
    return {tuple(int(x) for x in row) for row in enumerate_codewords(code, cap=cap)}


def _smith_columns(a, spec):
    """Diagonalise ``a`` by row and column operations.

    Returns (valuations of the diagonal, Q) with Q invertible and
    R a Q = diag(p^v) for some invertible R.
    """
    p, m = spec.p, spec.m
    a = np.array(a, dtype=np.int64) % m
    r, n = a.shape
    q_mat = np.eye(n, dtype=np.int64)
    vals = []
    t = 0
    while t < min(r, n):
        sub = a[t:, t:]
        if not sub.any():
            break
        vmat = np.vectorize(spec.valuation, otypes=[np.int64])(sub)
        i, j = np.unravel_index(np.argmin(vmat), vmat.shape)
        v = int(vmat[i, j])
        i, j = i + t, j + t
        a[[t, i]] = a[[i, t]]
        a[:, [t, j]] = a[:, [j, t]]
        q_mat[:, [t, j]] = q_mat[:, [j, t]]
        pv = p**v
        unit = (int(a[t, t]) // pv) % m
        a[t] = (a[t] * spec.inverse(unit)) % m
        for i2 in range(t + 1, r):
            c = int(a[i2, t]) // pv
            if c:
                a[i2] = (a[i2] - c * a[t]) % m
        for j2 in range(t + 1, n):
            c = int(a[t, j2]) // pv
            if c:
                a[:, j2] = (a[:, j2] - c * a[:, t]) % m
                q_mat[:, j2] = (q_mat[:, j2] - c * q_mat[:, t]) % m
        vals.append(v)
        t += 1
    return vals, q_mat


def dual(code):
    """The code of all x with x . c = 0 (mod p^s) for every codeword c.

    Solved as the kernel of the generator: with R G Q = diag(p^v),
    x = Q z where z_i lies in p^{s-v_i} Z for pivot coordinates and is free
    elsewhere.
    """
    spec = code.spec
    n = code.n
    if code.gen.shape[0] == 0:
        return LinearCode(spec, np.eye(n, dtype=np.int64))
    vals, q_mat = _smith_columns(code.gen, spec)
    rows = []
    for i in range(n):
        if i < len(vals):
            c = spec.p ** (spec.s - vals[i])
            if c % spec.m == 0:
                continue
            rows.append((q_mat[:, i] * c) % spec.m)
        else:
            rows.append(q_mat[:, i] % spec.m)
    gen = np.array(rows, dtype=np.int64).reshape(-1, n)
    return LinearCode(spec, gen)


def is_self_orthogonal(code):
    g = code.gen
    if g.shape[0] == 0:
        return True
    return not code.spec.matmul(g, g.T).any()


def is_self_dual(code):
    if not is_self_orthogonal(code):
        return False
    spec = code.spec
    return cardinality(standard_form(code)) ** 2 == spec.p ** (spec.s * code.n)


def is_p_linearly_independent(vectors, spec, cap=None):
    """True iff only the all-zero coefficient tuple over [0, p) sums to zero.

    Brute force when p^k fits the cap, otherwise a meet-in-the-middle search
    over the two halves of the list.
    """
    vecs = np.asarray(vectors, dtype=np.int64)
    if vecs.size == 0:
        return True
    vecs = vecs.reshape(len(vecs), -1) % spec.m
    k = len(vecs)
    limit = enumeration_cap() if cap is None else cap
    if spec.p**k <= limit:
        sums = p_span(vecs, spec, cap=np.inf)
        # row 0 is the empty combination
        return not (~sums[1:].any(axis=1)).any()
    h = k // 2
    if spec.p ** (k - h) > limit:
        raise CapExceeded(f"p-linear independence of {k} vectors exceeds cap {limit}")
    left = p_span(vecs[:h], spec, cap=np.inf)
    right = p_span(vecs[h:], spec, cap=np.inf)
    # sum_L + sum_R = 0  <=>  sum_L = -sum_R
    seen = {}
    for idx, row in enumerate(left):
        seen.setdefault(row.tobytes(), idx)
    neg = (-right) % spec.m
    for idx, row in enumerate(neg):
        hit = seen.get(row.tobytes())
        if hit is not None and (hit != 0 or idx != 0):
            return False
    return True


def is_additively_closed(words, spec, explain=False):
    """Closure of a finite word set under addition mod p^s.

    A set without the zero word is reported as not closed.
    """
    ws = {tuple(int(x) % spec.m for x in w) for w in words}
    if not ws:
        return (False, "empty set") if explain else False
    n = len(next(iter(ws)))
    zero = (0,) * n
    if zero not in ws:
        return (False, "zero word missing") if explain else False
    arr = np.array(sorted(ws), dtype=np.int64).reshape(len(ws), n)
    for a, b in itertools.combinations_with_replacement(range(len(arr)), 2):
        c = tuple(int(x) for x in (arr[a] + arr[b]) % spec.m)
        if c not in ws:
            msg = f"{tuple(arr[a])} + {tuple(arr[b])} = {c} missing"
            return (False, msg) if explain else False
    return (True, "") if explain else True
