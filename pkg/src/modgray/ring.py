"""Residue arithmetic in Z_{p^s}.

Vectors and matrices are plain numpy int64 arrays whose entries are kept
reduced to [0, p^s). A ``RingSpec`` carries the modulus and does the
reductions; it is the only ring object the rest of the package passes around.
"""

from dataclasses import dataclass, field

import numpy as np


class RingError(ValueError):
    """Bad ring parameters or an element/vector that does not fit the ring."""


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


MAX_PRIME = 97


@dataclass(frozen=True)
class RingSpec:
    p: int
    s: int
    m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, s = int(self.p), int(self.s)
        if not is_prime(p) or p > MAX_PRIME:
            raise RingError(f"p={p} must be a prime <= {MAX_PRIME}")
        if s < 1:
            raise RingError(f"s={s} must be >= 1")
        m = p**s
        if m >= 2**63:
            raise RingError(f"modulus {p}^{s} does not fit in 64 bits")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", m)

    def __str__(self):
        return f"Z_{self.m}"

    # --- elements -----------------------------------------------------

    def elem(self, u):
        """Canonical representative of ``u`` (negatives are reduced)."""
        return int(u) % self.m

    def check(self, u):
        u = int(u)
        if not 0 <= u < self.m:
            raise RingError(f"{u} is not a reduced element of {self}")
        return u

    def add(self, a, b):
        return (self.check(a) + self.check(b)) % self.m

    def sub(self, a, b):
        return (self.check(a) - self.check(b)) % self.m

    def mul(self, a, b):
        return (self.check(a) * self.check(b)) % self.m

    def neg(self, a):
        return (-self.check(a)) % self.m

    def is_unit(self, u):
        return int(u) % self.p != 0

    def inverse(self, u):
        if not self.is_unit(u):
            raise RingError(f"{u} is not a unit in {self}")
        return pow(int(u), -1, self.m)

    def valuation(self, u):
        """Largest t <= s with p^t | u; the valuation of 0 is s."""
        u = int(u) % self.m
        if u == 0:
            return self.s
        t = 0
        while u % self.p == 0:
            u //= self.p
            t += 1
        return t

    def digits(self, u):
        """p-adic digits (u_1, ..., u_s), least significant first."""
        u = self.check(u)
        out = []
        for _ in range(self.s):
            u, r = divmod(u, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits):
        digits = list(digits)
        if len(digits) != self.s:
            raise RingError(f"expected {self.s} digits, got {len(digits)}")
        u = 0
        for i, d in enumerate(digits):
            d = int(d)
            if not 0 <= d < self.p:
                raise RingError(f"digit {d} out of range for p={self.p}")
            u += d * self.p**i
        return u

    def elements(self):
        return np.arange(self.m, dtype=np.int64)

    # --- vectors and matrices -----------------------------------------

    def vector(self, x):
        v = np.asarray(x, dtype=np.int64).reshape(-1)
        return v % self.m

    def matrix(self, rows, ncols=None):
        a = np.asarray(rows, dtype=np.int64)
        if a.size == 0:
            return np.zeros((0, ncols or 0), dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        if a.ndim != 2:
            raise RingError("matrix must be two dimensional")
        if ncols is not None and a.shape[1] != ncols:
            raise RingError(f"expected {ncols} columns, got {a.shape[1]}")
        return a % self.m

    def vadd(self, x, y):
        x, y = np.asarray(x), np.asarray(y)
        if x.shape != y.shape:
            raise RingError(f"shape mismatch {x.shape} vs {y.shape}")
        return (x + y) % self.m

    def vsub(self, x, y):
        x, y = np.asarray(x), np.asarray(y)
        if x.shape != y.shape:
            raise RingError(f"shape mismatch {x.shape} vs {y.shape}")
        return (x - y) % self.m

    def scale(self, c, x):
        return (int(c) % self.m * np.asarray(x, dtype=np.int64)) % self.m

    def dot(self, x, y):
        return int(np.dot(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)) % self.m)

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[-1] != b.shape[0]:
            raise RingError(f"cannot multiply {a.shape} by {b.shape}")
        # entries < 2^31 keep every partial sum exact; fall back to python ints otherwise
        if self.m < 2**31 and a.shape[-1] < 2**31:
            out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
            for k in range(a.shape[-1]):
                out = (out + np.multiply.outer(a[..., k], b[k]) % self.m) % self.m
            return out
        res = np.array(a.astype(object).dot(b.astype(object)) % self.m, dtype=np.int64)
        return res


def p_adic_digits(u, spec):
    return spec.digits(u)


def from_digits(digits, spec):
    return spec.from_digits(digits)


def p_valuation(u, spec):
    return spec.valuation(u)
