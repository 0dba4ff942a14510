"""Gray maps between modular rings.

``GrayMap`` is a lookup table: residue u of the domain ring goes to a tuple
of ``width`` residues over the codomain ring. The modular map eta sends
Z_{2^s} to pairs over Z_{2^{s-1}}; chaining eta^s, ..., eta^2 lands in
Z_2^{2^{s-1}}, which is where Carlet's generalized map lives.
"""

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import codes
from .ring import RingError, RingSpec
from .weights import WeightKind, weight_table


class Layout(str, enum.Enum):
    # (a_1, b_1, a_2, b_2, ...)
    BLOCKWISE = "blockwise"
    # (a_1, ..., a_n, b_1, ..., b_n)
    SPLIT = "split"


class GrayMapError(ValueError):
    pass


XI_GAP_MESSAGE = "xi undefined beyond s=4 (paper gap): only the s=2,3,4 tables are known"


@dataclass(frozen=True, eq=False)
class GrayMap:
    name: str
    domain: RingSpec
    codomain: RingSpec
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != self.domain.m:
            raise GrayMapError(f"{self.name}: table must have {self.domain.m} rows")
        if t.size and (t.min() < 0 or t.max() >= self.codomain.m):
            raise GrayMapError(f"{self.name}: image entries must lie in {self.codomain}")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def width(self):
        return self.table.shape[1]

    def __call__(self, u):
        u = int(u)
        if not 0 <= u < self.domain.m:
            raise GrayMapError(f"{self.name}: {u} is out of range for {self.domain}")
        return tuple(int(x) for x in self.table[u])

    def as_dict(self):
        return {u: tuple(int(x) for x in row) for u, row in enumerate(self.table)}

    def is_injective(self):
        return len({row.tobytes() for row in self.table}) == self.domain.m

    def then(self, other, layout=Layout.BLOCKWISE):
        """Apply ``self`` and then ``other`` coordinate-wise on the result."""
        if other.domain != self.codomain:
            raise GrayMapError(f"cannot compose {self.name} -> {other.name}: ring mismatch")
        table = extend(other, self.table, layout)
        return GrayMap(f"{other.name}*{self.name}", self.domain, other.codomain, table)


def _two_power_spec(s):
    if s < 1:
        raise GrayMapError(f"s={s} must be >= 1")
    return RingSpec(2, s)


def eta_value(s, u):
    """Four-branch rule on the quarters A_1..A_4 of Z_{2^s}."""
    if s < 2:
        raise GrayMapError(f"eta needs s >= 2, got {s}")
    q = 2 ** (s - 2)
    u = int(u)
    if not 0 <= u < 4 * q:
        raise GrayMapError(f"{u} is out of range for Z_{4 * q}")
    if u < q:
        return (u, u)
    if u < 2 * q:
        return (u - q, u)
    if u < 3 * q:
        return (u - q, u - q)
    return (u - 2 * q, u - 3 * q)


def eta(s):
    table = [eta_value(s, u) for u in range(2**s)]
    return GrayMap(f"eta{s}", _two_power_spec(s), _two_power_spec(s - 1), table)


XI_SIZES = (2, 3, 4)


def xi(s):
    """Permuted modular map, read from the shipped table (s = 2, 3, 4 only)."""
    if s not in XI_SIZES:
        raise GrayMapError(XI_GAP_MESSAGE)
    from .catalog import get_fixture

    table = get_fixture(f"xi_table_s{s}").table
    return GrayMap(f"xi{s}", _two_power_spec(s), _two_power_spec(s - 1), table)


def xi_value(s, u):
    return xi(s)(u)


def modular_map(variant, s):
    variant = str(variant).lower()
    if variant == "eta":
        return eta(s)
    if variant == "xi":
        return xi(s)
    raise GrayMapError(f"unknown modular map variant {variant!r}")


# --- Carlet's generalized map --------------------------------------------


def default_point_order(p, s):
    """Points (y_1, ..., y_{s-1}) of Z_p^{s-1}, indexed by j with y_1 fastest."""
    pts = []
    for j in range(p ** (s - 1)):
        y = []
        for _ in range(s - 1):
            j, r = divmod(j, p)
            y.append(r)
        pts.append(tuple(y))
    return pts


def carlet(p, s, point_order=None):
    """u -> evaluation vector of y |-> u_s + sum u_i y_i over Z_p^{s-1}."""
    if s < 2:
        raise GrayMapError(f"Carlet's map needs s >= 2, got {s}")
    spec = RingSpec(p, s)
    pts = default_point_order(p, s) if point_order is None else [tuple(y) for y in point_order]
    if sorted(pts) != sorted(default_point_order(p, s)):
        raise GrayMapError("point order must list every point of Z_p^{s-1} exactly once")
    y = np.array(pts, dtype=np.int64).reshape(len(pts), s - 1)
    dig = np.array([spec.digits(u) for u in range(spec.m)], dtype=np.int64)
    table = (dig[:, s - 1 : s] + dig[:, : s - 1] @ y.T) % p
    return GrayMap(f"carlet{p},{s}", spec, RingSpec(p, 1), table)


def carlet_value(p, s, u, point_order=None):
    return carlet(p, s, point_order)(u)


# --- compositions ----------------------------------------------------------


def eta_chain(s, stop=1):
    """The stages eta^s, eta^{s-1}, ..., eta^{stop+1}."""
    return [eta(t) for t in range(s, stop, -1)]


def compose_modular(s, variants=None, layout=Layout.BLOCKWISE):
    """Z_{2^s} -> Z_2^{2^{s-1}} as eta^s followed by ... followed by eta^2.

    ``variants`` optionally names the map used at each stage (outermost
    first), e.g. ["xi", "eta"] for s=3.
    """
    if s < 2:
        raise GrayMapError(f"s={s} must be >= 2")
    if variants is None:
        stages = eta_chain(s)
    else:
        variants = list(variants)
        if len(variants) != s - 1:
            raise GrayMapError(f"need {s - 1} stage variants, got {len(variants)}")
        stages = [modular_map(v, t) for v, t in zip(variants, range(s, 1, -1))]
    out = stages[0]
    for st in stages[1:]:
        out = out.then(st, layout)
    return GrayMap(f"compose{s}", out.domain, out.codomain, out.table)


def vega_map(s, layout=Layout.BLOCKWISE):
    """Z_{2^s} -> Z_4^{2^{s-2}}: eta^s followed by ... followed by eta^3."""
    if s < 3:
        raise GrayMapError(f"Vega's map needs s >= 3, got {s}")
    stages = eta_chain(s, stop=2)
    out = stages[0]
    for st in stages[1:]:
        out = out.then(st, layout)
    return GrayMap(f"vega{s}", out.domain, out.codomain, out.table)


def apply_stages(stages, v, layout=Layout.BLOCKWISE):
    """Push a vector (or rows of a matrix) through each stage in turn."""
    out = np.asarray(v, dtype=np.int64)
    for st in stages:
        out = extend(st, out, layout)
    return out


# --- vector and matrix extensions ------------------------------------------


def extend(gmap, v, layout=Layout.BLOCKWISE):
    """Coordinate-wise image of a vector, or of each row of a 2-d array."""
    layout = Layout(layout)
    v = np.asarray(v, dtype=np.int64)
    if v.size and (v.min() < 0 or v.max() >= gmap.domain.m):
        raise RingError(f"{gmap.name}: entries must lie in {gmap.domain}")
    img = gmap.table[v]  # (..., n, width)
    if layout is Layout.SPLIT:
        img = np.swapaxes(img, -1, -2)
    return img.reshape(v.shape[:-1] + (v.shape[-1] * gmap.width,))


def map_generator_rows(gmap, layout, code):
    """Row-wise image of the generator (not, in general, a generator of the image code)."""
    _check_domain(gmap, code)
    return extend(gmap, code.gen, layout)


def map_codeword_set(gmap, layout, code, cap=None):
    _check_domain(gmap, code)
    words = codes.enumerate_codewords(code, cap=cap)
    return {tuple(int(x) for x in row) for row in extend(gmap, words, layout)}


def _check_domain(gmap, code):
    if code.spec != gmap.domain:
        raise RingError(f"{gmap.name} acts on {gmap.domain}, code is over {code.spec}")


def rm2_generator(s):
    """First-order Reed-Muller generator of length 2 over Z_{2^{s-1}}."""
    if s < 2:
        raise GrayMapError(f"s={s} must be >= 2")
    return codes.LinearCode(_two_power_spec(s - 1), [[1, 1], [0, 2 ** (s - 2) % 2 ** (s - 1)]])


def image_is_rm2(s):
    """Is {eta^s(u)} exactly the span of (1,1) and (0, 2^{s-2})?"""
    image = set(eta(s).as_dict().values())
    return image == codes.codeword_set(rm2_generator(s))


# --- verifiers -------------------------------------------------------------


@dataclass
class IsometryReport:
    checked_pairs: int
    violations: list
    expected_pairs: int

    @property
    def verdict(self):
        return not self.violations and self.checked_pairs == self.expected_pairs

    def summary(self):
        return f"{self.checked_pairs} pairs, {len(self.violations)} violations"


def _domain_vectors(spec, n):
    return np.array(list(itertools.product(range(spec.m), repeat=n)), dtype=np.int64).reshape(-1, n)


def verify_isometry(gmap, layout=Layout.BLOCKWISE, src_weight="homogeneous", dst_weight="homogeneous",
                    n=1, cap=None, max_violations=1000):
    """Compare d(u, v) with d(image u, image v) over every pair of length-n vectors."""
    src_weight = WeightKind.parse(src_weight)
    dst_weight = WeightKind.parse(dst_weight)
    npairs = gmap.domain.m ** (2 * n)
    codes._check_cap(npairs, cap, "isometry pairs")
    src, dst = gmap.domain, gmap.codomain
    real = src_weight.is_real or dst_weight.is_real
    ws = weight_table(src, src_weight)
    wd = weight_table(dst, dst_weight)
    vecs = _domain_vectors(src, n)
    imgs = extend(gmap, vecs, layout)
    violations = []
    checked = 0
    chunk = max(1, 2**20 // max(1, len(vecs) * imgs.shape[1]))
    for start in range(0, len(vecs), chunk):
        u = vecs[start : start + chunk]
        iu = imgs[start : start + chunk]
        lhs = ws[(u[:, None, :] - vecs[None, :, :]) % src.m].sum(axis=-1)
        rhs = wd[(iu[:, None, :] - imgs[None, :, :]) % dst.m].sum(axis=-1)
        bad = ~np.isclose(lhs, rhs, rtol=0, atol=1e-9) if real else lhs != rhs
        checked += lhs.size
        for a, b in zip(*np.nonzero(bad)):
            if len(violations) >= max_violations:
                break
            violations.append((_tup(u[a]), _tup(vecs[b]), _num(lhs[a, b]), _num(rhs[a, b])))
    return IsometryReport(checked, violations, npairs)


def _tup(v):
    v = tuple(int(x) for x in v)
    return v[0] if len(v) == 1 else v


def _num(x):
    return float(x) if isinstance(x, (float, np.floating)) else int(x)


@dataclass
class CompositionReport:
    s: int
    status: str  # "exact", "permutation" or "mismatch"
    permutation: tuple = None
    composed: np.ndarray = field(default=None, repr=False)
    carlet: np.ndarray = field(default=None, repr=False)

    @property
    def verdict(self):
        return self.status == "exact"

    def summary(self):
        if self.status == "exact":
            return "exact match under default point order"
        if self.status == "permutation":
            return f"equal up to coordinate permutation {list(self.permutation)}"
        return "mismatch: not equal under any coordinate permutation"


def find_column_permutation(a, b):
    """pi with a[:, pi[j]] == b[:, j] for all j, or None."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return None
    pool = {}
    for j in range(a.shape[1]):
        pool.setdefault(a[:, j].tobytes(), []).append(j)
    pi = []
    for j in range(b.shape[1]):
        cands = pool.get(b[:, j].tobytes())
        if not cands:
            return None
        pi.append(cands.pop(0))
    return tuple(pi)


def verify_composition_theorem(s, point_order=None):
    """Does eta^2 o ... o eta^s reproduce Carlet's map at p=2?"""
    if not 2 <= s <= 12:
        raise GrayMapError(f"s={s} outside the supported range 2..12")
    comp = compose_modular(s).table
    car = carlet(2, s, point_order).table
    if np.array_equal(comp, car):
        return CompositionReport(s, "exact", None, comp, car)
    pi = find_column_permutation(comp, car)
    if pi is not None:
        return CompositionReport(s, "permutation", pi, comp, car)
    return CompositionReport(s, "mismatch", None, comp, car)


def verify_mapped_basis_independence(code, layout=Layout.BLOCKWISE, gmap=None, cap=None):
    """Are the eta-images of the p-basis rows 2-linearly independent over Z_{2^{s-1}}?"""
    spec = code.spec
    if spec.p != 2 or spec.s < 2:
        raise GrayMapError("the modular map needs a code over Z_{2^s} with s >= 2")
    gmap = eta(spec.s) if gmap is None else gmap
    basis = codes.p_basis_matrix(codes.standard_form(code), original_order=True)
    images = extend(gmap, basis.rows, layout)
    return codes.is_p_linearly_independent(images, gmap.codomain, cap=cap)
