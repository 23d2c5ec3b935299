"""Root data for the simple types A-G, built from Bourbaki coordinate
realizations with exact arithmetic.

Conventions (fixed throughout the package):

* A weight is the integer vector of its pairings with the simple coroots,
  ``coords[i] = <mu, alpha_i^vee>`` (the omega-basis).  Dominant means all
  coordinates >= 0.
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``; consequently the omega-basis
  coordinate vector of the simple root ``alpha_j`` is the j-th *column* of
  the Cartan matrix.
* The invariant form is normalized so that short roots have squared length
  2 (long roots 4, or 6 in G2).
* Simple roots are ordered as in the Bourbaki plates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exceptions import DatumMismatchError, UnsupportedRootSystemError
from .linalg import int_det, invert_exact, solve_exact, vec_mat

SUPPORTED_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class Weight:
    """Integer vector in the fundamental-weight basis, bound to a datum."""

    coords: tuple
    datum: "RootDatum" = field(repr=False, compare=False)

    def __post_init__(self):
        if len(self.coords) != self.datum.rank:
            raise ValueError(
                f"weight has {len(self.coords)} coordinates, datum rank is {self.datum.rank}"
            )

    def __hash__(self):
        return hash((self.coords, id(self.datum)))

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        self._check(other)
        return self.coords == other.coords

    def _check(self, other):
        if other.datum is not self.datum:
            raise DatumMismatchError("weights bound to different root data")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.datum)

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.datum)

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords), self.datum)

    def __mul__(self, k):
        return Weight(tuple(k * a for a in self.coords), self.datum)

    __rmul__ = __mul__

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return f"{self.datum.name}:[{','.join(str(c) for c in self.coords)}]"


class RootDatum:
    """Immutable description of a simple root system.

    Construction is deterministic; instances are cached per (family, rank)
    and safe to share across threads.
    """

    def __init__(self, family, rank):
        self.family = family
        self.rank = rank
        self.name = f"{family}{rank}"
        eps_simple, eps_scale = _simple_roots_eps(family, rank)
        self._eps_scale = eps_scale
        self._eps_dim = len(eps_simple[0])

        def eform(x, y):
            return eps_scale * sum(a * b for a, b in zip(x, y))

        n = rank
        lengths = [eform(a, a) for a in eps_simple]
        if min(lengths) != 2:
            raise AssertionError("short-root normalization broken")
        # cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_j, alpha_i)/(alpha_i, alpha_i)
        cartan = []
        for i in range(n):
            row = []
            for j in range(n):
                val = Fraction(2) * eform(eps_simple[j], eps_simple[i]) / lengths[i]
                assert val.denominator == 1
                row.append(int(val))
            cartan.append(row)
        self.cartan = tuple(tuple(r) for r in cartan)
        assert all(self.cartan[i][i] == 2 for i in range(n))
        assert all(self.cartan[i][j] <= 0 for i in range(n) for j in range(n) if i != j)

        # Omega-coordinates of alpha_i: i-th column of the Cartan matrix.
        self.simple_root_coords = tuple(
            tuple(self.cartan[j][i] for j in range(n)) for i in range(n)
        )
        self._d = tuple(length // 2 for length in lengths)  # (alpha_i, alpha_i)/2

        # Fundamental weights in the eps realization: omega_i lies in the span
        # of the simple roots with <omega_i, alpha_j^vee> = delta_ij.
        gram = [[Fraction(eform(eps_simple[i], eps_simple[j])) for j in range(n)] for i in range(n)]
        fw_eps = []
        for i in range(n):
            rhs = [Fraction(lengths[j], 2) if j == i else Fraction(0) for j in range(n)]
            x = solve_exact(gram, rhs)
            vec = tuple(
                sum(x[k] * Fraction(eps_simple[k][m]) for k in range(n))
                for m in range(self._eps_dim)
            )
            fw_eps.append(vec)
        self._fw_eps = tuple(fw_eps)

        # Invariant form on the weight lattice: form_matrix[i][j] = (omega_i, omega_j).
        self.form_matrix = tuple(
            tuple(eps_scale * sum(a * b for a, b in zip(fw_eps[i], fw_eps[j])) for j in range(n))
            for i in range(n)
        )
        self.form_denominator = _lcm_all(
            x.denominator for row in self.form_matrix for x in row
        )
        self.form_scaled = tuple(
            tuple(int(x * self.form_denominator) for x in row) for row in self.form_matrix
        )

        ct = [[self.cartan[j][i] for j in range(n)] for i in range(n)]  # transpose
        self.cartan_det = int_det(ct)
        inv = invert_exact(ct)
        self.cartan_t_adj = tuple(
            tuple(int(inv[i][j] * self.cartan_det) for j in range(n)) for i in range(n)
        )

        self.rho = Weight((1,) * n, self)
        self.simple_roots = tuple(Weight(c, self) for c in self.simple_root_coords)
        self.positive_roots = self._generate_positive_roots()
        expected = POSITIVE_ROOT_COUNTS[family](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{self.name}: built {len(self.positive_roots)} positive roots, expected {expected}"
            )

        self.highest_root = self._dominance_max(self.positive_roots)
        short = [r for r in self.positive_roots if self.root_length_half(r) == 1]
        self.highest_short_root = self._dominance_max(short)

        # Pairing data per positive root: coroot pairing vector and (alpha,alpha)/2.
        pairs = []
        for r in self.positive_roots:
            c = self.root_coefficients(r)
            d_alpha = self.root_length_half(r)
            vec = []
            for i in range(n):
                val = Fraction(c[i] * self._d[i], d_alpha)
                assert val.denominator == 1
                vec.append(int(val))
            pairs.append(tuple(vec))
        self.coroot_pairings = tuple(pairs)
        self.root_half_lengths = tuple(self.root_length_half(r) for r in self.positive_roots)

        self.epsilon_map = self._fw_eps if family in "ABCD" else None

    # -- construction helpers -------------------------------------------------

    def _generate_positive_roots(self):
        n = self.rank
        seen = set(self.simple_root_coords)
        frontier = list(self.simple_root_coords)
        while frontier:
            new = []
            for coords in frontier:
                for i in range(n):
                    ref = _reflect(coords, i, self.simple_root_coords)
                    if ref not in seen:
                        seen.add(ref)
                        new.append(ref)
            frontier = new
        out = []
        for coords in sorted(seen):
            cf = self._coefficients(coords)
            if cf is not None and all(x >= 0 for x in cf):
                out.append(Weight(coords, self))
        # Sort by height then lexicographically, for reproducible reports.
        out.sort(key=lambda r: (sum(self._coefficients(r.coords)), r.coords))
        return tuple(out)

    def _coefficients(self, coords):
        n = self.rank
        det = self.cartan_det
        vals = vec_mat(coords, self.cartan_t_adj)
        cf = []
        for v in vals:
            if v % det:
                return None
            cf.append(v // det)
        return tuple(cf)

    def _dominance_max(self, roots):
        from . import weights as _w  # local import to avoid a cycle

        best = roots[0]
        for r in roots[1:]:
            cmp = _w.dominance_compare(r, best)
            if cmp is _w.Dominance.FIRST_SUCCEEDS:
                best = r
        for r in roots:
            if r != best:
                cmp = _w.dominance_compare(best, r)
                assert cmp is _w.Dominance.FIRST_SUCCEEDS
        return best

    # -- public helpers --------------------------------------------------------

    def weight(self, coords):
        return Weight(tuple(int(c) for c in coords), self)

    def zero(self):
        return Weight((0,) * self.rank, self)

    def fundamental_weight(self, i):
        """omega_i with 1-based index i."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental weight index {i} out of range 1..{self.rank}")
        return Weight(tuple(int(j == i - 1) for j in range(self.rank)), self)

    def root_coefficients(self, weight):
        """Coefficients of a radical weight over the simple roots, or None."""
        coords = weight.coords if isinstance(weight, Weight) else tuple(weight)
        return self._coefficients(coords)

    def form(self, mu, nu):
        """Invariant symmetric bilinear form (mu, nu), exact rational."""
        total = Fraction(0)
        for i, a in enumerate(mu.coords):
            if a:
                for j, b in enumerate(nu.coords):
                    if b:
                        total += a * b * self.form_matrix[i][j]
        return total

    def root_length_half(self, root):
        val = self.form(root, root) / 2
        assert val.denominator == 1
        return int(val)

    def weyl_order(self, support=None):
        """Order of the Weyl group, or of the parabolic generated by the
        simple reflections in ``support`` (an iterable of 0-based indices)."""
        if support is None:
            support = range(self.rank)
        return _parabolic_order(self.cartan, tuple(sorted(set(support))))

    def __repr__(self):
        return f"RootDatum({self.family!r}, {self.rank})"


def _reflect(coords, i, simple_root_coords):
    ci = coords[i]
    if ci == 0:
        return coords
    alpha = simple_root_coords[i]
    return tuple(c - ci * a for c, a in zip(coords, alpha))


def _lcm_all(values):
    out = 1
    for v in values:
        g = _gcd(out, v)
        out = out // g * v
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _simple_roots_eps(family, rank):
    """Bourbaki simple roots in an ambient coordinate space, plus the scale c
    such that (e_i, e_j) = c * delta_ij makes short roots have squared length 2."""
    n = rank
    if family == "A":
        roots = []
        for i in range(n):
            v = [0] * (n + 1)
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return roots, 1
    if family == "B":
        roots = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        v = [0] * n
        v[n - 1] = 1
        roots.append(tuple(v))
        return roots, 2
    if family == "C":
        roots = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        v = [0] * n
        v[n - 1] = 2
        roots.append(tuple(v))
        return roots, 1
    if family == "D":
        roots = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        roots.append(tuple(v))
        return roots, 1
    if family == "G":
        return [(1, -1, 0), (-2, 1, 1)], 1
    if family == "F":
        h = Fraction(1, 2)
        return [
            (0, 1, -1, 0),
            (0, 0, 1, -1),
            (0, 0, 0, 1),
            (h, -h, -h, -h),
        ], 2
    if family == "E":
        h = Fraction(1, 2)
        alpha = [
            (h, -h, -h, -h, -h, -h, -h, h),
            (1, 1, 0, 0, 0, 0, 0, 0),
            (-1, 1, 0, 0, 0, 0, 0, 0),
            (0, -1, 1, 0, 0, 0, 0, 0),
            (0, 0, -1, 1, 0, 0, 0, 0),
            (0, 0, 0, -1, 1, 0, 0, 0),
            (0, 0, 0, 0, -1, 1, 0, 0),
            (0, 0, 0, 0, 0, -1, 1, 0),
        ]
        return alpha[:n], 1
    raise UnsupportedRootSystemError(f"unknown family {family!r}")


_WEYL_ATOMIC = {"E6": 51840, "E7": 2903040, "E8": 696729600}


def _parabolic_order(cartan, support):
    """Order of the parabolic Weyl subgroup generated by the given simple
    reflections, from the classification of the induced subdiagram."""
    if not support:
        return 1
    idx = list(support)
    adj = {i: [] for i in idx}
    for a in idx:
        for b in idx:
            if a < b and cartan[a][b] != 0:
                mult = cartan[a][b] * cartan[b][a]
                adj[a].append((b, mult))
                adj[b].append((a, mult))
    seen = set()
    order = 1
    for start in idx:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        order *= _component_order(comp, adj)
    return order


def _component_order(comp, adj):
    k = len(comp)
    mults = [m for x in comp for _, m in adj[x]]
    degrees = {x: len(adj[x]) for x in comp}
    if 3 in mults:
        assert k == 2
        return 12
    if 2 in mults:
        # Chains with one double bond: B/C for k<4 is forced; F4 needs the
        # double bond in the middle of a 4-chain.
        if k == 4 and all(degrees[x] <= 2 for x in comp):
            ends = [x for x in comp if degrees[x] == 1]
            mid = [x for x in comp if degrees[x] == 2]
            if all(m == 1 for x in ends for _, m in adj[x]) and len(mid) == 2:
                return 1152  # F4
        return (2 ** k) * _factorial(k)
    branch = [x for x in comp if degrees[x] == 3]
    if not branch:
        return _factorial(k + 1)  # type A
    arms = sorted(_arm_lengths(branch[0], adj))
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (k - 1) * _factorial(k)  # type D
    return _WEYL_ATOMIC[f"E{k}"]


def _arm_lengths(branch, adj):
    lengths = []
    for start, _ in adj[branch]:
        ln = 1
        prev, cur = branch, start
        while True:
            nxt = [y for y, _ in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    return lengths


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def build_root_datum(family: str, rank: int) -> RootDatum:
    """Construct (or fetch the cached) root datum for a simple type.

    Supported: A n>=1, B n>=2, C n>=2, D n>=4, E6/E7/E8, F4, G2.
    """
    family = str(family).upper()
    if family not in SUPPORTED_RANGES:
        raise UnsupportedRootSystemError(
            f"unknown family {family!r}; valid families are A, B, C, D, E, F, G"
        )
    lo, hi = SUPPORTED_RANGES[family]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        span = f"{lo}..{hi}" if hi is not None else f">={lo}"
        raise UnsupportedRootSystemError(
            f"{family}{rank} is not supported; valid ranks for {family} are {span}"
        )
    return RootDatum(family, rank)


def parse_group(text: str) -> RootDatum:
    """Parse a group name like 'A3' or 'E8'."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in SUPPORTED_RANGES or not text[1:].isdigit():
        raise UnsupportedRootSystemError(
            f"cannot parse group {text!r}; expected FAMILY + rank, e.g. A3, C2, E8"
        )
    return build_root_datum(text[0].upper(), int(text[1:]))


def e_constant(datum: RootDatum) -> int:
    """Prime threshold constant: 1 for A/D/E, 2 for B/C/F, 3 for G."""
    return {"A": 1, "D": 1, "E": 1, "B": 2, "C": 2, "F": 2, "G": 3}[datum.family]


def epsilon_values(datum: RootDatum, mu: Weight) -> tuple:
    """Bourbaki epsilon-coordinates of a weight, for families A-D.

    For family A the representative in the trace-zero hyperplane is returned;
    differences of coordinates (hence roots and the lattice structure) are
    normalization independent, and the omega-coordinates round-trip exactly.
    """
    if datum.epsilon_map is None:
        raise UnsupportedRootSystemError(
            f"epsilon coordinates are only defined for families A-D, not {datum.name}"
        )
    if mu.datum is not datum:
        raise DatumMismatchError("weight bound to a different datum")
    dim = datum._eps_dim
    out = [Fraction(0)] * dim
    for c, vec in zip(mu.coords, datum.epsilon_map):
        if c:
            for m in range(dim):
                out[m] += c * vec[m]
    return tuple(out)


def weight_from_epsilon(datum: RootDatum, eps: tuple) -> Weight:
    """Inverse of epsilon_values on the weight lattice (families A-D)."""
    if datum.epsilon_map is None:
        raise UnsupportedRootSystemError(
            f"epsilon coordinates are only defined for families A-D, not {datum.name}"
        )
    n = datum.rank
    x = [Fraction(v) for v in eps]
    fam = datum.family
    if fam == "A":
        coords = [x[i] - x[i + 1] for i in range(n)]
    elif fam == "B":
        coords = [x[i] - x[i + 1] for i in range(n - 1)] + [2 * x[n - 1]]
    elif fam == "C":
        coords = [x[i] - x[i + 1] for i in range(n - 1)] + [x[n - 1]]
    else:  # D
        coords = [x[i] - x[i + 1] for i in range(n - 1)]
        coords.append(x[n - 2] + x[n - 1])
    for c in coords:
        if Fraction(c).denominator != 1:
            raise ValueError(f"epsilon vector {eps} is not in the weight lattice of {datum.name}")
    return Weight(tuple(int(c) for c in coords), datum)
