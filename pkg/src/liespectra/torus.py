"""Symbolic semisimple torus elements.

Values live in the abstract group (Q/Z) + Z^k: the torsion part models a
root of unity (written additively mod 1), the free part the exponents of k
multiplicatively independent generic generators.  This realizes any finitely
generated subgroup of the multiplicative group of an algebraically closed
field of characteristic 0 and supports exact equality tests.  In
characteristic p the same model is valid as long as the torsion orders used
avoid p; reports carry the standing validity note from the mult module.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DatumMismatchError, UnsupportedRootSystemError
from .linalg import hermite_normal_form, smith_normal_form
from .rootdata import RootDatum, Weight

DEFAULT_TORSION_ORDERS = (1, 2, 3, 4)


@dataclass(frozen=True)
class ValueGroupElement:
    """Element of (Q/Z) + Z^k; torsion is a Fraction reduced into [0, 1)."""

    torsion: Fraction
    free: tuple

    @staticmethod
    def make(torsion, free):
        t = Fraction(torsion) % 1
        return ValueGroupElement(t, tuple(int(x) for x in free))

    @staticmethod
    def identity(k):
        return ValueGroupElement(Fraction(0), (0,) * k)

    @property
    def is_identity(self):
        return self.torsion == 0 and not any(self.free)

    def __add__(self, other):
        if len(self.free) != len(other.free):
            raise ValueError("value-group elements from different ambient contexts")
        return ValueGroupElement(
            (self.torsion + other.torsion) % 1,
            tuple(a + b for a, b in zip(self.free, other.free)),
        )

    def __neg__(self):
        return ValueGroupElement((-self.torsion) % 1, tuple(-a for a in self.free))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return ValueGroupElement((k * self.torsion) % 1, tuple(k * a for a in self.free))

    def sort_key(self):
        return (self.torsion, self.free)

    def to_json(self):
        return {"torsion": str(self.torsion), "free": list(self.free)}

    def render(self, names=None, denoms=None):
        """Human-readable monomial, e.g. '-a^2*b' for torsion 1/2, free (2,1)."""
        k = len(self.free)
        if names is None:
            names = default_generator_names(k)
        if denoms is None:
            denoms = (1,) * k
        parts = []
        for x, name, den in zip(self.free, names, denoms):
            if x == 0:
                continue
            e = Fraction(x, den)
            if e == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{e}" if e.denominator == 1 else f"{name}^({e})")
        prefix = ""
        if self.torsion == Fraction(1, 2):
            prefix = "-"
        elif self.torsion != 0:
            prefix = f"u({self.torsion})" + ("*" if parts else "")
        body = "*".join(parts)
        if not body:
            return prefix + "1" if prefix in ("-", "") else f"u({self.torsion})"
        return prefix + body


def default_generator_names(k):
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < len(letters) else f"g{i}" for i in range(k))


@dataclass(frozen=True)
class TorusElement:
    """Homomorphism from the weight lattice into the value group, given by
    one value per fundamental weight."""

    datum: RootDatum
    assignments: tuple  # one ValueGroupElement per fundamental weight
    label: str = ""
    gen_names: tuple = None
    gen_denoms: tuple = None

    def __post_init__(self):
        if len(self.assignments) != self.datum.rank:
            raise ValueError(
                f"need {self.datum.rank} assignments for {self.datum.name}, "
                f"got {len(self.assignments)}"
            )
        ks = {len(v.free) for v in self.assignments}
        if len(ks) > 1:
            raise ValueError("assignments use free vectors of different lengths")
        k = ks.pop() if ks else 0
        if self.gen_names is None:
            object.__setattr__(self, "gen_names", default_generator_names(k))
        if self.gen_denoms is None:
            object.__setattr__(self, "gen_denoms", (1,) * k)

    @property
    def free_rank(self):
        return len(self.assignments[0].free) if self.assignments else 0

    def identity_value(self):
        return ValueGroupElement.identity(self.free_rank)

    def render_value(self, v):
        return v.render(self.gen_names, self.gen_denoms)

    def to_json(self):
        return {"omega_values": [v.to_json() for v in self.assignments]}


def torus_element(datum: RootDatum, assignments, label="", gen_names=None, gen_denoms=None):
    vals = tuple(
        v if isinstance(v, ValueGroupElement) else ValueGroupElement.make(*v)
        for v in assignments
    )
    return TorusElement(datum, vals, label, gen_names, gen_denoms)


def evaluate(s: TorusElement, mu: Weight) -> ValueGroupElement:
    """Value of the character mu at s (Z-linear in mu)."""
    if mu.datum is not s.datum:
        raise DatumMismatchError("weight bound to a different datum than the torus element")
    k = s.free_rank
    t = Fraction(0)
    free = [0] * k
    for c, v in zip(mu.coords, s.assignments):
        if c:
            t += c * v.torsion
            for j in range(k):
                free[j] += c * v.free[j]
    return ValueGroupElement(t % 1, tuple(free))


def is_regular(s: TorusElement) -> bool:
    """True iff no root evaluates to the identity at s."""
    return all(not evaluate(s, r).is_identity for r in s.datum.positive_roots)


def is_central(s: TorusElement) -> bool:
    """True iff every simple root evaluates to the identity at s."""
    return all(evaluate(s, a).is_identity for a in s.datum.simple_roots)


def separates_weights(s: TorusElement, weight_set) -> bool:
    """True iff evaluation at s is injective on the given set of weights."""
    values = set()
    count = 0
    for w in set(weight_set):
        values.add(evaluate(s, w).sort_key())
        count += 1
    return len(values) == count


# -- strata -------------------------------------------------------------------


@dataclass(frozen=True)
class StratumSpec:
    """A subfamily of torus elements cut by forcing the given characters to
    evaluate to the identity, with optional roots of unity on the torsion
    generators of the quotient lattice."""

    datum: RootDatum
    kernel_weights: tuple
    torsion_choices: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "kernel_weights", tuple(self.kernel_weights))
        for w in self.kernel_weights:
            if w.datum is not self.datum:
                raise DatumMismatchError("kernel weight bound to a different datum")
        d, _, _ = self._snf()
        if len(d) == self.datum.rank and all(x == 1 for x in d):
            raise ValueError(
                "kernel weights generate the full character lattice; only the identity survives"
            )

    def _snf(self):
        rows = [list(w.coords) for w in self.kernel_weights]
        if not rows:
            return [], [], [[int(i == j) for j in range(self.datum.rank)] for i in range(self.datum.rank)]
        return smith_normal_form(rows)


def generic_stratum_element(spec: StratumSpec, seed: int = 0) -> TorusElement:
    """Generic element of the stratum: the quotient of the weight lattice by
    the kernel is computed by Smith normal form; free quotient generators
    receive independent generic generators, torsion quotient generators the
    requested (or seeded) roots of unity.

    Evaluation collisions of the result are exactly the ones forced by the
    kernel together with the chosen torsion values.
    """
    datum = spec.datum
    n = datum.rank
    d, _, v = spec._snf()
    r = len(d)
    if r == n:
        raise ValueError("stratum is central/finite: kernel has full rank")
    torsion_slots = [i for i in range(r) if d[i] > 1]
    free_slots = list(range(r, n))
    k = len(free_slots)
    rng = random.Random((seed, tuple(w.coords for w in spec.kernel_weights)).__repr__())
    torsion_values = {}
    for slot in torsion_slots:
        if slot in spec.torsion_choices:
            t = Fraction(spec.torsion_choices[slot]) % 1
            if (t * d[slot]).denominator != 1:
                raise ValueError(
                    f"torsion choice {t} is invalid for a quotient generator of order {d[slot]}"
                )
        else:
            orders = [m for m in DEFAULT_TORSION_ORDERS if d[slot] % m == 0]
            m = rng.choice(orders)
            t = Fraction(rng.randrange(m), m)
        torsion_values[slot] = t
    assignments = []
    for i in range(n):
        x = [v[i][col] for col in range(n)]  # quotient coordinates of omega_i
        t = sum((x[slot] * torsion_values[slot] for slot in torsion_slots), Fraction(0)) % 1
        free = tuple(x[slot] for slot in free_slots)
        assignments.append(ValueGroupElement(t, free))
    label = describe_stratum(spec, torsion_values)
    return TorusElement(datum, tuple(assignments), label=label)


def describe_stratum(spec: StratumSpec, torsion_values=None):
    kern = ",".join(str(w) for w in spec.kernel_weights) or "generic"
    tv = torsion_values if torsion_values is not None else spec.torsion_choices
    if tv:
        tpart = ";".join(f"t{slot}={val}" for slot, val in sorted(tv.items()))
        return f"ker({kern})[{tpart}]"
    return f"ker({kern})"


def generic_regular_element(datum: RootDatum) -> TorusElement:
    """Generic element of the whole torus (empty kernel): assignments are
    independent generators, so evaluation is injective on the lattice."""
    return generic_stratum_element(StratumSpec(datum, ()), seed=0)


def stratum_torsion_decorations(spec: StratumSpec, max_order: int = 4):
    """All torsion-choice maps for the stratum's torsion quotient generators
    with values of multiplicative order <= max_order (the trivial map
    first)."""
    d, _, _ = spec._snf()
    slots = [i for i in range(len(d)) if d[i] > 1]
    per_slot = []
    for slot in slots:
        vals = []
        for num in range(d[slot]):
            t = Fraction(num, d[slot])
            if t == 0 or t.denominator <= max_order:
                vals.append(t)
        per_slot.append(vals)
    out = []
    for combo in itertools.product(*per_slot):
        out.append(dict(zip(slots, combo)))
    return out or [{}]


def _lattice_key(rows, n):
    return hermite_normal_form([tuple(r) for r in rows])


def canonical_root_strata(datum: RootDatum, depth: int):
    """Canonical root-kernel strata up to Weyl conjugacy.

    Depth 1 yields the kernels generated by a single root (one per root
    length); depth 2 adds kernels generated by pairs of roots.  Kernels of
    full rank (possible only when the pair count reaches the rank) are
    omitted since they carry no generic element.
    """
    if depth < 1:
        raise ValueError("stratum depth must be >= 1")
    n = datum.rank
    alpha = datum.simple_root_coords
    pos = [r.coords for r in datum.positive_roots]

    def w_minimal_key(rows):
        start = _lattice_key(rows, n)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for key in frontier:
                for i in range(n):
                    refl = []
                    for row in key:
                        ci = row[i]
                        refl.append(tuple(c - ci * a for c, a in zip(row, alpha[i])))
                    nk = _lattice_key(refl, n)
                    if nk not in seen:
                        seen.add(nk)
                        new.append(nk)
            frontier = new
        return min(seen)

    generators = []
    if depth >= 1:
        generators.extend([r] for r in pos)
    if depth >= 2:
        for a, b in itertools.combinations(pos, 2):
            generators.append([a, b])
    canon = {}
    for gens in generators:
        key = _lattice_key(gens, n)
        if len(key) >= n:
            continue  # full-rank kernel: no generic element
        canon.setdefault(w_minimal_key(gens), None)
    out = []
    for key in sorted(canon):
        out.append(tuple(Weight(row, datum) for row in key))
    return out


# -- epsilon shorthand ---------------------------------------------------------


class EpsilonToken:
    """One epsilon value: a root-of-unity offset plus a monomial in named
    generic symbols."""

    __slots__ = ("torsion", "powers")

    def __init__(self, torsion, powers):
        self.torsion = Fraction(torsion) % 1
        self.powers = dict(powers)


def parse_epsilon_shorthand(text: str):
    """Parse a comma-separated epsilon tuple such as 'a,a,-1/a,-1/a'.

    Grammar per entry: optional sign, then '1', 'i', a symbol, '1/SYM',
    'SYM^K' or '1/SYM^K'.  '-' contributes torsion 1/2 and 'i' torsion 1/4.
    """
    tokens = []
    for pos, raw in enumerate(text.split(",")):
        item = raw.strip()
        if not item:
            raise ValueError(f"empty epsilon entry at position {pos + 1}")
        torsion = Fraction(0)
        if item.startswith("-"):
            torsion += Fraction(1, 2)
            item = item[1:].strip()
        elif item.startswith("+"):
            item = item[1:].strip()
        invert = False
        if item.startswith("1/"):
            invert = True
            item = item[2:].strip()
        if item == "1" and not invert:
            tokens.append(EpsilonToken(torsion, {}))
            continue
        if item == "i" and not invert:
            tokens.append(EpsilonToken(torsion + Fraction(1, 4), {}))
            continue
        name, exp = item, 1
        if "^" in item:
            name, _, etext = item.partition("^")
            name = name.strip()
            try:
                exp = int(etext.strip())
            except ValueError:
                raise ValueError(f"bad exponent in epsilon entry {raw.strip()!r}") from None
        if not name or not name[0].isalpha() or not name.replace("_", "").isalnum() or name == "i":
            raise ValueError(f"bad epsilon entry {raw.strip()!r} at position {pos + 1}")
        if invert:
            exp = -exp
        tokens.append(EpsilonToken(torsion, {name: exp}))
    return tokens


def torus_from_epsilon(datum: RootDatum, tokens, label="") -> TorusElement:
    """Compile epsilon values (EpsilonToken list) into a torus element, for
    the classical families.

    For families B and D the fundamental spin characters are half-sums of
    epsilons; each named symbol is therefore modelled as the square of an
    internal generator (display shows fractional exponents of the symbol),
    and half torsion takes the representative in [0, 1/2).  The resulting
    element is one of the two square-root branches; root values, hence
    regularity and centrality, do not depend on the branch.
    """
    fam = datum.family
    if fam not in "ABCD":
        raise UnsupportedRootSystemError(
            f"epsilon shorthand applies to families A-D only, not {datum.name}"
        )
    n = datum.rank
    expect = n + 1 if fam == "A" else n
    if len(tokens) != expect:
        raise ValueError(
            f"{datum.name} needs {expect} epsilon values, got {len(tokens)}"
        )
    names = []
    for tok in tokens:
        for name in tok.powers:
            if name not in names:
                names.append(name)
    k = len(names)
    scale = 2 if fam in "BD" else 1
    vals = []
    for tok in tokens:
        free = [0] * k
        for name, exp in tok.powers.items():
            free[names.index(name)] += exp * scale
        vals.append((tok.torsion, tuple(free)))

    def partial(upto, signs=None):
        t = Fraction(0)
        free = [0] * k
        for idx in range(upto):
            sign = 1 if signs is None else signs[idx]
            t += sign * vals[idx][0]
            for j in range(k):
                free[j] += sign * vals[idx][1][j]
        return t % 1, tuple(free)

    def halve(t, free):
        if any(x % 2 for x in free):
            raise ValueError(
                "epsilon values do not determine the spin characters; free exponents must halve"
            )
        return (t % 1) / 2, tuple(x // 2 for x in free)

    assignments = []
    if fam == "A":
        t_all, f_all = partial(n + 1)
        if t_all != 0 or any(f_all):
            raise ValueError(
                "epsilon values for family A must have product 1 (determinant one)"
            )
        for i in range(1, n + 1):
            t, f = partial(i)
            assignments.append(ValueGroupElement(t, f))
    elif fam in ("B", "C"):
        for i in range(1, n):
            t, f = partial(i)
            assignments.append(ValueGroupElement(t, f))
        t, f = partial(n)
        if fam == "B":
            t, f = halve(t, f)
        assignments.append(ValueGroupElement(t % 1, f))
    else:  # D
        for i in range(1, n - 1):
            t, f = partial(i)
            assignments.append(ValueGroupElement(t, f))
        signs = [1] * (n - 1) + [-1]
        t, f = partial(n, signs)
        assignments.append(ValueGroupElement(*halve(t, f)))
        t, f = partial(n)
        assignments.append(ValueGroupElement(*halve(t, f)))
    denoms = (scale,) * k
    return TorusElement(datum, tuple(assignments), label=label,
                        gen_names=tuple(names), gen_denoms=denoms)


def torus_from_epsilon_text(datum: RootDatum, text: str, label="") -> TorusElement:
    return torus_from_epsilon(datum, parse_epsilon_shorthand(text), label=label or text)


def torus_from_json(datum: RootDatum, payload, label="") -> TorusElement:
    """Build a torus element from the JSON wire format
    {"omega_values": [{"torsion": "1/2", "free": [1, 0]}, ...]}."""
    try:
        raw = payload["omega_values"]
        vals = [
            ValueGroupElement.make(Fraction(item.get("torsion", "0")), item.get("free", []))
            for item in raw
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad torus element JSON: {exc}") from None
    k = max((len(v.free) for v in vals), default=0)
    vals = [ValueGroupElement(v.torsion, v.free + (0,) * (k - len(v.free))) for v in vals]
    return TorusElement(datum, tuple(vals), label=label)
