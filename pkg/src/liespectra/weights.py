"""Lattice combinatorics on weights: dominance order, Weyl orbits,
subdominant enumeration, radical/minuscule tests and level stratification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exceptions import DatumMismatchError, ResourceLimitError
from .rootdata import RootDatum, Weight
from . import kernels

DEFAULT_ORBIT_BOUND = 10_000_000


class Dominance(enum.Enum):
    EQUAL = "equal"
    FIRST_SUCCEEDS = "first-succeeds"
    SECOND_SUCCEEDS = "second-succeeds"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class LevelAssignment:
    weight: Weight
    level: int


def _same_datum(lam, mu):
    if lam.datum is not mu.datum:
        raise DatumMismatchError("weights bound to different root data")
    return lam.datum


def dominance_compare(lam: Weight, mu: Weight) -> Dominance:
    """Compare two weights in the dominance order (difference a nonzero
    nonnegative integer combination of simple roots)."""
    datum = _same_datum(lam, mu)
    if lam.coords == mu.coords:
        return Dominance.EQUAL
    diff = tuple(a - b for a, b in zip(lam.coords, mu.coords))
    coeffs = datum.root_coefficients(diff)
    if coeffs is None:
        return Dominance.INCOMPARABLE
    if all(c >= 0 for c in coeffs):
        return Dominance.FIRST_SUCCEEDS
    if all(c <= 0 for c in coeffs):
        return Dominance.SECOND_SUCCEEDS
    return Dominance.INCOMPARABLE


def dominates(lam: Weight, mu: Weight) -> bool:
    """lam >= mu in the dominance order."""
    return dominance_compare(lam, mu) in (Dominance.EQUAL, Dominance.FIRST_SUCCEEDS)


def is_radical(mu: Weight) -> bool:
    """True iff mu lies in the root lattice."""
    return mu.datum.root_coefficients(mu.coords) is not None


def dominant_representative(mu: Weight):
    """The dominant weight in the Weyl orbit of mu, with a reflection word.

    Applying the simple reflections in list order to mu yields the
    representative: rep = s_{w[-1]}(... s_{w[0]}(mu) ...).
    """
    datum = mu.datum
    n = datum.rank
    alpha = datum.simple_root_coords
    c = list(mu.coords)
    word = []
    while True:
        for i in range(n):
            if c[i] < 0:
                ci = c[i]
                ai = alpha[i]
                for j in range(n):
                    c[j] -= ci * ai[j]
                word.append(i)
                break
        else:
            return Weight(tuple(c), datum), tuple(word)


def reflect_simple(mu: Weight, i: int) -> Weight:
    """Simple reflection s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    datum = mu.datum
    ci = mu.coords[i]
    if ci == 0:
        return mu
    ai = datum.simple_root_coords[i]
    return Weight(tuple(c - ci * a for c, a in zip(mu.coords, ai)), datum)


def orbit_size(mu: Weight) -> int:
    """Exact Weyl orbit size from the stabilizer of the dominant
    representative (a parabolic subgroup)."""
    datum = mu.datum
    rep, _ = dominant_representative(mu)
    support = [i for i, c in enumerate(rep.coords) if c == 0]
    return datum.weyl_order() // datum.weyl_order(support)


def weyl_orbit(mu: Weight, bound: int = DEFAULT_ORBIT_BOUND):
    """Full Weyl orbit of mu as a sorted tuple of Weights.

    The exact orbit size is computed first; orbits larger than the safety
    bound are rejected before any enumeration is attempted.
    """
    size = orbit_size(mu)
    if size > bound:
        raise ResourceLimitError(
            f"Weyl orbit of {mu} has {size} elements, exceeding the orbit bound {bound}"
        )
    datum = mu.datum
    coords = kernels.weyl_orbit(datum.rank, datum.simple_root_coords, mu.coords)
    assert len(coords) == size
    return tuple(Weight(c, datum) for c in coords)


def subdominant_weights(lam: Weight):
    """All dominant mu with mu <= lam (including lam itself)."""
    if not lam.is_dominant:
        raise ValueError(f"subdominant enumeration needs a dominant weight, got {lam}")
    datum = lam.datum
    coords = kernels.dominant_subdominants(
        datum.rank,
        datum.simple_root_coords,
        tuple(r.coords for r in datum.positive_roots),
        datum.cartan_t_adj,
        datum.cartan_det,
        lam.coords,
    )
    return tuple(Weight(c, datum) for c in coords)


def minimal_nonzero_subdominant(lam: Weight):
    """The set of minimal nonzero dominant weights subdominant to lam.

    Returned as a tuple (the minimal antichain); it is a singleton in the
    common cases but uniqueness is not guaranteed in general, so callers
    select explicitly.  Returns () when lam is minuscule.
    """
    if not lam.is_dominant or lam.is_zero:
        raise ValueError("minimal nonzero subdominant needs a nonzero dominant weight")
    candidates = [m for m in subdominant_weights(lam) if not m.is_zero and m != lam]
    minimal = []
    for m in candidates:
        if not any(
            dominance_compare(m, other) is Dominance.FIRST_SUCCEEDS for other in candidates
        ):
            minimal.append(m)
    return tuple(sorted(minimal, key=lambda w: w.coords))


_LEVEL_CACHE: dict = {}


def weight_level(lam: Weight) -> int:
    """Level of a dominant weight: 1 + the longest chain of dominant weights
    strictly below it in the dominance order.

    Chains between dominant weights refine into single positive-root steps
    through dominant weights, so the longest chain satisfies the local
    recursion over lam - beta for positive roots beta.
    """
    if not lam.is_dominant:
        raise ValueError(f"weight level needs a dominant weight, got {lam}")
    datum = lam.datum
    cache = _LEVEL_CACHE.setdefault(id(datum), {})
    roots = tuple(r.coords for r in datum.positive_roots)

    def rec(coords):
        got = cache.get(coords)
        if got is not None:
            return got
        best = 0
        for root in roots:
            cand = tuple(a - b for a, b in zip(coords, root))
            if all(x >= 0 for x in cand):
                lvl = rec(cand)
                if lvl > best:
                    best = lvl
        cache[coords] = best + 1
        return best + 1

    return rec(lam.coords)


def is_minuscule(lam: Weight) -> bool:
    """True iff lam is nonzero and of level 1 (single Weyl orbit module)."""
    if not lam.is_dominant:
        raise ValueError(f"minuscule test needs a dominant weight, got {lam}")
    return not lam.is_zero and weight_level(lam) == 1


def enumerate_dominant_by_sum(datum: RootDatum, height_bound: int):
    """Dominant weights with coordinate sum <= height_bound, sorted."""
    n = datum.rank
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(Weight(tuple(prefix), datum))
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c)

    rec([], height_bound)
    out.sort(key=lambda w: (sum(w.coords), w.coords))
    return tuple(out)


def level_sets(datum: RootDatum, max_level: int, height_bound: int):
    """Level assignments for all dominant weights within the coordinate-sum
    bound, restricted to levels <= max_level.

    A weight's level never depends on the bound; the bound only controls
    which weights are enumerated.
    """
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    out = []
    for w in enumerate_dominant_by_sum(datum, height_bound):
        lvl = weight_level(w)
        if lvl <= max_level:
            out.append(LevelAssignment(w, lvl))
    return tuple(out)
