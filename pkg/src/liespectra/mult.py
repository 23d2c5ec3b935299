"""Saturated weight sets and characteristic-0 weight multiplicities.

Multiplicities come from the Freudenthal recursion evaluated on dominant
representatives only and propagated by Weyl invariance.  Weight sets carry a
validity note: the set description is valid for p = 0 or p > e(G) with a
p-restricted highest weight; the multiplicities themselves are the
characteristic-0 values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ResourceLimitError
from .rootdata import RootDatum, Weight, e_constant
from .weights import DEFAULT_ORBIT_BOUND, orbit_size, subdominant_weights
from . import kernels

DEFAULT_DIM_BOUND = 1_000_000


def validity_note(datum: RootDatum) -> str:
    return (
        f"weight set valid for p=0 or p>e(G)={e_constant(datum)}; "
        "multiplicities are characteristic-0 values"
    )


@dataclass(frozen=True)
class WeightMultiset:
    """Weights of an irreducible module with their multiplicities."""

    highest: Weight
    entries: dict  # Weight -> positive int
    validity: str

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def support(self):
        return frozenset(self.entries)

    def nonzero_multiplicities_all_one(self) -> bool:
        return all(m == 1 for w, m in self.entries.items() if not w.is_zero)

    def sorted_entries(self):
        """Entries sorted by height deficit below the highest weight, then
        lexicographically (the report order used by the CLI)."""
        datum = self.highest.datum

        def key(item):
            w = item[0]
            diff = tuple(a - b for a, b in zip(self.highest.coords, w.coords))
            coeffs = datum.root_coefficients(diff)
            return (sum(coeffs), w.coords)

        return sorted(self.entries.items(), key=key)


def weyl_dimension(lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight lam, by the
    Weyl product formula evaluated exactly in rationals."""
    if not lam.is_dominant:
        raise ValueError(f"Weyl dimension needs a dominant weight, got {lam}")
    datum = lam.datum
    num = Fraction(1)
    lam_rho = tuple(c + 1 for c in lam.coords)
    for pv in datum.coroot_pairings:
        top = sum(a * b for a, b in zip(lam_rho, pv))
        bottom = sum(pv)
        num *= Fraction(top, bottom)
    assert num.denominator == 1
    return int(num)


def premet_weight_set(lam: Weight, orbit_bound: int = DEFAULT_ORBIT_BOUND):
    """The saturated weight set of the module with highest weight lam: the
    union of the Weyl orbits of all dominant weights subdominant to lam.

    Valid as the exact weight set for p = 0 or p > e(G) with lam
    p-restricted (see validity_note).
    """
    if not lam.is_dominant:
        raise ValueError(f"weight set enumeration needs a dominant weight, got {lam}")
    datum = lam.datum
    doms = subdominant_weights(lam)
    total = sum(orbit_size(m) for m in doms)
    if total > orbit_bound:
        raise ResourceLimitError(
            f"weight set of {lam} has {total} elements, exceeding the orbit bound {orbit_bound}"
        )
    out = set()
    for m in doms:
        out.update(
            Weight(c, datum)
            for c in kernels.weyl_orbit(datum.rank, datum.simple_root_coords, m.coords)
        )
    return frozenset(out)


def freudenthal_multiplicities(lam: Weight, dim_bound: int = DEFAULT_DIM_BOUND) -> WeightMultiset:
    """Characteristic-0 weight multiplicities of the irreducible module with
    highest weight lam."""
    if not lam.is_dominant:
        raise ValueError(f"multiplicities need a dominant weight, got {lam}")
    datum = lam.datum
    dim = weyl_dimension(lam)
    if dim > dim_bound:
        raise ResourceLimitError(
            f"module {lam} has dimension {dim}, exceeding the dimension bound {dim_bound}"
        )
    doms, mults = kernels.freudenthal(
        datum.rank,
        datum.simple_root_coords,
        tuple(r.coords for r in datum.positive_roots),
        datum.coroot_pairings,
        datum.root_half_lengths,
        datum.cartan_t_adj,
        datum.cartan_det,
        datum.form_scaled,
        datum.form_denominator,
        lam.coords,
    )
    full = kernels.orbit_expand(datum.rank, datum.simple_root_coords, doms, mults)
    entries = {Weight(c, datum): m for c, m in full.items()}
    return WeightMultiset(highest=lam, entries=entries, validity=validity_note(datum))


def zero_weight_multiplicity(lam: Weight, dim_bound: int = DEFAULT_DIM_BOUND) -> int:
    """Multiplicity of the zero weight (0 whenever lam is not radical)."""
    datum = lam.datum
    if datum.root_coefficients(lam.coords) is None:
        return 0
    return freudenthal_multiplicities(lam, dim_bound).multiplicity(datum.zero())
