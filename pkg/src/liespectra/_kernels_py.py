"""Pure-Python kernels for the hot loops: dominant closures, Weyl orbits and
the Freudenthal recursion.

The compiled twin (_kernels_c) implements the same four functions with the
same signatures; `liespectra.kernels` picks one at import time.  All inputs
are plain ints and tuples so both backends are interchangeable.

Argument conventions:
    n         rank
    alpha     tuple of n tuples, omega-coordinates of the simple roots
    posroots  tuple of omega-coordinate tuples of the positive roots
    pairings  per positive root, the vector of <omega_i, alpha^vee>
    dhalf     per positive root, (alpha, alpha)/2
    adj, det  adjugate and determinant of the transposed Cartan matrix, so
              root coefficients of mu are (mu @ adj) / det
    sform     integer matrix den*(omega_i, omega_j)
    den       the scaling denominator of sform
"""

from __future__ import annotations


def _dominant_rep(coords, alpha, n):
    c = list(coords)
    while True:
        for i in range(n):
            if c[i] < 0:
                ci = c[i]
                ai = alpha[i]
                for j in range(n):
                    c[j] -= ci * ai[j]
                break
        else:
            return tuple(c)


def _deficit(lam, mu, adj, det, n):
    """Height of lam - mu over the simple roots (must be a nonneg integer)."""
    total = 0
    for j in range(n):
        acc = 0
        for i in range(n):
            acc += (lam[i] - mu[i]) * adj[i][j]
        total += acc
    assert total % det == 0
    return total // det


def dominant_subdominants(n, alpha, posroots, adj, det, lam):
    """All dominant weights subdominant to dominant lam, sorted by increasing
    height deficit then lexicographically.

    Uses the positive-root downward walk on dominant weights; every dominant
    weight below lam is reachable this way because each strict dominance step
    between dominant weights refines into positive-root steps through
    dominant weights.
    """
    seen = {lam}
    frontier = [lam]
    while frontier:
        new = []
        for mu in frontier:
            for root in posroots:
                cand = tuple(a - b for a, b in zip(mu, root))
                if cand not in seen and all(x >= 0 for x in cand):
                    seen.add(cand)
                    new.append(cand)
        frontier = new
    return sorted(seen, key=lambda m: (_deficit(lam, m, adj, det, n), m))


def weyl_orbit(n, alpha, start):
    """Full Weyl orbit of a weight, lexicographically sorted."""
    seen = {tuple(start)}
    frontier = [tuple(start)]
    while frontier:
        new = []
        for mu in frontier:
            for i in range(n):
                ci = mu[i]
                if ci == 0:
                    continue
                ai = alpha[i]
                ref = tuple(mu[j] - ci * ai[j] for j in range(n))
                if ref not in seen:
                    seen.add(ref)
                    new.append(ref)
        frontier = new
    return sorted(seen)


def orbit_expand(n, alpha, reps, mults):
    """Expand multiplicities from dominant representatives to full orbits."""
    out = {}
    for rep, m in zip(reps, mults):
        for w in weyl_orbit(n, alpha, rep):
            out[w] = m
    return out


def _quad(coords, sform, n):
    total = 0
    for i in range(n):
        ci = coords[i]
        if ci:
            row = sform[i]
            for j in range(n):
                total += ci * coords[j] * row[j]
    return total


def freudenthal(n, alpha, posroots, pairings, dhalf, adj, det, sform, den, lam):
    """Multiplicities of the dominant weights of the irreducible module with
    highest weight lam, via the Freudenthal recursion.

    Returns (doms, mults) with doms sorted by increasing height deficit; the
    recursion fills multiplicities in that order, using Weyl invariance to
    look up only dominant representatives.
    """
    doms = dominant_subdominants(n, alpha, posroots, adj, det, lam)
    index = {c: i for i, c in enumerate(doms)}
    nroots = len(posroots)
    lam_rho = tuple(x + 1 for x in lam)
    qlam = _quad(lam_rho, sform, n)
    mults = [0] * len(doms)
    mults[0] = 1
    for idx in range(1, len(doms)):
        mu = doms[idx]
        acc = 0
        for r in range(nroots):
            root = posroots[r]
            pv = pairings[r]
            d = dhalf[r]
            nu = list(mu)
            while True:
                pair = 0
                for j in range(n):
                    nu[j] += root[j]
                    pair += nu[j] * pv[j]
                rep = _dominant_rep(nu, alpha, n)
                j2 = index.get(rep)
                if j2 is None:
                    break
                acc += mults[j2] * d * pair
        mu_rho = tuple(x + 1 for x in mu)
        denom = qlam - _quad(mu_rho, sform, n)
        num = 2 * den * acc
        if denom <= 0 or num % denom:
            raise AssertionError("Freudenthal recursion produced a non-integer")
        mults[idx] = num // denom
    return doms, mults
