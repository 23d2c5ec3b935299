"""Executable verification checks: level tables, spectrum witnesses, the
classification sweep for non-regular non-central elements, multiplicity
bounds, and natural-module regularity.

Every check is a pure function of its inputs and seed, and emits a
VerificationReport whose JSON form is byte-stable.  The sweeps provide
characteristic-0 evidence from generic stratum elements with torsion
decorations of order <= 4; they are not exhaustive over the full torus.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import tables
from .exceptions import ResourceLimitError
from .mult import freudenthal_multiplicities, validity_note, weyl_dimension
from .rootdata import RootDatum, Weight, build_root_datum
from .spectra import (
    SpectrumKind,
    classify,
    is_almost_simple,
    spectrum_of_multiset,
)
from .torus import (
    EpsilonToken,
    StratumSpec,
    TorusElement,
    ValueGroupElement,
    canonical_root_strata,
    evaluate,
    generic_regular_element,
    generic_stratum_element,
    is_central,
    is_regular,
    stratum_torsion_decorations,
    torus_from_epsilon,
    torus_from_epsilon_text,
)
from .weights import level_sets, is_radical

SWEEP_SCOPE_NOTE = (
    "evidence at characteristic 0 from generic stratum elements with torsion "
    "decorations of order <= 4; not exhaustive over the full torus"
)


@dataclass
class VerificationReport:
    check_id: str
    status: str  # Pass | Fail | Skipped
    cases: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: tuple = ()

    def to_json(self):
        return {
            "check_id": self.check_id,
            "status": self.status,
            "notes": list(self.notes),
            "elapsed_seconds": round(self.elapsed, 6),
            "cases": self.cases,
        }


class _Recorder:
    def __init__(self, check_id, notes=()):
        self.check_id = check_id
        self.notes = tuple(notes)
        self.cases = []
        self.start = time.perf_counter()

    def case(self, label, expected, actual):
        ok = expected == actual
        self.cases.append(
            {"label": label, "expected": str(expected), "actual": str(actual), "ok": ok}
        )
        return ok

    def check(self, label, condition, expected="True", actual=None):
        self.cases.append(
            {
                "label": label,
                "expected": str(expected),
                "actual": str(actual if actual is not None else bool(condition)),
                "ok": bool(condition),
            }
        )
        return bool(condition)

    def report(self, skipped=False):
        if skipped:
            status = "Skipped"
        else:
            status = "Pass" if all(c["ok"] for c in self.cases) else "Fail"
        return VerificationReport(
            check_id=self.check_id,
            status=status,
            cases=self.cases,
            elapsed=time.perf_counter() - self.start,
            notes=self.notes,
        )


def _wset(datum, coords_set):
    return {Weight(c, datum) for c in coords_set}


def _fmt_weights(ws):
    return "{" + ", ".join(sorted(str(w) for w in ws)) + "}"


# -- level tables ---------------------------------------------------------------


def verify_level_table(family: str, rank: int, height_bound: int = 6) -> VerificationReport:
    """Compare computed level-1/level-2 sets (and the radical part of level 3
    where a reference is available) against the reference table."""
    rec = _Recorder(f"level-table:{family}{rank}")
    ref = tables.level_reference(family, rank)
    if ref is None:
        rec.check(f"{family}{rank}", False, expected="a classical family A-D",
                  actual=f"{family}{rank} has no level reference")
        return rec.report()
    datum = build_root_datum(family, rank)
    assignments = level_sets(datum, 3, height_bound)
    computed = {1: set(), 2: set(), 3: set()}
    for a in assignments:
        computed[a.level].add(a.weight)
    rec.case(
        f"{datum.name}:level-1",
        _fmt_weights(_wset(datum, ref["L1"])),
        _fmt_weights(computed[1]),
    )
    rec.case(
        f"{datum.name}:level-2",
        _fmt_weights(_wset(datum, ref["L2"])),
        _fmt_weights(computed[2]),
    )
    if ref["L3_radical"] is not None:
        radical3 = {w for w in computed[3] if is_radical(w)}
        rec.case(
            f"{datum.name}:level-3-radical",
            _fmt_weights(_wset(datum, ref["L3_radical"])),
            _fmt_weights(radical3),
        )
    return rec.report()


# -- witness elements -----------------------------------------------------------


def _symval(s: TorusElement, torsion=0, **powers) -> ValueGroupElement:
    """Value-group element for a symbolic monomial in the element's named
    generators, e.g. _symval(s, a=2) for a^2 or _symval(s, torsion='1/2')."""
    free = [0] * s.free_rank
    for name, exp in powers.items():
        i = s.gen_names.index(name)
        free[i] = exp * s.gen_denoms[i]
    return ValueGroupElement(Fraction(torsion) % 1, tuple(free))


def _spectrum_case(rec, s, lam, expected_dict, expected_kind, label):
    multiset = freudenthal_multiplicities(lam)
    sp = spectrum_of_multiset(s, multiset)
    got = {v: m for v, m in sp.entries}
    want = dict(expected_dict)
    ok_values = rec.case(
        f"{label}:spectrum",
        sorted((v.sort_key(), m) for v, m in want.items()),
        sorted((v.sort_key(), m) for v, m in got.items()),
    )
    rec.case(f"{label}:class", expected_kind.value, classify(sp).kind.value)
    return ok_values


def verify_witness_elements() -> VerificationReport:
    """Recompute the explicit witness elements' spectra, regularity and
    centrality on their stated modules."""
    rec = _Recorder("witnesses")

    a3 = build_root_datum("A", 3)
    s = torus_from_epsilon_text(a3, "a,a,1/a,1/a")
    rec.check("A3 diag(a,a,1/a,1/a) non-regular", not is_regular(s))
    rec.check("A3 diag(a,a,1/a,1/a) non-central", not is_central(s))
    one = _symval(s)
    _spectrum_case(
        rec, s, a3.fundamental_weight(2),
        {_symval(s, a=2): 1, one: 4, _symval(s, a=-2): 1},
        SpectrumKind.ALMOST_SIMPLE, "A3 diag(a,a,1/a,1/a) on w2",
    )
    rec.case(
        "A3 diag(a,a,1/a,1/a): w2 value",
        _symval(s, a=2).sort_key(),
        evaluate(s, a3.fundamental_weight(2)).sort_key(),
    )

    s = torus_from_epsilon_text(a3, "a,a,-1/a,-1/a")
    rec.case(
        "A3 diag(a,a,-1/a,-1/a) assignments",
        [(Fraction(0), (1,)), (Fraction(0), (2,)), (Fraction(1, 2), (1,))],
        [(v.torsion, v.free) for v in s.assignments],
    )
    _spectrum_case(
        rec, s, a3.fundamental_weight(2),
        {_symval(s, a=2): 1, _symval(s, torsion="1/2"): 4, _symval(s, a=-2): 1},
        SpectrumKind.ALMOST_SIMPLE, "A3 diag(a,a,-1/a,-1/a) on w2",
    )

    c2 = build_root_datum("C", 2)
    s = torus_from_epsilon_text(c2, "a,a")
    rec.check("C2 eps(a,a) non-regular", not is_regular(s))
    rec.check("C2 eps(a,a) non-central", not is_central(s))
    _spectrum_case(
        rec, s, c2.fundamental_weight(2),
        {_symval(s, a=2): 1, _symval(s): 3, _symval(s, a=-2): 1},
        SpectrumKind.ALMOST_SIMPLE, "C2 eps(a,a) on w2",
    )

    s = torus_from_epsilon_text(c2, "1,-1")
    rec.check("C2 eps(1,-1) non-regular", not is_regular(s))
    rec.check("C2 eps(1,-1) non-central", not is_central(s))
    _spectrum_case(
        rec, s, c2.fundamental_weight(2),
        {_symval(s, torsion="1/2"): 4, _symval(s): 1},
        SpectrumKind.ALMOST_SIMPLE, "C2 eps(1,-1) on w2",
    )

    s = torus_from_epsilon_text(c2, "1,a")
    rec.check("C2 eps(1,a) non-regular", not is_regular(s))
    _spectrum_case(
        rec, s, c2.fundamental_weight(1),
        {_symval(s): 2, _symval(s, a=1): 1, _symval(s, a=-1): 1},
        SpectrumKind.ALMOST_SIMPLE, "C2 eps(1,a) on w1",
    )
    s = torus_from_epsilon_text(c2, "-1,a")
    rec.check("C2 eps(-1,a) non-regular", not is_regular(s))
    _spectrum_case(
        rec, s, c2.fundamental_weight(1),
        {_symval(s, torsion="1/2"): 2, _symval(s, a=1): 1, _symval(s, a=-1): 1},
        SpectrumKind.ALMOST_SIMPLE, "C2 eps(-1,a) on w1",
    )

    a2 = build_root_datum("A", 2)
    s = torus_from_epsilon_text(a2, "a,a,1/a^2")
    rec.check("A2 diag(a,a,1/a^2) non-regular", not is_regular(s))
    rec.check("A2 diag(a,a,1/a^2) non-central", not is_central(s))
    _spectrum_case(
        rec, s, a2.weight((1, 1)),
        {_symval(s): 4, _symval(s, a=3): 2, _symval(s, a=-3): 2},
        SpectrumKind.NOT_ALMOST_SIMPLE, "A2 diag(a,a,1/a^2) on adjoint",
    )

    d4 = build_root_datum("D", 4)
    s = torus_from_epsilon_text(d4, "a,a,a,a")
    rec.check("D4 eps(a,a,a,a) non-regular", not is_regular(s))
    rec.check("D4 eps(a,a,a,a) non-central", not is_central(s))
    _spectrum_case(
        rec, s, d4.fundamental_weight(4),
        {_symval(s, a=2): 1, _symval(s): 6, _symval(s, a=-2): 1},
        SpectrumKind.ALMOST_SIMPLE, "D4 eps(a,a,a,a) on w4",
    )
    _spectrum_case(
        rec, s, d4.fundamental_weight(1),
        {_symval(s, a=1): 4, _symval(s, a=-1): 4},
        SpectrumKind.NOT_ALMOST_SIMPLE, "D4 eps(a,a,a,a) on w1",
    )

    c3 = build_root_datum("C", 3)
    s = torus_from_epsilon_text(c3, "a,b,c")
    rec.check("C3 eps(a,b,c) regular", is_regular(s))
    sp = spectrum_of_multiset(s, freudenthal_multiplicities(c3.fundamental_weight(1)))
    rec.case("C3 eps(a,b,c) simple on w1", SpectrumKind.SIMPLE.value, classify(sp).kind.value)

    s = generic_regular_element(a3)
    rec.check("A3 generic regular", is_regular(s))
    sp = spectrum_of_multiset(s, freudenthal_multiplicities(a3.fundamental_weight(1)))
    rec.case("A3 generic simple on w1", SpectrumKind.SIMPLE.value, classify(sp).kind.value)

    b3 = build_root_datum("B", 3)
    s = torus_from_epsilon_text(b3, "-1,a,b")
    rec.check("B3 eps(-1,a,b) regular", is_regular(s))
    sp = spectrum_of_multiset(s, freudenthal_multiplicities(b3.fundamental_weight(1)))
    rec.case(
        "B3 eps(-1,a,b) w1 multiplicity of -1",
        2,
        sp.multiplicity(_symval(s, torsion="1/2")),
    )
    rec.case("B3 eps(-1,a,b) almost simple on w1", True, is_almost_simple(sp))

    s = torus_from_epsilon_text(d4, "1,-1,a,b")
    rec.check("D4 eps(1,-1,a,b) regular", is_regular(s))
    sp = spectrum_of_multiset(s, freudenthal_multiplicities(d4.fundamental_weight(1)))
    rec.case("D4 eps(1,-1,a,b) mult of 1", 2, sp.multiplicity(_symval(s)))
    rec.case("D4 eps(1,-1,a,b) mult of -1", 2, sp.multiplicity(_symval(s, torsion="1/2")))
    rec.case(
        "D4 eps(1,-1,a,b) not almost simple on w1 (stated exception)",
        SpectrumKind.NOT_ALMOST_SIMPLE.value,
        classify(sp).kind.value,
    )

    return rec.report()


# -- classification sweep --------------------------------------------------------


def enumerate_modules(datum: RootDatum, dim_bound: int, include_zero=False):
    """Dominant weights with Weyl dimension within the bound, sorted by
    (dimension, coordinates)."""
    n = datum.rank
    out = []
    coords = [0] * n

    def rec(i):
        if i == n:
            w = Weight(tuple(coords), datum)
            if include_zero or not w.is_zero:
                out.append(w)
            return
        c = 0
        while True:
            coords[i] = c
            if weyl_dimension(Weight(tuple(coords[: i + 1] + [0] * (n - i - 1)), datum)) > dim_bound:
                break
            rec(i + 1)
            c += 1
        coords[i] = 0

    rec(0)
    out.sort(key=lambda w: (weyl_dimension(w), w.coords))
    return out


def sweep_elements(datum: RootDatum, depth: int, seed: int, max_order: int = 4):
    """Deduplicated generic elements of the canonical root-kernel strata up
    to the given depth, with every torsion decoration of order <= max_order;
    only non-regular non-central elements are returned."""
    out = []
    seen = set()
    for kernel in canonical_root_strata(datum, depth):
        base = StratumSpec(datum, kernel)
        for decoration in stratum_torsion_decorations(base, max_order):
            spec = StratumSpec(datum, kernel, decoration)
            s = generic_stratum_element(spec, seed)
            if is_regular(s) or is_central(s):
                continue
            key = tuple((v.torsion, v.free) for v in s.assignments)
            if key in seen:
                continue
            seen.add(key)
            out.append(s)
    return out


def classification_sweep(datum: RootDatum, dim_bound: int, depth: int, seed: int):
    """Classify every sweep element on every module within the dimension
    bound.  Returns (modules, elements, outcomes, skipped): outcomes maps
    each module with an almost-simple (or simple) outcome to the list of
    (element, SpectrumClass) pairs that witness it; skipped records any
    module rejected by a resource bound rather than silently truncating."""
    modules = enumerate_modules(datum, dim_bound)
    elements = sweep_elements(datum, depth, seed)
    outcomes = {}
    skipped = []
    for lam in modules:
        try:
            multiset = freudenthal_multiplicities(lam)
        except ResourceLimitError as exc:
            skipped.append((lam, str(exc)))
            continue
        for s in elements:
            sp = spectrum_of_multiset(s, multiset)
            cls = classify(sp)
            if cls.kind is not SpectrumKind.NOT_ALMOST_SIMPLE:
                outcomes.setdefault(lam, []).append((s, cls))
    return modules, elements, outcomes, skipped


def verify_classification_sweep(
    datum: RootDatum, dim_bound: int, stratum_depth: int, seed: int
) -> VerificationReport:
    """Check that almost-simple outcomes for non-regular non-central generic
    elements occur exactly on the permitted modules, with at least one
    witnessing stratum each."""
    rec = _Recorder(
        f"c99:{datum.name}:dim<={dim_bound}:depth={stratum_depth}:seed={seed}",
        notes=(SWEEP_SCOPE_NOTE, validity_note(datum)),
    )
    modules, elements, outcomes, skipped = classification_sweep(
        datum, dim_bound, stratum_depth, seed
    )
    permitted = tables.permitted_almost_simple(datum)
    skipped_set = {lam for lam, _ in skipped}
    for lam, reason in skipped:
        rec.check(
            f"{lam}: skipped ({reason})", True,
            expected="resource bound respected", actual="skipped",
        )
    for lam in modules:
        if lam in skipped_set:
            continue
        expect = lam.coords in permitted
        witnesses = outcomes.get(lam, [])
        label = f"{lam} (dim {weyl_dimension(lam)})"
        rec.check(
            label,
            expect == bool(witnesses),
            expected="almost-simple witness" if expect else "no witness",
            actual=(
                f"almost-simple witness [{'; '.join(s.label for s, _ in witnesses)}]"
                if witnesses
                else "no witness"
            ),
        )
    if not modules:
        rec.check("no modules within bound", True)
    return rec.report()


def verify_multiplicity_bounds(
    datum: RootDatum, dim_bound: int, seed: int, stratum_depth: int = 2
) -> VerificationReport:
    """Every almost-simple sweep outcome obeys the multiplicity cap for its
    (family, dimension) case, and the rank cap otherwise."""
    rec = _Recorder(
        f"bounds:{datum.name}:dim<={dim_bound}:seed={seed}",
        notes=(SWEEP_SCOPE_NOTE,),
    )
    _, _, outcomes, skipped = classification_sweep(datum, dim_bound, stratum_depth, seed)
    for lam, reason in skipped:
        rec.check(f"{lam}: skipped ({reason})", True,
                  expected="resource bound respected", actual="skipped")
    any_case = False
    for lam, pairs in sorted(outcomes.items(), key=lambda kv: kv[0].coords):
        dim = weyl_dimension(lam)
        cap = tables.multiplicity_cap(datum, dim)
        for s, cls in pairs:
            any_case = True
            rec.check(
                f"{lam} (dim {dim}) via {s.label}: max multiplicity {cls.max_multiplicity} <= {cap}",
                cls.max_multiplicity <= cap,
                expected=f"<= {cap}",
                actual=str(cls.max_multiplicity),
            )
    if not any_case:
        rec.check("no almost-simple outcomes within bound", True)
    return rec.report()


# -- natural module regularity ----------------------------------------------------


def _sample_epsilon_tokens(datum: RootDatum, rng: random.Random):
    """Random epsilon tuple mixing fresh generic symbols, repeats, inverses
    and signs; family A gets a determinant-one final entry."""
    n = datum.rank
    count = n + 1 if datum.family == "A" else n
    names = [f"x{i}" for i in range(count)]
    tokens = []
    used = []
    limit = count - 1 if datum.family == "A" else count
    for i in range(limit):
        torsion = Fraction(1, 2) if rng.random() < 0.25 else Fraction(0)
        roll = rng.random()
        if used and roll < 0.35:
            prev = rng.choice(used)
            exp = 1 if rng.random() < 0.6 else -1
            tokens.append(EpsilonToken(torsion, {prev: exp}))
        elif roll < 0.55:
            tokens.append(EpsilonToken(torsion, {}))
        else:
            name = names[i]
            used.append(name)
            tokens.append(EpsilonToken(torsion, {name: 1}))
    if datum.family == "A":
        total_t = sum((t.torsion for t in tokens), Fraction(0))
        powers = {}
        for t in tokens:
            for k, e in t.powers.items():
                powers[k] = powers.get(k, 0) - e
        tokens.append(EpsilonToken(-total_t, {k: e for k, e in powers.items() if e}))
    return tokens


def sample_torus_element(datum: RootDatum, rng: random.Random) -> TorusElement:
    """Random torus element for property batteries: a mix of generic
    assignments (usually regular), epsilon-style tuples for the classical
    families, and generic stratum elements (never regular)."""
    roll = rng.random()
    if roll < 0.4:
        k = 2
        assignments = [
            ValueGroupElement(
                Fraction(rng.choice((0, 0, 0, 1, 2, 3)), rng.choice((2, 3, 4))) % 1,
                tuple(rng.randrange(-3, 4) for _ in range(k)),
            )
            for _ in range(datum.rank)
        ]
        return TorusElement(datum, tuple(assignments), label="random-assignments")
    if roll < 0.7 and datum.family in "ABCD":
        return torus_from_epsilon(
            datum, _sample_epsilon_tokens(datum, rng), label="random-epsilon"
        )
    strata = canonical_root_strata(datum, depth=rng.choice((1, 2)))
    if not strata:
        return generic_regular_element(datum)
    kernel = rng.choice(strata)
    spec = StratumSpec(datum, kernel)
    decorations = stratum_torsion_decorations(spec)
    spec = StratumSpec(datum, kernel, rng.choice(decorations))
    return generic_stratum_element(spec, seed=rng.randrange(1 << 30))


def verify_natural_module_regularity(
    family: str, rank: int, samples: int, seed: int
) -> VerificationReport:
    """Randomized biconditionals relating regularity of a non-central element
    and its eigenvalue multiplicities on the natural module; for family D
    also the relation between the natural module and the module of the
    second fundamental weight."""
    if family not in "ABCD":
        raise ValueError("natural-module checks are defined for families A-D")
    rec = _Recorder(f"natural:{family}{rank}:samples={samples}:seed={seed}")
    datum = build_root_datum(family, rank)
    rng = random.Random(seed)
    nat = freudenthal_multiplicities(datum.fundamental_weight(1))
    adj2 = freudenthal_multiplicities(datum.fundamental_weight(2)) if family == "D" else None
    counts = {"checked": 0, "skipped-central": 0}
    failures = []
    for idx in range(samples):
        tokens = _sample_epsilon_tokens(datum, rng)
        s = torus_from_epsilon(datum, tokens, label=f"sample{idx}")
        if is_central(s):
            counts["skipped-central"] += 1
            continue
        counts["checked"] += 1
        reg = is_regular(s)
        sp = spectrum_of_multiset(s, nat)
        one = ValueGroupElement.identity(s.free_rank)
        minus_one = ValueGroupElement(Fraction(1, 2), (0,) * s.free_rank)
        m_one = sp.multiplicity(one)
        m_minus = sp.multiplicity(minus_one)
        others_simple_b = all(
            m == 1 for v, m in sp.entries if v != minus_one
        )
        others_simple_d = all(
            m == 1 for v, m in sp.entries if v != minus_one and v != one
        )
        if family in ("A", "C"):
            cond = classify(sp).kind is SpectrumKind.SIMPLE
            if reg != cond:
                failures.append((idx, "regular <-> simple spectrum", s))
        elif family == "B":
            cond = m_minus <= 2 and others_simple_b
            if reg != cond:
                failures.append((idx, "regular <-> (-1 multiplicity <= 2, rest simple)", s))
        else:  # D
            cond = m_one <= 2 and m_minus <= 2 and others_simple_d
            if reg != cond:
                failures.append((idx, "regular <-> (1,-1 multiplicities <= 2, rest simple)", s))
            if not is_almost_simple(sp):
                sp2 = spectrum_of_multiset(s, adj2)
                if is_almost_simple(sp2):
                    failures.append((idx, "non-almost-simple on w1 forces same on w2", s))
        if reg:
            exceptional = family == "D" and m_one == 2 and m_minus == 2
            if is_almost_simple(sp) == exceptional:
                failures.append((idx, "regular almost-simple dichotomy", s))
    rec.check(
        f"{datum.name}: {counts['checked']} non-central samples, "
        f"{counts['skipped-central']} central skipped",
        counts["checked"] > 0,
    )
    rec.check(
        f"{datum.name}: biconditional violations",
        not failures,
        expected="0 violations",
        actual=f"{len(failures)} violations"
        + (f" (first: sample {failures[0][0]}, {failures[0][1]})" if failures else ""),
    )
    return rec.report()


CHECK_IDS = ("level-table", "witnesses", "c99", "bounds", "natural")


def run_check(check, **kw):
    """Dispatch a named check with keyword options (family, rank, dim_bound,
    depth, seed, samples)."""
    if check == "level-table":
        return verify_level_table(kw["family"], kw["rank"])
    if check == "witnesses":
        return verify_witness_elements()
    if check == "c99":
        datum = build_root_datum(kw["family"], kw["rank"])
        return verify_classification_sweep(
            datum, kw.get("dim_bound", 40), kw.get("depth", 2), kw.get("seed", 0)
        )
    if check == "bounds":
        datum = build_root_datum(kw["family"], kw["rank"])
        return verify_multiplicity_bounds(
            datum, kw.get("dim_bound", 40), kw.get("seed", 0), kw.get("depth", 2)
        )
    if check == "natural":
        return verify_natural_module_regularity(
            kw["family"], kw["rank"], kw.get("samples", 200), kw.get("seed", 0)
        )
    raise ValueError(f"unknown check {check!r}; valid checks: {', '.join(CHECK_IDS)}")
