import random
from fractions import Fraction

import pytest

import oracle_helpers as oh
from liespectra import (
    StratumSpec,
    UnsupportedRootSystemError,
    ValueGroupElement,
    build_root_datum,
    canonical_root_strata,
    evaluate,
    generic_regular_element,
    generic_stratum_element,
    is_central,
    is_regular,
    premet_weight_set,
    separates_weights,
    spectrum,
    torus_element,
    torus_from_epsilon_text,
    torus_from_json,
)
from liespectra.spectra import SpectrumKind, classify
from liespectra.torus import parse_epsilon_shorthand, stratum_torsion_decorations


def val(torsion, free):
    return ValueGroupElement.make(Fraction(torsion), free)


def test_value_group_arithmetic():
    a = val("1/2", (1, 0))
    b = val("3/4", (0, 2))
    assert (a + b).torsion == Fraction(1, 4)
    assert (a + b).free == (1, 2)
    assert (a - a).is_identity
    assert (-b).torsion == Fraction(1, 4)
    assert a.scale(2) == val(0, (2, 0))
    assert val(0, ()).render() == "1"
    assert val("1/2", (0,)).render() == "-1"
    assert val("1/2", (2, -1)).render() == "-a^2*b^-1"


def test_identity_assignments_are_central():
    a2 = build_root_datum("A", 2)
    s = torus_element(a2, [val(0, (0,)), val(0, (0,))])
    assert is_central(s)
    assert not is_regular(s)
    # Central elements act trivially on radical weights.
    assert evaluate(s, a2.weight((1, 1))).is_identity


def test_central_nonidentity_element_is_not_regular():
    a2 = build_root_datum("A", 2)
    s = torus_element(a2, [val("1/3", ()), val("2/3", ())])
    assert is_central(s)
    assert not is_regular(s)
    assert not evaluate(s, a2.fundamental_weight(1)).is_identity


def test_split_pair_element_of_sl4():
    a3 = build_root_datum("A", 3)
    s = torus_element(a3, [val(0, (1,)), val(0, (2,)), val(0, (1,))])
    # alpha_1 = 2w1 - w2 evaluates to the identity.
    assert evaluate(s, a3.simple_roots[0]).is_identity
    assert not is_regular(s)
    assert not is_central(s)
    assert evaluate(s, a3.fundamental_weight(2)) == val(0, (2,))
    # The natural module's weights are not separated (two epsilons agree).
    assert not separates_weights(s, premet_weight_set(a3.fundamental_weight(1)))


def test_sign_twisted_element_assignments():
    a3 = build_root_datum("A", 3)
    s = torus_from_epsilon_text(a3, "a,a,-1/a,-1/a")
    assert [(v.torsion, v.free) for v in s.assignments] == [
        (Fraction(0), (1,)),
        (Fraction(0), (2,)),
        (Fraction(1, 2), (1,)),
    ]


def test_evaluate_is_linear():
    c3 = build_root_datum("C", 3)
    rng = random.Random(4)
    s = torus_element(
        c3,
        [val(Fraction(rng.randrange(4), 4), (rng.randrange(-2, 3), rng.randrange(-2, 3)))
         for _ in range(3)],
    )
    assert evaluate(s, c3.zero()).is_identity
    for _ in range(20):
        mu = c3.weight(tuple(rng.randrange(-3, 4) for _ in range(3)))
        nu = c3.weight(tuple(rng.randrange(-3, 4) for _ in range(3)))
        assert evaluate(s, mu + nu) == evaluate(s, mu) + evaluate(s, nu)


def test_is_regular_direct_example():
    a2 = build_root_datum("A", 2)
    s = torus_element(a2, [val(0, (1,)), val(0, (3,))])
    assert is_regular(s)
    # alpha_1 -> -1, alpha_2 -> 5, highest root -> 4 in the free exponent.
    assert evaluate(s, a2.simple_roots[0]) == val(0, (-1,))
    assert evaluate(s, a2.simple_roots[1]) == val(0, (5,))


def test_b3_minus_ones_are_not_central():
    b3 = build_root_datum("B", 3)
    s = torus_from_epsilon_text(b3, "-1,-1,-1")
    # epsilon_i - epsilon_j vanishes but the short root epsilon_3 gives -1.
    assert evaluate(s, b3.simple_roots[0]).is_identity
    assert not is_central(s)
    assert not is_regular(s)


def test_equal_epsilon_values_kill_the_difference_character():
    c2 = build_root_datum("C", 2)
    s = torus_from_epsilon_text(c2, "a,a")
    # epsilon_1 - epsilon_2 is the first simple root here.
    assert evaluate(s, c2.simple_roots[0]).is_identity
    assert not is_regular(s)


def test_separates_weights_trivially_on_singletons():
    a2 = build_root_datum("A", 2)
    s = torus_element(a2, [val(0, (0,)), val(0, (0,))])
    assert separates_weights(s, {a2.rho})


def test_generic_regular_element_separates_everything():
    a2 = build_root_datum("A", 2)
    s = generic_regular_element(a2)
    assert is_regular(s)
    assert separates_weights(s, premet_weight_set(a2.fundamental_weight(1)))
    assert separates_weights(s, premet_weight_set(a2.weight((2, 2))))


def test_single_root_stratum_of_sl4():
    a3 = build_root_datum("A", 3)
    spec = StratumSpec(a3, (a3.simple_roots[0],))
    s = generic_stratum_element(spec, seed=1)
    assert evaluate(s, a3.simple_roots[0]).is_identity
    assert not is_regular(s)
    assert not is_central(s)
    # Forced coincidences on the natural module are exactly the pairs whose
    # difference lies in the rational span of the kernel (trivial torsion).
    kernel_rows = [a3.simple_roots[0].coords]
    weights = sorted(premet_weight_set(a3.fundamental_weight(1)), key=lambda w: w.coords)
    for i, mu in enumerate(weights):
        for nu in weights[i + 1:]:
            collide = evaluate(s, mu) == evaluate(s, nu)
            diff = tuple(a - b for a, b in zip(mu.coords, nu.coords))
            assert collide == oh.in_rational_span_oracle(kernel_rows, diff)


def test_exact_order_torsion_forces_the_stated_kernel():
    c2 = build_root_datum("C", 2)
    long_root = c2.simple_roots[1]  # (-2, 2), index 2 quotient generator
    spec = StratumSpec(c2, (long_root,), {0: Fraction(1, 2)})
    s = generic_stratum_element(spec, seed=0)
    weights = sorted(premet_weight_set(c2.weight((1, 1))), key=lambda w: w.coords)
    for i, mu in enumerate(weights):
        for nu in weights[i + 1:]:
            collide = evaluate(s, mu) == evaluate(s, nu)
            diff = tuple(a - b for a, b in zip(mu.coords, nu.coords))
            assert collide == oh.in_lattice_span_oracle([long_root.coords], diff)


def test_pair_stratum_with_sign_gives_the_twisted_family():
    a3 = build_root_datum("A", 3)
    kernel = (a3.simple_roots[0], a3.simple_roots[2])
    spec = StratumSpec(a3, kernel, {1: Fraction(1, 2)})
    s = generic_stratum_element(spec, seed=0)
    for w in kernel:
        assert evaluate(s, w).is_identity
    assert not is_regular(s) and not is_central(s)
    sp = spectrum(s, a3.fundamental_weight(2))
    cls = classify(sp)
    assert cls.kind is SpectrumKind.ALMOST_SIMPLE
    assert cls.max_multiplicity == 4
    assert cls.heavy_value == ValueGroupElement(Fraction(1, 2), (0,) * s.free_rank)


def test_stratum_rejections():
    a2 = build_root_datum("A", 2)
    with pytest.raises(ValueError, match="full character lattice"):
        StratumSpec(a2, (a2.fundamental_weight(1), a2.fundamental_weight(2)))
    spec = StratumSpec(a2, (a2.simple_roots[0], a2.simple_roots[1]))
    with pytest.raises(ValueError, match="central/finite"):
        generic_stratum_element(spec)
    with pytest.raises(ValueError, match="torsion choice"):
        c2 = build_root_datum("C", 2)
        generic_stratum_element(
            StratumSpec(c2, (c2.simple_roots[1],), {0: Fraction(1, 3)})
        )


def test_generic_stratum_is_deterministic():
    b3 = build_root_datum("B", 3)
    spec = StratumSpec(b3, (b3.positive_roots[0],))
    s1 = generic_stratum_element(spec, seed=9)
    s2 = generic_stratum_element(spec, seed=9)
    assert s1.assignments == s2.assignments


def test_canonical_root_strata_counts():
    a3 = build_root_datum("A", 3)
    assert len(canonical_root_strata(a3, 1)) == 1  # single length
    c2 = build_root_datum("C", 2)
    assert len(canonical_root_strata(c2, 1)) == 2  # short and long
    # Rank-2 pairs are full rank, so depth 2 adds nothing for C2.
    assert len(canonical_root_strata(c2, 2)) == 2
    b3 = build_root_datum("B", 3)
    assert len(canonical_root_strata(b3, 1)) == 2
    assert len(canonical_root_strata(b3, 2)) > 2


def test_torsion_decorations_for_the_long_root_stratum():
    c2 = build_root_datum("C", 2)
    spec = StratumSpec(c2, (c2.simple_roots[1],))
    decs = stratum_torsion_decorations(spec)
    assert decs == [{0: Fraction(0)}, {0: Fraction(1, 2)}]


def test_epsilon_shorthand_parsing_errors():
    with pytest.raises(ValueError, match="position 2"):
        parse_epsilon_shorthand("a,,b")
    with pytest.raises(ValueError, match="exponent"):
        parse_epsilon_shorthand("a^x,b")
    with pytest.raises(ValueError, match="bad epsilon entry"):
        parse_epsilon_shorthand("a,2b")
    a3 = build_root_datum("A", 3)
    with pytest.raises(ValueError, match="determinant one"):
        torus_from_epsilon_text(a3, "a,a,a,a")
    with pytest.raises(ValueError, match="needs 4 epsilon"):
        torus_from_epsilon_text(a3, "a,a")
    g2 = build_root_datum("G", 2)
    with pytest.raises(UnsupportedRootSystemError):
        torus_from_epsilon_text(g2, "a,b")


def test_epsilon_shorthand_supports_torsion_marks():
    c2 = build_root_datum("C", 2)
    s = torus_from_epsilon_text(c2, "i,-1")
    assert evaluate(s, c2.fundamental_weight(1)).torsion == Fraction(1, 4)
    spin = torus_from_epsilon_text(build_root_datum("B", 3), "-1,a,b")
    # The spin assignment is the canonical half of the total torsion.
    assert spin.assignments[2].torsion == Fraction(1, 4)


def test_torus_json_roundtrip():
    a3 = build_root_datum("A", 3)
    s = torus_from_epsilon_text(a3, "a,a,-1/a,-1/a")
    payload = s.to_json()
    again = torus_from_json(a3, payload)
    assert again.assignments == s.assignments
    with pytest.raises(ValueError, match="bad torus element JSON"):
        torus_from_json(a3, {"wrong": []})
