from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from cohiggs import _laurent as lau
from cohiggs.cohomology import LineBundle as O
from cohiggs.errors import (
    InconsistentPoint,
    LeadingCoefficientZero,
    NotInNormalFormDomain,
    TrivialExtension,
)
from cohiggs.exactalg import BiPoly, PolyMat2, RatFn, Z1, Z2, det2
from cohiggs.extension import (
    TRIVIAL_EXTENSION_BUNDLE,
    TWIST_02,
    TWIST_20,
    Dichotomy,
    ExtParams,
    ModuliPoint,
    Phi1Params,
    Phi2Params,
    Stratum,
    TrivialFieldData,
    build_phi1,
    build_phi2,
    dichotomy_check,
    end0T_dimension,
    glue_check,
    rep_v2_to_v1,
    rep_v3_to_v1,
    stratum_classify,
    trace_free_basis_permutation,
    transition_matrices,
    trivial_extension_normal_form,
    v4_trivialization_regular,
    weak_iso,
)
from cohiggs.higgs import field
from cohiggs.linalg import rank
from oracles import random_rat

E01 = ExtParams(F(0), F(1))
E10 = ExtParams(F(1), F(0))
E37 = ExtParams(F(3), F(7))


def _random_ext(rng: random.Random) -> ExtParams:
    while True:
        e = ExtParams(random_rat(rng, 5), random_rat(rng, 5))
        if not e.is_trivial():
            return e


def _random_p1(rng: random.Random) -> Phi1Params:
    return Phi1Params(*(random_rat(rng, 6) for _ in range(6)))


def _random_p2(rng: random.Random) -> Phi2Params:
    return Phi2Params(*(random_rat(rng, 6) for _ in range(5)))


# -- transition matrices -------------------------------------------------------


def test_transition_matrices_display():
    g12, g13 = transition_matrices(ExtParams(F(2), F(5)))
    assert g12.entry(0, 0) == RatFn(1, Z2)
    assert g12.entry(0, 1) == RatFn(2 * Z1 + 5)
    assert g12.entry(1, 0) == RatFn(0)
    assert g12.entry(1, 1) == RatFn(Z2)
    assert g13.entry(0, 0) == RatFn(1)
    assert g13.entry(1, 1) == RatFn(1, Z1)


def test_transition_matrices_split_case_diagonal():
    g12, _ = transition_matrices(ExtParams(F(0), F(0)))
    assert g12.entry(0, 1) == RatFn(0)
    assert g12.entry(0, 0) == RatFn(1, Z2)
    assert g12.entry(1, 1) == RatFn(Z2)


def test_transition_det_is_one():
    rng = random.Random(4)
    for _ in range(10):
        g12, _ = transition_matrices(_random_ext(rng))
        assert det2(g12) == RatFn(1)


def _reference_reps(u: F, v: F):
    """The four displayed 3x3 transitions, hard-coded as Laurent dicts."""

    def L(d):
        return {k: F(c) for k, c in d.items() if c}

    q_sq = {(2, 0): u * u, (1, 0): 2 * u * v, (0, 0): v * v}
    g12_20 = [
        [L({(0, 0): 1}), {}, L({(1, 1): u, (0, 1): v})],
        [L({(1, -1): -2 * u, (0, -1): -2 * v}), L({(0, -2): 1}), lau.neg(L(q_sq))],
        [{}, {}, L({(0, 2): 1})],
    ]
    g13_20 = [
        [L({(2, 0): 1}), {}, {}],
        [{}, L({(3, 0): 1}), {}],
        [{}, {}, L({(1, 0): 1})],
    ]
    g12_02 = [
        [L({(0, 2): 1}), {}, L({(1, 3): u, (0, 3): v})],
        [L({(1, 1): -2 * u, (0, 1): -2 * v}), L({(0, 0): 1}),
         lau.neg(lau.mul(L(q_sq), L({(0, 2): 1})))],
        [{}, {}, L({(0, 4): 1})],
    ]
    g13_02 = [
        [L({(0, 0): 1}), {}, {}],
        [{}, L({(1, 0): 1}), {}],
        [{}, {}, L({(-1, 0): 1})],
    ]
    return {
        ("g12", TWIST_20): g12_20,
        ("g13", TWIST_20): g13_20,
        ("g12", TWIST_02): g12_02,
        ("g13", TWIST_02): g13_02,
    }


def test_derived_equals_displayed_transitions():
    u, v = F(3), F(7)
    ref = _reference_reps(u, v)
    e = ExtParams(u, v)
    assert rep_v2_to_v1(e, TWIST_20) == ref[("g12", TWIST_20)]
    assert rep_v3_to_v1(TWIST_20) == ref[("g13", TWIST_20)]
    assert rep_v2_to_v1(e, TWIST_02) == ref[("g12", TWIST_02)]
    assert rep_v3_to_v1(TWIST_02) == ref[("g13", TWIST_02)]


def test_basis_permutation_is_identity():
    assert trace_free_basis_permutation(_reference_reps(F(3), F(7))) == (0, 1, 2)


# -- closed-form constructors ---------------------------------------------------


def test_build_phi1_zero_params():
    assert build_phi1(E10, Phi1Params()).is_zero()


def test_build_phi1_c12_only():
    m = build_phi1(E10, Phi1Params(c12=F(1)))
    assert m.entry(0, 0) == Z1 * Z1 * Z2  # A1 = u c12 z1^2 z2 with u=1
    assert m.entry(0, 1) == -(Z1**3)  # B1 = -u^2 c12 z1^3
    assert m.entry(1, 0) == Z1 * Z2 * Z2


def test_build_phi1_c01_only():
    m = build_phi1(E01, Phi1Params(c01=F(1)))
    assert m.entry(0, 0) == BiPoly.const(F(1, 2))  # A1 = v c01 / 2
    assert m.entry(0, 1) == BiPoly.zero()
    assert m.entry(1, 0) == Z2


def test_build_phi2_examples():
    m = build_phi2(E01, Phi2Params(a02=F(1)))
    assert m.entry(0, 1) == -2 * Z2  # b01 = -2 v a02
    m = build_phi2(E10, Phi2Params(a02=F(1)))
    assert m.entry(0, 1) == -2 * Z1 * Z2  # b11 = -2 u a02
    assert build_phi2(E37, Phi2Params()).is_zero()
    assert build_phi2(E37, Phi2Params(b00=F(2), b10=F(3))).entry(0, 1) == 3 * Z1 + 2


def test_glue_check_accepts_constructors():
    rng = random.Random(13)
    for _ in range(100):
        e = _random_ext(rng)
        assert glue_check(e, build_phi1(e, _random_p1(rng)), TWIST_20)
        assert glue_check(e, build_phi2(e, _random_p2(rng)), TWIST_02)


def test_glue_check_rejects_perturbation():
    rng = random.Random(14)
    for _ in range(10):
        e = _random_ext(rng)
        m = build_phi1(e, _random_p1(rng))
        perturbed = PolyMat2(
            [
                [m.entry(0, 0), m.entry(0, 1) + 1],  # bump the b00 coefficient
                [m.entry(1, 0), m.entry(1, 1)],
            ]
        )
        assert not glue_check(e, perturbed, TWIST_20)


def test_v4_regularity_is_redundant():
    rng = random.Random(15)
    for _ in range(50):
        e = _random_ext(rng)
        assert v4_trivialization_regular(e, build_phi1(e, _random_p1(rng)), TWIST_20)
        assert v4_trivialization_regular(e, build_phi2(e, _random_p2(rng)), TWIST_02)


def _coefficient_vector(m: PolyMat2, box: int = 4) -> list[F]:
    vec = []
    for entry in (m.entry(0, 0), m.entry(0, 1), m.entry(1, 0)):
        for i in range(box + 1):
            for j in range(box + 1):
                vec.append(entry.coeff(i, j))
    return vec


def test_constructor_families_span_expected_dimensions():
    rng = random.Random(16)
    for e in (E01, E10, E37, _random_ext(rng)):
        basis1 = [
            _coefficient_vector(build_phi1(e, Phi1Params(**{k: F(1)})))
            for k in ("c00", "c01", "c02", "c10", "c11", "c12")
        ]
        assert rank(basis1) == 6
        basis2 = [
            _coefficient_vector(build_phi2(e, Phi2Params(**{k: F(1)})))
            for k in ("a00", "a01", "a02", "b00", "b10")
        ]
        assert rank(basis2) == 5


# -- independent dimension count -------------------------------------------------


def test_end0T_dimension_examples():
    assert end0T_dimension(E01) == (6, 5, 11)
    assert end0T_dimension(E10) == (6, 5, 11)
    assert end0T_dimension(E37) == (6, 5, 11)


def test_end0T_dimension_grid():
    values = [F(-2), F(-1), F(0), F(1), F(3)]
    for u in values:
        for v in values:
            e = ExtParams(u, v)
            if e.is_trivial():
                continue
            assert end0T_dimension(e) == (6, 5, 11)


def test_end0T_dimension_trivial_extension_rejected():
    with pytest.raises(TrivialExtension):
        end0T_dimension(ExtParams(F(0), F(0)))


# -- dichotomy --------------------------------------------------------------------


def test_dichotomy_examples():
    assert dichotomy_check(E01, Phi1Params(), _p2 := Phi2Params(a00=F(1))) is Dichotomy.PHI2_ONLY
    assert dichotomy_check(E01, Phi1Params(c01=F(1)), Phi2Params()) is Dichotomy.PHI1_ONLY
    assert (
        dichotomy_check(E01, Phi1Params(c01=F(1)), Phi2Params(a00=F(1)))
        is Dichotomy.NOT_INTEGRABLE
    )
    assert dichotomy_check(E37, Phi1Params(), Phi2Params()) is Dichotomy.ZERO
    with pytest.raises(TrivialExtension):
        dichotomy_check(ExtParams(F(0), F(0)), Phi1Params(), Phi2Params())


def test_dichotomy_random_draws():
    rng = random.Random(17)
    both_checked = 0
    for _ in range(100):
        e = _random_ext(rng)
        p1 = _random_p1(rng)
        p2 = _random_p2(rng)
        if p1.is_zero() or p2.is_zero():
            continue
        both_checked += 1
        assert dichotomy_check(e, p1, p2) is Dichotomy.NOT_INTEGRABLE
        assert dichotomy_check(e, p1, Phi2Params()) is Dichotomy.PHI1_ONLY
        assert dichotomy_check(e, Phi1Params(), p2) is Dichotomy.PHI2_ONLY
    assert both_checked >= 90


# -- strata and weak isomorphism ---------------------------------------------------


def test_stratum_classify_examples():
    p = ModuliPoint(
        ExtParams(F(0), F(0)),
        Stratum.S0,
        TrivialFieldData(F(2), (F(1), F(0), F(3))),
    )
    assert stratum_classify(p) == p

    p = ModuliPoint(ExtParams(F(2), F(4)), Stratum.S1, Phi1Params(c00=F(1)))
    normalized = stratum_classify(p)
    assert normalized.ext == ExtParams(F(1), F(2))

    p = ModuliPoint(ExtParams(F(0), F(5)), Stratum.S2, Phi2Params(a00=F(1)))
    assert stratum_classify(p).ext == ExtParams(F(0), F(1))


def test_stratum_classify_inconsistencies():
    with pytest.raises(InconsistentPoint):
        stratum_classify(
            ModuliPoint(ExtParams(F(1), F(0)), Stratum.S0, TrivialFieldData(F(0), (F(0),) * 3))
        )
    with pytest.raises(InconsistentPoint):
        stratum_classify(ModuliPoint(ExtParams(F(0), F(0)), Stratum.S1, Phi1Params()))
    with pytest.raises(InconsistentPoint):
        stratum_classify(ModuliPoint(ExtParams(F(1), F(1)), Stratum.S1, Phi2Params()))


def test_normalization_constant_on_weak_iso_classes():
    rng = random.Random(18)
    for _ in range(50):
        e = _random_ext(rng)
        scale = random_rat(rng, 5) or F(1)
        scaled = ExtParams(e.u * scale, e.v * scale)
        assert weak_iso(e, scaled)
        p = ModuliPoint(e, Stratum.S1, Phi1Params(c00=F(1)))
        q = ModuliPoint(scaled, Stratum.S1, Phi1Params(c00=F(1)))
        assert stratum_classify(p).ext == stratum_classify(q).ext


def test_weak_iso_examples():
    assert weak_iso(ExtParams(F(1), F(2)), ExtParams(F(2), F(4)))
    assert not weak_iso(ExtParams(F(1), F(0)), ExtParams(F(0), F(1)))
    assert weak_iso(ExtParams(F(3), F(6)), ExtParams(F(1), F(2)))
    with pytest.raises(TrivialExtension):
        weak_iso(ExtParams(F(0), F(0)), ExtParams(F(1), F(1)))


def test_weak_iso_is_equivalence_relation():
    rng = random.Random(19)
    classes = [_random_ext(rng) for _ in range(12)]
    for a in classes:
        assert weak_iso(a, a)
        for b in classes:
            assert weak_iso(a, b) == weak_iso(b, a)
            for c in classes:
                if weak_iso(a, b) and weak_iso(b, c):
                    assert weak_iso(a, c)


def test_stratum_parameter_counts():
    # free parameters: 6 on the Phi_1 side, 5 on the Phi_2 side (the fibre
    # X_{u,v} is their union, dimension 6); the split stratum carries
    # 1 + 3; adding the projective extension parameter gives total 7
    import dataclasses

    assert len(dataclasses.fields(Phi1Params)) == 6
    assert len(dataclasses.fields(Phi2Params)) == 5
    t = TrivialFieldData(F(0), (F(0),) * 3)
    assert 1 + len(t.w) == 4
    fibre_dim = max(len(dataclasses.fields(Phi1Params)), len(dataclasses.fields(Phi2Params)))
    assert fibre_dim == 6
    assert fibre_dim + (2 - 1) == 7  # plus [u : v] modulo scaling


# -- trivial-extension normal form --------------------------------------------------


def test_trivial_extension_normal_form_example():
    f = field(TRIVIAL_EXTENSION_BUNDLE, a2=Z2, b2=2 * Z1 - 2)
    rep = trivial_extension_normal_form(f)
    assert rep.phi2.entry(0, 1) == Z1 - 1
    assert rep.phi2.entry(0, 0) == Z2  # A2 untouched
    assert det2(rep.phi2) == det2(f.phi2)


def test_trivial_extension_normal_form_monic_unchanged():
    f = field(TRIVIAL_EXTENSION_BUNDLE, a2=Z2 * Z2, b2=Z1 - 3)
    assert trivial_extension_normal_form(f) == f


def test_trivial_extension_normal_form_idempotent_and_det():
    rng = random.Random(20)
    for _ in range(25):
        b0 = random_rat(rng, 6)
        b1 = random_rat(rng, 6)
        if not b1:
            continue
        a2 = BiPoly.from_univariate([random_rat(rng, 6) for _ in range(3)], 2)
        f = field(TRIVIAL_EXTENSION_BUNDLE, a2=a2, b2=BiPoly.from_univariate([b0, b1], 1))
        rep = trivial_extension_normal_form(f)
        assert det2(rep.phi2) == det2(f.phi2)
        assert trivial_extension_normal_form(rep) == rep


def test_trivial_extension_normal_form_errors():
    from cohiggs.higgs import DecomposableBundle as DB

    with pytest.raises(LeadingCoefficientZero):
        trivial_extension_normal_form(
            field(TRIVIAL_EXTENSION_BUNDLE, a2=Z2, b2=BiPoly.const(1))
        )
    with pytest.raises(NotInNormalFormDomain):
        trivial_extension_normal_form(field(TRIVIAL_EXTENSION_BUNDLE, a1=Z1, b2=Z1))
    with pytest.raises(NotInNormalFormDomain):
        trivial_extension_normal_form(field(DB(O(0, 0), O(0, 0))))
