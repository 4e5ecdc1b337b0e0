"""The decision engine: rule dispatch, criterion firing, report integrity."""

import pytest

from gbflab import numtheory as nt
from gbflab.criteria import (C1, C2, C3, C4, C5, EXISTS, NOT_EXISTS, UNKNOWN,
                             crit_lam_leung, crit_p3_x_p5, crit_p7,
                             crit_p7_x_p35, crit_semiprimitive, decide,
                             report_from_dict, revalidate_report, rule_exists)
from gbflab.gbf import GbfType, is_gbf


def test_rule_exists_examples():
    w, rule = rule_exists(GbfType(6, 2))
    assert rule == "E3" and is_gbf(w)
    w, rule = rule_exists(GbfType(8, 3))
    assert rule == "E1" and w.gbf_type == GbfType(8, 3) and is_gbf(w)
    assert rule_exists(GbfType(2, 3)) is None
    assert rule_exists(GbfType(3, 2)) is None
    assert rule_exists(GbfType(15, 3)) is None
    w, rule = rule_exists(GbfType(2, 4))
    assert rule == "E2" and is_gbf(w)
    w, rule = rule_exists(GbfType(4, 5))
    assert rule == "E1" and is_gbf(w)


def test_decide_guards():
    with pytest.raises(ValueError):
        decide(GbfType(4, 25))
    with pytest.raises(ValueError):
        GbfType(1, 3)


def test_decide_examples():
    v = decide(GbfType(4, 5))
    assert v.kind == EXISTS and v.rule == "E1" and is_gbf(v.witness)

    v = decide(GbfType(9, 3))
    assert v.kind == NOT_EXISTS and v.report.criterion == C1

    v = decide(GbfType(2 * 199, 7))
    assert v.kind == NOT_EXISTS and v.report.criterion == C3
    q = v.report.quantities
    assert q["s"] == 1 and q["r"] == 9

    v = decide(GbfType(14, 1))
    assert v.kind == UNKNOWN
    assert {rep.criterion for rep in v.attempts} == {C2, C3}


def test_c1_examples():
    assert crit_lam_leung(GbfType(7 ** 2 * 13, 6)).fired
    rep = crit_lam_leung(GbfType(3 * 5, 3))
    assert not rep.fired
    assert rep.quantities["semigroup"]["solution"] == [1, 1]
    for p, a in ((3, 2), (7, 1), (11, 3)):
        for n in range(1, 7):
            assert crit_lam_leung(GbfType(p ** a, n)).fired
    assert crit_lam_leung(GbfType(6, 1)) is None


def test_c1_boundary_at_n7():
    rep = crit_lam_leung(GbfType(7 * 13, 7))
    assert not rep.fired
    assert rep.quantities["semigroup"]["solution"] == [9, 5]


def test_c2_examples():
    rep = crit_semiprimitive(GbfType(6, 3))
    assert rep.fired and rep.quantities["l"] == 1 and rep.quantities["case"] == "I"

    rep = crit_semiprimitive(GbfType(2 * 5 * 13, 1))
    assert rep.fired
    assert rep.quantities["case"] == "II"
    assert [row[2] for row in rep.quantities["prime_table"]] == [2, 2]

    rep = crit_semiprimitive(GbfType(2 * 7, 3))
    assert rep is not None and not rep.fired

    assert crit_semiprimitive(GbfType(6, 2)) is None        # even n
    assert crit_semiprimitive(GbfType(12, 3)) is None       # 4 | m
    assert crit_semiprimitive(GbfType(2, 3)) is None        # odd part 1


def test_c3_examples():
    rep = crit_p7(GbfType(2 * 47, 3))
    assert rep.fired and rep.quantities["s"] == 1 and rep.quantities["r"] == 5

    rep = crit_p7(GbfType(2 * 191, 11))
    assert rep.fired and rep.quantities["r"] == 13

    rep = crit_p7(GbfType(2 * 7, 1))
    assert rep is not None and not rep.fired
    assert rep.quantities["r"] == 1

    # divisor propagation: stated at {2 p^l, n}, concluded for odd p^l input
    rep = crit_p7(GbfType(199, 3))
    assert rep.fired and rep.propagated
    assert rep.covers == [[398, 3]]

    assert crit_p7(GbfType(2 * 17, 3)) is None     # p = 1 mod 8
    assert crit_p7(GbfType(2 * 7 * 13, 3)) is None  # two primes


def test_c3_order_taken_at_prime_power():
    rep = crit_p7(GbfType(2 * 7 ** 2, 1))
    q = rep.quantities
    assert q["order_modulus"] == 49
    assert q["f"] == nt.mult_order_2(49) == 21
    assert q["g"] == 2 and q["s"] == 1


def test_c4_examples():
    rep = crit_p7_x_p35(GbfType(2 * 199 * 59, 7))
    assert rep.fired
    q = rep.quantities
    assert q["branch"] == "I" and q["s"] == 1 and q["r1"] == 9

    rep = crit_p7_x_p35(GbfType(2 * 199 * 5, 3))
    assert rep.fired
    q = rep.quantities
    assert q["branch"] == "II" and q["r2"] == 5 and q["r"] == 5
    x, y = q["r2_witness"]
    assert x * x + 199 * y * y == 2 ** 7 * 5
    assert q["r2_even_hits"] and q["r2_even_hits"][0][0] == 4

    rep = crit_p7_x_p35(GbfType(2 * 199 * 5, 5))
    assert rep is not None and not rep.fired

    assert crit_p7_x_p35(GbfType(2 * 199, 3)) is None       # one prime
    assert crit_p7_x_p35(GbfType(2 * 199 * 17, 3)) is None  # p2 = 1 mod 8


def test_c5_examples():
    rep = crit_p3_x_p5(GbfType(2 * 19 * 29, 11))
    assert rep.fired
    q = rep.quantities
    assert q["branch"] == "II" and q["s"] == 1 and q["r"] == 13
    x, y = q["r_witness"]
    assert 19 * x * x + 29 * y * y == 2 ** 15

    rep = crit_p3_x_p5(GbfType(2 * 19 * 29, 13))
    assert rep is not None and not rep.fired

    rep = crit_p3_x_p5(GbfType(2 * 3 * 5, 1))
    q = rep.quantities
    assert q["branch"] == "II" and q["r"] == 1          # 3 + 5 = 2^3
    assert not rep.fired                                 # need n < 1

    rep = crit_p3_x_p5(GbfType(2 * 11 * 5, 7))
    assert rep.fired and rep.quantities["branch"] == "I"

    assert crit_p3_x_p5(GbfType(2 * 3 * 7, 1)) is None


def test_first_fired_wins_and_others_recorded():
    v = decide(GbfType(9, 3))
    assert v.report.criterion == C1
    assert C2 in v.report.also_applicable


def test_reports_revalidate():
    cases = [(9, 3), (6, 1), (2 * 47, 3), (2 * 199 * 5, 3), (2 * 19 * 29, 5),
             (2 * 5 * 13, 1), (91, 6), (2 * 9 * 13, 1)]
    for m, n in cases:
        v = decide(GbfType(m, n))
        if v.kind == NOT_EXISTS:
            assert revalidate_report(v.report)
            # round trip through plain dicts
            assert revalidate_report(report_from_dict(v.report.to_dict()))


def test_revalidation_catches_tampering():
    v = decide(GbfType(2 * 47, 3))
    rep = report_from_dict(v.report.to_dict())
    rep.quantities["r"] = 7
    with pytest.raises(ValueError):
        revalidate_report(rep)


def test_criterion_abstains_on_internal_failure(monkeypatch):
    # a missing r within the bound must abstain, never conclude
    from gbflab import criteria as cr
    monkeypatch.setattr(cr.nt, "min_odd_r", lambda *a, **k: None)
    rep = cr.crit_p7(GbfType(2 * 47, 3))
    assert rep is not None and not rep.fired
    assert any("abstain" in note for note in rep.notes)


def test_decide_deterministic():
    for m, n in ((9, 3), (14, 1), (8, 3), (2 * 19 * 29, 7)):
        a = decide(GbfType(m, n))
        b = decide(GbfType(m, n))
        assert a.kind == b.kind
        if a.report:
            assert a.report.to_dict() == b.report.to_dict()
        if a.witness:
            assert a.witness == b.witness


def test_monotone_consistency_small_grid():
    # nonexistence at m forbids existence at every divisor of m
    verdicts = {}
    for m in range(2, 61):
        for n in range(1, 5):
            verdicts[(m, n)] = decide(GbfType(m, n)).kind
    for (m, n), kind in verdicts.items():
        if kind != NOT_EXISTS:
            continue
        for d in range(2, m + 1):
            if m % d == 0:
                assert verdicts[(d, n)] != EXISTS, (m, d, n)


def test_unknown_is_first_class():
    v = decide(GbfType(14, 1))
    assert v.kind == UNKNOWN and v.witness is None and v.report is None
    assert all(not rep.fired for rep in v.attempts)
