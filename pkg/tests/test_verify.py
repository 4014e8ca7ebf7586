import json
from fractions import Fraction

import pytest

import mutants
from defrost import families as F
from defrost import verify as V
from defrost.errors import BadD, BadOrder, RootOfUnityLikeU, UEqualsOne, UZero
from defrost.numeric import X, Poly, genfall
from defrost.verify import IdentityId as I

SMALL_GRID = V.Grid(us=(Fraction(2), Fraction(-1)), lambdas=(Fraction(0), Fraction(1, 2)),
                    orders=(1, 2), ds=(1, 2, 3))


def test_T2_degree_one_by_hand():
    for u in (Fraction(2), Fraction(1, 2), Fraction(-3)):
        for lam in (Fraction(1), Fraction(-2, 3), Fraction(0)):
            lhs = -F.dfe_poly(1, u, -lam)(-X)
            rhs = F.dfe_poly(1, 1 / u, lam)(X + 1)
            assert lhs == rhs == X + 1 / (1 - u)


def test_T2_full_run():
    assert V.check_T2_reflection(2, Fraction(1, 3), 16).passed


def test_T2_preconditions():
    with pytest.raises(UZero):
        V.check_T2_reflection(0, 1, 3)
    with pytest.raises(UEqualsOne):
        V.check_T2_reflection(1, 1, 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_T3_degree_zero_collapses(d):
    for u in (Fraction(2), Fraction(-3), Fraction(1, 2)):
        inner = F.dfe_poly_seq(0, u ** d, Fraction(1, 2) / d)
        assert V.distribution_rhs(0, u, Fraction(1, 2), d, inner) == 1


def test_T3_degree_one_d_two_by_hand():
    u, lam = Fraction(2), Fraction(1)
    # h_{1,lam/2}(y|u^2) = y + 1/(u^2-1)
    inner = [None, X + 1 / (u ** 2 - 1)]
    assert F.dfe_poly_seq(1, u ** 2, lam / 2)[1] == inner[1]
    assert V.distribution_rhs(1, u, lam, 2, inner) == X + 1 / (u - 1)


def test_T3_full_run():
    assert V.check_T3_distribution(2, Fraction(1, 2), 3, 10).passed


def test_T3_preconditions():
    with pytest.raises(RootOfUnityLikeU):
        V.check_T3_distribution(-1, 1, 2, 3)
    with pytest.raises(BadD):
        V.check_T3_distribution(2, 1, 0, 3)
    with pytest.raises(UEqualsOne):
        V.check_T3_distribution(1, 1, 2, 3)


def test_T4_reductions():
    u, lam, r = Fraction(-3, 5), Fraction(1), 2
    seq = F.dfe_higher_poly_seq(8, r, u, lam)
    # y = 0 leaves only l = n; x = 0 is the numbers expansion
    for n in range(9):
        assert sum(V.comb(n, l) * seq[l] * genfall(0, lam, n - l) for l in range(n + 1)) == seq[n]
    h = F.dfe_higher_numbers(r, u, lam, 8)
    for n in range(9):
        assert seq[n] == sum((V.comb(n, l) * h[l] * genfall(X, lam, n - l) for l in range(n + 1)), Poly())


def test_T4_full_run():
    assert V.check_T4_addition(Fraction(-3, 5), 1, 2, 12).passed
    with pytest.raises(BadOrder):
        V.check_T4_addition(2, 1, 0, 3)


def test_T4_as_printed_fails():
    # second factor (x|lam)_{n-l}, as typeset, is not an identity
    u, lam, r = Fraction(2), Fraction(1), 1
    seq = F.dfe_higher_poly_seq(3, r, u, lam)
    x, y = Fraction(1, 2), Fraction(1, 3)
    n = 1
    printed = sum(V.comb(n, l) * seq[l](x) * genfall(x, lam, n - l) for l in range(n + 1))
    assert printed != seq[n](x + y)


def test_T7_r_one_is_shift_identity():
    rep = V.check_T7_order_reduction(2, Fraction(1, 2), 1, 10)
    assert rep.passed
    for n, h in enumerate(F.dfe_poly_seq(10, 2, Fraction(1, 2))):
        assert (h(X + 1) - 2 * h) / (1 - 2) == genfall(X, Fraction(1, 2), n)


def test_T7_full_run():
    assert V.check_T7_order_reduction(Fraction(1, 2), Fraction(-2, 3), 3, 12).passed


def test_T5_T6_single_runs():
    assert V.check_T5_h_to_H(2, Fraction(1, 2), 3, 10).passed
    assert V.check_T6_H_to_h(-3, Fraction(1, 3), 2, 10).passed


def test_theorem5_unsuperscripted_reading_fails_for_r2():
    # summing order-1 h against S2 does not give H^{(2)}
    from defrost.stirling import h_to_H
    lam = Fraction(1, 2)
    got = h_to_H(F.dfe_poly_seq(4, 2, lam), lam)
    assert got != F.classical_fe_higher_seq(4, 2, 2)


def test_limit_interpolation_helper():
    # value at 0 of 3 + 2t + t^2 through three nonzero nodes
    pts = [(Fraction(k), Fraction(3 + 2 * k + k * k)) for k in (1, 2, 5)]
    assert V.limit_at_zero(pts) == 3
    assert V.limit_at_zero_at(pts, Fraction(4)) == 3 + 8 + 16


def test_limit_and_relatives():
    assert V.check_L_lambda_zero_limit(Fraction(-3, 5), 12).passed
    assert V.check_D_derivative_classical(2, 20).passed
    assert V.check_B_bernoulli_limit(12).passed
    assert V.check_R_genocchi(Fraction(-2, 3), 12).passed


def test_classical_bernoulli_numbers():
    assert V.classical_bernoulli_numbers(6) == list(V.BERNOULLI_B0_B6)


def test_check_all_shape_and_order():
    reports = V.check_all(SMALL_GRID, 6)
    assert len(reports) == len(SMALL_GRID.points()) * len(I)
    expected = [(i, p) for i in I for p in SMALL_GRID.points()]
    assert [(r.identity, (r.params["u"], r.params["lam"])) for r in reports] == expected
    for r in reports:
        assert r.status in (V.PASS, V.SKIPPED), r.to_dict()
        assert (r.status == V.PASS) == (r.first_failure is None) or r.status == V.SKIPPED


def test_check_all_skips_inadmissible():
    grid = V.Grid(us=(Fraction(1), Fraction(0), Fraction(-1)), lambdas=(Fraction(1, 2),),
                  orders=(1,), ds=(2,))
    reports = {(r.identity, r.params["u"]): r for r in V.check_all(grid, 4)}
    for ident in I:
        rep = reports[(ident, Fraction(1))]
        if ident in (I.R_genocchi, I.B_bernoulli_limit):
            assert rep.passed
        else:
            assert rep.status == V.SKIPPED and rep.reason
    assert reports[(I.T2_reflection, Fraction(0))].status == V.SKIPPED
    assert reports[(I.T3_distribution, Fraction(0))].status == V.SKIPPED
    # u = -1 with d = 2 gives u^d = 1
    t3 = reports[(I.T3_distribution, Fraction(-1))]
    assert t3.status == V.SKIPPED and "u^d" in t3.reason


def test_check_all_partial_d_filter():
    grid = V.Grid(us=(Fraction(-1),), lambdas=(Fraction(1),), orders=(1,), ds=(1, 2, 3))
    [rep] = V.check_all(grid, 4, identities=[I.T3_distribution])
    assert rep.passed
    assert rep.params["d"] == [1, 3] and rep.params["skipped_d"] == [2]


def test_empty_grid_rejected():
    with pytest.raises(ValueError):
        V.check_all(V.Grid(us=()), 3)


def test_report_json():
    reports = V.check_all(SMALL_GRID, 3, identities=[I.T1_delta])
    doc = V.reports_to_json(reports)
    text = json.dumps(doc)
    assert "." not in text.replace('"', " ").split("identity")[0]
    assert doc[0]["params"]["u"] == "2" and doc[0]["params"]["lambda"] == "0"
    assert "first_failure" not in doc[0]


def test_off_by_one_fails_delta_at_two():
    rep = V.check_T1_delta(2, Fraction(1, 2), 12, fam=mutants.OffByOneFalling())
    assert rep.status == V.FAIL
    ff = rep.first_failure
    assert ff.n == 2
    d = rep.to_dict()["first_failure"]
    assert d["rhs"] == "0" and d["lhs"] != "0"


# identity -> (mutant, u, lambda) where the seeded defect must be caught
MUTATIONS = {
    I.T1_expansion: (mutants.OffByOneFalling, 2, Fraction(1, 2)),
    I.T1_shift: (mutants.OffByOneFalling, 2, Fraction(1, 2)),
    I.T1_delta: (mutants.OffByOneFalling, 2, Fraction(1, 2)),
    I.T2_reflection: (mutants.OffByOneFalling, 2, Fraction(1, 2)),
    I.T3_distribution: (mutants.OffByOneFalling, 2, Fraction(1, 2)),
    I.T4_addition: (mutants.MonomialExpansion, 2, Fraction(1, 2)),
    I.T5_h_to_H: (mutants.ExtraConvolution, 2, Fraction(1, 2)),
    I.T6_H_to_h: (mutants.ExtraConvolution, 2, Fraction(1, 2)),
    I.T7_order_reduction: (mutants.ExtraConvolution, 2, Fraction(1, 2)),
    I.R_genocchi: (mutants.GenocchiWrongFactor, 2, Fraction(1, 2)),
    I.L_lambda_zero_limit: (mutants.WrongClassicalSign, 2, Fraction(0)),
    I.D_derivative_classical: (mutants.ClassicalWithoutBinomials, 2, Fraction(0)),
    I.B_bernoulli_limit: (mutants.BernoulliWrongDivisor, 2, Fraction(0)),
}


@pytest.mark.parametrize("identity", list(I))
def test_every_checker_catches_a_mutant(identity):
    cls, u, lam = MUTATIONS[identity]
    grid = V.Grid(us=(Fraction(u),), lambdas=(lam,), orders=(1, 2), ds=(2,))
    [rep] = V.check_all(grid, 8, identities=[identity], fam=cls())
    assert rep.status == V.FAIL
    assert rep.first_failure is not None
    d = rep.to_dict()["first_failure"]
    assert d["lhs"] != d["rhs"]


@pytest.mark.parametrize("identity", list(I))
def test_unmutated_checkers_pass(identity):
    _, u, lam = MUTATIONS[identity]
    grid = V.Grid(us=(Fraction(u),), lambdas=(lam,), orders=(1, 2), ds=(2,))
    [rep] = V.check_all(grid, 8, identities=[identity])
    assert rep.passed
