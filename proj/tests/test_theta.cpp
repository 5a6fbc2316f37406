#include <catch2/catch_amalgamated.hpp>

#include "rankforge/theta.hpp"

using namespace rankforge;

namespace {

constexpr long kOrder = 200;

LaurentSeries quotient(std::vector<std::pair<long, long>> factors, long T,
                       const CycRat& pre = CycRat(1), long qshift = 0) {
    EtaQuotientSpec spec;
    spec.prefactor = pre;
    spec.qShift = qshift;
    spec.factors = std::move(factors);
    return eval_eta_quotient(spec, T);
}

void require_equal(const LaurentSeries& lhs, const LaurentSeries& rhs, long order = kOrder) {
    CompareOutcome res = equals_up_to(lhs, rhs, order);
    INFO("first discrepancy at q^" << res.diff_exp << ": " << res.lhs.to_string()
                                   << " vs " << res.rhs.to_string());
    REQUIRE(res.equal);
    REQUIRE(res.window_hi - res.window_lo >= 16);
}

/// Product-form oracle for the bilateral theta sum, assembled purely from
/// Pochhammer factors: j(c q^a; q^m) = (cq^a;q^m)_inf (c^-1 q^{m-a};q^m)_inf J_m.
/// For a = m the second factor starts at exponent zero; peel the constant.
LaurentSeries jacobi_product_oracle(const CycRat& c, long a, long m, long T) {
    REQUIRE(a >= 1);
    REQUIRE(a <= m);
    LaurentSeries left = pochhammer_inf(c, a, m, T);
    CycRat cinv = c.inverse();
    LaurentSeries right;
    if (a < m) {
        right = pochhammer_inf(cinv, m - a, m, T);
    } else {
        right = scale(pochhammer_inf(cinv, m, m, T), CycRat(1) - cinv);
    }
    return mul(mul(left, right), eta_product(m, T));
}

}  // namespace

TEST_CASE("pentagonal expansion of the Euler product") {
    LaurentSeries j1 = eta_product(1, 13);
    long expected[13] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (long e = 0; e < 13; ++e) REQUIRE(j1.coeff(e) == CycRat(expected[e]));
    REQUIRE(eta_product(5, 40).coeff(0) == CycRat(1));
    REQUIRE(eta_product(7, 50).coeff(7) == CycRat(-1));
}

TEST_CASE("eta product in q^2 is the substituted eta product") {
    require_equal(eta_product(2, 20), substitute_power(eta_product(1, 10), 2), 20);
    REQUIRE_THROWS_AS(eta_product(0, 10), Error);
}

TEST_CASE("eta cache returns consistent windows") {
    LaurentSeries small = eta_product(3, 20);
    LaurentSeries large = eta_product(3, 120);
    LaurentSeries again = eta_product(3, 20);
    require_equal(small, again, 20);
    require_equal(small, large.truncated(20), 20);
}

TEST_CASE("theta sum matches classic product rearrangements") {
    // Jbar_{1,4} = J2^2/J1, Jbar_{1,2} = J2^5/(J1^2 J4^2),
    // J_{1,2} = J1^2/J2, J_{1,4} = J1 J4/J2.
    require_equal(jbar(1, 4, kOrder), quotient({{2, 2}, {1, -1}}, kOrder));
    require_equal(jbar(1, 2, kOrder), quotient({{2, 5}, {1, -2}, {4, -2}}, kOrder));
    require_equal(jsub(1, 2, kOrder), quotient({{1, 2}, {2, -1}}, kOrder));
    require_equal(jsub(1, 4, kOrder), quotient({{1, 1}, {4, 1}, {2, -1}}, kOrder));
}

TEST_CASE("theta sum matches the Pochhammer product assembly") {
    require_equal(jsub(1, 3, kOrder),
                  mul(mul(pochhammer_inf(CycRat(1), 1, 3, kOrder),
                          pochhammer_inf(CycRat(1), 2, 3, kOrder)),
                      eta_product(3, kOrder)));
    // Every (c, a, m) triple a j-atom of the bundled catalog uses.
    struct Arg { CycRat c; long a; long m; };
    CycRat i = CycRat::i_unit();
    std::vector<Arg> args = {
        {CycRat(1), 1, 2},  {CycRat(-1), 1, 2}, {CycRat(-1), 4, 4}, {CycRat(1), 1, 4},
        {CycRat(-1), 6, 8}, {CycRat::zeta8(), 1, 2}, {-i, 4, 4},
    };
    for (const auto& arg : args) {
        require_equal(jacobi_j(arg.c, arg.a, arg.m, kOrder),
                      jacobi_product_oracle(arg.c, arg.a, arg.m, kOrder));
    }
}

TEST_CASE("degenerate theta triples") {
    REQUIRE(is_degenerate_theta(CycRat(1), 0, 2));
    REQUIRE(is_degenerate_theta(CycRat(1), 4, 2));
    REQUIRE(is_degenerate_theta(CycRat(1), -2, 2));
    REQUIRE_FALSE(is_degenerate_theta(CycRat(-1), 0, 2));
    REQUIRE_FALSE(is_degenerate_theta(CycRat(1), 1, 2));
    REQUIRE(jacobi_j(CycRat(1), 2, 2, 30).is_zero_on_window());
    REQUIRE_THROWS_AS(ThetaAtom::make_j(CycRat(1), 2, 2), DegenerateTheta);
    REQUIRE_THROWS_AS(ThetaAtom::make_jsub(4, 4), DegenerateTheta);
    REQUIRE_NOTHROW(ThetaAtom::make_jbar(4, 4));
}

TEST_CASE("phi and psi expansions") {
    LaurentSeries f = phi(1, 10);
    REQUIRE(f.coeff(0) == CycRat(1));
    REQUIRE(f.coeff(1) == CycRat(2));
    REQUIRE(f.coeff(2).is_zero());
    REQUIRE(f.coeff(4) == CycRat(2));
    REQUIRE(f.coeff(9) == CycRat(2));
    LaurentSeries g = psi(1, 7);
    REQUIRE(g.coeff(0) == CycRat(1));
    REQUIRE(g.coeff(1) == CycRat(1));
    REQUIRE(g.coeff(2).is_zero());
    REQUIRE(g.coeff(3) == CycRat(1));
    REQUIRE(g.coeff(6) == CycRat(1));
    require_equal(phi(1, kOrder), quotient({{2, 5}, {1, -2}, {4, -2}}, kOrder));
    require_equal(psi(1, kOrder), quotient({{2, 2}, {1, -1}}, kOrder));
}

TEST_CASE("finite Pochhammer products") {
    LaurentSeries f = pochhammer_fin(CycRat(1), 1, 1, 2, 20);
    REQUIRE(f.coeff(0) == CycRat(1));
    REQUIRE(f.coeff(1) == CycRat(-1));
    REQUIRE(f.coeff(2) == CycRat(-1));
    REQUIRE(f.coeff(3) == CycRat(1));
    REQUIRE(f.coeff(4).is_zero());
    require_equal(pochhammer_fin(CycRat(-1), 3, 5, 0, 20),
                  LaurentSeries::constant(CycRat(1), 20), 20);
    require_equal(pochhammer_fin(CycRat(-1), 0, 1, 1, 20),
                  LaurentSeries::constant(CycRat(2), 20), 20);
}

TEST_CASE("infinite Pochhammer products") {
    require_equal(pochhammer_inf(CycRat(1), 1, 1, kOrder), eta_product(1, kOrder));
    require_equal(mul(pochhammer_inf(CycRat(1), 2, 2, kOrder),
                      pochhammer_inf(CycRat(1), 1, 2, kOrder)),
                  eta_product(1, kOrder));
    require_equal(jacobi_j(CycRat(-1), 1, 2, kOrder),
                  mul(mul(pochhammer_inf(CycRat(-1), 1, 2, kOrder),
                          pochhammer_inf(CycRat(-1), 1, 2, kOrder)),
                      eta_product(2, kOrder)));
    REQUIRE_THROWS_AS(pochhammer_inf(CycRat(1), 0, 2, 10), NonconvergentProduct);
    REQUIRE_THROWS_AS(pochhammer_inf(CycRat(1), -3, 2, 10), NonconvergentProduct);
}

TEST_CASE("eta quotient evaluator") {
    LaurentSeries f = quotient({{2, 4}, {1, -2}, {4, -1}}, kOrder);
    REQUIRE(f.coeff(0) == CycRat(1));
    require_equal(f, mul(pow_series(eta_product(2, kOrder), 4, kOrder),
                         invert(mul(pow_series(eta_product(1, kOrder), 2, kOrder),
                                    eta_product(4, kOrder)))));
    require_equal(quotient({}, 50), LaurentSeries::constant(CycRat(1), 50), 50);
    require_equal(mul(quotient({{1, 1}}, 60), quotient({{1, -1}}, 60)),
                  LaurentSeries::constant(CycRat(1), 60), 60);
    LaurentSeries g = quotient({{1, -1}}, 40, CycRat(3), -2);
    REQUIRE(g.min_exp() == -2);
    REQUIRE(g.coeff(-2) == CycRat(3));
    REQUIRE(g.coeff(-1) == CycRat(3));  // p(1) = 1 scaled by 3
}

TEST_CASE("Entry 25 dissections of phi and psi") {
    require_equal(phi(1, kOrder),
                  add(phi(4, kOrder), shift(scale(psi(8, kOrder), CycRat(2)), 1)));
    require_equal(pow_series(phi(1, kOrder), 2, kOrder),
                  add(pow_series(phi(2, kOrder), 2, kOrder),
                      shift(scale(pow_series(psi(4, kOrder), 2, kOrder), CycRat(4)), 1)));
    // q -> -q variants via the odd-coefficient sign flip.
    LaurentSeries phi_neg = negate_odd(phi(1, kOrder));
    require_equal(phi_neg, quotient({{1, 2}, {2, -1}}, kOrder));
    require_equal(phi_neg,
                  sub(phi(4, kOrder), shift(scale(psi(8, kOrder), CycRat(2)), 1)));
    require_equal(pow_series(phi_neg, 2, kOrder),
                  sub(pow_series(phi(2, kOrder), 2, kOrder),
                      shift(scale(pow_series(psi(4, kOrder), 2, kOrder), CycRat(4)), 1)));
}

TEST_CASE("two-dissections of squared eta quotients") {
    // J1^2 and J1^4 and their reciprocals split into even/odd parts.
    require_equal(quotient({{1, 2}}, kOrder),
                  sub(quotient({{2, 1}, {8, 5}, {4, -2}, {16, -2}}, kOrder),
                      quotient({{2, 1}, {16, 2}, {8, -1}}, kOrder, CycRat(2), 1)));
    require_equal(quotient({{1, 4}}, kOrder),
                  sub(quotient({{4, 10}, {2, -2}, {8, -4}}, kOrder),
                      quotient({{2, 2}, {8, 4}, {4, -2}}, kOrder, CycRat(4), 1)));
    require_equal(quotient({{1, -2}}, kOrder),
                  add(quotient({{8, 5}, {2, -5}, {16, -2}}, kOrder),
                      quotient({{4, 2}, {16, 2}, {2, -5}, {8, -1}}, kOrder, CycRat(2), 1)));
    require_equal(quotient({{1, -4}}, kOrder),
                  add(quotient({{4, 14}, {2, -14}, {8, -4}}, kOrder),
                      quotient({{4, 2}, {8, 4}, {2, -10}}, kOrder, CycRat(4), 1)));
}

TEST_CASE("two-dissections of sixth and eighth reciprocal powers") {
    LaurentSeries lhs6 = quotient({{1, -6}}, kOrder);
    LaurentSeries even6 = add(quotient({{8, 1}, {4, 14}, {2, -19}, {16, -2}}, kOrder),
                              quotient({{4, 4}, {8, 3}, {16, 2}, {2, -15}}, kOrder, CycRat(8), 2));
    LaurentSeries odd6 = add(quotient({{4, 16}, {16, 2}, {2, -19}, {8, -5}}, kOrder),
                             quotient({{4, 2}, {8, 9}, {2, -15}, {16, -2}}, kOrder, CycRat(2)));
    require_equal(lhs6, add(even6, shift(scale(odd6, CycRat(2)), 1)));

    LaurentSeries lhs8 = quotient({{1, -8}}, kOrder);
    LaurentSeries even8 = add(quotient({{4, 28}, {2, -28}, {8, -8}}, kOrder),
                              quotient({{4, 4}, {8, 8}, {2, -20}}, kOrder, CycRat(16), 2));
    LaurentSeries odd8 = quotient({{4, 16}, {2, -24}}, kOrder);
    require_equal(lhs8, add(even8, shift(scale(odd8, CycRat(8)), 1)));
}

TEST_CASE("theta atoms evaluate through the tagged constructor") {
    require_equal(ThetaAtom::make_jm(2).eval(50), eta_product(2, 50), 50);
    require_equal(ThetaAtom::make_j(CycRat(-1), 1, 4).eval(50), jbar(1, 4, 50), 50);
    require_equal(ThetaAtom::make_phi(2).eval(50), phi(2, 50), 50);
    require_equal(ThetaAtom::make_psi(3).eval(50), psi(3, 50), 50);
    require_equal(ThetaAtom::make_poch_inf(CycRat(-1), 1, 2).eval(50),
                  pochhammer_inf(CycRat(-1), 1, 2, 50), 50);
    require_equal(ThetaAtom::make_poch_fin(CycRat(1), 1, 1, 3).eval(50),
                  pochhammer_fin(CycRat(1), 1, 1, 3, 50), 50);
    REQUIRE_THROWS_AS(ThetaAtom::make_poch_inf(CycRat(1), 0, 1), NonconvergentProduct);
}

TEST_CASE("power helper handles negative exponents") {
    LaurentSeries j1 = eta_product(1, 60);
    require_equal(mul(pow_series(j1, 3, 60), pow_series(j1, -3, 60)),
                  LaurentSeries::constant(CycRat(1), 60), 60);
    require_equal(pow_series(j1, 1, 60), j1, 60);
    require_equal(pow_series(j1, 0, 60), LaurentSeries::constant(CycRat(1), 60), 60);
}
