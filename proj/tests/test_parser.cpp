#include <catch2/catch_amalgamated.hpp>

#include "rankforge/parser.hpp"

using namespace rankforge;

namespace {

constexpr long kOrder = 64;

EvalContext empty_ctx() { return EvalContext{}; }

LaurentSeries ev(const std::string& text, long T = kOrder) {
    return eval_expr(*parse_expr(text), empty_ctx(), T);
}

void require_equal(const LaurentSeries& lhs, const LaurentSeries& rhs, long order = kOrder) {
    CompareOutcome res = equals_up_to(lhs, rhs, order);
    INFO("first discrepancy at q^" << res.diff_exp << ": " << res.lhs.to_string() << " vs "
                                   << res.rhs.to_string());
    REQUIRE(res.equal);
    REQUIRE(res.window_hi - res.window_lo >= 16);
}

}  // namespace

TEST_CASE("atoms evaluate through the series layers") {
    require_equal(ev("q"), LaurentSeries::monomial(CycRat(1), 1, kOrder));
    require_equal(ev("J1"), eta_product(1, kOrder));
    require_equal(ev("J16"), eta_product(16, kOrder));
    require_equal(ev("phi(2)"), phi(2, kOrder));
    require_equal(ev("psi(3)"), psi(3, kOrder));
    require_equal(ev("pw"), p_omega_series(kOrder));
    require_equal(ev("j(-1,1,2)"), jacobi_j(CycRat(-1), 1, 2, kOrder));
    require_equal(ev("g(1,1,2)"), g_series(GArg(CycRat(1), 1, 2), kOrder));
    require_equal(ev("z8"), LaurentSeries::constant(CycRat::zeta8(), kOrder));
    require_equal(ev("7"), LaurentSeries::constant(CycRat(7), kOrder));
    require_equal(ev("1/2"), LaurentSeries::constant(CycRat(BigRat(1, 2)), kOrder));
}

TEST_CASE("cyclotomic arguments inside j and g") {
    CycRat i = CycRat::i_unit();
    CycRat z8 = CycRat::zeta8();
    require_equal(ev("g(-1*z8,1,2)"), g_series(GArg(-z8, 1, 2), kOrder));
    require_equal(ev("g(z8^3,1,2)"), g_series(GArg(i * z8, 1, 2), kOrder));
    require_equal(ev("g(z8^2,0,8)"), g_series(GArg(i, 0, 8), kOrder));
    require_equal(ev("g(-1*z8^2,0,8)"), g_series(GArg(-i, 0, 8), kOrder));
    require_equal(ev("j(1*z8^2,1,4)"), jacobi_j(i, 1, 4, kOrder));
    require_equal(ev("j(-1,0,8)"), jacobi_j(CycRat(-1), 0, 8, kOrder));
    require_equal(ev("j(1/2,1,2)"), jacobi_j(CycRat(BigRat(1, 2)), 1, 2, kOrder));
}

TEST_CASE("precedence and associativity") {
    // A leading rational binds its slash before the power, so 3/4^2 = 9/16.
    require_equal(ev("3/4^2"), LaurentSeries::constant(CycRat(BigRat(9, 16)), kOrder));
    require_equal(ev("1/2*q"), shift(LaurentSeries::constant(CycRat(BigRat(1, 2)), kOrder), 1),
                  kOrder / 2);
    require_equal(ev("q + q*q - q"), ev("q^2"));
    require_equal(ev("2*q/2"), ev("q"));
    require_equal(ev("J2^4 / (J1^2 * J4)"),
                  mul(pow_series(eta_product(2, kOrder + 16), 4, kOrder + 16),
                      invert(mul(pow_series(eta_product(1, kOrder + 16), 2, kOrder + 16),
                                 eta_product(4, kOrder + 16))))
                      .truncated(kOrder));
}

TEST_CASE("documented example expressions") {
    LaurentSeries diff = ev("J2^4 / (J1^2 * J4)", 8);
    REQUIRE(diff.coeff(0) == CycRat(1));
    LaurentSeries gq = ev("g(1,1,2)", 5);
    long expected[4] = {1, 2, 3, 4};
    for (long e = 0; e < 4; ++e) REQUIRE(gq.coeff(e) == CycRat(expected[e]));
    LaurentSeries unit = ev("J1 * (1/J1)", 5);
    for (long e = 0; e < 5; ++e) REQUIRE(unit.coeff(e) == CycRat(e == 0 ? 1 : 0));
}

TEST_CASE("literal powers fold to exact constants") {
    require_equal(ev("z8^2"), LaurentSeries::constant(CycRat::i_unit(), kOrder));
    require_equal(ev("z8^-1"), LaurentSeries::constant(CycRat::zeta8_pow(-1), kOrder));
    require_equal(ev("z8^-1 + z8"),
                  LaurentSeries::constant(CycRat::zeta8_pow(7) + CycRat::zeta8(), kOrder));
    require_equal(ev("2^-3"), LaurentSeries::constant(CycRat(BigRat(1, 8)), kOrder));
    REQUIRE_THROWS_AS(parse_expr("0^-1"), ParseError);
}

TEST_CASE("negative powers of series invert them") {
    require_equal(ev("q^-1"), LaurentSeries::monomial(CycRat(1), -1, kOrder));
    require_equal(ev("J2^-2"), ev("1/(J2*J2)"));
    require_equal(ev("q^-1*J4^6*J8/(J2^4*J16^2)"),
                  ev("(J4^6*J8)/(q*J2^4*J16^2)"));
}

TEST_CASE("unary minus") {
    require_equal(ev("-q + q"), LaurentSeries::zero(kOrder));
    require_equal(ev("-2*q^2*g(-1,4,8)"),
                  scale(shift(g_series(GArg(CycRat(-1), 4, 8), kOrder - 2), 2), CycRat(-2)));
    require_equal(ev("(-q)^2"), ev("q^2"));
    require_equal(ev("-1 + q"), ev("q - 1"));
}

TEST_CASE("structural operators sub, dis, shift") {
    require_equal(ev("sub(J1,4)"), ev("J4"));
    require_equal(ev("sub(g(1,1,2),3)"), substitute_power(g_series(GArg(CycRat(1), 1, 2), 24), 3),
                  kOrder);
    require_equal(ev("shift(J1,3)"), shift(eta_product(1, kOrder - 3), 3));
    require_equal(ev("shift(J1,-2)"), shift(eta_product(1, kOrder + 2), -2));
    LaurentSeries odd_part = ev("dis(1/J1,2,1)", 24);
    LaurentSeries whole = invert(eta_product(1, 49));
    for (long t = 0; t < 24; ++t) REQUIRE(odd_part.coeff(t) == whole.coeff(2 * t + 1));
    require_equal(ev("dis(q,2,1)", 24), LaurentSeries::constant(CycRat(1), 24), 24);
    // The two halves of a dissection reassemble the series.
    require_equal(ev("sub(dis(phi(1),2,0),2) + q*sub(dis(phi(1),2,1),2)"), ev("phi(1)"));
}

TEST_CASE("parse errors carry position and token") {
    auto check = [](const std::string& text, int line, int column) {
        try {
            parse_expr(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            INFO(e.what());
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    check("", 1, 1);           // empty input
    check("q +", 1, 4);        // dangling operator
    check("(q", 1, 3);         // unclosed paren
    check("1 + + 2", 1, 5);    // operator where an atom should be
    check("z9", 1, 1);         // unknown name
    check("foo(2)", 1, 1);     // unknown function
    check("q q", 1, 3);        // trailing input
    check("g(1,1)", 1, 6);     // arity
    check("J0", 1, 1);         // bad subscript
    check("dis(q,2,2)", 1, 10);
    check("sub(q,0)", 1, 8);
    check("q ^ x", 1, 5);
    check("J2\n * * J2", 2, 4);  // errors on later lines report that line
    REQUIRE_THROWS_AS(parse_expr("j(1,2,2)"), DegenerateTheta);
    REQUIRE_THROWS_AS(parse_expr("g(1,0,2)"), PoleAtOne);
}

TEST_CASE("coefficients re-parse as literals") {
    LaurentSeries s = ev("g(z8,1,2) + q^-1*j(-1,1,8)/2", 20);
    for (long e = s.min_exp(); e < s.trunc_order(); ++e) {
        const CycRat& c = s.coeff(e);
        LaurentSeries back = ev(c.to_string(), 4);
        REQUIRE(back.coeff(0) == c);
    }
}

TEST_CASE("table atoms read from the context") {
    PartitionTable parts(60);
    RankTable rank(60);
    OddRankTable odd(60);
    EvalContext ctx;
    ctx.parts = &parts;
    ctx.rank = &rank;
    ctx.odd = &odd;

    ExprPtr pns = Expr::pn();
    LaurentSeries ps = eval_expr(*pns, ctx, 40);
    for (long n = 0; n < 40; ++n) REQUIRE(ps.coeff(n) == CycRat(BigRat(parts.p(n))));
    require_equal(eval_expr(*pns, ctx, 40), ev("1/J1", 40), 40);

    ExprPtr cls = Expr::class_series(TableRef::OddRank, 0, 2, 2, 0);
    LaurentSeries cs = eval_expr(*cls, ctx, 30);
    for (long t = 0; t < 30; ++t) {
        REQUIRE(cs.coeff(t) == CycRat(BigRat(class_count(odd, 0, 2, 2 * t))));
    }

    ExprPtr mom = Expr::eta_moment_series(2);
    LaurentSeries ms = eval_expr(*mom, ctx, 30);
    for (long n = 1; n < 30; ++n) REQUIRE(ms.coeff(n) == CycRat(eta_moment(rank, 2, n)));

    ExprPtr mom0 = Expr::eta0_moment_series_atom(2);
    LaurentSeries m0 = eval_expr(*mom0, ctx, 30);
    for (long n = 1; n < 30; ++n) REQUIRE(m0.coeff(n) == CycRat(eta0_moment(odd, 2, n)));

    EvalContext bare;
    REQUIRE_THROWS_AS(eval_expr(*pns, bare, 10), TableTooSmall);
    REQUIRE_THROWS_AS(eval_expr(*cls, bare, 10), TableTooSmall);
    REQUIRE_THROWS_AS(eval_expr(*mom, bare, 10), TableTooSmall);
    REQUIRE_THROWS_AS(eval_expr(*cls, ctx, 32), TableTooSmall);  // needs rows to 62
}

TEST_CASE("bivariate atoms specialize the rank generating functions") {
    BivariateSeries rgf = rank_bivariate(24);
    BivariateSeries ogf = odd_rank_bivariate(24);
    EvalContext ctx;
    ctx.rank_gf = &rgf;
    ctx.odd_rank_gf = &ogf;
    CycRat i = CycRat::i_unit();
    require_equal(eval_expr(*Expr::rank_gf(i), ctx, 24), rgf.specialize(i), 24);
    require_equal(eval_expr(*Expr::odd_rank_gf(-i), ctx, 24), ogf.specialize(-i), 24);
    require_equal(eval_expr(*Expr::appell_r0(i), ctx, 24), appell_lerch_R0(i, 24), 24);
    REQUIRE_THROWS_AS(eval_expr(*Expr::rank_gf(i), ctx, 25), TableTooSmall);
    EvalContext bare;
    REQUIRE_THROWS_AS(eval_expr(*Expr::rank_gf(i), bare, 10), TableTooSmall);
}

TEST_CASE("requirement collection mirrors evaluation depth") {
    Requirements r1 = collect_requirements(*Expr::class_series(TableRef::OddRank, 0, 2, 2, 0), 10);
    REQUIRE(r1.odd_n == 18);
    REQUIRE(r1.rank_n == -1);

    Requirements r2 = collect_requirements(*dissect(Expr::class_series(TableRef::Rank, 1, 4, 1, 0), 3, 1), 10);
    REQUIRE(r2.rank_n == 28);  // dissect needs the inner series to 3*9+1+1

    Requirements r3 = collect_requirements(*parse_expr("q"), 10);
    REQUIRE(r3.empty());

    ExprPtr prod = mul(Expr::pn(), Expr::eta_moment_series(2));
    Requirements r4 = collect_requirements(*prod, 10);
    REQUIRE(r4.parts_n == 25);  // products get slack for negative exponents
    REQUIRE(r4.rank_n == 25);

    Requirements r5 = collect_requirements(*Expr::rank_gf(CycRat::i_unit()), 40);
    REQUIRE(r5.rank_gf_T == 40);

    // A context built to exactly the collected requirement evaluates cleanly.
    OddRankTable odd(r1.odd_n);
    EvalContext ctx;
    ctx.odd = &odd;
    LaurentSeries s = eval_expr(*Expr::class_series(TableRef::OddRank, 0, 2, 2, 0), ctx, 10);
    REQUIRE(s.trunc_order() == 10);
}

TEST_CASE("atom scale measures the coarsest q power") {
    REQUIRE(max_atom_scale(*parse_expr("q + 3")) == 1);
    REQUIRE(max_atom_scale(*parse_expr("J32 / J2")) == 32);
    REQUIRE(max_atom_scale(*parse_expr("sub(g(-1,4,8),8)")) == 64);
    REQUIRE(max_atom_scale(*parse_expr("g(-1,0,64)")) == 64);
    REQUIRE(max_atom_scale(*parse_expr("sub(dis(J4,2,0),2)")) == 8);
}

TEST_CASE("expression printing is stable") {
    REQUIRE(parse_expr("J2^4 / (J1^2 * J4)")->to_string() == "(J2^4 / (J1^2 * J4))");
    REQUIRE(parse_expr("g(-1*z8,1,2)")->to_string() == "g(-z8,1,2)");
    REQUIRE(parse_expr("dis(q,2,1)")->to_string() == "dis(q,2,1)");
}
