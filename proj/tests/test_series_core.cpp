#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rankforge/laurent.hpp"

using namespace rankforge;

namespace {

CycRat random_cyc(std::mt19937& rng, bool allow_roots) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto part = [&]() { return BigRat(num(rng), den(rng)); };
    if (!allow_roots) return CycRat(part());
    return CycRat(part(), part(), part(), part());
}

LaurentSeries random_series(std::mt19937& rng, bool allow_roots) {
    std::uniform_int_distribution<long> lo_d(-3, 2);
    std::uniform_int_distribution<long> len_d(8, 24);
    long lo = lo_d(rng);
    LaurentSeries f(lo, lo + len_d(rng));
    std::uniform_int_distribution<int> sparse(0, 3);
    for (long e = f.min_exp(); e < f.trunc_order(); ++e) {
        if (sparse(rng) != 0) f.set_coeff(e, random_cyc(rng, allow_roots));
    }
    return f;
}

}  // namespace

TEST_CASE("rational arithmetic canonicalizes and compares") {
    BigRat half(2, 4);
    REQUIRE(half == BigRat(1, 2));
    REQUIRE(half.to_string() == "1/2");
    REQUIRE((BigRat(1, 3) + BigRat(1, 6)) == BigRat(1, 2));
    REQUIRE((BigRat(3, 7) * BigRat(7, 3)) == BigRat(1));
    REQUIRE((BigRat(5) / BigRat(-10)) == BigRat(-1, 2));
    REQUIRE(BigRat(-4, -8) == BigRat(1, 2));
    REQUIRE(BigRat(7).is_integer());
    REQUIRE_FALSE(BigRat(7, 2).is_integer());
    REQUIRE_THROWS_AS(BigRat(1, 0), Error);
    REQUIRE_THROWS_AS(BigRat(1) / BigRat(0), Error);
    REQUIRE(BigRat(-3, 4).sign() == -1);
    REQUIRE(BigRat(0).sign() == 0);
    REQUIRE(BigRat(-3).to_string() == "-3");
}

TEST_CASE("binomial supports negative upper argument") {
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(4, 0) == 1);
    REQUIRE(binomial(1, 3) == 0);
    REQUIRE(binomial(-1, 2) == 1);
    REQUIRE(binomial(-1, 3) == -1);
    REQUIRE(binomial(-3, 2) == 6);
    REQUIRE(binomial(-2, 5) == -6);
    REQUIRE(binomial(BigInt(40), 20) == BigInt("137846528820"));
}

TEST_CASE("zeta8 powers satisfy the defining relations") {
    CycRat z = CycRat::zeta8();
    REQUIRE(z.pow(4) == CycRat(-1));
    REQUIRE(z.pow(8) == CycRat::one());
    REQUIRE(z * z == CycRat::i_unit());
    REQUIRE(CycRat::zeta8_pow(3) * CycRat::zeta8_pow(5) == CycRat::one());
    REQUIRE(CycRat::zeta8_pow(-1) == CycRat::zeta8_pow(7));
    REQUIRE(CycRat::zeta8_pow(-3) == z.pow(5));
    // (1 - i)(1 + i) = 2 and zeta + zeta^7 = sqrt(2) squared is 2.
    CycRat i = CycRat::i_unit();
    REQUIRE((CycRat(1) - i) * (CycRat(1) + i) == CycRat(2));
    CycRat sqrt2 = z + CycRat::zeta8_pow(7);
    REQUIRE(sqrt2 * sqrt2 == CycRat(2));
}

TEST_CASE("root_of_unity covers the orders used by the catalog") {
    REQUIRE(CycRat::root_of_unity(1) == CycRat::one());
    REQUIRE(CycRat::root_of_unity(2) == CycRat(-1));
    REQUIRE(CycRat::root_of_unity(4) == CycRat::i_unit());
    REQUIRE(CycRat::root_of_unity(8) == CycRat::zeta8());
    REQUIRE_THROWS_AS(CycRat::root_of_unity(3), Error);
}

TEST_CASE("cyclotomic inverses across random elements") {
    std::mt19937 rng(20240811);
    int tested = 0;
    while (tested < 1000) {
        CycRat x = random_cyc(rng, true);
        if (x.is_zero()) continue;
        CycRat inv = x.inverse();
        REQUIRE(x * inv == CycRat::one());
        ++tested;
    }
    REQUIRE_THROWS_AS(CycRat().inverse(), Error);
}

TEST_CASE("cyclotomic ring laws on random triples") {
    std::mt19937 rng(77);
    for (int t = 0; t < 200; ++t) {
        CycRat a = random_cyc(rng, true);
        CycRat b = random_cyc(rng, true);
        CycRat c = random_cyc(rng, true);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + (-a) == CycRat::zero());
    }
    REQUIRE(CycRat::zeta8().pow(-4) == CycRat(-1));
}

TEST_CASE("cyclotomic rendering") {
    REQUIRE(CycRat::zero().to_string() == "0");
    REQUIRE(CycRat(BigRat(1, 2)).to_string() == "1/2");
    REQUIRE(CycRat::zeta8().to_string() == "z8");
    CycRat v(BigRat(1), BigRat(-1, 2), BigRat(0), BigRat(3));
    REQUIRE(v.to_string() == "1 - 1/2*z8 + 3*z8^3");
    REQUIRE((-CycRat::i_unit()).to_string() == "-z8^2");
}

TEST_CASE("coefficient access respects the validity window") {
    LaurentSeries f = LaurentSeries::monomial(CycRat(3), 2, 6);
    REQUIRE(f.min_exp() == 2);
    REQUIRE(f.trunc_order() == 6);
    REQUIRE(f.coeff(-5).is_zero());
    REQUIRE(f.coeff(1).is_zero());
    REQUIRE(f.coeff(2) == CycRat(3));
    REQUIRE(f.coeff(5).is_zero());
    REQUIRE_THROWS_AS(f.coeff(6), OutOfWindow);
    REQUIRE_THROWS_AS(f.coeff(100), OutOfWindow);
    REQUIRE(f.window_length() == 4);
}

TEST_CASE("addition window is the intersection of truncations") {
    LaurentSeries f(-2, 10);
    LaurentSeries g(0, 7);
    f.set_coeff(-2, CycRat(1));
    g.set_coeff(3, CycRat(5));
    LaurentSeries s = add(f, g);
    REQUIRE(s.min_exp() == -2);
    REQUIRE(s.trunc_order() == 7);
    REQUIRE(s.coeff(-2) == CycRat(1));
    REQUIRE(s.coeff(3) == CycRat(5));
}

TEST_CASE("product window accounts for unknown tails") {
    // f known on [-1, 5), g on [2, 9): fg starts at 1 and the first unknown
    // contribution is min(5 + 2, 9 - 1) = 7.
    LaurentSeries f(-1, 5);
    LaurentSeries g(2, 9);
    f.set_coeff(-1, CycRat(2));
    g.set_coeff(2, CycRat(7));
    LaurentSeries p = mul(f, g);
    REQUIRE(p.min_exp() == 1);
    REQUIRE(p.trunc_order() == 7);
    REQUIRE(p.coeff(1) == CycRat(14));
}

TEST_CASE("series ring laws on random operands") {
    std::mt19937 rng(424242);
    for (int t = 0; t < 60; ++t) {
        LaurentSeries f = random_series(rng, t % 3 == 0);
        LaurentSeries g = random_series(rng, false);
        LaurentSeries h = random_series(rng, false);
        CompareOutcome comm = equals_up_to(mul(f, g), mul(g, f), 1000);
        REQUIRE(comm.equal);
        CompareOutcome dist =
            equals_up_to(mul(f, add(g, h)), add(mul(f, g), mul(f, h)), 1000);
        REQUIRE(dist.equal);
        CompareOutcome assoc =
            equals_up_to(mul(mul(f, g), h), mul(f, mul(g, h)), 1000);
        REQUIRE(assoc.equal);
    }
}

TEST_CASE("geometric series inverse") {
    // 1 - q on [0, 12) inverts to sum of q^n on [0, 12).
    LaurentSeries f(0, 12);
    f.set_coeff(0, CycRat(1));
    f.set_coeff(1, CycRat(-1));
    LaurentSeries g = invert(f);
    REQUIRE(g.min_exp() == 0);
    REQUIRE(g.trunc_order() == 12);
    for (long e = 0; e < 12; ++e) REQUIRE(g.coeff(e) == CycRat(1));
}

TEST_CASE("inverse of a shifted unit tracks the window shrink") {
    // f = 2 q^3 (1 - q): lowest term exponent 3, so 1/f lives on [-3, T-6).
    LaurentSeries f(3, 15);
    f.set_coeff(3, CycRat(2));
    f.set_coeff(4, CycRat(-2));
    LaurentSeries g = invert(f);
    REQUIRE(g.min_exp() == -3);
    REQUIRE(g.trunc_order() == 9);
    for (long e = -3; e < 9; ++e) REQUIRE(g.coeff(e) == CycRat(BigRat(1, 2)));
    CompareOutcome res = equals_up_to(mul(f, g), LaurentSeries::constant(CycRat(1), 100), 100);
    REQUIRE(res.equal);
    REQUIRE(res.window_lo == 0);
    REQUIRE(res.window_hi == 12);
}

TEST_CASE("random inverses compose to one and double inversion restores") {
    std::mt19937 rng(9001);
    int done = 0;
    while (done < 40) {
        LaurentSeries f = random_series(rng, done % 4 == 0);
        bool lead = false;
        for (long e = f.min_exp(); e < f.trunc_order(); ++e) {
            if (!f.coeff(e).is_zero()) { lead = true; break; }
        }
        if (!lead) continue;
        LaurentSeries g = invert(f);
        CompareOutcome unit =
            equals_up_to(mul(f, g), LaurentSeries::constant(CycRat(1), 1000), 1000);
        REQUIRE(unit.equal);
        CompareOutcome back = equals_up_to(invert(g), f, 1000);
        REQUIRE(back.equal);
        ++done;
    }
    REQUIRE_THROWS_AS(invert(LaurentSeries::zero(10)), ZeroLeadingTerm);
}

TEST_CASE("dissection splits and reassembles") {
    std::mt19937 rng(5150);
    LaurentSeries f = random_series(rng, false);
    for (long ell : {2L, 3L, 5L}) {
        LaurentSeries total(f.min_exp(), f.trunc_order());
        long hi_common = f.trunc_order();
        for (long r = 0; r < ell; ++r) {
            LaurentSeries part = shift(substitute_power(dissect(f, ell, r), ell), r);
            total = add(total, part);
            hi_common = std::min(hi_common, part.trunc_order());
        }
        CompareOutcome res = equals_up_to(total, f, hi_common);
        REQUIRE(res.equal);
        REQUIRE(res.window_hi >= f.trunc_order() - ell);
    }
}

TEST_CASE("dissection indexes negative exponents correctly") {
    LaurentSeries f(-5, 7);
    for (long e = -5; e < 7; ++e) f.set_coeff(e, CycRat(10 * e));
    LaurentSeries d = dissect(f, 3, 1);
    // 3n + 1 in [-5, 7): n in {-2, -1, 0, 1}.
    REQUIRE(d.min_exp() == -2);
    REQUIRE(d.trunc_order() == 2);
    REQUIRE(d.coeff(-2) == CycRat(-50));
    REQUIRE(d.coeff(-1) == CycRat(-20));
    REQUIRE(d.coeff(0) == CycRat(10));
    REQUIRE(d.coeff(1) == CycRat(40));
}

TEST_CASE("substitute_power spreads coefficients exactly") {
    LaurentSeries f(-1, 3);
    f.set_coeff(-1, CycRat(4));
    f.set_coeff(2, CycRat(-7));
    LaurentSeries g = substitute_power(f, 3);
    REQUIRE(g.min_exp() == -3);
    REQUIRE(g.trunc_order() == 9);
    REQUIRE(g.coeff(-3) == CycRat(4));
    REQUIRE(g.coeff(6) == CycRat(-7));
    REQUIRE(g.coeff(0).is_zero());
    REQUIRE(g.coeff(5).is_zero());
}

TEST_CASE("negate_odd is an involution and handles negative exponents") {
    LaurentSeries f(-3, 4);
    for (long e = -3; e < 4; ++e) f.set_coeff(e, CycRat(e + 10));
    LaurentSeries g = negate_odd(f);
    REQUIRE(g.coeff(-3) == CycRat(-7));
    REQUIRE(g.coeff(-2) == CycRat(8));
    REQUIRE(g.coeff(-1) == CycRat(-9));
    REQUIRE(g.coeff(0) == CycRat(10));
    REQUIRE(g.coeff(1) == CycRat(-11));
    CompareOutcome res = equals_up_to(negate_odd(g), f, 100);
    REQUIRE(res.equal);
}

TEST_CASE("negate_odd matches multiplicativity of the substitution") {
    std::mt19937 rng(31337);
    LaurentSeries f = random_series(rng, false);
    LaurentSeries g = random_series(rng, false);
    CompareOutcome res =
        equals_up_to(negate_odd(mul(f, g)), mul(negate_odd(f), negate_odd(g)), 1000);
    REQUIRE(res.equal);
}

TEST_CASE("shift and scale") {
    LaurentSeries f = LaurentSeries::constant(CycRat(6), 5);
    LaurentSeries g = shift(f, -2);
    REQUIRE(g.min_exp() == -2);
    REQUIRE(g.trunc_order() == 3);
    REQUIRE(g.coeff(-2) == CycRat(6));
    LaurentSeries h = scale(g, CycRat(BigRat(1, 3)));
    REQUIRE(h.coeff(-2) == CycRat(2));
    LaurentSeries z = scale(g, CycRat::zero());
    REQUIRE(z.is_zero_on_window());
    REQUIRE(z.trunc_order() == 3);
}

TEST_CASE("truncated narrows the window without inventing data") {
    LaurentSeries f(-1, 20);
    f.set_coeff(5, CycRat(9));
    LaurentSeries g = f.truncated(6);
    REQUIRE(g.trunc_order() == 6);
    REQUIRE(g.coeff(5) == CycRat(9));
    REQUIRE_THROWS_AS(g.coeff(6), OutOfWindow);
    REQUIRE(f.truncated(50).trunc_order() == 20);
}

TEST_CASE("equals_up_to reports the first discrepancy and the window") {
    LaurentSeries f(0, 10);
    LaurentSeries g(0, 8);
    f.set_coeff(4, CycRat(2));
    g.set_coeff(4, CycRat(3));
    CompareOutcome res = equals_up_to(f, g, 100);
    REQUIRE_FALSE(res.equal);
    REQUIRE(res.diff_exp == 4);
    REQUIRE(res.lhs == CycRat(2));
    REQUIRE(res.rhs == CycRat(3));
    REQUIRE(res.window_lo == 0);
    REQUIRE(res.window_hi == 8);

    // Below-window coefficients count as zero, so a mismatch there is caught.
    LaurentSeries h(2, 8);
    h.set_coeff(2, CycRat(1));
    LaurentSeries k(0, 8);
    k.set_coeff(0, CycRat(1));
    CompareOutcome res2 = equals_up_to(h, k, 100);
    REQUIRE_FALSE(res2.equal);
    REQUIRE(res2.diff_exp == 0);

    CompareOutcome res3 = equals_up_to(f, f, 5);
    REQUIRE(res3.equal);
    REQUIRE(res3.window_hi == 5);
}
