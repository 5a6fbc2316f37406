#include <catch2/catch_amalgamated.hpp>

#include "rankforge/tables.hpp"

using namespace rankforge;

TEST_CASE("partition table basics") {
    PartitionTable p(160);
    CHECK(p.p(0) == 1);
    CHECK(p.p(1) == 1);
    CHECK(p.p(4) == 5);
    CHECK(p.p(9) == 30);
    CHECK(p.p(100) == BigInt("190569292"));
    CHECK(p.p(-3) == 0);
    CHECK_THROWS_AS(p.p(161), TableTooSmall);
    for (long n = 0; n <= 31; ++n) {
        CHECK(p.p(5 * n + 4) % 5 == 0);
    }
}

TEST_CASE("rank table counts and symmetry facts") {
    RankTable rank(60);
    PartitionTable p(60);
    CHECK(rank.count(0, 0) == 1);
    CHECK(rank.count(0, 1) == 1);
    CHECK(rank.count(1, 1) == 0);
    CHECK(rank.count(3, 4) == 1);
    CHECK(rank.count(-3, 4) == 1);
    CHECK(rank.count(2, 4) == 0);
    CHECK(rank.count(61, 10) == 0);
    CHECK_THROWS_AS(rank.count(0, 61), TableTooSmall);
    for (long n = 2; n <= 60; ++n) {
        CHECK(rank.count(n - 1, n) == 1);
        CHECK(rank.count(n, n) == 0);
    }
    for (long n = 0; n <= 60; ++n) {
        BigInt total(0);
        for (long m = -n; m <= n; ++m) total += rank.count(m, n);
        CHECK(total == p.p(n));
    }
    for (long a = 0; a < 5; ++a) {
        CHECK(class_count(rank, a, 5, 4) == 1);
    }
}

TEST_CASE("odd rank table counts") {
    OddRankTable odd(80);
    CHECK(odd.count(0, 1) == 1);
    CHECK(odd.count(0, 2) == 0);
    CHECK(odd.count(1, 2) == 1);
    CHECK(odd.count(1, 4) == 1);
    CHECK(odd.count(-1, 4) == 1);
    CHECK(odd.count(0, 3) == 1);
    CHECK_THROWS_AS(odd.count(0, 81), TableTooSmall);
    // Parity kill across the whole table.
    for (long n = 1; n <= 80; ++n) {
        for (long m = -n; m <= n; ++m) {
            if (((n - m) % 2 + 2) % 2 == 0) CHECK(odd.count(m, n) == 0);
        }
    }
}

TEST_CASE("class counts partition the rows") {
    OddRankTable odd(60);
    LaurentSeries om = omega_series(61);
    for (long M : {2L, 4L, 8L}) {
        for (long n = 1; n <= 60; ++n) {
            BigInt total(0);
            for (long a = 0; a < M; ++a) total += class_count(odd, a, M, n);
            CHECK(CycRat(BigRat(total)) == om.coeff(n));
        }
    }
    CHECK_THROWS_AS(class_count(odd, 4, 4, 10), Error);
    CHECK_THROWS_AS(class_count(odd, -1, 4, 10), Error);
}

TEST_CASE("class series agrees with pointwise class counts") {
    OddRankTable odd(100);
    LaurentSeries s = class_series(odd, 1, 4, 2, 0, 50);
    REQUIRE(s.min_exp() == 0);
    REQUIRE(s.trunc_order() == 50);
    for (long t = 0; t < 50; ++t) {
        CHECK(s.coeff(t).rational_part() == BigRat(class_count(odd, 1, 4, 2 * t)));
    }
    CHECK_THROWS_AS(class_series(odd, 1, 4, 2, 1, 51), TableTooSmall);
    CHECK_THROWS_AS(class_series(odd, 1, 4, 2, 2, 10), Error);
}

TEST_CASE("odd rank class identities from the table") {
    OddRankTable odd(140);
    // N0(1,2;2n) = 2 N0(1,4;2n): the class splits evenly between residues 1, 3.
    for (long n = 0; 2 * n <= 140; ++n) {
        CHECK(class_count(odd, 1, 2, 2 * n) == 2 * class_count(odd, 1, 4, 2 * n));
        CHECK(class_count(odd, 1, 4, 2 * n) == class_count(odd, 3, 4, 2 * n));
    }
    // N0(k,2k;n) is even.
    for (long k = 1; k <= 4; ++k) {
        for (long n = 1; n <= 140; ++n) {
            CHECK(class_count(odd, k, 2 * k, n) % 2 == 0);
        }
    }
}

TEST_CASE("symmetrized rank moments") {
    RankTable rank(60);
    PartitionTable p(60);
    for (long n = 0; n <= 60; ++n) {
        CHECK(eta_moment(rank, 0, n) == BigRat(p.p(n)));
        CHECK(eta_moment(rank, 1, n).is_zero());
        CHECK(eta_moment(rank, 3, n).is_zero());
        CHECK(eta_moment(rank, 5, n).is_zero());
        CHECK(raw_moment(rank, 1, n) == 0);
        CHECK(raw_moment(rank, 3, n) == 0);
        CHECK(raw_moment(rank, 0, n) == p.p(n));
    }
    CHECK(eta_moment(rank, 4, 24).numerator() % 5 == 0);
    CHECK(eta_moment(rank, 6, 47).numerator() % 7 == 0);
}

TEST_CASE("symmetrized odd moments match the series route") {
    OddRankTable odd(40);
    for (long k : {0L, 1L, 2L, 3L}) {
        LaurentSeries s = eta0_moment_series(k, 41);
        for (long n = 1; n <= 40; ++n) {
            CHECK(s.coeff(n).rational_part() == eta0_moment(odd, 2 * k, n));
        }
    }
    for (long n = 1; n <= 40; ++n) {
        CHECK(eta0_moment(odd, 1, n).is_zero());
        CHECK(eta0_moment(odd, 3, n).is_zero());
    }
    CHECK(eta0_moment(odd, 2, 1) == BigRat(0));
    CHECK(eta0_moment(odd, 2, 2) == BigRat(1));
    CHECK(eta0_moment(odd, 2, 3) == BigRat(4));
    CHECK(eta0_moment(odd, 2, 5) == BigRat(20));
    CHECK(eta0_moment(odd, 2, 8) == BigRat(95));
    CHECK_THROWS_AS(eta0_moment(odd, 2, 41), TableTooSmall);
}

TEST_CASE("p_omega series carries its own oracles") {
    LaurentSeries s = p_omega_series(60);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == CycRat(1));
    CHECK(s.coeff(2) == CycRat(2));
    CHECK(p_omega(1) == 1);
    CHECK(p_omega(2) == 2);
    CHECK(p_omega(9) == 18);
    // p_omega(8n+4) = 0 (mod 4).
    LaurentSeries deep = p_omega_series(170);
    for (long n = 0; n <= 20; ++n) {
        BigRat v = deep.coeff(8 * n + 4).rational_part();
        CHECK(v.numerator() % 4 == 0);
    }
}

TEST_CASE("rank and odd rank tables satisfy the cross-table identities") {
    RankTable rank(150);
    OddRankTable odd(150);
    PartitionTable p(150);
    TheoremReport rep = check_rank_odd_theorem(rank, odd, p, 150);
    INFO(rep.first_violation);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
    CHECK_THROWS_AS(check_rank_odd_theorem(rank, odd, p, 151), TableTooSmall);
}

TEST_CASE("rank differences modulo 4 and 8 satisfy the alternating identities") {
    RankTable rank(151);
    for (long n = 0; 2 * n + 1 <= 151; ++n) {
        BigInt lhs_even = class_count(rank, 0, 4, 2 * n) - class_count(rank, 2, 4, 2 * n);
        BigInt rhs_even = class_count(rank, 0, 8, 2 * n) - class_count(rank, 4, 8, 2 * n);
        if (n % 2 != 0) rhs_even = -rhs_even;
        CHECK(lhs_even == rhs_even);

        // The N(1,8) term carries weight 2; a weight of 1 already fails at
        // argument 5 and drifts like p(n)/8 since the weights then do not
        // cancel across the eight residue classes.
        BigInt lhs_odd = class_count(rank, 0, 4, 2 * n + 1) - class_count(rank, 2, 4, 2 * n + 1);
        BigInt rhs_odd = class_count(rank, 0, 8, 2 * n + 1) +
                         2 * class_count(rank, 1, 8, 2 * n + 1) -
                         2 * class_count(rank, 3, 8, 2 * n + 1) -
                         class_count(rank, 4, 8, 2 * n + 1);
        if (n % 2 != 0) rhs_odd = -rhs_odd;
        CHECK(lhs_odd == rhs_odd);
    }
}
