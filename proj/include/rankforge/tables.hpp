#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rankforge/durfee.hpp"
#include "rankforge/mock_theta.hpp"
#include "rankforge/theta.hpp"

namespace rankforge {

namespace detail {

/// Calls visit(parts) for every partition of n into parts <= max_part,
/// parts weakly decreasing. The empty partition is emitted for n = 0.
template <typename Visit>
void for_each_partition(long n, long max_part, std::vector<long>& prefix, Visit&& visit) {
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (long part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        for_each_partition(n - part, part, prefix, visit);
        prefix.pop_back();
    }
}

template <typename Visit>
void for_each_partition(long n, Visit&& visit) {
    std::vector<long> prefix;
    for_each_partition(n, n, prefix, std::forward<Visit>(visit));
}

}  // namespace detail

/// p(n) for n <= n_max, built by the pentagonal-number recurrence and
/// cross-checked coefficient by coefficient against 1/(q;q)_inf.
class PartitionTable {
public:
    explicit PartitionTable(long n_max) : _n_max(std::max(n_max, 0L)) {
        _p.assign(static_cast<size_t>(_n_max) + 1, BigInt(0));
        _p[0] = 1;
        for (long n = 1; n <= _n_max; ++n) {
            BigInt acc(0);
            for (long k = 1;; ++k) {
                long g1 = k * (3 * k - 1) / 2;
                long g2 = k * (3 * k + 1) / 2;
                if (g1 > n && g2 > n) break;
                BigInt term(0);
                if (g1 <= n) term += _p[static_cast<size_t>(n - g1)];
                if (g2 <= n) term += _p[static_cast<size_t>(n - g2)];
                if (k % 2 == 0) acc -= term; else acc += term;
            }
            _p[static_cast<size_t>(n)] = acc;
        }
        LaurentSeries gen = invert(eta_product(1, _n_max + 1));
        for (long n = 0; n <= _n_max; ++n) {
            if (gen.coeff(n) != CycRat(BigRat(_p[static_cast<size_t>(n)]))) {
                throw CrossCheckFailure("partition table disagrees with inverted product at n = " +
                                        std::to_string(n));
            }
        }
    }

    long n_max() const { return _n_max; }

    const BigInt& p(long n) const {
        static const BigInt kZero(0);
        if (n < 0) return kZero;
        if (n > _n_max) {
            throw TableTooSmall("p(" + std::to_string(n) + ") beyond table size " +
                                std::to_string(_n_max));
        }
        return _p[static_cast<size_t>(n)];
    }

private:
    long _n_max;
    std::vector<BigInt> _p;
};

/// N(m, n): partitions of n with rank m (largest part minus number of parts).
/// Rows are stored for m >= 0 only; N(-m, n) = N(m, n).
class RankTable {
public:
    explicit RankTable(long n_max) : _n_max(std::max(n_max, 1L)) {
        BivariateSeries biv = rank_bivariate(_n_max + 1);
        _rows.resize(static_cast<size_t>(_n_max) + 1);
        for (long n = 0; n <= _n_max; ++n) {
            auto& row = _rows[static_cast<size_t>(n)];
            row.reserve(static_cast<size_t>(n) + 1);
            for (long m = 0; m <= n; ++m) row.push_back(biv.coeff(m, n));
        }
        long check_to = std::min(_n_max, 30L);
        for (long n = 0; n <= check_to; ++n) {
            std::vector<BigInt> hist(static_cast<size_t>(2 * n + 1), BigInt(0));
            detail::for_each_partition(n, [&](const std::vector<long>& parts) {
                long rank = parts.empty() ? 0 : parts.front() - static_cast<long>(parts.size());
                hist[static_cast<size_t>(rank + n)] += 1;
            });
            for (long m = -n; m <= n; ++m) {
                if (hist[static_cast<size_t>(m + n)] != count(m, n)) {
                    throw CrossCheckFailure("rank table disagrees with literal enumeration at (m,n) = (" +
                                            std::to_string(m) + "," + std::to_string(n) + ")");
                }
            }
        }
    }

    long n_max() const { return _n_max; }

    const BigInt& count(long m, long n) const {
        static const BigInt kZero(0);
        if (n < 0) return kZero;
        if (n > _n_max) {
            throw TableTooSmall("N(m," + std::to_string(n) + ") beyond table size " +
                                std::to_string(_n_max));
        }
        long a = std::abs(m);
        if (a > n) return kZero;
        return _rows[static_cast<size_t>(n)][static_cast<size_t>(a)];
    }

private:
    long _n_max;
    std::vector<std::vector<BigInt>> _rows;
};

namespace detail {

/// Independent route to the odd-rank counts: for each D, a partition-pair DP
/// over odd parts <= 2D+1 tracked by signed part count (top parts raise the
/// rank, bottom parts lower it). F[w] covers ranks in [-w, w] at offset w.
inline std::vector<std::vector<BigInt>> odd_rank_by_pair_dp(long n_check) {
    std::vector<std::vector<BigInt>> out(static_cast<size_t>(n_check) + 1);
    for (long n = 0; n <= n_check; ++n) {
        out[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1), BigInt(0));
    }
    for (long D = 0; 2 * D * D + 2 * D + 1 <= n_check; ++D) {
        long core = 2 * D * D + 2 * D + 1;
        long W = n_check - core;
        std::vector<std::vector<BigInt>> F(static_cast<size_t>(W) + 1);
        for (long w = 0; w <= W; ++w) {
            F[static_cast<size_t>(w)].assign(static_cast<size_t>(2 * w + 1), BigInt(0));
        }
        F[0][0] = 1;
        for (int side = 0; side < 2; ++side) {
            long dr = (side == 0) ? 1 : -1;
            for (long j = 1; j <= 2 * D + 1; j += 2) {
                for (long w = j; w <= W; ++w) {
                    auto& row = F[static_cast<size_t>(w)];
                    const auto& prev = F[static_cast<size_t>(w - j)];
                    long pw = w - j;
                    for (long r = -pw + dr; r <= pw + dr; ++r) {
                        const BigInt& v = prev[static_cast<size_t>(r - dr + pw)];
                        if (v != 0) row[static_cast<size_t>(r + w)] += v;
                    }
                }
            }
        }
        for (long w = 0; w <= W; ++w) {
            auto& dest = out[static_cast<size_t>(core + w)];
            const auto& src = F[static_cast<size_t>(w)];
            long n = core + w;
            for (long r = -w; r <= w; ++r) {
                if (src[static_cast<size_t>(r + w)] != 0) {
                    dest[static_cast<size_t>(r + n)] += src[static_cast<size_t>(r + w)];
                }
            }
        }
    }
    return out;
}

}  // namespace detail

/// N^0(m, n): odd Durfee symbols of n with odd rank m. Built from the
/// bivariate Appell-Lerch expansion and cross-checked three ways in the
/// constructor: literal symbol enumeration (small n), an independent
/// partition-pair DP (n <= 600), and row sums against the omega series.
class OddRankTable {
public:
    explicit OddRankTable(long n_max, long dp_check_cap = 600, long enum_check_cap = 40)
        : _n_max(std::max(n_max, 1L)) {
        BivariateSeries biv = odd_rank_bivariate(_n_max + 1);
        _rows.resize(static_cast<size_t>(_n_max) + 1);
        for (long n = 0; n <= _n_max; ++n) {
            auto& row = _rows[static_cast<size_t>(n)];
            row.reserve(static_cast<size_t>(n) + 1);
            for (long m = 0; m <= n; ++m) row.push_back(biv.coeff(m, n));
        }

        long enum_to = std::min(_n_max, enum_check_cap);
        for (long n = 1; n <= enum_to; ++n) {
            std::vector<BigInt> hist(static_cast<size_t>(2 * n + 1), BigInt(0));
            for (const auto& sym : enumerate_odd_durfee(n, enum_check_cap)) {
                hist[static_cast<size_t>(sym.odd_rank() + n)] += 1;
            }
            for (long m = -n; m <= n; ++m) {
                if (hist[static_cast<size_t>(m + n)] != count(m, n)) {
                    throw CrossCheckFailure("odd rank table disagrees with symbol enumeration at (m,n) = (" +
                                            std::to_string(m) + "," + std::to_string(n) + ")");
                }
            }
        }

        long dp_to = std::min(_n_max, dp_check_cap);
        auto dp = detail::odd_rank_by_pair_dp(dp_to);
        for (long n = 1; n <= dp_to; ++n) {
            for (long m = -n; m <= n; ++m) {
                if (dp[static_cast<size_t>(n)][static_cast<size_t>(m + n)] != count(m, n)) {
                    throw CrossCheckFailure("odd rank table disagrees with pair DP at (m,n) = (" +
                                            std::to_string(m) + "," + std::to_string(n) + ")");
                }
            }
        }

        LaurentSeries om = omega_series(_n_max + 1);
        for (long n = 1; n <= _n_max; ++n) {
            BigInt total(0);
            for (long m = -n; m <= n; ++m) total += count(m, n);
            if (CycRat(BigRat(total)) != om.coeff(n)) {
                throw CrossCheckFailure("odd rank row sum disagrees with omega series at n = " +
                                        std::to_string(n));
            }
        }
    }

    long n_max() const { return _n_max; }

    const BigInt& count(long m, long n) const {
        static const BigInt kZero(0);
        if (n < 0) return kZero;
        if (n > _n_max) {
            throw TableTooSmall("N0(m," + std::to_string(n) + ") beyond table size " +
                                std::to_string(_n_max));
        }
        long a = std::abs(m);
        if (a > n) return kZero;
        return _rows[static_cast<size_t>(n)][static_cast<size_t>(a)];
    }

private:
    long _n_max;
    std::vector<std::vector<BigInt>> _rows;
};

inline PartitionTable build_partition_table(long n_max) { return PartitionTable(n_max); }
inline RankTable build_rank_table(long n_max) { return RankTable(n_max); }
inline OddRankTable build_odd_rank_table(long n_max) { return OddRankTable(n_max); }

/// Sum of table counts over the residue class m = a (mod M).
template <typename Table>
BigInt class_count(const Table& table, long a, long M, long n) {
    if (M < 1 || a < 0 || a >= M) throw Error("class_count: need 0 <= a < M");
    if (n < 0) return BigInt(0);
    BigInt total(0);
    long m0 = a;
    while (m0 - M >= -n) m0 -= M;
    for (long m = m0; m <= n; m += M) total += table.count(m, n);
    return total;
}

/// Series whose q^t coefficient is the class count at n = ell*t + r.
template <typename Table>
LaurentSeries class_series(const Table& table, long a, long M, long ell, long r, long T) {
    if (ell < 1 || r < 0 || r >= ell) throw Error("class_series: need 0 <= r < ell");
    if (T > 0 && ell * (T - 1) + r > table.n_max()) {
        throw TableTooSmall("class series to order " + std::to_string(T) + " needs table rows to " +
                            std::to_string(ell * (T - 1) + r) + ", have " +
                            std::to_string(table.n_max()));
    }
    LaurentSeries out(0, T);
    for (long t = 0; t < T; ++t) {
        BigInt v = class_count(table, a, M, ell * t + r);
        if (v != 0) out.set_coeff(t, CycRat(BigRat(v)));
    }
    return out;
}

/// eta_k(n) = sum over m of C(m + floor((k-1)/2), k) N(m, n).
inline BigRat eta_moment(const RankTable& table, long k, long n) {
    if (k < 0) throw Error("moment order must be nonnegative");
    long off = (k >= 1) ? (k - 1) / 2 : -1;
    BigRat total;
    for (long m = -n; m <= n; ++m) {
        const BigInt& c = table.count(m, n);
        if (c == 0) continue;
        BigInt w = binomial(BigInt(m + off), static_cast<unsigned long>(k)) * c;
        total += BigRat(w);
    }
    if (!total.is_integer()) {
        throw CrossCheckFailure("eta moment came out non-integral at (k,n) = (" +
                                std::to_string(k) + "," + std::to_string(n) + ")");
    }
    return total;
}

/// eta_k^0(n) = sum over m of C(m + floor(k/2), k) N^0(m, n).
inline BigRat eta0_moment(const OddRankTable& table, long k, long n) {
    if (k < 0) throw Error("moment order must be nonnegative");
    long off = k / 2;
    BigRat total;
    for (long m = -n; m <= n; ++m) {
        const BigInt& c = table.count(m, n);
        if (c == 0) continue;
        BigInt w = binomial(BigInt(m + off), static_cast<unsigned long>(k)) * c;
        total += BigRat(w);
    }
    if (!total.is_integer()) {
        throw CrossCheckFailure("eta0 moment came out non-integral at (k,n) = (" +
                                std::to_string(k) + "," + std::to_string(n) + ")");
    }
    return total;
}

/// N_k(n) = sum over m of m^k N(m, n).
inline BigInt raw_moment(const RankTable& table, long k, long n) {
    if (k < 0) throw Error("moment order must be nonnegative");
    BigInt total(0);
    for (long m = -n; m <= n; ++m) {
        const BigInt& c = table.count(m, n);
        if (c == 0) continue;
        BigInt mk;
        mpz_pow_ui(mk.get_mpz_t(), BigInt(m).get_mpz_t(), static_cast<unsigned long>(k));
        total += mk * c;
    }
    return total;
}

/// Series with coefficient p_omega(n) at q^n, validated against Fine's sum
/// and, for small n, the literal count of partitions in which every odd part
/// is less than twice the smallest part.
inline LaurentSeries p_omega_series(long T) {
    LaurentSeries s = omega_series(T);

    long fine_to = std::min(T, 121L);
    if (fine_to > 0) {
        LaurentSeries fine(0, fine_to);
        for (long n = 0; n + 1 < fine_to; ++n) {
            LaurentSeries den = pochhammer_fin(CycRat(1), 1, 2, n + 1, fine_to);
            fine = add(fine, shift(invert(den), n + 1));
        }
        for (long n = 0; n < fine_to; ++n) {
            if (fine.coeff(n) != s.coeff(n)) {
                throw CrossCheckFailure("omega series disagrees with Fine's sum at n = " +
                                        std::to_string(n));
            }
        }
    }

    long count_to = std::min(T - 1, 40L);
    for (long n = 1; n <= count_to; ++n) {
        BigInt literal(0);
        detail::for_each_partition(n, [&](const std::vector<long>& parts) {
            long smallest = parts.back();
            for (long part : parts) {
                if (part % 2 != 0 && part >= 2 * smallest) return;
            }
            literal += 1;
        });
        if (CycRat(BigRat(literal)) != s.coeff(n)) {
            throw CrossCheckFailure("omega series disagrees with the literal partition count at n = " +
                                    std::to_string(n));
        }
    }
    return s;
}

inline BigInt p_omega(long n) {
    if (n < 1) return BigInt(0);
    CycRat v = p_omega_series(n + 1).coeff(n);
    return v.rational_part().numerator();
}

/// Outcome of the cross-table verification below.
struct TheoremReport {
    long checked = 0;
    long violations = 0;
    std::string first_violation;

    bool ok() const { return violations == 0; }
};

/// Verifies, for every n <= N_max and every m that can contribute:
///   - N^0(m, n) = 0 whenever n and m share parity;
///   - N^0(m, n) - N^0(m-1, n-1) = N(m+1, (n-m-1)/2) otherwise, for n >= 2;
///   - N^0(m, n) = [m = n-1] + sum over 0 <= k < n of N(m+1-k, (n-m-1)/2);
///   - N^0(m, n) = p((n-m-1)/2) whenever n <= 3m+5.
/// The recurrence starts at n = 2: it comes from comparing coefficients in
/// R_1(zq; q^2) = 1 - zq + z(1-zq)R_1^0(z; q), whose prefix absorbs the
/// whole q^1 layer, and indeed at (m,n) = (0,1) the left side gives 1 while
/// N(1,0) = 0. Telescoping the recurrence down to n = 1 crosses that seam
/// exactly when m = n-1, which is where the bracket [m = n-1] comes from:
/// the lone symbol of weight n and odd rank n-1 is a column of n-1 ones.
inline TheoremReport check_rank_odd_theorem(const RankTable& rank, const OddRankTable& odd,
                                            const PartitionTable& parts, long N_max) {
    if (rank.n_max() < N_max || odd.n_max() < N_max) {
        throw TableTooSmall("theorem check to " + std::to_string(N_max) +
                            " needs both tables at least that deep");
    }
    TheoremReport rep;
    auto fail = [&](long m, long n, const std::string& what) {
        ++rep.violations;
        if (rep.first_violation.empty()) {
            rep.first_violation = what + " at (m,n) = (" + std::to_string(m) + "," +
                                  std::to_string(n) + ")";
        }
    };
    for (long n = 1; n <= N_max; ++n) {
        for (long m = -(n + 1); m <= n + 1; ++m) {
            if (((n - m) % 2 + 2) % 2 == 0) {
                ++rep.checked;
                if (odd.count(m, n) != 0) fail(m, n, "parity kill");
                continue;
            }
            long j = (n - m - 1) / 2;
            const BigInt& lhs = odd.count(m, n);

            if (n >= 2) {
                ++rep.checked;
                BigInt rec = lhs - odd.count(m - 1, n - 1);
                if (rec != rank.count(m + 1, j)) fail(m, n, "first-difference recurrence");
            }

            ++rep.checked;
            BigInt total(m == n - 1 ? 1 : 0);
            for (long k = 0; k < n; ++k) total += rank.count(m + 1 - k, j);
            if (lhs != total) fail(m, n, "rank-sum expansion");

            if (n <= 3 * m + 5) {
                ++rep.checked;
                if (lhs != parts.p(j)) fail(m, n, "partition-number collapse");
            }
        }
    }
    return rep;
}

}  // namespace rankforge
