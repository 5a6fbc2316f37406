#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "rankforge/rational.hpp"
#include "rankforge/theta.hpp"

namespace rankforge {

/// Argument x = c * q^a over base q^m for the universal mock theta function
/// g(x; q^m). Normalized to 0 <= a < m via g(x;q) = g(q/x;q) when a = m.
struct GArg {
    CycRat c;
    long a;
    long m;

    GArg(CycRat c_in, long a_in, long m_in) : c(std::move(c_in)), a(a_in), m(m_in) {
        if (m < 1) throw Error("g argument: base exponent must be positive");
        if (a < 0 || a > m) {
            throw Error("g argument: q-exponent " + std::to_string(a) +
                        " outside [0, " + std::to_string(m) + "]");
        }
        if (a == m) {
            c = c.inverse();
            a = 0;
        }
        if (a == 0 && c.is_one()) {
            throw PoleAtOne("g(1; q^" + std::to_string(m) + ") diverges");
        }
    }
};

namespace detail {

/// In-place multiply of s by 1/(1 - c q^e) for e >= 1: ascending sweep.
inline void div_one_minus(LaurentSeries& s, const CycRat& c, long e) {
    for (long idx = s.min_exp() + e; idx < s.trunc_order(); ++idx) {
        const CycRat& prev = s.coeff(idx - e);
        if (!prev.is_zero()) s.add_coeff(idx, c * prev);
    }
}

inline void accumulate_shifted(LaurentSeries& acc, const LaurentSeries& part, long shift_by) {
    for (long e = part.min_exp(); e < part.trunc_order(); ++e) {
        if (e + shift_by >= acc.trunc_order()) break;
        if (e + shift_by < acc.min_exp()) continue;
        const CycRat& v = part.coeff(e);
        if (!v.is_zero()) acc.add_coeff(e + shift_by, v);
    }
}

}  // namespace detail

/// g(c q^a; q^m) via the Hickerson-Mortenson expansion
/// g(x;q) = sum over n >= 0 of q^{n(n+1)}/((x;q)_{n+1}(q/x;q)_{n+1}).
/// The reciprocal of the growing denominator is maintained incrementally:
/// step n divides by the two new index-n factors only.
inline LaurentSeries g_series(const GArg& arg, long T) {
    LaurentSeries acc(0, T);
    LaurentSeries b = LaurentSeries::constant(CycRat(1), T);
    CycRat cinv = arg.c.inverse();
    for (long n = 0; arg.m * n * (n + 1) < T; ++n) {
        long ex = arg.a + n * arg.m;          // new (x; q^m) factor
        long ey = arg.m - arg.a + n * arg.m;  // new (q^m/x; q^m) factor
        if (ex == 0) {
            b = scale(b, (CycRat(1) - arg.c).inverse());
        } else if (ex < T) {
            detail::div_one_minus(b, arg.c, ex);
        }
        if (ey < T) detail::div_one_minus(b, cinv, ey);
        detail::accumulate_shifted(acc, b, arg.m * n * (n + 1));
    }
    return acc;
}

/// g via the defining series, an independent oracle:
/// g(x;q) = x^{-1}(-1 + sum over n >= 0 of q^{n^2}/((x;q)_{n+1}(q/x;q)_n)).
/// The result window starts at -a; for a >= 1 those coefficients must all
/// cancel to zero, which the comparison against g_series genuinely checks.
inline LaurentSeries g_series_alt(const GArg& arg, long T) {
    LaurentSeries acc = LaurentSeries::constant(CycRat(-1), T);
    LaurentSeries b = LaurentSeries::constant(CycRat(1), T);
    CycRat cinv = arg.c.inverse();
    for (long n = 0; arg.m * n * n < T; ++n) {
        long ex = arg.a + n * arg.m;  // (x; q^m) gains index n now
        if (ex == 0) {
            b = scale(b, (CycRat(1) - arg.c).inverse());
        } else if (ex < T) {
            detail::div_one_minus(b, arg.c, ex);
        }
        if (n >= 1) {
            long ey = arg.m - arg.a + (n - 1) * arg.m;  // (q^m/x; q^m) gains index n-1
            if (ey < T) detail::div_one_minus(b, cinv, ey);
        }
        detail::accumulate_shifted(acc, b, arg.m * n * n);
    }
    return shift(scale(acc, cinv), -arg.a);
}

/// q * omega(q) = sum over n >= 0 of q^{2n(n+1)+1}/((q;q^2)_{n+1})^2.
inline LaurentSeries omega_series(long T) {
    LaurentSeries acc(0, T);
    LaurentSeries b = LaurentSeries::constant(CycRat(1), T);
    for (long n = 0; 2 * n * (n + 1) + 1 < T; ++n) {
        long e = 2 * n + 1;
        if (e < T) {
            detail::div_one_minus(b, CycRat(1), e);
            detail::div_one_minus(b, CycRat(1), e);
        }
        detail::accumulate_shifted(acc, b, 2 * n * (n + 1) + 1);
    }
    return acc;
}

/// R_1^0(zeta; q) as the Appell-Lerch sum
/// (1/(q^2;q^2)_inf) * sum over n in Z of (-1)^n q^{3n^2+3n+1}/(1 - zeta q^{2n+1}).
/// Negative-n factors are rewritten with positive powers:
/// 1/(1 - zeta q^{-j}) = -sum over k >= 1 of zeta^{-k} q^{kj}.
inline LaurentSeries appell_lerch_R0(const CycRat& zeta, long T) {
    LaurentSeries s(0, T);
    for (long n = 0; 3 * n * n + 3 * n + 1 < T; ++n) {
        long e0 = 3 * n * n + 3 * n + 1;
        long j = 2 * n + 1;
        bool neg = (n % 2 != 0);
        CycRat zk(1);
        for (long e = e0; e < T; e += j) {
            s.add_coeff(e, neg ? -zk : zk);
            zk = zk * zeta;
        }
    }
    CycRat zinv = zeta.inverse();
    for (long n = -1; 3 * n * n + 3 * n + 1 < T; --n) {
        long e0 = 3 * n * n + 3 * n + 1;
        long j = -(2 * n + 1);
        bool neg = (n % 2 == 0);  // the rewrite contributes an extra minus sign
        CycRat zk = zinv;
        for (long e = e0 + j; e < T; e += j) {
            s.add_coeff(e, neg ? -zk : zk);
            zk = zk * zinv;
        }
    }
    return mul(s, invert(eta_product(2, T)));
}

/// Generating function of the symmetrized even moments:
/// sum over n >= 1 of eta0_{2k}(n) q^n
///   = (1/(q^2;q^2)_inf) * sum over n in Z of
///     (-1)^n q^{3n^2+(2k+3)n+k+1} / (1 - q^{2n+1})^{2k+1}.
inline LaurentSeries eta0_moment_series(long k, long T) {
    if (k < 0) throw Error("eta0_moment_series: negative moment index");
    long r = 2 * k + 1;
    LaurentSeries s(0, T);
    auto expand = [&](long e0, long j, bool neg) {
        // 1/(1-q^j)^r = sum over t >= 0 of C(t+r-1, r-1) q^{jt}
        for (long t = 0; e0 + j * t < T; ++t) {
            BigInt w = binomial(t + r - 1, static_cast<unsigned long>(r - 1));
            CycRat v{BigRat(w)};
            s.add_coeff(e0 + j * t, neg ? -v : v);
        }
    };
    for (long n = 0;; ++n) {
        long e0 = 3 * n * n + (2 * k + 3) * n + k + 1;
        if (e0 >= T) break;
        expand(e0, 2 * n + 1, n % 2 != 0);
    }
    for (long n = -1;; --n) {
        long j = -(2 * n + 1);
        long e0 = 3 * n * n + (2 * k + 3) * n + k + 1 + j * r;  // after the rewrite
        if (e0 >= T) break;  // grows monotonically as n walks down from -1
        expand(e0, j, n % 2 == 0);
    }
    return mul(s, invert(eta_product(2, T)));
}

/// Joint coefficient table of a two-variable series sum over n of
/// (sum over m of c(m, n) z^m) q^n with |m| <= n, stored row-per-n with exact
/// integer entries.
class BivariateSeries {
public:
    explicit BivariateSeries(long T) : _T(T), _rows(static_cast<size_t>(std::max(0L, T))) {
        for (long n = 0; n < T; ++n) _rows[static_cast<size_t>(n)].assign(2 * n + 1, 0);
    }

    long trunc_order() const { return _T; }

    const mpz_class& coeff(long m, long n) const {
        static const mpz_class kZero = 0;
        if (n < 0 || n >= _T) throw OutOfWindow("bivariate row " + std::to_string(n));
        if (m < -n || m > n) return kZero;
        return _rows[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
    }

    void add_coeff(long m, long n, const mpz_class& v) {
        _rows[static_cast<size_t>(n)][static_cast<size_t>(m + n)] += v;
    }

    /// In-place multiply by 1/((1 - z q^e)(1 - z^{-1} q^e)). Derived from the
    /// defining relation B' (1 - (z + z^{-1}) q^e + q^{2e}) = B:
    /// B'[n][m] = B[n][m] + B'[n-e][m-1] + B'[n-e][m+1] - B'[n-2e][m],
    /// valid when rows are updated in ascending n.
    void divide_symmetric_pair(long e) {
        for (long n = e; n < _T; ++n) {
            auto& row = _rows[static_cast<size_t>(n)];
            const auto& prev = _rows[static_cast<size_t>(n - e)];
            long pn = n - e;
            for (long m = -n; m <= n; ++m) {
                mpz_class add = 0;
                if (m - 1 >= -pn && m - 1 <= pn) add += prev[static_cast<size_t>(m - 1 + pn)];
                if (m + 1 >= -pn && m + 1 <= pn) add += prev[static_cast<size_t>(m + 1 + pn)];
                if (n - 2 * e >= 0 && m >= -(n - 2 * e) && m <= n - 2 * e) {
                    add -= _rows[static_cast<size_t>(n - 2 * e)][static_cast<size_t>(m + n - 2 * e)];
                }
                if (add != 0) row[static_cast<size_t>(m + n)] += add;
            }
        }
    }

    void add_shifted(const BivariateSeries& part, long shift_by) {
        for (long n = 0; n + shift_by < _T && n < part._T; ++n) {
            const auto& src = part._rows[static_cast<size_t>(n)];
            for (long m = -n; m <= n; ++m) {
                const mpz_class& v = src[static_cast<size_t>(m + n)];
                if (v != 0) add_coeff(m, n + shift_by, v);
            }
        }
    }

    /// Evaluates at z = zeta, producing an ordinary series.
    LaurentSeries specialize(const CycRat& zeta) const {
        LaurentSeries out(0, _T);
        for (long n = 0; n < _T; ++n) {
            CycRat total;
            for (long m = -n; m <= n; ++m) {
                const mpz_class& v = _rows[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
                if (v != 0) total += CycRat(BigRat(BigInt(v))) * zeta.pow(m);
            }
            if (!total.is_zero()) out.set_coeff(n, total);
        }
        return out;
    }

    bool row_symmetric() const {
        for (long n = 0; n < _T; ++n) {
            for (long m = 1; m <= n; ++m) {
                if (coeff(m, n) != coeff(-m, n)) return false;
            }
        }
        return true;
    }

private:
    long _T;
    std::vector<std::vector<mpz_class>> _rows;
};

/// R_1(z;q) = sum over n0 >= 0 of q^{n0^2}/((zq;q)_{n0}(z^{-1}q;q)_{n0}):
/// joint table of N(m, n) including the leading N(0,0) = 1.
inline BivariateSeries rank_bivariate(long T) {
    BivariateSeries acc(T);
    BivariateSeries b(T);
    if (T > 0) {
        b.add_coeff(0, 0, 1);
        acc.add_coeff(0, 0, 1);  // the n0 = 0 term
    }
    for (long n0 = 1; n0 * n0 < T; ++n0) {
        b.divide_symmetric_pair(n0);
        acc.add_shifted(b, n0 * n0);
    }
    if (!acc.row_symmetric()) throw CrossCheckFailure("rank table rows asymmetric");
    return acc;
}

/// R_1^0(z;q) = sum over D >= 0 of q^{2D(D+1)+1}/((zq;q^2)_{D+1}(z^{-1}q;q^2)_{D+1}):
/// joint table of N^0(m, n).
inline BivariateSeries odd_rank_bivariate(long T) {
    BivariateSeries acc(T);
    BivariateSeries b(T);
    if (T > 0) b.add_coeff(0, 0, 1);
    for (long D = 0; 2 * D * (D + 1) + 1 < T; ++D) {
        b.divide_symmetric_pair(2 * D + 1);
        acc.add_shifted(b, 2 * D * (D + 1) + 1);
    }
    if (!acc.row_symmetric()) throw CrossCheckFailure("odd rank table rows asymmetric");
    return acc;
}

}  // namespace rankforge
