#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "rankforge/laurent.hpp"

namespace rankforge {

/// True when c * q^a is an integer power of q^m with c = 1, i.e. the triple
/// product j(q^{km}; q^m), which vanishes identically.
inline bool is_degenerate_theta(const CycRat& c, long a, long m) {
    return c.is_one() && a % m == 0;
}

namespace detail {
inline std::map<long, LaurentSeries>& eta_cache() {
    static std::map<long, LaurentSeries> cache;
    return cache;
}
inline std::mutex& eta_cache_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace detail

/// J_m = (q^m; q^m)_inf by Euler's pentagonal number theorem:
/// sum over k in Z of (-1)^k q^{m k(3k-1)/2}. O(sqrt(T/m)) terms.
inline LaurentSeries eta_product(long m, long T) {
    if (m < 1) throw Error("eta_product: base exponent must be positive");
    {
        std::lock_guard<std::mutex> lock(detail::eta_cache_mutex());
        auto it = detail::eta_cache().find(m);
        if (it != detail::eta_cache().end() && it->second.trunc_order() >= T) {
            return it->second.truncated(T);
        }
    }
    LaurentSeries s(0, T);
    if (T > 0) s.set_coeff(0, CycRat(1));
    for (long k = 1;; ++k) {
        long e1 = m * k * (3 * k - 1) / 2;
        long e2 = m * k * (3 * k + 1) / 2;  // the k -> -k partner
        if (e1 >= T && e2 >= T) break;
        CycRat sign(k % 2 != 0 ? -1 : 1);
        if (e1 < T) s.add_coeff(e1, sign);
        if (e2 < T) s.add_coeff(e2, sign);
    }
    {
        std::lock_guard<std::mutex> lock(detail::eta_cache_mutex());
        LaurentSeries& slot = detail::eta_cache()[m];
        if (slot.trunc_order() < T) slot = s;
    }
    return s;
}

/// j(c q^a; q^m) as the bilateral theta sum
/// sum over n in Z of (-1)^n q^{m n(n-1)/2 + a n} c^n.
/// The degenerate triple (c = 1, a a multiple of m) gives the zero series.
inline LaurentSeries jacobi_j(const CycRat& c, long a, long m, long T) {
    if (m < 1) throw Error("jacobi_j: base exponent must be positive");
    if (is_degenerate_theta(c, a, m)) return LaurentSeries(std::min(0L, T), T);
    auto term_exp = [&](long n) { return m * n * (n - 1) / 2 + a * n; };
    // The exponent is a convex parabola in n; walk outward from its vertex.
    long n0 = (m / 2 - a) / m;
    std::vector<std::pair<long, CycRat>> terms;
    long lo_exp = 0;
    for (long n = n0;; ++n) {
        long e = term_exp(n);
        // Past the vertex the exponent grows monotonically, so once it
        // clears T on the climbing side no later term can matter.
        if (e >= T && e >= term_exp(n - 1)) break;
        if (e < T) {
            CycRat v = c.pow(n);
            if (n % 2 != 0) v = -v;
            terms.emplace_back(e, v);
            lo_exp = std::min(lo_exp, e);
        }
    }
    for (long n = n0 - 1;; --n) {
        long e = term_exp(n);
        if (e >= T && e >= term_exp(n + 1)) break;
        if (e < T) {
            CycRat v = c.pow(n);
            if (n % 2 != 0) v = -v;
            terms.emplace_back(e, v);
            lo_exp = std::min(lo_exp, e);
        }
    }
    LaurentSeries s(std::min(lo_exp, T), T);
    for (const auto& [e, v] : terms) s.add_coeff(e, v);
    return s;
}

/// J_{a,m} = j(q^a; q^m). Degenerate when a is a multiple of m.
inline LaurentSeries jsub(long a, long m, long T) {
    return jacobi_j(CycRat(1), a, m, T);
}

/// Jbar_{a,m} = j(-q^a; q^m).
inline LaurentSeries jbar(long a, long m, long T) {
    return jacobi_j(CycRat(-1), a, m, T);
}

/// phi(q^k) = sum over n in Z of q^{k n^2}.
inline LaurentSeries phi(long k, long T) {
    if (k < 1) throw Error("phi: base exponent must be positive");
    LaurentSeries s(0, T);
    if (T > 0) s.set_coeff(0, CycRat(1));
    for (long n = 1; k * n * n < T; ++n) s.set_coeff(k * n * n, CycRat(2));
    return s;
}

/// psi(q^k) = sum over n >= 0 of q^{k n(n+1)/2}.
inline LaurentSeries psi(long k, long T) {
    if (k < 1) throw Error("psi: base exponent must be positive");
    LaurentSeries s(0, T);
    for (long n = 0; k * n * (n + 1) / 2 < T; ++n) s.add_coeff(k * n * (n + 1) / 2, CycRat(1));
    return s;
}

namespace detail {
/// In-place multiply of s by (1 - c q^e) for e >= 1: a descending sweep keeps
/// the update order-safe.
inline void mul_one_minus(LaurentSeries& s, const CycRat& c, long e) {
    for (long idx = s.trunc_order() - 1; idx >= s.min_exp() + e; --idx) {
        const CycRat& prev = s.coeff(idx - e);
        if (!prev.is_zero()) s.sub_coeff(idx, c * prev);
    }
}
}  // namespace detail

/// (c q^a; q^m)_n = product over 0 <= j < n of (1 - c q^{a+jm}).
inline LaurentSeries pochhammer_fin(const CycRat& c, long a, long m, long n, long T) {
    if (m < 1) throw Error("pochhammer_fin: base exponent must be positive");
    if (n < 0) throw Error("pochhammer_fin: negative length");
    LaurentSeries s = LaurentSeries::constant(CycRat(1), T);
    for (long j = 0; j < n; ++j) {
        long e = a + j * m;
        if (e >= T) continue;  // factor is 1 + O(q^T) on this window
        if (e >= 1) {
            detail::mul_one_minus(s, c, e);
        } else if (e == 0) {
            s = scale(s, CycRat(1) - c);
        } else {
            LaurentSeries factor = LaurentSeries::monomial(-c, e, T + e);
            factor = add(factor, LaurentSeries::constant(CycRat(1), T + e));
            s = mul(s, factor);
        }
    }
    return s;
}

/// (c q^a; q^m)_inf. Requires a >= 1 so the factor exponents march to
/// infinity and only finitely many touch the window.
inline LaurentSeries pochhammer_inf(const CycRat& c, long a, long m, long T) {
    if (m < 1) throw Error("pochhammer_inf: base exponent must be positive");
    if (a <= 0) {
        throw NonconvergentProduct("pochhammer_inf: leading exponent " + std::to_string(a) +
                                   " must be positive");
    }
    LaurentSeries s = LaurentSeries::constant(CycRat(1), T);
    for (long e = a; e < T; e += m) detail::mul_one_minus(s, c, e);
    return s;
}

/// A monomial-prefactored product of eta factors: prefactor * q^{qShift} *
/// product of J_m^e over the factor list.
struct EtaQuotientSpec {
    CycRat prefactor = CycRat(1);
    long qShift = 0;
    std::vector<std::pair<long, long>> factors;  // (m, exponent), exponent may be negative
};

inline LaurentSeries pow_series(const LaurentSeries& f, long e, long T);

inline LaurentSeries eval_eta_quotient(const EtaQuotientSpec& spec, long T) {
    LaurentSeries num = LaurentSeries::constant(spec.prefactor, T);
    LaurentSeries den = LaurentSeries::constant(CycRat(1), T);
    bool have_den = false;
    for (const auto& [m, e] : spec.factors) {
        if (e == 0) continue;
        LaurentSeries part = pow_series(eta_product(m, T), e >= 0 ? e : -e, T);
        if (e >= 0) {
            num = mul(num, part);
        } else {
            den = mul(den, part);
            have_den = true;
        }
    }
    LaurentSeries out = have_den ? mul(num, invert(den)) : num;
    return shift(out, spec.qShift);
}

/// Tagged theta-function atom: the q-series building blocks the catalog's
/// expressions are assembled from. Construction validates parameters once so
/// evaluation cannot hit a degenerate or divergent case.
class ThetaAtom {
public:
    enum class Kind { Jm, SmallJ, Jbar, Jsub, Phi, Psi, PochInf, PochFin };

    static ThetaAtom make_jm(long m) { return ThetaAtom(Kind::Jm, CycRat(1), 0, m, 0); }
    static ThetaAtom make_j(const CycRat& c, long a, long m) {
        if (m < 1) throw Error("j-atom: base exponent must be positive");
        if (is_degenerate_theta(c, a, m)) {
            throw DegenerateTheta("j(" + c.to_string() + ", " + std::to_string(a) + ", " +
                                  std::to_string(m) + ") is identically zero");
        }
        return ThetaAtom(Kind::SmallJ, c, a, m, 0);
    }
    static ThetaAtom make_jbar(long a, long m) { return make_j(CycRat(-1), a, m).with(Kind::Jbar); }
    static ThetaAtom make_jsub(long a, long m) { return make_j(CycRat(1), a, m).with(Kind::Jsub); }
    static ThetaAtom make_phi(long k) { return ThetaAtom(Kind::Phi, CycRat(1), 0, k, 0); }
    static ThetaAtom make_psi(long k) { return ThetaAtom(Kind::Psi, CycRat(1), 0, k, 0); }
    static ThetaAtom make_poch_inf(const CycRat& c, long a, long m) {
        if (a <= 0) throw NonconvergentProduct("poch-atom: leading exponent must be positive");
        return ThetaAtom(Kind::PochInf, c, a, m, 0);
    }
    static ThetaAtom make_poch_fin(const CycRat& c, long a, long m, long n) {
        return ThetaAtom(Kind::PochFin, c, a, m, n);
    }

    Kind kind() const { return _kind; }
    const CycRat& c() const { return _c; }
    long a() const { return _a; }
    long m() const { return _m; }
    long n() const { return _n; }

    LaurentSeries eval(long T) const {
        switch (_kind) {
            case Kind::Jm: return eta_product(_m, T);
            case Kind::SmallJ:
            case Kind::Jbar:
            case Kind::Jsub: return jacobi_j(_c, _a, _m, T);
            case Kind::Phi: return phi(_m, T);
            case Kind::Psi: return psi(_m, T);
            case Kind::PochInf: return pochhammer_inf(_c, _a, _m, T);
            case Kind::PochFin: return pochhammer_fin(_c, _a, _m, _n, T);
        }
        throw Error("ThetaAtom: unreachable kind");
    }

private:
    ThetaAtom(Kind kind, CycRat c, long a, long m, long n)
        : _kind(kind), _c(std::move(c)), _a(a), _m(m), _n(n) {}
    ThetaAtom with(Kind kind) const {
        ThetaAtom copy = *this;
        copy._kind = kind;
        return copy;
    }

    Kind _kind;
    CycRat _c;
    long _a;
    long _m;
    long _n;
};

/// Binary exponentiation for series; exponent may be negative (inverts once).
inline LaurentSeries pow_series(const LaurentSeries& f, long e, long T) {
    if (e < 0) return pow_series(invert(f), -e, T);
    LaurentSeries acc = LaurentSeries::constant(CycRat(1), T);
    if (e == 0) return acc;
    LaurentSeries base = f;
    long k = e;
    while (true) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k == 0) break;
        base = mul(base, base);
    }
    return acc;
}

}  // namespace rankforge
