#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/cyclotomic.hpp"

namespace rankforge {

/// Result of comparing two series over the intersection of their validity
/// windows (further clamped by the caller's order). If equal is false, the
/// smallest differing exponent and both values are recorded.
struct CompareOutcome {
    bool equal = true;
    long window_lo = 0;
    long window_hi = 0;  // exclusive
    long diff_exp = 0;
    CycRat lhs;
    CycRat rhs;
};

/// Truncated Laurent series in q over Q(zeta_8).
///
/// Validity window: coefficients at exponents in [min_exp, trunc_order) are
/// stored and exact; exponents below min_exp are known to be zero; exponents
/// at or above trunc_order are unknown and may not be read. Every operation
/// propagates the window pessimistically, so a computed coefficient is always
/// an exact one.
class LaurentSeries {
public:
    LaurentSeries() : _min_exp(0), _trunc(0) {}
    LaurentSeries(long min_exp, long trunc)
        : _min_exp(min_exp), _trunc(std::max(min_exp, trunc)),
          _c(static_cast<size_t>(_trunc - _min_exp)) {}

    static LaurentSeries zero(long trunc) { return LaurentSeries(0, trunc); }

    static LaurentSeries constant(const CycRat& v, long trunc) {
        LaurentSeries s(0, trunc);
        if (trunc > 0) s._c[0] = v;
        return s;
    }

    static LaurentSeries monomial(const CycRat& v, long exp, long trunc) {
        LaurentSeries s(std::min(exp, trunc), trunc);
        if (exp < trunc) s._c[static_cast<size_t>(exp - s._min_exp)] = v;
        return s;
    }

    long min_exp() const { return _min_exp; }
    long trunc_order() const { return _trunc; }
    long window_length() const { return _trunc - _min_exp; }

    /// Exact coefficient of q^e. Below the window it is zero by definition;
    /// at or above the truncation order it is not known.
    const CycRat& coeff(long e) const {
        static const CycRat kZero;
        if (e < _min_exp) return kZero;
        if (e >= _trunc) {
            throw OutOfWindow("coefficient of q^" + std::to_string(e) +
                              " requested beyond truncation order " + std::to_string(_trunc));
        }
        return _c[static_cast<size_t>(e - _min_exp)];
    }

    void set_coeff(long e, const CycRat& v) { at(e) = v; }
    void add_coeff(long e, const CycRat& v) { at(e) += v; }
    void sub_coeff(long e, const CycRat& v) { at(e) -= v; }

    bool is_zero_on_window() const {
        for (const CycRat& v : _c) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    LaurentSeries operator-() const {
        LaurentSeries out(_min_exp, _trunc);
        for (size_t k = 0; k < _c.size(); ++k) out._c[k] = -_c[k];
        return out;
    }

    friend LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
        long lo = std::min(f._min_exp, g._min_exp);
        long hi = std::min(f._trunc, g._trunc);
        LaurentSeries out(lo, hi);
        for (long e = lo; e < hi; ++e) {
            CycRat v = f.known_or_zero(e) + g.known_or_zero(e);
            out._c[static_cast<size_t>(e - lo)] = std::move(v);
        }
        return out;
    }

    friend LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) {
        return add(f, -g);
    }

    /// Cauchy product. Window: minExp adds; the truncation order is
    /// min(f.T + g.minExp, g.T + f.minExp) because the first unknown
    /// coefficient of either factor contaminates everything it can reach.
    friend LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
        long lo = f._min_exp + g._min_exp;
        long hi = std::min(f._trunc + g._min_exp, g._trunc + f._min_exp);
        LaurentSeries out(lo, hi);
        if (hi <= lo) return out;
        for (long i = f._min_exp; i < f._trunc; ++i) {
            const CycRat& fi = f.coeff(i);
            if (fi.is_zero()) continue;
            long jmax = std::min(g._trunc, hi - i);
            for (long j = g._min_exp; j < jmax; ++j) {
                const CycRat& gj = g.coeff(j);
                if (gj.is_zero()) continue;
                out._c[static_cast<size_t>(i + j - lo)] += fi * gj;
            }
        }
        return out;
    }

    friend LaurentSeries scale(const LaurentSeries& f, const CycRat& c) {
        LaurentSeries out(f._min_exp, f._trunc);
        if (c.is_zero()) return out;
        for (size_t k = 0; k < f._c.size(); ++k) {
            if (!f._c[k].is_zero()) out._c[k] = f._c[k] * c;
        }
        return out;
    }

    friend LaurentSeries shift(const LaurentSeries& f, long d) {
        LaurentSeries out = f;
        out._min_exp += d;
        out._trunc += d;
        return out;
    }

    /// q -> q^k. Exact: the result's coefficient at k*e is f's at e, all other
    /// coefficients are genuinely zero, and everything below k*T is known.
    friend LaurentSeries substitute_power(const LaurentSeries& f, long k) {
        if (k < 1) throw Error("substitute_power: k must be positive");
        LaurentSeries out(k * f._min_exp, k * f._trunc);
        for (long e = f._min_exp; e < f._trunc; ++e) {
            out._c[static_cast<size_t>(k * (e - f._min_exp))] = f.coeff(e);
        }
        return out;
    }

    /// Arithmetic-progression extraction: result coefficient at n is f's at
    /// ell*n + r. Window: every n with min_exp <= ell*n + r < T.
    friend LaurentSeries dissect(const LaurentSeries& f, long ell, long r) {
        if (ell < 1) throw Error("dissect: ell must be positive");
        if (r < 0 || r >= ell) throw Error("dissect: residue out of range");
        long lo = floor_div(f._min_exp - r + ell - 1, ell);  // ceil((min-r)/ell)
        long hi = floor_div(f._trunc - 1 - r, ell) + 1;
        if (hi < lo) hi = lo;
        LaurentSeries out(lo, hi);
        for (long n = lo; n < hi; ++n) {
            out._c[static_cast<size_t>(n - lo)] = f.coeff(ell * n + r);
        }
        return out;
    }

    /// q -> -q: flips the sign of every odd-exponent coefficient.
    friend LaurentSeries negate_odd(const LaurentSeries& f) {
        LaurentSeries out = f;
        for (long e = f._min_exp; e < f._trunc; ++e) {
            if (e % 2 != 0) {
                size_t k = static_cast<size_t>(e - f._min_exp);
                out._c[k] = -out._c[k];
            }
        }
        return out;
    }

    /// Multiplicative inverse. If v is the lowest nonzero exponent, the
    /// result lives on [-v, T - 2v): an unknown coefficient of f at T feeds
    /// into 1/f at exponent T - 2v and beyond, nowhere earlier.
    friend LaurentSeries invert(const LaurentSeries& f) {
        long v = f._min_exp;
        while (v < f._trunc && f.coeff(v).is_zero()) ++v;
        if (v == f._trunc) {
            throw ZeroLeadingTerm("invert: no nonzero coefficient in window [" +
                                  std::to_string(f._min_exp) + ", " +
                                  std::to_string(f._trunc) + ")");
        }
        long out_lo = -v;
        long out_hi = f._trunc - 2 * v;
        LaurentSeries out(out_lo, out_hi);
        long len = out_hi - out_lo;  // = f.T - v
        if (len <= 0) return out;

        CycRat inv_lead = f.coeff(v).inverse();
        // Nonzero tail terms of f, normalized so the recurrence divides once.
        std::vector<std::pair<long, CycRat>> tail;
        for (long j = 1; j < f._trunc - v; ++j) {
            const CycRat& fj = f.coeff(v + j);
            if (!fj.is_zero()) tail.emplace_back(j, fj);
        }
        out._c[0] = inv_lead;
        for (long n = 1; n < len; ++n) {
            CycRat acc;
            for (const auto& [j, fj] : tail) {
                if (j > n) break;
                const CycRat& gn = out._c[static_cast<size_t>(n - j)];
                if (!gn.is_zero()) acc += fj * gn;
            }
            if (!acc.is_zero()) out._c[static_cast<size_t>(n)] = -(acc * inv_lead);
        }
        return out;
    }

    /// Copy restricted to truncation order at most new_trunc.
    LaurentSeries truncated(long new_trunc) const {
        if (new_trunc >= _trunc) return *this;
        LaurentSeries out(_min_exp, std::max(_min_exp, new_trunc));
        for (long e = out._min_exp; e < out._trunc; ++e) {
            out._c[static_cast<size_t>(e - out._min_exp)] = coeff(e);
        }
        return out;
    }

    /// Compares on [min(minExps), min(truncs, order)); records the window so
    /// callers can reject vacuous agreements.
    friend CompareOutcome equals_up_to(const LaurentSeries& f, const LaurentSeries& g,
                                       long order) {
        CompareOutcome r;
        r.window_lo = std::min(f._min_exp, g._min_exp);
        r.window_hi = std::min({f._trunc, g._trunc, order});
        if (r.window_hi < r.window_lo) r.window_hi = r.window_lo;
        for (long e = r.window_lo; e < r.window_hi; ++e) {
            const CycRat a = f.known_or_zero(e);
            const CycRat b = g.known_or_zero(e);
            if (a != b) {
                r.equal = false;
                r.diff_exp = e;
                r.lhs = a;
                r.rhs = b;
                return r;
            }
        }
        return r;
    }

private:
    static long floor_div(long a, long b) {
        long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    CycRat known_or_zero(long e) const {
        if (e < _min_exp) return CycRat();
        return coeff(e);
    }

    CycRat& at(long e) {
        if (e < _min_exp || e >= _trunc) {
            throw OutOfWindow("write at q^" + std::to_string(e) + " outside window [" +
                              std::to_string(_min_exp) + ", " + std::to_string(_trunc) + ")");
        }
        return _c[static_cast<size_t>(e - _min_exp)];
    }

    long _min_exp;
    long _trunc;
    std::vector<CycRat> _c;
};

}  // namespace rankforge
