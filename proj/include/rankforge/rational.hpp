#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "rankforge/errors.hpp"

namespace rankforge {

using BigInt = mpz_class;

/// Exact rational number backed by GMP. Kept canonical at all times:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1. mpq_class does not canonicalize
/// two-argument construction on its own, so every constructor here does.
class BigRat {
public:
    BigRat() : _v(0) {}
    BigRat(long n) : _v(n) {}  // NOLINT: implicit by design, mirrors int->Q
    explicit BigRat(const BigInt& n) : _v(n) {}
    BigRat(const BigInt& num, const BigInt& den) : _v(num, den) {
        if (den == 0) throw Error("BigRat: zero denominator");
        _v.canonicalize();
    }
    BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}
    explicit BigRat(mpq_class v) : _v(std::move(v)) { _v.canonicalize(); }

    const BigInt numerator() const { return _v.get_num(); }
    const BigInt denominator() const { return _v.get_den(); }

    bool is_zero() const { return sgn(_v) == 0; }
    bool is_integer() const { return _v.get_den() == 1; }
    int sign() const { return sgn(_v); }

    BigRat operator-() const { return BigRat(mpq_class(-_v)); }
    BigRat& operator+=(const BigRat& o) { _v += o._v; return *this; }
    BigRat& operator-=(const BigRat& o) { _v -= o._v; return *this; }
    BigRat& operator*=(const BigRat& o) { _v *= o._v; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw Error("BigRat: division by zero");
        _v /= o._v;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a._v == b._v; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a._v != b._v; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a._v < b._v; }

    BigRat reciprocal() const {
        if (is_zero()) throw Error("BigRat: reciprocal of zero");
        return BigRat(_v.get_den(), _v.get_num());
    }

    /// Renders as "n" for integers and "n/d" otherwise; parseable back by the
    /// expression grammar's rational rule.
    std::string to_string() const {
        if (is_integer()) return _v.get_num().get_str();
        return _v.get_num().get_str() + "/" + _v.get_den().get_str();
    }

    const mpq_class& raw() const { return _v; }

private:
    mpq_class _v;
};

/// Binomial coefficient C(top, k) for arbitrary (possibly negative) integer
/// top and k >= 0, via C(-n, k) handling built into mpz_bin_ui.
inline BigInt binomial(const BigInt& top, unsigned long k) {
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

inline BigInt binomial(long top, unsigned long k) { return binomial(BigInt(top), k); }

}  // namespace rankforge
