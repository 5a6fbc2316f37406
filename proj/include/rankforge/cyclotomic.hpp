#pragma once

#include <array>
#include <string>

#include "rankforge/rational.hpp"

namespace rankforge {

/// Element of Q(zeta_8): c0 + c1*z + c2*z^2 + c3*z^3 with z = zeta_8, z^4 = -1.
/// i is z^2. Roots of unity of order 1, 2, 4, 8 are all representable, which
/// covers every series coefficient and every g/j argument the catalog uses.
class CycRat {
public:
    CycRat() = default;
    CycRat(long n) : CycRat(BigRat(n)) {}  // NOLINT: implicit by design
    CycRat(const BigRat& r) { _c[0] = r; }  // NOLINT: implicit by design
    CycRat(BigRat c0, BigRat c1, BigRat c2, BigRat c3)
        : _c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static CycRat zero() { return CycRat(); }
    static CycRat one() { return CycRat(1); }

    /// zeta_8^k for any integer k (k may be negative).
    static CycRat zeta8_pow(long k) {
        long r = k % 8;
        if (r < 0) r += 8;
        CycRat out;
        if (r < 4) {
            out._c[static_cast<size_t>(r)] = BigRat(1);
        } else {
            out._c[static_cast<size_t>(r - 4)] = BigRat(-1);
        }
        return out;
    }

    static CycRat zeta8() { return zeta8_pow(1); }
    static CycRat i_unit() { return zeta8_pow(2); }

    /// Primitive M-th root of unity for M in {1,2,4,8}.
    static CycRat root_of_unity(long m) {
        switch (m) {
            case 1: return one();
            case 2: return CycRat(-1);
            case 4: return i_unit();
            case 8: return zeta8();
            default: throw Error("CycRat: no root of unity of order " + std::to_string(m));
        }
    }

    const BigRat& component(int k) const { return _c[static_cast<size_t>(k)]; }

    bool is_zero() const {
        return _c[0].is_zero() && _c[1].is_zero() && _c[2].is_zero() && _c[3].is_zero();
    }
    bool is_rational() const {
        return _c[1].is_zero() && _c[2].is_zero() && _c[3].is_zero();
    }
    bool is_one() const { return is_rational() && _c[0] == BigRat(1); }
    const BigRat& rational_part() const { return _c[0]; }

    CycRat operator-() const { return CycRat(-_c[0], -_c[1], -_c[2], -_c[3]); }

    CycRat& operator+=(const CycRat& o) {
        for (int k = 0; k < 4; ++k) _c[static_cast<size_t>(k)] += o._c[static_cast<size_t>(k)];
        return *this;
    }
    CycRat& operator-=(const CycRat& o) {
        for (int k = 0; k < 4; ++k) _c[static_cast<size_t>(k)] -= o._c[static_cast<size_t>(k)];
        return *this;
    }

    friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
    friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }

    friend CycRat operator*(const CycRat& a, const CycRat& b) {
        if (a.is_rational() && b.is_rational()) {
            CycRat out;
            out._c[0] = a._c[0] * b._c[0];
            return out;
        }
        CycRat out;
        for (int i = 0; i < 4; ++i) {
            const BigRat& ai = a._c[static_cast<size_t>(i)];
            if (ai.is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                const BigRat& bj = b._c[static_cast<size_t>(j)];
                if (bj.is_zero()) continue;
                int e = i + j;
                if (e < 4) {
                    out._c[static_cast<size_t>(e)] += ai * bj;
                } else {
                    out._c[static_cast<size_t>(e - 4)] -= ai * bj;
                }
            }
        }
        return out;
    }
    CycRat& operator*=(const CycRat& o) { return *this = *this * o; }

    /// Multiplicative inverse via the Galois conjugates: the norm
    /// x*s3(x)*s5(x)*s7(x) lands in Q, so 1/x = s3(x)s5(x)s7(x)/norm.
    CycRat inverse() const {
        if (is_zero()) throw Error("CycRat: inverse of zero");
        if (is_rational()) return CycRat(_c[0].reciprocal());
        CycRat y = sigma3() * sigma5() * sigma7();
        CycRat n = *this * y;
        if (!n.is_rational() || n._c[0].is_zero()) {
            throw Error("CycRat: norm computation failed");
        }
        return y * CycRat(n._c[0].reciprocal());
    }

    friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

    CycRat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycRat base = *this;
        CycRat out = one();
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    friend bool operator==(const CycRat& a, const CycRat& b) {
        return a._c[0] == b._c[0] && a._c[1] == b._c[1] && a._c[2] == b._c[2] &&
               a._c[3] == b._c[3];
    }
    friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

    /// Renders as a sum of "r", "r*z8", "r*z8^2", "r*z8^3" terms, zero terms
    /// elided; each term re-parses under the expression grammar.
    /// Renders in the same syntax the expression parser accepts, e.g.
    /// "1/2 - z8^2" or "-3*z8 + z8^3". Zero terms are elided.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        static const char* kPowers[4] = {"", "z8", "z8^2", "z8^3"};
        for (int k = 0; k < 4; ++k) {
            const BigRat& c = _c[static_cast<size_t>(k)];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            std::string mag = (neg ? -c : c).to_string();
            std::string term;
            if (k == 0) {
                term = mag;
            } else if (mag == "1") {
                term = kPowers[k];
            } else {
                term = mag + "*" + kPowers[k];
            }
            if (out.empty()) {
                out = neg ? "-" + term : term;
            } else {
                out += neg ? " - " : " + ";
                out += term;
            }
        }
        return out;
    }

private:
    // sigma_j sends z to z^j; these are the three nontrivial automorphisms.
    CycRat sigma3() const { return CycRat(_c[0], _c[3], -_c[2], _c[1]); }
    CycRat sigma5() const { return CycRat(_c[0], -_c[1], _c[2], -_c[3]); }
    CycRat sigma7() const { return CycRat(_c[0], -_c[3], -_c[2], -_c[1]); }

    std::array<BigRat, 4> _c{};
};

}  // namespace rankforge
