#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/mock_theta.hpp"
#include "rankforge/tables.hpp"
#include "rankforge/theta.hpp"

namespace rankforge {

/// Which count table a class-series atom reads.
enum class TableRef { Rank, OddRank };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Everything an expression may read besides its own atoms. Table pointers
/// stay null until a caller builds them; atoms that need a missing table
/// throw TableTooSmall so the caller learns what to build.
struct EvalContext {
    const PartitionTable* parts = nullptr;
    const RankTable* rank = nullptr;
    const OddRankTable* odd = nullptr;
    const BivariateSeries* rank_gf = nullptr;
    const BivariateSeries* odd_rank_gf = nullptr;
};

/// What an expression needs from the context to evaluate at a given order.
/// Depths of -1 / 0 mean the table or bivariate series is not referenced.
struct Requirements {
    long parts_n = -1;
    long rank_n = -1;
    long odd_n = -1;
    long rank_gf_T = 0;
    long odd_gf_T = 0;

    void merge(const Requirements& other) {
        parts_n = std::max(parts_n, other.parts_n);
        rank_n = std::max(rank_n, other.rank_n);
        odd_n = std::max(odd_n, other.odd_n);
        rank_gf_T = std::max(rank_gf_T, other.rank_gf_T);
        odd_gf_T = std::max(odd_gf_T, other.odd_gf_T);
    }
    bool empty() const {
        return parts_n < 0 && rank_n < 0 && odd_n < 0 && rank_gf_T == 0 && odd_gf_T == 0;
    }
};

/// Immutable expression tree over the series atoms. Leaves evaluate through
/// the theta/mock-theta/table layers; interior nodes mirror the LaurentSeries
/// operations one to one, so every identity in the catalog is a pair of these
/// trees and nothing else.
class Expr {
public:
    enum class Kind {
        Literal,
        Q,
        Theta,
        EtaQuotient,
        G,
        POmega,
        PTable,
        AppellR0,
        RankGF,
        OddRankGF,
        ClassSeries,
        EtaMoment,
        Eta0Moment,
        Add,
        Sub,
        Mul,
        Div,
        Pow,
        Shift,
        Scale,
        SubstitutePower,
        Dissect,
        NegateOdd,
    };

    struct ClassSpec {
        TableRef table = TableRef::OddRank;
        long a = 0;
        long M = 1;
        long ell = 1;
        long r = 0;
    };

    static ExprPtr lit(const CycRat& v) {
        auto e = node(Kind::Literal);
        e->_value = v;
        return e;
    }
    static ExprPtr lit(long v) { return lit(CycRat(v)); }
    static ExprPtr q() { return node(Kind::Q); }

    /// J_m = (q^m; q^m)_inf.
    static ExprPtr jm(long m) { return theta_node(ThetaAtom::make_jm(m)); }
    /// j(c q^a; q^m).
    static ExprPtr j(const CycRat& c, long a, long m) {
        return theta_node(ThetaAtom::make_j(c, a, m));
    }
    static ExprPtr phi_of(long m) { return theta_node(ThetaAtom::make_phi(m)); }
    static ExprPtr psi_of(long m) { return theta_node(ThetaAtom::make_psi(m)); }

    static ExprPtr eta_quotient(EtaQuotientSpec spec) {
        auto e = node(Kind::EtaQuotient);
        e->_eta = std::move(spec);
        return e;
    }

    /// g(c q^a; q^m): construction validates the argument against the pole.
    static ExprPtr g(const CycRat& c, long a, long m) {
        auto e = node(Kind::G);
        e->_g.emplace(c, a, m);
        return e;
    }

    /// Sum over n >= 1 of p_omega(n) q^n.
    static ExprPtr pw() { return node(Kind::POmega); }
    /// Sum over n >= 0 of p(n) q^n, read from the partition table.
    static ExprPtr pn() { return node(Kind::PTable); }

    /// R_1^0(z; q) through the normalized bilateral sum.
    static ExprPtr appell_r0(const CycRat& z) {
        auto e = node(Kind::AppellR0);
        e->_value = z;
        return e;
    }
    /// R_1(z; q) by specializing the rank bivariate series.
    static ExprPtr rank_gf(const CycRat& z) {
        auto e = node(Kind::RankGF);
        e->_value = z;
        return e;
    }
    /// R_1^0(z; q) by specializing the odd-rank bivariate series.
    static ExprPtr odd_rank_gf(const CycRat& z) {
        auto e = node(Kind::OddRankGF);
        e->_value = z;
        return e;
    }

    /// Sum over t >= 0 of (class count at n = ell*t + r) q^t.
    static ExprPtr class_series(TableRef table, long a, long M, long ell, long r) {
        if (M < 1 || a < 0 || a >= M) throw Error("class series atom: need 0 <= a < M");
        if (ell < 1 || r < 0 || r >= ell) throw Error("class series atom: need 0 <= r < ell");
        auto e = node(Kind::ClassSeries);
        e->_cls = ClassSpec{table, a, M, ell, r};
        return e;
    }

    /// Sum over n >= 1 of eta_k(n) q^n from the rank table.
    static ExprPtr eta_moment_series(long k) {
        if (k < 0) throw Error("moment series atom: negative index");
        auto e = node(Kind::EtaMoment);
        e->_k = k;
        return e;
    }
    /// Sum over n >= 1 of eta_k^0(n) q^n through the bilateral-sum route.
    static ExprPtr eta0_moment_series_atom(long k) {
        if (k < 0 || k % 2 != 0) throw Error("eta0 moment series atom: index must be even");
        auto e = node(Kind::Eta0Moment);
        e->_k = k;
        return e;
    }

    static ExprPtr binary(Kind k, ExprPtr lhs, ExprPtr rhs) {
        auto e = node(k);
        e->_kids = {std::move(lhs), std::move(rhs)};
        return e;
    }
    static ExprPtr unary(Kind k, ExprPtr child, long arg0 = 0, long arg1 = 0) {
        auto e = node(k);
        e->_kids = {std::move(child)};
        e->_k = arg0;
        e->_r = arg1;
        return e;
    }
    static ExprPtr scaled(ExprPtr child, const CycRat& c) {
        auto e = node(Kind::Scale);
        e->_kids = {std::move(child)};
        e->_value = c;
        return e;
    }

    Kind kind() const { return _kind; }
    const CycRat& value() const { return _value; }
    const ThetaAtom& theta() const { return *_theta; }
    const EtaQuotientSpec& eta() const { return _eta; }
    const GArg& g_arg() const { return *_g; }
    const ClassSpec& cls() const { return _cls; }
    long k_arg() const { return _k; }
    long r_arg() const { return _r; }
    const ExprPtr& child(size_t i) const { return _kids[i]; }
    size_t arity() const { return _kids.size(); }

    std::string to_string() const;

private:
    explicit Expr(Kind k) : _kind(k) {}

    static std::shared_ptr<Expr> node(Kind k) { return std::shared_ptr<Expr>(new Expr(k)); }
    static ExprPtr theta_node(ThetaAtom atom) {
        auto e = node(Kind::Theta);
        e->_theta.emplace(std::move(atom));
        return e;
    }

    Kind _kind;
    CycRat _value;
    std::optional<ThetaAtom> _theta;
    std::optional<GArg> _g;
    EtaQuotientSpec _eta;
    ClassSpec _cls;
    long _k = 0;
    long _r = 0;
    std::vector<ExprPtr> _kids;
};

inline ExprPtr add(ExprPtr a, ExprPtr b) {
    return Expr::binary(Expr::Kind::Add, std::move(a), std::move(b));
}
inline ExprPtr sub(ExprPtr a, ExprPtr b) {
    return Expr::binary(Expr::Kind::Sub, std::move(a), std::move(b));
}
inline ExprPtr mul(ExprPtr a, ExprPtr b) {
    return Expr::binary(Expr::Kind::Mul, std::move(a), std::move(b));
}
inline ExprPtr divide(ExprPtr a, ExprPtr b) {
    return Expr::binary(Expr::Kind::Div, std::move(a), std::move(b));
}
inline ExprPtr pow(ExprPtr a, long e) { return Expr::unary(Expr::Kind::Pow, std::move(a), e); }
inline ExprPtr shift(ExprPtr a, long d) { return Expr::unary(Expr::Kind::Shift, std::move(a), d); }
inline ExprPtr scale(ExprPtr a, const CycRat& c) { return Expr::scaled(std::move(a), c); }
inline ExprPtr substitute_power(ExprPtr a, long k) {
    if (k < 1) throw Error("substitute_power node: power must be positive");
    return Expr::unary(Expr::Kind::SubstitutePower, std::move(a), k);
}
inline ExprPtr dissect(ExprPtr a, long ell, long r) {
    if (ell < 1 || r < 0 || r >= ell) throw Error("dissect node: need 0 <= r < ell");
    return Expr::unary(Expr::Kind::Dissect, std::move(a), ell, r);
}
inline ExprPtr negate_odd(ExprPtr a) { return Expr::unary(Expr::Kind::NegateOdd, std::move(a)); }

inline ExprPtr operator+(ExprPtr a, ExprPtr b) { return add(std::move(a), std::move(b)); }
inline ExprPtr operator-(ExprPtr a, ExprPtr b) { return sub(std::move(a), std::move(b)); }
inline ExprPtr operator*(ExprPtr a, ExprPtr b) { return mul(std::move(a), std::move(b)); }
inline ExprPtr operator/(ExprPtr a, ExprPtr b) { return divide(std::move(a), std::move(b)); }
inline ExprPtr operator-(ExprPtr a) { return scale(std::move(a), CycRat(-1)); }

namespace detail {

// Extra truncation given to the operands of a product (or quotient) so that
// factors with small negative leading exponents still cover the requested
// window. Every series in the catalog has leading exponent >= -8 per factor.
constexpr long kMulSlack = 16;

}  // namespace detail

/// Evaluates to a series whose window covers [*, T) whenever the operand
/// windows permit; products receive slack for negative leading exponents.
/// collect_requirements below must mirror the T propagation used here.
inline LaurentSeries eval_expr(const Expr& e, const EvalContext& ctx, long T) {
    using K = Expr::Kind;
    auto need_table = [](const void* p, const char* what) {
        if (p == nullptr) {
            throw TableTooSmall(std::string("expression references the ") + what +
                                ", which was not built");
        }
    };
    switch (e.kind()) {
        case K::Literal:
            return LaurentSeries::constant(e.value(), T);
        case K::Q:
            return LaurentSeries::monomial(CycRat(1), 1, T);
        case K::Theta:
            return e.theta().eval(T);
        case K::EtaQuotient:
            return eval_eta_quotient(e.eta(), T);
        case K::G:
            return g_series(e.g_arg(), T);
        case K::POmega:
            return p_omega_series(T);
        case K::PTable: {
            need_table(ctx.parts, "partition table");
            if (ctx.parts->n_max() < T - 1) {
                throw TableTooSmall("partition series to order " + std::to_string(T) +
                                    " needs rows to " + std::to_string(T - 1));
            }
            LaurentSeries s(0, T);
            for (long n = 0; n < T; ++n) s.set_coeff(n, CycRat(BigRat(ctx.parts->p(n))));
            return s;
        }
        case K::AppellR0:
            return appell_lerch_R0(e.value(), T);
        case K::RankGF: {
            need_table(ctx.rank_gf, "rank bivariate series");
            LaurentSeries s = ctx.rank_gf->specialize(e.value());
            if (s.trunc_order() < T) {
                throw TableTooSmall("rank bivariate series too shallow for order " +
                                    std::to_string(T));
            }
            return s.truncated(T);
        }
        case K::OddRankGF: {
            need_table(ctx.odd_rank_gf, "odd-rank bivariate series");
            LaurentSeries s = ctx.odd_rank_gf->specialize(e.value());
            if (s.trunc_order() < T) {
                throw TableTooSmall("odd-rank bivariate series too shallow for order " +
                                    std::to_string(T));
            }
            return s.truncated(T);
        }
        case K::ClassSeries: {
            const auto& c = e.cls();
            if (c.table == TableRef::Rank) {
                need_table(ctx.rank, "rank table");
                return class_series(*ctx.rank, c.a, c.M, c.ell, c.r, T);
            }
            need_table(ctx.odd, "odd-rank table");
            return class_series(*ctx.odd, c.a, c.M, c.ell, c.r, T);
        }
        case K::EtaMoment: {
            need_table(ctx.rank, "rank table");
            if (ctx.rank->n_max() < T - 1) {
                throw TableTooSmall("moment series to order " + std::to_string(T) +
                                    " needs rank rows to " + std::to_string(T - 1));
            }
            LaurentSeries s(0, T);
            for (long n = 1; n < T; ++n) {
                BigRat v = eta_moment(*ctx.rank, e.k_arg(), n);
                if (!v.is_zero()) s.set_coeff(n, CycRat(v));
            }
            return s;
        }
        case K::Eta0Moment:
            return eta0_moment_series(e.k_arg() / 2, T);
        case K::Add:
            return add(eval_expr(*e.child(0), ctx, T), eval_expr(*e.child(1), ctx, T));
        case K::Sub:
            return sub(eval_expr(*e.child(0), ctx, T), eval_expr(*e.child(1), ctx, T));
        case K::Mul: {
            long Tc = T + detail::kMulSlack;
            return mul(eval_expr(*e.child(0), ctx, Tc), eval_expr(*e.child(1), ctx, Tc))
                .truncated(T);
        }
        case K::Div: {
            long Tc = T + detail::kMulSlack;
            return mul(eval_expr(*e.child(0), ctx, Tc), invert(eval_expr(*e.child(1), ctx, Tc)))
                .truncated(T);
        }
        case K::Pow: {
            long ex = e.k_arg();
            if (ex == 0) return LaurentSeries::constant(CycRat(1), T);
            long Tc = T + detail::kMulSlack;
            LaurentSeries base = eval_expr(*e.child(0), ctx, Tc);
            LaurentSeries p = pow_series(base, ex >= 0 ? ex : -ex, Tc);
            if (ex < 0) p = invert(p);
            return p.truncated(T);
        }
        case K::Shift:
            return shift(eval_expr(*e.child(0), ctx, T - e.k_arg()), e.k_arg());
        case K::Scale:
            return scale(eval_expr(*e.child(0), ctx, T), e.value());
        case K::SubstitutePower: {
            long k = e.k_arg();
            long Tc = (T - 1) / k + 3;
            return substitute_power(eval_expr(*e.child(0), ctx, Tc), k).truncated(T);
        }
        case K::Dissect: {
            long Tc = e.k_arg() * (T - 1) + e.r_arg() + 1;
            return dissect(eval_expr(*e.child(0), ctx, Tc), e.k_arg(), e.r_arg());
        }
        case K::NegateOdd:
            return negate_odd(eval_expr(*e.child(0), ctx, T));
    }
    throw Error("eval_expr: unhandled node kind");
}

/// Accumulates, for evaluation at truncation T, how deep each table and
/// bivariate series must be built. Mirrors the T propagation of eval_expr.
inline void collect_requirements(const Expr& e, long T, Requirements& out) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::PTable:
            out.parts_n = std::max(out.parts_n, T - 1);
            return;
        case K::RankGF:
            out.rank_gf_T = std::max(out.rank_gf_T, T);
            return;
        case K::OddRankGF:
            out.odd_gf_T = std::max(out.odd_gf_T, T);
            return;
        case K::ClassSeries: {
            const auto& c = e.cls();
            long depth = c.ell * (T - 1) + c.r;
            if (c.table == TableRef::Rank) {
                out.rank_n = std::max(out.rank_n, depth);
            } else {
                out.odd_n = std::max(out.odd_n, depth);
            }
            return;
        }
        case K::EtaMoment:
            out.rank_n = std::max(out.rank_n, T - 1);
            return;
        case K::Add:
        case K::Sub:
            collect_requirements(*e.child(0), T, out);
            collect_requirements(*e.child(1), T, out);
            return;
        case K::Mul:
        case K::Div:
            collect_requirements(*e.child(0), T + detail::kMulSlack, out);
            collect_requirements(*e.child(1), T + detail::kMulSlack, out);
            return;
        case K::Pow:
            if (e.k_arg() != 0) collect_requirements(*e.child(0), T + detail::kMulSlack, out);
            return;
        case K::Shift:
            collect_requirements(*e.child(0), T - e.k_arg(), out);
            return;
        case K::Scale:
        case K::NegateOdd:
            collect_requirements(*e.child(0), T, out);
            return;
        case K::SubstitutePower:
            collect_requirements(*e.child(0), (T - 1) / e.k_arg() + 3, out);
            return;
        case K::Dissect:
            collect_requirements(*e.child(0), e.k_arg() * (T - 1) + e.r_arg() + 1, out);
            return;
        default:
            return;  // pure series atoms need nothing from the context
    }
}

inline Requirements collect_requirements(const Expr& e, long T) {
    Requirements out;
    collect_requirements(e, T, out);
    return out;
}

/// Largest base scale (the m of q^m) any atom works at, with power
/// substitutions compounding multiplicatively. Used to pick evaluation
/// orders deep enough that the coarsest atom still contributes several
/// nontrivial coefficients.
inline long max_atom_scale(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Theta:
            return std::max(1L, e.theta().m());
        case K::EtaQuotient: {
            long best = 1;
            for (const auto& [m, ex] : e.eta().factors) {
                if (ex != 0) best = std::max(best, m);
            }
            return best;
        }
        case K::G:
            return std::max(1L, e.g_arg().m);
        case K::SubstitutePower:
            return e.k_arg() * max_atom_scale(*e.child(0));
        default: {
            long best = 1;
            for (size_t i = 0; i < e.arity(); ++i) {
                best = std::max(best, max_atom_scale(*e.child(i)));
            }
            return best;
        }
    }
}

inline std::string Expr::to_string() const {
    using K = Kind;
    auto cyc_str = [](const CycRat& c) { return c.to_string(); };
    switch (_kind) {
        case K::Literal:
            return cyc_str(_value);
        case K::Q:
            return "q";
        case K::Theta: {
            const ThetaAtom& t = *_theta;
            switch (t.kind()) {
                case ThetaAtom::Kind::Jm:
                    return "J" + std::to_string(t.m());
                case ThetaAtom::Kind::Phi:
                    return "phi(" + std::to_string(t.m()) + ")";
                case ThetaAtom::Kind::Psi:
                    return "psi(" + std::to_string(t.m()) + ")";
                default:
                    return "j(" + cyc_str(t.c()) + "," + std::to_string(t.a()) + "," +
                           std::to_string(t.m()) + ")";
            }
        }
        case K::EtaQuotient: {
            std::string s = "etaq(" + cyc_str(_eta.prefactor) + ",q^" +
                            std::to_string(_eta.qShift);
            for (const auto& [m, ex] : _eta.factors) {
                s += ",J" + std::to_string(m) + "^" + std::to_string(ex);
            }
            return s + ")";
        }
        case K::G:
            return "g(" + cyc_str(_g->c) + "," + std::to_string(_g->a) + "," +
                   std::to_string(_g->m) + ")";
        case K::POmega:
            return "pw";
        case K::PTable:
            return "pn";
        case K::AppellR0:
            return "R0(" + cyc_str(_value) + ")";
        case K::RankGF:
            return "R1(" + cyc_str(_value) + ")";
        case K::OddRankGF:
            return "R1o(" + cyc_str(_value) + ")";
        case K::ClassSeries:
            return std::string(_cls.table == TableRef::Rank ? "N(" : "N0(") +
                   std::to_string(_cls.a) + "," + std::to_string(_cls.M) + ";" +
                   std::to_string(_cls.ell) + "n+" + std::to_string(_cls.r) + ")";
        case K::EtaMoment:
            return "eta" + std::to_string(_k);
        case K::Eta0Moment:
            return "eta0_" + std::to_string(_k);
        case K::Add:
            return "(" + _kids[0]->to_string() + " + " + _kids[1]->to_string() + ")";
        case K::Sub:
            return "(" + _kids[0]->to_string() + " - " + _kids[1]->to_string() + ")";
        case K::Mul:
            return "(" + _kids[0]->to_string() + " * " + _kids[1]->to_string() + ")";
        case K::Div:
            return "(" + _kids[0]->to_string() + " / " + _kids[1]->to_string() + ")";
        case K::Pow:
            return _kids[0]->to_string() + "^" + std::to_string(_k);
        case K::Shift:
            return "shift(" + _kids[0]->to_string() + "," + std::to_string(_k) + ")";
        case K::Scale:
            return "scale(" + _kids[0]->to_string() + "," + cyc_str(_value) + ")";
        case K::SubstitutePower:
            return "sub(" + _kids[0]->to_string() + "," + std::to_string(_k) + ")";
        case K::Dissect:
            return "dis(" + _kids[0]->to_string() + "," + std::to_string(_k) + "," +
                   std::to_string(_r) + ")";
        case K::NegateOdd:
            return "negq(" + _kids[0]->to_string() + ")";
    }
    return "?";
}

}  // namespace rankforge
