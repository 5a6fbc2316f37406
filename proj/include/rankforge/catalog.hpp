#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/errors.hpp"
#include "rankforge/expr.hpp"
#include "rankforge/parser.hpp"

namespace rankforge {

// The identity catalog: a frozen list of verification entries.  Each entry
// pairs an expression (or a pair of expressions) with a verification mode:
//
//   Equality    - lhs and rhs are evaluated as truncated Laurent series and
//                 compared coefficient by coefficient on a shared window.
//   Congruence  - every coefficient of lhs along the listed arithmetic
//                 progressions must be an integer divisible by `modulus`.
//   Inequality  - lhs and rhs are dissected counting series; the coefficient
//                 of lhs must strictly exceed that of rhs at every index.
//   ScanReport  - same walk as Congruence but the entry never fails; the
//                 report records the coverage window and any counterexample.
//
// The manifest is frozen: ids, groups, and formula content are pinned by the
// test suite and must not drift.

enum class EntryMode { Equality, Congruence, Inequality, ScanReport };

// Arithmetic progression ell*t + r walked in the exponent space of the
// scanned series (t = nMin, nMin+1, ... while the exponent stays in range).
struct Progression {
    long ell = 1;
    long r = 0;
};

struct CatalogEntry {
    std::string id;
    std::string group;
    ExprPtr lhs;
    ExprPtr rhs;                 // unused for Congruence / ScanReport modes
    EntryMode mode = EntryMode::Equality;
    long defaultOrder = 200;
    long minOrder = 8;           // smallest order giving a meaningful window
    long modulus = 0;            // Congruence / ScanReport
    std::vector<Progression> progressions;
    long nMin = 0;               // first t checked in each progression
    long scanScale = 1;          // scan ceiling = scanScale * nMax + scanOffset
    long scanOffset = 0;
    std::string paperRef;        // verbatim formula fragment for provenance
};

enum class VerifyStatus { Verified, Failed, Reported };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "verified";
        case VerifyStatus::Failed: return "failed";
        default: return "reported";
    }
}

struct Discrepancy {
    long exp = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    VerifyStatus status = VerifyStatus::Failed;
    long window_lo = 0;          // inclusive
    long window_hi = 0;          // exclusive
    std::optional<Discrepancy> firstDiscrepancy;
    long long wallMs = 0;
};

namespace detail {

// Equality entries are evaluated a little past the comparison order so the
// window never collapses against the truncation boundary.
constexpr long kEvalSlack = 8;

inline bool integer_coefficient(const CycRat& c, BigInt& out) {
    if (!c.is_rational()) {
        return false;
    }
    const BigRat& r = c.rational_part();
    if (r.denominator() != 1) {
        return false;
    }
    out = r.numerator();
    return true;
}

inline bool divisible(const BigInt& v, long m) {
    return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

}  // namespace detail

// Truncation order the entry's expressions are evaluated at for a given
// requested order / scan bound.  Used both by the verifier and by callers
// sizing shared tables ahead of a run.
inline long entry_eval_order(const CatalogEntry& e, std::optional<long> order, long n_max) {
    switch (e.mode) {
        case EntryMode::Equality:
            return order.value_or(e.defaultOrder) + detail::kEvalSlack;
        case EntryMode::Congruence:
        case EntryMode::ScanReport:
            return e.scanScale * n_max + e.scanOffset + 1;
        case EntryMode::Inequality: {
            const Progression& pr = e.progressions.at(0);
            return (n_max - pr.r) / pr.ell + 1;
        }
    }
    return order.value_or(e.defaultOrder);
}

inline Requirements entry_requirements(const CatalogEntry& e, std::optional<long> order, long n_max) {
    Requirements req;
    long t = entry_eval_order(e, order, n_max);
    collect_requirements(*e.lhs, t, req);
    if (e.mode == EntryMode::Equality || e.mode == EntryMode::Inequality) {
        collect_requirements(*e.rhs, t, req);
    }
    return req;
}

// Verifies one entry against prepared context tables.  `order` overrides the
// entry's defaultOrder when present (equality mode only); `n_max` bounds the
// scan range for congruence / inequality / scan-report modes.  Throws
// WindowTooSmall when the requested order cannot produce a trustworthy
// window, and TableTooSmall when the context lacks depth.
inline VerificationReport verify_entry(const CatalogEntry& entry, const EvalContext& ctx,
                                       std::optional<long> order = std::nullopt,
                                       long n_max = 600) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = entry.id;

    switch (entry.mode) {
        case EntryMode::Equality: {
            long ord = order.value_or(entry.defaultOrder);
            if (ord < 8) {
                throw WindowTooSmall("entry " + entry.id + ": order " + std::to_string(ord) + " is below the floor of 8");
            }
            if (ord < entry.minOrder) {
                throw WindowTooSmall("entry " + entry.id + ": order " + std::to_string(ord) +
                                     " is below the entry minimum " + std::to_string(entry.minOrder));
            }
            LaurentSeries lhs = eval_expr(*entry.lhs, ctx, ord + detail::kEvalSlack);
            LaurentSeries rhs = eval_expr(*entry.rhs, ctx, ord + detail::kEvalSlack);
            CompareOutcome cmp = equals_up_to(lhs, rhs, ord);
            rep.window_lo = cmp.window_lo;
            rep.window_hi = cmp.window_hi;
            if (cmp.window_hi - cmp.window_lo < 16) {
                throw WindowTooSmall("entry " + entry.id + ": comparison window [" +
                                     std::to_string(cmp.window_lo) + "," + std::to_string(cmp.window_hi) +
                                     ") is shorter than 16 coefficients");
            }
            if (cmp.equal) {
                rep.status = VerifyStatus::Verified;
            } else {
                rep.status = VerifyStatus::Failed;
                rep.firstDiscrepancy = Discrepancy{cmp.diff_exp, cmp.lhs.to_string(), cmp.rhs.to_string()};
            }
            break;
        }
        case EntryMode::Congruence:
        case EntryMode::ScanReport: {
            long scan_hi = entry.scanScale * n_max + entry.scanOffset;
            LaurentSeries series = eval_expr(*entry.lhs, ctx, scan_hi + 1);
            bool first = true;
            bool all_pass = true;
            std::optional<Discrepancy> disc;
            for (const Progression& pr : entry.progressions) {
                for (long t = entry.nMin;; ++t) {
                    long e = pr.ell * t + pr.r;
                    if (e > scan_hi) {
                        break;
                    }
                    if (first) {
                        rep.window_lo = e;
                        rep.window_hi = e + 1;
                        first = false;
                    } else {
                        rep.window_lo = std::min(rep.window_lo, e);
                        rep.window_hi = std::max(rep.window_hi, e + 1);
                    }
                    const CycRat& c = series.coeff(e);
                    BigInt v;
                    bool ok = detail::integer_coefficient(c, v) && detail::divisible(v, entry.modulus);
                    if (!ok) {
                        all_pass = false;
                        if (!disc) {
                            disc = Discrepancy{e, c.to_string(), "0 (mod " + std::to_string(entry.modulus) + ")"};
                        }
                    }
                }
            }
            if (entry.mode == EntryMode::ScanReport) {
                rep.status = VerifyStatus::Reported;
                rep.firstDiscrepancy = disc;
            } else if (all_pass) {
                rep.status = VerifyStatus::Verified;
            } else {
                rep.status = VerifyStatus::Failed;
                rep.firstDiscrepancy = disc;
            }
            break;
        }
        case EntryMode::Inequality: {
            const Progression& pr = entry.progressions.at(0);
            long t_hi = (n_max - pr.r) / pr.ell;
            if (t_hi < entry.nMin) {
                throw WindowTooSmall("entry " + entry.id + ": no progression instances below n_max " + std::to_string(n_max));
            }
            LaurentSeries lhs = eval_expr(*entry.lhs, ctx, t_hi + 1);
            LaurentSeries rhs = eval_expr(*entry.rhs, ctx, t_hi + 1);
            rep.window_lo = pr.ell * entry.nMin + pr.r;
            rep.window_hi = pr.ell * t_hi + pr.r + 1;
            rep.status = VerifyStatus::Verified;
            for (long t = entry.nMin; t <= t_hi; ++t) {
                const CycRat& lc = lhs.coeff(t);
                const CycRat& rc = rhs.coeff(t);
                if (!lc.is_rational() || !rc.is_rational() || !(rc.rational_part() < lc.rational_part())) {
                    rep.status = VerifyStatus::Failed;
                    rep.firstDiscrepancy = Discrepancy{pr.ell * t + pr.r, lc.to_string(), rc.to_string()};
                    break;
                }
            }
            break;
        }
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.wallMs = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

// Selects entries whose id or group starts with `filter` (empty selects all),
// sorted by id.  Throws ConfigError when nothing matches.
inline std::vector<const CatalogEntry*> select_entries(const std::vector<CatalogEntry>& all,
                                                       const std::string& filter = std::string()) {
    std::vector<const CatalogEntry*> sel;
    for (const CatalogEntry& e : all) {
        if (filter.empty() || e.id.rfind(filter, 0) == 0 || e.group.rfind(filter, 0) == 0) {
            sel.push_back(&e);
        }
    }
    if (sel.empty()) {
        throw ConfigError("filter '" + filter + "' selects no catalog entries");
    }
    std::sort(sel.begin(), sel.end(),
              [](const CatalogEntry* a, const CatalogEntry* b) { return a->id < b->id; });
    return sel;
}

// Runs every selected entry, converting per-entry exceptions into failed
// reports so a batch never aborts half way.
inline std::vector<VerificationReport> verify_all(const std::vector<const CatalogEntry*>& selection,
                                                  const EvalContext& ctx,
                                                  std::optional<long> order = std::nullopt,
                                                  long n_max = 600) {
    std::vector<VerificationReport> reports;
    reports.reserve(selection.size());
    for (const CatalogEntry* e : selection) {
        try {
            reports.push_back(verify_entry(*e, ctx, order, n_max));
        } catch (const Error& err) {
            VerificationReport rep;
            rep.id = e->id;
            rep.status = VerifyStatus::Failed;
            rep.firstDiscrepancy = Discrepancy{0, std::string("error: ") + err.what(), ""};
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

namespace detail {

struct CatalogBuilder {
    std::vector<CatalogEntry> entries;

    void equality(std::string id, std::string group, ExprPtr lhs, ExprPtr rhs,
                  std::string quote, long def_order = 200, long min_order = 8) {
        CatalogEntry e;
        e.id = std::move(id);
        e.group = std::move(group);
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
        e.mode = EntryMode::Equality;
        e.defaultOrder = def_order;
        e.minOrder = min_order;
        e.paperRef = std::move(quote);
        entries.push_back(std::move(e));
    }

    void equality_text(std::string id, std::string group, const std::string& lhs_text,
                       const std::string& rhs_text, std::string quote,
                       long def_order = 200, long min_order = 8) {
        equality(std::move(id), std::move(group), parse_expr(lhs_text), parse_expr(rhs_text),
                 std::move(quote), def_order, min_order);
    }

    void congruence(std::string id, std::string group, ExprPtr lhs, long modulus,
                    std::vector<Progression> progs, std::string quote,
                    long scan_scale = 1, long scan_offset = 0, long n_min = 0) {
        CatalogEntry e;
        e.id = std::move(id);
        e.group = std::move(group);
        e.lhs = std::move(lhs);
        e.mode = EntryMode::Congruence;
        e.modulus = modulus;
        e.progressions = std::move(progs);
        e.nMin = n_min;
        e.scanScale = scan_scale;
        e.scanOffset = scan_offset;
        e.paperRef = std::move(quote);
        entries.push_back(std::move(e));
    }

    void scan_report(std::string id, std::string group, ExprPtr lhs, long modulus,
                     std::vector<Progression> progs, std::string quote) {
        congruence(std::move(id), std::move(group), std::move(lhs), modulus, std::move(progs),
                   std::move(quote));
        entries.back().mode = EntryMode::ScanReport;
    }

    void inequality(std::string id, std::string group, ExprPtr lhs, ExprPtr rhs,
                    Progression prog, long n_min, std::string quote) {
        CatalogEntry e;
        e.id = std::move(id);
        e.group = std::move(group);
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
        e.mode = EntryMode::Inequality;
        e.progressions = {prog};
        e.nMin = n_min;
        e.paperRef = std::move(quote);
        entries.push_back(std::move(e));
    }
};

}  // namespace detail

// Builds the frozen catalog.  Entry order follows the source material; ids
// and content are pinned by the manifest test.
inline std::vector<CatalogEntry> build_catalog() {
    detail::CatalogBuilder b;
    auto cs = [](long a, long big_m, long ell, long r) {
        return Expr::class_series(TableRef::OddRank, a, big_m, ell, r);
    };
    auto csr = [](long a, long big_m, long ell, long r) {
        return Expr::class_series(TableRef::Rank, a, big_m, ell, r);
    };

    // -- structural law -----------------------------------------------------
    {
        const std::string f = "q^-2*J2^5/(J1^2*J4^2) + g(1,1,4)";
        b.equality_text("dissect-roundtrip", "laws", f,
                        "sub(dis(" + f + ",3,0),3) + q*sub(dis(" + f + ",3,1),3) + q^2*sub(dis(" + f + ",3,2),3)",
                        R"(f(q) = \sum_{r} q^r f_r(q^3))");
    }

    // -- theta-quotient rearrangements --------------------------------------
    b.equality_text("Jbar14", "rearr", "j(-1,1,4)", "J2^2/J1",
                    R"(\overline{J}_{1,4}=\frac{J_{2}^2}{J_{1}})");
    b.equality_text("Jbar12", "rearr", "j(-1,1,2)", "J2^5/(J1^2*J4^2)",
                    R"(\overline{J}_{1,2}=\frac{J_{2}^5}{J_{1}^2J_{4}^2})");
    b.equality_text("J12", "rearr", "j(1,1,2)", "J1^2/J2",
                    R"(J_{1,2}=\frac{J_{1}^2}{J_{2}})");
    b.equality_text("J14", "rearr", "j(1,1,4)", "J1*J4/J2",
                    R"(J_{1,4}=\frac{J_{1}J_{4}}{J_{2}})");

    // -- 2-dissections of powers of J1 --------------------------------------
    b.equality_text("J2", "lemma23", "J1^2", "J2*J8^5/(J4^2*J16^2) - 2*q*J2*J16^2/J8",
                    R"(J_{1}^2=\frac{J_{2}J_{8}^5}{J_{4}^2J_{16}^2}-2q\frac{J_{2}J_{16}^2}{J_{8}})");
    b.equality_text("J4", "lemma23", "J1^4", "J4^10/(J2^2*J8^4) - 4*q*J2^2*J8^4/J4^2",
                    R"(J_{1}^4=\frac{J_{4}^{10}}{J_{2}^2J_{8}^4}-4q\frac{J_{2}^2J_{8}^4}{J_{4}^2})");
    b.equality_text("J-2", "lemma23", "1/J1^2", "J8^5/(J2^5*J16^2) + 2*q*J4^2*J16^2/(J2^5*J8)",
                    R"(\frac{1}{J_{1}^2}=\frac{J_{8}^5}{J_{2}^5J_{16}^2}+2q\frac{J_{4}^2J_{16}^2}{J_{2}^5J_{8}})");
    b.equality_text("J-4", "lemma23", "1/J1^4", "J4^14/(J2^14*J8^4) + 4*q*J4^2*J8^4/J2^10",
                    R"(\frac{1}{J_{1}^4}=\frac{J_{4}^{14}}{J_{2}^{14}J_{8}^4}+4q\frac{J_{4}^2J_{8}^4}{J_{2}^{10}})");

    b.equality_text("J-6", "cor24", "1/J1^6",
                    "(J8*J4^14/(J2^19*J16^2) + 8*q^2*J4^4*J8^3*J16^2/J2^15)"
                    " + 2*q*(J4^16*J16^2/(J2^19*J8^5) + 2*J4^2*J8^9/(J2^15*J16^2))",
                    R"(\frac{1}{J_{1}^6}=\frac{J_{8}J_{4}^{14}}{J_{2}^{19}J_{16}^2}+8q^2\frac{J_{4}^4J_{8}^3J_{16}^2}{J_{2}^{15}}+2q\left(\frac{J_{4}^{16}J_{16}^2}{J_{2}^{19}J_{8}^5}+2\frac{J_{4}^2J_{8}^9}{J_{2}^{15}J_{16}^2}\right))");
    b.equality_text("J-8", "cor24", "1/J1^8",
                    "(J4^28/(J2^28*J8^8) + 16*q^2*J4^4*J8^8/J2^20) + 8*q*J4^16/J2^24",
                    R"(\frac{1}{J_{1}^8}=\frac{J_{4}^{28}}{J_{2}^{28}J_{8}^8}+16q^2\frac{J_{4}^4J_{8}^8}{J_{2}^{20}}+8q\frac{J_{4}^{16}}{J_{2}^{24}})");

    // -- phi / psi dissections ----------------------------------------------
    b.equality_text("phi", "entry25", "phi(1)", "phi(4) + 2*q*psi(8)",
                    R"(\varphi(q)=\varphi(q^4)+2q\psi(q^8))");
    b.equality_text("phi-2", "entry25", "phi(1)^2", "phi(2)^2 + 4*q*psi(4)^2",
                    R"(\varphi(q)^2=\varphi(q^2)^2+4q\psi(q^4)^2)");
    b.equality("phi-negative", "entry25", negate_odd(Expr::phi_of(1)),
               parse_expr("phi(4) - 2*q*psi(8)"),
               R"(\varphi(-q)=\varphi(q^4)-2q\psi(q^8))");
    b.equality("phi-negative-2", "entry25", pow(negate_odd(Expr::phi_of(1)), 2),
               parse_expr("phi(2)^2 - 4*q*psi(4)^2"),
               R"(\varphi(-q)^2=\varphi(q^2)^2-4q\psi(q^4)^2)");

    // -- symmetry of g at conjugate arguments --------------------------------
    b.equality_text("iq-minus", "gsym", "g(z8^2,1,2)", "g(-1*z8^2,1,2)",
                    R"(g(iq;q^2)=g(-iq;q^2))");

    // -- the g transformation at sampled arguments ---------------------------
    b.equality_text("g-transform-q-q2", "lemma21", "g(1,1,2)",
                    "-q^-1 + q^-1*g(-1,0,8) - q^2*g(-1,4,8)"
                    " + q^-1*J4^5/(j(1,1,2)*j(-1,4,4)*J8^2)",
                    R"(g(x;q)=-x^{-1}+qx^{-3}g(-qx^{-2};q^4)-qg(-qx^2;q^4)+\frac{J_{2}^5}{x\,j(x;q)j(-qx^2;q^2)J_{4}^2})");
    b.equality_text("g-transform-mq-q2", "lemma21", "g(-1,1,2)",
                    "q^-1 - q^-1*g(-1,0,8) - q^2*g(-1,4,8)"
                    " - q^-1*J4^5/(j(-1,1,2)*j(-1,4,4)*J8^2)",
                    R"(g(x;q)=-x^{-1}+qx^{-3}g(-qx^{-2};q^4)-qg(-qx^2;q^4)+\frac{J_{2}^5}{x\,j(x;q)j(-qx^2;q^2)J_{4}^2})");
    b.equality_text("g-transform-m1", "lemma21", "g(-1,0,1)",
                    "1 - 2*q*g(-1,1,4) - J2^5/(j(-1,0,1)*j(-1,1,2)*J4^2)",
                    R"(g(x;q)=-x^{-1}+qx^{-3}g(-qx^{-2};q^4)-qg(-qx^2;q^4)+\frac{J_{2}^5}{x\,j(x;q)j(-qx^2;q^2)J_{4}^2})");
    b.equality_text("g-transform-i", "lemma21", "g(z8^2,0,1)",
                    "z8^2 + (z8^2 - 1)*q*g(1,1,4)"
                    " + J2^5/(z8^2*j(z8^2,0,1)*j(1,1,2)*J4^2)",
                    R"(g(x;q)=-x^{-1}+qx^{-3}g(-qx^{-2};q^4)-qg(-qx^2;q^4)+\frac{J_{2}^5}{x\,j(x;q)j(-qx^2;q^2)J_{4}^2})");

    // -- specializations of g at eighth roots of unity ------------------------
    b.equality_text("q-sum", "gspec", "g(1,1,2) + g(-1,1,2)",
                    "-2*q^2*g(-1,4,8) + 2*J4^8*J16^2/(J2^4*J8^5)",
                    R"(g(q;q^2)+g(-q;q^2)=-2q^2g(-q^4;q^8)+2\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5})");
    b.equality_text("q-minus", "gspec", "g(1,1,2) - g(-1,1,2)",
                    "-2*q^-1 + 2*q^-1*g(-1,0,8) + q^-1*J4^6*J8/(J2^4*J16^2)",
                    R"(g(q;q^2)-g(-q;q^2)=-2q^{-1}+2q^{-1}g(-1;q^8)+q^{-1}\frac{J_{4}^6J_{8}}{J_{2}^4J_{16}^2})");
    b.equality_text("iq-sum", "gspec", "g(z8^2,1,2) + g(-1*z8^2,1,2)",
                    "-2*q^2*g(1,4,8) + 2*J8^3/J4^2",
                    R"(g(iq;q^2)+g(-iq;q^2)=-2q^2g(q^4;q^8)+2\frac{J_{8}^3}{J_{4}^2})");
    b.equality_text("i-minus", "gspec", "g(z8^2,0,1) - g(-1*z8^2,0,1)",
                    "2*z8^2 + 2*z8^2*q*g(1,1,4) - z8^2*J2^7/(J1^3*J4^3)",
                    R"(g(i;q)-g(-i;q)=2i+2iqg(q;q^4)-2i\frac{J_{2}^7}{J_{1}^3J_{4}^3})");
    b.equality_text("zetaq-sum", "gspec", "g(z8,1,2) + g(-1*z8,1,2)",
                    "-2*q^2*g(-1*z8^2,4,8) + 2*J4^5*J32/(J2^2*J8^2*J16)",
                    R"(g(\zeta_{8}q;q^2)+g(-\zeta_{8}q;q^2)=-2q^2g(-q^4;q^8)+2\frac{J_{4}^5J_{32}}{J_{2}^2J_{8}^2J_{16}})");
    b.equality_text("zetaq-minus", "gspec", "g(z8,1,2) - g(-1*z8,1,2)",
                    "-2*z8^-1*q^-1 - 2*z8*q^-1*g(z8^2,0,8)"
                    " + (z8 + z8^-1)*q^-1*J4^5*J16^2/(J2^2*J8^3*J32)",
                    R"(g(\zeta_{8}q;q^2)-g(-\zeta_{8}q;q^2)=-2\zeta_{8}^{-1}q^{-1}-2\zeta_{8}g(i;q^8)+(\zeta_{8}+\zeta_{8}^{-1})q^{-1}\frac{J_{4}^5J_{16}^2}{J_{2}^2J_{8}^3J_{32}})");
    b.equality_text("izetaq-sum", "gspec", "g(z8^3,1,2) + g(-1*z8^3,1,2)",
                    "-2*q^2*g(z8^2,4,8) + 2*J4^5*J32/(J2^2*J8^2*J16)",
                    R"(g(i\zeta_{8}q;q^2)+g(-i\zeta_{8}q;q^2)=-2q^2g(iq^4;q^8)+2\frac{J_{4}^5J_{32}}{J_{2}^2J_{8}^2J_{16}})");
    b.equality_text("izetaq-minus", "gspec", "g(z8^3,1,2) - g(-1*z8^3,1,2)",
                    "2*z8*q^-1 + 2*z8^-1*q^-1*g(-1*z8^2,0,8)"
                    " - (z8 + z8^-1)*q^-1*J4^5*J16^2/(J2^2*J8^3*J32)",
                    R"(g(i\zeta_{8}q;q^2)-g(-i\zeta_{8}q;q^2)=2\zeta_{8}q^{-1}+2\zeta_{8}^{-1}q^{-1}g(-i;q^8)-(\zeta_{8}+\zeta_{8}^{-1})q^{-1}\frac{J_{4}^5J_{16}^2}{J_{2}^2J_{8}^3J_{32}})");

    // -- intermediate combinations -------------------------------------------
    b.equality_text("q4-sum", "inter", "g(1,4,8) + g(-1,4,8)",
                    "-2*q^8*g(-1,16,32) + 2*J16^8*J64^2/(J8^4*J32^5)",
                    R"(g(q^4;q^8)+g(-q^4;q^8)=-2q^8g(-q^{16};q^{32})+2\frac{J_{16}^8J_{64}^2}{J_{8}^4J_{32}^5})",
                    512, 256);
    b.equality_text("g-q-q2", "inter", "g(-1,1,2)",
                    "q^-1 - q^-1*g(-1,0,8) - q^2*g(-1,4,8)"
                    " + J4^8*J16^2/(J2^4*J8^5) - 1/2*q^-1*J4^6*J8/(J2^4*J16^2)",
                    R"(g(-q;q^2)=q^{-1}-q^{-1}g(-1;q^8)-q^2g(-q^4;q^8)+\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5}-\frac{1}{2}q^{-1}\frac{J_{4}^6J_{8}}{J_{2}^4J_{16}^2})");
    b.equality_text("g-add-1", "inter", "g(-1,0,8) - q^3*g(-1,4,8)",
                    "1 + q*g(1,1,2) - 1/2*J2*J4^6/(J1^2*J8^4)",
                    R"(g(-1;q^8)-q^3g(-q^4;q^8)=1+qg(q;q^2)-\frac{1}{2}\frac{J_{2}J_{4}^6}{J_{1}^2J_{8}^4})");
    b.equality("N04-middle", "inter", cs(0, 4, 1, 0),
               parse_expr("1/4*q*(-2*q^2*(g(1,4,8) + g(-1,4,8))"
                          " + 2*J4^8*J16^2/(J2^4*J8^5) + 2*J8^3/J4^2)"),
               R"(\sum N^{0}(0,4;n)q^n=\frac{q}{4}\left(-2q^2(g(q^4;q^8)+g(-q^4;q^8))+2\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5}+2\frac{J_{8}^3}{J_{4}^2}\right))");
    b.equality("add-1", "inter", cs(0, 4, 2, 1),
               parse_expr("q^5*g(-1,8,16) - q*J8^8*J32^2/(J4^4*J16^5)"
                          " + 1/2*(J4^3/J2^2 + J4^9/(J2^6*J8^2)) + 2*q*J8^6/(J2^2*J4^3)"),
               R"(\sum N^{0}(0,4;2n+1)q^n=q^5g(-q^8;q^{16})-q\frac{J_{8}^8J_{32}^2}{J_{4}^4J_{16}^5}+\frac{1}{2}\left(\frac{J_{4}^3}{J_{2}^2}+\frac{J_{4}^9}{J_{2}^6J_{8}^2}\right)+2q\frac{J_{8}^6}{J_{2}^2J_{4}^3})");

    // -- the odd-rank generating function against g ---------------------------
    {
        const char* zarg[8] = {"1", "z8", "z8^2", "z8^3", "z8^4", "z8^5", "z8^6", "z8^7"};
        for (int k = 0; k < 8; ++k) {
            b.equality("g-R-" + std::to_string(k), "gR",
                       Expr::odd_rank_gf(CycRat::zeta8_pow(k)),
                       parse_expr(std::string("shift(g(") + zarg[k] + ",1,2),1)"),
                       R"(R_{1}^{0}(z;q)=qg(zq;q^2))");
        }
    }

    // -- the ordinary rank generating function against g ----------------------
    b.equality("rank-gen-g-m1", "rankgen", Expr::rank_gf(CycRat(-1)),
               parse_expr("2 - 2*g(-1,0,1)"),
               R"(R_{1}(z;q)=(1-z)(1+zg(z;q)))");
    b.equality("rank-gen-g-i", "rankgen", Expr::rank_gf(CycRat::i_unit()),
               parse_expr("(1 - z8^2)*(1 + z8^2*g(z8^2,0,1))"),
               R"(R_{1}(z;q)=(1-z)(1+zg(z;q)))");
    b.equality("rank-gen-g-zeta8", "rankgen", Expr::rank_gf(CycRat::zeta8()),
               parse_expr("(1 - z8)*(1 + z8*g(z8,0,1))"),
               R"(R_{1}(z;q)=(1-z)(1+zg(z;q)))");

    // -- odd-rank classes modulo 2 --------------------------------------------
    b.equality("N02-2n1", "thm-mod2", cs(0, 2, 2, 1),
               parse_expr("-q*g(-1,2,4) + J2^8*J8^2/(J1^4*J4^5)"),
               R"(\sum N^{0}(0,2;2n+1)q^n=-qg(-q^2;q^4)+\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5})");
    b.equality("N02-4n1", "thm-mod2", cs(0, 2, 4, 1),
               parse_expr("J2^9/(J1^6*J4^2)"),
               R"(\sum N^{0}(0,2;4n+1)q^n=\frac{J_{2}^9}{J_{1}^6J_{4}^2})");
    b.equality("N02-4n3", "thm-mod2", cs(0, 2, 4, 3),
               parse_expr("-g(-1,1,2) + 4*J4^6/(J1^2*J2^3)"),
               R"(\sum N^{0}(0,2;4n+3)q^n=-g(-q;q^2)+4\frac{J_{4}^6}{J_{1}^2J_{2}^3})");
    b.equality("N12-2n", "thm-mod2", cs(1, 2, 2, 0),
               parse_expr("-1 + g(-1,0,4) + 1/2*J2^6*J4/(J1^4*J8^2)"),
               R"(\sum N^{0}(1,2;2n)q^n=-1+g(-1;q^4)+\frac{1}{2}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2})");
    b.equality("N12-4n", "thm-mod2", cs(1, 2, 4, 0),
               parse_expr("-1 + g(-1,0,2) + 1/2*J2^15/(J1^8*J4^6)"),
               R"(\sum N^{0}(1,2;4n)q^n=-1+g(-1;q^2)+\frac{1}{2}\frac{J_{2}^{15}}{J_{1}^8J_{4}^6})");
    b.equality("N12-4n2", "thm-mod2", cs(1, 2, 4, 2),
               parse_expr("2*J2^3*J4^2/J1^4"),
               R"(\sum N^{0}(1,2;4n+2)q^n=2\frac{J_{2}^3J_{4}^2}{J_{1}^4})");
    b.equality("N02-8n1", "thm-mod2", cs(0, 2, 8, 1),
               parse_expr("J2^12*J4/(J1^10*J8^2) + 8*q*J2^2*J4^3*J8^2/J1^6"),
               R"(\sum N^{0}(0,2;8n+1)q^n=\frac{J_{2}^{12}J_{4}}{J_{1}^{10}J_{8}^2}+8q\frac{J_{2}^2J_{4}^3J_{8}^2}{J_{1}^6})");
    b.equality("N02-8n3", "thm-mod2", cs(0, 2, 8, 3),
               parse_expr("q*g(-1,2,4) - J2^8*J8^2/(J1^4*J4^5) + 4*J2^6*J4^5/(J1^8*J8^2)"),
               R"(\sum N^{0}(0,2;8n+3)q^n=qg(-q^2;q^4)-\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}+4\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2})");
    b.equality("N02-8n5", "thm-mod2", cs(0, 2, 8, 5),
               parse_expr("2*(J2^14*J8^2/(J1^10*J4^5) + 2*J4^9/(J1^6*J8^2))"),
               R"(\sum N^{0}(0,2;8n+5)q^n=2\left(\frac{J_{2}^{14}J_{8}^2}{J_{1}^{10}J_{4}^5}+2\frac{J_{4}^9}{J_{1}^6J_{8}^2}\right))");
    b.equality("N02-8n7", "thm-mod2", cs(0, 2, 8, 7),
               parse_expr("-q^-1 + q^-1*g(-1,0,4) + 1/2*q^-1*J2^6*J4/(J1^4*J8^2)"
                          " + 8*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(0,2;8n+7)q^n=-q^{-1}+q^{-1}g(-1;q^4)+\frac{1}{2}q^{-1}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2}+8\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");
    b.equality("N12-8n", "thm-mod2", cs(1, 2, 8, 0),
               parse_expr("-1 + g(-1,0,1) + 1/2*J2^22/(J1^13*J4^8) + 8*q*J4^8/(J1^5*J2^2)"),
               R"(\sum N^{0}(1,2;8n)q^n=-1+g(-1;q)+\frac{1}{2}\frac{J_{2}^{22}}{J_{1}^{13}J_{4}^8}+8q\frac{J_{4}^8}{J_{1}^5J_{2}^2})");
    b.equality("N12-8n2", "thm-mod2", cs(1, 2, 8, 2),
               parse_expr("2*J2^16/(J1^11*J4^4)"),
               R"(\sum N^{0}(1,2;8n+2)q^n=2\frac{J_{2}^{16}}{J_{1}^{11}J_{4}^4})");
    b.equality("N12-8n4", "thm-mod2", cs(1, 2, 8, 4),
               parse_expr("4*J2^10/J1^9"),
               R"(\sum N^{0}(1,2;8n+4)q^n=4\frac{J_{2}^{10}}{J_{1}^9})");
    b.equality("N12-8n6", "thm-mod2", cs(1, 2, 8, 6),
               parse_expr("8*J2^4*J4^4/J1^7"),
               R"(\sum N^{0}(1,2;8n+6)q^n=8\frac{J_{2}^4J_{4}^4}{J_{1}^7})");

    // -- odd-rank classes modulo 4 --------------------------------------------
    b.equality("N04-2n1", "thm-mod4", cs(0, 4, 2, 1),
               parse_expr("q^5*g(-1,8,16) - q*J8^8*J32^2/(J4^4*J16^5)"
                          " + 1/2*(J2^8*J8^2/(J1^4*J4^5) + J4^3/J2^2)"),
               R"(\sum N^{0}(0,4;2n+1)q^n=q^5g(-q^8;q^{16})-q\frac{J_{8}^8J_{32}^2}{J_{4}^4J_{16}^5}+\frac{1}{2}\left(\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}+\frac{J_{4}^3}{J_{2}^2}\right))");
    b.equality("N04-4n1", "thm-mod4", cs(0, 4, 4, 1),
               parse_expr("J2^4*J8^5/(J1^4*J4^2*J16^2)"),
               R"(\sum N^{0}(0,4;4n+1)q^n=\frac{J_{2}^4J_{8}^5}{J_{1}^4J_{4}^2J_{16}^2})");
    b.equality("N04-4n3", "thm-mod4", cs(0, 4, 4, 3),
               parse_expr("q^2*g(-1,4,8) - J4^8*J16^2/(J2^4*J8^5) + 2*J4^6/(J1^2*J2^3)"),
               R"(\sum N^{0}(0,4;4n+3)q^n=q^2g(-q^4;q^8)-\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5}+2\frac{J_{4}^6}{J_{1}^2J_{2}^3})");
    b.equality("N04-8n1", "thm-mod4", cs(0, 4, 8, 1),
               parse_expr("J2^12*J4/(J1^10*J8^2)"),
               R"(\sum N^{0}(0,4;8n+1)q^n=\frac{J_{2}^{12}J_{4}}{J_{1}^{10}J_{8}^2})");
    b.equality("N04-8n3", "thm-mod4", cs(0, 4, 8, 3),
               parse_expr("q*g(-1,2,4) + 2*J2^6*J4^5/(J1^8*J8^2) - J2^8*J8^2/(J1^4*J4^5)"),
               R"(\sum N^{0}(0,4;8n+3)q^n=qg(-q^2;q^4)+2\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2}-\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5})");
    b.equality("N04-8n5", "thm-mod4", cs(0, 4, 8, 5),
               parse_expr("4*J4^9/(J1^6*J8^2)"),
               R"(\sum N^{0}(0,4;8n+5)q^n=4\frac{J_{4}^9}{J_{1}^6J_{8}^2})");
    b.equality("N04-8n7", "thm-mod4", cs(0, 4, 8, 7),
               parse_expr("4*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(0,4;8n+7)q^n=4\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");
    b.equality("N14-2n", "thm-mod4", cs(1, 4, 2, 0),
               parse_expr("-1/2 + 1/2*g(-1,0,4) + 1/4*J2^6*J4/(J1^4*J8^2)"),
               R"(\sum N^{0}(1,4;2n)q^n=-\frac{1}{2}+\frac{1}{2}g(-1;q^4)+\frac{1}{4}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2})");
    b.equality("N14-4n", "thm-mod4", cs(1, 4, 4, 0),
               parse_expr("-1/2 + 1/2*g(-1,0,2) + 1/4*J2^15/(J1^8*J4^6)"),
               R"(\sum N^{0}(1,4;4n)q^n=-\frac{1}{2}+\frac{1}{2}g(-1;q^2)+\frac{1}{4}\frac{J_{2}^{15}}{J_{1}^8J_{4}^6})");
    b.equality("N14-4n2", "thm-mod4", cs(1, 4, 4, 2),
               parse_expr("J2^3*J4^2/J1^4"),
               R"(\sum N^{0}(1,4;4n+2)q^n=\frac{J_{2}^3J_{4}^2}{J_{1}^4})");
    b.equality("N14-8n", "thm-mod4", cs(1, 4, 8, 0),
               parse_expr("-1/2 + 1/2*g(-1,0,1) + 1/4*J2^22/(J1^13*J4^8) + 4*q*J4^8/(J1^5*J2^2)"),
               R"(\sum N^{0}(1,4;8n)q^n=-\frac{1}{2}+\frac{1}{2}g(-1;q)+\frac{1}{4}\frac{J_{2}^{22}}{J_{1}^{13}J_{4}^8}+4q\frac{J_{4}^8}{J_{1}^5J_{2}^2})");
    b.equality("N14-8n2", "thm-mod4", cs(1, 4, 8, 2),
               parse_expr("J2^16/(J1^11*J4^4)"),
               R"(\sum N^{0}(1,4;8n+2)q^n=\frac{J_{2}^{16}}{J_{1}^{11}J_{4}^4})");
    b.equality("N14-8n4", "thm-mod4", cs(1, 4, 8, 4),
               parse_expr("2*J2^10/J1^9"),
               R"(\sum N^{0}(1,4;8n+4)q^n=2\frac{J_{2}^{10}}{J_{1}^9})");
    b.equality("N14-8n6", "thm-mod4", cs(1, 4, 8, 6),
               parse_expr("4*J2^4*J4^4/J1^7"),
               R"(\sum N^{0}(1,4;8n+6)q^n=4\frac{J_{2}^4J_{4}^4}{J_{1}^7})");
    b.equality("N24-2n1", "thm-mod4", cs(2, 4, 2, 1),
               parse_expr("-q^-1 + q^-1*g(-1,0,16) + 1/2*q^-1*J8^6*J16/(J4^4*J32^2)"
                          " - 1/2*J4^3/J2^2 + 1/2*J2^8*J8^2/(J1^4*J4^5)"),
               R"(\sum N^{0}(2,4;2n+1)q^n=-q^{-1}+q^{-1}g(-1;q^{16})+\frac{1}{2}q^{-1}\frac{J_{8}^6J_{16}}{J_{4}^4J_{32}^2}-\frac{1}{2}\frac{J_{4}^3}{J_{2}^2}+\frac{1}{2}\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5})");
    b.equality("N24-4n1", "thm-mod4", cs(2, 4, 4, 1),
               parse_expr("2*q*J2^4*J16^2/(J1^4*J8)"),
               R"(\sum N^{0}(2,4;4n+1)q^n=2q\frac{J_{2}^4J_{16}^2}{J_{1}^4J_{8}})");
    b.equality("N24-4n3", "thm-mod4", cs(2, 4, 4, 3),
               parse_expr("-q^-1 + q^-1*g(-1,0,8) + 1/2*q^-1*J4^6*J8/(J2^4*J16^2)"
                          " + 2*J4^6/(J1^2*J2^3)"),
               R"(\sum N^{0}(2,4;4n+3)q^n=-q^{-1}+q^{-1}g(-1;q^8)+\frac{1}{2}q^{-1}\frac{J_{4}^6J_{8}}{J_{2}^4J_{16}^2}+2\frac{J_{4}^6}{J_{1}^2J_{2}^3})");
    b.equality("N24-8n1", "thm-mod4", cs(2, 4, 8, 1),
               parse_expr("8*q*J2^2*J4^3*J8^2/J1^6"),
               R"(\sum N^{0}(2,4;8n+1)q^n=8q\frac{J_{2}^2J_{4}^3J_{8}^2}{J_{1}^6})");
    b.equality("N24-8n3", "thm-mod4", cs(2, 4, 8, 3),
               parse_expr("2*J2^6*J4^5/(J1^8*J8^2)"),
               R"(\sum N^{0}(2,4;8n+3)q^n=2\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2})");
    b.equality("N24-8n5", "thm-mod4", cs(2, 4, 8, 5),
               parse_expr("2*J2^14*J8^2/(J1^10*J4^5)"),
               R"(\sum N^{0}(2,4;8n+5)q^n=2\frac{J_{2}^{14}J_{8}^2}{J_{1}^{10}J_{4}^5})");
    b.equality("N24-8n7", "thm-mod4", cs(2, 4, 8, 7),
               parse_expr("-q^-1 + q^-1*g(-1,0,4) + 1/2*q^-1*J2^6*J4/(J1^4*J8^2)"
                          " + 4*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(2,4;8n+7)q^n=-q^{-1}+q^{-1}g(-1;q^4)+\frac{1}{2}q^{-1}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2}+4\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");

    // -- odd-rank classes modulo 8 --------------------------------------------
    b.equality("N08-2n1", "thm-mod8", cs(0, 8, 2, 1),
               parse_expr("-q^21*g(-1,32,64) + q^5*J32^8*J128^2/(J16^4*J64^5)"
                          " + 1/4*J2^8*J8^2/(J1^4*J4^5) + 1/4*J4^3/J2^2"
                          " + 1/2*J2^5*J16/(J1^2*J4^2*J8)"
                          " - 1/2*q*J8^8*J32^2/(J4^4*J16^5) - 1/2*q*J16^3/J8^2"),
               R"(\sum N^{0}(0,8;2n+1)q^n=-q^{21}g(-q^{32};q^{64})+q^5\frac{J_{32}^8J_{128}^2}{J_{16}^4J_{64}^5}+\frac{1}{4}\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}+\frac{1}{4}\frac{J_{4}^3}{J_{2}^2}+\frac{1}{2}\frac{J_{2}^5J_{16}}{J_{1}^2J_{4}^2J_{8}}-\frac{1}{2}q\frac{J_{8}^8J_{32}^2}{J_{4}^4J_{16}^5}-\frac{1}{2}q\frac{J_{16}^3}{J_{8}^2})",
               512, 256);
    b.equality("N08-4n1", "thm-mod8", cs(0, 8, 4, 1),
               parse_expr("1/4*(J2^9/(J1^6*J4^2) + J2^3/J1^2 + 2*J4^4/(J8*J2^2))"),
               R"(\sum N^{0}(0,8;4n+1)q^n=\frac{1}{4}\left(\frac{J_{2}^9}{J_{1}^6J_{4}^2}+\frac{J_{2}^3}{J_{1}^2}+2\frac{J_{4}^4}{J_{8}J_{2}^2}\right))");
    b.equality("N08-4n3", "thm-mod8", cs(0, 8, 4, 3),
               parse_expr("-q^10*g(-1,16,32) + q^2*J16^8*J64^2/(J8^4*J32^5)"
                          " + 1/2*J8^3/J4^2 + J4^6/(J1^2*J2^3) - 1/2*J4^8*J16^2/(J2^4*J8^5)"),
               R"(\sum N^{0}(0,8;4n+3)q^n=-q^{10}g(-q^{16};q^{32})+q^2\frac{J_{16}^8J_{64}^2}{J_{8}^4J_{32}^5}+\frac{1}{2}\frac{J_{8}^3}{J_{4}^2}+\frac{J_{4}^6}{J_{1}^2J_{2}^3}-\frac{1}{2}\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5})",
               512, 256);
    b.equality("N08-8n1", "thm-mod8", cs(0, 8, 8, 1),
               parse_expr("1/2*J2^4/(J1^2*J4) + 1/4*J4^5/(J1^2*J8^2)"
                          " + 1/4*J2^12*J4/(J1^10*J8^2) + 2*q*J2^2*J4^3*J8^2/J1^6"),
               R"(\sum N^{0}(0,8;8n+1)q^n=\frac{1}{2}\frac{J_{2}^4}{J_{1}^2J_{4}}+\frac{1}{4}\frac{J_{4}^5}{J_{1}^2J_{8}^2}+\frac{1}{4}\frac{J_{2}^{12}J_{4}}{J_{1}^{10}J_{8}^2}+2q\frac{J_{2}^2J_{4}^3J_{8}^2}{J_{1}^6})");
    b.equality("N08-8n3", "thm-mod8", cs(0, 8, 8, 3),
               parse_expr("-q^5*g(-1,8,16) + q*J8^8*J32^2/(J4^4*J16^5) + 1/2*J4^3/J2^2"
                          " - 1/2*J2^8*J8^2/(J1^4*J4^5) + J2^6*J4^5/(J1^8*J8^2)"),
               R"(\sum N^{0}(0,8;8n+3)q^n=-q^5g(-q^8;q^{16})+q\frac{J_{8}^8J_{32}^2}{J_{4}^4J_{16}^5}+\frac{1}{2}\frac{J_{4}^3}{J_{2}^2}-\frac{1}{2}\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}+\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2})");
    b.equality("N08-8n5", "thm-mod8", cs(0, 8, 8, 5),
               parse_expr("2*J4^9/(J1^6*J8^2)"),
               R"(\sum N^{0}(0,8;8n+5)q^n=2\frac{J_{4}^9}{J_{1}^6J_{8}^2})");
    b.equality("N08-8n7", "thm-mod8", cs(0, 8, 8, 7),
               parse_expr("2*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(0,8;8n+7)q^n=2\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");
    b.equality("N18-2n", "thm-mod8", cs(1, 8, 2, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,4) + 1/2*q^4*g(1,4,16) + 1/8*J2^6*J4/(J1^4*J8^2)"
                          " - 1/4*J8^7/(J4^3*J16^3) + 1/4*J2^5*J8^2/(J1^2*J4^3*J16)"),
               R"(\sum N^{0}(1,8;2n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q^4)+\frac{1}{2}q^4g(q^4;q^{16})+\frac{1}{8}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2}-\frac{1}{4}\frac{J_{8}^7}{J_{4}^3J_{16}^3}+\frac{1}{4}\frac{J_{2}^5J_{8}^2}{J_{1}^2J_{4}^3J_{16}})");
    b.equality("N18-4n", "thm-mod8", cs(1, 8, 4, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,2) + 1/2*q^2*g(1,2,8) + 1/8*J2^15/(J1^8*J4^6)"),
               R"(\sum N^{0}(1,8;4n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q^2)+\frac{1}{2}q^2g(q^2;q^8)+\frac{1}{8}\frac{J_{2}^{15}}{J_{1}^8J_{4}^6})");
    b.equality("N18-4n2", "thm-mod8", cs(1, 8, 4, 2),
               parse_expr("1/2*(J2^3*J4^2/J1^4 + J4*J8/J2)"),
               R"(\sum N^{0}(1,8;4n+2)q^n=\frac{1}{2}\left(\frac{J_{2}^3J_{4}^2}{J_{1}^4}+\frac{J_{4}J_{8}}{J_{2}}\right))");
    b.equality("N18-8n", "thm-mod8", cs(1, 8, 8, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,1) + 1/2*q*g(1,1,4) + 1/8*J2^22/(J1^13*J4^8)"
                          " + 2*q*J4^8/(J1^5*J2^2)"),
               R"(\sum N^{0}(1,8;8n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q)+\frac{1}{2}qg(q;q^4)+\frac{1}{8}\frac{J_{2}^{22}}{J_{1}^{13}J_{4}^8}+2q\frac{J_{4}^8}{J_{1}^5J_{2}^2})");
    b.equality("N18-8n2", "thm-mod8", cs(1, 8, 8, 2),
               parse_expr("1/2*(J2^16/(J1^11*J4^4) + J2*J4/J1)"),
               R"(\sum N^{0}(1,8;8n+2)q^n=\frac{1}{2}\left(\frac{J_{2}^{16}}{J_{1}^{11}J_{4}^4}+\frac{J_{2}J_{4}}{J_{1}}\right))");
    b.equality("N18-8n4", "thm-mod8", cs(1, 8, 8, 4),
               parse_expr("J2^10/J1^9"),
               R"(\sum N^{0}(1,8;8n+4)q^n=\frac{J_{2}^{10}}{J_{1}^9})");
    b.equality("N18-8n6", "thm-mod8", cs(1, 8, 8, 6),
               parse_expr("2*J2^4*J4^4/J1^7"),
               R"(\sum N^{0}(1,8;8n+6)q^n=2\frac{J_{2}^4J_{4}^4}{J_{1}^7})");
    b.equality("N28-2n1", "thm-mod8", cs(2, 8, 2, 1),
               parse_expr("-1/2*q^-1 + 1/2*q^-1*g(-1,0,16) + 1/4*q^-1*J8^6*J16/(J4^4*J32^2)"
                          " + 1/4*J2^8*J8^2/(J4^5*J1^4) - 1/4*J4^3/J2^2"),
               R"(\sum N^{0}(2,8;2n+1)q^n=-\frac{1}{2}q^{-1}+\frac{1}{2}q^{-1}g(-1;q^{16})+\frac{1}{4}q^{-1}\frac{J_{8}^6J_{16}}{J_{4}^4J_{32}^2}+\frac{1}{4}\frac{J_{2}^8J_{8}^2}{J_{4}^5J_{1}^4}-\frac{1}{4}\frac{J_{4}^3}{J_{2}^2})");
    b.equality("N28-4n1", "thm-mod8", cs(2, 8, 4, 1),
               parse_expr("q*J2^4*J16^2/(J1^4*J8)"),
               R"(\sum N^{0}(2,8;4n+1)q^n=q\frac{J_{2}^4J_{16}^2}{J_{1}^4J_{8}})");
    b.equality("N28-4n3", "thm-mod8", cs(2, 8, 4, 3),
               parse_expr("-1/2*q^-1 + 1/2*q^-1*g(-1,0,8) + 1/4*q^-1*J4^6*J8/(J2^4*J16^2)"
                          " + J4^6/(J1^2*J2^3)"),
               R"(\sum N^{0}(2,8;4n+3)q^n=-\frac{1}{2}q^{-1}+\frac{1}{2}q^{-1}g(-1;q^8)+\frac{1}{4}q^{-1}\frac{J_{4}^6J_{8}}{J_{2}^4J_{16}^2}+\frac{J_{4}^6}{J_{1}^2J_{2}^3})");
    b.equality("N28-8n1", "thm-mod8", cs(2, 8, 8, 1),
               parse_expr("4*q*J2^2*J4^3*J8^2/J1^6"),
               R"(\sum N^{0}(2,8;8n+1)q^n=4q\frac{J_{2}^2J_{4}^3J_{8}^2}{J_{1}^6})");
    b.equality("N28-8n3", "thm-mod8", cs(2, 8, 8, 3),
               parse_expr("J2^6*J4^5/(J1^8*J8^2)"),
               R"(\sum N^{0}(2,8;8n+3)q^n=\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2})");
    b.equality("N28-8n5", "thm-mod8", cs(2, 8, 8, 5),
               parse_expr("J2^14*J8^2/(J1^10*J4^5)"),
               R"(\sum N^{0}(2,8;8n+5)q^n=\frac{J_{2}^{14}J_{8}^2}{J_{1}^{10}J_{4}^5})");
    b.equality("N28-8n7", "thm-mod8", cs(2, 8, 8, 7),
               parse_expr("-1/2*q^-1 + 1/2*q^-1*g(-1,0,4) + 1/4*q^-1*J2^6*J4/(J1^4*J8^2)"
                          " + 2*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(2,8;8n+7)q^n=-\frac{1}{2}q^{-1}+\frac{1}{2}q^{-1}g(-1;q^4)+\frac{1}{4}q^{-1}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2}+2\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");
    b.equality("N38-2n", "thm-mod8", cs(3, 8, 2, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,4) - 1/2*q^4*g(1,4,16) + 1/4*J8^7/(J4^3*J16^3)"
                          " - 1/4*J2^5*J8^2/(J1^2*J4^3*J16) + 1/8*J2^6*J4/(J1^4*J8^2)"),
               R"(\sum N^{0}(3,8;2n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q^4)-\frac{1}{2}q^4g(q^4;q^{16})+\frac{1}{4}\frac{J_{8}^7}{J_{4}^3J_{16}^3}-\frac{1}{4}\frac{J_{2}^5J_{8}^2}{J_{1}^2J_{4}^3J_{16}}+\frac{1}{8}\frac{J_{2}^6J_{4}}{J_{1}^4J_{8}^2})");
    b.equality("N38-4n", "thm-mod8", cs(3, 8, 4, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,2) - 1/2*q^2*g(1,2,8) + 1/4*J4^7/(J2^3*J8^3)"
                          " - 1/4*J4^7/(J2^3*J8^3) + 1/8*J2^15/(J4^6*J1^8)"),
               R"(\sum N^{0}(3,8;4n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q^2)-\frac{1}{2}q^2g(q^2;q^8)+\frac{1}{4}\frac{J_{4}^7}{J_{2}^3J_{8}^3}-\frac{1}{4}\frac{J_{4}^7}{J_{2}^3J_{8}^3}+\frac{1}{8}\frac{J_{2}^{15}}{J_{4}^6J_{1}^8})");
    b.equality("N38-4n-cancelled", "thm-mod8", cs(3, 8, 4, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,2) - 1/2*q^2*g(1,2,8) + 1/8*J2^15/(J4^6*J1^8)"),
               R"(\sum N^{0}(3,8;4n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q^2)-\frac{1}{2}q^2g(q^2;q^8)+\frac{1}{8}\frac{J_{2}^{15}}{J_{4}^6J_{1}^8})");
    b.equality("N38-4n2", "thm-mod8", cs(3, 8, 4, 2),
               parse_expr("1/2*(J2^3*J4^2/J1^4 - J4*J8/J2)"),
               R"(\sum N^{0}(3,8;4n+2)q^n=\frac{1}{2}\left(\frac{J_{2}^3J_{4}^2}{J_{1}^4}-\frac{J_{4}J_{8}}{J_{2}}\right))");
    b.equality("N38-8n", "thm-mod8", cs(3, 8, 8, 0),
               parse_expr("-1/4 + 1/4*g(-1,0,1) - 1/2*q*g(1,1,4) + 1/8*J2^22/(J1^13*J4^8)"
                          " + 2*q*J4^8/(J1^5*J2^2)"),
               R"(\sum N^{0}(3,8;8n)q^n=-\frac{1}{4}+\frac{1}{4}g(-1;q)-\frac{1}{2}qg(q;q^4)+\frac{1}{8}\frac{J_{2}^{22}}{J_{1}^{13}J_{4}^8}+2q\frac{J_{4}^8}{J_{1}^5J_{2}^2})");
    b.equality("N38-8n2", "thm-mod8", cs(3, 8, 8, 2),
               parse_expr("1/2*(J2^16/(J1^11*J4^4) - J2*J4/J1)"),
               R"(\sum N^{0}(3,8;8n+2)q^n=\frac{1}{2}\left(\frac{J_{2}^{16}}{J_{1}^{11}J_{4}^4}-\frac{J_{2}J_{4}}{J_{1}}\right))");
    b.equality("N38-8n4", "thm-mod8", cs(3, 8, 8, 4),
               parse_expr("J2^10/J1^9"),
               R"(\sum N^{0}(3,8;8n+4)q^n=\frac{J_{2}^{10}}{J_{1}^9})");
    b.equality("N38-8n6", "thm-mod8", cs(3, 8, 8, 6),
               parse_expr("2*J2^4*J4^4/J1^7"),
               R"(\sum N^{0}(3,8;8n+6)q^n=2\frac{J_{2}^4J_{4}^4}{J_{1}^7})");
    b.equality("N48-2n1", "thm-mod8", cs(4, 8, 2, 1),
               parse_expr("q^-3 - q^-3*g(-1,0,64) - 1/2*q^-3*J32^6*J64/(J16^4*J128^2)"
                          " + 1/4*(J2^8*J8^2/(J1^4*J4^5) - 2*J2^5*J16/(J1^2*J4^2*J8) + J4^3/J2^2)"
                          " + 1/2*q*(J16^3/J8^2 - J8^8*J32^2/(J4^4*J16^5))"),
               R"(\sum N^{0}(4,8;2n+1)q^n=q^{-3}-q^{-3}g(-1;q^{64})-\frac{1}{2}q^{-3}\frac{J_{32}^6J_{64}}{J_{16}^4J_{128}^2}+\frac{1}{4}\left(\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}-2\frac{J_{2}^5J_{16}}{J_{1}^2J_{4}^2J_{8}}+\frac{J_{4}^3}{J_{2}^2}\right)+\frac{1}{2}q\left(\frac{J_{16}^3}{J_{8}^2}-\frac{J_{8}^8J_{32}^2}{J_{4}^4J_{16}^5}\right))",
               512, 256);
    b.equality("N48-4n1", "thm-mod8", cs(4, 8, 4, 1),
               parse_expr("1/4*(J2^9/(J1^6*J4^2) - 2*J4^4/(J2^2*J8) + J2^3/J1^2)"),
               R"(\sum N^{0}(4,8;4n+1)q^n=\frac{1}{4}\left(\frac{J_{2}^9}{J_{1}^6J_{4}^2}-2\frac{J_{4}^4}{J_{2}^2J_{8}}+\frac{J_{2}^3}{J_{1}^2}\right))");
    b.equality("N48-4n3", "thm-mod8", cs(4, 8, 4, 3),
               parse_expr("q^-2 - q^-2*g(-1,0,32) - 1/2*q^-2*J16^6*J32/(J8^4*J64^2)"
                          " - 1/2*J8^3/J4^2 - 1/2*J4^8*J16^2/(J2^4*J8^5) + J4^6/(J2^3*J1^2)"),
               R"(\sum N^{0}(4,8;4n+3)q^n=q^{-2}-q^{-2}g(-1;q^{32})-\frac{1}{2}q^{-2}\frac{J_{16}^6J_{32}}{J_{8}^4J_{64}^2}-\frac{1}{2}\frac{J_{8}^3}{J_{4}^2}-\frac{1}{2}\frac{J_{4}^8J_{16}^2}{J_{2}^4J_{8}^5}+\frac{J_{4}^6}{J_{2}^3J_{1}^2})",
               512, 256);
    b.equality("N48-8n1", "thm-mod8", cs(4, 8, 8, 1),
               parse_expr("1/4*J2^12*J4/(J1^10*J8^2) + 2*q*J2^2*J4^3*J8^2/J1^6"
                          " - 1/2*J2^4/(J1^2*J4) + 1/4*J4^5/(J1^2*J8^2)"),
               R"(\sum N^{0}(4,8;8n+1)q^n=\frac{1}{4}\frac{J_{2}^{12}J_{4}}{J_{1}^{10}J_{8}^2}+2q\frac{J_{2}^2J_{4}^3J_{8}^2}{J_{1}^6}-\frac{1}{2}\frac{J_{2}^4}{J_{1}^2J_{4}}+\frac{1}{4}\frac{J_{4}^5}{J_{1}^2J_{8}^2})");
    b.equality("N48-8n3", "thm-mod8", cs(4, 8, 8, 3),
               parse_expr("q^-1 - q^-1*g(-1,0,16) - 1/2*q^-1*J8^6*J16/(J4^4*J32^2)"
                          " - 1/2*J4^3/J2^2 - 1/2*J2^8*J8^2/(J1^4*J4^5) + J2^6*J4^5/(J1^8*J8^2)"),
               R"(\sum N^{0}(4,8;8n+3)q^n=q^{-1}-q^{-1}g(-1;q^{16})-\frac{1}{2}q^{-1}\frac{J_{8}^6J_{16}}{J_{4}^4J_{32}^2}-\frac{1}{2}\frac{J_{4}^3}{J_{2}^2}-\frac{1}{2}\frac{J_{2}^8J_{8}^2}{J_{1}^4J_{4}^5}+\frac{J_{2}^6J_{4}^5}{J_{1}^8J_{8}^2})");
    b.equality("N48-8n5", "thm-mod8", cs(4, 8, 8, 5),
               parse_expr("2*J4^9/(J1^6*J8^2)"),
               R"(\sum N^{0}(4,8;8n+5)q^n=2\frac{J_{4}^9}{J_{1}^6J_{8}^2})");
    b.equality("N48-8n7", "thm-mod8", cs(4, 8, 8, 7),
               parse_expr("2*J2^8*J8^2/(J1^8*J4)"),
               R"(\sum N^{0}(4,8;8n+7)q^n=2\frac{J_{2}^8J_{8}^2}{J_{1}^8J_{4}})");

    // -- 16-dissected classes --------------------------------------------------
    b.equality("N08-16n13", "cor-mod16", cs(0, 8, 16, 13),
               parse_expr("4*(J2^25*J8^2/(J1^19*J4^7) + 2*J2^11*J4^7/(J1^15*J8^2))"),
               R"(\sum N^{0}(0,8;16n+13)q^n=4\left(\frac{J_{2}^{25}J_{8}^2}{J_{1}^{19}J_{4}^7}+2\frac{J_{2}^{11}J_{4}^7}{J_{1}^{15}J_{8}^2}\right))");
    b.equality("N08-16n15", "cor-mod16", cs(0, 8, 16, 15),
               parse_expr("16*J2^15*J4^2/J1^16"),
               R"(\sum N^{0}(0,8;16n+15)q^n=16\frac{J_{2}^{15}J_{4}^2}{J_{1}^{16}})");

    // -- class-to-class equalities ----------------------------------------------
    b.equality("N08-48-8n5", "thm-relation", cs(0, 8, 8, 5), cs(4, 8, 8, 5),
               R"(N^{0}(0,8;8n+5)=N^{0}(4,8;8n+5))");
    b.equality("N08-48-8n7", "thm-relation", cs(0, 8, 8, 7), cs(4, 8, 8, 7),
               R"(N^{0}(0,8;8n+7)=N^{0}(4,8;8n+7))");
    b.equality("N18-38-8n4", "thm-relation", cs(1, 8, 8, 4), cs(3, 8, 8, 4),
               R"(N^{0}(1,8;8n+4)=N^{0}(3,8;8n+4))");
    b.equality("N18-38-8n6", "thm-relation", cs(1, 8, 8, 6), cs(3, 8, 8, 6),
               R"(N^{0}(1,8;8n+6)=N^{0}(3,8;8n+6))");

    b.equality("N04-08-8n5", "cor-relation", cs(0, 4, 8, 5), scale(cs(0, 8, 8, 5), CycRat(2)),
               R"(N^{0}(0,4;8n+5)=2N^{0}(0,8;8n+5))");
    b.equality("N04-08-8n7", "cor-relation", cs(0, 4, 8, 7), scale(cs(0, 8, 8, 7), CycRat(2)),
               R"(N^{0}(0,4;8n+7)=2N^{0}(0,8;8n+7))");
    b.equality("N14-18-8n4", "cor-relation", cs(1, 4, 8, 4), scale(cs(1, 8, 8, 4), CycRat(2)),
               R"(N^{0}(1,4;8n+4)=2N^{0}(1,8;8n+4))");
    b.equality("N14-18-8n6", "cor-relation", cs(1, 4, 8, 6), scale(cs(1, 8, 8, 6), CycRat(2)),
               R"(N^{0}(1,4;8n+6)=2N^{0}(1,8;8n+6))");

    // -- class differences with closed forms --------------------------------------
    b.equality("N08-48-8n1-diff", "thm-diff", sub(cs(0, 8, 8, 1), cs(4, 8, 8, 1)),
               parse_expr("J2^4/(J1^2*J4)"),
               R"(\sum(N^{0}(0,8;8n+1)-N^{0}(4,8;8n+1))q^n=\frac{J_{2}^4}{J_{1}^2J_{4}})");
    b.equality("N08-48-8n3-diff", "thm-diff", sub(cs(0, 8, 8, 3), cs(4, 8, 8, 3)),
               parse_expr("J4^3/J2^2 + q*g(1,2,4)"),
               R"(\sum(N^{0}(0,8;8n+3)-N^{0}(4,8;8n+3))q^n=\frac{J_{4}^3}{J_{2}^2}+qg(q^2;q^4))");
    b.equality("N18-38-8n-diff", "thm-diff", sub(cs(1, 8, 8, 0), cs(3, 8, 8, 0)),
               parse_expr("q*g(1,1,4)"),
               R"(\sum(N^{0}(1,8;8n)-N^{0}(3,8;8n))q^n=qg(q;q^4))");
    b.equality("N18-38-8n2-diff", "thm-diff", sub(cs(1, 8, 8, 2), cs(3, 8, 8, 2)),
               parse_expr("J2*J4/J1"),
               R"(\sum(N^{0}(1,8;8n+2)-N^{0}(3,8;8n+2))q^n=\frac{J_{2}J_{4}}{J_{1}})");
    b.equality("N08-48-16n15-diff", "thm-diff", sub(cs(0, 8, 16, 11), cs(4, 8, 16, 11)),
               parse_expr("g(1,1,2)"),
               R"(\sum(N^{0}(0,8;16n+11)-N^{0}(4,8;16n+11))q^n=g(q;q^2))");

    // -- the third-order coefficient link ------------------------------------------
    b.equality("N-pomega-16n5", "cor-pomega", sub(cs(0, 8, 16, 11), cs(4, 8, 16, 11)),
               parse_expr("shift(pw,-1)"),
               R"(N^{0}(0,8;16n-5)-N^{0}(4,8;16n-5)=p_{\omega}(n))");
    b.congruence("p-omega-mod5", "cor-pomega", parse_expr("pw"), 5, {{40, 28}, {40, 36}},
                 R"(p_{\omega}(40n+28)\equiv p_{\omega}(40n+36)\equiv 0\pmod{5})");
    b.congruence("p-omega-1", "cor-pomega", parse_expr("pw"), 4, {{8, 4}},
                 R"(p_{\omega}(8n+4)\equiv 0\pmod{4})");
    b.congruence("p-omega-2", "cor-pomega", parse_expr("pw"), 8, {{8, 6}},
                 R"(p_{\omega}(8n+6)\equiv 0\pmod{8})");
    b.congruence("p-omega-3", "cor-pomega", parse_expr("pw"), 4, {{16, 13}},
                 R"(p_{\omega}(16n+13)\equiv 0\pmod{4})");

    // -- strict class inequalities ----------------------------------------------
    b.inequality("N08-48-8n1-ineq", "thm-ineq", cs(0, 8, 8, 1), cs(4, 8, 8, 1), {8, 1}, 0,
                 R"(N^{0}(0,8;8n+1)>N^{0}(4,8;8n+1))");
    b.inequality("N08-48-8n3-ineq", "thm-ineq", cs(0, 8, 8, 3), cs(4, 8, 8, 3), {8, 3}, 0,
                 R"(N^{0}(0,8;8n+3)>N^{0}(4,8;8n+3))");
    b.inequality("N18-38-8n-ineq", "thm-ineq", cs(1, 8, 8, 0), cs(3, 8, 8, 0), {8, 0}, 1,
                 R"(N^{0}(1,8;8n)>N^{0}(3,8;8n),\ n\geq 1)");
    b.inequality("N18-38-8n2-ineq", "thm-ineq", cs(1, 8, 8, 2), cs(3, 8, 8, 2), {8, 2}, 0,
                 R"(N^{0}(1,8;8n+2)>N^{0}(3,8;8n+2))");

    // -- congruence families --------------------------------------------------
    {
        // Families N^{0}(k,2k;n) \equiv 0 (mod 2) for k = 1..8, packed into a
        // single series: coefficient of q^{8t+(k-1)} is N^{0}(k,2k;t).
        ExprPtr packed;
        for (long k = 1; k <= 8; ++k) {
            ExprPtr part = substitute_power(cs(k, 2 * k, 1, 0), 8);
            if (k > 1) {
                part = shift(part, k - 1);
            }
            packed = packed ? add(packed, part) : part;
        }
        std::vector<Progression> progs;
        for (long k = 0; k < 8; ++k) {
            progs.push_back({8, k});
        }
        b.congruence("Nk-2k-cong", "thm-cong", packed, 2, progs,
                     R"(N^{0}(k,2k;n)\equiv 0\pmod{2})", 8, 7);
    }
    b.congruence("N04-8n57-cong", "thm-cong", cs(0, 4, 1, 0), 4, {{8, 5}, {8, 7}},
                 R"(N^{0}(0,4;8n+5)\equiv N^{0}(0,4;8n+7)\equiv 0\pmod{4})");
    b.congruence("N04-16n13-cong", "thm-cong", cs(0, 4, 1, 0), 8, {{16, 13}},
                 R"(N^{0}(0,4;16n+13)\equiv 0\pmod{8})");
    b.congruence("N14-8n4-cong", "thm-cong", cs(1, 4, 1, 0), 2, {{8, 4}},
                 R"(N^{0}(1,4;8n+4)\equiv 0\pmod{2})");
    b.congruence("N14-8n6-cong", "thm-cong", cs(1, 4, 1, 0), 4, {{8, 6}},
                 R"(N^{0}(1,4;8n+6)\equiv 0\pmod{4})");
    b.congruence("N14-mod5-cong", "thm-cong", cs(1, 4, 1, 0), 5, {{40, 28}, {40, 36}},
                 R"(N^{0}(1,4;40n+28)\equiv N^{0}(1,4;40n+36)\equiv 0\pmod{5})");
    b.congruence("N24-16n13-cong", "thm-cong", cs(2, 4, 1, 0), 4, {{16, 13}},
                 R"(N^{0}(2,4;16n+13)\equiv 0\pmod{4})");
    b.congruence("N08-8n57-cong", "thm-cong", cs(0, 8, 1, 0), 2, {{8, 5}, {8, 7}},
                 R"(N^{0}(0,8;8n+5)\equiv N^{0}(0,8;8n+7)\equiv 0\pmod{2})");
    b.congruence("N08-16n-13-cong", "thm-cong", cs(0, 8, 1, 0), 4, {{16, 13}},
                 R"(N^{0}(0,8;16n+13)\equiv 0\pmod{4})");
    b.congruence("N08-16n15-cong", "thm-cong", cs(0, 8, 1, 0), 16, {{16, 15}},
                 R"(N^{0}(0,8;16n+15)\equiv 0\pmod{16})");
    b.congruence("N28-8n1-mod4", "thm-cong", cs(2, 8, 1, 0), 4, {{8, 1}},
                 R"(N^{0}(2,8;8n+1)\equiv 0\pmod{4})");
    b.congruence("N28-16n11-cong", "thm-cong", cs(2, 8, 1, 0), 8, {{16, 11}},
                 R"(N^{0}(2,8;16n+11)\equiv 0\pmod{8})");
    b.congruence("N28-16n13-cong", "thm-cong", cs(2, 8, 1, 0), 2, {{16, 13}},
                 R"(N^{0}(2,8;16n+13)\equiv 0\pmod{2})");

    // -- rank-moment congruences ------------------------------------------------
    b.congruence("eta-conj-mod5", "thm-moments", Expr::eta_moment_series(4), 5, {{25, 24}},
                 R"(\eta_{4}(25n+24)\equiv 0\pmod{5})");
    b.congruence("eta-conj-mod7", "thm-moments", Expr::eta_moment_series(6), 7, {{49, 47}},
                 R"(\eta_{6}(49n+47)\equiv 0\pmod{7})");

    // -- parity of k-marked symbol counts ----------------------------------------
    b.congruence("conj-1", "conj-andrews", Expr::eta0_moment_series_atom(2), 2,
                 {{8, 4}, {8, 6}},
                 R"(\mathcal{D}_{2}^{0}(n)=\eta_{2}^{0}(n)\equiv 0\pmod{2},\ n\equiv 4,6\pmod{8})");
    b.congruence("conj-2", "conj-andrews", Expr::eta0_moment_series_atom(4), 2,
                 {{16, 1}, {16, 9}, {16, 11}, {16, 13}},
                 R"(\mathcal{D}_{3}^{0}(n)=\eta_{4}^{0}(n)\equiv 0\pmod{2},\ n\equiv 1,9,11,13\pmod{16})");

    // -- ordinary-rank dissection identities ---------------------------------------
    b.equality("Chan-1", "chan",
               sub(csr(0, 4, 2, 0), csr(2, 4, 2, 0)),
               negate_odd(sub(csr(0, 8, 2, 0), csr(4, 8, 2, 0))),
               R"(N(0,4;2n)-N(2,4;2n)=(-1)^n(N(0,8;2n)-N(4,8;2n)))",
               75);
    b.equality("Chan-2", "chan",
               sub(csr(0, 4, 2, 1), csr(2, 4, 2, 1)),
               negate_odd(add(sub(csr(0, 8, 2, 1), csr(4, 8, 2, 1)),
                              scale(sub(csr(1, 8, 2, 1), csr(3, 8, 2, 1)), CycRat(2)))),
               R"(N(0,4;2n+1)-N(2,4;2n+1)=(-1)^n(N(0,8;2n+1)+N(1,8;2n+1)-N(3,8;2n+1)-N(4,8;2n+1)))",
               75);

    // -- partition-function congruences as scan sanity ------------------------------
    b.congruence("pn-mod5", "pn-sanity", Expr::pn(), 5, {{5, 4}},
                 R"(p(5n+4)\equiv 0\pmod{5})");
    b.congruence("pn-mod7", "pn-sanity", Expr::pn(), 7, {{7, 5}},
                 R"(p(7n+5)\equiv 0\pmod{7})");
    b.congruence("pn-mod11", "pn-sanity", Expr::pn(), 11, {{11, 6}},
                 R"(p(11n+6)\equiv 0\pmod{11})");

    // -- open questions scanned and reported, never gating ---------------------------
    b.scan_report("conj-sec5-mod25", "conj-sec5", Expr::eta_moment_series(4), 25, {{125, 99}},
                  R"(\eta_{4}(125n+99)\equiv 0\pmod{25})");
    b.scan_report("conj-sec5-mod125", "conj-sec5", Expr::eta_moment_series(4), 125, {{625, 224}},
                  R"(\eta_{4}(625n+224)\equiv 0\pmod{125})");

    return std::move(b.entries);
}

// Shared immutable catalog instance.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

}  // namespace rankforge
