#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "rankforge/rational.hpp"

namespace rankforge {

/// Two-rowed array of odd parts, all at most 2D+1, of total weight
/// sum(top) + sum(bottom) + 2D^2 + 2D + 1.
struct OddDurfeeSymbol {
    std::vector<long> top;     // weakly decreasing odd parts
    std::vector<long> bottom;  // weakly decreasing odd parts
    long D = 0;

    long weight() const {
        long s = 2 * D * D + 2 * D + 1;
        for (long v : top) s += v;
        for (long v : bottom) s += v;
        return s;
    }
    long odd_rank() const {
        return static_cast<long>(top.size()) - static_cast<long>(bottom.size());
    }
};

namespace detail {

/// All weakly decreasing lists of odd parts in [lo, hi] summing to w,
/// appended to out. The empty list appears exactly when w = 0.
inline void odd_partitions_range(long w, long lo, long hi, std::vector<long>& prefix,
                                 std::vector<std::vector<long>>& out) {
    if (w == 0) {
        out.push_back(prefix);
        return;
    }
    long start = std::min(w, hi);
    if (start % 2 == 0) --start;
    for (long part = start; part >= lo; part -= 2) {
        prefix.push_back(part);
        odd_partitions_range(w - part, lo, part, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<long>> odd_partitions_in(long w, long lo, long hi) {
    std::vector<std::vector<long>> out;
    if (w < 0) return out;
    std::vector<long> prefix;
    odd_partitions_range(w, std::max(lo, 1L), std::max(hi, 0L), prefix, out);
    return out;
}

inline std::vector<std::vector<long>> odd_partitions(long w, long max_part) {
    return odd_partitions_in(w, 1, max_part);
}

}  // namespace detail

/// Exhaustive list of the odd Durfee symbols of n. Symbols are emitted in
/// canonical form (rows weakly decreasing), so the list is duplicate-free by
/// construction.
inline std::vector<OddDurfeeSymbol> enumerate_odd_durfee(long n, long cap = 40) {
    if (n > cap) {
        throw CapExceeded("odd Durfee enumeration requested for n = " + std::to_string(n) +
                          " beyond cap " + std::to_string(cap));
    }
    std::vector<OddDurfeeSymbol> out;
    if (n < 1) return out;
    for (long D = 0; 2 * D * D + 2 * D + 1 <= n; ++D) {
        long budget = n - (2 * D * D + 2 * D + 1);
        for (long wt = 0; wt <= budget; ++wt) {
            auto tops = detail::odd_partitions(wt, 2 * D + 1);
            auto bottoms = detail::odd_partitions(budget - wt, 2 * D + 1);
            for (const auto& t : tops) {
                for (const auto& b : bottoms) {
                    out.push_back(OddDurfeeSymbol{t, b, D});
                }
            }
        }
    }
    return out;
}

/// How parts of consecutive levels of a k-marked symbol may interleave.
/// The defining inequalities chain each level's largest alpha part through
/// the next level's smallest beta part, which leaves the empty-beta cases
/// and the relation between alpha blocks of consecutive levels open.
///
/// LevelIntervals resolves them by making the level blocks tile the part
/// size range: every part at level i, in either row, lies in the closed
/// interval [alpha_1^{i-1}, alpha_1^i], with 2D+1 capping level k. This is
/// the reading fixed by calibration against the symmetrized moment
/// functions (the counts must reproduce eta^0_{2k}; see the calibration
/// test), and it matches the k-fold generating function, whose level
/// factors span exactly those closed intervals anchored by the mandatory
/// largest alpha parts.
///
/// ChainBound and AlphaKBound keep only the printed beta-chain
/// inequalities, substituting 2D+1 (resp. the top level's largest alpha
/// part) for a missing beta block at level k. Both overcount and are
/// rejected by the moment oracle, first at n = 9 and n = 12 respectively;
/// they are kept so the calibration test can demonstrate the rejection.
enum class MarkedConvention { LevelIntervals, ChainBound, AlphaKBound };

/// k pairs of odd-part partitions (alpha^i, beta^i) around a central D.
/// Levels are stored with index 0 = level 1 (innermost), index k-1 = level k.
struct MarkedOddDurfeeSymbol {
    std::vector<std::vector<long>> alphas;
    std::vector<std::vector<long>> betas;
    long D = 0;

    long weight() const {
        long s = 2 * D * D + 2 * D + 1;
        for (const auto& a : alphas) s = std::accumulate(a.begin(), a.end(), s);
        for (const auto& b : betas) s = std::accumulate(b.begin(), b.end(), s);
        return s;
    }
};

namespace detail {

struct MarkedEnumState {
    long k;
    long D;
    std::vector<std::vector<long>>* alphas;  // slot i-1 holds level i
    std::vector<std::vector<long>>* betas;
    std::vector<MarkedOddDurfeeSymbol>* out;
};

/// Level filler for the interval convention. `level` runs from k down to 1;
/// `lo` is the anchor of the level below (1 for level 1). The anchor of
/// `level` itself is already placed in its alpha slot by the caller.
inline void fill_interval_levels(const MarkedEnumState& st, const std::vector<long>& anchors,
                                 long level, long budget) {
    if (level == 0) {
        if (budget == 0) {
            st.out->push_back(MarkedOddDurfeeSymbol{*st.alphas, *st.betas, st.D});
        }
        return;
    }
    long lo = (level >= 2) ? anchors[static_cast<size_t>(level - 2)] : 1;
    long hi = (level < st.k) ? anchors[static_cast<size_t>(level - 1)] : 2 * st.D + 1;
    long anchor = (level < st.k) ? hi : 0;  // level k carries no mandatory part
    if (anchor > budget) return;
    auto& alpha_slot = (*st.alphas)[static_cast<size_t>(level - 1)];
    auto& beta_slot = (*st.betas)[static_cast<size_t>(level - 1)];
    for (long wa = 0; anchor + wa <= budget; ++wa) {
        for (auto& rest : odd_partitions_in(wa, lo, hi)) {
            alpha_slot.clear();
            if (anchor > 0) alpha_slot.push_back(anchor);
            alpha_slot.insert(alpha_slot.end(), rest.begin(), rest.end());
            for (long wb = 0; anchor + wa + wb <= budget; ++wb) {
                for (auto& beta : odd_partitions_in(wb, lo, hi)) {
                    beta_slot = beta;
                    fill_interval_levels(st, anchors, level - 1, budget - anchor - wa - wb);
                }
            }
        }
    }
    alpha_slot.clear();
    beta_slot.clear();
}

/// Level filler for the two rejected beta-chain conventions. `upper` is the
/// gate bounding this level's largest alpha part. The conventions differ
/// only in how the gate is seeded at level k, so no flag is needed here.
inline void fill_chain_levels(const MarkedEnumState& st, long level, long budget, long upper) {
    if (level == 0) {
        if (budget == 0) {
            st.out->push_back(MarkedOddDurfeeSymbol{*st.alphas, *st.betas, st.D});
        }
        return;
    }
    if (upper < 1) return;  // alpha of this level must be nonempty
    for (long wa = 1; wa <= budget; ++wa) {
        for (auto& alpha : odd_partitions(wa, upper)) {
            long a1 = alpha.front();
            (*st.alphas)[static_cast<size_t>(level - 1)] = alpha;
            for (long wb = 0; wb + wa <= budget; ++wb) {
                for (auto& beta : odd_partitions(wb, a1)) {
                    (*st.betas)[static_cast<size_t>(level - 1)] = beta;
                    long next_upper = beta.empty() ? a1 : beta.back();
                    fill_chain_levels(st, level - 1, budget - wa - wb, next_upper);
                }
            }
        }
    }
    (*st.alphas)[static_cast<size_t>(level - 1)].clear();
    (*st.betas)[static_cast<size_t>(level - 1)].clear();
}

inline void enumerate_marked_chain(const MarkedEnumState& st, MarkedConvention conv,
                                   long budget) {
    long B = 2 * st.D + 1;
    for (long wa = 0; wa <= budget; ++wa) {
        for (auto& alpha : odd_partitions(wa, B)) {
            (*st.alphas)[static_cast<size_t>(st.k - 1)] = alpha;
            for (long wb = 0; wa + wb <= budget; ++wb) {
                for (auto& beta : odd_partitions(wb, B)) {
                    (*st.betas)[static_cast<size_t>(st.k - 1)] = beta;
                    long upper;
                    if (!beta.empty()) {
                        upper = beta.back();
                    } else if (conv == MarkedConvention::AlphaKBound && !alpha.empty()) {
                        upper = alpha.front();
                    } else {
                        upper = B;
                    }
                    fill_chain_levels(st, st.k - 1, budget - wa - wb, upper);
                }
            }
        }
    }
    (*st.alphas)[static_cast<size_t>(st.k - 1)].clear();
    (*st.betas)[static_cast<size_t>(st.k - 1)].clear();
}

inline void enumerate_marked_intervals(const MarkedEnumState& st, long budget) {
    std::vector<long> anchors(static_cast<size_t>(st.k - 1));
    std::function<void(long, long, long)> pick = [&](long idx, long lo, long spent) {
        if (idx == st.k - 1) {
            fill_interval_levels(st, anchors, st.k, budget);
            return;
        }
        for (long a = lo; a <= 2 * st.D + 1; a += 2) {
            // Every later anchor is at least a, so prune on that lower bound.
            if (spent + a * (st.k - 1 - idx) > budget) break;
            anchors[static_cast<size_t>(idx)] = a;
            pick(idx + 1, a, spent + a);
        }
    };
    pick(0, 1, 0);
}

}  // namespace detail

/// Exhaustive list of the k-marked odd Durfee symbols of n under the given
/// level-interleaving convention.
inline std::vector<MarkedOddDurfeeSymbol> enumerate_k_marked(
    long k, long n, MarkedConvention conv = MarkedConvention::LevelIntervals, long cap = 25) {
    if (k < 1) throw Error("k-marked enumeration: k must be at least 1");
    if (n > cap) {
        throw CapExceeded("k-marked enumeration requested for n = " + std::to_string(n) +
                          " beyond cap " + std::to_string(cap));
    }
    std::vector<MarkedOddDurfeeSymbol> out;
    if (n < 1) return out;
    std::vector<std::vector<long>> alphas(static_cast<size_t>(k));
    std::vector<std::vector<long>> betas(static_cast<size_t>(k));
    detail::MarkedEnumState st{k, 0, &alphas, &betas, &out};
    for (long D = 0; 2 * D * D + 2 * D + 1 <= n; ++D) {
        st.D = D;
        long budget = n - (2 * D * D + 2 * D + 1);
        if (k == 1) {
            // Single level: only the 2D+1 bound applies, both rows free.
            long B = 2 * D + 1;
            for (long wa = 0; wa <= budget; ++wa) {
                for (auto& alpha : detail::odd_partitions(wa, B)) {
                    alphas[0] = alpha;
                    for (auto& beta : detail::odd_partitions(budget - wa, B)) {
                        betas[0] = beta;
                        out.push_back(MarkedOddDurfeeSymbol{alphas, betas, D});
                    }
                }
            }
            alphas[0].clear();
            betas[0].clear();
            continue;
        }
        if (conv == MarkedConvention::LevelIntervals) {
            detail::enumerate_marked_intervals(st, budget);
        } else {
            detail::enumerate_marked_chain(st, conv, budget);
        }
    }
    return out;
}

/// D_k^0(n): the number of k-marked odd Durfee symbols of n.
inline BigInt d_k0(long k, long n, MarkedConvention conv = MarkedConvention::LevelIntervals,
                   long cap = 25) {
    return BigInt(static_cast<long>(enumerate_k_marked(k, n, conv, cap).size()));
}

}  // namespace rankforge
