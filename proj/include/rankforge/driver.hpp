#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rankforge/catalog.hpp"
#include "rankforge/durfee.hpp"

namespace rankforge {

/// Runtime knobs shared by the command-line entry points. The values are
/// echoed verbatim into every report header so a dump can be tied back to
/// the run that produced it.
struct RunConfig {
    long order = 200;
    long nMax = 600;
    long capEnum = 40;
    long capMarked = 25;
    int threads = 0;            // 0 resolves via RANKFORGE_THREADS, then hardware width
    std::string outputPath;     // empty writes to stdout
    std::string format = "json";
    bool orderExplicit = false; // set when the user passed --order

    /// Order override handed to verify_entry. Engaged only for an explicit
    /// request; otherwise each entry runs at its own default order.
    std::optional<long> order_override() const {
        if (orderExplicit) return order;
        return std::nullopt;
    }
};

inline void validate_config(const RunConfig& config) {
    if (config.order < 1) {
        throw ConfigError("order must be positive, got " + std::to_string(config.order));
    }
    if (config.nMax < 1) {
        throw ConfigError("nmax must be positive, got " + std::to_string(config.nMax));
    }
    if (config.capEnum < 1) {
        throw ConfigError("cap-enum must be positive, got " + std::to_string(config.capEnum));
    }
    if (config.capMarked < 1) {
        throw ConfigError("cap-marked must be positive, got " + std::to_string(config.capMarked));
    }
    if (config.threads < 0) {
        throw ConfigError("threads must be >= 0, got " + std::to_string(config.threads));
    }
    if (config.format != "json" && config.format != "csv" && config.format != "text") {
        throw ConfigError("format must be one of json, csv, text; got " + config.format);
    }
}

/// Worker count for a run: an explicit request wins, then the
/// RANKFORGE_THREADS environment variable, then the hardware width.
inline int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("RANKFORGE_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) {
            return parsed;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Owns exactly the tables a selection needs and exposes them through an
/// EvalContext. Table construction dominates the cost of a run, so the
/// bundle is built once per invocation and then shared read-only by all
/// worker threads.
class ContextBundle {
public:
    ContextBundle() = default;
    ContextBundle(ContextBundle&&) = default;
    ContextBundle& operator=(ContextBundle&&) = default;

    const EvalContext& context() const { return _ctx; }

    static ContextBundle for_selection(const std::vector<const CatalogEntry*>& selection,
                                       std::optional<long> order, long n_max) {
        Requirements req;
        for (const CatalogEntry* e : selection) {
            req.merge(entry_requirements(*e, order, n_max));
        }
        return for_requirements(req);
    }

    static ContextBundle for_requirements(const Requirements& req) {
        ContextBundle bundle;
        if (req.parts_n >= 0) {
            bundle._parts = std::make_unique<PartitionTable>(build_partition_table(req.parts_n));
            bundle._ctx.parts = bundle._parts.get();
        }
        if (req.rank_n >= 0) {
            bundle._rank = std::make_unique<RankTable>(build_rank_table(req.rank_n));
            bundle._ctx.rank = bundle._rank.get();
        }
        if (req.odd_n >= 0) {
            bundle._odd = std::make_unique<OddRankTable>(build_odd_rank_table(req.odd_n));
            bundle._ctx.odd = bundle._odd.get();
        }
        if (req.rank_gf_T > 0) {
            bundle._rank_gf = std::make_unique<BivariateSeries>(rank_bivariate(req.rank_gf_T));
            bundle._ctx.rank_gf = bundle._rank_gf.get();
        }
        if (req.odd_gf_T > 0) {
            bundle._odd_gf = std::make_unique<BivariateSeries>(odd_rank_bivariate(req.odd_gf_T));
            bundle._ctx.odd_rank_gf = bundle._odd_gf.get();
        }
        return bundle;
    }

private:
    std::unique_ptr<PartitionTable> _parts;
    std::unique_ptr<RankTable> _rank;
    std::unique_ptr<OddRankTable> _odd;
    std::unique_ptr<BivariateSeries> _rank_gf;
    std::unique_ptr<BivariateSeries> _odd_gf;
    EvalContext _ctx;
};

/// Runs the selection across the given number of workers. Reports land at
/// the index of their entry, so the output order matches the selection
/// regardless of scheduling; with one worker this is verify_all exactly.
inline std::vector<VerificationReport> run_verification(
        const std::vector<const CatalogEntry*>& selection, const EvalContext& ctx,
        std::optional<long> order = std::nullopt, long n_max = 600, int threads = 1) {
    if (threads <= 1) {
        return verify_all(selection, ctx, order, n_max);
    }
    std::vector<VerificationReport> reports(selection.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < selection.size(); i = next.fetch_add(1)) {
            try {
                reports[i] = verify_entry(*selection[i], ctx, order, n_max);
            } catch (const Error& err) {
                VerificationReport rep;
                rep.id = selection[i]->id;
                rep.status = VerifyStatus::Failed;
                rep.firstDiscrepancy = Discrepancy{0, std::string("error: ") + err.what(), ""};
                reports[i] = std::move(rep);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (std::thread& th : pool) {
        th.join();
    }
    return reports;
}

inline bool any_failed(const std::vector<VerificationReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.status == VerifyStatus::Failed;
    });
}

// --- report serialization ---------------------------------------------------

inline std::string config_echo(const RunConfig& config) {
    std::ostringstream os;
    os << "order=" << config.order << " nMax=" << config.nMax
       << " capEnum=" << config.capEnum << " capMarked=" << config.capMarked
       << " threads=" << config.threads << " outputPath=" << config.outputPath
       << " format=" << config.format;
    return os.str();
}

inline nlohmann::ordered_json config_to_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["order"] = config.order;
    j["nMax"] = config.nMax;
    j["capEnum"] = config.capEnum;
    j["capMarked"] = config.capMarked;
    j["threads"] = config.threads;
    j["outputPath"] = config.outputPath;
    j["format"] = config.format;
    return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["status"] = to_string(report.status);
    j["window"] = nlohmann::ordered_json::array({report.window_lo, report.window_hi});
    if (report.firstDiscrepancy) {
        nlohmann::ordered_json d;
        d["exp"] = report.firstDiscrepancy->exp;
        d["lhs"] = report.firstDiscrepancy->lhs;
        d["rhs"] = report.firstDiscrepancy->rhs;
        j["firstDiscrepancy"] = std::move(d);
    } else {
        j["firstDiscrepancy"] = nullptr;
    }
    j["wallMs"] = report.wallMs;
    return j;
}

inline std::string reports_to_json(const RunConfig& config,
                                   const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json j;
    j["config"] = config_to_json(config);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        arr.push_back(report_to_json(r));
    }
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

/// RFC 4180 quoting, applied only when the field needs it.
inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += "\"\"";
        } else {
            out += ch;
        }
    }
    out += '"';
    return out;
}

inline std::string reports_to_csv(const RunConfig& config,
                                  const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "# config: " << config_echo(config) << "\n";
    os << "id,status,window_lo,window_hi,discrepancy_exp,discrepancy_lhs,discrepancy_rhs,wall_ms\n";
    for (const VerificationReport& r : reports) {
        os << csv_escape(r.id) << ',' << to_string(r.status) << ','
           << r.window_lo << ',' << r.window_hi << ',';
        if (r.firstDiscrepancy) {
            os << r.firstDiscrepancy->exp << ',' << csv_escape(r.firstDiscrepancy->lhs) << ','
               << csv_escape(r.firstDiscrepancy->rhs);
        } else {
            os << ",,";
        }
        os << ',' << r.wallMs << "\n";
    }
    return os.str();
}

inline std::string reports_to_text(const RunConfig& config,
                                   const std::vector<VerificationReport>& reports) {
    size_t id_width = 2;
    for (const VerificationReport& r : reports) {
        id_width = std::max(id_width, r.id.size());
    }
    std::ostringstream os;
    os << "config: " << config_echo(config) << "\n";
    long verified = 0;
    long failed = 0;
    long reported = 0;
    for (const VerificationReport& r : reports) {
        switch (r.status) {
            case VerifyStatus::Verified: ++verified; break;
            case VerifyStatus::Failed: ++failed; break;
            case VerifyStatus::Reported: ++reported; break;
        }
        os << std::left << std::setw(static_cast<int>(id_width) + 2) << r.id
           << std::setw(10) << to_string(r.status)
           << "window=[" << r.window_lo << ',' << r.window_hi << ")  "
           << r.wallMs << "ms\n";
        if (r.firstDiscrepancy) {
            os << "    at " << r.firstDiscrepancy->exp
               << ": lhs=" << r.firstDiscrepancy->lhs
               << " rhs=" << r.firstDiscrepancy->rhs << "\n";
        }
    }
    os << "summary: " << reports.size() << " entries, " << verified << " verified, "
       << failed << " failed, " << reported << " reported\n";
    return os.str();
}

inline std::string render_reports(const RunConfig& config,
                                  const std::vector<VerificationReport>& reports) {
    if (config.format == "json") {
        return reports_to_json(config, reports);
    }
    if (config.format == "csv") {
        return reports_to_csv(config, reports);
    }
    return reports_to_text(config, reports);
}

// --- table export -------------------------------------------------------------

/// One row of a table dump. The middle column carries the rank value m for
/// the bivariate tables, the moment index for the moment tables, and the
/// mark count for the marked-symbol table; it is empty for plain sequences.
/// Values are decimal strings because the counts outgrow 64-bit integers.
struct TableRow {
    std::string kind;
    std::string m_or_class;
    long n = 0;
    std::string value;
};

inline std::vector<TableRow> export_p_table(long n_max) {
    PartitionTable parts = build_partition_table(n_max);
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        rows.push_back({"p", "", n, parts.p(n).get_str()});
    }
    return rows;
}

inline std::vector<TableRow> export_rank_table(long n_max) {
    RankTable table = build_rank_table(n_max);
    std::vector<TableRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        for (long m = -n; m <= n; ++m) {
            rows.push_back({"rank", std::to_string(m), n, table.count(m, n).get_str()});
        }
    }
    return rows;
}

inline std::vector<TableRow> export_odd_rank_table(long n_max) {
    OddRankTable table = build_odd_rank_table(n_max);
    std::vector<TableRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        for (long m = -n; m <= n; ++m) {
            rows.push_back({"odd-rank", std::to_string(m), n, table.count(m, n).get_str()});
        }
    }
    return rows;
}

inline std::vector<TableRow> export_pomega_table(long n_max) {
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        rows.push_back({"pomega", "", n, p_omega(n).get_str()});
    }
    return rows;
}

/// Rank moments eta_k for k = 2, 4, 6 and odd rank moments eta0_k for
/// k = 2, 4, interleaved per weight so one pass over n covers all five.
inline std::vector<TableRow> export_moment_table(long n_max) {
    RankTable rank = build_rank_table(n_max);
    OddRankTable odd = build_odd_rank_table(n_max);
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(n_max + 1) * 5);
    for (long n = 0; n <= n_max; ++n) {
        for (long k : {2L, 4L, 6L}) {
            rows.push_back({"eta", std::to_string(k), n, eta_moment(rank, k, n).to_string()});
        }
        for (long k : {2L, 4L}) {
            rows.push_back({"eta0", std::to_string(k), n, eta0_moment(odd, k, n).to_string()});
        }
    }
    return rows;
}

inline std::vector<TableRow> export_marked_table(long k_marks, long n_max, long cap_marked) {
    if (k_marks < 1) {
        throw ConfigError("marked table needs k >= 1, got " + std::to_string(k_marks));
    }
    if (n_max > cap_marked) {
        throw ConfigError("marked table nmax " + std::to_string(n_max) +
                          " exceeds cap-marked " + std::to_string(cap_marked) +
                          "; the literal enumeration is exponential, raise the cap deliberately");
    }
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        BigInt count = d_k0(k_marks, n, MarkedConvention::LevelIntervals, cap_marked);
        rows.push_back({"marked", std::to_string(k_marks), n, count.get_str()});
    }
    return rows;
}

inline std::vector<TableRow> export_table(const std::string& kind, long n_max, long k_marks,
                                          long cap_marked) {
    if (kind == "p") return export_p_table(n_max);
    if (kind == "rank") return export_rank_table(n_max);
    if (kind == "odd-rank") return export_odd_rank_table(n_max);
    if (kind == "pomega") return export_pomega_table(n_max);
    if (kind == "moments") return export_moment_table(n_max);
    if (kind == "marked") return export_marked_table(k_marks, n_max, cap_marked);
    throw ConfigError("unknown table kind: " + kind +
                      " (expected p, rank, odd-rank, pomega, moments, or marked)");
}

inline std::string table_to_csv(const RunConfig& config, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "# config: " << config_echo(config) << "\n";
    os << "kind,m_or_class,n,value\n";
    for (const TableRow& r : rows) {
        os << r.kind << ',' << r.m_or_class << ',' << r.n << ',' << r.value << "\n";
    }
    return os.str();
}

inline std::string table_to_json(const RunConfig& config, const std::vector<TableRow>& rows) {
    nlohmann::ordered_json j;
    j["config"] = config_to_json(config);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& r : rows) {
        nlohmann::ordered_json row;
        row["kind"] = r.kind;
        row["m_or_class"] = r.m_or_class;
        row["n"] = r.n;
        row["value"] = r.value;
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

inline std::string table_to_text(const RunConfig& config, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "config: " << config_echo(config) << "\n";
    for (const TableRow& r : rows) {
        os << r.kind;
        if (!r.m_or_class.empty()) {
            os << '[' << r.m_or_class << ']';
        }
        os << '(' << r.n << ") = " << r.value << "\n";
    }
    return os.str();
}

inline std::string render_table(const RunConfig& config, const std::vector<TableRow>& rows) {
    if (config.format == "json") {
        return table_to_json(config, rows);
    }
    if (config.format == "csv") {
        return table_to_csv(config, rows);
    }
    return table_to_text(config, rows);
}

}  // namespace rankforge
