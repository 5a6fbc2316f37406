// Command-line front end: verify catalog entries, evaluate expressions to
// truncated series, and dump the combinatorial tables behind them.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankforge/driver.hpp"
#include "rankforge/parser.hpp"

namespace {

void emit(const rankforge::RunConfig& config, const std::string& payload) {
    if (config.outputPath.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(config.outputPath);
    if (!out) {
        throw rankforge::ConfigError("cannot open output path: " + config.outputPath);
    }
    out << payload;
}

int cmd_verify(const std::string& filter, const rankforge::RunConfig& config) {
    rankforge::validate_config(config);
    if (config.orderExplicit && config.order < 8) {
        throw rankforge::ConfigError("verification needs order >= 8, got " +
                                     std::to_string(config.order));
    }
    std::vector<const rankforge::CatalogEntry*> selection =
        rankforge::select_entries(rankforge::catalog(), filter);
    rankforge::ContextBundle bundle = rankforge::ContextBundle::for_selection(
        selection, config.order_override(), config.nMax);
    std::vector<rankforge::VerificationReport> reports = rankforge::run_verification(
        selection, bundle.context(), config.order_override(), config.nMax,
        rankforge::resolve_threads(config.threads));
    emit(config, rankforge::render_reports(config, reports));
    return rankforge::any_failed(reports) ? 1 : 0;
}

int cmd_series(const std::string& text, const rankforge::RunConfig& config) {
    rankforge::validate_config(config);
    rankforge::ExprPtr expr = rankforge::parse_expr(text);
    rankforge::EvalContext ctx;
    rankforge::LaurentSeries series = rankforge::eval_expr(*expr, ctx, config.order);
    std::ostringstream os;
    for (long e = series.min_exp(); e < series.trunc_order(); ++e) {
        const rankforge::CycRat& c = series.coeff(e);
        if (c.is_zero()) {
            continue;
        }
        os << e << ": " << c.to_string() << "\n";
    }
    emit(config, os.str());
    return 0;
}

int cmd_table(const std::string& kind, long k_marks, const rankforge::RunConfig& config) {
    rankforge::validate_config(config);
    std::vector<rankforge::TableRow> rows =
        rankforge::export_table(kind, config.nMax, k_marks, config.capMarked);
    emit(config, rankforge::render_table(config, rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine for odd rank statistics"};
    app.require_subcommand(1);

    rankforge::RunConfig config;
    std::string filter;
    std::string expr_text;
    std::string kind;
    long k_marks = 1;

    CLI::App* verify = app.add_subcommand(
        "verify", "check catalog identities, congruences, and inequalities");
    verify->add_option("--filter", filter, "id or group prefix selecting entries (default: all)");
    CLI::Option* order_opt = verify->add_option(
        "--order", config.order, "series order for every selected entry (default: per entry)");
    verify->add_option("--nmax", config.nMax, "depth of the arithmetic scans");
    verify->add_option("--threads", config.threads, "worker threads, 0 picks automatically");
    verify->add_option("--output", config.outputPath, "write the report to this file");
    verify->add_option("--format", config.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* series = app.add_subcommand(
        "series", "evaluate an expression and print exponent: coefficient lines");
    series->add_option("expr", expr_text, "expression in the series grammar")->required();
    series->add_option("--order", config.order, "truncation order");
    series->add_option("--output", config.outputPath, "write the series to this file");

    CLI::App* table = app.add_subcommand("table", "dump a combinatorial table");
    table->add_option("kind", kind, "p, rank, odd-rank, pomega, moments, or marked")->required();
    table->add_option("--nmax", config.nMax, "largest weight to include");
    table->add_option("--k", k_marks, "mark count for the marked table");
    table->add_option("--cap-marked", config.capMarked,
                      "safety ceiling on nmax for the literal marked enumeration");
    table->add_option("--output", config.outputPath, "write the table to this file");
    table->add_option("--format", config.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            config.orderExplicit = order_opt->count() > 0;
            return cmd_verify(filter, config);
        }
        if (series->parsed()) {
            return cmd_series(expr_text, config);
        }
        return cmd_table(kind, k_marks, config);
    } catch (const rankforge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rankforge::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const rankforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
