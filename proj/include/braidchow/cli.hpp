#pragma once

// Subcommand implementations for the braidchow executable.  Each command
// writes its result to `out`, diagnostics to `err`, and returns the process
// exit code: 0 success, 1 verification failure, 2 usage error.

#include <braidchow/braidchow.hpp>
#include <braidchow/serialize.hpp>
#include <braidchow/verify.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace braidchow::cli {

enum class ExitCode : int { ok = 0, verification_failure = 1, usage = 2 };

struct RunConfig {
    int max_n = 8;
    std::string method = "solve";  // solve | stirling | bell | lattice | strata | all
    std::string basis = "schur";   // schur | p
    std::string format = "json";   // json | csv | latex
    bool count_only = false;
    std::string inject_fault;  // "" | stirling-sign
};

inline constexpr int kMaxN = 12;
inline constexpr int kMaxStrataN = 7;

/// Returns an error message, or nothing if the config is usable.
inline std::optional<std::string> validate(const RunConfig& cfg) {
    if (cfg.max_n < 2 || cfg.max_n > kMaxN) return "max-n must lie in 2.." + std::to_string(kMaxN);
    static const std::vector<std::string> methods{"solve", "stirling", "bell", "lattice", "strata", "all"};
    if (std::find(methods.begin(), methods.end(), cfg.method) == methods.end()) return "unknown method '" + cfg.method + "'";
    if (cfg.basis != "schur" && cfg.basis != "p") return "basis must be schur or p";
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "latex") return "format must be json, csv or latex";
    if (cfg.method == "strata" && cfg.max_n > kMaxStrataN)
        return "strata method is capped at max-n " + std::to_string(kMaxStrataN);
    if (!cfg.inject_fault.empty() && cfg.inject_fault != "stirling-sign")
        return "unknown fault '" + cfg.inject_fault + "'";
    return std::nullopt;
}

namespace detail {

inline int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return static_cast<int>(ExitCode::usage);
}

/// Renders degree components 2..max_n of a graded series.
inline void emit_graded(const GradedSeries& g, int from, const RunConfig& cfg, std::ostream& out) {
    const bool schur = cfg.basis == "schur";
    if (cfg.format == "json") {
        json arr = json::array();
        for (int n = from; n <= g.n_max(); ++n) {
            if (schur)
                arr.push_back(to_json(SchurTable{n, schur_expand(g.component(n), n)}));
            else
                arr.push_back(to_json(g.component(n).with_n_max(n)));
        }
        out << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        schur ? write_csv_header_schur(out) : write_csv_header_series(out);
        for (int n = from; n <= g.n_max(); ++n) {
            if (schur)
                write_csv(out, SchurTable{n, schur_expand(g.component(n), n)});
            else
                write_csv(out, n, g.component(n));
        }
    } else {
        std::vector<std::pair<int, std::string>> rows;
        for (int n = from; n <= g.n_max(); ++n) {
            if (schur)
                rows.emplace_back(n, latex_basis_sum(schur_expand(g.component(n), n), 's'));
            else
                rows.emplace_back(n, latex_basis_sum(g.component(n).terms(), 'p'));
        }
        out << latex_table(rows);
    }
}

inline void emit_numeric(const NumericTable& table, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        out << to_json(table).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        write_csv(out, table);
    } else {
        out << "\\begin{tabular}{|l|l|l|}\n\\hline\n$n$ & $\\mathrm{H}^{\\mathrm{num}}_n(t)$ & $\\chi_n$ \\\\ \\hline\n";
        for (const auto& [n, h] : table.hnum)
            out << "$" << n << "$ & $" << latex_poly(h) << "$ & $" << table.chi.at(n).get_str() << "$ \\\\ \\hline\n";
        out << "\\end{tabular}\n";
    }
}

/// Lists every n where the two tables disagree.
inline std::vector<std::string> diff_tables(const std::string& a_name, const NumericTable& a, const std::string& b_name,
                                            const NumericTable& b) {
    std::vector<std::string> diffs;
    for (const auto& [n, h] : a.hnum) {
        auto it = b.hnum.find(n);
        if (it == b.hnum.end()) continue;
        if (!(it->second == h))
            diffs.push_back("n=" + std::to_string(n) + ": " + a_name + " gives " + h.to_string() + ", " + b_name + " gives " +
                            it->second.to_string());
    }
    return diffs;
}

inline NumericTable strata_table(int max_n) {
    std::map<int, Poly> hnum{{1, Poly(1)}};
    for (int n = 2; n <= max_n; ++n) hnum[n] = epoly_bn(n);
    return braidchow::detail::finish_table(max_n, std::move(hnum));
}

}  // namespace detail

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (auto msg = validate(cfg)) return detail::usage_error(err, *msg);
    try {
        const auto b = solve_b(cfg.max_n);
        detail::emit_graded(b, 2, cfg, out);
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failure);
    }
    return static_cast<int>(ExitCode::ok);
}

inline int cmd_m_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (auto msg = validate(cfg)) return detail::usage_error(err, *msg);
    try {
        detail::emit_graded(m_series(cfg.max_n), 2, cfg, out);
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failure);
    }
    return static_cast<int>(ExitCode::ok);
}

inline int cmd_numeric(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (auto msg = validate(cfg)) return detail::usage_error(err, *msg);
    try {
        std::vector<std::pair<std::string, NumericTable>> tables;
        const bool all = cfg.method == "all";
        if (all || cfg.method == "solve") tables.emplace_back("solve", hnum_from_equivariant(solve_b(cfg.max_n)));
        if (all || cfg.method == "stirling") tables.emplace_back("stirling", hnum_stirling(cfg.max_n));
        if (all || cfg.method == "bell") tables.emplace_back("bell", hnum_bell(cfg.max_n));
        if (all || cfg.method == "lattice") tables.emplace_back("lattice", hnum_lattice(cfg.max_n));
        if (cfg.method == "strata" || (all && cfg.max_n <= kMaxStrataN))
            tables.emplace_back("strata", detail::strata_table(cfg.max_n));
        if (all && cfg.max_n > kMaxStrataN) err << "note: strata route skipped above n=" << kMaxStrataN << "\n";

        std::vector<std::string> diffs;
        for (std::size_t i = 1; i < tables.size(); ++i) {
            auto d = detail::diff_tables(tables[0].first, tables[0].second, tables[i].first, tables[i].second);
            diffs.insert(diffs.end(), d.begin(), d.end());
        }
        const auto chi = euler_chars(cfg.max_n);
        for (const auto& [n, value] : tables[0].second.chi)
            if (chi.at(n) != value)
                diffs.push_back("n=" + std::to_string(n) + ": Euler recursion gives " + chi.at(n).get_str() + ", " +
                                tables[0].first + " gives H(1) = " + value.get_str());
        if (!diffs.empty()) {
            err << "route mismatch:\n";
            for (const auto& d : diffs) err << "  " << d << "\n";
            return static_cast<int>(ExitCode::verification_failure);
        }
        detail::emit_numeric(tables[0].second, cfg, out);
        if (all) {
            std::size_t routes = 0;
            std::string names;
            for (const auto& [name, table] : tables)
                if (name != "strata") {
                    ++routes;
                    names += " " + name;
                }
            err << "agreement across " << routes << " routes:" << names << "\n";
            if (cfg.max_n <= kMaxStrataN) err << "strata oracle agrees through n=" << cfg.max_n << "\n";
        }
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failure);
    }
    return static_cast<int>(ExitCode::ok);
}

/// `strata --n N`: per-length level-tree counts and the stratum E-polynomial.
inline int cmd_strata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.max_n < 2 || cfg.max_n > kMaxStrataN)
        return detail::usage_error(err, "n must lie in 2.." + std::to_string(kMaxStrataN));
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "latex")
        return detail::usage_error(err, "format must be json, csv or latex");
    const int n = cfg.max_n;
    const auto census = strata_census(n, !cfg.count_only);
    const auto chains = chain_count(n);
    if (cfg.format == "json") {
        json counts = json::array();
        for (const auto& [len, c] : census.count_by_length) counts.push_back({{"length", len}, {"count", c}});
        json j{{"n", n}, {"total", census.total}, {"chain_count", chains}, {"counts", counts}};
        if (!cfg.count_only) j["epoly"] = poly_to_json(census.epoly);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "kind,key,value\n";
        for (const auto& [len, c] : census.count_by_length) out << "count," << len << "," << c << "\n";
        out << "total,," << census.total << "\n";
        out << "chain_count,," << chains << "\n";
        if (!cfg.count_only)
            for (std::size_t k = 0; k < census.epoly.size(); ++k)
                out << "epoly," << k << "," << to_fraction_string(census.epoly.coeff(k)) << "\n";
    } else {
        out << "\\begin{tabular}{|l|l|}\n\\hline\nlength & trees \\\\ \\hline\n";
        for (const auto& [len, c] : census.count_by_length) out << "$" << len << "$ & $" << c << "$ \\\\ \\hline\n";
        out << "\\end{tabular}\n";
        if (!cfg.count_only) out << "$E(\\mathcal{B}_{" << n << "}) = " << latex_poly(census.epoly) << "$\n";
    }
    if (census.total != chains) {
        err << "level-tree count " << census.total << " differs from chain count " << chains << "\n";
        return static_cast<int>(ExitCode::verification_failure);
    }
    return static_cast<int>(ExitCode::ok);
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (auto msg = validate(cfg)) return detail::usage_error(err, *msg);
    VerifyOptions opts;
    opts.max_n = cfg.max_n;
    if (cfg.inject_fault == "stirling-sign") {
        StirlingCache clean(kIdentityBound);
        opts.stirling = clean.with_first_override(4, 2, -clean.first(4, 2));
    }
    const auto results = run_verification(opts);
    const CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << "\n";
        if (!r.passed && !first_failure) first_failure = &r;
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    out << passed << "/" << results.size() << " checks passed\n";
    if (first_failure) {
        err << "first failing check: " << first_failure->name << "\n";
        return static_cast<int>(ExitCode::verification_failure);
    }
    return static_cast<int>(ExitCode::ok);
}

}  // namespace braidchow::cli
