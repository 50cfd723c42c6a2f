#pragma once

// JSON, CSV and LaTeX renderings of series and tables.  Every coefficient is
// written as an exact "num/den" string; no floating point appears in any
// output path.

#include <braidchow/partition.hpp>
#include <braidchow/poly.hpp>
#include <braidchow/solver.hpp>
#include <braidchow/symseries.hpp>

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace braidchow {

using json = nlohmann::json;

/// One Schur-basis row block: H_n = sum_lambda coeffs[lambda] s_lambda.
struct SchurTable {
    int n = 0;
    std::map<Partition, Poly> coeffs;

    friend bool operator==(const SchurTable& a, const SchurTable& b) { return a.n == b.n && a.coeffs == b.coeffs; }
};

// ---------------------------------------------------------------- JSON

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_fraction_string(c));
    return arr;
}

inline Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("polynomial must be an array of coefficient strings");
    std::vector<Rational> cs;
    for (const auto& c : j) {
        if (!c.is_string()) throw parse_error("polynomial coefficients must be strings");
        cs.push_back(parse_rational(c.get<std::string>()));
    }
    return Poly(std::move(cs));
}

inline json parts_to_json(const Partition& p) { return json(p.parts()); }

inline Partition parts_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("partition must be an array of integers");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 1) throw parse_error("partition parts must be positive integers");
        parts.push_back(x.get<int>());
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw parse_error("partition parts must be weakly decreasing");
    return Partition::from_sorted(std::move(parts));
}

/// {n, terms: [{partition, t, coeff}]}, terms in partition then t order.
inline json to_json(const SymSeries& s) {
    json terms = json::array();
    for (const auto& [lam, c] : s.terms())
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c.coeff(k) == 0) continue;
            terms.push_back({{"partition", parts_to_json(lam)}, {"t", k}, {"coeff", to_fraction_string(c.coeff(k))}});
        }
    return {{"n", s.n_max()}, {"terms", terms}};
}

inline SymSeries symseries_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw parse_error("series object needs 'n' and 'terms'");
    SymSeries s(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        const auto lam = parts_from_json(term.at("partition"));
        if (lam.size() > s.n_max()) throw parse_error("term " + lam.to_string() + " exceeds the truncation degree");
        const int k = term.at("t").get<int>();
        if (k < 0) throw parse_error("negative t exponent");
        s.add_term(lam, Poly::monomial(parse_rational(term.at("coeff").get<std::string>()), static_cast<std::size_t>(k)));
    }
    return s;
}

/// {n, rows: [{lambda, poly}]}
inline json to_json(const SchurTable& t) {
    json rows = json::array();
    for (const auto& [lam, c] : t.coeffs) rows.push_back({{"lambda", parts_to_json(lam)}, {"poly", poly_to_json(c)}});
    return {{"n", t.n}, {"rows", rows}};
}

inline SchurTable schur_table_from_json(const json& j) {
    SchurTable t;
    t.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) {
        auto lam = parts_from_json(row.at("lambda"));
        if (lam.size() != t.n) throw parse_error("row " + lam.to_string() + " is not a partition of n");
        t.coeffs[lam] = poly_from_json(row.at("poly"));
    }
    return t;
}

/// [{n, hnum, chi}] for n = 1..n_max
inline json to_json(const NumericTable& table) {
    json rows = json::array();
    for (const auto& [n, h] : table.hnum) {
        const Integer& chi = table.chi.at(n);
        json chi_json = chi.fits_slong_p() ? json(chi.get_si()) : json(chi.get_str());
        rows.push_back({{"n", n}, {"hnum", poly_to_json(h)}, {"chi", chi_json}});
    }
    return rows;
}

inline NumericTable numeric_table_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("numeric table must be an array");
    NumericTable table;
    for (const auto& row : j) {
        const int n = row.at("n").get<int>();
        table.hnum[n] = poly_from_json(row.at("hnum"));
        const auto& chi = row.at("chi");
        table.chi[n] = chi.is_string() ? Integer(chi.get<std::string>()) : Integer(chi.get<long>());
        table.n_max = std::max(table.n_max, n);
    }
    return table;
}

// ---------------------------------------------------------------- CSV

inline std::string parts_to_csv_field(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? " " : "") + std::to_string(p.parts()[i]);
    return s;
}

/// n,partition,t,coeff  (partition parts space-separated)
inline void write_csv_header_series(std::ostream& os) { os << "n,partition,t,coeff\n"; }
inline void write_csv(std::ostream& os, int n, const SymSeries& s) {
    for (const auto& [lam, c] : s.terms())
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c.coeff(k) != 0) os << n << "," << parts_to_csv_field(lam) << "," << k << "," << to_fraction_string(c.coeff(k)) << "\n";
}

/// n,lambda,t,coeff
inline void write_csv_header_schur(std::ostream& os) { os << "n,lambda,t,coeff\n"; }
inline void write_csv(std::ostream& os, const SchurTable& t) {
    for (const auto& [lam, c] : t.coeffs)
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c.coeff(k) != 0) os << t.n << "," << parts_to_csv_field(lam) << "," << k << "," << to_fraction_string(c.coeff(k)) << "\n";
}

/// n,chi,hnum  (hnum coefficients space-separated, constant term first)
inline void write_csv(std::ostream& os, const NumericTable& table) {
    os << "n,chi,hnum\n";
    for (const auto& [n, h] : table.hnum) {
        os << n << "," << table.chi.at(n).get_str() << ",";
        for (std::size_t k = 0; k < h.size(); ++k) os << (k ? " " : "") << to_fraction_string(h.coeff(k));
        os << "\n";
    }
}

// ---------------------------------------------------------------- LaTeX

inline std::string latex_rational(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

/// 1 + 3t + t^2
inline std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) out += latex_rational(mag);
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + (k >= 10 ? "{" + std::to_string(k) + "}" : std::to_string(k));
    }
    return out;
}

inline std::string latex_subscript(const Partition& p) {
    const bool wide = p.largest() >= 10;
    std::string body;
    for (std::size_t i = 0; i < p.parts().size(); ++i) body += (wide && i ? "," : "") + std::to_string(p.parts()[i]);
    return body.size() == 1 ? body : "{" + body + "}";
}

/// c(t) written as a multiplier of a basis symbol: "", "t^2" or "(1 + t)".
inline std::string latex_multiplier(const Poly& c) {
    if (c == Poly(1)) return "";
    const auto& cs = c.coefficients();
    const bool monomial = std::count_if(cs.begin(), cs.end(), [](const Rational& x) { return x != 0; }) == 1;
    if (monomial && c.leading() == 1) return latex_poly(c);
    return "(" + latex_poly(c) + ")";
}

inline std::string latex_basis_sum(const std::map<Partition, Poly>& coeffs, char symbol) {
    std::string out;
    for (const auto& [lam, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += std::string(1, symbol) + "_" + latex_subscript(lam) + latex_multiplier(c);
    }
    return out.empty() ? "0" : out;
}

/// Two-column table of H_n(t) rows, one per n.
inline std::string latex_table(const std::vector<std::pair<int, std::string>>& rows) {
    std::ostringstream os;
    os << "\\begin{tabular}{|l|l|}\n\\hline\n$n$ & $\\mathrm{H}_n(t)$ \\\\ \\hline\n";
    for (const auto& [n, body] : rows) os << "$" << n << "$ & $" << body << "$ \\\\ \\hline\n";
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace braidchow
