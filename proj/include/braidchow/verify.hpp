#pragma once

// Self-check suite behind `braidchow verify`.  Each check is named; the
// suite runs all of them and reports per-check status.

#include <braidchow/character_table.hpp>
#include <braidchow/combinatorics.hpp>
#include <braidchow/level_tree.hpp>
#include <braidchow/moduli.hpp>
#include <braidchow/reference.hpp>
#include <braidchow/solver.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace braidchow {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 6;
    /// Replaces the Stirling tables used by every Stirling-based check.
    std::optional<StirlingCache> stirling;
};

/// Bound used for the integer/polynomial identity checks, independent of max_n.
inline constexpr int kIdentityBound = 12;

/// Sparse random series with small rational coefficients; every term has
/// degree in [min_degree, n_max] and t-degree <= 2.
template <class Rng>
SymSeries random_series(Rng& rng, int n_max, int min_degree, int term_count) {
    std::uniform_int_distribution<int> deg(min_degree, n_max), coeff(-3, 3), den(1, 3), texp(0, 2);
    SymSeries s(n_max);
    for (int i = 0; i < term_count; ++i) {
        const int d = deg(rng);
        auto parts = partitions_of(d);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        s.add_term(parts[pick(rng)], Poly::monomial(make_rational(coeff(rng), den(rng)), static_cast<std::size_t>(texp(rng))));
    }
    return s;
}

/// Inner argument for plethysm tests: random terms in degrees 1..n_max plus
/// guaranteed low-degree terms, so compositions reach the truncation degree.
template <class Rng>
SymSeries random_inner_series(Rng& rng, int n_max, int term_count) {
    std::uniform_int_distribution<int> coeff(1, 3);
    SymSeries s = random_series(rng, n_max, 1, term_count);
    s.add_term(Partition{1}, Poly{coeff(rng), coeff(rng)});
    s.add_term(Partition{2}, Poly(coeff(rng)));
    s.add_term(Partition{1, 1}, Poly{0, coeff(rng)});
    return s;
}

namespace detail {

inline CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::string poly_mismatch(const std::string& what, const Poly& got, const Poly& want) {
    return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const int max_n = opts.max_n;
    const StirlingCache stirling = opts.stirling ? *opts.stirling : StirlingCache(kIdentityBound);
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, const std::function<std::string()>& body) {
        results.push_back(detail::run_check(name, body));
    };

    add("stirling-bell identity", [&]() -> std::string {
        for (int n = 1; n <= kIdentityBound; ++n)
            for (int k = 1; k <= n; ++k) {
                auto sides = stirling_bell_sides(n, k, stirling);
                if (!(sides.bell_side == sides.stirling_side))
                    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): " +
                           detail::poly_mismatch("Stirling side", sides.stirling_side, sides.bell_side);
            }
        return {};
    });

    add("stirling triangle inversion", [&]() -> std::string {
        for (int n = 0; n <= kIdentityBound; ++n)
            for (int k = 0; k <= n; ++k) {
                Integer sum = 0;
                for (int j = k; j <= n; ++j) sum += stirling.first(n, j) * stirling.second(j, k);
                if (sum != (n == k ? 1 : 0))
                    return "sum_j s(" + std::to_string(n) + ",j) S(j," + std::to_string(k) + ") = " + sum.get_str();
            }
        return {};
    });

    add("bell limit at t=1", []() -> std::string {
        for (int n = 2; n <= kIdentityBound; ++n)
            for (int k = 1; k < n; ++k)
                if (bell_omega_limit(n, k) != bell_omega_limit_closed_form(n, k))
                    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
        return {};
    });

    add("omega closed form", []() -> std::string {
        for (int n = 1; n <= kIdentityBound; ++n) {
            Poly closed(1);
            for (int i = 0; i <= n - 2; ++i) closed *= Poly::linear_factor(Rational(i));
            if (!(omega(n) == closed)) return detail::poly_mismatch("omega_" + std::to_string(n), omega(n), closed);
        }
        return {};
    });

    std::optional<GradedSeries> m, b;
    add("M series invariants", [&]() -> std::string {
        m = m_series(max_n);
        for (int n = 2; n <= max_n; ++n) {
            Poly expected(1);
            for (int j = 2; j <= n - 1; ++j) expected *= Poly::linear_factor(Rational(j));
            Poly got = m->component(n).coefficient(Partition::ones(n)) * Rational(factorial(static_cast<unsigned>(n)));
            if (!(got == expected)) return detail::poly_mismatch("n! [p_1^n] M_" + std::to_string(n), got, expected);
        }
        return {};
    });

    add("functional equation", [&]() -> std::string {
        if (!m) return "M series unavailable";
        b = solve_b(*m, max_n);
        if (!verify_functional_equation(*b, *m)) return "residual is nonzero";
        if (!(b->component(2) == homogeneous_h(2, max_n))) return "H_2 differs from h_2";
        return {};
    });

    add("published table", [&]() -> std::string {
        if (!b) return "solver output unavailable";
        const auto published = reference::published_equivariant_table();
        for (int n = 2; n <= std::min(max_n, 6); ++n)
            if (equivariant_table(*b, n) != published.at(n)) return "row n=" + std::to_string(n) + " differs";
        return {};
    });

    add("level filtration", [&]() -> std::string {
        if (!m || !b) return "solver output unavailable";
        auto layers = level_filtration(*m, max_n);
        SymSeries sum(max_n);
        for (const auto& layer : layers) sum += layer.total();
        if (!(sum == b->total())) return "sum of layers differs from the solver output";
        if (!(layers.front() == *m)) return "first layer differs from M";
        return {};
    });

    add("numeric route agreement", [&]() -> std::string {
        if (!b) return "solver output unavailable";
        const auto from_solver = hnum_from_equivariant(*b);
        const auto routes = std::vector<std::pair<std::string, NumericTable>>{
            {"stirling", hnum_stirling(max_n, stirling)},
            {"bell", hnum_bell(max_n)},
            {"lattice", hnum_lattice(std::min(max_n, 12))},
        };
        for (const auto& [name, table] : routes)
            for (const auto& [n, h] : table.hnum)
                if (!(h == from_solver.hnum.at(n)))
                    return name + " route, n=" + std::to_string(n) + ": " + detail::poly_mismatch("H^num", h, from_solver.hnum.at(n));
        return {};
    });

    add("euler characteristics", [&]() -> std::string {
        if (!b) return "solver output unavailable";
        const auto chi = euler_chars(max_n);
        const auto table = hnum_from_equivariant(*b);
        for (int n = 1; n <= max_n; ++n)
            if (chi.at(n) != table.chi.at(n))
                return "chi_" + std::to_string(n) + " = " + chi.at(n).get_str() + " but H^num(1) = " + table.chi.at(n).get_str();
        return {};
    });

    add("structural properties", [&]() -> std::string {
        if (!b) return "solver output unavailable";
        const auto table = hnum_from_equivariant(*b);
        for (int n = 2; n <= max_n; ++n) {
            const auto& h = table.hnum.at(n);
            if (h.degree() != n - 2 || !is_monic(h) || !is_palindromic(h) || !is_unimodal(h))
                return "H_" + std::to_string(n) + "^num = " + h.to_string() + " is not monic/palindromic/unimodal of degree n-2";
        }
        for (int n = 2; n <= std::min(max_n, 8); ++n) {
            const auto ct = character_table(n);
            const auto coeffs = schur_expand(b->component(n), ct);
            for (const auto& [lam, c] : coeffs)
                if (!has_nonnegative_integer_coefficients(c)) return "Schur coefficient of " + lam.to_string() + " at n=" + std::to_string(n);
            for (const auto& [mu, value] : character_values(b->component(n), n))
                if (!has_nonnegative_integer_coefficients(value))
                    return "character value at " + mu.to_string() + ", n=" + std::to_string(n);
        }
        return {};
    });

    add("level tree census", [&]() -> std::string {
        for (int n = 2; n <= std::min(max_n, 7); ++n) {
            const auto census = strata_census(n);
            if (census.total != chain_count(n)) return "tree count differs from chain count at n=" + std::to_string(n);
            if (!b) continue;
            const auto table = hnum_from_equivariant(*b);
            if (!(census.epoly == table.hnum.at(n)))
                return detail::poly_mismatch("stratum sum at n=" + std::to_string(n), census.epoly, table.hnum.at(n));
        }
        return {};
    });

    add("plethysm laws", [&]() -> std::string {
        const int deg = std::min(max_n, 6);
        std::mt19937 rng(20240611);
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_series(rng, deg, 0, 4), g = random_series(rng, deg, 0, 4);
            auto h = random_inner_series(rng, deg, 3);
            if (!(plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h))) return "additivity";
            if (!(plethysm(f * g, h) == plethysm(f, h) * plethysm(g, h))) return "multiplicativity";
            auto g1 = random_inner_series(rng, deg, 2);
            if (!(plethysm(plethysm(f, g1), h) == plethysm(f, plethysm(g1, h)))) return "associativity";
        }
        return {};
    });

    return results;
}

}  // namespace braidchow
