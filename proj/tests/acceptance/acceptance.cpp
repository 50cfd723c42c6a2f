// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <braidchow/cli.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace braidchow;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

// Frozen copy of the published Schur expansions, coefficients from t^0.
std::map<int, std::map<Partition, Poly>> frozen_table() {
    return {
        {2, {{Partition{2}, Poly{1}}}},
        {3, {{Partition{3}, Poly{1, 1}}}},
        {4, {{Partition{4}, Poly{1, 3, 1}}, {Partition{3, 1}, Poly{0, 1}}, {Partition{2, 2}, Poly{0, 1}}}},
        {5,
         {{Partition{5}, Poly{1, 5, 5, 1}},
          {Partition{4, 1}, Poly{0, 4, 4}},
          {Partition{3, 2}, Poly{0, 3, 3}},
          {Partition{2, 2, 1}, Poly{0, 1, 1}}}},
        {6,
         {{Partition{6}, Poly{1, 9, 19, 9, 1}},
          {Partition{5, 1}, Poly{0, 7, 21, 7}},
          {Partition{4, 2}, Poly{0, 9, 28, 9}},
          {Partition{4, 1, 1}, Poly{0, 1, 7, 1}},
          {Partition{3, 3}, Poly{0, 2, 8, 2}},
          {Partition{3, 2, 1}, Poly{0, 2, 12, 2}},
          {Partition{3, 1, 1, 1}, Poly{0, 0, 1}},
          {Partition{2, 2, 2}, Poly{0, 2, 7, 2}},
          {Partition{2, 2, 1, 1}, Poly{0, 0, 1}}}},
    };
}

Outcome table_reproduction() {
    Outcome o;
    cli::RunConfig cfg;
    cfg.max_n = 6;
    std::ostringstream out, err;
    if (cli::cmd_table(cfg, out, err) != 0) {
        o.fail("table command failed: " + err.str());
        return o;
    }
    const auto rows = json::parse(out.str());
    const auto expected = frozen_table();
    if (rows.size() != expected.size()) o.fail("expected 5 rows, got " + std::to_string(rows.size()));
    for (const auto& row : rows) {
        const auto t = schur_table_from_json(row);
        if (t.coeffs != expected.at(t.n)) o.fail("row n=" + std::to_string(t.n) + " differs");
    }
    return o;
}

Outcome functional_equation() {
    Outcome o;
    const auto m = m_series(10);
    const auto b = solve_b(m, 10);
    if (!verify_functional_equation(b, m)) o.fail("residual nonzero through degree 10");
    for (int n = 2; n <= 10; ++n) {
        GradedSeries broken = b;
        const auto shapes = partitions_of(n);
        const Partition mu = shapes[static_cast<std::size_t>(n) % shapes.size()];
        broken.set_component(n, b.component(n) + SymSeries::term(mu, Poly{1}, 10));
        if (verify_functional_equation(broken, m)) o.fail("perturbation at n=" + std::to_string(n) + " went undetected");
    }
    return o;
}

Outcome route_agreement() {
    Outcome o;
    const auto reference = hnum_from_equivariant(solve_b(10));
    const std::vector<std::pair<std::string, NumericTable>> routes{
        {"stirling", hnum_stirling(10)}, {"bell", hnum_bell(10)}, {"lattice", hnum_lattice(10)}};
    for (const auto& [name, table] : routes)
        if (!(table == reference)) o.fail(name + " route disagrees with the solver");
    for (int n = 2; n <= 7; ++n)
        if (!(epoly_bn(n) == reference.hnum.at(n))) o.fail("strata sum disagrees at n=" + std::to_string(n));
    if (!(epoly_bn(4) == Poly{1, 8, 1})) o.fail("n=4 strata sum is not q^2+8q+1");
    if (!(epoly_bn(5) == Poly{1, 41, 41, 1})) o.fail("n=5 strata sum is not q^3+41q^2+41q+1");
    return o;
}

Outcome euler_characteristics() {
    Outcome o;
    const auto chi = euler_chars(12);
    const auto table = hnum_stirling(12);
    for (int n = 1; n <= 12; ++n)
        if (chi.at(n) != table.hnum.at(n).eval(Rational(1))) o.fail("chi_" + std::to_string(n) + " differs from H(1)");
    const long spot[] = {1, 2, 10, 84};
    for (int n = 2; n <= 5; ++n)
        if (chi.at(n) != spot[n - 2]) o.fail("chi_" + std::to_string(n) + " = " + chi.at(n).get_str());
    return o;
}

Outcome m_validation() {
    Outcome o;
    const auto m = m_series(10);
    for (int n = 2; n <= 10; ++n) {
        Poly expected(1);
        for (int j = 2; j <= n - 1; ++j) expected *= Poly{-j, 1};
        const Poly got = m.component(n).coefficient(Partition::ones(n)) * Rational(factorial(static_cast<unsigned>(n)));
        if (!(got == expected)) o.fail("n=" + std::to_string(n) + ": " + got.to_string());
    }
    return o;
}

Outcome level_tree_census() {
    Outcome o;
    const std::uint64_t small[] = {1, 4, 32};
    for (int n = 2; n <= 7; ++n) {
        const auto census = strata_census(n, false);
        if (census.total != chain_count(n)) o.fail("count differs from chain count at n=" + std::to_string(n));
        if (n <= 4 && census.total != small[n - 2]) o.fail("count at n=" + std::to_string(n) + " is " + std::to_string(census.total));
    }
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_level_trees(n)) {
            if (t.length() == 1) continue;
            if (unprune(prune(t)).canonical_key() != t.canonical_key()) o.fail("round trip fails at n=" + std::to_string(n));
        }
    return o;
}

Outcome structural_properties() {
    Outcome o;
    const auto b = solve_b(10);
    const auto table = hnum_from_equivariant(b);
    for (int n = 2; n <= 10; ++n) {
        const auto& h = table.hnum.at(n);
        if (h.degree() != n - 2 || !is_monic(h) || !is_palindromic(h) || !is_unimodal(h))
            o.fail("H_" + std::to_string(n) + "^num = " + h.to_string());
    }
    for (int n = 2; n <= 8; ++n) {
        for (const auto& [lam, c] : schur_expand(b.component(n), n))
            if (!has_nonnegative_integer_coefficients(c)) o.fail("Schur coefficient " + lam.to_string());
        for (const auto& [mu, v] : character_values(b.component(n), n))
            if (!has_nonnegative_integer_coefficients(v)) o.fail("character value at " + mu.to_string());
    }
    return o;
}

Outcome combinatorics_identities() {
    Outcome o;
    const StirlingCache cache(12);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer sum = 0;
            for (int j = k; j <= n; ++j) sum += cache.first(n, j) * cache.second(j, k);
            if (sum != (n == k ? 1 : 0)) o.fail("inversion at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (!stirling_bell_identity_check(n, k, cache))
                o.fail("Stirling-Bell identity at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (k < n && bell_omega_limit(n, k) != bell_omega_limit_closed_form(n, k))
                o.fail("limit at (" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    return o;
}

Outcome plethysm_laws() {
    Outcome o;
    const int deg = 8;
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_series(rng, deg, 0, 6), g = random_series(rng, deg, 0, 6);
        const auto h = random_inner_series(rng, deg, 3), k = random_inner_series(rng, deg, 2);
        if (!(plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h))) o.fail("additivity");
        if (!(plethysm(f * g, h) == plethysm(f, h) * plethysm(g, h))) o.fail("multiplicativity");
        if (!(plethysm(plethysm(f, k), h) == plethysm(f, plethysm(k, h)))) o.fail("associativity");
        if (compose_power_series(rk_series(f), rk_series(h), deg) != rk_series(plethysm(f, h))) o.fail("rk compatibility");
    }
    for (int a = 1; a <= deg; ++a)
        for (int b = 1; a * b <= deg; ++b)
            if (!(plethysm(SymSeries::p(Partition{a}, deg), SymSeries::p(Partition{b}, deg)) == SymSeries::p(Partition{a * b}, deg)))
                o.fail("p_" + std::to_string(a) + " o p_" + std::to_string(b));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 equivariant table n=2..6", 10, table_reproduction},
        {"2 functional equation through degree 10", 120, functional_equation},
        {"3 numeric routes agree", 300, route_agreement},
        {"4 Euler characteristics n<=12", 1, euler_characteristics},
        {"5 M series p_(1^n) coefficients n<=10", 60, m_validation},
        {"6 level-tree census and pruning", 300, level_tree_census},
        {"7 structural properties", 120, structural_properties},
        {"8 combinatorial identities n<=12", 1, combinatorics_identities},
        {"9 plethysm laws through degree 8", 300, plethysm_laws},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s");
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "PASS " : "FAIL ") << c.name << " (" << secs << " s)";
        if (!o.passed) std::cout << ": " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
