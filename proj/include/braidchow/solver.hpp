#pragma once

// Equivariant Chow polynomials of braid matroids.
//
// B = sum_{n>=2} H_n(t) is the unique solution of
//
//     (h_1 + B) o (h_1 + (t-1) M) = h_1 + t B.
//
// Writing G = h_1 + (t-1) M, the degree-n part reads
//
//     (t-1) B_n = (t-1) M_n + sum_{k=2}^{n-1} [B_k o G]_n,
//
// so B is solved degree by degree with an exact division by (t-1) at each
// step.  A nonzero remainder means the input is not a valid M.
//
// The numeric shadows H_n^num are produced here by four routes: the rank
// specialisation of B, the Stirling recursion, the Bell-polynomial form, and
// explicit summation over the partition lattice.

#include <braidchow/character_table.hpp>
#include <braidchow/combinatorics.hpp>
#include <braidchow/graded_series.hpp>
#include <braidchow/moduli.hpp>
#include <braidchow/symseries.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidchow {

/// Coefficientwise exact division of every t-polynomial by (t - 1).
inline SymSeries divide_by_t_minus_one(const SymSeries& s, const std::string& what) {
    SymSeries out(s.n_max());
    for (const auto& [lam, c] : s.terms()) {
        auto [q, r] = c.divide_by_linear(Rational(1));
        if (r != 0)
            throw divisibility_error(what + ": coefficient of p" + lam.to_string() + " leaves remainder " + r.get_str() +
                                     " under division by (t - 1)");
        out.add_term(lam, q);
    }
    return out;
}

/// G = h_1 + (t - 1) M through degree n_max.
inline SymSeries inner_argument(const GradedSeries& m, int n_max) {
    SymSeries g = SymSeries::p(Partition{1}, n_max);
    g += m.total().with_n_max(n_max) * Poly{-1, 1};
    return g;
}

inline GradedSeries solve_b(const GradedSeries& m, int n_max) {
    if (n_max < 2) throw std::invalid_argument("solve_b: n_max must be at least 2");
    if (m.n_max() < n_max)
        throw std::invalid_argument("solve_b: M is known only through degree " + std::to_string(m.n_max()));
    const Poly t_minus_one{-1, 1};
    const SymSeries g = inner_argument(m, n_max);

    // Right-hand side known so far: (t-1) M + sum of B_k o G for solved k.
    SymSeries known = m.total().with_n_max(n_max) * t_minus_one;
    GradedSeries b(n_max);
    for (int n = 2; n <= n_max; ++n) {
        SymSeries bn = divide_by_t_minus_one(known.homogeneous(n), "degree " + std::to_string(n) + " of the solver");
        b.set_component(n, bn);
        if (n < n_max) known += plethysm(bn, g);
    }
    return b;
}

inline GradedSeries solve_b(int n_max) { return solve_b(m_series(n_max), n_max); }

/// Recomputes both sides of the functional equation from scratch.
inline bool verify_functional_equation(const GradedSeries& b, const GradedSeries& m) {
    const int n_max = std::min(b.n_max(), m.n_max());
    const SymSeries h1 = SymSeries::p(Partition{1}, n_max);
    const SymSeries bt = b.total().with_n_max(n_max);
    SymSeries lhs = plethysm(h1 + bt, inner_argument(m, n_max));
    SymSeries rhs = h1 + bt * Poly::t();
    return lhs == rhs;
}

/// Layers B^(1) = M, B^(k+1) = (B^(k) o G - B^(k)) / (t - 1), until a layer
/// vanishes through n_max.  Layer k collects level trees with k levels.
inline std::vector<GradedSeries> level_filtration(const GradedSeries& m, int n_max) {
    if (m.n_max() < n_max)
        throw std::invalid_argument("level_filtration: M is known only through degree " + std::to_string(m.n_max()));
    const SymSeries g = inner_argument(m, n_max);
    std::vector<GradedSeries> layers;
    SymSeries layer = m.total().with_n_max(n_max);
    while (!layer.is_zero()) {
        layers.push_back(GradedSeries::from_series(layer));
        SymSeries next = plethysm(layer, g) - layer;
        layer = divide_by_t_minus_one(next, "level layer " + std::to_string(layers.size() + 1));
    }
    return layers;
}

/// Schur coefficients of H_n.
inline std::map<Partition, Poly> equivariant_table(const GradedSeries& b, int n) {
    if (n < 2 || n > b.n_max())
        throw std::invalid_argument("equivariant_table: n=" + std::to_string(n) + " outside 2.." + std::to_string(b.n_max()));
    return schur_expand(b.component(n), n);
}

/// H_n^num for n = 1..n_max together with chi_n = H_n^num(1).
struct NumericTable {
    int n_max = 0;
    std::map<int, Poly> hnum;
    std::map<int, Integer> chi;

    friend bool operator==(const NumericTable& a, const NumericTable& b) {
        return a.n_max == b.n_max && a.hnum == b.hnum && a.chi == b.chi;
    }
};

namespace detail {

inline NumericTable finish_table(int n_max, std::map<int, Poly> hnum) {
    NumericTable table;
    table.n_max = n_max;
    for (auto& [n, h] : hnum) {
        Rational at_one = h.eval(Rational(1));
        if (!is_integer(at_one)) throw std::logic_error("H_" + std::to_string(n) + "(1) is not an integer");
        table.chi.emplace(n, at_one.get_num());
    }
    table.hnum = std::move(hnum);
    return table;
}

/// Runs (t-1) H_n = sum_{k<n} H_k * weight(n, k), seeded with H_1 = 1.
template <class Weight>
NumericTable numeric_recursion(int n_max, const char* route, Weight&& weight) {
    if (n_max < 1) throw std::invalid_argument(std::string(route) + ": n_max must be positive");
    std::map<int, Poly> hnum{{1, Poly(1)}};
    for (int n = 2; n <= n_max; ++n) {
        Poly rhs;
        for (int k = 1; k < n; ++k) rhs += hnum[k] * weight(n, k);
        hnum[n] = rhs.exact_divide_linear(Rational(1), route);
    }
    return finish_table(n_max, std::move(hnum));
}

}  // namespace detail

/// Stirling form: weight(n,k) = sum_{j=k}^n s(n,j) S(j,k) t^{j-k}.
inline NumericTable hnum_stirling(int n_max, const StirlingCache& stirling) {
    return detail::numeric_recursion(n_max, "hnum_stirling", [&](int n, int k) {
        Poly w;
        for (int j = k; j <= n; ++j)
            w += Poly::monomial(Rational(stirling.first(n, j) * stirling.second(j, k)), static_cast<std::size_t>(j - k));
        return w;
    });
}
inline NumericTable hnum_stirling(int n_max) { return hnum_stirling(n_max, StirlingCache(n_max)); }

/// Bell form: weight(n,k) = Bell_{n,k}(omega_1(t-1), ..., omega_{n-k+1}(t-1)).
inline NumericTable hnum_bell(int n_max) {
    auto xs = shifted_omegas(n_max);
    std::vector<Poly> args(xs.begin() + 1, xs.end());
    return detail::numeric_recursion(n_max, "hnum_bell", [&](int n, int k) { return bell_partial(n, k, args); });
}

/// Lattice form: weight(n,k) = sum over set partitions of [n] into k blocks
/// of prod_j omega_{|B_j|}(t-1), enumerated explicitly.
inline NumericTable hnum_lattice(int n_max) {
    if (n_max > 12) throw std::invalid_argument("hnum_lattice: set-partition enumeration is capped at n = 12");
    const auto xs = shifted_omegas(n_max);
    std::map<std::pair<int, int>, Poly> weights;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<int> sizes;
        for_each_set_partition(n, [&](const std::vector<int>& block, int count) {
            if (count == n) return;  // k = n does not enter the recursion
            sizes.assign(static_cast<std::size_t>(count), 0);
            for (int b : block) ++sizes[static_cast<std::size_t>(b)];
            Poly prod(1);
            for (int s : sizes)
                if (s > 1) prod *= xs[static_cast<std::size_t>(s)];
            weights[{n, count}] += prod;
        });
    }
    return detail::numeric_recursion(n_max, "hnum_lattice", [&](int n, int k) { return weights[{n, k}]; });
}

/// Dimension polynomials of the equivariant solution, with H_1^num = 1.
inline NumericTable hnum_from_equivariant(const GradedSeries& b) {
    std::map<int, Poly> hnum{{1, Poly(1)}};
    for (int n = 2; n <= b.n_max(); ++n) {
        auto dims = rk(b.component(n));
        auto it = dims.find(n);
        hnum[n] = it == dims.end() ? Poly{} : it->second;
    }
    return detail::finish_table(b.n_max(), std::move(hnum));
}

/// chi_1 = 1, chi_n = sum_{k=1}^{n-1} chi_k C(n,k-1) (n-k-1)! (-1)^{n-k-1}.
inline std::map<int, Integer> euler_chars(int n_max) {
    std::map<int, Integer> chi{{1, Integer(1)}};
    for (int n = 2; n <= n_max; ++n) {
        Integer sum = 0;
        for (int k = 1; k < n; ++k) {
            Integer term = chi[k] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - 1)) *
                           factorial(static_cast<unsigned>(n - k - 1));
            sum += ((n - k - 1) % 2 == 0) ? term : Integer(-term);
        }
        chi[n] = sum;
    }
    return chi;
}

}  // namespace braidchow
