#pragma once

// Irreducible characters of S_n by the Murnaghan-Nakayama rule, and the
// Schur expansion of homogeneous symmetric functions they enable.

#include <braidchow/partition.hpp>
#include <braidchow/symseries.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidchow {

/// chi^lambda(mu) for all lambda, mu |- n.  Rows are irreducible labels,
/// columns are cycle types, both in partitions_of(n) order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> labels;
    std::vector<std::vector<std::int64_t>> values;

    std::size_t index_of(const Partition& p) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == p) return i;
        throw std::out_of_range("CharacterTable: partition " + p.to_string() + " is not of size " +
                                std::to_string(n));
    }
    std::int64_t operator()(const Partition& irrep, const Partition& cycle_type) const {
        return values[index_of(irrep)][index_of(cycle_type)];
    }
};

namespace detail {

/// Murnaghan-Nakayama on beta-sets.  A rim hook of length r corresponds to
/// moving one bead from position b to b - r; the sign is (-1)^(beads jumped).
class MurnaghanNakayama {
public:
    std::int64_t value(const Partition& lambda, const Partition& mu) {
        std::vector<int> beads;
        const int len = lambda.length();
        for (int i = 0; i < len; ++i) beads.push_back(lambda.parts()[static_cast<std::size_t>(i)] + (len - 1 - i));
        return recurse(std::set<int>(beads.begin(), beads.end()), mu.parts(), 0);
    }

private:
    std::int64_t recurse(const std::set<int>& beads, const std::vector<int>& mu, std::size_t idx) {
        if (idx == mu.size()) return 1;
        auto key = std::make_pair(std::vector<int>(beads.begin(), beads.end()),
                                  std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(idx), mu.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int r = mu[idx];
        std::int64_t total = 0;
        for (int b : beads) {
            const int target = b - r;
            if (target < 0 || beads.count(target)) continue;
            int jumped = 0;
            for (int c : beads)
                if (c > target && c < b) ++jumped;
            std::set<int> next(beads);
            next.erase(b);
            next.insert(target);
            std::int64_t sub = recurse(next, mu, idx + 1);
            total += (jumped % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    // (bead positions, remaining cycle lengths) -> character value
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace detail

inline CharacterTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be positive");
    CharacterTable table;
    table.n = n;
    table.labels = partitions_of(n);
    detail::MurnaghanNakayama mn;
    for (const auto& lam : table.labels) {
        std::vector<std::int64_t> row;
        row.reserve(table.labels.size());
        for (const auto& mu : table.labels) row.push_back(mn.value(lam, mu));
        table.values.push_back(std::move(row));
    }
    return table;
}

/// Coefficients c_lambda(t) with f = sum c_lambda s_lambda, via
/// <f, s_lambda> = sum_mu f_mu chi^lambda(mu).  Zero coefficients are omitted.
inline std::map<Partition, Poly> schur_expand(const SymSeries& f, const CharacterTable& table) {
    if (!f.is_homogeneous(table.n))
        throw std::invalid_argument("schur_expand: input is not homogeneous of degree " + std::to_string(table.n));
    std::map<Partition, Poly> out;
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
        Poly c;
        for (std::size_t j = 0; j < table.labels.size(); ++j) {
            const auto chi = table.values[i][j];
            if (chi == 0) continue;
            Poly fj = f.coefficient(table.labels[j]);
            if (!fj.is_zero()) c += fj * Rational(static_cast<long>(chi));
        }
        if (!c.is_zero()) out.emplace(table.labels[i], std::move(c));
    }
    return out;
}

inline std::map<Partition, Poly> schur_expand(const SymSeries& f, int n) { return schur_expand(f, character_table(n)); }

/// Inverse of schur_expand: sum_lambda c_lambda s_lambda in the p-basis.
inline SymSeries schur_to_p(const std::map<Partition, Poly>& coeffs, const CharacterTable& table, int n_max) {
    SymSeries out(n_max);
    for (const auto& [lam, c] : coeffs) {
        const auto i = table.index_of(lam);
        for (std::size_t j = 0; j < table.labels.size(); ++j) {
            const auto chi = table.values[i][j];
            if (chi == 0) continue;
            out.add_term(table.labels[j], c * (Rational(static_cast<long>(chi)) / Rational(z_lambda(table.labels[j]))));
        }
    }
    return out;
}

/// Values of the graded class function with Frobenius characteristic f:
/// cycle type mu -> z_mu * f_mu(t).
inline std::map<Partition, Poly> character_values(const SymSeries& f, int n) {
    std::map<Partition, Poly> out;
    for (const auto& mu : partitions_of(n)) out.emplace(mu, f.coefficient(mu) * Rational(z_lambda(mu)));
    return out;
}

}  // namespace braidchow
