#pragma once

// Brute-force oracles used only by the test suites.  Nothing here calls the
// library code paths it is compared against.

#include <braidchow/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using braidchow::Integer;
using braidchow::Rational;

/// Cycle type of a permutation of {0..n-1}, parts decreasing.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do visit(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
}

/// (1/n!) sum_tau value(tau) p_{cycle type}, keyed by cycle type.
inline std::map<std::vector<int>, Rational> frobenius_by_permutations(
    int n, const std::function<Rational(const std::vector<int>&)>& value) {
    std::map<std::vector<int>, Rational> out;
    Integer count = 0;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        out[cycle_type(perm)] += value(perm);
        ++count;
    });
    for (auto it = out.begin(); it != out.end();) {
        it->second /= Rational(count);
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

/// Number of set partitions of an n-set into k blocks, by enumerating
/// block assignments of every element.
inline std::int64_t set_partitions_with_blocks(int n, int k) {
    std::int64_t count = 0;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used == k) ++count;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    rec(0, 0);
    return count;
}

/// Coefficients of x(x-1)...(x-n+1), constant term first.
inline std::vector<std::int64_t> falling_factorial_coeffs(int n) {
    std::vector<std::int64_t> c{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= static_cast<std::int64_t>(i) * c[j];
        }
        c = next;
    }
    return c;
}

/// n! / prod(hook lengths)
inline Integer hook_length_dimension(const std::vector<int>& lambda) {
    Integer n = 0, hooks = 1;
    for (int p : lambda) n += p;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1, leg = 0;
            for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
            hooks *= arm + leg + 1;
        }
    return braidchow::factorial(static_cast<unsigned>(n.get_ui())) / hooks;
}

}  // namespace oracle
