#pragma once

// Stirling numbers, the omega_n polynomials, partial exponential Bell
// polynomials, and set-partition enumeration.

#include <braidchow/partition.hpp>
#include <braidchow/poly.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidchow {

/// Triangles of signed Stirling numbers of the first kind s(n,k) and
/// Stirling numbers of the second kind S(n,k) for 0 <= k <= n <= max_n.
class StirlingCache {
public:
    explicit StirlingCache(int max_n) : max_n_(max_n) {
        if (max_n < 0) throw std::invalid_argument("StirlingCache: negative bound");
        const auto rows = static_cast<std::size_t>(max_n) + 1;
        first_.assign(rows, std::vector<Integer>(rows));
        second_.assign(rows, std::vector<Integer>(rows));
        first_[0][0] = 1;
        second_[0][0] = 1;
        for (std::size_t n = 1; n < rows; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                // x^(n) falling = x^(n-1) falling * (x - (n-1))
                first_[n][k] = first_[n - 1][k - 1] - Integer(static_cast<unsigned long>(n - 1)) * first_[n - 1][k];
                second_[n][k] = second_[n - 1][k - 1] + Integer(static_cast<unsigned long>(k)) * second_[n - 1][k];
            }
        }
    }

    int max_n() const { return max_n_; }

    const Integer& first(int n, int k) const {
        check(n, k);
        return first_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    const Integer& second(int n, int k) const {
        check(n, k);
        return second_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// Returns a copy with s(n,k) replaced.  Used for fault-injection runs of
    /// the verification suite.
    StirlingCache with_first_override(int n, int k, Integer value) const {
        check(n, k);
        StirlingCache copy = *this;
        copy.first_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
        return copy;
    }

private:
    void check(int n, int k) const {
        if (n < 0 || k < 0 || k > n || n > max_n_)
            throw std::out_of_range("Stirling index (" + std::to_string(n) + "," + std::to_string(k) +
                                    ") outside 0 <= k <= n <= " + std::to_string(max_n_));
    }

    int max_n_;
    std::vector<std::vector<Integer>> first_;
    std::vector<std::vector<Integer>> second_;
};

inline Integer stirling_first_signed(int n, int k) { return StirlingCache(n < 0 ? 0 : n).first(n, k); }
inline Integer stirling_second(int n, int k) { return StirlingCache(n < 0 ? 0 : n).second(n, k); }

/// omega_1 = 1, omega_n = (t - n + 2) omega_{n-1}.
inline Poly omega(int n) {
    if (n < 1) throw std::invalid_argument("omega: n must be positive");
    Poly w(1);
    for (int m = 2; m <= n; ++m) w *= Poly::linear_factor(Rational(m - 2));
    return w;
}

/// omega_n(t - 1) for n = 1..max_n, index 0 unused.
inline std::vector<Poly> shifted_omegas(int max_n) {
    std::vector<Poly> out(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = omega(n).shift(Rational(-1));
    return out;
}

/// Partial exponential Bell polynomial Bell_{n,k}(x_1, ..., x_{n-k+1}).
/// xs[i - 1] holds x_i.
inline Poly bell_partial(int n, int k, const std::vector<Poly>& xs) {
    if (k < 1 || k > n) throw std::invalid_argument("bell_partial: need 1 <= k <= n");
    if (xs.size() < static_cast<std::size_t>(n - k + 1))
        throw std::invalid_argument("bell_partial: need " + std::to_string(n - k + 1) + " arguments, got " +
                                    std::to_string(xs.size()));
    const Rational nfact(factorial(static_cast<unsigned>(n)));
    Poly total;
    for (const auto& lam : partitions_with_length(n, k)) {
        auto m = lam.multiplicities();
        Poly term(1);
        Integer denom = 1;
        for (std::size_t i = 1; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            term *= xs[i - 1].pow(static_cast<unsigned>(m[i]));
            Integer ifact = factorial(static_cast<unsigned>(i));
            Integer ifact_pow;
            mpz_pow_ui(ifact_pow.get_mpz_t(), ifact.get_mpz_t(), static_cast<unsigned long>(m[i]));
            denom *= ifact_pow * factorial(static_cast<unsigned>(m[i]));
        }
        total += term * (nfact / Rational(denom));
    }
    return total;
}

/// Both sides of  t^k Bell_{n,k}(omega_1(t-1), ...) = sum_j s(n,j) S(j,k) t^j.
struct StirlingBellSides {
    Poly bell_side;
    Poly stirling_side;
};

inline StirlingBellSides stirling_bell_sides(int n, int k, const StirlingCache& stirling) {
    auto xs = shifted_omegas(n);
    std::vector<Poly> args(xs.begin() + 1, xs.end());
    StirlingBellSides out;
    out.bell_side = Poly::monomial(Rational(1), static_cast<std::size_t>(k)) * bell_partial(n, k, args);
    for (int j = k; j <= n; ++j)
        out.stirling_side += Poly::monomial(Rational(stirling.first(n, j) * stirling.second(j, k)), static_cast<std::size_t>(j));
    return out;
}

inline bool stirling_bell_identity_check(int n, int k, const StirlingCache& stirling) {
    auto sides = stirling_bell_sides(n, k, stirling);
    return sides.bell_side == sides.stirling_side;
}
inline bool stirling_bell_identity_check(int n, int k) { return stirling_bell_identity_check(n, k, StirlingCache(n)); }

/// lim_{t->1} Bell_{n,k}(omega_*(t-1)) / (t-1), by exact division then evaluation.
inline Rational bell_omega_limit(int n, int k) {
    auto xs = shifted_omegas(n);
    std::vector<Poly> args(xs.begin() + 1, xs.end());
    return bell_partial(n, k, args).exact_divide_linear(Rational(1), "Bell_{n,k}(omega(t-1))").eval(Rational(1));
}

/// Closed form n! (-1)^{n-k-1} (n-k-1)! / ((k-1)! (n-k+1)!), for 1 <= k <= n-1.
inline Rational bell_omega_limit_closed_form(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("bell_omega_limit_closed_form: need 1 <= k <= n-1");
    Rational value(factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - k - 1)));
    value /= Rational(factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(n - k + 1)));
    return ((n - k - 1) % 2 == 0) ? value : Rational(-value);
}

/// Visits every set partition of {0, ..., n-1} as a restricted growth
/// string: block[i] is the block index of element i, blocks numbered in
/// order of first appearance.  The second argument is the block count.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_set_partition: negative size");
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        visit(block, 0);
        return;
    }
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            visit(block, used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    block[0] = 0;
    rec(1, 1);
}

}  // namespace braidchow
