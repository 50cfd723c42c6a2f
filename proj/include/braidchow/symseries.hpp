#pragma once

// Truncated symmetric functions over Q[t] in the power-sum basis.
//
// A SymSeries is a finite sum  sum_lambda c_lambda(t) p_lambda  with every
// |lambda| <= n_max.  All operations discard symmetric-function degree above
// n_max eagerly; binary operations truncate to the smaller n_max.

#include <braidchow/partition.hpp>
#include <braidchow/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidchow {

class SymSeries {
public:
    using TermMap = std::map<Partition, Poly>;

    SymSeries() = default;
    explicit SymSeries(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("SymSeries: negative truncation degree");
    }

    /// c * p_lambda, or zero if |lambda| > n_max.
    static SymSeries term(const Partition& lambda, const Poly& c, int n_max) {
        SymSeries s(n_max);
        s.add_term(lambda, c);
        return s;
    }
    static SymSeries p(const Partition& lambda, int n_max) { return term(lambda, Poly(1), n_max); }
    static SymSeries one(int n_max) { return term(Partition{}, Poly(1), n_max); }

    int n_max() const { return n_max_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Poly coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Poly{} : it->second;
    }

    /// Adds c * p_lambda in place; silently drops degrees above n_max.
    void add_term(const Partition& lambda, const Poly& c) {
        if (lambda.size() > n_max_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Degree-n homogeneous part.
    SymSeries homogeneous(int n) const {
        SymSeries out(n_max_);
        for (const auto& [lam, c] : terms_)
            if (lam.size() == n) out.terms_.emplace(lam, c);
        return out;
    }

    SymSeries truncated(int n) const {
        SymSeries out(std::min(n, n_max_));
        for (const auto& [lam, c] : terms_)
            if (lam.size() <= out.n_max_) out.terms_.emplace(lam, c);
        return out;
    }

    /// Same terms, different truncation bound (terms above it are dropped).
    SymSeries with_n_max(int n) const {
        SymSeries out(n);
        for (const auto& [lam, c] : terms_)
            if (lam.size() <= n) out.terms_.emplace(lam, c);
        return out;
    }

    /// Smallest symmetric-function degree present, or -1 for zero.
    int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

    bool is_homogeneous(int n) const {
        return std::all_of(terms_.begin(), terms_.end(), [n](const auto& kv) { return kv.first.size() == n; });
    }

    /// Largest t-exponent over all coefficients, or -1 for zero.
    int t_degree() const {
        int d = -1;
        for (const auto& [lam, c] : terms_) d = std::max(d, c.degree());
        return d;
    }

    SymSeries& operator+=(const SymSeries& o) {
        n_max_ = std::min(n_max_, o.n_max_);
        drop_above(n_max_);
        for (const auto& [lam, c] : o.terms_) add_term(lam, c);
        return *this;
    }
    SymSeries& operator-=(const SymSeries& o) {
        n_max_ = std::min(n_max_, o.n_max_);
        drop_above(n_max_);
        for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
        return *this;
    }
    SymSeries& operator*=(const Poly& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [lam, coeff] : terms_) coeff *= c;
        return *this;
    }

    friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
    friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
    friend SymSeries operator-(SymSeries a) { return a *= Poly(-1); }
    friend SymSeries operator*(SymSeries a, const Poly& c) { return a *= c; }
    friend SymSeries operator*(const Poly& c, SymSeries a) { return a *= c; }

    friend SymSeries operator*(const SymSeries& a, const SymSeries& b) {
        SymSeries out(std::min(a.n_max_, b.n_max_));
        const int cap = out.n_max_;
        for (const auto& [la, ca] : a.terms_) {
            if (la.size() > cap) break;
            for (const auto& [lb, cb] : b.terms_) {
                if (la.size() + lb.size() > cap) break;
                out.add_term(la.concat(lb), ca * cb);
            }
        }
        return out;
    }

    /// Equality of terms; the truncation bounds are not compared.
    friend bool operator==(const SymSeries& a, const SymSeries& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [lam, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*p" + lam.to_string();
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const SymSeries& s) { return os << s.to_string(); }

private:
    void drop_above(int n) {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->first.size() > n ? terms_.erase(it) : std::next(it);
    }

    int n_max_ = 0;
    TermMap terms_;
};

/// Adams operation: p_d -> p_{kd}, t -> t^k.
inline SymSeries psi(int k, const SymSeries& f) {
    if (k < 1) throw std::invalid_argument("psi: k must be positive");
    SymSeries out(f.n_max());
    for (const auto& [lam, c] : f.terms()) {
        if (lam.size() * k > f.n_max()) break;
        out.add_term(lam.scaled(k), c.substitute_power(static_cast<unsigned>(k)));
    }
    return out;
}

/// Plethysm f o g.  The variable t is a scalar for the outer argument
/// (t o g = t), and p_k o g = psi_k(g).  g must have no degree-0 term.
inline SymSeries plethysm(const SymSeries& f, const SymSeries& g) {
    if (!g.is_zero() && g.min_degree() == 0)
        throw std::domain_error("plethysm: inner argument has a constant term");
    const int cap = std::min(f.n_max(), g.n_max());
    const SymSeries inner = g.truncated(cap);

    std::vector<SymSeries> adams(static_cast<std::size_t>(cap) + 1);
    for (int d = 1; d <= cap; ++d) adams[static_cast<std::size_t>(d)] = psi(d, inner);

    // p_lambda o g, built by peeling off the smallest part.
    std::map<Partition, SymSeries> memo;
    memo.emplace(Partition{}, SymSeries::one(cap));
    auto power_of = [&](auto&& self, const Partition& lam) -> const SymSeries& {
        if (auto it = memo.find(lam); it != memo.end()) return it->second;
        std::vector<int> rest(lam.parts().begin(), lam.parts().end() - 1);
        const SymSeries& prefix = self(self, Partition::from_sorted(std::move(rest)));
        SymSeries value = prefix * adams[static_cast<std::size_t>(lam.parts().back())];
        return memo.emplace(lam, std::move(value)).first->second;
    };

    SymSeries out(cap);
    for (const auto& [lam, c] : f.terms()) {
        if (lam.size() > cap) break;
        if (!inner.is_zero() && lam.size() * inner.min_degree() > cap) continue;
        out += power_of(power_of, lam) * c;
    }
    return out;
}

/// h_n = sum_{lambda |- n} p_lambda / z_lambda.
inline SymSeries homogeneous_h(int n, int n_max) {
    if (n < 1) throw std::invalid_argument("homogeneous_h: n must be positive");
    SymSeries out(n_max);
    for (const auto& lam : partitions_of(n)) out.add_term(lam, Poly(Rational(1) / Rational(z_lambda(lam))));
    return out;
}
inline SymSeries homogeneous_h(int n) { return homogeneous_h(n, n); }

/// e_n = sum_{lambda |- n} sign(lambda) p_lambda / z_lambda.
inline SymSeries elementary_e(int n, int n_max) {
    if (n < 1) throw std::invalid_argument("elementary_e: n must be positive");
    SymSeries out(n_max);
    for (const auto& lam : partitions_of(n)) {
        int sign = ((n - lam.length()) % 2 == 0) ? 1 : -1;
        out.add_term(lam, Poly(Rational(sign) / Rational(z_lambda(lam))));
    }
    return out;
}

/// Frobenius characteristic of a (graded) class function on S_n:
/// sum_{lambda |- n} chi(lambda) p_lambda / z_lambda.
inline SymSeries frobenius_from_character(int n, const std::map<Partition, Poly>& character, int n_max) {
    SymSeries out(n_max);
    for (const auto& lam : partitions_of(n)) {
        auto it = character.find(lam);
        if (it == character.end())
            throw std::invalid_argument("frobenius_from_character: missing cycle type " + lam.to_string());
        out.add_term(lam, it->second * (Rational(1) / Rational(z_lambda(lam))));
    }
    return out;
}
inline SymSeries frobenius_from_character(int n, const std::map<Partition, Poly>& character) {
    return frobenius_from_character(n, character, n);
}

/// Ordinary coefficients of the specialisation p_1 -> x, p_k -> 0 (k > 1):
/// entry n is the coefficient of x^n.
inline std::vector<Poly> rk_series(const SymSeries& f) {
    std::vector<Poly> out(static_cast<std::size_t>(f.n_max()) + 1);
    for (const auto& [lam, c] : f.terms())
        if (lam.empty() || lam.largest() == 1) out[static_cast<std::size_t>(lam.size())] = c;
    return out;
}

/// Dimension polynomials: n -> n! * [x^n] of the specialisation.  Only
/// nonzero entries are returned.
inline std::map<int, Poly> rk(const SymSeries& f) {
    std::map<int, Poly> out;
    auto series = rk_series(f);
    for (std::size_t n = 0; n < series.size(); ++n)
        if (!series[n].is_zero()) out.emplace(static_cast<int>(n), series[n] * Rational(factorial(static_cast<unsigned>(n))));
    return out;
}

/// Truncated composition a(b(x)) of power series with Q[t] coefficients.
/// The constant coefficient of b must vanish.
inline std::vector<Poly> compose_power_series(const std::vector<Poly>& a, const std::vector<Poly>& b, int n_max) {
    if (!b.empty() && !b[0].is_zero()) throw std::domain_error("compose_power_series: inner series has a constant term");
    auto mul = [n_max](const std::vector<Poly>& x, const std::vector<Poly>& y) {
        std::vector<Poly> out(static_cast<std::size_t>(n_max) + 1);
        for (std::size_t i = 0; i < x.size() && i <= static_cast<std::size_t>(n_max); ++i)
            for (std::size_t j = 0; j < y.size() && i + j <= static_cast<std::size_t>(n_max); ++j)
                out[i + j] += x[i] * y[j];
        return out;
    };
    std::vector<Poly> out(static_cast<std::size_t>(n_max) + 1);
    std::vector<Poly> power(static_cast<std::size_t>(n_max) + 1);
    power[0] = Poly(1);
    for (std::size_t k = 0; k < a.size() && k <= static_cast<std::size_t>(n_max); ++k) {
        for (std::size_t n = 0; n <= static_cast<std::size_t>(n_max); ++n) out[n] += a[k] * power[n];
        power = mul(power, b);
    }
    return out;
}

}  // namespace braidchow
