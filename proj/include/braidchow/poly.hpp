#pragma once

// Dense univariate polynomials with exact rational coefficients.
//
// The same type carries the Chow variable t and the point-count variable q;
// the two are identified throughout the library.

#include <braidchow/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace braidchow {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT: implicit scalar embedding
    Poly(long constant) : coeffs_{Rational(constant)} { trim(); }   // NOLINT
    Poly(std::initializer_list<long> cs) {
        coeffs_.reserve(cs.size());
        for (long c : cs) coeffs_.emplace_back(c);
        trim();
    }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly monomial(const Rational& c, std::size_t exp) {
        std::vector<Rational> cs(exp + 1);
        cs[exp] = c;
        return Poly(std::move(cs));
    }
    static Poly t() { return monomial(Rational(1), 1); }
    /// t - root
    static Poly linear_factor(const Rational& root) { return Poly(std::vector<Rational>{-root, Rational(1)}); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        Rational tmp;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                out[i + j] += tmp;
            }
        }
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly pow(unsigned e) const {
        Poly result(1), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(t) -> p(t^k)
    Poly substitute_power(unsigned k) const {
        if (is_zero() || k == 1) return *this;
        std::vector<Rational> out((coeffs_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
        return Poly(std::move(out));
    }

    /// p(t) -> p(t + a)
    Poly shift(const Rational& a) const {
        Poly out;
        Poly lin = Poly(std::vector<Rational>{a, Rational(1)});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + Poly(*it);
        return out;
    }

    /// Synthetic division by (t - root): returns {quotient, remainder}.
    std::pair<Poly, Rational> divide_by_linear(const Rational& root) const {
        if (is_zero()) return {Poly{}, Rational(0)};
        std::vector<Rational> q(coeffs_.size() - 1);
        Rational carry;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            carry = carry * root + coeffs_[i];
            if (i > 0) {
                q[i - 1] = carry;
            }
        }
        return {Poly(std::move(q)), carry};
    }

    /// Quotient by (t - root); throws divisibility_error on a nonzero remainder.
    Poly exact_divide_linear(const Rational& root, const char* what = "polynomial") const {
        auto [q, r] = divide_by_linear(root);
        if (r != 0)
            throw divisibility_error(std::string(what) + ": nonzero remainder " + r.get_str() +
                                     " dividing by (t - " + root.get_str() + ")");
        return q;
    }

    /// Long division by a monic-or-not divisor; returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = coeffs_;
        if (rem.size() < d.coeffs_.size()) return {Poly{}, *this};
        std::vector<Rational> q(rem.size() - d.coeffs_.size() + 1);
        for (std::size_t i = q.size(); i-- > 0;) {
            Rational f = rem[i + d.coeffs_.size() - 1] / d.leading();
            q[i] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[i + j] -= f * d.coeffs_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }

    bool has_integer_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
    }

    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            bool unit = mag == 1 && i > 0;
            if (!unit) out += mag.get_str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Coefficients read the same in both directions.
inline bool is_palindromic(const Poly& p) {
    const auto& c = p.coefficients();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// Weakly increasing then weakly decreasing.
inline bool is_unimodal(const Poly& p) {
    const auto& c = p.coefficients();
    std::size_t i = 1;
    while (i < c.size() && c[i - 1] <= c[i]) ++i;
    while (i < c.size() && c[i - 1] >= c[i]) ++i;
    return i >= c.size();
}

inline bool is_monic(const Poly& p) { return !p.is_zero() && p.leading() == 1; }

/// Every coefficient is a nonnegative integer.
inline bool has_nonnegative_integer_coefficients(const Poly& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& c) { return is_integer(c) && c >= 0; });
}

}  // namespace braidchow
