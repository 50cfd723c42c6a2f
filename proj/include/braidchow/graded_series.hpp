#pragma once

#include <braidchow/symseries.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidchow {

/// A series split into homogeneous pieces: component(n) holds only
/// degree-n terms, for 0 <= n <= n_max.
class GradedSeries {
public:
    GradedSeries() = default;
    explicit GradedSeries(int n_max) : n_max_(n_max) {
        for (int n = 0; n <= n_max; ++n) components_.emplace_back(n_max);
    }

    static GradedSeries from_series(const SymSeries& s) {
        GradedSeries g(s.n_max());
        for (const auto& [lam, c] : s.terms()) g.components_[static_cast<std::size_t>(lam.size())].add_term(lam, c);
        return g;
    }

    int n_max() const { return n_max_; }

    const SymSeries& component(int n) const {
        check(n);
        return components_[static_cast<std::size_t>(n)];
    }

    void set_component(int n, SymSeries s) {
        check(n);
        if (!s.is_homogeneous(n))
            throw std::invalid_argument("GradedSeries: component " + std::to_string(n) + " is not homogeneous");
        components_[static_cast<std::size_t>(n)] = s.with_n_max(n_max_);
    }

    SymSeries total() const {
        SymSeries out(n_max_);
        for (const auto& c : components_) out += c;
        return out;
    }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.n_max_ == b.n_max_ && a.components_ == b.components_;
    }

private:
    void check(int n) const {
        if (n < 0 || n > n_max_)
            throw std::out_of_range("GradedSeries: degree " + std::to_string(n) + " outside 0.." + std::to_string(n_max_));
    }

    int n_max_ = 0;
    std::vector<SymSeries> components_;
};

}  // namespace braidchow
