#pragma once

#include <braidchow/rational.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidchow {

/// Integer partition stored as weakly decreasing positive parts.
///
/// Ordering: by size, then reverse lexicographic on the parts, so the
/// partitions of 3 sort as (3) < (2,1) < (1,1,1).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        if (!parts_.empty() && parts_.back() < 1)
            throw std::invalid_argument("partition parts must be positive");
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Builds a partition from an already-sorted part list without re-sorting.
    static Partition from_sorted(std::vector<int> parts) {
        Partition p;
        p.parts_ = std::move(parts);
        p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
        return p;
    }

    static Partition ones(int n) { return from_sorted(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// m[d] = number of parts equal to d, indexed 0..largest.
    std::vector<int> multiplicities() const {
        std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
        for (int p : parts_) ++m[static_cast<std::size_t>(p)];
        return m;
    }

    /// Multiset union of parts.
    Partition concat(const Partition& o) const {
        std::vector<int> merged;
        merged.reserve(parts_.size() + o.parts_.size());
        std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(merged),
                   std::greater<>());
        return from_sorted(std::move(merged));
    }

    /// Every part multiplied by k.
    Partition scaled(int k) const {
        std::vector<int> out(parts_);
        for (int& p : out) p *= k;
        return from_sorted(std::move(out));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return b.parts_ <=> a.parts_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Centralizer order z = prod_d d^{m_d} m_d!.
inline Integer z_lambda(const Partition& p) {
    Integer z = 1;
    auto m = p.multiplicities();
    for (std::size_t d = 1; d < m.size(); ++d) {
        if (m[d] == 0) continue;
        Integer dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, static_cast<unsigned long>(m[d]));
        z *= dp * factorial(static_cast<unsigned>(m[d]));
    }
    return z;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_sorted(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// Partitions of n with exactly k parts, ordered by increasing largest part.
inline std::vector<Partition> partitions_with_length(int n, int k) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.length() == k) out.push_back(p);
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return a.largest() < b.largest(); });
    return out;
}

}  // namespace braidchow
