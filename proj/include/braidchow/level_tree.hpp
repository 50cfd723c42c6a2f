#pragma once

// Rooted stable level trees on markings {0, 1, ..., n}, their enumeration
// by un-pruning, and the stratum-by-stratum E-polynomial of the
// compactification they stratify.

#include <braidchow/combinatorics.hpp>
#include <braidchow/poly.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidchow {

/// Marking 0 sits on the root (vertex 0).  All other markings are positive
/// labels.  Levels are surjective onto 0..length-1 and strictly increase
/// from parent to child.
struct LevelTree {
    struct Vertex {
        int parent = -1;  // -1 for the root
        int level = 0;
        std::vector<int> markings;  // sorted; the root's includes 0
    };

    std::vector<Vertex> vertices;

    int length() const {
        int top = 0;
        for (const auto& v : vertices) top = std::max(top, v.level);
        return top + 1;
    }

    std::vector<int> children_count() const {
        std::vector<int> c(vertices.size(), 0);
        for (const auto& v : vertices)
            if (v.parent >= 0) ++c[static_cast<std::size_t>(v.parent)];
        return c;
    }

    /// deg(v) = val(v) + |m^{-1}(v)|
    std::vector<int> degrees() const {
        auto deg = children_count();
        for (std::size_t i = 0; i < vertices.size(); ++i)
            deg[i] += (vertices[i].parent >= 0 ? 1 : 0) + static_cast<int>(vertices[i].markings.size());
        return deg;
    }

    /// Non-root markings in increasing order.
    std::vector<int> labels() const {
        std::vector<int> out;
        for (const auto& v : vertices)
            for (int m : v.markings)
                if (m != 0) out.push_back(m);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Throws std::logic_error when any structural invariant fails.
    void validate() const {
        if (vertices.empty() || vertices[0].parent != -1 || vertices[0].level != 0)
            throw std::logic_error("level tree: vertex 0 must be the level-0 root");
        if (std::find(vertices[0].markings.begin(), vertices[0].markings.end(), 0) == vertices[0].markings.end())
            throw std::logic_error("level tree: marking 0 must be on the root");
        std::vector<bool> level_used(static_cast<std::size_t>(length()), false);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto& v = vertices[i];
            if (i > 0) {
                if (v.parent < 0 || static_cast<std::size_t>(v.parent) >= i)
                    throw std::logic_error("level tree: parents must precede children");
                if (vertices[static_cast<std::size_t>(v.parent)].level >= v.level)
                    throw std::logic_error("level tree: level does not increase along an edge");
            }
            level_used[static_cast<std::size_t>(v.level)] = true;
        }
        if (std::find(level_used.begin(), level_used.end(), false) != level_used.end())
            throw std::logic_error("level tree: level map is not surjective");
        for (int d : degrees())
            if (d < 3) throw std::logic_error("level tree: unstable vertex");
        std::vector<int> all;
        for (const auto& v : vertices) all.insert(all.end(), v.markings.begin(), v.markings.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::logic_error("level tree: repeated marking");
    }

    /// Isomorphism-invariant key: sorted (labels below v, level(v)) pairs.
    /// Stability makes these subtree label sets distinct, and they determine
    /// the tree.
    std::vector<std::pair<std::vector<int>, int>> canonical_key() const {
        std::vector<std::vector<int>> below(vertices.size());
        for (std::size_t i = vertices.size(); i-- > 0;) {
            for (int m : vertices[i].markings)
                if (m != 0) below[i].push_back(m);
            if (vertices[i].parent >= 0) {
                auto& up = below[static_cast<std::size_t>(vertices[i].parent)];
                up.insert(up.end(), below[i].begin(), below[i].end());
            }
        }
        std::vector<std::pair<std::vector<int>, int>> key;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::sort(below[i].begin(), below[i].end());
            key.emplace_back(std::move(below[i]), vertices[i].level);
        }
        std::sort(key.begin(), key.end());
        return key;
    }
};

namespace detail {

/// Visits every subset-with-blocks choice: a nonempty family of disjoint
/// blocks of size >= 2 drawn from `labels`.  `free` receives the unused labels.
inline void for_each_top_blocks(const std::vector<int>& labels,
                                const std::function<void(const std::vector<int>& free,
                                                         const std::vector<std::vector<int>>& blocks)>& visit) {
    const std::size_t n = labels.size();
    std::vector<int> free, chosen;
    std::vector<std::vector<int>> blocks;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        free.clear();
        chosen.clear();
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? chosen : free).push_back(labels[i]);
        for_each_set_partition(static_cast<int>(chosen.size()), [&](const std::vector<int>& block, int count) {
            blocks.assign(static_cast<std::size_t>(count), {});
            for (std::size_t i = 0; i < block.size(); ++i)
                blocks[static_cast<std::size_t>(block[i])].push_back(chosen[i]);
            for (const auto& b : blocks)
                if (b.size() < 2) return;
            visit(free, blocks);
        });
    }
}

inline void enumerate_level_trees(const std::vector<int>& labels, int& next_placeholder,
                                  const std::function<void(const LevelTree&)>& visit) {
    if (labels.size() < 2) return;
    {
        LevelTree root;
        LevelTree::Vertex v;
        v.markings.push_back(0);
        v.markings.insert(v.markings.end(), labels.begin(), labels.end());
        std::sort(v.markings.begin(), v.markings.end());
        root.vertices.push_back(std::move(v));
        visit(root);
    }
    for_each_top_blocks(labels, [&](const std::vector<int>& free, const std::vector<std::vector<int>>& blocks) {
        if (free.size() + blocks.size() < 2) return;
        std::vector<int> placeholders;
        for (std::size_t i = 0; i < blocks.size(); ++i) placeholders.push_back(next_placeholder++);
        std::vector<int> pruned_labels(free);
        pruned_labels.insert(pruned_labels.end(), placeholders.begin(), placeholders.end());
        enumerate_level_trees(pruned_labels, next_placeholder, [&](const LevelTree& pruned) {
            LevelTree tree = pruned;
            const int top = pruned.length();
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                for (std::size_t vi = 0; vi < tree.vertices.size(); ++vi) {
                    auto& marks = tree.vertices[vi].markings;
                    auto it = std::find(marks.begin(), marks.end(), placeholders[i]);
                    if (it == marks.end()) continue;
                    marks.erase(it);
                    LevelTree::Vertex child;
                    child.parent = static_cast<int>(vi);
                    child.level = top;
                    child.markings = blocks[i];
                    tree.vertices.push_back(std::move(child));
                    break;
                }
            }
            visit(tree);
        });
        next_placeholder -= static_cast<int>(blocks.size());
    });
}

}  // namespace detail

/// Streams every level tree on markings {0, ..., n} exactly once.
inline void for_each_level_tree(int n, const std::function<void(const LevelTree&)>& visit) {
    if (n < 2) throw std::invalid_argument("for_each_level_tree: n must be at least 2");
    if (n > 16) throw std::invalid_argument("for_each_level_tree: n too large to enumerate");
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    int next_placeholder = n + 1;
    detail::enumerate_level_trees(labels, next_placeholder, visit);
}

inline std::vector<LevelTree> enumerate_level_trees(int n) {
    std::vector<LevelTree> out;
    for_each_level_tree(n, [&](const LevelTree& t) { out.push_back(t); });
    return out;
}

/// A pruned tree on markings 1..m; subsets[j-1] is the set of original
/// labels that marking j stands for, in lexicographic order.
struct PrunedTree {
    LevelTree tree;
    std::vector<std::vector<int>> subsets;
};

/// Deletes every top-level vertex and replaces it with a marking.
inline PrunedTree prune(const LevelTree& t) {
    const int top = t.length() - 1;
    if (top == 0) throw std::invalid_argument("prune: a one-level tree has no pruning");
    std::vector<std::vector<int>> subsets;
    for (const auto& v : t.vertices) {
        if (v.level == top) {
            subsets.push_back(v.markings);
            continue;
        }
        for (int m : v.markings)
            if (m != 0) subsets.push_back({m});
    }
    std::sort(subsets.begin(), subsets.end());
    auto label_of = [&](const std::vector<int>& s) {
        return static_cast<int>(std::lower_bound(subsets.begin(), subsets.end(), s) - subsets.begin()) + 1;
    };

    PrunedTree out;
    out.subsets = subsets;
    std::vector<int> new_index(t.vertices.size(), -1);
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        const auto& v = t.vertices[i];
        if (v.level == top) continue;
        LevelTree::Vertex nv;
        nv.parent = v.parent < 0 ? -1 : new_index[static_cast<std::size_t>(v.parent)];
        nv.level = v.level;
        for (int m : v.markings) nv.markings.push_back(m == 0 ? 0 : label_of({m}));
        new_index[i] = static_cast<int>(out.tree.vertices.size());
        out.tree.vertices.push_back(std::move(nv));
    }
    for (const auto& v : t.vertices)
        if (v.level == top)
            out.tree.vertices[static_cast<std::size_t>(new_index[static_cast<std::size_t>(v.parent)])].markings.push_back(
                label_of(v.markings));
    for (auto& v : out.tree.vertices) std::sort(v.markings.begin(), v.markings.end());
    return out;
}

/// Inverse of prune: singleton subsets become markings again, larger ones
/// become new top-level vertices.
inline LevelTree unprune(const PrunedTree& p) {
    LevelTree out;
    const int top = p.tree.length();
    for (const auto& v : p.tree.vertices) {
        LevelTree::Vertex nv;
        nv.parent = v.parent;
        nv.level = v.level;
        out.vertices.push_back(std::move(nv));
    }
    for (std::size_t i = 0; i < p.tree.vertices.size(); ++i) {
        for (int m : p.tree.vertices[i].markings) {
            if (m == 0) {
                out.vertices[i].markings.push_back(0);
                continue;
            }
            const auto& subset = p.subsets.at(static_cast<std::size_t>(m - 1));
            if (subset.size() == 1) {
                out.vertices[i].markings.push_back(subset[0]);
            } else {
                LevelTree::Vertex child;
                child.parent = static_cast<int>(i);
                child.level = top;
                child.markings = subset;
                out.vertices.push_back(std::move(child));
            }
        }
        std::sort(out.vertices[i].markings.begin(), out.vertices[i].markings.end());
    }
    return out;
}

/// Points of M_{0,m} over F_q: prod_{i=2}^{m-2} (q - i).
inline Poly open_moduli_count(int m) {
    Poly out(1);
    for (int i = 2; i <= m - 2; ++i) out *= Poly::linear_factor(Rational(i));
    return out;
}

/// prod_j (q-1)^{|V_j|-1} prod_{v in V_j} P_open(deg v)
inline Poly stratum_epoly(const LevelTree& t) {
    const auto deg = t.degrees();
    std::vector<int> per_level(static_cast<std::size_t>(t.length()), 0);
    Poly out(1);
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        ++per_level[static_cast<std::size_t>(t.vertices[i].level)];
        out *= open_moduli_count(deg[i]);
    }
    const Poly q_minus_one{-1, 1};
    for (int c : per_level) out *= q_minus_one.pow(static_cast<unsigned>(c - 1));
    return out;
}

struct StrataCensus {
    int n = 0;
    std::map<int, std::uint64_t> count_by_length;
    std::uint64_t total = 0;
    Poly epoly;
};

inline StrataCensus strata_census(int n, bool with_epoly = true) {
    StrataCensus census;
    census.n = n;
    for_each_level_tree(n, [&](const LevelTree& t) {
        ++census.count_by_length[t.length()];
        ++census.total;
        if (with_epoly) census.epoly += stratum_epoly(t);
    });
    return census;
}

/// Sum of stratum E-polynomials over all level trees on n + 1 markings.
inline Poly epoly_bn(int n) { return strata_census(n).epoly; }

/// Chains in the proper part of the partition lattice of an n-set, indexed
/// by number of elements (entry 0 is the empty chain).
inline std::vector<std::uint64_t> chain_counts_by_length(int n) {
    if (n < 2) throw std::invalid_argument("chain_count: n must be at least 2");
    if (n > 9) throw std::invalid_argument("chain_count: n too large for the explicit lattice");
    std::vector<std::vector<int>> elems;
    for_each_set_partition(n, [&](const std::vector<int>& block, int count) {
        if (count > 1 && count < n) elems.push_back(block);
    });
    // x <= y when every block of x lies inside a block of y.
    auto refines = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> image(x.size(), -1);
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto& slot = image[static_cast<std::size_t>(x[i])];
            if (slot == -1)
                slot = y[i];
            else if (slot != y[i])
                return false;
        }
        return true;
    };
    auto blocks = [](const std::vector<int>& x) { return *std::max_element(x.begin(), x.end()) + 1; };
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) { return blocks(a) > blocks(b); });

    // chains_from[x][k]: chains with k elements whose minimum is x.
    const std::size_t m = elems.size();
    const std::size_t max_len = static_cast<std::size_t>(n) - 1;
    std::vector<std::vector<std::uint64_t>> chains_from(m, std::vector<std::uint64_t>(max_len, 0));
    for (std::size_t i = m; i-- > 0;) {
        chains_from[i][1] = 1;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (blocks(elems[j]) >= blocks(elems[i]) || !refines(elems[i], elems[j])) continue;
            for (std::size_t k = 1; k + 1 < max_len; ++k) chains_from[i][k + 1] += chains_from[j][k];
        }
    }
    std::vector<std::uint64_t> out(max_len, 0);
    out[0] = 1;
    for (const auto& row : chains_from)
        for (std::size_t k = 1; k < max_len; ++k) out[k] += row[k];
    return out;
}

inline std::uint64_t chain_count(int n) {
    auto by_length = chain_counts_by_length(n);
    return std::accumulate(by_length.begin(), by_length.end(), std::uint64_t{0});
}

}  // namespace braidchow
