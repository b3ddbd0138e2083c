#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mz/errors.hpp"

namespace mz {

/// Erdos-Gallai test: a nonincreasing sequence of nonnegative integers is
/// the degree sequence of a simple graph iff its sum is even and for every
/// k = 1..n
///   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
inline bool is_graphical(const std::vector<int>& degrees) {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 0) {
            throw PreconditionError("is_graphical: degrees must be nonnegative");
        }
        if (i > 0 && degrees[i] > degrees[i - 1]) {
            throw PreconditionError("is_graphical: sequence must be nonincreasing");
        }
    }
    const std::size_t n = degrees.size();
    long long sum = 0;
    for (int d : degrees) sum += d;
    if (sum % 2 != 0) return false;

    long long head = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        head += degrees[k - 1];
        long long cap = static_cast<long long>(k) * static_cast<long long>(k - 1);
        for (std::size_t i = k; i < n; ++i) {
            cap += std::min<long long>(degrees[i], static_cast<long long>(k));
        }
        if (head > cap) return false;
    }
    return true;
}

/// A graphical, nonincreasing sequence of positive vertex degrees.
class DegreeSequence {
public:
    /// Sorts the input nonincreasing and validates graphicality.
    explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        if (degrees_.empty()) {
            throw PreconditionError("DegreeSequence: at least one degree required");
        }
        std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
        long long sum = 0;
        for (int d : degrees_) {
            if (d < 1) throw PreconditionError("DegreeSequence: vertex degrees must be >= 1");
            sum += d;
        }
        if (!is_graphical(degrees_)) {
            throw NotGraphicalError("DegreeSequence: sequence fails the Erdos-Gallai test");
        }
        edge_count_ = sum / 2;
    }

    std::size_t n() const { return degrees_.size(); }
    long long edge_count() const { return edge_count_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int operator[](std::size_t i) const { return degrees_[i]; }

    std::size_t pendant_count() const {
        return static_cast<std::size_t>(
            std::count(degrees_.begin(), degrees_.end(), 1));
    }

    long long sum_squares() const {
        long long acc = 0;
        for (int d : degrees_) acc += static_cast<long long>(d) * d;
        return acc;
    }

    long long sum_cubes() const {
        long long acc = 0;
        for (int d : degrees_) acc += static_cast<long long>(d) * d * d;
        return acc;
    }

    bool operator==(const DegreeSequence& other) const { return degrees_ == other.degrees_; }

private:
    std::vector<int> degrees_;
    long long edge_count_ = 0;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

inline bool edges_connect(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return true;
    UnionFind uf(n);
    for (const auto& [u, v] : edges) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    const std::size_t root = uf.find(0);
    for (std::size_t v = 1; v < n; ++v) {
        if (uf.find(v) != root) return false;
    }
    return true;
}

} // namespace detail

/// A simple, connected, undirected graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph(std::size_t n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n_ == 0) throw PreconditionError("SimpleGraph: at least one vertex required");
        edges_.reserve(edges.size());
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u == v) {
                throw PreconditionError("SimpleGraph: self-loop at vertex " + std::to_string(u));
            }
            if (u > v) std::swap(u, v);
            if (u < 0 || static_cast<std::size_t>(v) >= n_) {
                throw PreconditionError("SimpleGraph: edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") out of range");
            }
            if (!seen.insert({u, v}).second) {
                throw PreconditionError("SimpleGraph: duplicate edge (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
            }
            edges_.push_back({u, v});
        }
        std::sort(edges_.begin(), edges_.end());
        if (!detail::edges_connect(n_, edges_)) {
            throw PreconditionError("SimpleGraph: graph is not connected");
        }
    }

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> degrees() const {
        std::vector<int> deg(n_, 0);
        for (const auto& [u, v] : edges_) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        return deg;
    }

private:
    std::size_t n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Vertex degrees of g, sorted nonincreasing.
inline DegreeSequence degree_sequence_of(const SimpleGraph& g) {
    return DegreeSequence(g.degrees());
}

/// Second Zagreb index: the sum over edges of the product of the endpoint
/// degrees. Evaluated twice, once directly and once as
/// (sum over edges of (d_u + d_v)^2 - sum of d_i^3) / 2, and the two
/// evaluations are required to agree.
inline long long zagreb_exact(const SimpleGraph& g) {
    const std::vector<int> deg = g.degrees();
    long long products = 0;
    long long edge_sum_squares = 0;
    for (const auto& [u, v] : g.edges()) {
        const long long du = deg[static_cast<std::size_t>(u)];
        const long long dv = deg[static_cast<std::size_t>(v)];
        products += du * dv;
        edge_sum_squares += (du + dv) * (du + dv);
    }
    long long cubes = 0;
    for (int d : deg) cubes += static_cast<long long>(d) * d * d;
    if ((edge_sum_squares - cubes) % 2 != 0 ||
        (edge_sum_squares - cubes) / 2 != products) {
        throw InternalError("zagreb_exact: edge-product and edge-sum-square evaluations disagree");
    }
    return products;
}

/// All connected simple graphs on labelled vertices 0..n-1 whose vertex i
/// has degree seq[i]. Backtracks over ordered vertex pairs with
/// degree-remaining pruning; output is deduplicated by edge set, not by
/// isomorphism class. Refuses to run above `vertex_cap` vertices.
inline std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& seq,
                                                       std::size_t vertex_cap = 8) {
    const std::size_t n = seq.n();
    if (n > vertex_cap) {
        throw CapacityError("enumerate_realizations: " + std::to_string(n) +
                            " vertices exceeds the cap of " + std::to_string(vertex_cap));
    }
    std::vector<int> rem(seq.degrees());
    std::vector<std::pair<int, int>> edges;
    std::vector<SimpleGraph> out;

    // choose(v, start, need): pick `need` more neighbors for v among
    // start..n-1, then move on to vertex v+1.
    std::function<void(std::size_t)> place;
    std::function<void(std::size_t, std::size_t, int)> choose;

    place = [&](std::size_t v) {
        if (v == n) {
            if (detail::edges_connect(n, edges)) {
                out.emplace_back(n, edges);
            }
            return;
        }
        if (rem[v] == 0) {
            place(v + 1);
            return;
        }
        choose(v, v + 1, rem[v]);
    };

    choose = [&](std::size_t v, std::size_t start, int need) {
        if (need == 0) {
            place(v + 1);
            return;
        }
        // Not enough open stubs ahead of `start` to satisfy v.
        int open = 0;
        for (std::size_t w = start; w < n && open < need; ++w) {
            if (rem[w] > 0) ++open;
        }
        if (open < need) return;
        for (std::size_t w = start; w < n; ++w) {
            if (rem[w] == 0) continue;
            --rem[w];
            edges.push_back({static_cast<int>(v), static_cast<int>(w)});
            choose(v, w + 1, need - 1);
            edges.pop_back();
            ++rem[w];
        }
    };

    place(0);
    return out;
}

} // namespace mz
