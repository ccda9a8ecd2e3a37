#pragma once
// Moment graph of a Bruhat interval [y, w] in S_n: vertices are the interval, edges join
// z and t z for transpositions t = (a b) with both ends in the interval, labelled e_a - e_b.

#include <map>
#include <vector>

#include "klrtor/util/deadline.hpp"
#include "klrtor/weyl/permutation.hpp"

namespace klrtor::bmp {

struct MomentEdge {
    std::size_t lower = 0; // vertex index of the shorter endpoint
    std::size_t upper = 0;
    int a = 0; // label e_a - e_b, 1 <= a < b <= n
    int b = 0;

    /// Label as an exponent vector of length n.
    std::vector<int> label(std::size_t n) const {
        std::vector<int> v(n, 0);
        v[static_cast<std::size_t>(a - 1)] = 1;
        v[static_cast<std::size_t>(b - 1)] = -1;
        return v;
    }
};

class MomentGraph {
public:
    MomentGraph(const Permutation& y, const Permutation& w, const Deadline* deadline = nullptr) : bottom_(y), top_(w) {
        if (y.size() != w.size()) throw std::invalid_argument("moment_graph: size mismatch");
        if (!bruhat_leq(y, w)) throw DomainError("moment_graph: " + y.to_string() + " is not below " + w.to_string() + " in Bruhat order");
        vertices_ = bruhat_interval(y, w);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            index_.emplace(vertices_[i], i);
            lengths_.push_back(vertices_[i].length());
        }
        up_.resize(vertices_.size());
        down_.resize(vertices_.size());
        const int n = static_cast<int>(w.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            check_deadline(deadline);
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    auto it = index_.find(vertices_[i].left_transposition(a, b));
                    if (it == index_.end() || lengths_[it->second] <= lengths_[i]) continue;
                    up_[i].push_back(edges_.size());
                    down_[it->second].push_back(edges_.size());
                    edges_.push_back({i, it->second, a, b});
                }
        }
    }

    const Permutation& bottom() const { return bottom_; }
    const Permutation& top() const { return top_; }
    std::size_t rank() const { return top_.size(); }

    /// Vertices by length descending, ties lexicographic; index 0 is the top.
    const std::vector<Permutation>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    int length(std::size_t v) const { return lengths_[v]; }
    const std::vector<MomentEdge>& edges() const { return edges_; }
    const MomentEdge& edge(std::size_t e) const { return edges_[e]; }
    /// Edges whose lower end is v.
    const std::vector<std::size_t>& up_edges(std::size_t v) const { return up_[v]; }
    const std::vector<std::size_t>& down_edges(std::size_t v) const { return down_[v]; }

    bool contains(const Permutation& z) const { return index_.count(z) != 0; }
    std::size_t index_of(const Permutation& z) const {
        auto it = index_.find(z);
        if (it == index_.end()) throw std::invalid_argument("moment graph: " + z.to_string() + " is not a vertex");
        return it->second;
    }

private:
    Permutation bottom_, top_;
    std::vector<Permutation> vertices_;
    std::vector<int> lengths_;
    std::map<Permutation, std::size_t> index_;
    std::vector<MomentEdge> edges_;
    std::vector<std::vector<std::size_t>> up_, down_;
};

inline MomentGraph moment_graph(const Permutation& y, const Permutation& w, const Deadline* deadline = nullptr) {
    return MomentGraph(y, w, deadline);
}

} // namespace klrtor::bmp
