#pragma once
// Dynkin quivers, dimension vectors, the Euler form and positive roots.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klrtor {

/// Multiplicity per vertex; vertices are 1-based externally, 0-based in storage.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("DimVector: negative entry");
    }
    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    bool is_zero() const { return total() == 0; }

    /// Coordinate-wise a <= b.
    bool fits_in(const DimVector& o) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (entries_[i] > o.entries_[i]) return false;
        return true;
    }

    DimVector& add_scaled(const DimVector& o, int k) {
        for (std::size_t i = 0; i < size(); ++i) entries_[i] += k * o.entries_[i];
        return *this;
    }
    friend DimVector operator+(DimVector a, const DimVector& b) { return a.add_scaled(b, 1); }

    /// Type-A interval support [first, last] (0-based), if the vector is 0/1 with connected support.
    std::optional<std::pair<std::size_t, std::size_t>> interval() const {
        std::size_t first = size(), last = 0, count = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            if (entries_[i] > 1) return std::nullopt;
            if (entries_[i] == 1) {
                first = std::min(first, i);
                last = i;
                ++count;
            }
        }
        if (count == 0 || last - first + 1 != count) return std::nullopt;
        return std::pair{first, last};
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
        return s + ")";
    }

    friend auto operator<=>(const DimVector&, const DimVector&) = default;

private:
    std::vector<int> entries_;
};

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family;
    int rank;
    std::string name() const {
        const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
        return f + std::to_string(rank);
    }
    /// Largest coordinate of any positive root in the simple-root basis.
    int max_root_coordinate() const {
        switch (family) {
        case DynkinFamily::A: return 1;
        case DynkinFamily::D: return 2;
        case DynkinFamily::E: return rank == 6 ? 3 : rank == 7 ? 4 : 6;
        }
        return 6;
    }
    long positive_root_count() const {
        switch (family) {
        case DynkinFamily::A: return static_cast<long>(rank) * (rank + 1) / 2;
        case DynkinFamily::D: return static_cast<long>(rank) * (rank - 1);
        case DynkinFamily::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        }
        return 0;
    }
};

struct Arrow {
    std::size_t source; // 0-based
    std::size_t target;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A quiver whose underlying graph is a simply-laced Dynkin diagram; checked on construction.
class Quiver {
public:
    Quiver(std::size_t vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
        type_ = classify();
    }

    /// Equioriented A_n: 1 -> 2 -> ... -> n.
    static Quiver equioriented_a(std::size_t n) {
        std::vector<Arrow> arrows;
        for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
        return Quiver(n, std::move(arrows));
    }

    /// Text format: "vertices n" then one "arrow i j" line per arrow (1-based). '#' starts a comment.
    static Quiver parse(std::istream& in) {
        std::size_t n = 0;
        bool have_vertices = false;
        std::vector<Arrow> arrows;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string kw;
            if (!(ls >> kw)) continue;
            if (kw == "vertices") {
                if (!(ls >> n) || n == 0) throw std::invalid_argument("quiver spec line " + std::to_string(lineno) + ": bad vertex count");
                have_vertices = true;
            } else if (kw == "arrow") {
                std::size_t s = 0, t = 0;
                if (!have_vertices) throw std::invalid_argument("quiver spec: 'arrow' before 'vertices'");
                if (!(ls >> s >> t) || s < 1 || t < 1 || s > n || t > n)
                    throw std::invalid_argument("quiver spec line " + std::to_string(lineno) + ": bad arrow");
                arrows.push_back({s - 1, t - 1});
            } else {
                throw std::invalid_argument("quiver spec line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
            }
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("quiver spec line " + std::to_string(lineno) + ": trailing input");
        }
        if (!have_vertices) throw std::invalid_argument("quiver spec: missing 'vertices' line");
        return Quiver(n, std::move(arrows));
    }

    static Quiver load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open quiver spec " + path);
        return parse(in);
    }

    std::string to_spec() const {
        std::string s = "vertices " + std::to_string(n_) + "\n";
        for (const auto& a : arrows_) s += "arrow " + std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + "\n";
        return s;
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const DynkinType& type() const { return type_; }
    bool is_type_a() const { return type_.family == DynkinFamily::A; }

    /// Type A with every arrow joining vertices i and i+1, so that roots are intervals [i, j].
    bool is_path_ordered_a() const {
        if (!is_type_a()) return false;
        for (const auto& a : arrows_)
            if (a.target != a.source + 1 && a.source != a.target + 1) return false;
        return true;
    }

    /// Type A with vertices in path order and every arrow i -> i+1.
    bool is_equioriented_a() const {
        if (!is_type_a()) return false;
        for (const auto& a : arrows_)
            if (a.target != a.source + 1) return false;
        return true;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

private:
    DynkinType classify() const {
        if (n_ == 0) throw std::invalid_argument("quiver: no vertices");
        if (arrows_.size() != n_ - 1) throw std::invalid_argument("quiver: underlying graph is not a tree (not Dynkin)");
        std::vector<std::vector<std::size_t>> adj(n_);
        for (const auto& a : arrows_) {
            if (a.source == a.target) throw std::invalid_argument("quiver: loop at vertex " + std::to_string(a.source + 1));
            for (auto u : adj[a.source])
                if (u == a.target) throw std::invalid_argument("quiver: multiple edge");
            adj[a.source].push_back(a.target);
            adj[a.target].push_back(a.source);
        }
        // connected + n-1 edges => tree
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != n_) throw std::invalid_argument("quiver: underlying graph is disconnected");

        std::vector<std::size_t> branch;
        for (std::size_t v = 0; v < n_; ++v) {
            if (adj[v].size() > 3) throw std::invalid_argument("quiver: vertex of degree > 3 (not Dynkin)");
            if (adj[v].size() == 3) branch.push_back(v);
        }
        int rank = static_cast<int>(n_);
        if (branch.empty()) return {DynkinFamily::A, rank};
        if (branch.size() > 1) throw std::invalid_argument("quiver: more than one branch vertex (not Dynkin)");

        std::vector<int> arms;
        for (auto start : adj[branch[0]]) {
            int len = 1;
            std::size_t prev = branch[0], cur = start;
            while (adj[cur].size() == 2) {
                std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return {DynkinFamily::D, rank};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {DynkinFamily::E, rank};
        throw std::invalid_argument("quiver: tree is not simply-laced Dynkin (arms " + std::to_string(arms[0]) + "," +
                                    std::to_string(arms[1]) + "," + std::to_string(arms[2]) + ")");
    }

    std::size_t n_;
    std::vector<Arrow> arrows_;
    DynkinType type_;
};

/// <d, e> = sum_i d_i e_i - sum_{i->j} d_i e_j.
inline long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
        throw std::invalid_argument("euler_form: dimension vector size mismatch");
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * e[i];
    for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
    return s;
}

inline long tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

inline int height(const DimVector& d) { return d.total(); }

/// Canonical root order: height descending, then lexicographically descending
/// (for type-A intervals of equal length: start vertex ascending).
inline bool root_order_less(const DimVector& a, const DimVector& b) {
    if (height(a) != height(b)) return height(a) > height(b);
    return a > b;
}

/// All nonzero d >= 0 with Tits form 1, by bounded exhaustive search, in canonical order.
inline std::vector<DimVector> positive_roots(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const int bound = q.type().max_root_coordinate();
    std::vector<DimVector> roots;
    std::vector<int> cur(n, 0);
    // odometer over [0, bound]^n
    while (true) {
        DimVector d(cur);
        if (!d.is_zero() && tits_form(q, d) == 1) roots.push_back(d);
        std::size_t i = 0;
        while (i < n && cur[i] == bound) cur[i++] = 0;
        if (i == n) break;
        ++cur[i];
    }
    std::sort(roots.begin(), roots.end(), root_order_less);
    if (static_cast<long>(roots.size()) != q.type().positive_root_count())
        throw std::logic_error("positive_roots: count does not match Dynkin type " + q.type().name());
    return roots;
}

} // namespace klrtor
