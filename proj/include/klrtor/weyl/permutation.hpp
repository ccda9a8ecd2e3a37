#pragma once
// Permutations in one-line notation, rank matrices and the Bruhat order on S_n.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrtor {

/// w(1..n) stored 0-based internally; values are 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int v : w_) {
            if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation: " + to_string());
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }
    static Permutation longest(std::size_t n) {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
        return Permutation(std::move(w));
    }

    /// "62845173" (one digit per entry) or "10,2,3,..." (comma separated).
    static Permutation parse(const std::string& text) {
        std::vector<int> w;
        if (text.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t c = text.find(',', pos);
                if (c == std::string::npos) c = text.size();
                std::string tok = text.substr(pos, c - pos);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                    throw std::invalid_argument("bad permutation '" + text + "'");
                w.push_back(std::stoi(tok));
                pos = c + 1;
            }
        } else {
            for (char ch : text) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad permutation '" + text + "'");
                w.push_back(ch - '0');
            }
        }
        if (w.empty()) throw std::invalid_argument("empty permutation");
        return Permutation(std::move(w));
    }

    std::size_t size() const { return w_.size(); }
    /// 1-based evaluation w(i).
    int operator()(std::size_t i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    std::string to_string() const {
        std::string s;
        const bool digits = w_.size() <= 9;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (!digits && i) s += ",";
            s += std::to_string(w_[i]);
        }
        return s;
    }

    Permutation inverse() const {
        std::vector<int> inv(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
        return Permutation(std::move(inv));
    }

    /// Number of inversions.
    int length() const {
        int l = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::size_t j = i + 1; j < w_.size(); ++j)
                if (w_[i] > w_[j]) ++l;
        return l;
    }

    /// t w for the transposition t = (a b) of values (1-based).
    Permutation left_transposition(int a, int b) const {
        Permutation out = *this;
        for (int& v : out.w_) {
            if (v == a) v = b;
            else if (v == b) v = a;
        }
        return out;
    }
    /// w t for t = (i j) of positions (1-based).
    Permutation right_transposition(std::size_t i, std::size_t j) const {
        Permutation out = *this;
        std::swap(out.w_[i - 1], out.w_[j - 1]);
        return out;
    }
    /// s_i w, swapping values i and i+1.
    Permutation left_simple(int i) const { return left_transposition(i, i + 1); }
    /// s_i w < w iff i+1 appears to the left of i.
    bool has_left_descent(int i) const {
        for (int v : w_) {
            if (v == i + 1) return true;
            if (v == i) return false;
        }
        return false;
    }

    /// Packs into 4 bits per entry; n <= 16. Only comparable between permutations of equal size.
    std::uint64_t code() const {
        if (w_.size() > 16) throw std::invalid_argument("permutation code needs n <= 16");
        std::uint64_t c = 0;
        for (int v : w_) c = (c << 4) | static_cast<std::uint64_t>(v - 1);
        return c;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

/// r(i, j) = #{k <= i : w(k) <= j}, stored 0-based as r[i-1][j-1].
inline std::vector<std::vector<int>> rank_matrix(const Permutation& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            r[i - 1][j - 1] = (i > 1 ? r[i - 2][j - 1] : 0) + (w(i) <= static_cast<int>(j) ? 1 : 0);
    return r;
}

/// Inverse of rank_matrix via second differences; throws if r is not a permutation rank matrix.
inline Permutation permutation_from_rank_matrix(const std::vector<std::vector<int>>& r) {
    const std::size_t n = r.size();
    auto at = [&](std::size_t i, std::size_t j) { return (i == 0 || j == 0) ? 0 : r[i - 1][j - 1]; };
    std::vector<int> w(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        if (r[i - 1].size() != n) throw std::invalid_argument("rank matrix is not square");
        for (std::size_t j = 1; j <= n; ++j) {
            int d = at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1);
            if (d == 1) {
                if (w[i - 1] != 0) throw std::invalid_argument("not a permutation rank matrix");
                w[i - 1] = static_cast<int>(j);
            } else if (d != 0) {
                throw std::invalid_argument("not a permutation rank matrix");
            }
        }
    }
    Permutation p(std::move(w));
    if (rank_matrix(p) != r) throw std::invalid_argument("not a permutation rank matrix");
    return p;
}

/// y <= w iff r_y(i, j) >= r_w(i, j) everywhere.
inline bool bruhat_leq(const Permutation& y, const Permutation& w) {
    if (y.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const std::size_t n = y.size();
    // running counts avoid materialising both matrices
    std::vector<int> cy(n + 1, 0), cw(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = static_cast<std::size_t>(y(i)); j <= n; ++j) ++cy[j];
        for (std::size_t j = static_cast<std::size_t>(w(i)); j <= n; ++j) ++cw[j];
        for (std::size_t j = 1; j <= n; ++j)
            if (cy[j] < cw[j]) return false;
    }
    return true;
}

/// All permutations of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// The Bruhat interval [y, w], sorted by length descending, ties broken lexicographically
/// on one-line notation (so w comes first). Empty if y is not below w.
inline std::vector<Permutation> bruhat_interval(const Permutation& y, const Permutation& w) {
    if (!bruhat_leq(y, w)) return {};
    std::set<Permutation> seen{w};
    std::vector<Permutation> frontier{w};
    const int ly = y.length();
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& z : frontier) {
            if (z.length() == ly) continue;
            const std::size_t n = z.size();
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) {
                    if (z(i) < z(j)) continue;
                    bool cover = true; // no value strictly between at an intermediate position
                    for (std::size_t k = i + 1; k < j && cover; ++k)
                        if (z(k) < z(i) && z(k) > z(j)) cover = false;
                    if (!cover) continue;
                    Permutation c = z.right_transposition(i, j);
                    if (seen.count(c) || !bruhat_leq(y, c)) continue;
                    seen.insert(c);
                    next.push_back(c);
                }
        }
        frontier = std::move(next);
    }
    std::vector<Permutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la > lb;
        return a < b;
    });
    return out;
}

} // namespace klrtor
