#pragma once
// Kazhdan-Lusztig polynomials P_{y,w}(q) for symmetric groups, memoised.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "klrtor/exact/laurent.hpp"
#include "klrtor/weyl/permutation.hpp"

namespace klrtor {

/// Memo of P_{y,w}. Concurrent callers may race to fill the same entry; both compute the
/// same value and the last insert wins.
class KLCache {
public:
    std::optional<LaurentPoly> find(const Permutation& y, const Permutation& w) const {
        std::lock_guard lock(mutex_);
        auto it = memo_.find({y.code(), w.code()});
        if (it == memo_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const Permutation& y, const Permutation& w, const LaurentPoly& p) {
        std::lock_guard lock(mutex_);
        memo_[{y.code(), w.code()}] = p;
    }
    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return memo_.size();
    }

private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, LaurentPoly> memo_;
};

inline LaurentPoly kl_polynomial(const Permutation& y, const Permutation& w, KLCache& cache);

/// mu(z, w): coefficient of q^((l(w)-l(z)-1)/2) in P_{z,w}; zero for even length difference.
inline BigInt kl_mu(const Permutation& z, const Permutation& w, KLCache& cache) {
    int d = w.length() - z.length();
    if (d <= 0 || d % 2 == 0) return 0;
    return kl_polynomial(z, w, cache).coeff((d - 1) / 2);
}

/// P_{y,w} in the variable q (exponents are q-powers); 0 unless y <= w.
inline LaurentPoly kl_polynomial(const Permutation& y, const Permutation& w, KLCache& cache) {
    if (y.size() != w.size()) throw std::invalid_argument("kl_polynomial: size mismatch");
    if (!bruhat_leq(y, w)) return {};
    const int gap = w.length() - y.length();
    if (gap <= 2) return LaurentPoly(1);
    if (auto hit = cache.find(y, w)) return *hit;

    int s = 1;
    while (!w.has_left_descent(s)) ++s;

    LaurentPoly result;
    if (!y.has_left_descent(s)) {
        // P_{y,w} = P_{sy,w} when sw < w
        result = kl_polynomial(y.left_simple(s), w, cache);
    } else {
        const Permutation v = w.left_simple(s);
        const Permutation sy = y.left_simple(s);
        result = kl_polynomial(sy, v, cache) + kl_polynomial(y, v, cache).shifted(1);
        const int lw = w.length();
        const int lv = v.length();
        for (const auto& z : bruhat_interval(y, v)) {
            const int lz = z.length();
            if (lz >= lv || (lv - lz) % 2 == 0 || !z.has_left_descent(s)) continue;
            BigInt mu = kl_mu(z, v, cache);
            if (mu == 0) continue;
            LaurentPoly term = kl_polynomial(y, z, cache).shifted((lw - lz) / 2);
            result -= term * LaurentPoly::monomial(0, mu);
        }
    }

    if (result.is_zero() || result.coeff(0) != 1 || result.min_exponent() < 0 || 2 * result.max_exponent() > gap - 1)
        throw std::logic_error("kl_polynomial: P_{" + y.to_string() + "," + w.to_string() + "} = " + result.to_string("q") +
                               " violates constant term or degree bound");
    cache.insert(y, w, result);
    return result;
}

} // namespace klrtor
