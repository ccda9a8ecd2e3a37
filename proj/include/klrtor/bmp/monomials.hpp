#pragma once
// Monomials in x_1..x_n (n <= 8) packed 8 bits per exponent, and cached bases of the
// homogeneous pieces, optionally with one variable omitted.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace klrtor::bmp {

using Monomial = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 8;

inline Monomial variable(std::size_t i) { return Monomial{1} << (8 * i); }

inline unsigned exponent(Monomial m, std::size_t i) { return static_cast<unsigned>((m >> (8 * i)) & 0xffu); }

/// Product of monomials; exponents stay below 256 for every degree used here.
inline Monomial times(Monomial a, Monomial b) { return a + b; }

/// Image of m under x_a -> x_b.
inline Monomial substitute(Monomial m, std::size_t a, std::size_t b) {
    const Monomial e = exponent(m, a);
    return m - (e << (8 * a)) + (e << (8 * b));
}

/// Monomials of one degree in the variables other than `omitted` (-1 for none),
/// in increasing packed order.
class MonomialBasis {
public:
    MonomialBasis(std::size_t n, int degree, int omitted) {
        if (n > kMaxVariables) throw std::invalid_argument("MonomialBasis: at most 8 variables");
        if (degree < 0) return;
        build(n, 0, static_cast<unsigned>(degree), omitted, 0);
        for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
    }

    /// Shared instance; safe to call from several threads.
    static const MonomialBasis& get(std::size_t n, int degree, int omitted = -1) {
        static std::mutex mutex;
        static std::map<std::tuple<std::size_t, int, int>, std::unique_ptr<MonomialBasis>> cache;
        std::lock_guard lock(mutex);
        auto& slot = cache[{n, degree, omitted}];
        if (!slot) slot = std::make_unique<MonomialBasis>(n, degree, omitted);
        return *slot;
    }

    std::size_t size() const { return monos_.size(); }
    Monomial operator[](std::size_t i) const { return monos_[i]; }
    const std::vector<Monomial>& monomials() const { return monos_; }

    std::size_t index(Monomial m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::logic_error("MonomialBasis: monomial outside basis");
        return it->second;
    }

private:
    void build(std::size_t n, std::size_t var, unsigned left, int omitted, Monomial acc) {
        if (var == n) {
            if (left == 0) monos_.push_back(acc);
            return;
        }
        if (static_cast<int>(var) == omitted) {
            build(n, var + 1, left, omitted, acc);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) build(n, var + 1, left - k, omitted, acc + (Monomial{k} << (8 * var)));
    }

    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, std::size_t> index_;
};

} // namespace klrtor::bmp
