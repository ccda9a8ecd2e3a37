#pragma once
// The Kashiwara-Saito variety S: quadruples (M_0, M_1, M_2, M_3) of 2x2 matrices indexed by
// Z/4Z with rank M_i <= 1 and M_i M_{i+1} = 0 (including M_3 M_0 = 0). Point counts over
// finite fields and the degree of the counting polynomial.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klrtor/exact/field.hpp"
#include "klrtor/exact/interpolate.hpp"
#include "klrtor/util/deadline.hpp"

namespace klrtor::ks {

/// Row-major 2x2 matrix over F_p.
struct Mat2 {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

using MatrixQuadruple = std::array<Mat2, 4>;

inline Mat2 mul(const Mat2& a, const Mat2& b, std::uint32_t p) {
    auto m = [p](std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t w) {
        return static_cast<std::uint32_t>((x * y + z * w) % p);
    };
    return {{m(a.e[0], b.e[0], a.e[1], b.e[2]), m(a.e[0], b.e[1], a.e[1], b.e[3]),
             m(a.e[2], b.e[0], a.e[3], b.e[2]), m(a.e[2], b.e[1], a.e[3], b.e[3])}};
}

inline bool is_zero(const Mat2& a) { return a.e == std::array<std::uint32_t, 4>{0, 0, 0, 0}; }

inline bool rank_at_most_one(const Mat2& a, std::uint32_t p) {
    std::uint64_t lhs = static_cast<std::uint64_t>(a.e[0]) * a.e[3] % p;
    std::uint64_t rhs = static_cast<std::uint64_t>(a.e[1]) * a.e[2] % p;
    return lhs == rhs;
}

/// Membership in S(F_p).
inline bool is_ks_point(const MatrixQuadruple& t, std::uint32_t p) {
    for (int i = 0; i < 4; ++i) {
        if (!rank_at_most_one(t[static_cast<std::size_t>(i)], p)) return false;
        if (!is_zero(mul(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 4)], p))) return false;
    }
    return true;
}

/// All 2x2 matrices over F_p of rank <= 1.
inline std::vector<Mat2> rank_le1_matrices(std::uint32_t p) {
    std::vector<Mat2> out;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    Mat2 m{{a, b, c, d}};
                    if (rank_at_most_one(m, p)) out.push_back(m);
                }
    return out;
}

inline constexpr std::uint32_t kBruteForceMaxPrime = 7;
inline constexpr std::uint64_t kStratifiedMaxQ = 64;

/// |S(F_p)| by direct enumeration: M_0 over rank <= 1 matrices, then each M_{i+1} with
/// M_i M_{i+1} = 0, closing with M_3 M_0 = 0.
inline BigInt count_points_bruteforce(std::uint32_t p, const Deadline* deadline = nullptr) {
    if (!is_prime(p)) throw std::invalid_argument("count_points_bruteforce: q = " + std::to_string(p) + " must be prime");
    if (p > kBruteForceMaxPrime)
        throw std::invalid_argument("count_points_bruteforce: q = " + std::to_string(p) + " exceeds the brute-force bound " +
                                    std::to_string(kBruteForceMaxPrime));
    const auto cands = rank_le1_matrices(p);
    // right annihilators: for each candidate A, the candidates B with A B = 0
    std::vector<std::vector<std::size_t>> after(cands.size());
    for (std::size_t a = 0; a < cands.size(); ++a)
        for (std::size_t b = 0; b < cands.size(); ++b)
            if (is_zero(mul(cands[a], cands[b], p))) after[a].push_back(b);
    std::uint64_t count = 0;
    for (std::size_t m0 = 0; m0 < cands.size(); ++m0) {
        check_deadline(deadline);
        for (auto m1 : after[m0])
            for (auto m2 : after[m1])
                for (auto m3 : after[m2])
                    if (is_zero(mul(cands[m3], cands[m0], p))) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

/// |S(F_q)| for any prime power q by counting line configurations in P^1(F_q).
///
/// A rank-1 matrix is determined by its image line, its kernel line and a scalar in F_q^*;
/// for two rank-1 matrices, M_i M_{i+1} = 0 iff image(M_{i+1}) = kernel(M_i). Lines are
/// labels 0..q, so no field arithmetic is needed and q may be any prime power.
inline BigInt count_points_stratified(std::uint64_t q) {
    if (prime_power_base(q) == 0) throw std::invalid_argument("count_points_stratified: q = " + std::to_string(q) + " is not a prime power");
    if (q > kStratifiedMaxQ)
        throw std::invalid_argument("count_points_stratified: q = " + std::to_string(q) + " exceeds bound " + std::to_string(kStratifiedMaxQ));
    const std::uint64_t lines = q + 1;
    BigInt total = 0;
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        auto nonzero = [&](int i) { return (pattern >> ((i + 4) % 4)) & 1u; };
        int rank_one = 0;
        for (int i = 0; i < 4; ++i) rank_one += static_cast<int>(nonzero(i));
        // image[i], kernel[i] labels for rank-one slots
        std::array<std::uint64_t, 4> image{}, kernel{};
        std::uint64_t configs = 0;
        std::function<void(int)> place = [&](int i) {
            if (i == 4) {
                // closing condition between M_3 and M_0
                if (nonzero(3) && nonzero(0) && image[0] != kernel[3]) return;
                ++configs;
                return;
            }
            if (!nonzero(i)) {
                place(i + 1);
                return;
            }
            for (std::uint64_t im = 0; im < lines; ++im) {
                if (i > 0 && nonzero(i - 1) && im != kernel[static_cast<std::size_t>(i - 1)]) continue;
                for (std::uint64_t ker = 0; ker < lines; ++ker) {
                    image[static_cast<std::size_t>(i)] = im;
                    kernel[static_cast<std::size_t>(i)] = ker;
                    place(i + 1);
                }
            }
        };
        place(0);
        BigInt scalars;
        mpz_ui_pow_ui(scalars.get_mpz_t(), q - 1, static_cast<unsigned long>(rank_one));
        total += BigInt(static_cast<unsigned long>(configs)) * scalars;
    }
    return total;
}

/// 1 + 4 (q^2 - 1)(q + 1): the zero quadruple plus quadruples with exactly one nonzero entry.
inline BigInt trivial_lower_bound(std::uint64_t q) {
    BigInt Q(static_cast<unsigned long>(q));
    return 1 + 4 * (Q * Q - 1) * (Q + 1);
}

struct DimensionEstimate {
    RationalPoly polynomial;
    int degree = -1;
    std::vector<std::pair<std::uint64_t, BigInt>> samples;
    std::pair<std::uint64_t, BigInt> holdout;
};

inline const std::vector<std::uint64_t>& default_samples() {
    static const std::vector<std::uint64_t> s{2, 3, 4, 5, 7, 8, 9, 11, 13};
    return s;
}
inline constexpr std::uint64_t kDefaultHoldout = 17;

/// Interpolates |S(F_q)| through the samples and checks the interpolant on the held-out q.
inline DimensionEstimate dimension_estimate(const std::vector<std::uint64_t>& qs = default_samples(),
                                            std::uint64_t holdout = kDefaultHoldout, const Deadline* deadline = nullptr) {
    if (qs.size() < 9) throw std::invalid_argument("dimension_estimate: need at least 9 sample points for a degree-8 fit");
    DimensionEstimate est;
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (auto q : qs) {
        check_deadline(deadline);
        BigInt c = count_points_stratified(q);
        est.samples.emplace_back(q, c);
        pts.emplace_back(BigInt(static_cast<unsigned long>(q)), c);
    }
    est.polynomial = interpolate_integer_polynomial(pts);
    est.degree = est.polynomial.degree();
    check_deadline(deadline);
    est.holdout = {holdout, count_points_stratified(holdout)};
    if (est.polynomial(Rational(BigInt(static_cast<unsigned long>(holdout)))) != Rational(est.holdout.second))
        throw DomainError("dimension_estimate: point count is not polynomial in q (held-out q = " + std::to_string(holdout) + " mismatch)");
    return est;
}

} // namespace klrtor::ks
