#pragma once
// Injective-arrow strata of A_{2n-1} (orientation 1 -> ... -> n <- ... <- 2n-1,
// d = (1, 2, ..., n, ..., 2, 1)) versus pairs of complete flags in k^n.
//
// Convention: a representation gives flags F_i = image of V_i in V_n (left chain) and
// F'_j = image of V_{2n-j} in V_n (right chain); its permutation w is the one with
// rank_matrix(w)(i, j) = dim(F_i cap F'_j), i.e. #{k <= i : w(k) <= j}.
// The inverse map realises F_i = span(e_w(1), ..., e_w(i)), F'_j = span(e_1, ..., e_j).

#include <memory>
#include <stdexcept>
#include <vector>

#include "klrtor/quiver/multisegment.hpp"
#include "klrtor/util/deadline.hpp"
#include "klrtor/weyl/permutation.hpp"

namespace klrtor {

inline Quiver flag_quiver(std::size_t n) {
    if (n == 0) throw std::invalid_argument("flag_quiver: n must be positive");
    std::vector<Arrow> arrows;
    for (std::size_t v = 0; v + 1 < n; ++v) arrows.push_back({v, v + 1});              // left chain into n
    for (std::size_t v = n; v < 2 * n - 1; ++v) arrows.push_back({v, v - 1});          // right chain into n
    return Quiver(2 * n - 1, std::move(arrows));
}

inline DimVector flag_dimension(std::size_t n) {
    std::vector<int> d(2 * n - 1);
    for (std::size_t v = 0; v < 2 * n - 1; ++v) d[v] = static_cast<int>(v < n ? v + 1 : 2 * n - 1 - v);
    return DimVector(std::move(d));
}

/// n with q = flag_quiver(n); throws if q has a different shape.
inline std::size_t flag_rank(const Quiver& q) {
    const std::size_t v = q.vertex_count();
    if (v % 2 == 0 || !(q == flag_quiver((v + 1) / 2)))
        throw std::invalid_argument("quiver is not A_{2n-1} with orientation 1 -> ... -> n <- ... <- 2n-1");
    return (v + 1) / 2;
}

inline bool has_injective_arrows(const Rep& rep) {
    for (std::size_t a = 0; a < rep.quiver().arrows().size(); ++a) {
        const auto& m = rep.map(a);
        if (rank(m) != m.cols()) return false;
    }
    return true;
}

inline bool is_injective_stratum(const Multisegment& lambda) { return has_injective_arrows(rep_of_multisegment(lambda)); }

/// The relative position of the two flags carried by an injective-arrow stratum.
inline Permutation zelevinsky_permutation(const Multisegment& lambda) {
    const std::size_t n = flag_rank(lambda.quiver());
    if (!(lambda.dim() == flag_dimension(n)))
        throw std::invalid_argument("zelevinsky_permutation: dimension vector is not (1,2,...,n,...,2,1)");
    const Rep rep = rep_of_multisegment(lambda);
    if (!has_injective_arrows(rep)) throw DomainError("zelevinsky_permutation: stratum " + lambda.to_string() + " has a non-injective arrow");

    // arrow index of the map out of vertex v (0-based) towards the middle vertex n-1
    auto arrow_from = [&](std::size_t v) {
        const auto& arrows = rep.quiver().arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].source == v) return a;
        throw std::logic_error("flag quiver: vertex without outgoing arrow");
    };
    // images[v] = composite V_v -> V_n as an n x dim(V_v) matrix
    std::vector<QMatrix> images(2 * n - 1, QMatrix(RationalField{}));
    images[n - 1] = QMatrix::identity(RationalField{}, n);
    for (std::size_t v = n - 1; v-- > 0;) images[v] = images[v + 1] * rep.map(arrow_from(v));
    for (std::size_t v = n; v < 2 * n - 1; ++v) images[v] = images[v - 1] * rep.map(arrow_from(v));

    auto left = [&](std::size_t i) -> const QMatrix& { return images[i - 1]; };        // F_i
    auto right = [&](std::size_t j) -> const QMatrix& { return images[2 * n - 1 - j]; }; // F'_j
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const auto& A = left(i);
            const auto& B = right(j);
            QMatrix both(RationalField{}, n, A.cols() + B.cols());
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < A.cols(); ++c) both(r, c) = A(r, c);
                for (std::size_t c = 0; c < B.cols(); ++c) both(r, A.cols() + c) = B(r, c);
            }
            m[i - 1][j - 1] = static_cast<int>(rank(A) + rank(B) - rank(both));
        }
    return permutation_from_rank_matrix(m);
}

/// The double-flag representation with flags in relative position w.
inline Rep double_flag_rep(const Permutation& w) {
    const std::size_t n = w.size();
    const Quiver q = flag_quiver(n);
    const DimVector d = flag_dimension(n);
    std::vector<QMatrix> maps;
    for (const auto& a : q.arrows()) {
        const std::size_t s = static_cast<std::size_t>(d[a.source]);
        const std::size_t t = static_cast<std::size_t>(d[a.target]);
        QMatrix m(RationalField{}, t, s);
        if (a.source == n - 2 && a.target == n - 1) {
            for (std::size_t k = 0; k < s; ++k) m(static_cast<std::size_t>(w(k + 1) - 1), k) = 1;
        } else {
            for (std::size_t k = 0; k < s; ++k) m(k, k) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Rep(q, d, std::move(maps));
}

inline Multisegment multisegment_of_permutation(const std::shared_ptr<const RootSystem>& system, const Permutation& w) {
    if (!(system->quiver() == flag_quiver(w.size())))
        throw std::invalid_argument("multisegment_of_permutation: root system is not for flag_quiver(n)");
    return decompose(system, double_flag_rep(w));
}

inline Multisegment multisegment_of_permutation(const Permutation& w) {
    return multisegment_of_permutation(RootSystem::make(flag_quiver(w.size())), w);
}

} // namespace klrtor
