#pragma once
// Grothendieck-group bookkeeping over Z[v, v^-1]: decomposition and extension matrices,
// Brauer reciprocity, and the characteristic-zero decomposition matrix of the flag quiver.
//
// Conventions. Simples L_1..L_m and projective covers P_1..P_m are dual bases for
// <P, M> = gdim Hom(P, M), which is v-linear in M and conjugate-linear in P.
// D(i, j) is the multiplicity of L_i in d(L_j) (columns are images). The extension matrix
// stores pairings E(j, i) = <e(P_i), L_j>, so reciprocity says exactly E = D^T.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klrtor/exact/laurent.hpp"
#include "klrtor/strata/strata.hpp"
#include "klrtor/weyl/kl.hpp"
#include "klrtor/weyl/zelevinsky.hpp"

namespace klrtor {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

inline LaurentMatrix transpose(const LaurentMatrix& m) {
    const std::size_t r = m.size(), c = r ? m.front().size() : 0;
    LaurentMatrix t(c, std::vector<LaurentPoly>(r));
    for (std::size_t i = 0; i < r; ++i) {
        if (m[i].size() != c) throw std::invalid_argument("transpose: ragged matrix");
        for (std::size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
    }
    return t;
}

struct DecompositionMatrix {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> order; // (i, j): label i strictly below label j
    LaurentMatrix entries;
    LaurentMatrix kl_raw; // optional: un-normalised KL polynomials in q, same shape

    std::size_t size() const { return labels.size(); }

    bool below(std::size_t i, std::size_t j) const {
        return std::find(order.begin(), order.end(), std::pair{i, j}) != order.end();
    }

    /// Labels distinct, order antisymmetric, diagonal 1, off-diagonal entries supported on
    /// the order and with nonnegative coefficients.
    void validate() const {
        const std::size_t m = labels.size();
        if (std::set<std::string>(labels.begin(), labels.end()).size() != m)
            throw std::invalid_argument("DecompositionMatrix: duplicate labels");
        if (entries.size() != m) throw std::invalid_argument("DecompositionMatrix: not square");
        std::set<std::pair<std::size_t, std::size_t>> rel(order.begin(), order.end());
        for (auto [i, j] : rel) {
            if (i >= m || j >= m || i == j) throw std::invalid_argument("DecompositionMatrix: bad order pair");
            if (rel.count({j, i})) throw std::invalid_argument("DecompositionMatrix: order is not antisymmetric");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (entries[i].size() != m) throw std::invalid_argument("DecompositionMatrix: not square");
            for (std::size_t j = 0; j < m; ++j) {
                const auto& e = entries[i][j];
                if (i == j) {
                    if (!(e == LaurentPoly(1)))
                        throw std::invalid_argument("DecompositionMatrix: diagonal entry at " + labels[i] + " is " + e.to_string() + ", not 1");
                    continue;
                }
                if (!e.has_nonnegative_coefficients())
                    throw std::invalid_argument("DecompositionMatrix: negative coefficient at (" + labels[i] + ", " + labels[j] + ")");
                if (!e.is_zero() && !rel.count({i, j}))
                    throw std::invalid_argument("DecompositionMatrix: entry (" + labels[i] + ", " + labels[j] + ") off the order");
            }
        }
    }
};

inline LaurentMatrix extension_from_decomposition(const DecompositionMatrix& d) {
    d.validate();
    return transpose(d.entries);
}

/// <sum a_i P_i, sum b_i L_i> = sum bar(a_i) b_i.
inline LaurentPoly pairing(const std::vector<LaurentPoly>& projective, const std::vector<LaurentPoly>& simple) {
    if (projective.size() != simple.size()) throw std::invalid_argument("pairing: size mismatch");
    LaurentPoly s;
    for (std::size_t i = 0; i < simple.size(); ++i) s += bar_involution(projective[i]) * simple[i];
    return s;
}

/// d applied to simple coordinates.
inline std::vector<LaurentPoly> apply_decomposition(const LaurentMatrix& d, const std::vector<LaurentPoly>& simple) {
    std::vector<LaurentPoly> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j) out[i] += d[i][j] * simple[j];
    return out;
}

/// e applied to projective coordinates; e(P_i) = sum_j bar(E(j, i)) P_j recovers the stored pairings.
inline std::vector<LaurentPoly> apply_extension(const LaurentMatrix& e, const std::vector<LaurentPoly>& projective) {
    std::vector<LaurentPoly> out(e.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        for (std::size_t i = 0; i < projective.size(); ++i) out[j] += bar_involution(e[j][i]) * projective[i];
    return out;
}

/// <e(P_i), L_j> = <P_i, d(L_j)> on all basis pairs.
inline bool brauer_reciprocity_holds(const LaurentMatrix& d, const LaurentMatrix& e) {
    const std::size_t m = d.size();
    if (e.size() != m) return false;
    auto unit = [m](std::size_t k) {
        std::vector<LaurentPoly> v(m);
        v[k] = LaurentPoly(1);
        return v;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!(pairing(apply_extension(e, unit(i)), unit(j)) == pairing(unit(i), apply_decomposition(d, unit(j))))) return false;
    return true;
}

/// Graded decomposition matrix in characteristic 0 for flag_quiver(n), d = (1,..,n,..,1).
/// Rows and columns are the injective-arrow strata, listed by Zelevinsky permutation
/// (length ascending, then lexicographic). Entry (l, m) = v^(l(w_m) - l(w_l)) P_{w_l, w_m}(v^-2).
inline DecompositionMatrix char0_decomposition_matrix(std::size_t n, KLCache& cache) {
    if (n == 0 || n > 5) throw std::invalid_argument("char0_decomposition_matrix: n must be in 1..5");
    auto system = RootSystem::make(flag_quiver(n));
    auto perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    std::vector<Multisegment> strata;
    DecompositionMatrix d;
    for (const auto& w : perms) {
        strata.push_back(multisegment_of_permutation(system, w));
        d.labels.push_back(strata.back().to_string());
    }
    const std::size_t m = perms.size();
    d.entries.assign(m, std::vector<LaurentPoly>(m));
    d.kl_raw.assign(m, std::vector<LaurentPoly>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const bool geometric = i != j && closure_leq(strata[j], strata[i]);
            const bool bruhat = i != j && bruhat_leq(perms[i], perms[j]);
            if (geometric != bruhat)
                throw std::logic_error("char0_decomposition_matrix: closure order and Bruhat order disagree at (" + d.labels[i] + ", " +
                                       d.labels[j] + ")");
            if (geometric) d.order.emplace_back(i, j);
            if (i != j && !bruhat) continue;
            const LaurentPoly p = kl_polynomial(perms[i], perms[j], cache);
            d.kl_raw[i][j] = p;
            d.entries[i][j] = p.substitute_power(-2).shifted(perms[j].length() - perms[i].length());
        }
    d.validate();
    return d;
}

/// The permutation attached to each label of char0_decomposition_matrix(n).
inline std::vector<Permutation> char0_label_permutations(std::size_t n) {
    auto perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    return perms;
}

} // namespace klrtor
