#pragma once
// G_V-orbit strata of E_V: enumeration, orbit dimensions and the degeneration order.

#include <functional>
#include <stdexcept>
#include <vector>

#include "klrtor/exact/field.hpp"
#include "klrtor/quiver/multisegment.hpp"

namespace klrtor {

/// All multisegments of d, by backtracking over roots in canonical order
/// (height descending, start ascending), largest multiplicity first.
inline std::vector<Multisegment> enumerate_strata(const std::shared_ptr<const RootSystem>& system, const DimVector& d) {
    const auto& roots = system->roots();
    if (d.size() != system->quiver().vertex_count()) throw std::invalid_argument("enumerate_strata: dimension vector size mismatch");
    std::vector<Multisegment> out;
    std::vector<int> mult(roots.size(), 0);
    DimVector remaining = d;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (remaining.is_zero()) {
            out.emplace_back(system, d, mult);
            return;
        }
        if (i == roots.size()) return;
        int cap = 1 << 30;
        for (std::size_t v = 0; v < d.size(); ++v)
            if (roots[i][v] > 0) cap = std::min(cap, remaining[v] / roots[i][v]);
        for (int k = cap; k >= 0; --k) {
            mult[i] = k;
            remaining.add_scaled(roots[i], -k);
            rec(i + 1);
            remaining.add_scaled(roots[i], k);
        }
        mult[i] = 0;
    };
    rec(0);
    return out;
}

/// |Seq(d)| = (sum d_i)! / prod d_i!.
inline BigInt enumerate_seq_count(const DimVector& d) {
    BigInt num, den = 1, f;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(d.total()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d[i]));
        den *= f;
    }
    return num / den;
}

struct StratumInfo {
    long dim_ev = 0;       // sum over arrows of d_s d_t
    long dim_gv = 0;       // sum d_i^2
    long end_dim = 0;      // dim End(M_lambda)
    long orbit_dim = 0;    // dim G_V - dim End
    long codim = 0;        // dim E_V - orbit dim
};

inline long dim_ev(const Quiver& q, const DimVector& d) {
    long s = 0;
    for (const auto& a : q.arrows()) s += static_cast<long>(d[a.source]) * d[a.target];
    return s;
}

inline long dim_gv(const DimVector& d) {
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * d[i];
    return s;
}

/// Orbit dimension and codimension of X_lambda. With `verify_ext` the codimension is
/// also checked against dim Ext^1(M_lambda, M_lambda) computed by the Hom solver.
inline StratumInfo stratum_info(const Multisegment& lambda, bool verify_ext = true) {
    const auto& sys = *lambda.system();
    StratumInfo info;
    info.dim_ev = dim_ev(sys.quiver(), lambda.dim());
    info.dim_gv = dim_gv(lambda.dim());
    const auto h = sys.hom_profile(lambda.multiplicities());
    for (std::size_t a = 0; a < sys.size(); ++a) info.end_dim += static_cast<long>(lambda.multiplicity(a)) * h[a];
    info.orbit_dim = info.dim_gv - info.end_dim;
    info.codim = info.dim_ev - info.orbit_dim;
    if (info.codim < 0) throw std::logic_error("stratum_info: negative codimension");
    if (verify_ext) {
        Rep m = rep_of_multisegment(lambda);
        if (static_cast<long>(ext_dim(m, m)) != info.codim)
            throw std::logic_error("stratum_info: codimension differs from dim Ext^1(M, M)");
    }
    return info;
}

/// True iff X_mu lies in the closure of X_lambda: dim Hom(I_alpha, M_mu) >= dim Hom(I_alpha, M_lambda)
/// for every positive root alpha.
inline bool closure_leq(const Multisegment& lambda, const Multisegment& mu) {
    if (!(lambda.quiver() == mu.quiver())) throw std::invalid_argument("closure_leq: quiver mismatch");
    if (!(lambda.dim() == mu.dim())) throw std::invalid_argument("closure_leq: dimension vectors differ");
    const auto& sys = *lambda.system();
    const auto hl = sys.hom_profile(lambda.multiplicities());
    const auto hm = sys.hom_profile(mu.multiplicities());
    bool all_equal = true;
    for (std::size_t a = 0; a < hl.size(); ++a) {
        if (hm[a] < hl[a]) return false;
        if (hm[a] != hl[a]) all_equal = false;
    }
    if (all_equal != (lambda == mu)) throw std::logic_error("closure_leq: Hom profile does not determine the stratum");
    return true;
}

/// r_ij(lambda) = sum of lambda_[a,b] over [a,b] containing [i,j]: rank of V_i -> V_j
/// (equioriented A_n, 0-based i <= j).
inline std::vector<std::vector<long>> rank_function(const Multisegment& lambda) {
    const auto& q = lambda.quiver();
    if (!q.is_equioriented_a()) throw std::invalid_argument("rank_function: quiver is not equioriented type A");
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
    const auto& roots = lambda.system()->roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (!lambda.multiplicity(k)) continue;
        auto [a, b] = *roots[k].interval();
        for (std::size_t i = a; i <= b; ++i)
            for (std::size_t j = i; j <= b; ++j) r[i][j] += lambda.multiplicity(k);
    }
    return r;
}

/// Degeneration order through rank functions: r_ij(mu) <= r_ij(lambda) for all i <= j.
inline bool rank_function_leq(const Multisegment& lambda, const Multisegment& mu) {
    if (!(lambda.dim() == mu.dim())) throw std::invalid_argument("rank_function_leq: dimension vectors differ");
    auto rl = rank_function(lambda);
    auto rm = rank_function(mu);
    for (std::size_t i = 0; i < rl.size(); ++i)
        for (std::size_t j = i; j < rl.size(); ++j)
            if (rm[i][j] > rl[i][j]) return false;
    return true;
}

} // namespace klrtor
