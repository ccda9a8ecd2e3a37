#pragma once
// Representations of quivers over Q: explicit matrices per arrow, Hom and Ext dimensions.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klrtor/exact/matrix.hpp"
#include "klrtor/quiver/quiver.hpp"

namespace klrtor {

using QMatrix = ExactMatrix<RationalField>;

/// A point of E_V with chosen bases: one (dim target) x (dim source) matrix per arrow.
class Rep {
public:
    Rep(Quiver quiver, DimVector dims, std::vector<QMatrix> maps)
        : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
        if (dims_.size() != quiver_.vertex_count()) throw std::invalid_argument("Rep: dimension vector size mismatch");
        if (maps_.size() != quiver_.arrows().size()) throw std::invalid_argument("Rep: one matrix per arrow required");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& arrow = quiver_.arrows()[a];
            if (maps_[a].rows() != static_cast<std::size_t>(dims_[arrow.target]) ||
                maps_[a].cols() != static_cast<std::size_t>(dims_[arrow.source]))
                throw std::invalid_argument("Rep: matrix shape does not match dimension vector");
        }
    }

    static Rep zero(const Quiver& q, const DimVector& d) {
        std::vector<QMatrix> maps;
        for (const auto& a : q.arrows())
            maps.emplace_back(RationalField{}, static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
        return Rep(q, d, std::move(maps));
    }

    const Quiver& quiver() const { return quiver_; }
    const DimVector& dims() const { return dims_; }
    const std::vector<QMatrix>& maps() const { return maps_; }
    const QMatrix& map(std::size_t arrow) const { return maps_[arrow]; }

private:
    Quiver quiver_;
    DimVector dims_;
    std::vector<QMatrix> maps_;
};

/// The indecomposable I_alpha for an interval root of a type-A quiver (any orientation):
/// k on the vertices of the interval, identity on arrows inside it.
inline Rep interval_module(const Quiver& q, const DimVector& root) {
    if (!q.is_path_ordered_a()) throw std::invalid_argument("interval_module: quiver is not a path-ordered type A quiver");
    if (root.size() != q.vertex_count()) throw std::invalid_argument("interval_module: root size mismatch");
    if (!root.interval()) throw std::invalid_argument("interval_module: " + root.to_string() + " is not an interval root");
    std::vector<QMatrix> maps;
    for (const auto& a : q.arrows()) {
        QMatrix m(RationalField{}, static_cast<std::size_t>(root[a.target]), static_cast<std::size_t>(root[a.source]));
        if (root[a.source] == 1 && root[a.target] == 1) m(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return Rep(q, root, std::move(maps));
}

/// Block-diagonal direct sum.
inline Rep direct_sum(const Rep& m, const Rep& n) {
    if (!(m.quiver() == n.quiver())) throw std::invalid_argument("direct_sum: quiver mismatch");
    const auto& q = m.quiver();
    std::vector<QMatrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& A = m.map(a);
        const auto& B = n.map(a);
        QMatrix s(RationalField{}, A.rows() + B.rows(), A.cols() + B.cols());
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) s(i, j) = A(i, j);
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j) s(A.rows() + i, A.cols() + j) = B(i, j);
        maps.push_back(std::move(s));
    }
    return Rep(q, m.dims() + n.dims(), std::move(maps));
}

/// dim Hom(M, N): the solution space of N_a phi_s = phi_t M_a over all arrows a: s -> t.
inline std::size_t hom_dim(const Rep& M, const Rep& N) {
    if (!(M.quiver() == N.quiver())) throw std::invalid_argument("hom_dim: quiver mismatch");
    const auto& q = M.quiver();
    const std::size_t nv = q.vertex_count();
    // unknown (v, r, c) is entry (r, c) of phi_v : M_v -> N_v, an (dimN_v x dimM_v) matrix
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(M.dims()[v]) * static_cast<std::size_t>(N.dims()[v]);
    const std::size_t unknowns = offset[nv];
    if (unknowns == 0) return 0;
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * static_cast<std::size_t>(M.dims()[v]) + c; };

    std::size_t eq_rows = 0;
    for (const auto& a : q.arrows()) eq_rows += static_cast<std::size_t>(N.dims()[a.target]) * static_cast<std::size_t>(M.dims()[a.source]);
    QMatrix sys(RationalField{}, eq_rows, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrows()[ai];
        const auto& Ma = M.map(ai); // dimM_t x dimM_s
        const auto& Na = N.map(ai); // dimN_t x dimN_s
        const std::size_t mt = static_cast<std::size_t>(M.dims()[a.target]);
        const std::size_t ms = static_cast<std::size_t>(M.dims()[a.source]);
        const std::size_t ns = static_cast<std::size_t>(N.dims()[a.source]);
        const std::size_t nt = static_cast<std::size_t>(N.dims()[a.target]);
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ms; ++j, ++row) {
                // (N_a phi_s)_{ij} - (phi_t M_a)_{ij} = 0
                for (std::size_t k = 0; k < ns; ++k)
                    if (sgn(Na(i, k)) != 0) sys(row, var(a.source, k, j)) += Na(i, k);
                for (std::size_t k = 0; k < mt; ++k)
                    if (sgn(Ma(k, j)) != 0) sys(row, var(a.target, i, k)) -= Ma(k, j);
            }
    }
    auto rk = rank_and_kernel(sys);
    return rk.kernel.size();
}

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N> for hereditary path algebras.
inline std::size_t ext_dim(const Rep& M, const Rep& N) {
    long e = static_cast<long>(hom_dim(M, N)) - euler_form(M.quiver(), M.dims(), N.dims());
    if (e < 0) throw std::logic_error("ext_dim: negative value, Hom solver and Euler form disagree");
    return static_cast<std::size_t>(e);
}

} // namespace klrtor
