#pragma once
// Positive roots of a Dynkin quiver together with the indecomposables I_alpha and the
// matrix H(alpha, beta) = dim Hom(I_alpha, I_beta) (type A only).

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klrtor/quiver/quiver.hpp"
#include "klrtor/quiver/rep.hpp"

namespace klrtor {

class RootSystem {
public:
    explicit RootSystem(Quiver q) : quiver_(std::move(q)), roots_(positive_roots(quiver_)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
        if (quiver_.is_path_ordered_a()) build_hom_matrix();
    }

    static std::shared_ptr<const RootSystem> make(Quiver q) { return std::make_shared<const RootSystem>(std::move(q)); }

    const Quiver& quiver() const { return quiver_; }
    const std::vector<DimVector>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

    std::optional<std::size_t> index_of(const DimVector& root) const {
        auto it = index_.find(root);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_modules() const { return !modules_.empty(); }

    const Rep& module(std::size_t i) const {
        require_modules();
        return modules_[i];
    }

    /// dim Hom(I_alpha, I_beta).
    long hom(std::size_t alpha, std::size_t beta) const {
        require_modules();
        return hom_[alpha * roots_.size() + beta];
    }

    /// h(alpha) = dim Hom(I_alpha, M_lambda), by additivity over the summands of M_lambda.
    std::vector<long> hom_profile(const std::vector<int>& multiplicity) const {
        require_modules();
        std::vector<long> h(roots_.size(), 0);
        for (std::size_t a = 0; a < roots_.size(); ++a)
            for (std::size_t b = 0; b < roots_.size(); ++b)
                if (multiplicity[b]) h[a] += hom(a, b) * multiplicity[b];
        return h;
    }

    /// An order of root indices in which H is upper unitriangular (Hom only goes forward).
    const std::vector<std::size_t>& directed_order() const {
        require_modules();
        return directed_order_;
    }

private:
    void require_modules() const {
        if (modules_.empty())
            throw std::invalid_argument("explicit indecomposables are only available for path-ordered type A quivers");
    }

    void build_hom_matrix() {
        const std::size_t n = roots_.size();
        for (const auto& r : roots_) modules_.push_back(interval_module(quiver_, r));
        hom_.assign(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) hom_[a * n + b] = static_cast<long>(hom_dim(modules_[a], modules_[b]));

        // Dynkin categories are directed: End(I_alpha) = k and nonzero Homs form no cycles.
        // Verify by topological sort; this is what makes H invertible over Z.
        std::vector<int> indegree(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            if (hom_[a * n + a] != 1) throw std::logic_error("RootSystem: End(I_alpha) is not one-dimensional");
            for (std::size_t b = 0; b < n; ++b)
                if (a != b && hom_[a * n + b] != 0) ++indegree[b];
        }
        std::vector<bool> done(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t pick = n;
            for (std::size_t a = 0; a < n; ++a)
                if (!done[a] && indegree[a] == 0) {
                    pick = a;
                    break;
                }
            if (pick == n) throw std::logic_error("RootSystem: Hom relation among indecomposables has a cycle");
            done[pick] = true;
            directed_order_.push_back(pick);
            for (std::size_t b = 0; b < n; ++b)
                if (b != pick && hom_[pick * n + b] != 0) --indegree[b];
        }
    }

    Quiver quiver_;
    std::vector<DimVector> roots_;
    std::map<DimVector, std::size_t> index_;
    std::vector<Rep> modules_;
    std::vector<long> hom_;
    std::vector<std::size_t> directed_order_;
};

} // namespace klrtor
