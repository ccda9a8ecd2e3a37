#pragma once
// Test oracle: Kazhdan-Lusztig basis of the Hecke algebra of S_n computed by right
// multiplication in the standard basis, independent of the recursion in weyl/kl.hpp.
//
// Normalisation: (H_s + v)(H_s - v^-1) = 0, b_s = H_s + v,
// b_w = H_w + sum_{y<w} h_{y,w} H_y with h_{y,w} = v^(l(w)-l(y)) P_{y,w}(v^-2).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "klrtor/exact/laurent.hpp"
#include "klrtor/weyl/permutation.hpp"

namespace oracle {

using klrtor::LaurentPoly;
using klrtor::Permutation;
using HeckeElement = std::map<Permutation, LaurentPoly>;

inline void add_to(HeckeElement& a, const Permutation& x, const LaurentPoly& c) {
    auto& slot = a[x];
    slot += c;
    if (slot.is_zero()) a.erase(x);
}

/// h * b_s for the simple reflection s = s_i acting on positions (right multiplication).
inline HeckeElement times_bs(const HeckeElement& h, std::size_t i) {
    const LaurentPoly v = LaurentPoly::monomial(1), vinv = LaurentPoly::monomial(-1);
    HeckeElement out;
    for (const auto& [x, c] : h) {
        Permutation xs = x.right_transposition(i, i + 1);
        add_to(out, xs, c);
        add_to(out, x, c * (xs.length() > x.length() ? v : vinv));
    }
    return out;
}

class HeckeKL {
public:
    explicit HeckeKL(std::size_t n) {
        auto perms = klrtor::all_permutations(n);
        std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
        for (const auto& w : perms) {
            if (w.length() == 0) {
                basis_[w] = {{w, LaurentPoly(1)}};
                continue;
            }
            // a right descent s of w, so w = (ws) s with ws < w
            std::size_t i = 1;
            while (w(i) < w(i + 1)) ++i;
            const Permutation u = w.right_transposition(i, i + 1);
            HeckeElement b = times_bs(basis_.at(u), i);
            // subtract mu(z, u) b_z for z < u with zs < z
            for (const auto& z : perms) {
                if (z.length() >= u.length()) break;
                if (z.right_transposition(i, i + 1).length() > z.length()) continue;
                auto it = basis_.at(u).find(z);
                if (it == basis_.at(u).end()) continue;
                const klrtor::BigInt mu = it->second.coeff(1);
                if (mu == 0) continue;
                for (const auto& [x, c] : basis_.at(z)) add_to(b, x, c * LaurentPoly::monomial(0, -mu));
            }
            basis_[w] = std::move(b);
        }
    }

    /// P_{y,w}(q) read off from h_{y,w}.
    LaurentPoly kl(const Permutation& y, const Permutation& w) const {
        const auto& b = basis_.at(w);
        auto it = b.find(y);
        if (it == b.end()) return {};
        const int gap = w.length() - y.length();
        LaurentPoly p;
        for (const auto& [e, c] : it->second.terms()) {
            if ((gap - e) % 2 != 0) throw std::logic_error("hecke oracle: parity violation");
            p.add_term((gap - e) / 2, c);
        }
        return p;
    }

private:
    std::map<Permutation, HeckeElement> basis_;
};

} // namespace oracle
