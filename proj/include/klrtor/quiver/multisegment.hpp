#pragma once
// Multisegments (Kostant partitions): multiplicities of positive roots summing to d.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrtor/quiver/root_system.hpp"

namespace klrtor {

class Multisegment {
public:
    /// multiplicity[i] counts roots()[i]; the dimension vector is derived.
    Multisegment(std::shared_ptr<const RootSystem> system, std::vector<int> multiplicity)
        : system_(std::move(system)), mult_(std::move(multiplicity)) {
        if (mult_.size() != system_->size()) throw std::invalid_argument("Multisegment: multiplicity vector size mismatch");
        dim_ = DimVector::zero(system_->quiver().vertex_count());
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (mult_[i] < 0) throw std::invalid_argument("Multisegment: negative multiplicity");
            dim_.add_scaled(system_->roots()[i], mult_[i]);
        }
    }

    /// As above, additionally checking that the roots sum to `dim`.
    Multisegment(std::shared_ptr<const RootSystem> system, const DimVector& dim, std::vector<int> multiplicity)
        : Multisegment(std::move(system), std::move(multiplicity)) {
        if (!(dim_ == dim))
            throw std::invalid_argument("Multisegment: roots sum to " + dim_.to_string() + ", expected " + dim.to_string());
    }

    const std::shared_ptr<const RootSystem>& system() const { return system_; }
    const Quiver& quiver() const { return system_->quiver(); }
    const DimVector& dim() const { return dim_; }
    const std::vector<int>& multiplicities() const { return mult_; }
    int multiplicity(std::size_t root) const { return mult_[root]; }

    /// Parses "12+23+2*33" (type A, vertices <= 9), "[1,2]+2*[3,3]", "1-2" or "(0,1,1)+..." forms.
    /// Roots may be repeated; an optional leading 'a' on each root is ignored.
    static Multisegment parse(std::shared_ptr<const RootSystem> system, const std::string& text) {
        const std::size_t n = system->quiver().vertex_count();
        std::vector<int> mult(system->size(), 0);
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s == "0") return Multisegment(system, mult);
        std::size_t pos = 0;
        auto fail = [&](const std::string& why) { throw std::invalid_argument("cannot parse multisegment '" + text + "': " + why); };
        while (pos <= s.size()) {
            std::size_t end = s.find('+', pos);
            if (end == std::string::npos) end = s.size();
            std::string tok = s.substr(pos, end - pos);
            if (tok.empty()) fail("empty term");
            int k = 1;
            if (auto star = tok.find('*'); star != std::string::npos) {
                k = std::stoi(tok.substr(0, star));
                tok = tok.substr(star + 1);
                if (k < 0) fail("negative multiplicity");
            }
            if (!tok.empty() && (tok[0] == 'a' || tok[0] == 'A')) tok = tok.substr(1);
            DimVector root = DimVector::zero(n);
            if (!tok.empty() && tok[0] == '(') {
                if (tok.back() != ')') fail("unterminated vector");
                std::vector<int> e;
                std::string body = tok.substr(1, tok.size() - 2);
                std::size_t p = 0;
                while (p <= body.size()) {
                    std::size_t c = body.find(',', p);
                    if (c == std::string::npos) c = body.size();
                    e.push_back(std::stoi(body.substr(p, c - p)));
                    p = c + 1;
                }
                if (e.size() != n) fail("vector has wrong length");
                root = DimVector(e);
            } else {
                std::size_t i = 0, j = 0;
                if (!tok.empty() && tok[0] == '[') {
                    auto comma = tok.find(',');
                    if (tok.back() != ']' || comma == std::string::npos) fail("bad interval");
                    i = std::stoul(tok.substr(1, comma - 1));
                    j = std::stoul(tok.substr(comma + 1, tok.size() - comma - 2));
                } else if (auto dash = tok.find('-'); dash != std::string::npos) {
                    i = std::stoul(tok.substr(0, dash));
                    j = std::stoul(tok.substr(dash + 1));
                } else if (tok.size() == 2 && std::isdigit(static_cast<unsigned char>(tok[0])) &&
                           std::isdigit(static_cast<unsigned char>(tok[1]))) {
                    i = static_cast<std::size_t>(tok[0] - '0');
                    j = static_cast<std::size_t>(tok[1] - '0');
                } else {
                    fail("unrecognised root '" + tok + "'");
                }
                if (!system->quiver().is_path_ordered_a()) fail("interval notation needs a path-ordered type A quiver");
                if (i < 1 || j < i || j > n) fail("interval out of range");
                for (std::size_t v = i - 1; v < j; ++v) root[v] = 1;
            }
            auto idx = system->index_of(root);
            if (!idx) fail(root.to_string() + " is not a positive root");
            mult[*idx] += k;
            pos = end + 1;
        }
        return Multisegment(system, mult);
    }

    /// Terms in canonical root order, e.g. "12+23+2*33"; "[10,12]" style once vertices exceed 9.
    std::string to_string() const {
        std::string out;
        const bool intervals = quiver().is_path_ordered_a();
        const bool compact = quiver().vertex_count() <= 9;
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (mult_[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (mult_[i] != 1) out += std::to_string(mult_[i]) + "*";
            const auto& r = system_->roots()[i];
            if (intervals) {
                auto [a, b] = *r.interval();
                if (compact) out += std::to_string(a + 1) + std::to_string(b + 1);
                else out += "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
            } else {
                out += r.to_string();
            }
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.system_->quiver() == b.system_->quiver() && a.mult_ == b.mult_;
    }

private:
    std::shared_ptr<const RootSystem> system_;
    DimVector dim_;
    std::vector<int> mult_;
};

/// Block-diagonal sum of interval modules, I_alpha with multiplicity lambda_alpha.
inline Rep rep_of_multisegment(const Multisegment& lambda) {
    const auto& sys = *lambda.system();
    Rep out = Rep::zero(sys.quiver(), DimVector::zero(sys.quiver().vertex_count()));
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (int k = 0; k < lambda.multiplicity(i); ++k) out = direct_sum(out, sys.module(i));
    return out;
}

/// Krull-Schmidt decomposition m with M = sum I_alpha^{m_alpha}: solves H m = h with
/// h_alpha = dim Hom(I_alpha, M).
inline Multisegment decompose(const std::shared_ptr<const RootSystem>& system, const Rep& M) {
    if (!(M.quiver() == system->quiver())) throw std::invalid_argument("decompose: quiver mismatch");
    const std::size_t n = system->size();
    QMatrix H(RationalField{}, n, n);
    std::vector<Rational> h(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) H(a, b) = system->hom(a, b);
        h[a] = static_cast<long>(hom_dim(system->module(a), M));
    }
    auto sol = solve_unique(H, std::span<const Rational>(h));
    if (!sol) throw std::logic_error("decompose: Hom matrix of indecomposables is singular");
    std::vector<int> mult(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& x = (*sol)[i];
        if (x.get_den() != 1 || sgn(x) < 0)
            throw std::logic_error("decompose: non-integral or negative multiplicity " + x.get_str());
        mult[i] = static_cast<int>(x.get_num().get_si());
    }
    Multisegment out(system, mult);
    if (!(out.dim() == M.dims())) throw std::logic_error("decompose: multiplicities do not reproduce dimension vector");
    return out;
}

inline Multisegment decompose(const Rep& M) { return decompose(RootSystem::make(M.quiver()), M); }

} // namespace klrtor
