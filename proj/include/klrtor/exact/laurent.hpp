#pragma once
// Integer Laurent polynomials Z[v, v^-1] and graded ranks of free modules.

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrtor/exact/field.hpp"

namespace klrtor {

/// Finitely supported map exponent -> coefficient. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long constant) { add_term(0, BigInt(constant)); } // NOLINT: implicit from integers is intended
    LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
        for (auto [e, c] : terms) add_term(e, BigInt(c));
    }

    static LaurentPoly monomial(int exponent, BigInt coeff = 1) {
        LaurentPoly p;
        p.add_term(exponent, std::move(coeff));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    /// Highest and lowest exponents; undefined for the zero polynomial.
    int max_exponent() const { return terms_.rbegin()->first; }
    int min_exponent() const { return terms_.begin()->first; }

    bool has_nonnegative_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
    }

    void add_term(int exponent, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, BigInt(ca * cb));
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
        return out;
    }

    /// Substitutes v -> v^k (k may be negative).
    LaurentPoly substitute_power(int k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.add_term(e * k, c);
        return out;
    }

    /// Renders with ascending exponents, e.g. "1+q", "v^-1+2v^3", "0".
    std::string to_string(const std::string& var = "v") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = abs(c);
            if (c < 0) out += "-";
            else if (!first) out += "+";
            first = false;
            if (e == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) out += mag.get_str();
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    Terms terms_;
};

/// v -> v^-1 on exponents.
inline LaurentPoly bar_involution(const LaurentPoly& p) { return p.substitute_power(-1); }

/// Degrees of the free generators of a graded free module, kept sorted.
class GradedRank {
public:
    GradedRank() = default;
    explicit GradedRank(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        std::sort(degrees_.begin(), degrees_.end());
    }

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t total() const { return degrees_.size(); }

    /// Generating polynomial sum t^(deg/step); step 2 turns cohomological degrees into q-powers.
    LaurentPoly to_poly(int step = 1) const {
        LaurentPoly p;
        for (int d : degrees_) p.add_term(d / step, 1);
        return p;
    }

    static GradedRank from_poly(const LaurentPoly& p, int step = 1) {
        std::vector<int> degs;
        for (const auto& [e, c] : p.terms()) {
            if (c < 0) throw std::invalid_argument("GradedRank: negative coefficient");
            for (BigInt i = 0; i < c; ++i) degs.push_back(e * step);
        }
        return GradedRank(std::move(degs));
    }

    /// Count of generators in each degree, compared degree by degree.
    bool dominates(const GradedRank& o) const {
        std::map<int, int> mine, theirs;
        for (int d : degrees_) ++mine[d];
        for (int d : o.degrees_) ++theirs[d];
        for (const auto& [d, c] : theirs)
            if (mine[d] < c) return false;
        return true;
    }

    friend bool operator==(const GradedRank&, const GradedRank&) = default;

private:
    std::vector<int> degrees_;
};

} // namespace klrtor
