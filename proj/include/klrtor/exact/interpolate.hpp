#pragma once
// Univariate polynomials over Q and exact Lagrange interpolation.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klrtor/exact/field.hpp"

namespace klrtor {

/// Dense coefficients, lowest degree first, trailing zeros trimmed.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool has_integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (c.get_den() != 1) return false;
        return true;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPoly(std::move(c));
    }
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    std::string to_string(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            const Rational& c = coeffs_[static_cast<std::size_t>(e)];
            if (sgn(c) == 0) continue;
            Rational mag = abs(c);
            out += sgn(c) < 0 ? "-" : (out.empty() ? "" : "+");
            bool unit = mag == 1;
            if (!unit || e == 0) out += mag.get_str();
            if (e > 0) out += var;
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// The unique polynomial of degree < points.size() through all (q, value) pairs.
inline RationalPoly interpolate_integer_polynomial(const std::vector<std::pair<BigInt, BigInt>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    std::set<BigInt> seen;
    for (const auto& [q, _] : points)
        if (!seen.insert(q).second) throw std::invalid_argument("interpolation: duplicate abscissa " + q.get_str());

    RationalPoly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPoly basis(std::vector<Rational>{Rational(1)});
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPoly(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
            denom *= Rational(points[i].first - points[j].first);
        }
        Rational scale = Rational(points[i].second) / denom;
        std::vector<Rational> scaled = basis.coefficients();
        for (auto& c : scaled) c *= scale;
        result = result + RationalPoly(std::move(scaled));
    }
    return result;
}

} // namespace klrtor
