#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logder/rational.hpp"

namespace logder {

/// Univariate polynomial with integer coefficients, stored ascending with
/// no trailing zeros. Used for Poincare and characteristic polynomials.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Integer c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    static IntPoly from_coeffs(std::vector<Integer> coeffs) {
        IntPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }
    static IntPoly monomial(Integer c, size_t deg) {
        IntPoly p;
        if (c == 0) return p;
        p.coeffs_.assign(deg + 1, Integer(0));
        p.coeffs_[deg] = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return from_coeffs(std::move(c));
    }
    IntPoly operator-(const IntPoly& o) const {
        std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
        return from_coeffs(std::move(c));
    }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return from_coeffs(std::move(c));
    }
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    Integer eval(const Integer& x) const {
        Integer acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Display descending, e.g. "t^3 - 6t^2 + 11t - 6".
    std::string str(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            const Integer& c = coeffs_[i];
            if (c == 0) continue;
            Integer a = c < 0 ? Integer(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            bool show_coeff = i == 0 || a != 1;
            if (show_coeff) out += a.get_str();
            if (i > 0) {
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

/// Exact quotient of p by (1 + b*t) when the division is exact.
inline std::optional<IntPoly> try_divide_unit_linear(const IntPoly& p, const Integer& b) {
    if (p.is_zero()) return IntPoly();
    const int d = p.degree();
    if (d == 0) return std::nullopt;
    std::vector<Integer> q(static_cast<size_t>(d), Integer(0));
    q[0] = p.coeff(0);
    for (int i = 1; i < d; ++i) q[static_cast<size_t>(i)] = p.coeff(static_cast<size_t>(i)) - b * q[static_cast<size_t>(i - 1)];
    if (p.coeff(static_cast<size_t>(d)) != b * q[static_cast<size_t>(d - 1)]) return std::nullopt;
    return IntPoly::from_coeffs(std::move(q));
}

/// Factor p as prod (1 + b_i t) with positive integers b_i, returned sorted
/// ascending. Empty optional when no such factorization exists. Constant
/// term must be 1; each b_i is bounded by the t-coefficient, so trial
/// division over that range is complete.
inline std::optional<std::vector<Integer>> factor_unit_linear(const IntPoly& p) {
    if (p.is_zero() || p.coeff(0) != 1) return std::nullopt;
    std::vector<Integer> roots;
    IntPoly rest = p;
    Integer bound = p.coeff(1);
    for (Integer b(1); b <= bound && rest.degree() > 0; ++b) {
        while (true) {
            std::optional<IntPoly> q = try_divide_unit_linear(rest, b);
            if (!q) break;
            roots.push_back(b);
            rest = *q;
        }
    }
    if (rest.degree() != 0 || rest.coeff(0) != 1) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace logder
