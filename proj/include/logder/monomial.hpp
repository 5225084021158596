#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "logder/errors.hpp"

namespace logder {

/// Power product in a fixed number of variables; exponents per variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw error("monomial: negative exponent");
    }

    size_t nvars() const { return exps_.size(); }
    int exp(size_t i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_one() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
        return r;
    }

    /// Exact quotient; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] -= m.exps_[i];
            if (r.exps_[i] < 0) throw error("monomial: inexact division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.exps_.size(); ++i)
            if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
        return r;
    }

    static Monomial var(size_t nvars, size_t i, int power = 1) {
        Monomial m(nvars);
        m.exps_[i] = power;
        return m;
    }

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

private:
    std::vector<int> exps_;
};

/// Graded reverse-lexicographic order: higher total degree wins; on equal
/// degree the monomial whose last nonzero exponent difference is negative
/// is the larger one. Returns -1, 0, 1.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw error("monomial compare: variable count mismatch");
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.nvars(); i-- > 0;) {
        int diff = a.exp(i) - b.exp(i);
        if (diff != 0) return diff < 0 ? 1 : -1;
    }
    return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; }

/// All monomials of the given total degree, in decreasing grevlex order.
inline std::vector<Monomial> monomials_of_degree(size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(Monomial(size_t{0}));
        return out;
    }
    std::vector<int> exps(nvars, 0);
    // enumerate compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, size_t var, int remaining) -> void {
        if (var + 1 == nvars) {
            exps[var] = remaining;
            out.emplace_back(exps);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_compare(a, b) > 0;
    });
    return out;
}

} // namespace logder
