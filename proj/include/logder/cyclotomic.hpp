#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "logder/rational.hpp"

namespace logder {

namespace detail {

// Dense univariate polynomial helpers over Q, coefficients ascending.
using UPoly = std::vector<Rational>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    upoly_trim(c);
    return c;
}

// Division with remainder; divisor must be nonzero.
inline void upoly_divmod(UPoly num, const UPoly& den, UPoly& quot, UPoly& rem) {
    quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / lead;
        size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        upoly_trim(num);
        if (num.size() < den.size()) break;
    }
    upoly_trim(quot);
    rem = std::move(num);
}

// n-th cyclotomic polynomial by the recursive division
// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline UPoly cyclotomic_polynomial(unsigned n) {
    UPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UPoly phi_d = cyclotomic_polynomial(d);
        UPoly quot, rem;
        upoly_divmod(num, phi_d, quot, rem);
        num = std::move(quot);
    }
    return num;
}

} // namespace detail

/// The coefficient field Q(zeta_n). Immutable; obtained through the flyweight
/// registry so one field object per conductor is shared by the whole run.
class CycloField {
public:
    static const CycloField& get(unsigned conductor) {
        if (conductor == 0) throw error("cyclotomic field: conductor must be positive");
        static std::mutex mu;
        static std::map<unsigned, std::unique_ptr<CycloField>>* registry =
            new std::map<unsigned, std::unique_ptr<CycloField>>();
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = (*registry)[conductor];
        if (!slot) slot.reset(new CycloField(conductor));
        return *slot;
    }

    unsigned conductor() const { return conductor_; }
    /// phi(n), the degree of the field extension (1 for the rationals).
    unsigned degree() const { return degree_; }
    /// Phi_n, monic, coefficients ascending.
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    /// Coefficient vector of zeta^k reduced mod Phi_n, for 0 <= k <= 2*(deg-1).
    const std::vector<Rational>& power(unsigned k) const { return powers_[k]; }

    bool operator==(const CycloField& other) const { return this == &other; }

private:
    explicit CycloField(unsigned n) : conductor_(n) {
        min_poly_ = detail::cyclotomic_polynomial(n);
        degree_ = static_cast<unsigned>(min_poly_.size() - 1);
        // zeta^k for k up to 2*(deg-1), reduced; enough to reduce any product.
        powers_.assign(2 * degree_ - 1 == 0 ? 1 : 2 * degree_ - 1, {});
        for (unsigned k = 0; k < powers_.size(); ++k) {
            std::vector<Rational> v(degree_, Rational(0));
            if (k < degree_) {
                v[k] = 1;
            } else {
                // zeta^k = zeta * zeta^(k-1), then fold the top term through
                // x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1}).
                const std::vector<Rational>& prev = powers_[k - 1];
                Rational top = prev[degree_ - 1];
                for (unsigned i = degree_ - 1; i > 0; --i) v[i] = prev[i - 1];
                v[0] = 0;
                if (top != 0)
                    for (unsigned i = 0; i < degree_; ++i) v[i] -= top * min_poly_[i];
            }
            powers_[k] = std::move(v);
        }
    }

    unsigned conductor_;
    unsigned degree_;
    std::vector<Rational> min_poly_;
    std::vector<std::vector<Rational>> powers_;
};

/// Exact element of Q(zeta_n), stored as the canonical reduction mod Phi_n in
/// the power basis 1, zeta, ..., zeta^(phi(n)-1).
class CycloNum {
public:
    CycloNum() : field_(&CycloField::get(1)), coeffs_(1, Rational(0)) {}

    explicit CycloNum(const CycloField& f) : field_(&f), coeffs_(f.degree(), Rational(0)) {}

    CycloNum(const CycloField& f, Rational r) : CycloNum(f) { coeffs_[0] = std::move(r); }

    CycloNum(const CycloField& f, long v) : CycloNum(f, Rational(v)) {}

    static CycloNum zeta(const CycloField& f) {
        CycloNum z(f);
        if (f.degree() == 1) {
            // zeta_1 = 1, zeta_2 = -1: both rational.
            z.coeffs_[0] = f.conductor() == 1 ? 1 : -1;
        } else {
            z.coeffs_[1] = 1;
        }
        return z;
    }

    const CycloField& field() const { return *field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// The value as a rational; only valid when is_rational().
    const Rational& rational_value() const {
        if (!is_rational()) throw error("cyclotomic value is not rational");
        return coeffs_[0];
    }

    CycloNum operator-() const {
        CycloNum r(*field_);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    CycloNum& operator+=(const CycloNum& o) {
        check_field(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        check_field(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    CycloNum operator+(const CycloNum& o) const { CycloNum r(*this); r += o; return r; }
    CycloNum operator-(const CycloNum& o) const { CycloNum r(*this); r -= o; return r; }

    CycloNum operator*(const CycloNum& o) const {
        check_field(o);
        const unsigned deg = field_->degree();
        if (deg == 1) return CycloNum(*field_, coeffs_[0] * o.coeffs_[0]);
        std::vector<Rational> prod(2 * deg - 1, Rational(0));
        for (unsigned i = 0; i < deg; ++i) {
            if (coeffs_[i] == 0) continue;
            for (unsigned j = 0; j < deg; ++j) {
                if (o.coeffs_[j] == 0) continue;
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        CycloNum r(*field_);
        for (unsigned k = 0; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const std::vector<Rational>& pw = field_->power(k);
            for (unsigned i = 0; i < deg; ++i) r.coeffs_[i] += prod[k] * pw[i];
        }
        return r;
    }
    CycloNum& operator*=(const CycloNum& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    CycloNum inverse() const {
        if (is_zero()) throw error("cyclotomic division by zero");
        if (field_->degree() == 1) return CycloNum(*field_, Rational(1) / coeffs_[0]);
        // Bezout: s * a + t * Phi = gcd = const, so a^{-1} = s / const mod Phi.
        detail::UPoly r0 = field_->min_poly();
        detail::UPoly r1(coeffs_.begin(), coeffs_.end());
        detail::upoly_trim(r1);
        detail::UPoly s0{}, s1{Rational(1)};
        while (!r1.empty() && r1.size() > 1) {
            detail::UPoly q, rem;
            detail::upoly_divmod(r0, r1, q, rem);
            detail::UPoly s2 = s0;
            detail::UPoly qs1 = detail::upoly_mul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            detail::upoly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw error("cyclotomic inverse: element shares a factor with Phi_n");
        const Rational& unit = r1[0];
        CycloNum inv(*field_);
        for (size_t i = 0; i < s1.size() && i < inv.coeffs_.size(); ++i)
            inv.coeffs_[i] = s1[i] / unit;
        return inv;
    }

    CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }

    bool operator==(const CycloNum& o) const {
        if (field_ != o.field_) return false;
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    /// Deterministic total order (conductor, then coefficients); used for
    /// canonical sorting, not meaningful as a field order.
    int compare(const CycloNum& o) const {
        if (field_->conductor() != o.field_->conductor())
            return field_->conductor() < o.field_->conductor() ? -1 : 1;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            int c = mpq_cmp(coeffs_[i].get_mpq_t(), o.coeffs_[i].get_mpq_t());
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }
    bool operator<(const CycloNum& o) const { return compare(o) < 0; }

    /// Textual form: plain rational over Q, polynomial in z otherwise,
    /// e.g. "1-2z+z^2".
    std::string str() const {
        if (field_->degree() == 1) return to_string(coeffs_[0]);
        std::ostringstream out;
        bool first = true;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational a = c;
            if (a < 0) {
                out << '-';
                a = -a;
            } else if (!first) {
                out << '+';
            }
            first = false;
            if (k == 0) {
                out << to_string(a);
            } else {
                if (a != 1) out << to_string(a);
                out << 'z';
                if (k > 1) out << '^' << k;
            }
        }
        if (first) out << '0';
        return out.str();
    }

private:
    void check_field(const CycloNum& o) const {
        if (field_ != o.field_)
            throw field_mismatch_error("mixing Q(zeta_" + std::to_string(field_->conductor()) +
                                       ") with Q(zeta_" + std::to_string(o.field_->conductor()) + ")");
    }

    const CycloField* field_;
    std::vector<Rational> coeffs_;
};

inline CycloNum operator*(const Rational& r, const CycloNum& a) {
    return CycloNum(a.field(), r) * a;
}

/// Parses the scalar syntax of the file formats: a rational `p/q`, or a
/// polynomial in `z` such as `1-2z+z^2`, `-z`, `1/2z^3`.
inline CycloNum parse_scalar(const CycloField& f, const std::string& text, int line_no = 0) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&](const std::string& why) -> CycloNum {
        throw parse_error("bad scalar '" + text + "': " + why, line_no);
    };

    CycloNum result(f);
    skip_ws();
    if (pos == text.size()) fail("empty");
    bool any = false;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (any) {
            fail("expected '+' or '-'");
        }
        // optional rational coefficient
        Rational coeff(1);
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string num = text.substr(start, pos - start);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                size_t dstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (dstart == pos) fail("missing denominator");
                num += "/" + text.substr(dstart, pos - dstart);
            }
            coeff = parse_rational(num, line_no);
            have_coeff = true;
        }
        if (pos < text.size() && text[pos] == '*') ++pos;
        // optional z power
        unsigned power = 0;
        bool have_z = false;
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            have_z = true;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (estart == pos) fail("missing exponent");
                power = static_cast<unsigned>(std::stoul(text.substr(estart, pos - estart)));
            }
        }
        if (!have_coeff && !have_z) fail("expected term");
        if (sign < 0) coeff = -coeff;
        CycloNum term(f, coeff);
        if (have_z) {
            CycloNum zp(f, Rational(1));
            CycloNum z = CycloNum::zeta(f);
            for (unsigned i = 0; i < power; ++i) zp *= z;
            term *= zp;
        }
        result += term;
        any = true;
    }
    if (!any) fail("empty");
    return result;
}

} // namespace logder
