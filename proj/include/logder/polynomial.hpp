#pragma once

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "logder/cyclotomic.hpp"
#include "logder/monomial.hpp"

namespace logder {

struct Term {
    CycloNum coeff;
    Monomial mono;
};

/// Multivariate polynomial over a cyclotomic field. Terms are kept sorted
/// strictly decreasing in grevlex, with no zero coefficients and no duplicate
/// monomials, so equal polynomials have equal representations.
class MultiPoly {
public:
    MultiPoly() = default;

    MultiPoly(const CycloField& f, Rational c, size_t nvars) {
        CycloNum v(f, std::move(c));
        if (!v.is_zero()) terms_.push_back({std::move(v), Monomial(nvars)});
    }

    static MultiPoly constant(const CycloNum& c, size_t nvars) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars)});
        return p;
    }

    static MultiPoly variable(const CycloField& f, size_t nvars, size_t i) {
        MultiPoly p;
        p.terms_.push_back({CycloNum(f, Rational(1)), Monomial::var(nvars, i)});
        return p;
    }

    static MultiPoly from_term(CycloNum c, Monomial m) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    /// Builds from an unsorted term list; merges duplicates, drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return grevlex_compare(a.mono, b.mono) > 0;
        });
        MultiPoly p;
        for (Term& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nvars() const { return terms_.empty() ? 0 : terms_.front().mono.nvars(); }

    const Term& leading() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.front();
    }

    /// Coefficient of the given monomial, zero (over the field of the first
    /// term, or Q for the zero polynomial) when absent.
    CycloNum coeff_of(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.mono == m) return t.coeff;
        if (terms_.empty()) return CycloNum(CycloField::get(1), 0);
        return CycloNum(terms_.front().coeff.field(), 0);
    }

    /// Everything but the leading term.
    MultiPoly tail() const {
        MultiPoly r;
        if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Homogeneous total degree, or nullopt when terms mix degrees.
    /// The zero polynomial is homogeneous of every degree (returns nullopt
    /// by convention here; callers treat zero separately).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.front().mono.degree();
        for (const Term& t : terms_)
            if (t.mono.degree() != d) return std::nullopt;
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const { return merged(o, false); }
    MultiPoly operator-(const MultiPoly& o) const { return merged(o, true); }
    MultiPoly& operator+=(const MultiPoly& o) { *this = merged(o, false); return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = merged(o, true); return *this; }

    /// Multiplication by a single term; preserves term order.
    MultiPoly times_term(const CycloNum& c, const Monomial& m) const {
        MultiPoly r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            CycloNum nc = t.coeff * c;
            if (!nc.is_zero()) r.terms_.push_back({std::move(nc), t.mono * m});
        }
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly acc;
        for (const Term& t : o.terms_) acc += times_term(t.coeff, t.mono);
        return acc;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scaled(const CycloNum& c) const {
        return times_term(c, Monomial(terms_.empty() ? 0 : nvars()));
    }

    /// d/dx_i.
    MultiPoly derivative(size_t var) const {
        std::vector<Term> out;
        for (const Term& t : terms_) {
            int e = t.mono.exp(var);
            if (e == 0) continue;
            std::vector<int> exps = t.mono.exps();
            exps[var] -= 1;
            out.push_back({t.coeff * CycloNum(t.coeff.field(), Rational(e)), Monomial(std::move(exps))});
        }
        return from_terms(std::move(out));
    }

    /// Substitutes polynomials for all variables: `values[i]` replaces x_i.
    /// The values share a common variable count of `out_nvars`.
    MultiPoly substituted(const std::vector<MultiPoly>& values, size_t out_nvars) const {
        MultiPoly acc;
        for (const Term& t : terms_) {
            MultiPoly prod = MultiPoly::constant(t.coeff, out_nvars);
            for (size_t i = 0; i < t.mono.nvars(); ++i)
                for (int e = 0; e < t.mono.exp(i); ++e) prod *= values[i];
            acc += prod;
        }
        return acc;
    }

    MultiPoly pow(unsigned e) const {
        if (e == 0) throw error("poly pow: use an explicit constant for exponent 0");
        MultiPoly r = *this;
        for (unsigned i = 1; i < e; ++i) r *= *this;
        return r;
    }

    /// Remainder of division by a single nonzero polynomial g: repeatedly
    /// cancels every term divisible by the leading monomial of g.
    MultiPoly remainder(const MultiPoly& g) const {
        if (g.is_zero()) throw error("division by zero polynomial");
        MultiPoly rem;
        MultiPoly work = *this;
        const Term& lt = g.leading();
        while (!work.is_zero()) {
            const Term& wt = work.leading();
            if (lt.mono.divides(wt.mono)) {
                CycloNum factor = wt.coeff / lt.coeff;
                work -= g.times_term(factor, wt.mono / lt.mono);
            } else {
                rem.terms_.push_back(wt);
                work.terms_.erase(work.terms_.begin());
            }
        }
        return rem;
    }

    bool divisible_by(const MultiPoly& g) const { return remainder(g).is_zero(); }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Deterministic total order for canonical sorting.
    int compare(const MultiPoly& o) const {
        size_t n = std::min(terms_.size(), o.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            int c = grevlex_compare(terms_[i].mono, o.terms_[i].mono);
            if (c != 0) return c;
            c = terms_[i].coeff.compare(o.terms_[i].coeff);
            if (c != 0) return c;
        }
        if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
        return 0;
    }

    /// Renders with variables named x1..xn, cyclotomic coefficients in
    /// parentheses: "x1^2*x2 - (1+z)*x3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const Term& t : terms_) {
            std::string cs = t.coeff.str();
            bool negated = false;
            if (t.coeff.is_rational() && t.coeff.rational_value() < 0) {
                negated = true;
                cs = (-t.coeff).str();
            }
            out << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
            first = false;
            bool needs_parens = !t.coeff.is_rational();
            bool coeff_is_one = cs == "1";
            if (t.mono.is_one()) {
                out << (needs_parens ? "(" + cs + ")" : cs);
            } else {
                if (!coeff_is_one) out << (needs_parens ? "(" + cs + ")" : cs) << "*";
                bool first_var = true;
                for (size_t i = 0; i < t.mono.nvars(); ++i) {
                    int e = t.mono.exp(i);
                    if (e == 0) continue;
                    if (!first_var) out << "*";
                    first_var = false;
                    out << "x" << (i + 1);
                    if (e > 1) out << "^" << e;
                }
            }
        }
        return out.str();
    }

private:
    // Single-pass merge of two sorted term lists.
    MultiPoly merged(const MultiPoly& o, bool subtract) const {
        MultiPoly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int cmp;
            if (i == terms_.size()) cmp = -1;
            else if (j == o.terms_.size()) cmp = 1;
            else cmp = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                Term t = o.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                CycloNum c = subtract ? terms_[i].coeff - o.terms_[j].coeff
                                      : terms_[i].coeff + o.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

} // namespace logder
