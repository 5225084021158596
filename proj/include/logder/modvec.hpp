#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "logder/polynomial.hpp"

namespace logder {

/// A module monomial: a power product sitting in one component of a free
/// module S^r.
struct ModMono {
    Monomial mono;
    size_t comp;
};

/// Term-over-position order on module monomials: grevlex on the power
/// products first, then the smaller component index wins. An elimination
/// block may be imposed: components < elim_split beat components >= elim_split
/// regardless of monomials (used for syzygy / intersection computations).
struct ModuleOrder {
    size_t elim_split = 0; // 0 = plain term-over-position

    int compare(const ModMono& a, const ModMono& b) const {
        if (elim_split > 0) {
            bool a_hi = a.comp < elim_split;
            bool b_hi = b.comp < elim_split;
            if (a_hi != b_hi) return a_hi ? 1 : -1;
        }
        int c = grevlex_compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
    bool less(const ModMono& a, const ModMono& b) const { return compare(a, b) < 0; }
};

/// Element of the free module S^r: one polynomial per component.
class ModVec {
public:
    ModVec() = default;
    explicit ModVec(size_t rank) : comps_(rank) {}
    explicit ModVec(std::vector<MultiPoly> comps) : comps_(std::move(comps)) {}

    size_t rank() const { return comps_.size(); }
    const MultiPoly& operator[](size_t i) const { return comps_[i]; }
    MultiPoly& operator[](size_t i) { return comps_[i]; }
    const std::vector<MultiPoly>& components() const { return comps_; }

    bool is_zero() const {
        for (const MultiPoly& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Leading module monomial and coefficient under the given order.
    struct Lead {
        ModMono mm;
        CycloNum coeff;
    };
    Lead leading(const ModuleOrder& ord) const {
        Lead best;
        bool have = false;
        for (size_t c = 0; c < comps_.size(); ++c) {
            if (comps_[c].is_zero()) continue;
            const Term& t = comps_[c].leading();
            ModMono mm{t.mono, c};
            if (!have || ord.less(best.mm, mm)) {
                best = Lead{mm, t.coeff};
                have = true;
            }
        }
        if (!have) throw error("leading term of zero module vector");
        return best;
    }

    ModVec operator-() const {
        ModVec r(*this);
        for (MultiPoly& p : r.comps_) p = -p;
        return r;
    }
    ModVec operator+(const ModVec& o) const {
        check_rank(o);
        ModVec r(*this);
        for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += o.comps_[i];
        return r;
    }
    ModVec operator-(const ModVec& o) const {
        check_rank(o);
        ModVec r(*this);
        for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= o.comps_[i];
        return r;
    }
    ModVec& operator-=(const ModVec& o) { *this = *this - o; return *this; }
    ModVec& operator+=(const ModVec& o) { *this = *this + o; return *this; }

    ModVec times_term(const CycloNum& c, const Monomial& m) const {
        ModVec r(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].times_term(c, m);
        return r;
    }
    ModVec scaled(const CycloNum& c) const {
        ModVec r(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].scaled(c);
        return r;
    }
    ModVec times_poly(const MultiPoly& p) const {
        ModVec r(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * p;
        return r;
    }

    /// Polynomial degree when homogeneous: every nonzero component is
    /// homogeneous of the same total degree. nullopt otherwise or when zero.
    std::optional<int> pdeg() const {
        std::optional<int> d;
        for (const MultiPoly& p : comps_) {
            if (p.is_zero()) continue;
            std::optional<int> pd = p.homogeneous_degree();
            if (!pd) return std::nullopt;
            if (d && *d != *pd) return std::nullopt;
            d = pd;
        }
        return d;
    }
    bool is_homogeneous() const { return is_zero() || pdeg().has_value(); }

    bool operator==(const ModVec& o) const { return comps_ == o.comps_; }
    bool operator!=(const ModVec& o) const { return !(*this == o); }

    int compare(const ModVec& o) const {
        if (comps_.size() != o.comps_.size())
            return comps_.size() < o.comps_.size() ? -1 : 1;
        for (size_t i = 0; i < comps_.size(); ++i) {
            int c = comps_[i].compare(o.comps_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string str() const {
        std::ostringstream out;
        out << "(";
        for (size_t i = 0; i < comps_.size(); ++i) {
            if (i) out << ", ";
            out << comps_[i].str();
        }
        out << ")";
        return out.str();
    }

private:
    void check_rank(const ModVec& o) const {
        if (comps_.size() != o.comps_.size()) throw error("module vector rank mismatch");
    }

    std::vector<MultiPoly> comps_;
};

/// Compares two nonzero vectors by leading module monomial under plain
/// term-over-position order. Returns -1, 0, 1.
inline int modvec_compare_leading(const ModVec& a, const ModVec& b) {
    if (a.rank() != b.rank()) throw error("modvec compare: rank mismatch");
    if (a.is_zero() || b.is_zero()) throw error("modvec compare: zero vector");
    ModuleOrder ord;
    return ord.compare(a.leading(ord).mm, b.leading(ord).mm);
}

} // namespace logder
