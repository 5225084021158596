#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logder/linalg.hpp"
#include "logder/polynomial.hpp"

namespace logder {

/// Nonzero linear form alpha = sum c_i x_i, canonicalized so the first
/// nonzero coefficient is 1. Two forms define the same hyperplane iff their
/// canonical coefficient vectors are equal.
class LinearForm {
public:
    static LinearForm make(std::vector<CycloNum> coeffs) {
        size_t lead = coeffs.size();
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i].is_zero()) { lead = i; break; }
        }
        if (lead == coeffs.size()) throw error("linear form: zero form");
        CycloNum inv = coeffs[lead].inverse();
        for (CycloNum& c : coeffs) c = c * inv;
        LinearForm h;
        h.coeffs_ = std::move(coeffs);
        h.pivot_ = lead;
        return h;
    }

    size_t dim() const { return coeffs_.size(); }
    size_t pivot() const { return pivot_; }
    const CycloNum& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<CycloNum>& coeffs() const { return coeffs_; }
    const CycloField& field() const { return coeffs_[pivot_].field(); }

    bool operator==(const LinearForm& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i].compare(o.coeffs_[i]) != 0) return false;
        return true;
    }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }
    int compare(const LinearForm& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            int c = coeffs_[i].compare(o.coeffs_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    MultiPoly poly() const {
        std::vector<Term> terms;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            terms.push_back({coeffs_[i], Monomial::var(coeffs_.size(), i)});
        }
        return MultiPoly::from_terms(std::move(terms));
    }

    std::string str() const { return poly().str(); }

private:
    std::vector<CycloNum> coeffs_;
    size_t pivot_ = 0;
};

/// Element of the intersection lattice: a linear subspace stored by its
/// annihilator in reduced row echelon form. rank() is the codimension.
class Subspace {
public:
    static Subspace whole(size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }

    static Subspace from_rows(size_t ambient, Matrix rows) {
        for (const auto& r : rows)
            if (r.size() != ambient) throw error("subspace: row length mismatch");
        rref(rows);
        while (!rows.empty()) {
            bool zero = true;
            for (const CycloNum& c : rows.back())
                if (!c.is_zero()) { zero = false; break; }
            if (!zero) break;
            rows.pop_back();
        }
        Subspace s;
        s.ambient_ = ambient;
        s.rows_ = std::move(rows);
        return s;
    }

    size_t ambient() const { return ambient_; }
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return ambient_ - rows_.size(); }
    const Matrix& rows() const { return rows_; }

    /// Residue of v modulo the row space; zero iff v lies in it.
    std::vector<CycloNum> reduce(std::vector<CycloNum> v) const {
        if (v.size() != ambient_) throw error("subspace: vector length mismatch");
        for (const auto& row : rows_) {
            size_t p = 0;
            while (p < ambient_ && row[p].is_zero()) ++p;
            if (p == ambient_ || v[p].is_zero()) continue;
            CycloNum factor = v[p];
            for (size_t j = p; j < ambient_; ++j) v[j] = v[j] - factor * row[j];
        }
        return v;
    }

    bool annihilator_contains(const std::vector<CycloNum>& v) const {
        for (const CycloNum& c : reduce(v))
            if (!c.is_zero()) return false;
        return true;
    }

    /// Geometric containment: this subspace lies inside o iff every defining
    /// form of o already vanishes on this one.
    bool subset_of(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw error("subspace: ambient mismatch");
        for (const auto& row : o.rows_)
            if (!annihilator_contains(row)) return false;
        return true;
    }

    Subspace intersect(const LinearForm& h) const {
        if (h.dim() != ambient_) throw error("subspace: form dimension mismatch");
        Matrix rows = rows_;
        rows.push_back(h.coeffs());
        return from_rows(ambient_, std::move(rows));
    }

    std::vector<size_t> pivot_columns() const {
        std::vector<size_t> cols;
        for (const auto& row : rows_) {
            size_t p = 0;
            while (p < ambient_ && row[p].is_zero()) ++p;
            cols.push_back(p);
        }
        return cols;
    }

    bool operator==(const Subspace& o) const {
        if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
        for (size_t i = 0; i < rows_.size(); ++i)
            for (size_t j = 0; j < ambient_; ++j)
                if (rows_[i][j].compare(o.rows_[i][j]) != 0) return false;
        return true;
    }

    /// Canonical textual identity, stable across runs; used for lattice
    /// dedup, report sorting, and memo keys.
    std::string key() const {
        std::string k = std::to_string(ambient_) + ":" + std::to_string(rows_.size());
        for (const auto& row : rows_) {
            k += "[";
            for (size_t j = 0; j < ambient_; ++j) {
                if (j) k += ",";
                k += row[j].str();
            }
            k += "]";
        }
        return k;
    }

private:
    size_t ambient_ = 0;
    Matrix rows_;
};

/// Central hyperplane arrangement: a field, an ambient dimension, and a
/// duplicate-free list of canonical linear forms.
class Arrangement {
public:
    static Arrangement make(const CycloField& f, size_t dim, std::vector<LinearForm> forms) {
        Arrangement a;
        a.field_ = &f;
        a.dim_ = dim;
        for (LinearForm& h : forms) {
            if (h.dim() != dim) throw error("arrangement: form length mismatch");
            if (h.field().conductor() != f.conductor())
                throw field_mismatch_error("form over Q(zeta_" +
                                           std::to_string(h.field().conductor()) +
                                           ") in an arrangement over Q(zeta_" +
                                           std::to_string(f.conductor()) + ")");
            bool dup = false;
            for (const LinearForm& seen : a.forms_)
                if (seen == h) { dup = true; break; }
            if (!dup) a.forms_.push_back(std::move(h));
        }
        return a;
    }

    const CycloField& field() const { return *field_; }
    size_t dim() const { return dim_; }
    size_t size() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }
    const LinearForm& operator[](size_t i) const { return forms_[i]; }
    const std::vector<LinearForm>& forms() const { return forms_; }

    std::vector<LinearForm>::const_iterator begin() const { return forms_.begin(); }
    std::vector<LinearForm>::const_iterator end() const { return forms_.end(); }

    bool contains(const LinearForm& h) const {
        for (const LinearForm& f : forms_)
            if (f == h) return true;
        return false;
    }
    size_t index_of(const LinearForm& h) const {
        for (size_t i = 0; i < forms_.size(); ++i)
            if (forms_[i] == h) return i;
        throw error("arrangement: hyperplane not present");
    }

    Arrangement deleted(size_t index) const {
        if (index >= forms_.size()) throw error("arrangement: hyperplane not present");
        std::vector<LinearForm> rest;
        for (size_t i = 0; i < forms_.size(); ++i)
            if (i != index) rest.push_back(forms_[i]);
        return make(*field_, dim_, std::move(rest));
    }
    Arrangement deleted(const LinearForm& h) const { return deleted(index_of(h)); }

    /// Q(A), the product of the canonical defining forms; 1 when empty.
    MultiPoly defining_polynomial() const {
        MultiPoly q = MultiPoly::constant(CycloNum(*field_, 1), dim_);
        for (const LinearForm& h : forms_) q = q * h.poly();
        return q;
    }

    /// Intersection of all hyperplanes, as a lattice-style subspace.
    Subspace common_intersection() const {
        Matrix rows;
        for (const LinearForm& h : forms_) rows.push_back(h.coeffs());
        return Subspace::from_rows(dim_, std::move(rows));
    }

    /// Codimension of the common intersection.
    size_t essential_rank() const { return common_intersection().rank(); }

    /// Canonical identity string: conductor, dimension, and the sorted form
    /// list. Equal strings mean equal arrangements as sets.
    std::string key() const {
        std::vector<std::string> names;
        for (const LinearForm& h : forms_) {
            std::string n;
            for (size_t j = 0; j < dim_; ++j) {
                if (j) n += ",";
                n += h[j].str();
            }
            names.push_back(std::move(n));
        }
        std::sort(names.begin(), names.end());
        std::string k = "f" + std::to_string(field_->conductor()) + ";d" + std::to_string(dim_);
        for (const std::string& n : names) k += ";" + n;
        return k;
    }

private:
    const CycloField* field_ = nullptr;
    size_t dim_ = 0;
    std::vector<LinearForm> forms_;
};

/// Coordinates chosen when passing to a subspace X: new coordinate t is the
/// ambient variable coordinate_of[t], and each eliminated pivot variable is
/// the recorded combination of the new coordinates.
struct RestrictionMap {
    std::vector<size_t> coordinate_of;
    std::vector<std::pair<size_t, std::vector<CycloNum>>> pivot_exprs;

    std::string str() const {
        std::string out;
        for (size_t t = 0; t < coordinate_of.size(); ++t) {
            if (!out.empty()) out += ", ";
            out += "u" + std::to_string(t + 1) + " = x" + std::to_string(coordinate_of[t] + 1);
        }
        for (const auto& [p, expr] : pivot_exprs) {
            if (!out.empty()) out += ", ";
            out += "x" + std::to_string(p + 1) + " = ";
            bool first = true;
            bool all_zero = true;
            for (size_t t = 0; t < expr.size(); ++t) {
                if (expr[t].is_zero()) continue;
                all_zero = false;
                if (!first) out += " + ";
                out += "(" + expr[t].str() + ")*u" + std::to_string(t + 1);
                first = false;
            }
            if (all_zero) out += "0";
        }
        return out;
    }
};

/// True when X is an intersection of hyperplanes of A, i.e. a lattice
/// element: X must equal the intersection of all hyperplanes containing it.
inline bool in_lattice(const Arrangement& a, const Subspace& x) {
    if (x.ambient() != a.dim()) return false;
    Matrix rows;
    for (const LinearForm& h : a)
        if (x.annihilator_contains(h.coeffs())) rows.push_back(h.coeffs());
    return Subspace::from_rows(a.dim(), std::move(rows)) == x;
}

/// A_X, the hyperplanes containing X.
inline Arrangement localize(const Arrangement& a, const Subspace& x) {
    if (!in_lattice(a, x)) throw error("localize: subspace not in the lattice");
    std::vector<LinearForm> forms;
    for (const LinearForm& h : a)
        if (x.annihilator_contains(h.coeffs())) forms.push_back(h);
    return Arrangement::make(a.field(), a.dim(), std::move(forms));
}

/// A^X, the traces of the remaining hyperplanes on X, in coordinates given
/// by the non-pivot variables of X. Substituting each pivot variable by its
/// solved expression rewrites every surviving form; proportional results
/// collapse in Arrangement::make. A surviving form cannot vanish, since a
/// hyperplane whose trace is all of X would contain X.
inline std::pair<Arrangement, RestrictionMap> restrict(const Arrangement& a, const Subspace& x) {
    if (!in_lattice(a, x)) throw error("restrict: subspace not in the lattice");
    const size_t l = a.dim();
    std::vector<size_t> pivots = x.pivot_columns();
    std::vector<bool> is_pivot(l, false);
    for (size_t p : pivots) is_pivot[p] = true;
    RestrictionMap map;
    for (size_t j = 0; j < l; ++j)
        if (!is_pivot[j]) map.coordinate_of.push_back(j);
    const size_t newdim = map.coordinate_of.size();
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<CycloNum> expr;
        for (size_t t = 0; t < newdim; ++t)
            expr.push_back(CycloNum(a.field(), 0) - x.rows()[i][map.coordinate_of[t]]);
        map.pivot_exprs.push_back({pivots[i], std::move(expr)});
    }
    std::vector<LinearForm> forms;
    for (const LinearForm& h : a) {
        if (x.annihilator_contains(h.coeffs())) continue;
        std::vector<CycloNum> beta;
        for (size_t t = 0; t < newdim; ++t) {
            CycloNum c = h[map.coordinate_of[t]];
            for (size_t i = 0; i < pivots.size(); ++i)
                c = c + h[pivots[i]] * map.pivot_exprs[i].second[t];
            beta.push_back(std::move(c));
        }
        forms.push_back(LinearForm::make(std::move(beta)));
    }
    return {Arrangement::make(a.field(), newdim, std::move(forms)), std::move(map)};
}

/// Restriction to the hyperplane H itself (H viewed as a rank-1 subspace).
inline std::pair<Arrangement, RestrictionMap> restrict(const Arrangement& a, const LinearForm& h) {
    if (!a.contains(h)) throw error("restrict: hyperplane not present");
    return restrict(a, Subspace::whole(a.dim()).intersect(h));
}

/// Quotient by the common intersection of all hyperplanes: coordinates are
/// cut down to the pivot columns of the stacked form matrix, which
/// complement the kernel. Returns the essential arrangement and the
/// dimension drop.
inline std::pair<Arrangement, size_t> essentialize(const Arrangement& a) {
    Subspace core = a.common_intersection();
    std::vector<size_t> pivots = core.pivot_columns();
    const size_t drop = a.dim() - pivots.size();
    std::vector<LinearForm> forms;
    for (const LinearForm& h : a) {
        std::vector<CycloNum> beta;
        for (size_t p : pivots) beta.push_back(h[p]);
        forms.push_back(LinearForm::make(std::move(beta)));
    }
    return {Arrangement::make(a.field(), pivots.size(), std::move(forms)), drop};
}

} // namespace logder
