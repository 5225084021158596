#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/groebner.hpp"

namespace logder {

/// Polynomial vector field theta = sum f_i D_i, stored as the vector of its
/// coefficients. pdeg is the common homogeneous degree of the f_i when they
/// have one (theta_E has pdeg 1, constant fields have pdeg 0).
struct Derivation {
    ModVec vec;
    std::optional<int> pdeg;

    static Derivation from_vec(ModVec v) {
        Derivation d;
        d.pdeg = v.is_zero() ? std::nullopt : v.pdeg();
        d.vec = std::move(v);
        return d;
    }

    size_t nvars() const { return vec.rank(); }

    MultiPoly apply(const MultiPoly& f) const {
        MultiPoly out;
        for (size_t i = 0; i < vec.rank(); ++i) {
            if (vec[i].is_zero()) continue;
            out += vec[i] * f.derivative(i);
        }
        return out;
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < vec.rank(); ++i) {
            if (vec[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + vec[i].str() + ")*D" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }
};

/// theta_E = sum x_i D_i.
inline Derivation euler_derivation(const CycloField& f, size_t l) {
    if (l < 1) throw error("euler: dimension must be positive");
    ModVec v(l);
    for (size_t i = 0; i < l; ++i) v[i] = MultiPoly::variable(f, l, i);
    return Derivation::from_vec(std::move(v));
}

/// v1 D_1 + ... + vl D_l for a constant vector v.
inline Derivation vee(const std::vector<CycloNum>& v) {
    if (v.empty()) throw error("vee: empty vector");
    bool nonzero = false;
    for (const CycloNum& c : v)
        if (!c.is_zero()) nonzero = true;
    if (!nonzero) throw error("vee: zero vector");
    ModVec m(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) m[i] = MultiPoly::constant(v[i], v.size());
    return Derivation::from_vec(std::move(m));
}

/// Determinant of a square polynomial matrix by the column-subset dynamic
/// program; fine for the small matrix sizes used here.
inline MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) throw error("det: empty matrix");
    if (n > 16) throw error("det: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw error("det: matrix not square");
    std::vector<MultiPoly> state(size_t(1) << n);
    std::vector<bool> live(size_t(1) << n, false);
    size_t nvars = 0;
    const CycloField* field = nullptr;
    for (const auto& row : m) {
        for (const MultiPoly& p : row) {
            if (p.is_zero()) continue;
            nvars = p.leading().mono.nvars();
            field = &p.leading().coeff.field();
        }
    }
    if (!field) return MultiPoly();
    state[0] = MultiPoly::constant(CycloNum(*field, 1), nvars);
    live[0] = true;
    for (size_t i = 0; i < n; ++i) {
        std::vector<MultiPoly> next(size_t(1) << n);
        std::vector<bool> next_live(size_t(1) << n, false);
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            if (!live[mask] || state[mask].is_zero()) continue;
            for (size_t c = 0; c < n; ++c) {
                if (mask & (size_t(1) << c)) continue;
                if (m[i][c].is_zero()) continue;
                // sign: one inversion per already-used column to the right of c
                int above = 0;
                for (size_t d = c + 1; d < n; ++d)
                    if (mask & (size_t(1) << d)) ++above;
                MultiPoly contrib = state[mask] * m[i][c];
                if (above % 2) contrib = contrib.scaled(CycloNum(*field, -1));
                size_t nm = mask | (size_t(1) << c);
                next[nm] += contrib;
                next_live[nm] = true;
            }
        }
        state = std::move(next);
        live = std::move(next_live);
    }
    return state[(size_t(1) << n) - 1];
}

namespace detail {

inline std::vector<std::vector<MultiPoly>> coefficient_matrix(const std::vector<Derivation>& ds) {
    const size_t l = ds.size();
    std::vector<std::vector<MultiPoly>> m(l, std::vector<MultiPoly>(l));
    for (size_t j = 0; j < l; ++j) {
        if (ds[j].vec.rank() != l) throw error("coefficient matrix: rank mismatch");
        for (size_t i = 0; i < l; ++i) m[i][j] = ds[j].vec[i];
    }
    return m;
}

} // namespace detail

/// Basis of D(alpha): the Euler derivation together with the vee-images of
/// the kernel basis {e_j - alpha_j e_p : j != p} of the canonical form, p
/// its pivot. The determinant identity det M = lambda alpha is recomputed
/// as a guard.
inline std::vector<Derivation> dalpha_basis(const LinearForm& alpha) {
    const size_t l = alpha.dim();
    const CycloField& f = alpha.field();
    const size_t p = alpha.pivot();
    std::vector<Derivation> basis;
    basis.push_back(euler_derivation(f, l));
    for (size_t j = 0; j < l; ++j) {
        if (j == p) continue;
        std::vector<CycloNum> v(l, CycloNum(f, 0));
        v[j] = CycloNum(f, 1);
        v[p] = CycloNum(f, 0) - alpha[j];
        basis.push_back(vee(v));
    }
    MultiPoly det = poly_matrix_det(detail::coefficient_matrix(basis));
    MultiPoly ap = alpha.poly();
    if (det.is_zero() || !det.divisible_by(ap) || det.degree() != 1)
        throw error("dalpha: determinant is not a scalar multiple of the form");
    return basis;
}

/// theta(alpha_H) divisible by alpha_H for every H.
inline bool membership_test(const Derivation& theta, const Arrangement& a) {
    if (theta.vec.rank() != a.dim()) throw error("membership: dimension mismatch");
    if (theta.vec.is_zero()) return true;
    for (const LinearForm& h : a) {
        MultiPoly applied = theta.apply(h.poly());
        if (applied.is_zero()) continue;
        if (!applied.divisible_by(h.poly())) return false;
    }
    return true;
}

/// D(A) = intersection of the D(alpha_H), folded in input order with
/// minimalization after each step. The result is independent of the fold
/// order. The Euler derivation is checked against the final module.
inline Submodule derivation_module(const Arrangement& a) {
    const size_t l = a.dim();
    Submodule m = Submodule::full(a.field(), l, l);
    for (const LinearForm& h : a) {
        std::vector<ModVec> gens;
        for (Derivation& d : dalpha_basis(h)) gens.push_back(std::move(d.vec));
        Submodule dh(l, std::move(gens));
        Submodule meet = module_intersect(m, dh);
        m = Submodule(l, minimal_generators(meet));
    }
    if (l >= 1 && !m.contains(euler_derivation(a.field(), l).vec))
        throw error("derivation module: Euler derivation missing");
    return m;
}

struct FreenessReport {
    bool free = false;
    size_t generator_count = 0;
    std::vector<int> exponents;
    std::vector<Derivation> basis;
    CycloNum saito_constant;
};

/// ell derivations form a basis of D(A) iff each lies in D(A) and the
/// determinant of their coefficient matrix is a nonzero scalar multiple of
/// Q(A); returns that scalar.
inline std::pair<bool, CycloNum> saito_check(const std::vector<Derivation>& basis,
                                             const Arrangement& a) {
    const size_t l = a.dim();
    const CycloNum zero(a.field(), 0);
    if (basis.size() != l) throw error("saito: expected exactly dim-many derivations");
    for (const Derivation& d : basis) {
        if (d.vec.rank() != l) throw error("saito: derivation dimension mismatch");
        if (!d.vec.is_zero() && !d.vec.is_homogeneous())
            throw homogeneity_error("saito: non-homogeneous derivation");
    }
    for (const Derivation& d : basis)
        if (!membership_test(d, a)) return {false, zero};
    if (l == 0) return {true, CycloNum(a.field(), 1)};
    MultiPoly det = poly_matrix_det(detail::coefficient_matrix(basis));
    if (det.is_zero()) return {false, zero};
    MultiPoly q = a.defining_polynomial();
    CycloNum c = det.leading().coeff / q.leading().coeff;
    if (!(det == q.scaled(c))) return {false, zero};
    return {true, c};
}

/// Freeness by minimal generator count: D(A) has rank ell and is torsion
/// free, so ell generators force freeness, and more than ell generators
/// rule it out. On success the basis degrees are the exponents and the
/// Saito determinant identity is verified as a certificate.
inline FreenessReport is_free(const Arrangement& a) {
    const size_t l = a.dim();
    FreenessReport rep;
    rep.saito_constant = CycloNum(a.field(), 0);
    std::vector<ModVec> gens = minimal_generators(derivation_module(a));
    rep.generator_count = gens.size();
    if (gens.size() != l) return rep;
    rep.free = true;
    for (ModVec& g : gens) rep.basis.push_back(Derivation::from_vec(std::move(g)));
    for (const Derivation& d : rep.basis) {
        if (!d.pdeg) throw error("is_free: non-homogeneous minimal generator");
        rep.exponents.push_back(*d.pdeg);
    }
    std::sort(rep.exponents.begin(), rep.exponents.end());
    auto [ok, c] = saito_check(rep.basis, a);
    if (!ok) throw error("is_free: Saito certificate failed on computed basis");
    rep.saito_constant = c;
    return rep;
}

/// Predicted graded dimension of a free module with basis degrees exps in
/// ell variables: sum of C(p - b + ell - 1, ell - 1).
inline Integer hilbert_prediction(const std::vector<int>& exps, size_t l, int p) {
    Integer total(0);
    for (int b : exps) {
        long top = static_cast<long>(p) - b + static_cast<long>(l) - 1;
        total += binomial(top, static_cast<long>(l) - 1);
    }
    return total;
}

/// dim D(A)_p by exhaustive linear algebra, no Groebner machinery: one
/// unknown per (monomial, slot) pair, and for each hyperplane the linear
/// conditions that theta(alpha_H) vanish on H, obtained by substituting the
/// solved pivot variable and equating coefficients.
inline size_t degreewise_dim_oracle(const Arrangement& a, int p) {
    if (p < 0) throw error("oracle: negative degree");
    const size_t l = a.dim();
    const CycloField& f = a.field();
    std::vector<Monomial> monos = monomials_of_degree(l, p);
    const size_t unknowns = monos.size() * l;
    if (unknowns == 0) return 0;
    Matrix rows;
    for (const LinearForm& h : a) {
        const size_t piv = h.pivot();
        std::vector<MultiPoly> values;
        size_t t = 0;
        for (size_t j = 0; j < l; ++j) {
            if (j == piv) {
                MultiPoly expr;
                size_t u = 0;
                for (size_t k = 0; k < l; ++k) {
                    if (k == piv) continue;
                    if (!h[k].is_zero())
                        expr += MultiPoly::variable(f, l - 1, u).scaled(CycloNum(f, 0) - h[k]);
                    ++u;
                }
                values.push_back(std::move(expr));
            } else {
                values.push_back(MultiPoly::variable(f, l - 1, t));
            }
            if (j != piv) ++t;
        }
        // column entries: substituted monomial times the slot coefficient
        std::vector<MultiPoly> cols(unknowns);
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            MultiPoly sub = MultiPoly::from_term(CycloNum(f, 1), monos[mi]).substituted(values, l - 1);
            for (size_t i = 0; i < l; ++i) {
                if (h[i].is_zero()) continue;
                cols[mi * l + i] = sub.scaled(h[i]);
            }
        }
        std::vector<Monomial> row_monos = monomials_of_degree(l - 1, p);
        for (const Monomial& rm : row_monos) {
            std::vector<CycloNum> row(unknowns, CycloNum(f, 0));
            bool any = false;
            for (size_t u = 0; u < unknowns; ++u) {
                if (cols[u].is_zero()) continue;
                CycloNum c = cols[u].coeff_of(rm);
                if (!c.is_zero()) { row[u] = c; any = true; }
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return unknowns - matrix_rank(std::move(rows));
}

} // namespace logder
