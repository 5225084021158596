#pragma once

#include <string>
#include <vector>

#include "logder/arrangement.hpp"

namespace logder {

/// Braid arrangement in dimension n: x_i - x_j for i < j, over Q.
inline Arrangement braid(long n) {
    if (n < 1) throw error("braid: n must be at least 1");
    const CycloField& f = CycloField::get(1);
    const size_t l = static_cast<size_t>(n);
    std::vector<LinearForm> forms;
    for (size_t i = 0; i < l; ++i) {
        for (size_t j = i + 1; j < l; ++j) {
            std::vector<CycloNum> c(l, CycloNum(f, 0));
            c[i] = CycloNum(f, 1);
            c[j] = CycloNum(f, -1);
            forms.push_back(LinearForm::make(std::move(c)));
        }
    }
    return Arrangement::make(f, l, std::move(forms));
}

/// Reflection arrangement of the monomial group G(r,p,l): the forms
/// x_i - zeta_r^k x_j for i < j and 0 <= k < r, plus the coordinate
/// hyperplanes exactly when p < r. Field Q(zeta_r), which is Q for r <= 2.
inline Arrangement monomial(long r, long p, long l) {
    if (r < 1 || l < 1) throw error("monomial: r and l must be at least 1");
    if (p < 1 || r % p != 0) throw error("monomial: p must divide r");
    const CycloField& f = CycloField::get(r <= 2 ? 1 : static_cast<unsigned>(r));
    const size_t dim = static_cast<size_t>(l);
    CycloNum zeta = (r == 2) ? CycloNum(f, -1) : CycloNum::zeta(f);
    std::vector<LinearForm> forms;
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            CycloNum zk(f, 1);
            for (long k = 0; k < r; ++k) {
                std::vector<CycloNum> c(dim, CycloNum(f, 0));
                c[i] = CycloNum(f, 1);
                c[j] = CycloNum(f, 0) - zk;
                forms.push_back(LinearForm::make(std::move(c)));
                zk = zk * zeta;
            }
        }
    }
    if (p < r) {
        for (size_t i = 0; i < dim; ++i) {
            std::vector<CycloNum> c(dim, CycloNum(f, 0));
            c[i] = CycloNum(f, 1);
            forms.push_back(LinearForm::make(std::move(c)));
        }
    }
    return Arrangement::make(f, dim, std::move(forms));
}

/// Coxeter arrangements of types B and D as monomial specializations.
inline Arrangement coxeterB(long l) {
    if (l < 2) throw error("coxeterB: l must be at least 2");
    return monomial(2, 1, l);
}
inline Arrangement coxeterD(long l) {
    if (l < 2) throw error("coxeterD: l must be at least 2");
    return monomial(2, 2, l);
}

/// Family descriptor for the built-in catalog.
struct FamilySpec {
    enum class Tag { braid, coxeterB, coxeterD, monomial };
    Tag tag = Tag::braid;
    long n = 0;       // braid: dimension; coxeterB/D: rank
    long r = 0, p = 0, l = 0; // monomial parameters

    static FamilySpec parse_tag(const std::string& name) {
        FamilySpec s;
        if (name == "braid") s.tag = Tag::braid;
        else if (name == "coxeterB") s.tag = Tag::coxeterB;
        else if (name == "coxeterD") s.tag = Tag::coxeterD;
        else if (name == "monomial") s.tag = Tag::monomial;
        else throw error("unknown family: " + name);
        return s;
    }

    Arrangement build() const {
        switch (tag) {
        case Tag::braid: return braid(n);
        case Tag::coxeterB: return coxeterB(n);
        case Tag::coxeterD: return coxeterD(n);
        case Tag::monomial: return monomial(r, p, l);
        }
        throw error("unknown family tag");
    }
};

} // namespace logder
