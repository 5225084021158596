#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "logder/modvec.hpp"

namespace logder {

namespace detail {

// Full reduction of v against basis[i] (skipping skip_idx), leads aligned
// with basis. Every term of the result is irreducible.
inline ModVec reduce_full(const ModVec& v, const std::vector<ModVec>& basis,
                          const std::vector<ModVec::Lead>& leads, const ModuleOrder& ord,
                          size_t skip_idx = static_cast<size_t>(-1)) {
    ModVec result(v.rank());
    ModVec work = v;
    while (!work.is_zero()) {
        ModVec::Lead wl = work.leading(ord);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == skip_idx) continue;
            if (leads[k].mm.comp != wl.mm.comp || !leads[k].mm.mono.divides(wl.mm.mono)) continue;
            CycloNum factor = wl.coeff / leads[k].coeff;
            work -= basis[k].times_term(factor, wl.mm.mono / leads[k].mm.mono);
            reduced = true;
            break;
        }
        if (!reduced) {
            result[wl.mm.comp] += MultiPoly::from_term(wl.coeff, wl.mm.mono);
            work[wl.mm.comp] = work[wl.mm.comp].tail();
        }
    }
    return result;
}

inline ModVec make_monic(ModVec v, const ModuleOrder& ord) {
    ModVec::Lead lead = v.leading(ord);
    if (lead.coeff.is_rational() && lead.coeff.rational_value() == 1) return v;
    return v.scaled(lead.coeff.inverse());
}

// component index if the vector is supported in a single component, else -1
inline int single_component(const ModVec& v) {
    int sc = -1;
    for (size_t c = 0; c < v.rank(); ++c) {
        if (v[c].is_zero()) continue;
        if (sc >= 0) return -1;
        sc = static_cast<int>(c);
    }
    return sc;
}

struct PairKey {
    int deg;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace detail

/// Full normal form of v against G under the given order: no term of the
/// result is divisible by any leading term of G, and v - result lies in the
/// submodule generated by G. Deterministic for a fixed G.
inline ModVec normal_form(const ModVec& v, const std::vector<ModVec>& G,
                          const ModuleOrder& ord = ModuleOrder{}) {
    if (G.empty() || v.is_zero()) return v;
    std::vector<ModVec::Lead> leads;
    leads.reserve(G.size());
    for (const ModVec& g : G) {
        if (g.is_zero()) throw error("normal_form: zero vector in basis");
        if (g.rank() != v.rank()) throw error("normal_form: rank mismatch");
        leads.push_back(g.leading(ord));
    }
    return detail::reduce_full(v, G, leads, ord);
}

/// Buchberger's algorithm for submodules of S^r, with the chain criterion,
/// the coprimality criterion on pairs supported in a single component, and
/// degree-by-degree pair selection. Returns the reduced Groebner basis:
/// monic, no leading term divides another, tails fully reduced, sorted
/// decreasing by leading module monomial. Unique for a given submodule and
/// order, which keeps downstream certificates stable.
inline std::vector<ModVec> buchberger(const std::vector<ModVec>& gens,
                                      const ModuleOrder& ord = ModuleOrder{}) {
    using detail::PairKey;

    std::vector<ModVec> basis;
    std::vector<ModVec::Lead> leads;
    std::vector<int> single;
    auto add_element = [&](ModVec v) {
        basis.push_back(detail::make_monic(std::move(v), ord));
        leads.push_back(basis.back().leading(ord));
        single.push_back(detail::single_component(basis.back()));
    };
    for (const ModVec& g : gens)
        if (!g.is_zero()) add_element(g);

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].mm.comp != leads[j].mm.comp) continue;
            Monomial l = Monomial::lcm(leads[i].mm.mono, leads[j].mm.mono);
            queue.insert(PairKey{l.degree(), i, j});
            pending.insert({i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    auto treated = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return pending.find({a, b}) == pending.end();
    };

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pk.i, pk.j});

        Monomial l = Monomial::lcm(leads[pk.i].mm.mono, leads[pk.j].mm.mono);

        // coprimality criterion, valid when both vectors live in one component
        if (single[pk.i] >= 0 && single[pk.i] == single[pk.j] &&
            l.degree() == leads[pk.i].mm.mono.degree() + leads[pk.j].mm.mono.degree()) {
            continue;
        }
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (leads[k].mm.comp != leads[pk.i].mm.comp) continue;
            if (!leads[k].mm.mono.divides(l)) continue;
            if (treated(pk.i, k) && treated(pk.j, k)) skip = true;
        }
        if (skip) continue;

        const CycloField& f = leads[pk.i].coeff.field();
        ModVec spair = basis[pk.i].times_term(CycloNum(f, 1), l / leads[pk.i].mm.mono) -
                       basis[pk.j].times_term(CycloNum(f, 1), l / leads[pk.j].mm.mono);
        ModVec r = detail::reduce_full(spair, basis, leads, ord);
        if (r.is_zero()) continue;
        add_element(std::move(r));
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop entries whose leading term is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (leads[j].mm.comp != leads[i].mm.comp) continue;
            if (!leads[j].mm.mono.divides(leads[i].mm.mono)) continue;
            if (leads[i].mm.mono == leads[j].mm.mono && j > i) continue;
            keep[i] = false;
        }
    }
    std::vector<ModVec> minimal;
    std::vector<ModVec::Lead> min_leads;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        minimal.push_back(std::move(basis[i]));
        min_leads.push_back(leads[i]);
    }

    // tail-reduce each element against the others
    std::vector<ModVec> reduced;
    reduced.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        ModVec r = detail::reduce_full(minimal[i], minimal, min_leads, ord, i);
        reduced.push_back(detail::make_monic(std::move(r), ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
        return ord.compare(a.leading(ord).mm, b.leading(ord).mm) > 0;
    });
    return reduced;
}

/// Graded submodule of S^r given by generators, with a lazily computed
/// Groebner basis. Values are immutable once built; intended to be owned by
/// a single computation strand.
class Submodule {
public:
    Submodule(size_t rank, std::vector<ModVec> gens) : rank_(rank) {
        for (ModVec& g : gens) {
            if (g.is_zero()) continue;
            if (g.rank() != rank_) throw error("submodule: generator rank mismatch");
            gens_.push_back(std::move(g));
        }
        graded_ = true;
        for (const ModVec& g : gens_)
            if (!g.is_homogeneous()) graded_ = false;
    }

    static Submodule full(const CycloField& f, size_t rank, size_t nvars) {
        std::vector<ModVec> units;
        for (size_t i = 0; i < rank; ++i) {
            ModVec e(rank);
            e[i] = MultiPoly::constant(CycloNum(f, 1), nvars);
            units.push_back(std::move(e));
        }
        return Submodule(rank, std::move(units));
    }

    size_t rank() const { return rank_; }
    const std::vector<ModVec>& generators() const { return gens_; }
    bool graded() const { return graded_; }

    const std::vector<ModVec>& groebner() const {
        if (!gb_) gb_ = buchberger(gens_);
        return *gb_;
    }

    bool contains(const ModVec& v) const {
        if (v.rank() != rank_) throw error("membership: rank mismatch");
        if (v.is_zero()) return true;
        return normal_form(v, groebner()).is_zero();
    }

    bool contains_submodule(const Submodule& o) const {
        for (const ModVec& g : o.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool equals(const Submodule& o) const {
        return rank_ == o.rank_ && contains_submodule(o) && o.contains_submodule(*this);
    }

private:
    size_t rank_;
    std::vector<ModVec> gens_;
    bool graded_;
    mutable std::optional<std::vector<ModVec>> gb_;
};

inline bool module_membership(const ModVec& v, const Submodule& M) { return M.contains(v); }

/// Generating set of the syzygy module of the given vectors: all (a_1..a_m)
/// with sum a_i * gens_i = 0. Computed by tagging generator i with e_i in
/// S^(r+m) and eliminating the ambient block with a position-block order.
inline Submodule syzygy_basis(const std::vector<ModVec>& gens) {
    if (gens.empty()) return Submodule(0, {});
    const size_t r = gens[0].rank();
    const size_t m = gens.size();
    size_t nvars = 0;
    const CycloField* field = nullptr;
    for (const ModVec& g : gens) {
        if (g.rank() != r) throw error("syzygy: rank mismatch");
        if (g.is_zero()) throw error("syzygy: zero generator");
        for (size_t c = 0; c < r; ++c) {
            if (g[c].is_zero()) continue;
            nvars = g[c].leading().mono.nvars();
            field = &g[c].leading().coeff.field();
        }
    }
    if (!field) throw error("syzygy: no field context");
    std::vector<ModVec> tagged;
    tagged.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        ModVec t(r + m);
        for (size_t c = 0; c < r; ++c) t[c] = gens[i][c];
        t[r + i] = MultiPoly::constant(CycloNum(*field, 1), nvars);
        tagged.push_back(std::move(t));
    }
    ModuleOrder elim{r};
    std::vector<ModVec> gb = buchberger(tagged, elim);
    std::vector<ModVec> syz;
    for (const ModVec& v : gb) {
        bool ambient_zero = true;
        for (size_t c = 0; c < r && ambient_zero; ++c)
            if (!v[c].is_zero()) ambient_zero = false;
        if (!ambient_zero) continue;
        ModVec s(m);
        for (size_t i = 0; i < m; ++i) s[i] = v[r + i];
        syz.push_back(std::move(s));
    }
    return Submodule(m, std::move(syz));
}

/// Intersection of two submodules of the same free module, through syzygies
/// of the concatenated generator lists: a relation sum a_i m_i + sum b_j n_j
/// = 0 yields the intersection element sum a_i m_i.
inline Submodule module_intersect(const Submodule& M, const Submodule& N) {
    if (M.rank() != N.rank()) throw error("intersect: rank mismatch");
    const size_t r = M.rank();
    if (M.generators().empty() || N.generators().empty()) return Submodule(r, {});
    std::vector<ModVec> concat = M.generators();
    concat.insert(concat.end(), N.generators().begin(), N.generators().end());
    const size_t s = M.generators().size();
    Submodule syz = syzygy_basis(concat);
    std::vector<ModVec> gens;
    for (const ModVec& rel : syz.generators()) {
        ModVec v(r);
        for (size_t i = 0; i < s; ++i) {
            if (rel[i].is_zero()) continue;
            for (size_t c = 0; c < r; ++c) v[c] += M.generators()[i][c] * rel[i];
        }
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return Submodule(r, std::move(gens));
}

/// Homogeneous generating set of minimal cardinality, degrees ascending.
/// Walks the generators in degree order and discards any that the others
/// already generate; by the graded Nakayama lemma the surviving count is an
/// invariant of the module.
inline std::vector<ModVec> minimal_generators(const Submodule& M) {
    if (!M.graded()) throw error("minimal_generators: submodule is not graded");
    std::vector<ModVec> gens;
    for (const ModVec& g : M.generators())
        gens.push_back(detail::make_monic(g, ModuleOrder{}));
    std::sort(gens.begin(), gens.end(), [](const ModVec& a, const ModVec& b) {
        int da = a.pdeg().value_or(0), db = b.pdeg().value_or(0);
        if (da != db) return da < db;
        return a.compare(b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<bool> kept(gens.size(), true);
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<ModVec> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i && kept[j]) others.push_back(gens[j]);
        if (others.empty()) continue;
        if (normal_form(gens[i], buchberger(others)).is_zero()) kept[i] = false;
    }
    std::vector<ModVec> out;
    for (size_t i = 0; i < gens.size(); ++i)
        if (kept[i]) out.push_back(gens[i]);
    return out;
}

} // namespace logder
