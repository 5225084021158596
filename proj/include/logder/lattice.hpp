#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/intpoly.hpp"

namespace logder {

struct LatticeNode {
    Subspace space;
    Integer mobius;
    std::vector<size_t> below; // rank-(r-1) nodes this node covers
};

/// Intersection lattice L(A): all intersections of hyperplanes, ranked by
/// codimension, ordered by reverse inclusion with V at the bottom. Built by
/// breadth-first closure, one hyperplane at a time, with canonical-form
/// dedup; Mobius values by the interval recursion from the bottom.
class IntersectionLattice {
public:
    static IntersectionLattice build(const Arrangement& a) {
        IntersectionLattice lat;
        lat.dim_ = a.dim();
        std::vector<Subspace> level{Subspace::whole(a.dim())};
        while (!level.empty()) {
            std::sort(level.begin(), level.end(),
                      [](const Subspace& p, const Subspace& q) { return p.key() < q.key(); });
            std::vector<size_t> idx;
            for (Subspace& s : level) {
                idx.push_back(lat.nodes_.size());
                lat.nodes_.push_back({std::move(s), Integer(0), {}});
            }
            lat.by_rank_.push_back(std::move(idx));
            std::map<std::string, Subspace> next;
            for (size_t i : lat.by_rank_.back()) {
                const Subspace& x = lat.nodes_[i].space;
                for (const LinearForm& h : a) {
                    if (x.annihilator_contains(h.coeffs())) continue;
                    Subspace y = x.intersect(h);
                    next.emplace(y.key(), std::move(y));
                }
            }
            level.clear();
            for (auto& [k, s] : next) level.push_back(std::move(s));
        }
        for (size_t r = 1; r < lat.by_rank_.size(); ++r) {
            for (size_t i : lat.by_rank_[r]) {
                LatticeNode& n = lat.nodes_[i];
                for (size_t j : lat.by_rank_[r - 1])
                    if (n.space.subset_of(lat.nodes_[j].space)) n.below.push_back(j);
            }
        }
        lat.nodes_[0].mobius = 1;
        for (size_t r = 1; r < lat.by_rank_.size(); ++r) {
            for (size_t i : lat.by_rank_[r]) {
                Integer acc(0);
                for (size_t lower = 0; lower < r; ++lower)
                    for (size_t j : lat.by_rank_[lower])
                        if (lat.nodes_[i].space.subset_of(lat.nodes_[j].space))
                            acc += lat.nodes_[j].mobius;
                lat.nodes_[i].mobius = -acc;
            }
        }
        return lat;
    }

    size_t size() const { return nodes_.size(); }
    size_t dim() const { return dim_; }
    const LatticeNode& node(size_t i) const { return nodes_[i]; }
    const std::vector<std::vector<size_t>>& by_rank() const { return by_rank_; }
    size_t max_rank() const { return by_rank_.size() - 1; }

    const LatticeNode* find(const Subspace& x) const {
        for (const LatticeNode& n : nodes_)
            if (n.space == x) return &n;
        return nullptr;
    }

private:
    size_t dim_ = 0;
    std::vector<LatticeNode> nodes_;
    std::vector<std::vector<size_t>> by_rank_;
};

/// pi(A,t) = sum over X of mu(X) (-t)^{rank X}. Coefficients are signless
/// Whitney numbers, hence non-negative.
inline IntPoly poincare_poly(const IntersectionLattice& lat) {
    std::vector<Integer> coeffs(lat.max_rank() + 1, Integer(0));
    for (size_t r = 0; r < lat.by_rank().size(); ++r) {
        Integer sign = (r % 2 == 0) ? Integer(1) : Integer(-1);
        for (size_t i : lat.by_rank()[r]) coeffs[r] += sign * lat.node(i).mobius;
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

inline IntPoly poincare_poly(const Arrangement& a) {
    return poincare_poly(IntersectionLattice::build(a));
}

/// chi(A,t) = sum over X of mu(X) t^{dim X}.
inline IntPoly characteristic_polynomial(const IntersectionLattice& lat) {
    std::vector<Integer> coeffs(lat.dim() + 1, Integer(0));
    for (size_t r = 0; r < lat.by_rank().size(); ++r)
        for (size_t i : lat.by_rank()[r])
            coeffs[lat.dim() - r] += lat.node(i).mobius;
    return IntPoly::from_coeffs(std::move(coeffs));
}

inline IntPoly characteristic_polynomial(const Arrangement& a) {
    return characteristic_polynomial(IntersectionLattice::build(a));
}

} // namespace logder
