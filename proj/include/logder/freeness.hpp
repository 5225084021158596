#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logder/derivations.hpp"
#include "logder/lattice.hpp"
#include "logder/parallel.hpp"

namespace logder {

namespace detail {

/// Multiset difference a minus b, or nullopt when b is not contained in a.
inline std::optional<std::vector<int>> multiset_minus(std::vector<int> a, const std::vector<int>& b) {
    for (int x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it == a.end()) return std::nullopt;
        a.erase(it);
    }
    return a;
}

inline std::vector<int> zeros(size_t n) { return std::vector<int>(n, 0); }

/// Multiset intersection, sorted ascending.
inline std::vector<int> multiset_intersection(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// True iff the restriction exponents fail to embed in the arrangement
/// exponents as a multiset. When true, no Addition-Deletion step through a
/// hyperplane with that restriction is possible.
inline bool exponent_obstruction(const std::vector<int>& exp_a, const std::vector<int>& exp_res) {
    return !detail::multiset_minus(exp_a, exp_res).has_value();
}

/// The one-step exponent pattern of the Addition-Deletion theorem:
/// exp A = {b_1..b_{l-1}, b}, exp A' = {b_1..b_{l-1}, b-1},
/// exp A'' = {b_1..b_{l-1}}.
inline bool addition_deletion_pattern(const std::vector<int>& exp_a,
                                      const std::vector<int>& exp_del,
                                      const std::vector<int>& exp_res) {
    if (exp_a.size() != exp_del.size() || exp_a.size() != exp_res.size() + 1)
        throw error("addition-deletion: exponent multiset sizes mismatch");
    auto rest_a = detail::multiset_minus(exp_a, exp_res);
    auto rest_del = detail::multiset_minus(exp_del, exp_res);
    if (!rest_a || !rest_del) return false;
    return rest_a->size() == 1 && rest_del->size() == 1 && (*rest_a)[0] == (*rest_del)[0] + 1;
}

/// Certificate for inductive freeness: the hyperplanes in addition order
/// and the exponent multiset of every prefix (prefix i+1 after adding
/// ordering[i]; the empty prefix has all-zero exponents).
struct InductiveChain {
    std::vector<LinearForm> ordering;
    std::vector<std::vector<int>> step_exponents;

    std::vector<int> final_exponents(size_t dim) const {
        return step_exponents.empty() ? detail::zeros(dim) : step_exponents.back();
    }
};

namespace detail {

class InductiveSearcher {
public:
    std::optional<InductiveChain> search(const Arrangement& a) {
        if (a.empty()) return InductiveChain{};
        const std::string key = a.key();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        std::optional<InductiveChain> result = explore(a);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(key, result);
        return result;
    }

private:
    std::optional<InductiveChain> explore(const Arrangement& a) {
        // freeness is necessary, and forces the Poincare polynomial of the
        // essential part to factor over the positive integers; prune on that
        auto [ess, drop] = essentialize(a);
        if (!factor_unit_linear(poincare_poly(ess))) return std::nullopt;

        std::vector<std::pair<size_t, size_t>> order; // (|A^H|, index)
        for (size_t i = 0; i < a.size(); ++i)
            order.push_back({restrict(a, a[i]).first.size(), i});
        std::sort(order.begin(), order.end());

        for (auto [rsize, i] : order) {
            Arrangement del = a.deleted(i);
            Arrangement res = restrict(a, a[i]).first;
            std::optional<InductiveChain> cdel = search(del);
            if (!cdel) continue;
            std::optional<InductiveChain> cres = search(res);
            if (!cres) continue;
            std::vector<int> exp_del = cdel->final_exponents(del.dim());
            std::vector<int> exp_res = cres->final_exponents(res.dim());
            auto leftover = multiset_minus(exp_del, exp_res);
            if (!leftover || leftover->size() != 1) continue;
            std::vector<int> exp_a = exp_res;
            exp_a.push_back((*leftover)[0] + 1);
            std::sort(exp_a.begin(), exp_a.end());
            if (!addition_deletion_pattern(exp_a, exp_del, exp_res)) continue;
            InductiveChain chain = *cdel;
            chain.ordering.push_back(a[i]);
            chain.step_exponents.push_back(std::move(exp_a));
            return chain;
        }
        return std::nullopt;
    }

    std::map<std::string, std::optional<InductiveChain>> memo_;
    std::mutex mu_;
};

} // namespace detail

/// Depth-first Addition-Deletion search from the empty arrangement, with
/// memoization on the canonical arrangement key. Returns a replayable chain
/// when A is inductively free.
inline std::optional<InductiveChain> is_inductively_free(const Arrangement& a) {
    detail::InductiveSearcher searcher;
    return searcher.search(a);
}

/// Replays a chain against A. Fast mode checks the exponent pattern at
/// every step plus the sum identities sum exp = |prefix| and
/// sum exp_res = |restriction|; audit mode re-runs is_free on every prefix
/// and every restriction and compares exponents. Throws when the chain does
/// not cover A.
inline bool chain_verify(const Arrangement& a, const InductiveChain& chain, bool audit = false) {
    if (chain.ordering.size() != a.size() ||
        chain.step_exponents.size() != chain.ordering.size())
        throw error("chain verify: chain does not match the arrangement");
    for (const LinearForm& h : chain.ordering)
        if (!a.contains(h)) throw error("chain verify: chain hyperplane not in the arrangement");
    for (size_t i = 0; i < chain.ordering.size(); ++i)
        for (size_t j = i + 1; j < chain.ordering.size(); ++j)
            if (chain.ordering[i] == chain.ordering[j])
                throw error("chain verify: repeated hyperplane in the chain");

    std::vector<int> exp_prev = detail::zeros(a.dim());
    std::vector<LinearForm> prefix_forms;
    for (size_t i = 0; i < chain.ordering.size(); ++i) {
        prefix_forms.push_back(chain.ordering[i]);
        Arrangement prefix = Arrangement::make(a.field(), a.dim(), prefix_forms);
        Arrangement res = restrict(prefix, chain.ordering[i]).first;
        const std::vector<int>& exp_cur = chain.step_exponents[i];
        if (exp_cur.size() != a.dim()) return false;

        // recover exp of the restriction: whenever the one-step pattern
        // holds, the common block is exactly the multiset intersection
        std::vector<int> exp_res = detail::multiset_intersection(exp_cur, exp_prev);
        if (exp_res.size() + 1 != exp_cur.size()) return false;
        if (!addition_deletion_pattern(exp_cur, exp_prev, exp_res)) return false;
        Integer cur_sum(0);
        for (int e : exp_cur) cur_sum += e;
        if (cur_sum != Integer(static_cast<long>(prefix.size()))) return false;
        Integer res_sum(0);
        for (int e : exp_res) res_sum += e;
        if (res_sum != Integer(static_cast<long>(res.size()))) return false;

        if (audit) {
            FreenessReport pr = is_free(prefix);
            if (!pr.free || pr.exponents != exp_cur) return false;
            FreenessReport rr = is_free(res);
            std::vector<int> want = exp_res;
            std::sort(want.begin(), want.end());
            if (!rr.free || rr.exponents != want) return false;
        }
        exp_prev = exp_cur;
    }
    return true;
}

/// Decides freeness of A minus H under the preconditions that A and A^H
/// are free; the computational stand-in for surjectivity of the
/// degree-preserving restriction map q. When the deletion is free the
/// Addition-Deletion exponent pattern must hold across the triple, and is
/// checked.
inline bool deletion_free_via_q(const Arrangement& a, const LinearForm& h) {
    FreenessReport top = is_free(a);
    if (!top.free) throw error("deletion via q: A is not free");
    Arrangement res = restrict(a, h).first;
    FreenessReport resrep = is_free(res);
    if (!resrep.free) throw error("deletion via q: the restriction is not free");
    FreenessReport delrep = is_free(a.deleted(h));
    if (!delrep.free) return false;
    if (!addition_deletion_pattern(top.exponents, delrep.exponents, resrep.exponents))
        throw error("deletion via q: free triple violates the exponent pattern");
    return true;
}

/// Per-node entry of a hereditary freeness report.
struct NodeReport {
    Subspace space;
    size_t rank = 0;
    size_t restriction_dim = 0;
    size_t restriction_size = 0;
    bool shortcut = false;
    bool free = false;
    std::vector<int> exponents;
    std::optional<FreenessReport> computed;
};

struct HereditaryReport {
    bool hereditarily_free = false;
    std::vector<NodeReport> nodes; // lattice order: by rank, then canonical key
};

/// Decides freeness of every restriction A^X over the intersection lattice.
/// Restrictions of essential rank at most 2 are recorded free directly with
/// exponents {1, |A^X|-1} (resp. {1}, or nothing) padded by zeros; the rest
/// run the full decision. Nodes are processed in parallel when jobs > 1;
/// the report order does not depend on the worker count.
inline HereditaryReport is_hereditarily_free(const Arrangement& a, size_t jobs = 1) {
    IntersectionLattice lat = IntersectionLattice::build(a);
    HereditaryReport rep;
    rep.nodes.resize(lat.size());
    std::vector<size_t> node_rank(lat.size());
    for (size_t r = 0; r < lat.by_rank().size(); ++r)
        for (size_t i : lat.by_rank()[r]) node_rank[i] = r;
    parallel_for(lat.size(), jobs, [&](size_t i) {
        NodeReport& node = rep.nodes[i];
        node.space = lat.node(i).space;
        node.rank = node_rank[i];
        Arrangement res = restrict(a, node.space).first;
        node.restriction_dim = res.dim();
        node.restriction_size = res.size();
        const size_t er = res.essential_rank();
        if (er <= 2) {
            node.shortcut = true;
            node.free = true;
            node.exponents = detail::zeros(res.dim() - er);
            if (er == 1) node.exponents.push_back(1);
            if (er == 2) {
                node.exponents.push_back(1);
                node.exponents.push_back(static_cast<int>(res.size()) - 1);
            }
            std::sort(node.exponents.begin(), node.exponents.end());
        } else {
            node.computed = is_free(res);
            node.free = node.computed->free;
            node.exponents = node.computed->exponents;
        }
    });
    rep.hereditarily_free = true;
    for (const NodeReport& n : rep.nodes)
        if (!n.free) rep.hereditarily_free = false;
    return rep;
}

} // namespace logder
