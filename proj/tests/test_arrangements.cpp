#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "logder/arrangement.hpp"
#include "logder/catalog.hpp"
#include "logder/lattice.hpp"

using namespace logder;

namespace {

const CycloField& Q = CycloField::get(1);

LinearForm form(const CycloField& f, std::vector<int> c) {
    std::vector<CycloNum> v;
    v.reserve(c.size());
    for (int x : c) v.emplace_back(f, x);
    return LinearForm::make(std::move(v));
}

Arrangement boolean_arr(size_t l) {
    std::vector<LinearForm> forms;
    for (size_t i = 0; i < l; ++i) {
        std::vector<int> c(l, 0);
        c[i] = 1;
        forms.push_back(form(Q, c));
    }
    return Arrangement::make(Q, l, std::move(forms));
}

IntPoly ip(std::vector<long> ascending) {
    std::vector<Integer> c;
    for (long x : ascending) c.emplace_back(x);
    return IntPoly::from_coeffs(std::move(c));
}

std::vector<size_t> rank_sizes(const IntersectionLattice& lat) {
    std::vector<size_t> out;
    for (const auto& level : lat.by_rank()) out.push_back(level.size());
    return out;
}

} // namespace

TEST_CASE("linear forms are scaled to a leading one") {
    LinearForm h = form(Q, {0, 2, 4});
    CHECK(h.pivot() == 1);
    CHECK(h[1] == CycloNum(Q, 1));
    CHECK(h[2] == CycloNum(Q, 2));
    CHECK(h == form(Q, {0, -1, -2}));
    CHECK(h != form(Q, {0, 1, 1}));
    CHECK_THROWS_AS(form(Q, {0, 0, 0}), error);
    CHECK(form(Q, {1, -1, 0}).str() == "x1 - x2");
}

TEST_CASE("proportional hyperplanes collapse") {
    Arrangement a = Arrangement::make(
        Q, 2, {form(Q, {1, 0}), form(Q, {2, 0}), form(Q, {0, 1})});
    CHECK(a.size() == 2);
    CHECK(a.contains(form(Q, {1, 0})));
    CHECK(a.contains(form(Q, {0, 3})));
    CHECK(!a.contains(form(Q, {1, 1})));
}

TEST_CASE("input order is preserved, key is order-free") {
    std::vector<LinearForm> fwd = {form(Q, {1, 0}), form(Q, {0, 1}), form(Q, {1, -1})};
    std::vector<LinearForm> rev(fwd.rbegin(), fwd.rend());
    Arrangement a = Arrangement::make(Q, 2, fwd);
    Arrangement b = Arrangement::make(Q, 2, rev);
    CHECK(a.key() == b.key());
    CHECK(a.forms() == fwd);
    CHECK(b[0] == fwd[2]);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a.index_of(a[i]) == i);
}

TEST_CASE("boolean plane lattice, frozen") {
    Arrangement a = boolean_arr(2);
    IntersectionLattice lat = IntersectionLattice::build(a);
    REQUIRE(lat.size() == 4);
    CHECK(rank_sizes(lat) == std::vector<size_t>{1, 2, 1});
    CHECK(lat.node(0).mobius == Integer(1));
    for (size_t i : lat.by_rank()[1]) CHECK(lat.node(i).mobius == Integer(-1));
    CHECK(lat.node(lat.by_rank()[2][0]).mobius == Integer(1));
    CHECK(poincare_poly(lat) == ip({1, 2, 1}));
    CHECK(characteristic_polynomial(lat) == ip({1, -2, 1}));
}

TEST_CASE("rank-two braid lattice, frozen") {
    Arrangement a = braid(3);
    CHECK(a.dim() == 3);
    CHECK(a.size() == 3);
    IntersectionLattice lat = IntersectionLattice::build(a);
    REQUIRE(lat.size() == 5);
    CHECK(rank_sizes(lat) == std::vector<size_t>{1, 3, 1});
    // the triple line x1 = x2 = x3 has mobius value 2
    CHECK(lat.node(lat.by_rank()[2][0]).mobius == Integer(2));
    CHECK(poincare_poly(lat) == ip({1, 3, 2}));
    CHECK(characteristic_polynomial(lat) == ip({0, 2, -3, 1}));
}

TEST_CASE("braid lattice on four strands counts set partitions") {
    IntersectionLattice lat = IntersectionLattice::build(braid(4));
    CHECK(lat.size() == 15);
    CHECK(rank_sizes(lat) == std::vector<size_t>{1, 6, 7, 1});
    CHECK(poincare_poly(lat) == ip({1, 6, 11, 6}));
    CHECK(characteristic_polynomial(lat) == ip({0, -6, 11, -6, 1}));
}

TEST_CASE("monomial family lattices, frozen") {
    IntersectionLattice full = IntersectionLattice::build(monomial(3, 1, 2));
    CHECK(rank_sizes(full) == std::vector<size_t>{1, 5, 1});
    CHECK(poincare_poly(full) == ip({1, 5, 4}));

    IntersectionLattice bare = IntersectionLattice::build(monomial(3, 3, 2));
    CHECK(rank_sizes(bare) == std::vector<size_t>{1, 3, 1});
    CHECK(poincare_poly(bare) == ip({1, 3, 2}));

    CHECK(characteristic_polynomial(coxeterB(2)) == ip({3, -4, 1}));
}

TEST_CASE("mobius values alternate in sign with rank") {
    for (const Arrangement& a : {braid(4), monomial(3, 1, 2), coxeterB(3)}) {
        IntersectionLattice lat = IntersectionLattice::build(a);
        for (size_t r = 0; r < lat.by_rank().size(); ++r) {
            Integer sign = (r % 2 == 0) ? Integer(1) : Integer(-1);
            for (size_t i : lat.by_rank()[r]) CHECK(lat.node(i).mobius * sign > 0);
        }
        // a nonempty central arrangement has vanishing poincare value at -1
        CHECK(poincare_poly(lat).eval(Integer(-1)) == Integer(0));
    }
}

TEST_CASE("deletion and restriction recursion") {
    for (const Arrangement& a : {boolean_arr(3), braid(4), monomial(3, 3, 3), coxeterD(3)}) {
        IntPoly pi = poincare_poly(a);
        for (size_t i = 0; i < a.size(); ++i) {
            IntPoly del = poincare_poly(a.deleted(i));
            IntPoly res = poincare_poly(restrict(a, a[i]).first);
            CHECK(pi == del + ip({0, 1}) * res);
        }
    }
}

TEST_CASE("deletion removes one hyperplane") {
    Arrangement a = braid(3);
    Arrangement d = a.deleted(0);
    CHECK(d.size() == 2);
    CHECK(!d.contains(a[0]));
    CHECK(a.deleted(a[1]).size() == 2);
    CHECK_THROWS_AS(a.deleted(form(Q, {1, 0, 0})), error);
}

TEST_CASE("localization keeps the containing hyperplanes") {
    Arrangement a = braid(3);
    Subspace line = a.common_intersection();
    CHECK(line.rank() == 2);
    CHECK(localize(a, line).size() == 3);

    Subspace plane = Subspace::whole(3).intersect(a[0]);
    Arrangement loc = localize(a, plane);
    CHECK(loc.size() == 1);
    CHECK(loc[0] == a[0]);

    CHECK(localize(a, Subspace::whole(3)).empty());
    CHECK_THROWS_AS(localize(a, Subspace::whole(3).intersect(form(Q, {1, 0, 0}))), error);
}

TEST_CASE("restriction collapses colliding traces") {
    Arrangement a = braid(3);
    auto [res, map] = restrict(a, form(Q, {1, -1, 0}));
    // both remaining hyperplanes cut the plane x1 = x2 in the same line
    CHECK(res.dim() == 2);
    CHECK(res.size() == 1);
    CHECK(map.coordinate_of.size() == 2);

    Arrangement b = boolean_arr(3);
    auto [bres, bmap] = restrict(b, b[0]);
    CHECK(bres.dim() == 2);
    CHECK(bres.size() == 2);

    CHECK_THROWS_AS(restrict(a, form(Q, {1, 0, 0})), error);
}

TEST_CASE("in-lattice recognizes exactly the intersections") {
    Arrangement a = braid(3);
    CHECK(in_lattice(a, Subspace::whole(3)));
    CHECK(in_lattice(a, Subspace::whole(3).intersect(a[0])));
    CHECK(in_lattice(a, a.common_intersection()));
    CHECK(!in_lattice(a, Subspace::whole(3).intersect(form(Q, {1, 0, 0}))));
}

TEST_CASE("essentialization drops the common center") {
    Arrangement a = braid(3);
    CHECK(a.essential_rank() == 2);
    auto [ess, drop] = essentialize(a);
    CHECK(drop == 1);
    CHECK(ess.dim() == 2);
    CHECK(ess.size() == 3);
    CHECK(poincare_poly(ess) == poincare_poly(a));

    auto [again, drop2] = essentialize(ess);
    CHECK(drop2 == 0);
    CHECK(again.key() == ess.key());

    auto [bess, bdrop] = essentialize(boolean_arr(2));
    CHECK(bdrop == 0);
    CHECK(bess.size() == 2);
}

TEST_CASE("defining polynomial is the product of the forms") {
    Arrangement a = boolean_arr(2);
    MultiPoly x1 = MultiPoly::variable(Q, 2, 0), x2 = MultiPoly::variable(Q, 2, 1);
    CHECK(a.defining_polynomial() == x1 * x2);
    MultiPoly q = braid(3).defining_polynomial();
    CHECK(q.homogeneous_degree() == std::optional<int>(3));
    CHECK(q.str() == "x1^2*x2 - x1*x2^2 - x1^2*x3 + x2^2*x3 + x1*x3^2 - x2*x3^2");
}

TEST_CASE("restriction lattice matches the interval above the subspace") {
    Arrangement a = braid(4);
    IntersectionLattice lat = IntersectionLattice::build(a);
    for (size_t r : {size_t{1}, size_t{2}}) {
        for (size_t i : lat.by_rank()[r]) {
            const Subspace& x = lat.node(i).space;
            IntersectionLattice rlat = IntersectionLattice::build(restrict(a, x).first);
            // per-rank counts of lattice elements inside x
            std::vector<size_t> counts(lat.max_rank() + 1 - r, 0);
            for (size_t rr = r; rr < lat.by_rank().size(); ++rr)
                for (size_t j : lat.by_rank()[rr])
                    if (lat.node(j).space.subset_of(x)) ++counts[rr - r];
            while (counts.size() > rlat.by_rank().size()) counts.pop_back();
            CHECK(rank_sizes(rlat) == counts);
        }
    }
}

TEST_CASE("localization lattice matches the interval below the subspace") {
    Arrangement a = braid(4);
    IntersectionLattice lat = IntersectionLattice::build(a);
    size_t pick = lat.by_rank()[2][3];
    const Subspace& x = lat.node(pick).space;
    IntersectionLattice llat = IntersectionLattice::build(localize(a, x));
    std::vector<size_t> counts;
    for (size_t rr = 0; rr <= 2; ++rr) {
        size_t c = 0;
        for (size_t j : lat.by_rank()[rr])
            if (x.subset_of(lat.node(j).space)) ++c;
        counts.push_back(c);
    }
    CHECK(rank_sizes(llat) == counts);
}

TEST_CASE("arrangements over a cyclotomic field") {
    const CycloField& F3 = CycloField::get(3);
    Arrangement a = monomial(3, 3, 2);
    CHECK(&a.field() == &F3);
    CHECK(a.dim() == 2);
    CHECK(a.size() == 3);
    CHECK(a.essential_rank() == 2);
    // mixing fields in one arrangement is rejected
    CHECK_THROWS_AS(
        Arrangement::make(F3, 2, {form(Q, {1, 0}), form(F3, {0, 1})}),
        field_mismatch_error);
}
