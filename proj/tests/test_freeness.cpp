#include <catch2/catch_amalgamated.hpp>

#include "logder/catalog.hpp"
#include "logder/freeness.hpp"

using namespace logder;

namespace {

const CycloField& Q = CycloField::get(1);

LinearForm form(const CycloField& f, std::vector<int> c) {
    std::vector<CycloNum> v;
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

Arrangement generic4() {
    return Arrangement::make(
        Q, 3,
        {form(Q, {1, 0, 0}), form(Q, {0, 1, 0}), form(Q, {0, 0, 1}), form(Q, {1, 1, 1})});
}

} // namespace

TEST_CASE("addition-deletion exponent pattern, frozen triples") {
    CHECK(addition_deletion_pattern({1, 2}, {1, 1}, {1}));
    CHECK(addition_deletion_pattern({1, 3, 5}, {1, 3, 4}, {1, 3}));
    CHECK(addition_deletion_pattern({0, 1, 2}, {0, 1, 1}, {0, 1}));
    // new exponent must exceed the deleted one by exactly one
    CHECK(!addition_deletion_pattern({1, 3}, {1, 1}, {1}));
    // restriction exponents must embed in both
    CHECK(!addition_deletion_pattern({1, 2}, {1, 1}, {2}));
    CHECK(!addition_deletion_pattern({2, 2}, {1, 2}, {1}));
    CHECK_THROWS_AS(addition_deletion_pattern({1, 2}, {1}, {1}), error);
    CHECK_THROWS_AS(addition_deletion_pattern({1, 2}, {1, 1}, {1, 1}), error);
}

TEST_CASE("exponent obstruction is multiset non-containment") {
    CHECK(!exponent_obstruction({1, 3, 5}, {1, 3}));
    CHECK(exponent_obstruction({1, 3, 5}, {2}));
    CHECK(exponent_obstruction({1, 3}, {3, 3}));
    CHECK(!exponent_obstruction({1, 1, 2}, {1, 1}));
}

TEST_CASE("boolean arrangement has an inductive chain") {
    Arrangement a = boolean_arr(3);
    auto chain = is_inductively_free(a);
    REQUIRE(chain.has_value());
    CHECK(chain->ordering.size() == 3);
    CHECK(chain->final_exponents(3) == std::vector<int>{1, 1, 1});
    CHECK(chain_verify(a, *chain));
    CHECK(chain_verify(a, *chain, true));
}

TEST_CASE("braid arrangement chains replay and audit") {
    Arrangement a = braid(3);
    auto chain = is_inductively_free(a);
    REQUIRE(chain.has_value());
    CHECK(chain->final_exponents(3) == std::vector<int>{0, 1, 2});
    // per-step exponent sums count the prefix
    for (size_t i = 0; i < chain->step_exponents.size(); ++i) {
        long sum = 0;
        for (int e : chain->step_exponents[i]) sum += e;
        CHECK(sum == static_cast<long>(i) + 1);
    }
    CHECK(chain_verify(a, *chain));
    CHECK(chain_verify(a, *chain, true));
}

TEST_CASE("rank-two arrangements are inductively free") {
    Arrangement a = Arrangement::make(Q, 2, {form(Q, {1, 0}), form(Q, {0, 1}), form(Q, {1, -1})});
    auto chain = is_inductively_free(a);
    REQUIRE(chain.has_value());
    CHECK(chain->final_exponents(2) == std::vector<int>{1, 2});
    CHECK(chain_verify(a, *chain, true));

    Arrangement m = monomial(3, 3, 2);
    auto mchain = is_inductively_free(m);
    REQUIRE(mchain.has_value());
    CHECK(mchain->final_exponents(2) == std::vector<int>{1, 2});
    CHECK(chain_verify(m, *mchain, true));
}

TEST_CASE("non-free arrangements have no chain") {
    CHECK(!is_inductively_free(generic4()).has_value());
}

TEST_CASE("search result is independent of input order") {
    std::vector<LinearForm> fwd = braid(3).forms();
    std::vector<LinearForm> rev(fwd.rbegin(), fwd.rend());
    auto a = is_inductively_free(Arrangement::make(Q, 3, fwd));
    auto b = is_inductively_free(Arrangement::make(Q, 3, rev));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->final_exponents(3) == b->final_exponents(3));
    // repeated invocation reproduces the same chain
    auto again = is_inductively_free(braid(3));
    REQUIRE(again.has_value());
    CHECK(again->step_exponents == is_inductively_free(braid(3))->step_exponents);
}

TEST_CASE("corrupted chains are rejected") {
    Arrangement a = boolean_arr(3);
    InductiveChain good = *is_inductively_free(a);

    InductiveChain short_chain = good;
    short_chain.ordering.pop_back();
    short_chain.step_exponents.pop_back();
    CHECK_THROWS_AS(chain_verify(a, short_chain), error);

    InductiveChain foreign = good;
    foreign.ordering[0] = form(Q, {1, 1, 1});
    CHECK_THROWS_AS(chain_verify(a, foreign), error);

    InductiveChain repeated = good;
    repeated.ordering[2] = repeated.ordering[0];
    CHECK_THROWS_AS(chain_verify(a, repeated), error);

    InductiveChain wrong_exps = good;
    wrong_exps.step_exponents[2] = {1, 1, 3};
    CHECK(!chain_verify(a, wrong_exps));

    InductiveChain drifted = good;
    drifted.step_exponents[1] = {0, 1, 2};
    CHECK(!chain_verify(a, drifted));
}

TEST_CASE("chains certify across fields") {
    Arrangement a = monomial(3, 1, 2);
    auto chain = is_inductively_free(a);
    REQUIRE(chain.has_value());
    CHECK(chain->final_exponents(2) == std::vector<int>{1, 4});
    CHECK(chain_verify(a, *chain, true));
}

TEST_CASE("deletion freeness through the restriction map") {
    Arrangement a = braid(3);
    CHECK(deletion_free_via_q(a, a[0]));
    Arrangement b = coxeterB(2);
    for (const LinearForm& h : b) CHECK(deletion_free_via_q(b, h));
    CHECK_THROWS_AS(deletion_free_via_q(generic4(), generic4()[0]), error);
}

TEST_CASE("hereditary freeness of the rank-two braid") {
    HereditaryReport rep = is_hereditarily_free(braid(3));
    CHECK(rep.hereditarily_free);
    REQUIRE(rep.nodes.size() == 5);
    // whole space, essential rank 2: shortcut reproduces the full answer
    CHECK(rep.nodes[0].rank == 0);
    CHECK(rep.nodes[0].shortcut);
    CHECK(rep.nodes[0].exponents == std::vector<int>{0, 1, 2});
    // top node restricts to an empty line
    const NodeReport& top = rep.nodes.back();
    CHECK(top.rank == 2);
    CHECK(top.restriction_size == 0);
    CHECK(top.exponents == std::vector<int>{0});
}

TEST_CASE("shortcut nodes agree with the full decision") {
    Arrangement a = braid(4);
    HereditaryReport rep = is_hereditarily_free(a);
    CHECK(rep.hereditarily_free);
    REQUIRE(rep.nodes.size() == 15);
    for (const NodeReport& n : rep.nodes) {
        CHECK(n.free);
        Arrangement res = restrict(a, n.space).first;
        if (n.shortcut && res.dim() >= 1) {
            FreenessReport explicit_rep = is_free(res);
            CHECK(explicit_rep.free);
            CHECK(explicit_rep.exponents == n.exponents);
        }
        if (!n.shortcut) {
            REQUIRE(n.computed.has_value());
            CHECK(n.computed->free);
        }
    }
    // the whole-space node needed the full decision
    CHECK(!rep.nodes[0].shortcut);
    CHECK(rep.nodes[0].exponents == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("hereditary reports are stable under parallelism") {
    Arrangement a = braid(4);
    HereditaryReport serial = is_hereditarily_free(a, 1);
    HereditaryReport parallel = is_hereditarily_free(a, 4);
    CHECK(serial.hereditarily_free == parallel.hereditarily_free);
    REQUIRE(serial.nodes.size() == parallel.nodes.size());
    for (size_t i = 0; i < serial.nodes.size(); ++i) {
        CHECK(serial.nodes[i].space.key() == parallel.nodes[i].space.key());
        CHECK(serial.nodes[i].exponents == parallel.nodes[i].exponents);
        CHECK(serial.nodes[i].shortcut == parallel.nodes[i].shortcut);
    }
}

TEST_CASE("a non-free restriction defeats hereditary freeness") {
    // cone-like extension of the generic arrangement: restricting to the
    // added coordinate hyperplane leaves a non-free trace
    Arrangement bad = Arrangement::make(
        Q, 4,
        {form(Q, {1, 0, 0, 0}), form(Q, {0, 1, 0, 0}), form(Q, {0, 0, 1, 0}),
         form(Q, {0, 0, 0, 1}), form(Q, {1, 1, 1, 0})});
    HereditaryReport rep = is_hereditarily_free(bad);
    CHECK(!rep.hereditarily_free);
    bool saw_nonfree = false;
    for (const NodeReport& n : rep.nodes)
        if (!n.free) saw_nonfree = true;
    CHECK(saw_nonfree);
}
