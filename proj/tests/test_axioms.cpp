#include <doctest.h>

#include "oracle.hpp"
#include "vspace/axioms.hpp"
#include "vspace/duality.hpp"
#include "vspace/enumeration.hpp"
#include "vspace/error.hpp"
#include "vspace/fixtures.hpp"

using namespace vspace;

namespace {

OperatorTable tau_of(FixtureId id) { return as_tau(canned_example(id)); }

template <class W>
W get(const Violation& v) {
    REQUIRE(v.has_value());
    REQUIRE(std::holds_alternative<W>(*v));
    return std::get<W>(*v);
}

const GroundSet g1 = GroundSet::numbered(1);
const GroundSet g2 = GroundSet::numbered(2);
const GroundSet g3 = GroundSet::numbered(3);

}  // namespace

TEST_CASE("C1") {
    CHECK_FALSE(check_c1(OperatorTable::identity(g3)));
    CHECK_FALSE(check_c1(tau_of(FixtureId::Ex2_2)));
    const auto bad = OperatorTable::identity(g1).with_entry(Subset{1}, Subset{});
    CHECK(get<C1Witness>(check_c1(bad)).x == Subset{1});
}

TEST_CASE("C2") {
    const auto w = get<C2Witness>(check_c2(tau_of(FixtureId::Ex1Literal)));
    CHECK(w.x == Subset{0b001});
    CHECK(w.y == Subset{0b011});
    CHECK_FALSE(check_c2(OperatorTable::constant(g3, g3.full())));
    CHECK_FALSE(check_c2(OperatorTable::identity(g3)));
}

TEST_CASE("C3") {
    CHECK(get<C3Witness>(check_c3(tau_of(FixtureId::Ex2_2))).x == Subset{0b001});
    CHECK(get<C3Witness>(check_c3(tau_of(FixtureId::Exms))).x == Subset{0b0011});
    CHECK_FALSE(check_c3(OperatorTable::identity(g3)));
}

TEST_CASE("C22") {
    const auto w = get<C22Witness>(check_c22(tau_of(FixtureId::Ex2_2)));
    CHECK(w.f == Subset{0b001});
    CHECK(w.g == Subset{0b011});
    CHECK_FALSE(check_c22(tau_of(FixtureId::Ex1Literal)));
    CHECK_FALSE(check_c22(tau_of(FixtureId::Ex1)));
    CHECK_FALSE(check_c22(OperatorTable::constant(g3, g3.full())));
}

TEST_CASE("convexity") {
    CHECK_FALSE(check_convexity(tau_of(FixtureId::Ex2_2)));
    CHECK_FALSE(check_convexity(tau_of(FixtureId::Ex5_1)));
    // tau({}) = tau({1,2}) = {1,2} but tau({1}) = {1}
    const auto t = OperatorTable(g2, OperatorKind::Tau, {Subset{0b11}, Subset{0b01}, Subset{0b10}, Subset{0b11}});
    const auto w = get<ConvexityWitness>(check_convexity(t));
    CHECK(w.x == Subset{});
    CHECK(w.y == Subset{0b01});
    CHECK(w.z == Subset{0b11});
}

TEST_CASE("anti-exchange") {
    const auto w = get<AntiExchangeWitness>(check_anti_exchange(tau_of(FixtureId::Exms)));
    CHECK(w.x == Subset{0b0001});
    CHECK(w.p == 1);
    CHECK(w.q == 2);
    CHECK_FALSE(check_anti_exchange(OperatorTable::identity(g3)));
    const auto ex1 = tau_of(FixtureId::Ex1Literal);
    CHECK(check_anti_exchange(ex1).has_value() == !oracle::anti_exchange(oracle::raw(ex1)));
}

TEST_CASE("consistency") {
    CHECK_FALSE(check_consistency(canned_example(FixtureId::Ex1Literal)));
    const auto same = OperatorTable::identity(g1, OperatorKind::Violator);
    CHECK(get<ConsistencyWitness>(check_consistency(same)).g == Subset{1});
    CHECK_FALSE(check_consistency(OperatorTable::complement(g3)));
}

TEST_CASE("locality") {
    CHECK_FALSE(check_locality(canned_example(FixtureId::Ex1Literal)));
    CHECK_FALSE(check_locality(OperatorTable::complement(g3)));
    const auto v = OperatorTable::complement(g2).with_entry(Subset{}, Subset{}).with_entry(Subset{0b01}, Subset{0b10});
    const auto w = get<LocalityWitness>(check_locality(v));
    CHECK(w.f == Subset{});
    CHECK(w.g == Subset{0b01});
}

TEST_CASE("monotonicity") {
    CHECK_FALSE(check_monotonicity(canned_example(FixtureId::Ex1Literal)));
    CHECK_FALSE(check_monotonicity(OperatorTable::complement(g3)));
    const auto v = as_violator(canned_example(FixtureId::Ex2_2));
    CHECK(check_monotonicity(v).has_value() == !oracle::monotonicity(oracle::raw(v)));
}

TEST_CASE("checks reject the wrong presentation") {
    CHECK_THROWS_AS(check_c1(OperatorTable::complement(g2)), KindError);
    CHECK_THROWS_AS(check_locality(OperatorTable::identity(g2)), KindError);
    CHECK_FALSE(check_axiom(Axiom::C22, canned_example(FixtureId::Ex1)));
}

TEST_CASE("axiom names") {
    for (Axiom a : kAllAxioms) CHECK(parse_axiom(to_string(a)) == a);
    CHECK(parse_axiom("anti-exchange") == Axiom::AntiExchange);
    CHECK(parse_axiom("c22") == Axiom::C22);
    CHECK_FALSE(parse_axiom("c4"));
}

TEST_CASE("classify") {
    const auto r1 = classify(canned_example(FixtureId::Ex1Literal));
    CHECK(r1.violator_space);
    CHECK_FALSE(r1.closure_space);
    CHECK_FALSE(r1.passes(Axiom::C2));

    const auto r2 = classify(canned_example(FixtureId::Ex2_2));
    CHECK(r2.convex_space);
    CHECK_FALSE(r2.violator_space);
    CHECK_FALSE(r2.closure_space);

    const auto r3 = classify(OperatorTable::identity(g3));
    CHECK(r3.closure_space);
    CHECK(r3.violator_space);
    CHECK(r3.convex_space);
    CHECK(r3.convex_geometry);
    CHECK(r3.signature() == "closure+violator+convex+geometry+unique");
}

TEST_CASE("fixture signatures") {
    for (auto id : all_fixtures()) {
        CAPTURE(to_string(id));
        const auto r = classify(canned_example(id));
        const auto s = expected_signature(id);
        CHECK(r.closure_space == s.closure_space);
        CHECK(r.violator_space == s.violator_space);
        CHECK(r.convex_space == s.convex_space);
        CHECK(r.convex_geometry == s.convex_geometry);
        CHECK(r.uniquely_generated == s.uniquely_generated);
        CHECK(r.passes(Axiom::AntiExchange) == s.anti_exchange);
    }
}

TEST_CASE("every axiom agrees with the oracle on all n=2 C1 tables and random n=3 tables") {
    auto compare = [](const OperatorTable& t) {
        const auto tr = oracle::raw(t);
        const auto vr = oracle::dual(tr);
        const auto r = classify(t);
        CHECK(r.passes(Axiom::C1) == oracle::c1(tr));
        CHECK(r.passes(Axiom::C2) == oracle::c2(tr));
        CHECK(r.passes(Axiom::C3) == oracle::c3(tr));
        CHECK(r.passes(Axiom::C22) == oracle::c22(tr));
        CHECK(r.passes(Axiom::Convexity) == oracle::convexity(tr));
        CHECK(r.passes(Axiom::AntiExchange) == oracle::anti_exchange(tr));
        CHECK(r.passes(Axiom::Consistency) == oracle::consistency(vr));
        CHECK(r.passes(Axiom::Locality) == oracle::locality(vr));
        CHECK(r.passes(Axiom::Monotonicity) == oracle::monotonicity(vr));
        CHECK(r.uniquely_generated == oracle::uniquely_generated(tr));
        for (const auto& [axiom, w] : r.witnesses) {
            CAPTURE(to_string(axiom));
            CHECK(replays(w, t));
        }
    };
    for_each_c1_table(g2, compare);
    for (const auto& t : random_tables(g3, 5, 300, {})) compare(t);
}

TEST_CASE("witnesses replay only on tables that violate") {
    const auto ex22 = tau_of(FixtureId::Ex2_2);
    const auto w = *check_c22(ex22);
    CHECK(replays(w, ex22));
    CHECK(replays(w, as_violator(ex22)));
    CHECK_FALSE(replays(w, OperatorTable::identity(g3)));
    CHECK(describe(w, ex22).find("F={1} ⊆ G={1,2} ⊆ τ(F)") != std::string::npos);
    CHECK(witness_tag(w) == "C22");
}
