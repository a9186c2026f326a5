#include <doctest.h>

#include "oracle.hpp"
#include "vspace/axioms.hpp"
#include "vspace/duality.hpp"
#include "vspace/enumeration.hpp"
#include "vspace/error.hpp"
#include "vspace/fixtures.hpp"
#include "vspace/generators.hpp"

using namespace vspace;

namespace {

OperatorTable tau_of(FixtureId id) { return as_tau(canned_example(id)); }

std::vector<Subset> sets(std::initializer_list<std::uint32_t> masks) {
    std::vector<Subset> out;
    for (auto m : masks) out.push_back(Subset{m});
    return out;
}

const GroundSet g3 = GroundSet::numbered(3);

}  // namespace

TEST_CASE("generators and bases") {
    const auto ex1 = generators_of(tau_of(FixtureId::Ex1), Subset{0b101}, GeneratorScope::Anywhere);
    CHECK(ex1.generators == sets({0b001, 0b100, 0b101}));
    CHECK(ex1.bases == sets({0b001, 0b100}));

    const auto all = generators_of(OperatorTable::constant(g3, g3.full()), Subset{0b110}, GeneratorScope::Anywhere);
    CHECK(all.bases == sets({0}));
    CHECK(all.generators.size() == 8);

    const auto exms = generators_of(tau_of(FixtureId::Exms), Subset{0b1111}, GeneratorScope::Anywhere);
    CHECK(exms.bases == sets({0b0101}));

    const auto within = generators_of(tau_of(FixtureId::Exms), Subset{0b0111}, GeneratorScope::WithinTarget);
    for (auto y : within.generators) CHECK(y.subset_of(Subset{0b0111}));
}

TEST_CASE("bases match the oracle") {
    for (const auto& t : random_tables(GroundSet::numbered(4), 3, 50, {Axiom::C1})) {
        const auto raw = oracle::raw(t);
        for (auto x : canonical_subsets(4)) {
            const auto fam = generators_of(t, x, GeneratorScope::Anywhere);
            std::vector<Subset> expected;
            for (auto b : oracle::bases(raw, x.bits())) expected.push_back(Subset{b});
            std::sort(expected.begin(), expected.end());
            CHECK(fam.bases == expected);
        }
    }
}

TEST_CASE("unique generation") {
    CHECK_FALSE(is_uniquely_generated(tau_of(FixtureId::Exms)));
    CHECK_FALSE(is_uniquely_generated(OperatorTable::identity(g3)));
    const auto v = is_uniquely_generated(tau_of(FixtureId::Ex1));
    REQUIRE(v);
    const auto w = std::get<TwoBasesWitness>(*v);
    CHECK(w.x == Subset{0b101});
    CHECK(w.b1 == Subset{0b001});
    CHECK(w.b2 == Subset{0b100});
    CHECK(replays(*v, tau_of(FixtureId::Ex1)));
}

TEST_CASE("U1 and the intersection equivalences") {
    CHECK_FALSE(check_u1(tau_of(FixtureId::Ex1)));
    CHECK_FALSE(check_u1(OperatorTable::identity(g3)));
    CHECK_FALSE(check_uq_intersection(tau_of(FixtureId::Exms)));
    CHECK_FALSE(check_uq_intersection(OperatorTable::constant(g3, g3.full())));
    CHECK_FALSE(check_uq_intersection(tau_of(FixtureId::Ex1)));

    const auto fail = find_intersection_failure(tau_of(FixtureId::Ex1));
    REQUIRE(fail);
    CHECK(fail->first == Subset{0b001});
    CHECK(fail->second == Subset{0b100});
    CHECK_FALSE(find_intersection_failure(OperatorTable::constant(g3, g3.full())));

    const auto not_convex = OperatorTable::identity(GroundSet::numbered(2)).with_entry(Subset{}, Subset{0b11});
    CHECK_THROWS_AS(check_uq_intersection(not_convex), PreconditionError);
}

TEST_CASE("add lemma") {
    CHECK_FALSE(check_add_lemma(tau_of(FixtureId::Ex1)));
    CHECK_FALSE(check_add_lemma(tau_of(FixtureId::Ex1Literal)));
    CHECK_FALSE(check_add_lemma(OperatorTable::identity(g3)));
    CHECK_THROWS_AS(check_add_lemma(tau_of(FixtureId::Ex2_2)), PreconditionError);
}

TEST_CASE("extreme points") {
    const auto exms = tau_of(FixtureId::Exms);
    const auto e = extreme_points(exms, Subset{0b0111});
    CHECK(e.ex == Subset{0b0001});
    CHECK(e.EX == Subset{0b0101});
    CHECK(extreme_points(exms, Subset{0b0111}, ExtremeDefinition::ChangesClosure) == Subset{0b0101});

    for (auto a : canonical_subsets(3)) {
        const auto id = extreme_points(OperatorTable::identity(g3), a);
        CHECK(id.ex == a);
        CHECK(id.EX == a);
        const auto c = extreme_points(OperatorTable::constant(g3, g3.full()), a);
        CHECK(c.ex == Subset{});
        CHECK(c.EX == Subset{});
    }
    for (const auto& t : random_tables(GroundSet::numbered(4), 21, 30, {Axiom::C1})) {
        const auto raw = oracle::raw(t);
        for (auto a : canonical_subsets(4)) {
            const auto s = extreme_points(t, a);
            CHECK(s.ex.bits() == oracle::ex(raw, a.bits()));
            CHECK(s.EX.bits() == oracle::EX(raw, a.bits()));
        }
    }
}

TEST_CASE("ex versus EX") {
    CHECK_FALSE(check_expoint(tau_of(FixtureId::Exms)));
    CHECK_FALSE(check_expoint(tau_of(FixtureId::Ex1)));
    CHECK_FALSE(check_expoint(OperatorTable::identity(g3)));
}

TEST_CASE("extreme points and generators") {
    const auto ex1 = tau_of(FixtureId::Ex1);
    CHECK(generator_intersection_within(ex1, Subset{0b101}) == Subset{});
    CHECK(extreme_points(ex1, Subset{0b101}).ex == Subset{});
    CHECK_FALSE(check_extreme_in_generators(ex1));

    const auto exms = tau_of(FixtureId::Exms);
    CHECK(generator_intersection_within(exms, Subset{0b0111}) == Subset{0b0101});
    CHECK_FALSE(check_extreme_in_generators(exms));

    for (auto x : canonical_subsets(3))
        CHECK(generator_intersection_within(OperatorTable::identity(g3), x) == x);
}

TEST_CASE("Krein-Milman") {
    const auto exms = tau_of(FixtureId::Exms);
    CHECK_FALSE(krein_milman_failure(exms, ExtremeDefinition::ChangesClosure));
    CHECK_FALSE(check_krein_milman(exms, ExtremeDefinition::ChangesClosure));
    const auto fail = krein_milman_failure(exms, ExtremeDefinition::NotInClosure);
    REQUIRE(fail);
    CHECK(exms(*fail) != exms(extreme_points(exms, *fail).ex));
    CHECK(exms(Subset{0b0111}) == Subset{0b1111});
    CHECK(exms(Subset{0b0001}) == Subset{0b0001});
    CHECK_THROWS_AS(check_krein_milman(exms, ExtremeDefinition::NotInClosure), PreconditionError);

    CHECK_FALSE(check_krein_milman(tau_of(FixtureId::Ex1), ExtremeDefinition::NotInClosure));
}

TEST_CASE("generator theorems hold on every violator space with n <= 3") {
    for (std::size_t n = 0; n <= 3; ++n) {
        for_each_c1_table(GroundSet::numbered(n), [&](const OperatorTable& t) {
            if (!is_violator_space(t)) return;
            const auto raw = oracle::raw(t);
            CHECK_FALSE(check_u1(t));
            CHECK_FALSE(check_uq_intersection(t));
            CHECK_FALSE(check_add_lemma(t));
            CHECK_FALSE(check_expoint(t));
            CHECK_FALSE(check_extreme_in_generators(t));
            CHECK_FALSE(check_krein_milman(t, ExtremeDefinition::NotInClosure));
            CHECK(uniquely_generated(t) == oracle::uniquely_generated(raw));
            CHECK(uniquely_generated(t) == oracle::anti_exchange(raw));
            for (Subset x : canonical_subsets(n)) CHECK(oracle::ex(raw, x.bits()) == oracle::EX(raw, x.bits()));
        });
    }
}
