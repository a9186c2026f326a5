#include "vspace/fixtures.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace vspace {
namespace {

using Entry = std::pair<std::initializer_list<std::size_t>, std::initializer_list<std::size_t>>;

// Elements are written with their 1-based labels.
Subset set_of(std::initializer_list<std::size_t> labels) {
    Subset s;
    for (auto l : labels) s = s.with(l - 1);
    return s;
}

OperatorTable with_overrides(OperatorTable base, std::initializer_list<Entry> entries) {
    for (const auto& [set, image] : entries) base = base.with_entry(set_of(set), set_of(image));
    return base;
}

}  // namespace

std::string_view to_string(FixtureId id) {
    switch (id) {
        case FixtureId::Ex1: return "ex1";
        case FixtureId::Ex1Literal: return "ex1_literal";
        case FixtureId::Ex2_2: return "ex2_2";
        case FixtureId::Exms: return "exms";
        case FixtureId::Ex5_1: return "ex5_1";
    }
    return "?";
}

std::optional<FixtureId> parse_fixture_id(std::string_view name) {
    std::string key(name);
    for (auto& c : key) {
        if (c == '-') c = '_';
    }
    for (FixtureId id : all_fixtures()) {
        if (to_string(id) == key) return id;
    }
    return std::nullopt;
}

std::vector<FixtureId> all_fixtures() {
    return {FixtureId::Ex1, FixtureId::Ex1Literal, FixtureId::Ex2_2, FixtureId::Exms, FixtureId::Ex5_1};
}

OperatorTable canned_example(FixtureId id) {
    switch (id) {
        case FixtureId::Ex1:
            return with_overrides(OperatorTable::complement(GroundSet::numbered(3)), {{{1}, {2}}, {{3}, {2}}});
        case FixtureId::Ex1Literal:
            return with_overrides(OperatorTable::complement(GroundSet::numbered(3)), {{{1}, {2}}});
        case FixtureId::Ex2_2:
            return with_overrides(OperatorTable::identity(GroundSet::numbered(3)),
                                  {{{1}, {1, 2}}, {{1, 2}, {1, 2, 3}}});
        case FixtureId::Exms:
            return with_overrides(OperatorTable::identity(GroundSet::numbered(4)),
                                  {{{1, 2}, {1, 2, 3}},
                                   {{1, 3}, {1, 2, 3, 4}},
                                   {{1, 2, 3}, {1, 2, 3, 4}},
                                   {{1, 3, 4}, {1, 2, 3, 4}},
                                   {{1, 2, 3, 4}, {1, 2, 3, 4}}});
        case FixtureId::Ex5_1:
            return with_overrides(OperatorTable::identity(GroundSet::numbered(4)),
                                  {{{1}, {1, 2, 3}},
                                   {{1, 2}, {1, 2, 3}},
                                   {{1, 3}, {1, 2, 3}},
                                   {{1, 2, 3}, {1, 2, 3, 4}}});
    }
    return OperatorTable::identity(GroundSet{});
}

FixtureSignature expected_signature(FixtureId id) {
    // closure, violator, convex, geometry, uniquely generated, anti-exchange
    switch (id) {
        case FixtureId::Ex1: return {false, true, true, false, false, false};
        case FixtureId::Ex1Literal: return {false, true, true, false, true, true};
        case FixtureId::Ex2_2: return {false, false, true, false, true, true};
        case FixtureId::Exms: return {false, false, true, false, true, false};
        case FixtureId::Ex5_1: return {false, false, true, false, true, true};
    }
    return {};
}

}  // namespace vspace
