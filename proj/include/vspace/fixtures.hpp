#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace {

/// Canned example spaces.
///
///   ex1          V(X) = H - X except V({1}) = V({3}) = {2}   (n = 3, V-form)
///   ex1_literal  V(X) = H - X except V({1}) = {2}            (n = 3, V-form)
///   ex2_2        tau(X) = X except tau({1}) = {1,2},
///                tau({1,2}) = {1,2,3}                         (n = 3)
///   exms         tau(X) = X except tau({1,2}) = {1,2,3} and
///                tau({1,3}) = tau({1,2,3}) = tau({1,3,4})
///                  = tau({1,2,3,4}) = {1,2,3,4}               (n = 4)
///   ex5_1        tau(X) = X except tau({1}) = tau({1,2})
///                  = tau({1,3}) = {1,2,3}, tau({1,2,3}) = {1,2,3,4}   (n = 4)
///
/// ex1 is the amended reading under which tau({1}) = tau({3}) = {1,3}.
enum class FixtureId { Ex1, Ex1Literal, Ex2_2, Exms, Ex5_1 };

std::string_view to_string(FixtureId id);
std::optional<FixtureId> parse_fixture_id(std::string_view name);
std::vector<FixtureId> all_fixtures();

OperatorTable canned_example(FixtureId id);

/// Class flags each fixture is expected to carry (golden values).
struct FixtureSignature {
    bool closure_space;
    bool violator_space;
    bool convex_space;
    bool convex_geometry;
    bool uniquely_generated;
    bool anti_exchange;
};

FixtureSignature expected_signature(FixtureId id);

}  // namespace vspace
