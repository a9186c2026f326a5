#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vspace/operator_table.hpp"
#include "vspace/witness.hpp"

namespace vspace {

/// Whether generators of X may be arbitrary subsets of E or must lie in X.
enum class GeneratorScope { Anywhere, WithinTarget };

/// Generators and bases (inclusion-minimal generators) of one target set.
struct BasisFamily {
    Subset target;
    Subset closure_value;
    std::vector<Subset> generators;  // canonical order
    std::vector<Subset> bases;       // canonical order
};

BasisFamily generators_of(const OperatorTable& tau, Subset x, GeneratorScope scope);

/// Inclusion-minimal members of `family`, canonical order preserved.
std::vector<Subset> minimal_members(const std::vector<Subset>& family);

/// Every equivalence class {Y : tau(Y) = tau(X)} has exactly one minimal
/// member. On failure the witness names the class by its canonically last
/// member and its first two bases.
Violation is_uniquely_generated(const OperatorTable& tau);
bool uniquely_generated(const OperatorTable& tau);

/// Unique generation agrees, class by class, with "each basis lies in every
/// generator". Never fires; a witness is a counterexample to the theorem.
Violation check_u1(const OperatorTable& tau);

/// First pair (X, Y) with tau(X) = tau(Y) but tau(X & Y) != tau(X).
std::optional<std::pair<Subset, Subset>> find_intersection_failure(const OperatorTable& tau);

/// For a convex space: unique generation, intersection-closed classes and
/// "basis = intersection of all generators" must agree. Throws
/// PreconditionError unless C1 and CONVEXITY hold.
Violation check_uq_intersection(const OperatorTable& tau);

/// x outside tau(A) iff tau(A) != tau(A + x). Requires a violator space.
Violation check_add_lemma(const OperatorTable& tau);

/// ex: points x of A with x outside tau(A - x).
/// EX: points x of A with tau(A) != tau(A - x).
struct ExtremeSets {
    Subset ex;
    Subset EX;
};

enum class ExtremeDefinition { NotInClosure, ChangesClosure };

std::string_view to_string(ExtremeDefinition def);

ExtremeSets extreme_points(const OperatorTable& tau, Subset a);
Subset extreme_points(const OperatorTable& tau, Subset a, ExtremeDefinition def);

/// Intersection of the generators of X that lie inside X. An empty family
/// yields X.
Subset generator_intersection_within(const OperatorTable& tau, Subset x);

/// Violator spaces: ex(A) = EX(A) for all A. Convex spaces: ex(A) <= EX(A).
/// Throws PreconditionError unless the table is at least a convex space.
Violation check_expoint(const OperatorTable& tau);

/// Violator spaces: ex(X) equals the intersection of within-X generators.
/// Convex spaces: ex(X) is contained in it.
Violation check_extreme_in_generators(const OperatorTable& tau);

/// First X with tau(X) != tau(ext(X)) under the chosen definition.
std::optional<Subset> krein_milman_failure(const OperatorTable& tau, ExtremeDefinition def);

/// Unique generation iff tau(X) = tau(ext(X)) for all X. NotInClosure
/// requires a violator space, ChangesClosure a convex space.
Violation check_krein_milman(const OperatorTable& tau, ExtremeDefinition def);

}  // namespace vspace
