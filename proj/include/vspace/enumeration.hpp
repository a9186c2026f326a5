#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vspace/axioms.hpp"
#include "vspace/ground_set.hpp"
#include "vspace/operator_table.hpp"
#include "vspace/witness.hpp"

namespace vspace {

/// Largest ground set swept exhaustively.
inline constexpr std::size_t kMaxExhaustiveSize = 3;

/// 2^(sum over X of (n - |X|)) = 2^(n * 2^(n-1)).
std::uint64_t c1_table_count(std::size_t n);

/// Every tau-table with X <= tau(X), exactly once. Throws SizeError for n > 3.
void for_each_c1_table(const GroundSet& ground, const std::function<void(const OperatorTable&)>& visit);
std::vector<OperatorTable> enumerate_c1_tables(const GroundSet& ground);

/// Deterministic pseudorandom tau-tables satisfying every axiom in
/// `constraints` (stated in either presentation). C1 is built directly; the
/// rest is rejection sampling with at most `attempt_budget` draws per table,
/// after which SizeError is thrown. Same seed, same stream.
std::vector<OperatorTable> random_tables(const GroundSet& ground, std::uint64_t seed, std::size_t count,
                                         const std::vector<Axiom>& constraints,
                                         std::size_t attempt_budget = 100000);

/// Whether a registered claim is a theorem (no counterexample may exist) or
/// a stated non-implication (a counterexample must exist).
enum class Expectation { Holds, Refuted };

struct SweepViolation {
    std::string theorem;
    OperatorTable table;
    Witness witness;
};

struct SweepReport {
    std::string theorem;
    std::string universe;
    Expectation expectation = Expectation::Holds;
    std::size_t ground_size = 0;
    std::size_t universe_size = 0;
    std::map<std::string, std::size_t> counts;  // class signature -> tables
    std::vector<SweepViolation> violations;

    /// Theorems need zero violations, non-implications at least one.
    [[nodiscard]] bool confirmed() const;
};

struct TheoremInfo {
    std::string id;
    std::string statement;
    std::string universe;
    Expectation expectation;
};

/// Registered claims in registration order.
const std::vector<TheoremInfo>& registered_theorems();
std::optional<TheoremInfo> find_theorem(const std::string& id);

/// Random-sample mode for n = 4, where the C1 universe has 2^32 members.
struct Sampling {
    std::uint64_t seed = 1;
    std::size_t count = 1000;
};

/// Checks the claim on every member of its universe (exhaustive for n <= 3,
/// sampled C1 tables otherwise). Throws Error on an unknown id and SizeError
/// for n > 3 without sampling.
SweepReport run_theorem_sweep(const GroundSet& ground, const std::string& theorem_id,
                              std::optional<Sampling> sampling = std::nullopt);

/// Class-signature census over all C1 tables on the ground set.
SweepReport run_census(const GroundSet& ground);

/// Counts of the named classes over all C1 tables on n elements.
struct Census {
    std::size_t c1_tables = 0;
    std::size_t convex_spaces = 0;
    std::size_t violator_spaces = 0;
    std::size_t closure_spaces = 0;
    std::size_t convex_geometries = 0;
    std::size_t uniquely_generated_violator_spaces = 0;
    bool operator==(const Census&) const = default;
};
Census census_counts(std::size_t n);

}  // namespace vspace
