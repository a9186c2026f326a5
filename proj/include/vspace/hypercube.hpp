#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vspace/ground_set.hpp"
#include "vspace/operator_table.hpp"
#include "vspace/witness.hpp"

namespace vspace {

/// [lower, upper] = { C : lower <= C <= upper }.
struct Interval {
    Subset lower;
    Subset upper;

    [[nodiscard]] bool contains(Subset c) const { return lower.subset_of(c) && c.subset_of(upper); }
    [[nodiscard]] std::size_t cardinality() const {
        return std::size_t{1} << static_cast<std::size_t>(upper.size() - lower.size());
    }
    bool operator==(const Interval&) const = default;
};

/// Partition of 2^E into disjoint intervals.
class IntervalPartition {
public:
    /// Throws ParseError when the intervals overlap, leave a gap, or have
    /// lower not inside upper.
    IntervalPartition(GroundSet ground, std::vector<Interval> intervals);

    /// Empty when valid; otherwise a diagnosis naming the overlap or gap.
    static std::optional<std::string> diagnose(const GroundSet& ground,
                                               const std::vector<Interval>& intervals);

    [[nodiscard]] const GroundSet& ground() const { return ground_; }
    [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }

    /// Same intervals in canonical order of their lower endpoints.
    [[nodiscard]] IntervalPartition canonical() const;

    bool operator==(const IntervalPartition&) const = default;

private:
    GroundSet ground_;
    std::vector<Interval> intervals_;
};

struct EquivalenceClass {
    Subset value;                 // the common image tau(X)
    std::vector<Subset> members;  // canonical order
};

/// Classes of X ~ Y iff tau(X) = tau(Y), ordered canonically by value.
std::vector<EquivalenceClass> equivalence_classes(const OperatorTable& tau);

/// The class partition when every class is an interval (in class order),
/// otherwise the first offending class value.
std::variant<IntervalPartition, NonIntervalWitness> classes_as_intervals(const OperatorTable& tau);

/// Unique inclusion-maximal member of X's class, if there is one.
std::optional<Subset> max_generator(const OperatorTable& tau, Subset x);

/// tau(X) = tau(Y) => tau(X | Y) = tau(X); no precondition.
Violation check_union_property(const OperatorTable& tau);

/// tau(X) = tau(Y) => tau(X & Y) = tau(X) = tau(X | Y). Reports the first
/// failing pair on any table; holds on uniquely generated violator spaces.
Violation check_class_lattice_closure(const OperatorTable& tau);

/// tau(X) = upper endpoint of the interval containing X.
OperatorTable operator_from_partition(const IntervalPartition& p);

/// Visits every interval partition of 2^E exactly once. Throws SizeError for
/// n > 3.
void for_each_interval_partition(const GroundSet& ground,
                                 const std::function<void(const IntervalPartition&)>& visit);
std::vector<IntervalPartition> enumerate_interval_partitions(const GroundSet& ground);

}  // namespace vspace
