#include "vspace/hypercube.hpp"

#include <algorithm>
#include <cstdint>

#include "classes.hpp"
#include "vspace/error.hpp"

namespace vspace {
namespace {

using detail::buckets_by_image;

std::vector<Subset> members_of(const Interval& iv) {
    auto out = canonical_subsets_of(iv.upper - iv.lower);
    for (auto& s : out) s = s | iv.lower;
    return out;
}

std::string format_interval(const GroundSet& ground, const Interval& iv) {
    return "[" + ground.format(iv.lower) + ", " + ground.format(iv.upper) + "]";
}

}  // namespace

IntervalPartition::IntervalPartition(GroundSet ground, std::vector<Interval> intervals)
    : ground_(std::move(ground)), intervals_(std::move(intervals)) {
    if (auto problem = diagnose(ground_, intervals_)) throw ParseError(*problem);
}

std::optional<std::string> IntervalPartition::diagnose(const GroundSet& ground,
                                                       const std::vector<Interval>& intervals) {
    std::vector<int> owner(ground.subset_count(), -1);
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const Interval& iv = intervals[k];
        if (!ground.valid(iv.lower) || !ground.valid(iv.upper)) {
            return "interval " + std::to_string(k) + " leaves the ground set";
        }
        if (!iv.lower.subset_of(iv.upper)) {
            return "interval " + format_interval(ground, iv) + " has lower endpoint not inside upper";
        }
        for (Subset c : members_of(iv)) {
            if (owner[c.index()] >= 0) {
                return "overlap: " + ground.format(c) + " lies in " +
                       format_interval(ground, intervals[static_cast<std::size_t>(owner[c.index()])]) +
                       " and " + format_interval(ground, iv);
            }
            owner[c.index()] = static_cast<int>(k);
        }
    }
    for (Subset c : canonical_subsets(ground.size())) {
        if (owner[c.index()] < 0) return "gap: " + ground.format(c) + " lies in no interval";
    }
    return std::nullopt;
}

IntervalPartition IntervalPartition::canonical() const {
    auto sorted = intervals_;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
    return IntervalPartition(ground_, std::move(sorted));
}

std::vector<EquivalenceClass> equivalence_classes(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "equivalence_classes");
    auto buckets = buckets_by_image(tau);
    std::vector<EquivalenceClass> out;
    for (Subset value : canonical_subsets(tau.n())) {
        auto& members = buckets[value.index()];
        if (!members.empty()) out.push_back({value, std::move(members)});
    }
    return out;
}

std::variant<IntervalPartition, NonIntervalWitness> classes_as_intervals(const OperatorTable& tau) {
    std::vector<Interval> intervals;
    for (const auto& cls : equivalence_classes(tau)) {
        Subset lower = cls.members.front();
        Subset upper;
        for (Subset m : cls.members) {
            lower = lower & m;
            upper = upper | m;
        }
        const Interval iv{lower, upper};
        if (cls.members.size() != iv.cardinality()) return NonIntervalWitness{cls.value};
        intervals.push_back(iv);
    }
    return IntervalPartition(tau.ground(), std::move(intervals));
}

std::optional<Subset> max_generator(const OperatorTable& tau, Subset x) {
    require_kind(tau, OperatorKind::Tau, "max_generator");
    const Subset value = tau.at(x);
    Subset top;
    for (Subset y : canonical_subsets(tau.n())) {
        if (tau(y) == value) top = top | y;
    }
    // A unique maximal member exists iff the union of the class is a member.
    if (tau(top) != value) return std::nullopt;
    return top;
}

Violation check_union_property(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_union_property");
    const auto buckets = buckets_by_image(tau);
    for (Subset x : canonical_subsets(tau.n())) {
        for (Subset y : buckets[tau(x).index()]) {
            if (tau(x | y) != tau(x)) return TheoremWitness{"union", x, y, {}};
        }
    }
    return std::nullopt;
}

Violation check_class_lattice_closure(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_class_lattice_closure");
    const auto buckets = buckets_by_image(tau);
    for (Subset x : canonical_subsets(tau.n())) {
        for (Subset y : buckets[tau(x).index()]) {
            if (tau(x & y) != tau(x) || tau(x | y) != tau(x)) {
                return TheoremWitness{"class-lattice-closure", x, y, {}};
            }
        }
    }
    return std::nullopt;
}

OperatorTable operator_from_partition(const IntervalPartition& p) {
    std::vector<Subset> images(p.ground().subset_count());
    for (const Interval& iv : p.intervals()) {
        for (Subset c : members_of(iv)) images[c.index()] = iv.upper;
    }
    return OperatorTable(p.ground(), OperatorKind::Tau, std::move(images));
}

void for_each_interval_partition(const GroundSet& ground,
                                 const std::function<void(const IntervalPartition&)>& visit) {
    if (ground.size() > 3) throw SizeError("interval partitions are enumerated for n <= 3 only");
    const std::size_t n = ground.size();
    const auto order = canonical_subsets(n);
    std::vector<bool> covered(ground.subset_count(), false);
    std::vector<Interval> chosen;

    // The canonically least uncovered subset must be the lower endpoint of
    // its interval: any smaller lower endpoint would itself be uncovered.
    auto recurse = [&](auto&& self, std::size_t cursor) -> void {
        while (cursor < order.size() && covered[order[cursor].index()]) ++cursor;
        if (cursor == order.size()) {
            visit(IntervalPartition(ground, chosen));
            return;
        }
        const Subset lower = order[cursor];
        for (Subset upper : canonical_supersets_of(lower, n)) {
            const Interval iv{lower, upper};
            const auto members = members_of(iv);
            if (std::any_of(members.begin(), members.end(), [&](Subset c) { return covered[c.index()]; })) continue;
            for (Subset c : members) covered[c.index()] = true;
            chosen.push_back(iv);
            self(self, cursor + 1);
            chosen.pop_back();
            for (Subset c : members) covered[c.index()] = false;
        }
    };
    recurse(recurse, 0);
}

std::vector<IntervalPartition> enumerate_interval_partitions(const GroundSet& ground) {
    std::vector<IntervalPartition> out;
    for_each_interval_partition(ground, [&](const IntervalPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace vspace
