#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "vspace/ground_set.hpp"
#include "vspace/operator_table.hpp"
#include "vspace/subset.hpp"

namespace vspace {

// Axiom-level witnesses. Field names follow the roles the sets play in the
// violated implication.

// x not inside tau(x)
struct C1Witness {
    Subset x;
    bool operator==(const C1Witness&) const = default;
};
// x <= y, tau(x) not inside tau(y)
struct C2Witness {
    Subset x, y;
    bool operator==(const C2Witness&) const = default;
};
// tau(tau(x)) != tau(x)
struct C3Witness {
    Subset x;
    bool operator==(const C3Witness&) const = default;
};
// f <= g <= tau(f), tau(g) != tau(f)
struct C22Witness {
    Subset f, g;
    bool operator==(const C22Witness&) const = default;
};
// x <= y <= z, tau(x) = tau(z) != tau(y)
struct ConvexityWitness {
    Subset x, y, z;
    bool operator==(const ConvexityWitness&) const = default;
};
// p, q outside tau(x), p in tau(x+q) and q in tau(x+p)
struct AntiExchangeWitness {
    Subset x;
    std::size_t p, q;
    bool operator==(const AntiExchangeWitness&) const = default;
};
// g meets V(g)
struct ConsistencyWitness {
    Subset g;
    bool operator==(const ConsistencyWitness&) const = default;
};
// f <= g, g misses V(f), V(g) != V(f)
struct LocalityWitness {
    Subset f, g;
    bool operator==(const LocalityWitness&) const = default;
};
// f <= e <= g, V(f) = V(g) != V(e)
struct MonotonicityWitness {
    Subset f, e, g;
    bool operator==(const MonotonicityWitness&) const = default;
};
// two distinct bases of x
struct TwoBasesWitness {
    Subset x, b1, b2;
    bool operator==(const TwoBasesWitness&) const = default;
};
// the class with image `value` is not an interval
struct NonIntervalWitness {
    Subset value;
    bool operator==(const NonIntervalWitness&) const = default;
};

/// Local disagreement found by a theorem check. `theorem` names the check;
/// the remaining fields locate it (unused ones stay empty).
struct TheoremWitness {
    std::string theorem;
    Subset x;
    Subset y;
    std::optional<std::size_t> element;
    bool operator==(const TheoremWitness&) const = default;
};

using Witness = std::variant<C1Witness, C2Witness, C3Witness, C22Witness, ConvexityWitness,
                             AntiExchangeWitness, ConsistencyWitness, LocalityWitness,
                             MonotonicityWitness, TwoBasesWitness, NonIntervalWitness,
                             TheoremWitness>;

/// Result of a check: empty means the property holds.
using Violation = std::optional<Witness>;

/// Re-evaluates the witness against `op` and returns true iff the violation
/// it claims is really there. Tables of the other kind are converted first.
bool replays(const Witness& w, const OperatorTable& op);

/// Human-readable rendering in set notation, e.g.
/// "F={1} ⊆ G={1,2} ⊆ τ(F) but τ(G)≠τ(F)".
std::string describe(const Witness& w, const OperatorTable& op);

/// Short tag naming the witness variant ("C22", "TWO_BASES", ...).
std::string witness_tag(const Witness& w);

}  // namespace vspace
