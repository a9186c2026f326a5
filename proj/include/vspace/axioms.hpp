#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vspace/operator_table.hpp"
#include "vspace/witness.hpp"

namespace vspace {

/// Axioms checked on finite operator tables.
///
/// C1/C2/C3 are the closure axioms, C22 the weak closure axiom
/// (F <= G <= tau(F) => tau(G) = tau(F)), CONVEXITY the sandwich property on
/// tau, CONSISTENCY/LOCALITY the violator-space axioms on V, and MONOTONICITY
/// the sandwich property stated for V.
enum class Axiom {
    C1,
    C2,
    C3,
    C22,
    Convexity,
    AntiExchange,
    Consistency,
    Locality,
    Monotonicity,
};

inline constexpr std::array kAllAxioms = {
    Axiom::C1,          Axiom::C2,          Axiom::C3,       Axiom::C22,          Axiom::Convexity,
    Axiom::AntiExchange, Axiom::Consistency, Axiom::Locality, Axiom::Monotonicity,
};

std::string_view to_string(Axiom a);
/// Accepts "c1", "C22", "anti-exchange", "anti_exchange", ... Empty if unknown.
std::optional<Axiom> parse_axiom(std::string_view name);
/// The presentation the axiom is stated in.
OperatorKind axiom_kind(Axiom a);

// Every check returns the first violation in canonical subset order, or
// nothing when the axiom holds. All throw KindError on the wrong kind.

Violation check_c1(const OperatorTable& tau);
Violation check_c2(const OperatorTable& tau);
Violation check_c3(const OperatorTable& tau);
Violation check_c22(const OperatorTable& tau);
/// Pairwise form: for X <= Z with tau(X) = tau(Z), every Y in between.
Violation check_convexity(const OperatorTable& tau);
Violation check_anti_exchange(const OperatorTable& tau);
Violation check_consistency(const OperatorTable& v);
Violation check_locality(const OperatorTable& v);
Violation check_monotonicity(const OperatorTable& v);

/// Runs one axiom on whichever presentation it is stated in, converting
/// `op` through duality when the kinds differ.
Violation check_axiom(Axiom a, const OperatorTable& op);

/// Per-axiom flags and witnesses plus the derived space classes.
struct AxiomReport {
    OperatorKind kind = OperatorKind::Tau;
    std::map<Axiom, bool> flags;
    std::map<Axiom, Witness> witnesses;

    bool closure_space = false;      // C1 and C2 and C3
    bool violator_space = false;     // C1 and C22 (tau-form) / CONSISTENCY and LOCALITY (V-form)
    bool convex_space = false;       // C1 and CONVEXITY
    bool convex_geometry = false;    // closure space with ANTI_EXCHANGE
    bool uniquely_generated = false;

    [[nodiscard]] bool passes(Axiom a) const { return flags.at(a); }
    /// e.g. "closure+violator+convex+geometry+unique", "none".
    [[nodiscard]] std::string signature() const;
};

/// Evaluates every axiom. V-form tables run CONSISTENCY/LOCALITY/MONOTONICITY
/// directly and the tau-axioms on the dual table; tau-form tables the reverse.
/// Witnesses refer to the presentation their axiom is stated in.
AxiomReport classify(const OperatorTable& op);

/// Cheap predicates used by sweeps and preconditions.
bool is_closure_space(const OperatorTable& tau);
bool is_violator_space(const OperatorTable& tau);
bool is_convex_space(const OperatorTable& tau);

}  // namespace vspace
