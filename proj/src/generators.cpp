#include "vspace/generators.hpp"

#include <algorithm>

#include "classes.hpp"
#include "vspace/axioms.hpp"
#include "vspace/error.hpp"

namespace vspace {
namespace {

using detail::buckets_by_image;
using detail::classes_by_first_member;
using detail::intersection_of;

void require_violator_space(const OperatorTable& tau, std::string_view what) {
    require_kind(tau, OperatorKind::Tau, what);
    if (!is_violator_space(tau)) throw PreconditionError(std::string(what) + " requires a violator space (C1, C22)");
}

void require_convex_space(const OperatorTable& tau, std::string_view what) {
    require_kind(tau, OperatorKind::Tau, what);
    if (!is_convex_space(tau)) throw PreconditionError(std::string(what) + " requires a convex space (C1, CONVEXITY)");
}

}  // namespace

std::vector<Subset> minimal_members(const std::vector<Subset>& family) {
    // In canonical order a proper subset always precedes its supersets, and
    // any non-minimal member already sits above a kept minimal one.
    std::vector<Subset> sorted = family;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Subset> minimal;
    for (Subset y : sorted) {
        bool dominated = false;
        for (Subset m : minimal) {
            if (m != y && m.subset_of(y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated && (minimal.empty() || minimal.back() != y)) minimal.push_back(y);
    }
    return minimal;
}

BasisFamily generators_of(const OperatorTable& tau, Subset x, GeneratorScope scope) {
    require_kind(tau, OperatorKind::Tau, "generators_of");
    BasisFamily family;
    family.target = x;
    family.closure_value = tau.at(x);
    for (Subset y : canonical_subsets(tau.n())) {
        if (tau(y) != family.closure_value) continue;
        if (scope == GeneratorScope::WithinTarget && !y.subset_of(x)) continue;
        family.generators.push_back(y);
    }
    family.bases = minimal_members(family.generators);
    return family;
}

Violation is_uniquely_generated(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "is_uniquely_generated");
    const auto buckets = buckets_by_image(tau);
    for (const auto* members : classes_by_first_member(buckets, tau)) {
        auto bases = minimal_members(*members);
        if (bases.size() > 1) return TwoBasesWitness{members->back(), bases[0], bases[1]};
    }
    return std::nullopt;
}

bool uniquely_generated(const OperatorTable& tau) { return !is_uniquely_generated(tau).has_value(); }

Violation check_u1(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_u1");
    const auto buckets = buckets_by_image(tau);
    bool unique = true;
    bool contained = true;
    std::optional<Subset> disagreement;
    for (const auto* members : classes_by_first_member(buckets, tau)) {
        const auto bases = minimal_members(*members);
        const bool local_unique = bases.size() == 1;
        const Subset common = intersection_of(*members, Subset{});
        bool local_contained = true;
        for (Subset b : bases) local_contained = local_contained && b.subset_of(common);
        unique = unique && local_unique;
        contained = contained && local_contained;
        if (local_unique != local_contained && !disagreement) disagreement = members->back();
    }
    if (unique == contained) return std::nullopt;
    return TheoremWitness{"u1", disagreement.value_or(Subset{}), {}, {}};
}

std::optional<std::pair<Subset, Subset>> find_intersection_failure(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "find_intersection_failure");
    const auto buckets = buckets_by_image(tau);
    for (Subset x : canonical_subsets(tau.n())) {
        for (Subset y : buckets[tau(x).index()]) {
            if (tau(x & y) != tau(x)) return std::pair{x, y};
        }
    }
    return std::nullopt;
}

Violation check_uq_intersection(const OperatorTable& tau) {
    require_convex_space(tau, "check_uq_intersection");
    const bool unique = uniquely_generated(tau);
    const auto eq3_failure = find_intersection_failure(tau);

    const auto buckets = buckets_by_image(tau);
    std::optional<Subset> eq4_failure;
    for (const auto* members : classes_by_first_member(buckets, tau)) {
        const Subset common = intersection_of(*members, Subset{});
        if (tau(common) != tau(members->front())) {
            eq4_failure = members->back();
            break;
        }
    }
    const bool eq3 = !eq3_failure;
    const bool eq4 = !eq4_failure;
    if (unique == eq3 && eq3 == eq4) return std::nullopt;
    if (eq3_failure) return TheoremWitness{"uq-intersection", eq3_failure->first, eq3_failure->second, {}};
    return TheoremWitness{"uq-intersection", eq4_failure.value_or(Subset{}), {}, {}};
}

Violation check_add_lemma(const OperatorTable& tau) {
    require_violator_space(tau, "check_add_lemma");
    for (Subset a : canonical_subsets(tau.n())) {
        for (std::size_t x = 0; x < tau.n(); ++x) {
            const bool outside = !tau(a).contains(x);
            const bool grows = tau(a) != tau(a.with(x));
            if (outside != grows) return TheoremWitness{"add-lemma", a, {}, x};
        }
    }
    return std::nullopt;
}

std::string_view to_string(ExtremeDefinition def) {
    return def == ExtremeDefinition::NotInClosure ? "ex" : "EX";
}

ExtremeSets extreme_points(const OperatorTable& tau, Subset a) {
    require_kind(tau, OperatorKind::Tau, "extreme_points");
    ExtremeSets out;
    const Subset ta = tau.at(a);
    for (std::size_t x : a.elements()) {
        const Subset reduced = tau(a.without(x));
        if (!reduced.contains(x)) out.ex = out.ex.with(x);
        if (reduced != ta) out.EX = out.EX.with(x);
    }
    return out;
}

Subset extreme_points(const OperatorTable& tau, Subset a, ExtremeDefinition def) {
    const auto sets = extreme_points(tau, a);
    return def == ExtremeDefinition::NotInClosure ? sets.ex : sets.EX;
}

Subset generator_intersection_within(const OperatorTable& tau, Subset x) {
    require_kind(tau, OperatorKind::Tau, "generator_intersection_within");
    return intersection_of(generators_of(tau, x, GeneratorScope::WithinTarget).generators, x);
}

Violation check_expoint(const OperatorTable& tau) {
    require_convex_space(tau, "check_expoint");
    const bool violator = is_violator_space(tau);
    for (Subset a : canonical_subsets(tau.n())) {
        const auto e = extreme_points(tau, a);
        const bool ok = violator ? e.ex == e.EX : e.ex.subset_of(e.EX);
        if (!ok) return TheoremWitness{"expoint", a, {}, {}};
    }
    return std::nullopt;
}

Violation check_extreme_in_generators(const OperatorTable& tau) {
    require_convex_space(tau, "check_extreme_in_generators");
    const bool violator = is_violator_space(tau);
    for (Subset x : canonical_subsets(tau.n())) {
        const Subset ex = extreme_points(tau, x).ex;
        const Subset common = generator_intersection_within(tau, x);
        const bool ok = violator ? ex == common : ex.subset_of(common);
        if (!ok) return TheoremWitness{"expb", x, {}, {}};
    }
    return std::nullopt;
}

std::optional<Subset> krein_milman_failure(const OperatorTable& tau, ExtremeDefinition def) {
    require_kind(tau, OperatorKind::Tau, "krein_milman_failure");
    for (Subset x : canonical_subsets(tau.n())) {
        if (tau(x) != tau(extreme_points(tau, x, def))) return x;
    }
    return std::nullopt;
}

Violation check_krein_milman(const OperatorTable& tau, ExtremeDefinition def) {
    if (def == ExtremeDefinition::NotInClosure) {
        require_violator_space(tau, "check_krein_milman(ex)");
    } else {
        require_convex_space(tau, "check_krein_milman(EX)");
    }
    const std::string id = def == ExtremeDefinition::NotInClosure ? "krein-milman-ex" : "krein-milman-EX";
    const auto two_bases = is_uniquely_generated(tau);
    const auto failure = krein_milman_failure(tau, def);
    if (two_bases.has_value() == failure.has_value()) return std::nullopt;
    if (failure) return TheoremWitness{id, *failure, {}, {}};
    return TheoremWitness{id, std::get<TwoBasesWitness>(*two_bases).x, {}, {}};
}

}  // namespace vspace
