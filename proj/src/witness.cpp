#include "vspace/witness.hpp"

#include <algorithm>
#include <type_traits>

#include "classes.hpp"
#include "vspace/axioms.hpp"
#include "vspace/duality.hpp"
#include "vspace/generators.hpp"
#include "vspace/hypercube.hpp"

namespace vspace {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Subset> class_of(const OperatorTable& tau, Subset x) {
    std::vector<Subset> out;
    for (Subset y : canonical_subsets(tau.n())) {
        if (tau(y) == tau(x)) out.push_back(y);
    }
    return out;
}

bool replay_theorem(const TheoremWitness& w, const OperatorTable& tau) {
    const std::string& t = w.theorem;
    if (t == "u1") {
        const auto members = class_of(tau, w.x);
        const auto bases = minimal_members(members);
        const Subset common = detail::intersection_of(members, Subset{});
        bool contained = true;
        for (Subset b : bases) contained = contained && b.subset_of(common);
        return (bases.size() == 1) != contained;
    }
    if (t == "uq-intersection") {
        const bool unique = uniquely_generated(tau);
        const bool eq3 = !find_intersection_failure(tau);
        bool eq4 = true;
        for (Subset x : canonical_subsets(tau.n())) {
            const auto members = class_of(tau, x);
            eq4 = eq4 && tau(detail::intersection_of(members, Subset{})) == tau(x);
        }
        return !(unique == eq3 && eq3 == eq4);
    }
    if (t == "add-lemma") {
        if (!w.element || *w.element >= tau.n()) return false;
        const std::size_t e = *w.element;
        return (!tau(w.x).contains(e)) != (tau(w.x) != tau(w.x.with(e)));
    }
    if (t == "expoint") {
        const auto sets = extreme_points(tau, w.x);
        return is_violator_space(tau) ? sets.ex != sets.EX : !sets.ex.subset_of(sets.EX);
    }
    if (t == "expb") {
        const Subset ex = extreme_points(tau, w.x).ex;
        const Subset common = generator_intersection_within(tau, w.x);
        return is_violator_space(tau) ? ex != common : !ex.subset_of(common);
    }
    if (t == "krein-milman-ex" || t == "krein-milman-EX") {
        const auto def = t == "krein-milman-ex" ? ExtremeDefinition::NotInClosure : ExtremeDefinition::ChangesClosure;
        if (uniquely_generated(tau)) return tau(w.x) != tau(extreme_points(tau, w.x, def));
        return minimal_members(class_of(tau, w.x)).size() > 1 && !krein_milman_failure(tau, def);
    }
    if (t == "union") {
        return tau(w.x) == tau(w.y) && tau(w.x | w.y) != tau(w.x);
    }
    if (t == "class-lattice-closure") {
        return tau(w.x) == tau(w.y) && (tau(w.x & w.y) != tau(w.x) || tau(w.x | w.y) != tau(w.x));
    }
    if (t == "hp" || t == "hp-convex") {
        const auto members = class_of(tau, w.x);
        const auto bases = minimal_members(members);
        if (bases.size() != 1) return true;
        Subset top = tau(w.x);
        if (t == "hp-convex") {
            auto g = max_generator(tau, w.x);
            if (!g) return true;
            top = *g;
        }
        const Interval expected{bases.front(), top};
        if (!expected.lower.subset_of(expected.upper)) return true;
        if (members.size() != expected.cardinality()) return true;
        for (Subset m : members) {
            if (!expected.contains(m)) return true;
        }
        return false;
    }
    return false;
}

}  // namespace

bool replays(const Witness& w, const OperatorTable& op) {
    const OperatorTable tau = as_tau(op);
    const OperatorTable v = as_violator(op);
    const std::size_t n = op.n();
    auto valid = [&](Subset s) { return op.ground().valid(s); };
    return std::visit(
        Overloaded{
            [&](const C1Witness& c) { return valid(c.x) && !c.x.subset_of(tau(c.x)); },
            [&](const C2Witness& c) {
                return valid(c.y) && c.x.subset_of(c.y) && !tau(c.x).subset_of(tau(c.y));
            },
            [&](const C3Witness& c) { return valid(c.x) && tau(tau(c.x)) != tau(c.x); },
            [&](const C22Witness& c) {
                return valid(c.g) && c.f.subset_of(c.g) && c.g.subset_of(tau(c.f)) && tau(c.g) != tau(c.f);
            },
            [&](const ConvexityWitness& c) {
                return valid(c.z) && c.x.subset_of(c.y) && c.y.subset_of(c.z) && tau(c.x) == tau(c.z) &&
                       tau(c.y) != tau(c.x);
            },
            [&](const AntiExchangeWitness& c) {
                if (!valid(c.x) || c.p >= n || c.q >= n || c.p == c.q) return false;
                const Subset tx = tau(c.x);
                return !tx.contains(c.p) && !tx.contains(c.q) && tau(c.x.with(c.q)).contains(c.p) &&
                       tau(c.x.with(c.p)).contains(c.q);
            },
            [&](const ConsistencyWitness& c) { return valid(c.g) && c.g.intersects(v(c.g)); },
            [&](const LocalityWitness& c) {
                return valid(c.g) && c.f.subset_of(c.g) && !c.g.intersects(v(c.f)) && v(c.g) != v(c.f);
            },
            [&](const MonotonicityWitness& c) {
                return valid(c.g) && c.f.subset_of(c.e) && c.e.subset_of(c.g) && v(c.f) == v(c.g) &&
                       v(c.e) != v(c.f);
            },
            [&](const TwoBasesWitness& c) {
                if (!valid(c.x) || !valid(c.b1) || !valid(c.b2) || c.b1 == c.b2) return false;
                if (tau(c.b1) != tau(c.x) || tau(c.b2) != tau(c.x)) return false;
                const auto bases = minimal_members(class_of(tau, c.x));
                auto has = [&](Subset b) { return std::find(bases.begin(), bases.end(), b) != bases.end(); };
                return has(c.b1) && has(c.b2);
            },
            [&](const NonIntervalWitness& c) {
                if (!valid(c.value)) return false;
                std::vector<Subset> members;
                Subset lower = c.value;
                Subset upper;
                bool first = true;
                for (Subset y : canonical_subsets(n)) {
                    if (tau(y) != c.value) continue;
                    members.push_back(y);
                    lower = first ? y : (lower & y);
                    upper = upper | y;
                    first = false;
                }
                return !members.empty() && members.size() != Interval{lower, upper}.cardinality();
            },
            [&](const TheoremWitness& c) { return valid(c.x) && valid(c.y) && replay_theorem(c, tau); },
        },
        w);
}

std::string witness_tag(const Witness& w) {
    return std::visit(Overloaded{
                          [](const C1Witness&) -> std::string { return "C1"; },
                          [](const C2Witness&) -> std::string { return "C2"; },
                          [](const C3Witness&) -> std::string { return "C3"; },
                          [](const C22Witness&) -> std::string { return "C22"; },
                          [](const ConvexityWitness&) -> std::string { return "CONVEXITY"; },
                          [](const AntiExchangeWitness&) -> std::string { return "ANTI_EXCHANGE"; },
                          [](const ConsistencyWitness&) -> std::string { return "CONSISTENCY"; },
                          [](const LocalityWitness&) -> std::string { return "LOCALITY"; },
                          [](const MonotonicityWitness&) -> std::string { return "MONOTONICITY"; },
                          [](const TwoBasesWitness&) -> std::string { return "TWO_BASES"; },
                          [](const NonIntervalWitness&) -> std::string { return "NON_INTERVAL"; },
                          [](const TheoremWitness& t) -> std::string { return "THEOREM:" + t.theorem; },
                      },
                      w);
}

std::string describe(const Witness& w, const OperatorTable& op) {
    const GroundSet& g = op.ground();
    const OperatorTable tau = as_tau(op);
    const OperatorTable v = as_violator(op);
    auto f = [&](Subset s) { return g.format(s); };
    return std::visit(
        Overloaded{
            [&](const C1Witness& c) { return "X=" + f(c.x) + " ⊄ τ(X)=" + f(tau(c.x)); },
            [&](const C2Witness& c) {
                return "X=" + f(c.x) + " ⊆ Y=" + f(c.y) + " but τ(X)=" + f(tau(c.x)) + " ⊄ τ(Y)=" + f(tau(c.y));
            },
            [&](const C3Witness& c) {
                return "X=" + f(c.x) + ": τ(τ(X))=" + f(tau(tau(c.x))) + " ≠ τ(X)=" + f(tau(c.x));
            },
            [&](const C22Witness& c) {
                return "F=" + f(c.f) + " ⊆ G=" + f(c.g) + " ⊆ τ(F) but τ(G)≠τ(F) (τ(F)=" + f(tau(c.f)) +
                       ", τ(G)=" + f(tau(c.g)) + ")";
            },
            [&](const ConvexityWitness& c) {
                return "X=" + f(c.x) + " ⊆ Y=" + f(c.y) + " ⊆ Z=" + f(c.z) + " and τ(X)=τ(Z)=" + f(tau(c.x)) +
                       " but τ(Y)=" + f(tau(c.y));
            },
            [&](const AntiExchangeWitness& c) {
                return "X=" + f(c.x) + ", p=" + g.label(c.p) + ", q=" + g.label(c.q) + ": p,q ∉ τ(X)=" +
                       f(tau(c.x)) + " but p ∈ τ(X∪q)=" + f(tau(c.x.with(c.q))) + " and q ∈ τ(X∪p)=" +
                       f(tau(c.x.with(c.p)));
            },
            [&](const ConsistencyWitness& c) { return "G=" + f(c.g) + " meets V(G)=" + f(v(c.g)); },
            [&](const LocalityWitness& c) {
                return "F=" + f(c.f) + " ⊆ G=" + f(c.g) + ", G ∩ V(F)=∅ but V(G)=" + f(v(c.g)) +
                       " ≠ V(F)=" + f(v(c.f));
            },
            [&](const MonotonicityWitness& c) {
                return "F=" + f(c.f) + " ⊆ E=" + f(c.e) + " ⊆ G=" + f(c.g) + ", V(F)=V(G)=" + f(v(c.f)) +
                       " but V(E)=" + f(v(c.e));
            },
            [&](const TwoBasesWitness& c) {
                return "X=" + f(c.x) + " has two bases B1=" + f(c.b1) + " and B2=" + f(c.b2) +
                       " (τ=" + f(tau(c.x)) + ")";
            },
            [&](const NonIntervalWitness& c) {
                std::string members;
                for (Subset y : canonical_subsets(op.n())) {
                    if (tau(y) != c.value) continue;
                    if (!members.empty()) members += ", ";
                    members += f(y);
                }
                return "class of value " + f(c.value) + " is not an interval: " + members;
            },
            [&](const TheoremWitness& c) {
                std::string out = c.theorem + " fails at X=" + f(c.x);
                if (!c.y.is_empty()) out += ", Y=" + f(c.y);
                if (c.element) out += ", x=" + g.label(*c.element);
                return out;
            },
        },
        w);
}

}  // namespace vspace
