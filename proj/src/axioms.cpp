#include "vspace/axioms.hpp"

#include <algorithm>
#include <cctype>

#include "vspace/duality.hpp"
#include "vspace/generators.hpp"

namespace vspace {
namespace {

// Sets C with lower <= C <= upper in canonical order; empty if lower is not
// inside upper.
std::vector<Subset> between(Subset lower, Subset upper) {
    if (!lower.subset_of(upper)) return {};
    auto out = canonical_subsets_of(upper - lower);
    for (auto& s : out) s = s | lower;
    return out;
}

}  // namespace

std::string_view to_string(Axiom a) {
    switch (a) {
        case Axiom::C1: return "C1";
        case Axiom::C2: return "C2";
        case Axiom::C3: return "C3";
        case Axiom::C22: return "C22";
        case Axiom::Convexity: return "CONVEXITY";
        case Axiom::AntiExchange: return "ANTI_EXCHANGE";
        case Axiom::Consistency: return "CONSISTENCY";
        case Axiom::Locality: return "LOCALITY";
        case Axiom::Monotonicity: return "MONOTONICITY";
    }
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (Axiom a : kAllAxioms) {
        std::string canon;
        for (char c : to_string(a)) {
            if (c != '_') canon += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (canon == key) return a;
    }
    return std::nullopt;
}

OperatorKind axiom_kind(Axiom a) {
    switch (a) {
        case Axiom::Consistency:
        case Axiom::Locality:
        case Axiom::Monotonicity: return OperatorKind::Violator;
        default: return OperatorKind::Tau;
    }
}

Violation check_c1(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_c1");
    for (Subset x : canonical_subsets(tau.n())) {
        if (!x.subset_of(tau(x))) return C1Witness{x};
    }
    return std::nullopt;
}

Violation check_c2(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_c2");
    for (Subset x : canonical_subsets(tau.n())) {
        for (Subset y : canonical_supersets_of(x, tau.n())) {
            if (!tau(x).subset_of(tau(y))) return C2Witness{x, y};
        }
    }
    return std::nullopt;
}

Violation check_c3(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_c3");
    for (Subset x : canonical_subsets(tau.n())) {
        if (tau(tau(x)) != tau(x)) return C3Witness{x};
    }
    return std::nullopt;
}

Violation check_c22(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_c22");
    for (Subset f : canonical_subsets(tau.n())) {
        for (Subset g : between(f, tau(f))) {
            if (tau(g) != tau(f)) return C22Witness{f, g};
        }
    }
    return std::nullopt;
}

Violation check_convexity(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_convexity");
    for (Subset x : canonical_subsets(tau.n())) {
        for (Subset z : canonical_supersets_of(x, tau.n())) {
            if (tau(z) != tau(x)) continue;
            for (Subset y : between(x, z)) {
                if (tau(y) != tau(x)) return ConvexityWitness{x, y, z};
            }
        }
    }
    return std::nullopt;
}

Violation check_anti_exchange(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "check_anti_exchange");
    const std::size_t n = tau.n();
    for (Subset x : canonical_subsets(n)) {
        const Subset tx = tau(x);
        for (std::size_t p = 0; p < n; ++p) {
            if (tx.contains(p)) continue;
            for (std::size_t q = 0; q < n; ++q) {
                if (q == p || tx.contains(q)) continue;
                if (tau(x.with(q)).contains(p) && tau(x.with(p)).contains(q)) {
                    return AntiExchangeWitness{x, p, q};
                }
            }
        }
    }
    return std::nullopt;
}

Violation check_consistency(const OperatorTable& v) {
    require_kind(v, OperatorKind::Violator, "check_consistency");
    for (Subset g : canonical_subsets(v.n())) {
        if (g.intersects(v(g))) return ConsistencyWitness{g};
    }
    return std::nullopt;
}

Violation check_locality(const OperatorTable& v) {
    require_kind(v, OperatorKind::Violator, "check_locality");
    const Subset h = v.full();
    for (Subset f : canonical_subsets(v.n())) {
        for (Subset g : between(f, h - v(f))) {
            if (v(g) != v(f)) return LocalityWitness{f, g};
        }
    }
    return std::nullopt;
}

Violation check_monotonicity(const OperatorTable& v) {
    require_kind(v, OperatorKind::Violator, "check_monotonicity");
    for (Subset f : canonical_subsets(v.n())) {
        for (Subset g : canonical_supersets_of(f, v.n())) {
            if (v(g) != v(f)) continue;
            for (Subset e : between(f, g)) {
                if (v(e) != v(f)) return MonotonicityWitness{f, e, g};
            }
        }
    }
    return std::nullopt;
}

Violation check_axiom(Axiom a, const OperatorTable& op) {
    const OperatorTable form = as_kind(op, axiom_kind(a));
    switch (a) {
        case Axiom::C1: return check_c1(form);
        case Axiom::C2: return check_c2(form);
        case Axiom::C3: return check_c3(form);
        case Axiom::C22: return check_c22(form);
        case Axiom::Convexity: return check_convexity(form);
        case Axiom::AntiExchange: return check_anti_exchange(form);
        case Axiom::Consistency: return check_consistency(form);
        case Axiom::Locality: return check_locality(form);
        case Axiom::Monotonicity: return check_monotonicity(form);
    }
    return std::nullopt;
}

std::string AxiomReport::signature() const {
    std::string out;
    auto add = [&](bool flag, const char* name) {
        if (!flag) return;
        if (!out.empty()) out += '+';
        out += name;
    };
    add(closure_space, "closure");
    add(violator_space, "violator");
    add(convex_space, "convex");
    add(convex_geometry, "geometry");
    add(uniquely_generated, "unique");
    return out.empty() ? "none" : out;
}

AxiomReport classify(const OperatorTable& op) {
    const OperatorTable tau = as_tau(op);
    const OperatorTable v = as_violator(op);

    AxiomReport report;
    report.kind = op.kind();
    for (Axiom a : kAllAxioms) {
        const OperatorTable& form = axiom_kind(a) == OperatorKind::Tau ? tau : v;
        Violation w = check_axiom(a, form);
        report.flags[a] = !w.has_value();
        if (w) report.witnesses.emplace(a, std::move(*w));
    }
    const auto& f = report.flags;
    report.closure_space = f.at(Axiom::C1) && f.at(Axiom::C2) && f.at(Axiom::C3);
    report.violator_space = op.kind() == OperatorKind::Tau ? f.at(Axiom::C1) && f.at(Axiom::C22)
                                                           : f.at(Axiom::Consistency) && f.at(Axiom::Locality);
    report.convex_space = f.at(Axiom::C1) && f.at(Axiom::Convexity);
    report.convex_geometry = report.closure_space && f.at(Axiom::AntiExchange);
    report.uniquely_generated = uniquely_generated(tau);
    return report;
}

bool is_closure_space(const OperatorTable& tau) {
    return !check_c1(tau) && !check_c2(tau) && !check_c3(tau);
}

bool is_violator_space(const OperatorTable& tau) { return !check_c1(tau) && !check_c22(tau); }

bool is_convex_space(const OperatorTable& tau) { return !check_c1(tau) && !check_convexity(tau); }

}  // namespace vspace
