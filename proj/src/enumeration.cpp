#include "vspace/enumeration.hpp"

#include <random>

#include "vspace/duality.hpp"
#include "vspace/error.hpp"
#include "vspace/generators.hpp"
#include "vspace/hypercube.hpp"

namespace vspace {
namespace {

enum class Universe {
    C1Tables,
    ClosureSpaces,
    ConvexSpaces,
    ViolatorSpaces,
    UniqueViolatorSpaces,
    UniqueConvexWithMaxGenerators,
    IntervalPartitions,
};

std::string universe_name(Universe u) {
    switch (u) {
        case Universe::C1Tables: return "C1 tables";
        case Universe::ClosureSpaces: return "closure spaces";
        case Universe::ConvexSpaces: return "convex spaces";
        case Universe::ViolatorSpaces: return "violator spaces";
        case Universe::UniqueViolatorSpaces: return "uniquely generated violator spaces";
        case Universe::UniqueConvexWithMaxGenerators:
            return "uniquely generated convex spaces with unique maximal generators";
        case Universe::IntervalPartitions: return "interval partitions";
    }
    return "?";
}

bool has_all_max_generators(const OperatorTable& tau) {
    for (Subset x : canonical_subsets(tau.n())) {
        if (!max_generator(tau, x)) return false;
    }
    return true;
}

bool in_universe(Universe u, const OperatorTable& tau) {
    switch (u) {
        case Universe::C1Tables: return !check_c1(tau);
        case Universe::ClosureSpaces: return is_closure_space(tau);
        case Universe::ConvexSpaces: return is_convex_space(tau);
        case Universe::ViolatorSpaces: return is_violator_space(tau);
        case Universe::UniqueViolatorSpaces: return is_violator_space(tau) && uniquely_generated(tau);
        case Universe::UniqueConvexWithMaxGenerators:
            return is_convex_space(tau) && uniquely_generated(tau) && has_all_max_generators(tau);
        case Universe::IntervalPartitions: return false;
    }
    return false;
}

// Class partition equals [unique basis, top] for every class, where top is
// tau(A) or the maximal generator.
Violation check_class_intervals(const OperatorTable& tau, bool use_max_generator, const std::string& id) {
    for (Subset a : canonical_subsets(tau.n())) {
        const auto family = generators_of(tau, a, GeneratorScope::Anywhere);
        Subset top = tau(a);
        if (use_max_generator) {
            auto g = max_generator(tau, a);
            if (!g) return TheoremWitness{id, a, {}, {}};
            top = *g;
        }
        if (family.bases.size() != 1) return TheoremWitness{id, a, {}, {}};
        const Interval expected{family.bases.front(), top};
        if (!expected.lower.subset_of(expected.upper) || family.generators.size() != expected.cardinality()) {
            return TheoremWitness{id, a, {}, {}};
        }
        for (Subset m : family.generators) {
            if (!expected.contains(m)) return TheoremWitness{id, a, {}, {}};
        }
    }
    auto partition = classes_as_intervals(tau);
    if (auto* w = std::get_if<NonIntervalWitness>(&partition)) return *w;
    return std::nullopt;
}

Violation first_of(std::initializer_list<std::function<Violation()>> checks) {
    for (const auto& check : checks) {
        if (auto w = check()) return w;
    }
    return std::nullopt;
}

struct TheoremEntry {
    TheoremInfo info;
    Universe universe;
    // Receives the tau-form of a universe member.
    std::function<Violation(const OperatorTable&)> check;
};

const std::vector<TheoremEntry>& registry() {
    static const std::vector<TheoremEntry> entries = [] {
        std::vector<TheoremEntry> s;
        auto add = [&](std::string id, std::string statement, Universe u, Expectation e,
                       std::function<Violation(const OperatorTable&)> check) {
            s.push_back({TheoremInfo{std::move(id), std::move(statement), universe_name(u), e}, u, std::move(check)});
        };
        const auto holds = Expectation::Holds;

        add("c2c3-implies-c22", "C2 and C3 imply C22", Universe::C1Tables, holds, [](const OperatorTable& t) {
            return check_c2(t) || check_c3(t) ? Violation{} : check_c22(t);
        });
        add("c1c22-implies-c3", "C1 and C22 imply C3", Universe::C1Tables, holds, [](const OperatorTable& t) {
            return check_c22(t) ? Violation{} : check_c3(t);
        });
        add("convexity-c3-implies-c22", "CONVEXITY and C3 imply C22", Universe::C1Tables, holds,
            [](const OperatorTable& t) { return check_convexity(t) || check_c3(t) ? Violation{} : check_c22(t); });
        add("c1c22-implies-convexity", "C1 and C22 imply CONVEXITY", Universe::C1Tables, holds,
            [](const OperatorTable& t) { return check_c22(t) ? Violation{} : check_convexity(t); });
        add("c1-convexity-implies-c22", "C1 and CONVEXITY do not imply C22 (non-implication)", Universe::C1Tables,
            Expectation::Refuted,
            [](const OperatorTable& t) { return check_convexity(t) ? Violation{} : check_c22(t); });
        add("violator-duality", "CONSISTENCY and LOCALITY of E - tau iff C1 and C22 of tau", Universe::C1Tables, holds,
            [](const OperatorTable& t) -> Violation {
                const auto v = violator_from_tau(t);
                const bool v_form = !check_consistency(v) && !check_locality(v);
                if (v_form == is_violator_space(t)) return std::nullopt;
                return first_of({[&] { return check_locality(v); }, [&] { return check_c22(t); }});
            });
        add("cltov", "a closure space gives a violator space via V = E - tau", Universe::ClosureSpaces, holds,
            [](const OperatorTable& t) {
                const auto v = violator_from_tau(t);
                return first_of({[&] { return check_consistency(v); }, [&] { return check_locality(v); }});
            });
        add("vtocl", "a violator space gives C1 and C3 via tau = H - V", Universe::ViolatorSpaces, holds,
            [](const OperatorTable& t) {
                const auto back = tau_from_violator(violator_from_tau(t));
                return first_of({[&] { return check_c1(back); }, [&] { return check_c3(back); }});
            });
        add("monotonicity", "a violator space satisfies MONOTONICITY in V-form", Universe::ViolatorSpaces, holds,
            [](const OperatorTable& t) { return check_monotonicity(violator_from_tau(t)); });
        add("u1", "uniquely generated iff each basis lies in all generators", Universe::C1Tables, holds,
            [](const OperatorTable& t) { return check_u1(t); });
        add("uq-intersection", "convex space: uniquely generated iff classes are intersection-closed",
            Universe::ConvexSpaces, holds, [](const OperatorTable& t) { return check_uq_intersection(t); });
        add("add-lemma", "violator space: x outside tau(A) iff tau(A) != tau(A + x)", Universe::ViolatorSpaces, holds,
            [](const OperatorTable& t) { return check_add_lemma(t); });
        add("uniquegen-iff-antiexchange", "violator space: uniquely generated iff anti-exchange",
            Universe::ViolatorSpaces, holds, [](const OperatorTable& t) -> Violation {
                auto two_bases = is_uniquely_generated(t);
                auto exchange = check_anti_exchange(t);
                if (two_bases.has_value() == exchange.has_value()) return std::nullopt;
                return two_bases ? two_bases : exchange;
            });
        add("uniquegen-implies-antiexchange-convex",
            "convex space: uniquely generated does not imply anti-exchange (non-implication)", Universe::ConvexSpaces,
            Expectation::Refuted, [](const OperatorTable& t) {
                return uniquely_generated(t) ? check_anti_exchange(t) : Violation{};
            });
        add("expoint", "ex = EX on violator spaces, ex <= EX on convex spaces", Universe::ConvexSpaces, holds,
            [](const OperatorTable& t) { return check_expoint(t); });
        add("expb", "ex(X) = intersection of generators inside X (violator), <= (convex)", Universe::ConvexSpaces,
            holds, [](const OperatorTable& t) { return check_extreme_in_generators(t); });
        add("krein-milman-ex", "violator space: uniquely generated iff tau(X) = tau(ex(X))",
            Universe::ViolatorSpaces, holds,
            [](const OperatorTable& t) { return check_krein_milman(t, ExtremeDefinition::NotInClosure); });
        add("krein-milman-EX", "convex space: uniquely generated iff tau(X) = tau(EX(X)) (converse fails at n = 3)",
            Universe::ConvexSpaces, holds,
            [](const OperatorTable& t) { return check_krein_milman(t, ExtremeDefinition::ChangesClosure); });
        add("krein-milman-EX-forward", "convex space: uniquely generated implies tau(X) = tau(EX(X))",
            Universe::ConvexSpaces, holds, [](const OperatorTable& t) -> Violation {
                if (!uniquely_generated(t)) return std::nullopt;
                return check_krein_milman(t, ExtremeDefinition::ChangesClosure);
            });
        add("union", "violator space: tau(X) = tau(Y) implies tau(X | Y) = tau(X)", Universe::ViolatorSpaces, holds,
            [](const OperatorTable& t) { return check_union_property(t); });
        add("union-convex", "convex space: union property can fail (non-implication)", Universe::ConvexSpaces,
            Expectation::Refuted, [](const OperatorTable& t) { return check_union_property(t); });
        add("class-lattice-closure", "uniquely generated violator space: classes closed under & and |",
            Universe::UniqueViolatorSpaces, holds,
            [](const OperatorTable& t) { return check_class_lattice_closure(t); });
        add("hp", "uniquely generated violator space: classes are the intervals [B_A, tau(A)]",
            Universe::UniqueViolatorSpaces, holds, [](const OperatorTable& t) -> Violation {
                if (auto w = check_class_intervals(t, false, "hp")) return w;
                const auto classes = classes_as_intervals(t);
                if (operator_from_partition(std::get<IntervalPartition>(classes)) != t) return TheoremWitness{"hp", {}, {}, {}};
                return std::nullopt;
            });
        add("hp-convex",
            "uniquely generated convex space with unique maximal generators: classes are [B_A, G_Max(A)]",
            Universe::UniqueConvexWithMaxGenerators, holds,
            [](const OperatorTable& t) { return check_class_intervals(t, true, "hp-convex"); });
        add("partition-theorem",
            "every interval partition is the class partition of a uniquely generated violator space",
            Universe::IntervalPartitions, holds, [](const OperatorTable& t) -> Violation {
                return first_of({[&] { return check_c1(t); }, [&] { return check_c22(t); },
                                 [&] { return is_uniquely_generated(t); }});
            });
        return s;
    }();
    return entries;
}

const TheoremEntry& lookup(const std::string& id) {
    for (const auto& entry : registry()) {
        if (entry.info.id == id) return entry;
    }
    throw Error("unknown theorem id \"" + id + "\"");
}

void require_exhaustive(const GroundSet& ground) {
    if (ground.size() > kMaxExhaustiveSize) {
        throw SizeError("exhaustive enumeration supports n <= " + std::to_string(kMaxExhaustiveSize) + ", got n = " +
                        std::to_string(ground.size()));
    }
}

}  // namespace

std::uint64_t c1_table_count(std::size_t n) {
    std::uint64_t exponent = 0;
    for (Subset x : canonical_subsets(n)) exponent += n - static_cast<std::size_t>(x.size());
    if (exponent >= 64) throw SizeError("C1 table count overflows 64 bits");
    return std::uint64_t{1} << exponent;
}

void for_each_c1_table(const GroundSet& ground, const std::function<void(const OperatorTable&)>& visit) {
    require_exhaustive(ground);
    const std::size_t count = ground.subset_count();
    const Subset e = ground.full();
    std::vector<Subset> images(count);
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == count) {
            visit(OperatorTable(ground, OperatorKind::Tau, images));
            return;
        }
        const Subset x{static_cast<std::uint32_t>(index)};
        for (Subset extra : canonical_subsets_of(e - x)) {
            images[index] = x | extra;
            self(self, index + 1);
        }
    };
    recurse(recurse, 0);
}

std::vector<OperatorTable> enumerate_c1_tables(const GroundSet& ground) {
    std::vector<OperatorTable> out;
    for_each_c1_table(ground, [&](const OperatorTable& t) { out.push_back(t); });
    return out;
}

std::vector<OperatorTable> random_tables(const GroundSet& ground, std::uint64_t seed, std::size_t count,
                                         const std::vector<Axiom>& constraints, std::size_t attempt_budget) {
    std::mt19937_64 engine(seed);
    const Subset e = ground.full();
    bool extensive = false;
    for (Axiom a : constraints) extensive = extensive || a == Axiom::C1 || a == Axiom::Consistency;

    auto draw = [&] {
        std::vector<Subset> images(ground.subset_count());
        for (std::size_t i = 0; i < images.size(); ++i) {
            // Raw engine output keeps the stream identical across standard libraries.
            const Subset bits = Subset{static_cast<std::uint32_t>(engine())} & e;
            const Subset x{static_cast<std::uint32_t>(i)};
            images[i] = extensive ? (x | bits) : bits;
        }
        return OperatorTable(ground, OperatorKind::Tau, std::move(images));
    };
    auto accepted = [&](const OperatorTable& t) {
        for (Axiom a : constraints) {
            if (check_axiom(a, t)) return false;
        }
        return true;
    };

    std::vector<OperatorTable> out;
    out.reserve(count);
    while (out.size() < count) {
        std::size_t attempts = 0;
        for (;;) {
            if (attempts++ == attempt_budget) {
                throw SizeError("random_tables: rejection budget of " + std::to_string(attempt_budget) +
                                " draws exhausted");
            }
            auto t = draw();
            if (accepted(t)) {
                out.push_back(std::move(t));
                break;
            }
        }
    }
    return out;
}

bool SweepReport::confirmed() const {
    return expectation == Expectation::Holds ? violations.empty() : !violations.empty();
}

const std::vector<TheoremInfo>& registered_theorems() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& entry : registry()) out.push_back(entry.info);
        return out;
    }();
    return infos;
}

std::optional<TheoremInfo> find_theorem(const std::string& id) {
    for (const auto& info : registered_theorems()) {
        if (info.id == id) return info;
    }
    return std::nullopt;
}

SweepReport run_theorem_sweep(const GroundSet& ground, const std::string& theorem_id,
                              std::optional<Sampling> sampling) {
    const TheoremEntry& entry = lookup(theorem_id);
    SweepReport report;
    report.theorem = entry.info.id;
    report.universe = entry.info.universe;
    report.expectation = entry.info.expectation;
    report.ground_size = ground.size();

    auto consider = [&](const OperatorTable& tau) {
        ++report.universe_size;
        ++report.counts[classify(tau).signature()];
        if (auto w = entry.check(tau)) report.violations.push_back({entry.info.id, tau, std::move(*w)});
    };

    if (entry.universe == Universe::IntervalPartitions) {
        require_exhaustive(ground);
        for_each_interval_partition(ground, [&](const IntervalPartition& p) {
            const OperatorTable tau = operator_from_partition(p);
            ++report.universe_size;
            ++report.counts[classify(tau).signature()];
            Violation w = entry.check(tau);
            if (!w) {
                auto classes = classes_as_intervals(tau);
                if (auto* bad = std::get_if<NonIntervalWitness>(&classes)) {
                    w = *bad;
                } else if (std::get<IntervalPartition>(classes).canonical() != p.canonical()) {
                    w = TheoremWitness{"partition-theorem", {}, {}, {}};
                }
            }
            if (w) report.violations.push_back({entry.info.id, tau, std::move(*w)});
        });
        return report;
    }

    if (ground.size() <= kMaxExhaustiveSize && !sampling) {
        for_each_c1_table(ground, [&](const OperatorTable& tau) {
            if (in_universe(entry.universe, tau)) consider(tau);
        });
    } else {
        if (!sampling) {
            throw SizeError("n = " + std::to_string(ground.size()) + " needs sampling; exhaustive sweeps stop at n = " +
                            std::to_string(kMaxExhaustiveSize));
        }
        report.universe += " (sampled, seed " + std::to_string(sampling->seed) + ")";
        for (const auto& tau : random_tables(ground, sampling->seed, sampling->count, {Axiom::C1})) {
            if (in_universe(entry.universe, tau)) consider(tau);
        }
    }
    return report;
}

SweepReport run_census(const GroundSet& ground) {
    SweepReport report;
    report.theorem = "census";
    report.universe = universe_name(Universe::C1Tables);
    report.ground_size = ground.size();
    for_each_c1_table(ground, [&](const OperatorTable& tau) {
        ++report.universe_size;
        ++report.counts[classify(tau).signature()];
    });
    return report;
}

Census census_counts(std::size_t n) {
    Census c;
    for_each_c1_table(GroundSet::numbered(n), [&](const OperatorTable& tau) {
        const auto r = classify(tau);
        ++c.c1_tables;
        c.convex_spaces += r.convex_space;
        c.violator_spaces += r.violator_space;
        c.closure_spaces += r.closure_space;
        c.convex_geometries += r.convex_geometry;
        c.uniquely_generated_violator_spaces += r.violator_space && r.uniquely_generated;
    });
    return c;
}

}  // namespace vspace
