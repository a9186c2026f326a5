#include "vspace/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "vspace/axioms.hpp"
#include "vspace/duality.hpp"
#include "vspace/enumeration.hpp"
#include "vspace/error.hpp"
#include "vspace/fixtures.hpp"
#include "vspace/generators.hpp"
#include "vspace/hypercube.hpp"
#include "vspace/io.hpp"
#include "vspace/miniball.hpp"

namespace vspace {
namespace {

using nlohmann::ordered_json;

struct Options {
    std::string format = "human";
    bool quiet = false;

    std::string path;
    std::string output;
    std::string axioms;
    std::string set;
    std::string definition;
    bool within = false;
    bool materialize = false;

    int n = -1;
    std::string theorem;
    bool census = false;
    bool list = false;
    std::uint64_t seed = 1;
    std::size_t samples = 0;

    std::string fixture;
};

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int check();
    int bases();
    int extreme();
    int partition();
    int from_partition();
    int enumerate();
    int miniball();
    int examples();

private:
    bool structured() const { return opt_.format == "structured"; }

    // Human text goes through here so --quiet can drop it.
    std::ostream& human() {
        static std::ostringstream sink;
        sink.str("");
        return opt_.quiet ? sink : out_;
    }

    void emit(const ordered_json& doc) {
        if (!opt_.quiet) out_ << doc.dump(2) << '\n';
    }

    void write_output(const std::string& text) {
        if (opt_.output.empty() || opt_.output == "-") {
            if (!opt_.quiet) out_ << text;
            return;
        }
        std::ofstream file(opt_.output, std::ios::binary);
        if (!file) throw ParseError("cannot write \"" + opt_.output + "\"");
        file << text;
    }

    std::string set_list(const GroundSet& g, const std::vector<Subset>& sets) const {
        std::string s;
        for (Subset x : sets) {
            if (!s.empty()) s += ", ";
            s += g.format(x);
        }
        return s.empty() ? "(none)" : s;
    }

    ordered_json json_sets(const GroundSet& g, const std::vector<Subset>& sets) const {
        ordered_json arr = ordered_json::array();
        for (Subset x : sets) arr.push_back(g.labels_of(x));
        return arr;
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

int Session::check() {
    const OperatorTable op = load_operator_file(opt_.path);
    std::vector<Axiom> requested;
    if (opt_.axioms.empty()) {
        requested = op.kind() == OperatorKind::Tau ? std::vector{Axiom::C1, Axiom::C22}
                                                   : std::vector{Axiom::Consistency, Axiom::Locality};
    } else {
        std::istringstream in(opt_.axioms);
        std::string name;
        while (std::getline(in, name, ',')) {
            auto a = parse_axiom(name);
            if (!a) throw ParseError("unknown axiom \"" + name + "\"");
            requested.push_back(*a);
        }
    }

    const AxiomReport report = classify(op);
    bool pass = true;
    for (Axiom a : requested) pass = pass && report.passes(a);

    if (structured()) {
        ordered_json doc = to_json(report, op);
        ordered_json req = ordered_json::array();
        for (Axiom a : requested) req.push_back(std::string(to_string(a)));
        doc["requested"] = req;
        doc["pass"] = pass;
        emit(doc);
    } else {
        auto& o = human();
        o << "ground " << op.ground().format(op.full()) << ", kind " << to_string(op.kind()) << '\n';
        for (const auto& [axiom, ok] : report.flags) {
            o << "  " << to_string(axiom) << ": " << (ok ? "pass" : "FAIL");
            if (!ok) o << "  " << describe(report.witnesses.at(axiom), op);
            o << '\n';
        }
        o << "classes: closure_space=" << report.closure_space << " violator_space=" << report.violator_space
          << " convex_space=" << report.convex_space << " convex_geometry=" << report.convex_geometry
          << " uniquely_generated=" << report.uniquely_generated << '\n';
        std::string names;
        for (Axiom a : requested) names += (names.empty() ? "" : ",") + std::string(to_string(a));
        o << (pass ? "PASS" : "FAIL") << " (" << names << ")\n";
    }
    return pass ? kExitPass : kExitViolation;
}

int Session::bases() {
    const OperatorTable tau = as_tau(load_operator_file(opt_.path));
    const Subset x = tau.ground().parse_list(opt_.set);
    const auto scope = opt_.within ? GeneratorScope::WithinTarget : GeneratorScope::Anywhere;
    const BasisFamily family = generators_of(tau, x, scope);
    const GroundSet& g = tau.ground();
    if (structured()) {
        ordered_json doc;
        doc["set"] = g.labels_of(x);
        doc["closure"] = g.labels_of(family.closure_value);
        doc["within"] = opt_.within;
        doc["generators"] = json_sets(g, family.generators);
        doc["bases"] = json_sets(g, family.bases);
        emit(doc);
    } else {
        auto& o = human();
        o << "X = " << g.format(x) << ", τ(X) = " << g.format(family.closure_value) << '\n';
        o << "generators: " << set_list(g, family.generators) << '\n';
        o << "bases: " << set_list(g, family.bases) << '\n';
    }
    return kExitPass;
}

int Session::extreme() {
    const OperatorTable tau = as_tau(load_operator_file(opt_.path));
    const Subset a = tau.ground().parse_list(opt_.set);
    const ExtremeSets sets = extreme_points(tau, a);
    const GroundSet& g = tau.ground();
    const bool want_ex = opt_.definition.empty() || opt_.definition == "ex";
    const bool want_EX = opt_.definition.empty() || opt_.definition == "EX";
    if (structured()) {
        ordered_json doc;
        doc["set"] = g.labels_of(a);
        if (want_ex) doc["ex"] = g.labels_of(sets.ex);
        if (want_EX) doc["EX"] = g.labels_of(sets.EX);
        emit(doc);
    } else {
        auto& o = human();
        if (want_ex) o << "ex(" << g.format(a) << ") = " << g.format(sets.ex) << '\n';
        if (want_EX) o << "EX(" << g.format(a) << ") = " << g.format(sets.EX) << '\n';
    }
    return kExitPass;
}

int Session::partition() {
    const OperatorTable tau = as_tau(load_operator_file(opt_.path));
    const GroundSet& g = tau.ground();
    bool all_intervals = true;
    ordered_json classes = ordered_json::array();
    auto& o = human();
    for (const auto& cls : equivalence_classes(tau)) {
        Subset lower = cls.members.front();
        Subset upper;
        for (Subset m : cls.members) {
            lower = lower & m;
            upper = upper | m;
        }
        const Interval iv{lower, upper};
        const bool is_interval = cls.members.size() == iv.cardinality();
        all_intervals = all_intervals && is_interval;
        if (structured()) {
            ordered_json entry;
            entry["value"] = g.labels_of(cls.value);
            entry["members"] = json_sets(g, cls.members);
            entry["interval"] = is_interval;
            if (is_interval) entry["bounds"] = {g.labels_of(lower), g.labels_of(upper)};
            classes.push_back(entry);
        } else {
            o << "class τ = " << g.format(cls.value) << ": " << set_list(g, cls.members);
            if (is_interval) {
                o << "  interval [" << g.format(lower) << ", " << g.format(upper) << "]\n";
            } else {
                o << "  NOT an interval\n";
            }
        }
    }
    if (structured()) {
        ordered_json doc;
        doc["classes"] = classes;
        doc["hypercube_partition"] = all_intervals;
        emit(doc);
    } else {
        o << (all_intervals ? "hypercube partition: yes" : "hypercube partition: no") << '\n';
    }
    return all_intervals ? kExitPass : kExitViolation;
}

int Session::from_partition() {
    const RawPartition raw = read_partition_text(read_file(opt_.path));
    if (auto problem = IntervalPartition::diagnose(raw.ground, raw.intervals)) {
        err_ << "invalid partition: " << *problem << '\n';
        return kExitViolation;
    }
    const OperatorTable tau = operator_from_partition(IntervalPartition(raw.ground, raw.intervals));
    const AxiomReport report = classify(tau);
    if (!report.violator_space || !report.uniquely_generated) {
        err_ << "constructed operator is not a uniquely generated violator space\n";
        return kExitViolation;
    }
    write_output(save_operator(tau));
    return kExitPass;
}

int Session::enumerate() {
    if (opt_.list) {
        for (const auto& t : registered_theorems()) {
            human() << t.id << "  [" << t.universe << ", "
                    << (t.expectation == Expectation::Holds ? "holds" : "refuted") << "]  " << t.statement << '\n';
        }
        return kExitPass;
    }
    if (opt_.n < 0) throw ParseError("enumerate needs -n");
    if (opt_.census == !opt_.theorem.empty()) throw ParseError("enumerate needs exactly one of --theorem, --census");
    const GroundSet ground = GroundSet::numbered(static_cast<std::size_t>(opt_.n));

    SweepReport report;
    if (opt_.census) {
        report = run_census(ground);
    } else {
        std::optional<Sampling> sampling;
        if (opt_.samples > 0) sampling = Sampling{opt_.seed, opt_.samples};
        report = run_theorem_sweep(ground, opt_.theorem, sampling);
    }

    if (structured()) {
        emit(to_json(report));
    } else {
        auto& o = human();
        if (!opt_.census) {
            o << "theorem " << report.theorem << ": " << find_theorem(report.theorem)->statement << '\n';
        }
        o << report.violations.size() << " violations / " << report.universe_size << " " << report.universe
          << " (n=" << report.ground_size << ")\n";
        for (const auto& [signature, count] : report.counts) o << "  " << signature << ": " << count << '\n';
        const std::size_t shown = std::min<std::size_t>(report.violations.size(), 3);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& v = report.violations[i];
            o << "counterexample " << i + 1 << ":\n" << save_operator(v.table) << "  " << describe(v.witness, v.table)
              << '\n';
        }
        if (!opt_.census) {
            o << (report.confirmed() ? "confirmed" : "NOT confirmed") << " ("
              << (report.expectation == Expectation::Holds ? "theorem" : "non-implication") << ")\n";
        }
    }
    return report.confirmed() ? kExitPass : kExitViolation;
}

int Session::miniball() {
    const PointConfig config = load_points_file(opt_.path);
    if (opt_.materialize) {
        write_output(save_operator(materialize(config)));
        return kExitPass;
    }
    const auto ball = smallest_enclosing_ball(config, Subset::full(config.size()));
    std::vector<std::string> center;
    for (const auto& c : ball->center) center.push_back(format_rational(c));
    if (structured()) {
        ordered_json doc;
        doc["center"] = center;
        doc["radius_sq"] = format_rational(ball->radius_sq);
        emit(doc);
    } else {
        auto& o = human();
        o << "center (";
        for (std::size_t i = 0; i < center.size(); ++i) o << (i ? ", " : "") << center[i];
        o << "), radius^2 " << format_rational(ball->radius_sq) << '\n';
    }
    return kExitPass;
}

int Session::examples() {
    if (opt_.fixture.empty()) {
        for (FixtureId id : all_fixtures()) human() << to_string(id) << '\n';
        return kExitPass;
    }
    const auto id = parse_fixture_id(opt_.fixture);
    if (!id) throw ParseError("unknown example id \"" + opt_.fixture + "\"");
    write_output(save_operator(canned_example(*id)));
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Verification toolkit for finite violator, closure and convex spaces", "vspace"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
    app.add_flag("--quiet", opt.quiet, "Suppress report output; exit code only");

    auto* check = app.add_subcommand("check", "Check axioms of an operator file");
    check->add_option("path", opt.path, "Operator file")->required();
    check->add_option("--axioms", opt.axioms, "Comma-separated axioms to require (default: violator-space axioms)");

    auto* bases = app.add_subcommand("bases", "List generators and bases of a set");
    bases->add_option("path", opt.path, "Operator file")->required();
    bases->add_option("--set", opt.set, "Comma-separated element labels")->required();
    bases->add_flag("--within", opt.within, "Only generators contained in the set");

    auto* extreme = app.add_subcommand("extreme", "Extreme points ex / EX of a set");
    extreme->add_option("path", opt.path, "Operator file")->required();
    extreme->add_option("--set", opt.set, "Comma-separated element labels")->required();
    extreme->add_option("--def", opt.definition, "ex or EX (default: both)")->check(CLI::IsMember({"ex", "EX"}));

    auto* partition = app.add_subcommand("partition", "Equivalence classes and the interval test");
    partition->add_option("path", opt.path, "Operator file")->required();

    auto* from_partition = app.add_subcommand("from-partition", "Build tau from an interval partition file");
    from_partition->add_option("path", opt.path, "Partition file")->required();
    from_partition->add_option("-o,--output", opt.output, "Output operator file (default: stdout)");

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive theorem sweeps and census");
    enumerate->add_option("-n", opt.n, "Ground set size");
    enumerate->add_option("--theorem", opt.theorem, "Registered theorem id");
    enumerate->add_flag("--census", opt.census, "Class census over all C1 tables");
    enumerate->add_flag("--list", opt.list, "List registered theorem ids");
    enumerate->add_option("--seed", opt.seed, "Sampling seed (n > 3)");
    enumerate->add_option("--samples", opt.samples, "Sample count (n > 3)");

    auto* miniball = app.add_subcommand("miniball", "Smallest enclosing ball violator oracle");
    miniball->add_option("path", opt.path, "Point file")->required();
    miniball->add_flag("--materialize", opt.materialize, "Write the violator table");
    miniball->add_option("-o,--output", opt.output, "Output operator file (default: stdout)");

    auto* examples = app.add_subcommand("examples", "Write a canned example table");
    examples->add_option("--id", opt.fixture, "ex1, ex1_literal, ex2_2, exms, ex5_1");
    examples->add_option("-o,--output", opt.output, "Output operator file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Session session(opt, out, err);
    try {
        if (*check) return session.check();
        if (*bases) return session.bases();
        if (*extreme) return session.extreme();
        if (*partition) return session.partition();
        if (*from_partition) return session.from_partition();
        if (*enumerate) return session.enumerate();
        if (*miniball) return session.miniball();
        if (*examples) return session.examples();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace vspace
