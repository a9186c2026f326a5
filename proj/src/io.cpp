#include "vspace/io.hpp"

#include <fstream>
#include <sstream>

#include "vspace/error.hpp"

namespace vspace {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed syntax: ") + e.what());
    }
}

const json& field(const json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return obj.at(name);
}

std::vector<std::string> label_list(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw ParseError(what + " must be an array of labels");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError(what + " must contain only string labels");
        out.push_back(item.get<std::string>());
    }
    return out;
}

GroundSet read_ground(const json& doc) { return GroundSet(label_list(field(doc, "ground"), "\"ground\"")); }

Subset read_subset(const GroundSet& ground, const json& arr, const std::string& what) {
    const auto labels = label_list(arr, what);
    return ground.subset_of(labels);
}

json labels_json(const GroundSet& ground, Subset s) { return json(ground.labels_of(s)); }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OperatorTable load_operator_text(const std::string& text) {
    const json doc = parse_json(text);
    GroundSet ground = read_ground(doc);

    const std::string kind_name = field(doc, "kind").is_string() ? doc.at("kind").get<std::string>() : "";
    OperatorKind kind;
    if (kind_name == "tau") {
        kind = OperatorKind::Tau;
    } else if (kind_name == "violator") {
        kind = OperatorKind::Violator;
    } else {
        throw ParseError("\"kind\" must be \"tau\" or \"violator\"");
    }

    std::string default_rule = kind == OperatorKind::Tau ? "identity" : "complement";
    if (doc.contains("default")) {
        if (!doc.at("default").is_string()) throw ParseError("\"default\" must be a string");
        default_rule = doc.at("default").get<std::string>();
    }
    if (default_rule != "identity" && default_rule != "complement" && default_rule != "none") {
        throw ParseError("unknown default rule \"" + default_rule + "\"");
    }

    std::vector<std::optional<Subset>> entries(ground.subset_count());
    if (doc.contains("map")) {
        const json& map = doc.at("map");
        if (!map.is_array()) throw ParseError("\"map\" must be an array");
        for (const auto& entry : map) {
            const Subset set = read_subset(ground, field(entry, "set"), "\"set\"");
            const Subset image = read_subset(ground, field(entry, "image"), "\"image\"");
            if (entries[set.index()]) throw ParseError("duplicate subset entry " + ground.format(set));
            entries[set.index()] = image;
        }
    }

    const Subset e = ground.full();
    std::vector<Subset> images(entries.size());
    std::size_t missing = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Subset x{static_cast<std::uint32_t>(i)};
        if (entries[i]) {
            images[i] = *entries[i];
        } else if (default_rule == "identity") {
            images[i] = x;
        } else if (default_rule == "complement") {
            images[i] = e - x;
        } else {
            ++missing;
        }
    }
    if (missing > 0) {
        throw ParseError("missing default with incomplete map: " + std::to_string(entries.size() - missing) + " of " +
                         std::to_string(entries.size()) + " entries given");
    }
    return OperatorTable(std::move(ground), kind, std::move(images));
}

OperatorTable load_operator(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_operator_text(buf.str());
}

OperatorTable load_operator_file(const std::string& path) { return load_operator_text(read_file(path)); }

std::string save_operator(const OperatorTable& op) {
    const GroundSet& g = op.ground();
    const bool tau = op.kind() == OperatorKind::Tau;
    const Subset e = op.full();
    std::ostringstream out;
    out << "{\n";
    out << "  \"ground\": " << json(g.labels()).dump() << ",\n";
    out << "  \"kind\": " << json(std::string(to_string(op.kind()))).dump() << ",\n";
    out << "  \"default\": " << (tau ? "\"identity\"" : "\"complement\"") << ",\n";
    out << "  \"map\": [";
    bool first = true;
    for (Subset x : canonical_subsets(op.n())) {
        const Subset natural = tau ? x : e - x;
        if (op(x) == natural) continue;
        out << (first ? "\n" : ",\n");
        out << "    {\"set\": " << labels_json(g, x).dump() << ", \"image\": " << labels_json(g, op(x)).dump() << "}";
        first = false;
    }
    out << (first ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

RawPartition read_partition_text(const std::string& text) {
    const json doc = parse_json(text);
    RawPartition raw{read_ground(doc), {}};
    const json& intervals = field(doc, "intervals");
    if (!intervals.is_array()) throw ParseError("\"intervals\" must be an array");
    for (const auto& iv : intervals) {
        raw.intervals.push_back({read_subset(raw.ground, field(iv, "lower"), "\"lower\""),
                                 read_subset(raw.ground, field(iv, "upper"), "\"upper\"")});
    }
    return raw;
}

IntervalPartition load_partition_text(const std::string& text) {
    auto raw = read_partition_text(text);
    return IntervalPartition(std::move(raw.ground), std::move(raw.intervals));
}

IntervalPartition load_partition_file(const std::string& path) { return load_partition_text(read_file(path)); }

std::string save_partition(const IntervalPartition& p) {
    const GroundSet& g = p.ground();
    std::ostringstream out;
    out << "{\n  \"ground\": " << json(g.labels()).dump() << ",\n  \"intervals\": [";
    bool first = true;
    for (const Interval& iv : p.intervals()) {
        out << (first ? "\n" : ",\n");
        out << "    {\"lower\": " << labels_json(g, iv.lower).dump() << ", \"upper\": " << labels_json(g, iv.upper).dump()
            << "}";
        first = false;
    }
    out << (first ? "]\n" : "\n  ]\n") << "}\n";
    return out.str();
}

PointConfig load_points_text(const std::string& text) {
    const json doc = parse_json(text);
    const json& dim = field(doc, "dim");
    if (!dim.is_number_integer()) throw ParseError("\"dim\" must be an integer");
    const json& pts = field(doc, "points");
    if (!pts.is_array()) throw ParseError("\"points\" must be an array");
    std::vector<Point> points;
    for (const auto& p : pts) {
        Point point;
        const json& label = field(p, "label");
        if (!label.is_string()) throw ParseError("point labels must be strings");
        point.label = label.get<std::string>();
        const json& coords = field(p, "coords");
        if (!coords.is_array()) throw ParseError("\"coords\" must be an array");
        for (const auto& c : coords) {
            if (c.is_string()) {
                point.coords.push_back(parse_rational(c.get<std::string>()));
            } else if (c.is_number_integer()) {
                point.coords.emplace_back(c.get<long long>());
            } else {
                throw ParseError("coordinates must be \"p/q\" strings");
            }
        }
        points.push_back(std::move(point));
    }
    const auto d = dim.get<long long>();
    if (d < 0) throw ParseError("\"dim\" must be 1 or 2");
    return PointConfig(static_cast<std::size_t>(d), std::move(points));
}

PointConfig load_points_file(const std::string& path) { return load_points_text(read_file(path)); }

ordered_json witness_to_json(const Witness& w, const OperatorTable& op) {
    const GroundSet& g = op.ground();
    auto set = [&](Subset s) { return ordered_json(g.labels_of(s)); };
    ordered_json out;
    out["type"] = witness_tag(w);
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, C1Witness> || std::is_same_v<T, C3Witness>) {
                out["X"] = set(c.x);
            } else if constexpr (std::is_same_v<T, C2Witness>) {
                out["X"] = set(c.x);
                out["Y"] = set(c.y);
            } else if constexpr (std::is_same_v<T, C22Witness> || std::is_same_v<T, LocalityWitness>) {
                out["F"] = set(c.f);
                out["G"] = set(c.g);
            } else if constexpr (std::is_same_v<T, ConvexityWitness>) {
                out["X"] = set(c.x);
                out["Y"] = set(c.y);
                out["Z"] = set(c.z);
            } else if constexpr (std::is_same_v<T, AntiExchangeWitness>) {
                out["X"] = set(c.x);
                out["p"] = g.label(c.p);
                out["q"] = g.label(c.q);
            } else if constexpr (std::is_same_v<T, ConsistencyWitness>) {
                out["G"] = set(c.g);
            } else if constexpr (std::is_same_v<T, MonotonicityWitness>) {
                out["F"] = set(c.f);
                out["E"] = set(c.e);
                out["G"] = set(c.g);
            } else if constexpr (std::is_same_v<T, TwoBasesWitness>) {
                out["X"] = set(c.x);
                out["B1"] = set(c.b1);
                out["B2"] = set(c.b2);
            } else if constexpr (std::is_same_v<T, NonIntervalWitness>) {
                out["value"] = set(c.value);
            } else {
                out["theorem"] = c.theorem;
                out["X"] = set(c.x);
                out["Y"] = set(c.y);
                if (c.element) out["x"] = g.label(*c.element);
            }
        },
        w);
    out["text"] = describe(w, op);
    return out;
}

ordered_json to_json(const AxiomReport& report, const OperatorTable& op) {
    ordered_json out;
    out["kind"] = std::string(to_string(report.kind));
    out["ground"] = op.ground().labels();
    ordered_json axioms = ordered_json::object();
    for (const auto& [axiom, pass] : report.flags) {
        ordered_json entry;
        entry["pass"] = pass;
        if (auto it = report.witnesses.find(axiom); it != report.witnesses.end()) {
            entry["witness"] = witness_to_json(it->second, op);
        }
        axioms[std::string(to_string(axiom))] = entry;
    }
    out["axioms"] = axioms;
    out["classes"] = {{"closure_space", report.closure_space},
                      {"violator_space", report.violator_space},
                      {"convex_space", report.convex_space},
                      {"convex_geometry", report.convex_geometry},
                      {"uniquely_generated", report.uniquely_generated}};
    return out;
}

ordered_json to_json(const SweepReport& report) {
    ordered_json out;
    out["theorem"] = report.theorem;
    out["universe"] = report.universe;
    out["expectation"] = report.expectation == Expectation::Holds ? "holds" : "refuted";
    out["ground_size"] = report.ground_size;
    out["universe_size"] = report.universe_size;
    ordered_json counts = ordered_json::object();
    for (const auto& [signature, count] : report.counts) counts[signature] = count;
    out["counts"] = counts;
    out["violation_count"] = report.violations.size();
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json entry;
        entry["theorem"] = v.theorem;
        ordered_json table = ordered_json::array();
        for (Subset x : canonical_subsets(v.table.n())) {
            table.push_back({{"set", v.table.ground().labels_of(x)}, {"image", v.table.ground().labels_of(v.table(x))}});
        }
        entry["kind"] = std::string(to_string(v.table.kind()));
        entry["table"] = table;
        entry["witness"] = witness_to_json(v.witness, v.table);
        violations.push_back(entry);
    }
    out["violations"] = violations;
    out["confirmed"] = report.confirmed();
    return out;
}

}  // namespace vspace
