#include "vspace/ground_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vspace/error.hpp"

namespace vspace {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize) {
        throw SizeError("ground set has " + std::to_string(labels_.size()) + " elements; at most " +
                        std::to_string(kMaxGroundSize) + " are supported");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw ParseError("duplicate ground label \"" + l + "\"");
    }
}

GroundSet GroundSet::numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
    Subset s;
    for (const auto& l : labels) {
        auto i = index_of(l);
        if (!i) throw ParseError("unknown element label \"" + l + "\"");
        if (s.contains(*i)) throw ParseError("element label \"" + l + "\" listed twice");
        s = s.with(*i);
    }
    return s;
}

Subset GroundSet::parse_list(const std::string& comma_separated) const {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(comma_separated);
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t{}");
        auto e = item.find_last_not_of(" \t{}");
        if (b == std::string::npos) continue;
        parts.push_back(item.substr(b, e - b + 1));
    }
    return subset_of(parts);
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
    std::vector<std::string> out;
    for (auto i : s.elements()) out.push_back(labels_.at(i));
    return out;
}

std::string GroundSet::format(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (auto i : s.elements()) {
        if (!first) out += ',';
        out += labels_.at(i);
        first = false;
    }
    return out + "}";
}

}  // namespace vspace
