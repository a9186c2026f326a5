#include "vspace/operator_table.hpp"

#include <string>

#include "vspace/error.hpp"

namespace vspace {

std::string_view to_string(OperatorKind kind) {
    return kind == OperatorKind::Tau ? "tau" : "violator";
}

OperatorTable::OperatorTable(GroundSet ground, OperatorKind kind, std::vector<Subset> images)
    : ground_(std::move(ground)), kind_(kind), images_(std::move(images)) {
    if (images_.size() != ground_.subset_count()) {
        throw ParseError("operator table needs " + std::to_string(ground_.subset_count()) +
                         " entries, got " + std::to_string(images_.size()));
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!ground_.valid(images_[i])) {
            throw ParseError("image of " + ground_.format(Subset{static_cast<std::uint32_t>(i)}) +
                             " leaves the ground set");
        }
    }
}

OperatorTable OperatorTable::from_rule(GroundSet ground, OperatorKind kind,
                                       const std::function<Subset(Subset)>& rule) {
    std::vector<Subset> images(ground.subset_count());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = rule(Subset{static_cast<std::uint32_t>(i)});
    return OperatorTable(std::move(ground), kind, std::move(images));
}

OperatorTable OperatorTable::identity(GroundSet ground, OperatorKind kind) {
    return from_rule(std::move(ground), kind, [](Subset x) { return x; });
}

OperatorTable OperatorTable::complement(GroundSet ground, OperatorKind kind) {
    const Subset e = ground.full();
    return from_rule(std::move(ground), kind, [e](Subset x) { return e - x; });
}

OperatorTable OperatorTable::constant(GroundSet ground, Subset value, OperatorKind kind) {
    return from_rule(std::move(ground), kind, [value](Subset) { return value; });
}

Subset OperatorTable::at(Subset x) const {
    if (!ground_.valid(x)) throw ParseError("subset " + std::to_string(x.bits()) + " outside the ground set");
    return images_[x.index()];
}

OperatorTable OperatorTable::with_entry(Subset x, Subset image) const {
    auto images = images_;
    if (!ground_.valid(x)) throw ParseError("subset outside the ground set");
    images[x.index()] = image;
    return OperatorTable(ground_, kind_, std::move(images));
}

void require_kind(const OperatorTable& op, OperatorKind expected, std::string_view operation) {
    if (op.kind() != expected) {
        throw KindError(std::string(operation) + " needs a " + std::string(to_string(expected)) +
                        " table, got " + std::string(to_string(op.kind())));
    }
}

}  // namespace vspace
