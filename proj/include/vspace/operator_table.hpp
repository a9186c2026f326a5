#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "vspace/ground_set.hpp"
#include "vspace/subset.hpp"

namespace vspace {

/// Which presentation a table holds: a closure-like operator tau or a
/// violator mapping V. Conversion between them is explicit (see duality.hpp).
enum class OperatorKind { Tau, Violator };

std::string_view to_string(OperatorKind kind);

/// Total map 2^E -> 2^E stored as an explicit table indexed by subset bits.
///
/// The type assumes no axiom at all; the only invariants are totality and
/// that every image lies inside the ground set.
class OperatorTable {
public:
    /// Throws ParseError if `images` has the wrong length or an image leaves
    /// the ground set.
    OperatorTable(GroundSet ground, OperatorKind kind, std::vector<Subset> images);

    /// Builds the table by evaluating `rule` on every subset.
    static OperatorTable from_rule(GroundSet ground, OperatorKind kind,
                                   const std::function<Subset(Subset)>& rule);

    static OperatorTable identity(GroundSet ground, OperatorKind kind = OperatorKind::Tau);
    static OperatorTable complement(GroundSet ground, OperatorKind kind = OperatorKind::Violator);
    static OperatorTable constant(GroundSet ground, Subset value, OperatorKind kind = OperatorKind::Tau);

    [[nodiscard]] const GroundSet& ground() const { return ground_; }
    [[nodiscard]] std::size_t n() const { return ground_.size(); }
    [[nodiscard]] OperatorKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<Subset>& images() const { return images_; }
    [[nodiscard]] Subset full() const { return ground_.full(); }

    [[nodiscard]] Subset operator()(Subset x) const { return images_[x.index()]; }
    [[nodiscard]] Subset at(Subset x) const;

    /// Copy with one entry replaced.
    [[nodiscard]] OperatorTable with_entry(Subset x, Subset image) const;

    friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

private:
    GroundSet ground_;
    OperatorKind kind_;
    std::vector<Subset> images_;
};

/// Throws KindError unless `op` has the expected kind.
void require_kind(const OperatorTable& op, OperatorKind expected, std::string_view operation);

}  // namespace vspace
