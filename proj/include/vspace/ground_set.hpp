#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vspace/subset.hpp"

namespace vspace {

/// Finite ground set with ordered, pairwise distinct element labels.
class GroundSet {
public:
    GroundSet() = default;

    /// Throws ParseError on duplicate labels, SizeError beyond kMaxGroundSize.
    explicit GroundSet(std::vector<std::string> labels);

    /// Ground set labelled "1".."n".
    static GroundSet numbered(std::size_t n);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] std::size_t subset_count() const { return std::size_t{1} << labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] Subset full() const { return Subset::full(labels_.size()); }

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;
    [[nodiscard]] bool valid(Subset s) const { return s.subset_of(full()); }

    /// Builds a subset from labels; rejects unknown and repeated labels.
    [[nodiscard]] Subset subset_of(std::span<const std::string> labels) const;

    /// Parses "1,3" (or "" for the empty set) into a subset.
    [[nodiscard]] Subset parse_list(const std::string& comma_separated) const;

    /// Labels of the members of `s`, in ground order.
    [[nodiscard]] std::vector<std::string> labels_of(Subset s) const;

    /// "{1,3}" / "{}".
    [[nodiscard]] std::string format(Subset s) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
};

}  // namespace vspace
