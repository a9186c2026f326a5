#pragma once

#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace::detail {

/// Members of each equivalence class, indexed by the class value's bits;
/// every list is in canonical order.
inline std::vector<std::vector<Subset>> buckets_by_image(const OperatorTable& tau) {
    std::vector<std::vector<Subset>> buckets(tau.ground().subset_count());
    for (Subset x : canonical_subsets(tau.n())) buckets[tau(x).index()].push_back(x);
    return buckets;
}

/// One entry per class, ordered by each class's canonically first member.
inline std::vector<const std::vector<Subset>*> classes_by_first_member(
    const std::vector<std::vector<Subset>>& buckets, const OperatorTable& tau) {
    std::vector<const std::vector<Subset>*> out;
    for (Subset x : canonical_subsets(tau.n())) {
        const auto& members = buckets[tau(x).index()];
        if (members.front() == x) out.push_back(&members);
    }
    return out;
}

inline Subset intersection_of(const std::vector<Subset>& family, Subset empty_value) {
    if (family.empty()) return empty_value;
    Subset acc = family.front();
    for (Subset s : family) acc = acc & s;
    return acc;
}

}  // namespace vspace::detail
