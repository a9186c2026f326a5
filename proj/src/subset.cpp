#include "vspace/subset.hpp"

#include <algorithm>

namespace vspace {

std::vector<Subset> canonical_subsets(std::size_t n) {
    return canonical_subsets_of(Subset::full(n));
}

std::vector<Subset> canonical_subsets_of(Subset outer) {
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << outer.size());
    // Enumerate submasks of `outer`, then sort into canonical order.
    std::uint32_t m = outer.bits();
    for (std::uint32_t s = m;; s = (s - 1) & m) {
        out.emplace_back(s);
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> canonical_supersets_of(Subset inner, std::size_t n) {
    const Subset rest = Subset::full(n) - inner;
    std::vector<Subset> out = canonical_subsets_of(rest);
    for (auto& s : out) s = s | inner;
    // Adding a fixed set preserves the canonical order.
    return out;
}

}  // namespace vspace
