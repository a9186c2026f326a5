#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vspace {

/// Hard cap on ground-set size. Every algorithm here is exponential in n.
inline constexpr std::size_t kMaxGroundSize = 16;

/// Characteristic vector of a subset of a ground set; bit i is element i.
///
/// Ordering is canonical: by cardinality first, then by the numeric value of
/// the bit vector. All reports, witnesses and file output follow it.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    static constexpr Subset empty() { return Subset{}; }
    static constexpr Subset singleton(std::size_t i) { return Subset{std::uint32_t{1} << i}; }
    static constexpr Subset full(std::size_t n) { return Subset{(std::uint32_t{1} << n) - 1}; }

    [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
    [[nodiscard]] constexpr std::size_t index() const { return bits_; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool is_empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    [[nodiscard]] constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

    [[nodiscard]] constexpr Subset with(std::size_t i) const { return Subset{bits_ | (std::uint32_t{1} << i)}; }
    [[nodiscard]] constexpr Subset without(std::size_t i) const { return Subset{bits_ & ~(std::uint32_t{1} << i)}; }

    /// Members as element indices, ascending.
    [[nodiscard]] std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        }
        return out;
    }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }

    friend constexpr bool operator==(Subset a, Subset b) = default;
    friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
};

/// All 2^n subsets of an n-element ground set, in canonical order.
std::vector<Subset> canonical_subsets(std::size_t n);

/// All subsets of `outer`, in canonical order.
std::vector<Subset> canonical_subsets_of(Subset outer);

/// All supersets of `inner` within the n-element ground set, in canonical order.
std::vector<Subset> canonical_supersets_of(Subset inner, std::size_t n);

}  // namespace vspace
