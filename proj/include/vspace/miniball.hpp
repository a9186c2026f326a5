#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vspace/operator_table.hpp"
#include "vspace/subset.hpp"

namespace vspace {

using Rational = boost::multiprecision::cpp_rational;

/// "3/2", "-4", "0/7". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(const std::string& text);
/// "3/2" or "-4".
std::string format_rational(const Rational& r);

inline constexpr std::size_t kMaxMiniballPoints = 10;

struct Point {
    std::string label;
    std::vector<Rational> coords;
};

/// Closed ball { p : |p - center|^2 <= radius_sq }. Radii are kept squared so
/// everything stays rational.
struct Ball {
    std::vector<Rational> center;
    Rational radius_sq;

    [[nodiscard]] bool contains(const Point& p) const;
    [[nodiscard]] bool strictly_outside(const Point& p) const { return !contains(p); }
    bool operator==(const Ball&) const = default;
};

/// Labelled points of a common dimension 1 or 2.
class PointConfig {
public:
    /// Throws ParseError on dim outside {1,2}, coordinate count mismatch,
    /// duplicate labels, or a point count outside [1, kMaxMiniballPoints].
    PointConfig(std::size_t dim, std::vector<Point> points);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<Point>& points() const { return points_; }
    [[nodiscard]] std::vector<Point> select(Subset s) const;

private:
    std::size_t dim_;
    std::vector<Point> points_;
};

/// Smallest ball enclosing all `points`, computed exactly by checking every
/// candidate supported by 1, 2 or (in the plane, non-collinear) 3 points.
/// Empty for an empty input. Throws ParseError on mixed or unsupported
/// dimensions.
std::optional<Ball> smallest_enclosing_ball(std::span<const Point> points);
std::optional<Ball> smallest_enclosing_ball(const PointConfig& config, Subset g);

/// Points strictly outside the smallest enclosing ball of G; all points for G = {}.
Subset violators(const PointConfig& config, Subset g);

/// V-form table G -> violators(config, G), labelled by point labels.
OperatorTable materialize(const PointConfig& config);

}  // namespace vspace
