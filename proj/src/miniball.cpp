#include "vspace/miniball.hpp"

#include <set>

#include "vspace/error.hpp"

namespace vspace {
namespace {

Rational squared_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

Ball point_ball(const Point& p) { return {p.coords, Rational(0)}; }

Ball diameter_ball(const Point& p, const Point& q) {
    std::vector<Rational> center(p.coords.size());
    for (std::size_t i = 0; i < center.size(); ++i) center[i] = (p.coords[i] + q.coords[i]) / 2;
    return {center, squared_distance(p.coords, q.coords) / 4};
}

// Circumcircle of a planar triangle; empty for collinear points.
std::optional<Ball> circumball(const Point& a, const Point& b, const Point& c) {
    const Rational &ax = a.coords[0], &ay = a.coords[1];
    const Rational &bx = b.coords[0], &by = b.coords[1];
    const Rational &cx = c.coords[0], &cy = c.coords[1];
    const Rational d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (d == 0) return std::nullopt;
    const Rational a2 = ax * ax + ay * ay;
    const Rational b2 = bx * bx + by * by;
    const Rational c2 = cx * cx + cy * cy;
    std::vector<Rational> center{(a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                                 (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d};
    Rational r2 = squared_distance(a.coords, center);
    return Ball{std::move(center), std::move(r2)};
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> boost::multiprecision::cpp_int {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw ParseError("malformed rational \"" + text + "\"");
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') throw ParseError("malformed rational \"" + text + "\"");
        }
        boost::multiprecision::cpp_int v(s.substr(i));
        return s[0] == '-' ? -v : v;
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool Ball::contains(const Point& p) const {
    return squared_distance(p.coords, center) <= radius_sq;
}

PointConfig::PointConfig(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ != 1 && dim_ != 2) throw ParseError("dim must be 1 or 2, got " + std::to_string(dim_));
    if (points_.empty() || points_.size() > kMaxMiniballPoints) {
        throw ParseError("point count must be between 1 and " + std::to_string(kMaxMiniballPoints) + ", got " +
                         std::to_string(points_.size()));
    }
    std::set<std::string> labels;
    for (const auto& p : points_) {
        if (p.coords.size() != dim_) throw ParseError("point \"" + p.label + "\" has the wrong number of coordinates");
        if (!labels.insert(p.label).second) throw ParseError("duplicate point label \"" + p.label + "\"");
    }
}

std::vector<Point> PointConfig::select(Subset s) const {
    std::vector<Point> out;
    for (auto i : s.elements()) out.push_back(points_.at(i));
    return out;
}

std::optional<Ball> smallest_enclosing_ball(std::span<const Point> points) {
    if (points.empty()) return std::nullopt;
    const std::size_t dim = points.front().coords.size();
    for (const auto& p : points) {
        if (p.coords.size() != dim) throw ParseError("points of mixed dimension");
    }
    if (dim == 0 || dim > 2) throw ParseError("smallest_enclosing_ball supports dimension 1 or 2");

    std::optional<Ball> best;
    auto offer = [&](const Ball& candidate) {
        if (best && candidate.radius_sq >= best->radius_sq) return;
        for (const auto& p : points) {
            if (!candidate.contains(p)) return;
        }
        best = candidate;
    };
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i) {
        offer(point_ball(points[i]));
        for (std::size_t j = i + 1; j < m; ++j) {
            offer(diameter_ball(points[i], points[j]));
            if (dim != 2) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (auto c = circumball(points[i], points[j], points[k])) offer(*c);
            }
        }
    }
    return best;
}

std::optional<Ball> smallest_enclosing_ball(const PointConfig& config, Subset g) {
    const auto pts = config.select(g);
    return smallest_enclosing_ball(std::span<const Point>(pts));
}

Subset violators(const PointConfig& config, Subset g) {
    const Subset all = Subset::full(config.size());
    const auto ball = smallest_enclosing_ball(config, g);
    if (!ball) return all;
    Subset out;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (ball->strictly_outside(config.points()[i])) out = out.with(i);
    }
    return out;
}

OperatorTable materialize(const PointConfig& config) {
    std::vector<std::string> labels;
    for (const auto& p : config.points()) labels.push_back(p.label);
    return OperatorTable::from_rule(GroundSet(std::move(labels)), OperatorKind::Violator,
                                    [&](Subset g) { return violators(config, g); });
}

}  // namespace vspace
