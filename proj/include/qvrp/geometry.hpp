#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace qvrp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double distance(const Point& p, const Point& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

inline double polyline_length(const std::vector<Point>& pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    return len;
}

// Relative tolerance used for all cost comparisons. Combinatorial checks are exact.
inline constexpr double kCostRelTol = 1e-9;

inline bool cost_leq(double a, double b) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return a <= b + kCostRelTol * scale;
}

inline bool cost_eq(double a, double b) {
    return cost_leq(a, b) && cost_leq(b, a);
}

}  // namespace qvrp
