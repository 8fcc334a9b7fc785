#pragma once

#include <optional>

#include "qvrp/model.hpp"

namespace qvrp {

struct OracleBudget {
    int max_points = 7;
    int max_m = 3;
    int max_held_karp = 18;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TspVariant { Tour, Path };

struct HeldKarpResult {
    std::vector<int> order;  // indices into the supplied point list
    double cost = 0.0;
};

// Exact TSP over subsets. Tour variant returns a closed tour; the path variant
// fixes the first and last point of `pts` as endpoints.
HeldKarpResult held_karp(const std::vector<Point>& pts, TspVariant variant,
                         const OracleBudget& budget = {});

// Path variant with explicit endpoints a, b and free interior points.
HeldKarpResult held_karp_path(const Point& a, const Point& b, const std::vector<Point>& interior,
                              const OracleBudget& budget = {});

CvrpSolution brute_force_cvrp(const CvrpInstance& inst, const OracleBudget& budget = {});

MPathsSolution brute_force_mpaths(const MPathsInstance& inst, const OracleBudget& budget = {});

// Iterated tour partitioning: exact TSP on the points, then the best of the c
// rotations of the cut into runs of at most c points.
CvrpSolution itp(const CvrpInstance& inst, const OracleBudget& budget = {});

}  // namespace qvrp
