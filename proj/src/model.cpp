#include "qvrp/model.hpp"

#include <algorithm>
#include <cmath>

namespace qvrp {

bool check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) return false;
    double inv = 1.0 / epsilon;
    return std::fabs(inv - std::round(inv)) < 1e-9;
}

double tour_cost(const CvrpInstance& inst, const Tour& t) {
    if (t.visits.empty()) return 0.0;
    double c = 0.0;
    Point prev = inst.depot;
    for (int idx : t.visits) {
        if (idx < 0 || idx >= inst.n()) throw std::out_of_range("tour visits invalid point index");
        c += distance(prev, inst.points[idx]);
        prev = inst.points[idx];
    }
    c += distance(prev, inst.depot);
    return c;
}

double cvrp_solution_cost(const CvrpInstance& inst, const CvrpSolution& sol) {
    double c = 0.0;
    for (const auto& t : sol.tours) c += tour_cost(inst, t);
    return c;
}

double mpath_cost(const MPathsInstance& inst, const MPath& p) {
    if (!p.polyline.empty()) return polyline_length(p.polyline);
    double c = 0.0;
    Point prev = inst.a;
    for (int idx : p.visits) {
        if (idx < 0 || idx >= inst.n()) throw std::out_of_range("path visits invalid point index");
        c += distance(prev, inst.points[idx]);
        prev = inst.points[idx];
    }
    c += distance(prev, inst.b);
    return c;
}

double mpaths_solution_cost(const MPathsInstance& inst, const MPathsSolution& sol) {
    double c = 0.0;
    for (const auto& p : sol.paths) c += mpath_cost(inst, p);
    return c;
}

ValidationReport validate_cvrp_solution(const CvrpInstance& inst, const CvrpSolution& sol) {
    ValidationReport rep;
    std::vector<int> seen(inst.n(), 0);
    for (std::size_t ti = 0; ti < sol.tours.size(); ++ti) {
        const Tour& t = sol.tours[ti];
        if (static_cast<int>(t.visits.size()) > inst.capacity) {
            rep.fail("capacity", "tour " + std::to_string(ti) + " has " +
                                     std::to_string(t.visits.size()) + " > c = " +
                                     std::to_string(inst.capacity) + " points");
        }
        for (int idx : t.visits) {
            if (idx < 0 || idx >= inst.n()) {
                rep.fail("index", "tour " + std::to_string(ti) + " references point " +
                                      std::to_string(idx));
                continue;
            }
            seen[idx]++;
        }
    }
    for (int i = 0; i < inst.n(); ++i) {
        if (seen[i] == 0) rep.fail("coverage", "point " + std::to_string(i) + " uncovered");
        if (seen[i] > 1)
            rep.fail("coverage", "point " + std::to_string(i) + " covered " +
                                     std::to_string(seen[i]) + " times");
    }
    double actual = cvrp_solution_cost(inst, sol);
    if (!cost_eq(actual, sol.cost)) {
        rep.fail("cost", "declared " + std::to_string(sol.cost) + " but tours sum to " +
                             std::to_string(actual));
    }
    return rep;
}

ValidationReport validate_mpaths_solution(const MPathsInstance& inst, const MPathsSolution& sol) {
    ValidationReport rep;
    if (static_cast<int>(sol.paths.size()) != inst.m) {
        rep.fail("path-count", "expected m = " + std::to_string(inst.m) + ", got " +
                                   std::to_string(sol.paths.size()));
    }
    std::vector<int> seen(inst.n(), 0);
    for (std::size_t pi = 0; pi < sol.paths.size(); ++pi) {
        const MPath& p = sol.paths[pi];
        for (int idx : p.visits) {
            if (idx < 0 || idx >= inst.n()) {
                rep.fail("index", "path " + std::to_string(pi) + " references point " +
                                      std::to_string(idx));
                continue;
            }
            seen[idx]++;
        }
        if (!p.polyline.empty()) {
            if (distance(p.polyline.front(), inst.a) > 1e-7)
                rep.fail("endpoint", "path " + std::to_string(pi) + " does not start at a");
            if (distance(p.polyline.back(), inst.b) > 1e-7)
                rep.fail("endpoint", "path " + std::to_string(pi) + " does not end at b");
        }
    }
    for (int i = 0; i < inst.n(); ++i) {
        if (seen[i] == 0) rep.fail("coverage", "point " + std::to_string(i) + " uncovered");
        if (seen[i] > 1)
            rep.fail("coverage", "point " + std::to_string(i) + " on " +
                                     std::to_string(seen[i]) + " paths");
    }
    double actual = mpaths_solution_cost(inst, sol);
    if (!cost_eq(actual, sol.cost)) {
        rep.fail("cost", "declared " + std::to_string(sol.cost) + " but paths sum to " +
                             std::to_string(actual));
    }
    return rep;
}

}  // namespace qvrp
