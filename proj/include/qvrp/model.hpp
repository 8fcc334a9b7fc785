#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvrp/geometry.hpp"

namespace qvrp {

// Capacitated vehicle routing: depot-rooted tours of at most `capacity` points each.
struct CvrpInstance {
    Point depot;
    std::vector<Point> points;
    int capacity = 1;
    double epsilon = 0.5;  // 1/epsilon must be integer

    int n() const { return static_cast<int>(points.size()); }
};

// Visit order by point index; the depot is implicit at both ends.
struct Tour {
    std::vector<int> visits;
};

struct CvrpSolution {
    std::vector<Tour> tours;
    double cost = 0.0;
};

// Find exactly m paths between boundary points a and b covering all points in a square.
struct MPathsInstance {
    Point square_origin;    // lower-left corner
    double side = 1.0;      // tau
    Point a;
    Point b;
    int m = 1;
    std::vector<Point> points;
    double epsilon = 0.5;

    int n() const { return static_cast<int>(points.size()); }
};

// Each path runs a -> interior points -> b. Entries are point indices; the
// endpoints a and b are implicit.
struct MPath {
    std::vector<int> visits;
    // Full polyline including detour vertices, when the producer tracked one.
    std::vector<Point> polyline;
};

struct MPathsSolution {
    std::vector<MPath> paths;
    double cost = 0.0;
};

struct ValidationIssue {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void fail(std::string rule, std::string detail) {
        issues.push_back({std::move(rule), std::move(detail)});
    }
    std::string summary() const {
        if (ok()) return "pass";
        std::string s;
        for (const auto& i : issues) {
            s += i.rule;
            s += ": ";
            s += i.detail;
            s += "\n";
        }
        return s;
    }
};

bool check_epsilon(double epsilon);

double tour_cost(const CvrpInstance& inst, const Tour& t);
double cvrp_solution_cost(const CvrpInstance& inst, const CvrpSolution& sol);

double mpath_cost(const MPathsInstance& inst, const MPath& p);
double mpaths_solution_cost(const MPathsInstance& inst, const MPathsSolution& sol);

ValidationReport validate_cvrp_solution(const CvrpInstance& inst, const CvrpSolution& sol);
ValidationReport validate_mpaths_solution(const MPathsInstance& inst, const MPathsSolution& sol);

}  // namespace qvrp
