#pragma once

#include <array>
#include <cstdint>

#include "qvrp/dissection.hpp"
#include "qvrp/flow_graph.hpp"
#include "qvrp/model.hpp"

namespace qvrp {

struct DpCaps {
    long long table_per_square = 2000000;   // stored entries per square
    long long work_per_square = 40000000;   // enumeration/join steps per square
    long long flow_slack = 2;               // in-flow cap = m + n + flow_slack
    long long parent_variants = 4096;       // pseudo outer-value vectors per combo
};

struct MpathsDpConfig {
    LayoutMode layout = LayoutMode::Standard;
    bool rounded = false;
    std::optional<double> alpha_override;
    std::optional<long long> density_override = 1;  // desk-scale default keeps K <= 16
    int shifts = 1;
    std::uint64_t seed = 0;
    DpCaps caps;
    double cost_upper_bound_factor = 1.5;  // slack on the heuristic pruning bound
};

// One DP run on a fixed dissection (one random shift).
struct DpRunResult {
    Dissection dissection;
    double z_dp = 0.0;               // DP cost in B0 units (grid-cell realizations only)
    double z0 = 0.0;                 // m * anchor-route length, B0 units
    double anchor_route_len = 0.0;   // len(a' -> a) + len(b -> b'), B0 units
    long long m_prime = 0;           // flow value of the B0 configuration
    long long corridor_flow = 0;     // value carried by the fixed anchor arcs
    double repaired_cost = 0.0;      // after repair, B0 units (anchor arcs included)
    double final_cost_b0 = 0.0;      // after strip_and_reduce, B0 units
    double final_cost = 0.0;         // original units
    double snap_displacement = 0.0;  // total point displacement, original units
    double endpoint_displacement = 0.0;  // a,b portal snap, original units
    MPathsSolution solution;         // exactly m paths, original frame
    double alpha = 1.0;
    long long repair_arcs_added = 0;
};

struct MpathsSolveResult {
    MPathsSolution best;             // validated, original frame
    DpRunResult best_run;
    std::vector<DpRunResult> runs;
    bool used_dp = true;             // false for the trivial n = 0 / m > n shortcut paths
};

// Exact or rounded dynamic program, best over cfg.shifts random shifts.
MpathsSolveResult solve_mpaths(const MPathsInstance& inst, const MpathsDpConfig& cfg);

// Single-shift run on an explicit dissection; building block for solve_mpaths
// and for tests that compare exact and rounded modes on one shift.
DpRunResult run_dp(const MPathsInstance& inst, const Dissection& d, const MpathsDpConfig& cfg);

// One sub-instance of the general m-paths problem: an anchor pair with its
// own path count and an exact number of points to cover.
struct GeneralMpathsPart {
    Point a;
    Point b;
    int m = 1;
    int n_required = 0;
};

struct GeneralMpathsResult {
    std::vector<MPathsSolution> per_part;  // aligned with parts
    std::vector<std::vector<int>> assignment;  // point ids per part
    double total_cost = 0.0;
};

// Joint solve over a shared square: enumerates the split of the square's
// points over the parts (the base-case coupling) and solves each part
// independently; keeps the cheapest feasible split.
GeneralMpathsResult solve_general_mpaths(const Point& square_origin, double side, double epsilon,
                                         const std::vector<Point>& points,
                                         const std::vector<GeneralMpathsPart>& parts,
                                         const MpathsDpConfig& cfg);

}  // namespace qvrp
