#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qvrp/model.hpp"

namespace qvrp {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed arc between two positions of a portal cycle.
struct Arc {
    int from = 0;
    int to = 0;
    friend bool operator==(const Arc& a, const Arc& b) { return a.from == b.from && a.to == b.to; }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    }
};

// Directed outer-planar graph on K portals arranged on a cycle. At most one
// arc per ordered pair (multiplicity lives in the flow labeling); no
// self-loops; no two arcs cross when drawn as chords.
struct FlowGraph {
    int portal_count = 0;
    std::vector<Arc> arcs;  // kept sorted

    friend bool operator==(const FlowGraph& a, const FlowGraph& b) {
        return a.portal_count == b.portal_count && a.arcs == b.arcs;
    }
};

bool arcs_cross(const Arc& a, const Arc& b);
bool is_outer_planar(const FlowGraph& g);

// Boundary-walk encoding over {0,1,2,3}: per portal in walk order, closings
// ('3') then openings ('1' outgoing / '2' incoming), then '0'.
std::string encode(const FlowGraph& g);
FlowGraph decode(const std::string& s, int portal_count);

// Visits each distinct outer-planar flow graph on K portals exactly once,
// throwing CapExceeded beyond `cap` graphs.
void enumerate_flow_graphs(int portal_count, long long cap,
                           const std::function<void(const FlowGraph&)>& visit);

// Uniform-ish random outer-planar flow graph, for sampled round-trip checks.
FlowGraph sample_flow_graph(int portal_count, std::uint64_t seed);

// Geometric rounding set F = {0} u {floor(alpha^i)} clamped to n, with n
// always a member so that a full flow value survives rounding.
struct RoundingSet {
    double alpha = 2.0;
    long long n = 1;
    int n_f = 0;  // smallest i with floor(alpha^i) >= n
    std::vector<long long> values;  // sorted, deduplicated; {0,1,...,n} subset

    bool contains(long long v) const;
};

double paper_alpha(long long n, double epsilon);
RoundingSet build_rounding_set(long long n, double epsilon,
                               std::optional<double> alpha_override = std::nullopt);
long long round_down_to_F(long long v, const RoundingSet& f);

struct FlowLabeling {
    std::vector<long long> value;  // aligned with FlowGraph::arcs, all >= 1
};

struct Configuration {
    std::vector<long long> in_flow;   // per portal
    std::vector<long long> out_flow;  // per portal
    std::vector<std::vector<int>> components;  // touched portals, each sorted
    long long flow_value = 0;  // total in == total out
};

// Per-portal sums (never rounded) plus undirected components of the support.
Configuration derive_configuration(const FlowGraph& g, const FlowLabeling& labels);

}  // namespace qvrp
