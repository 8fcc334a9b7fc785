#pragma once

#include <cstdint>

#include "qvrp/model.hpp"

namespace qvrp {

// Randomized partition of the plane into geometric rings around the depot:
// radii x_0 = 0, x_i = e^{a(i-1+b)} with a = 2/eps and b uniform in [0,1].
struct RingPartition {
    double a_param = 0.0;
    double b_sample = 0.0;
    double rescale = 1.0;  // factor applied so that min point-depot distance is 1
    std::vector<double> radii;            // x_0 .. x_mu
    std::vector<std::vector<int>> rings;  // V_1 .. V_mu (point indices; may be empty)
};

// Sub-instance restricted to one ring. Point-depot distances (after the
// partition's rescale) satisfy delta*D <= d(v) < D.
struct BoundedInstance {
    CvrpInstance instance;          // depot + ring points, original coordinates
    std::vector<int> point_ids;     // index in the parent instance per local point
    double outer_radius = 0.0;      // D, in rescaled units
    double delta = 0.0;             // inner/outer ratio
    double rescale = 1.0;           // rescale factor shared with the partition
    int ring_index = 0;
};

RingPartition sample_rings(const CvrpInstance& inst, std::uint64_t rng_seed);

std::vector<BoundedInstance> partition_instance(const CvrpInstance& inst,
                                                const RingPartition& rp);

// Union of per-ring solutions, remapped to parent point indices.
CvrpSolution merge_solutions(const std::vector<BoundedInstance>& rings,
                             const std::vector<CvrpSolution>& per_ring);

}  // namespace qvrp
