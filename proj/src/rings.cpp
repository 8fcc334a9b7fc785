#include "qvrp/rings.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace qvrp {

RingPartition sample_rings(const CvrpInstance& inst, std::uint64_t rng_seed) {
    if (inst.n() == 0) throw std::invalid_argument("sample_rings: empty instance");
    double d_min = std::numeric_limits<double>::infinity();
    double d_max = 0.0;
    for (const auto& p : inst.points) {
        double d = distance(inst.depot, p);
        d_min = std::min(d_min, d);
        d_max = std::max(d_max, d);
    }
    if (d_min <= 0.0)
        throw std::invalid_argument("sample_rings: point at distance 0 from depot; rescale first");

    RingPartition rp;
    rp.a_param = 2.0 / inst.epsilon;
    // Rescale so every distance is >= 1; the factor goes into the report.
    rp.rescale = (d_min < 1.0) ? 1.0 / d_min : 1.0;

    std::mt19937_64 rng(rng_seed);
    rp.b_sample = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

    double dmax_scaled = d_max * rp.rescale;
    rp.radii.push_back(0.0);
    for (int i = 1;; ++i) {
        double x = std::exp(rp.a_param * (i - 1 + rp.b_sample));
        rp.radii.push_back(x);
        if (dmax_scaled < x) break;
        if (i > 64) throw std::runtime_error("sample_rings: radius ladder failed to cover d_max");
    }

    int mu = static_cast<int>(rp.radii.size()) - 1;
    rp.rings.assign(mu, {});
    for (int v = 0; v < inst.n(); ++v) {
        double d = distance(inst.depot, inst.points[v]) * rp.rescale;
        // Half-open convention x_{i-1} <= d < x_i; a point exactly on a radius
        // joins the inner ring.
        int ring = static_cast<int>(std::upper_bound(rp.radii.begin(), rp.radii.end(), d) -
                                    rp.radii.begin()) - 1;
        if (ring >= mu) ring = mu - 1;
        if (d == rp.radii[ring]) ring = std::max(0, ring - 1);
        rp.rings[ring].push_back(v);
    }
    return rp;
}

std::vector<BoundedInstance> partition_instance(const CvrpInstance& inst,
                                                const RingPartition& rp) {
    std::vector<BoundedInstance> out;
    for (std::size_t i = 0; i < rp.rings.size(); ++i) {
        if (rp.rings[i].empty()) continue;
        BoundedInstance bi;
        bi.ring_index = static_cast<int>(i + 1);
        bi.instance.depot = inst.depot;
        bi.instance.capacity = inst.capacity;
        bi.instance.epsilon = inst.epsilon;
        for (int v : rp.rings[i]) {
            bi.point_ids.push_back(v);
            bi.instance.points.push_back(inst.points[v]);
        }
        bi.outer_radius = rp.radii[i + 1];
        bi.delta = rp.radii[i] / rp.radii[i + 1];  // e^{-a} for i >= 2, 0 for the first ring
        bi.rescale = rp.rescale;
        out.push_back(std::move(bi));
    }
    return out;
}

CvrpSolution merge_solutions(const std::vector<BoundedInstance>& rings,
                             const std::vector<CvrpSolution>& per_ring) {
    if (rings.size() != per_ring.size())
        throw std::invalid_argument("merge_solutions: size mismatch");
    CvrpSolution merged;
    std::set<int> used;
    for (std::size_t r = 0; r < rings.size(); ++r) {
        for (const Tour& t : per_ring[r].tours) {
            Tour remapped;
            for (int local : t.visits) {
                int global = rings[r].point_ids.at(local);
                if (!used.insert(global).second)
                    throw std::invalid_argument("merge_solutions: point index collision");
                remapped.visits.push_back(global);
            }
            merged.tours.push_back(std::move(remapped));
        }
        merged.cost += per_ring[r].cost;
    }
    return merged;
}

}  // namespace qvrp
