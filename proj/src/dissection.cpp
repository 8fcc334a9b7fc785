#include "qvrp/dissection.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qvrp {

int Dissection::line_level(long long k) const {
    if (k <= 0 || k >= L0) return 0;
    int v2 = 0;
    while ((k & 1) == 0) {
        k >>= 1;
        v2++;
    }
    return rho - v2;
}

Dissection build_dissection(const MPathsInstance& minst, std::uint64_t rng_seed) {
    int n = minst.n();
    if (n < 1) throw std::invalid_argument("build_dissection: needs at least one point");
    if (!check_epsilon(minst.epsilon)) throw std::invalid_argument("build_dissection: bad epsilon");
    Dissection d;
    d.rho = static_cast<int>(std::floor(std::log2(static_cast<double>(n) / minst.epsilon)));
    if (d.rho < 1) d.rho = 1;
    d.L0 = 1LL << d.rho;
    d.L1 = d.L0 / 2;
    d.b1_origin = minst.square_origin;
    d.inv_eps = static_cast<long long>(std::llround(1.0 / minst.epsilon));
    d.scale = static_cast<double>(d.L1) / minst.side;
    std::mt19937_64 rng(rng_seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long long> u(1, d.L1);
    d.shift_x = u(rng);
    d.shift_y = u(rng);
    return d;
}

SnappedPoints snap_points_to_cells(const Dissection& d, const std::vector<Point>& b0_points) {
    SnappedPoints out;
    for (const Point& p : b0_points) {
        long long cx = std::min(static_cast<long long>(std::floor(p.x)), d.L0 - 1);
        long long cy = std::min(static_cast<long long>(std::floor(p.y)), d.L0 - 1);
        cx = std::max(cx, 0LL);
        cy = std::max(cy, 0LL);
        Point center{cx + 0.5, cy + 0.5};
        out.cell_centers.push_back(center);
        out.displacement.push_back(distance(p, center));
        out.total_displacement += out.displacement.back();
    }
    return out;
}

PortalLayout build_portals(const Dissection& d, LayoutMode mode,
                           std::optional<long long> density_override) {
    PortalLayout lay;
    lay.mode = mode;
    lay.rho = d.rho;
    lay.L0 = d.L0;
    if (density_override) {
        if (*density_override < 1) throw std::invalid_argument("build_portals: density < 1");
        lay.density = *density_override;
    } else {
        lay.density = static_cast<long long>(d.rho) * d.inv_eps;  // rho/eps
    }
    lay.Q = 4 * lay.density;

    auto add_line = [&](int axis, long long k) {
        int level = d.line_level(k);
        long long spacing = lay.eta_scaled(level);  // in 1/Q units
        long long total = d.L0 * lay.Q;
        auto& ids = lay.line_slots[{axis, k}];
        for (long long p = 0; p * spacing <= total; ++p) {
            long long pos = p * spacing;
            int parity_dir = (p % 2 == 0) ? +1 : -1;
            bool at_perp = (pos % lay.Q) == 0;
            if (!at_perp) {
                Slot s{axis, k, pos, 0, mode == LayoutMode::Restricted ? parity_dir : 0};
                ids.push_back(static_cast<int>(lay.slots.size()));
                lay.slots.push_back(s);
                continue;
            }
            long long kp = pos / lay.Q;
            int perp_level = d.line_level(kp);
            for (int side = -1; side <= 1; side += 2) {
                if (pos == 0 && side < 0) continue;
                if (pos == total && side > 0) continue;
                int dir;
                if (mode == LayoutMode::Standard) {
                    dir = 0;
                } else if (perp_level > level) {
                    // This line is the coarser one; its alternation keeps the
                    // crossing matching the parity direction.
                    if (side != parity_dir) continue;
                    dir = side;
                } else {
                    // Intersection fixed when the coarser perpendicular line was
                    // processed: both crossings survive with their original
                    // orientation (direction sign = side sign).
                    dir = side;
                }
                Slot s{axis, k, pos, side, dir};
                ids.push_back(static_cast<int>(lay.slots.size()));
                lay.slots.push_back(s);
            }
        }
    };

    for (int axis = 0; axis <= 1; ++axis)
        for (long long k = 0; k <= d.L0; ++k) add_line(axis, k);
    return lay;
}

SquareRef square_at(const Dissection& d, int level, long long ix, long long iy) {
    long long side = d.level_side(level);
    return SquareRef{level, ix * side, iy * side, (ix + 1) * side, (iy + 1) * side};
}

namespace {

// Slot ids on one line restricted to scaled positions [lo, hi]; a sided slot
// counts as inside when its infinitesimal displacement stays inside.
std::vector<int> slots_in_range(const PortalLayout& lay, int axis, long long line, long long lo,
                                long long hi) {
    std::vector<int> out;
    auto it = lay.line_slots.find({axis, line});
    if (it == lay.line_slots.end()) return out;
    for (int id : it->second) {
        const Slot& s = lay.slots[id];
        if (s.pos < lo || s.pos > hi) continue;
        if (s.pos == lo && s.side < 0) continue;
        if (s.pos == hi && s.side > 0) continue;
        out.push_back(id);
    }
    return out;
}

}  // namespace

std::vector<Port> boundary_ports(const PortalLayout& lay, const SquareRef& sq) {
    std::vector<Port> ports;
    long long Q = lay.Q;
    struct SideSpec {
        int axis;
        long long line;
        long long lo, hi;
        bool ascending;
        int inward_dir;  // crossing direction that enters the square
    };
    // Walk order: south w->e, east s->n, north e->w, west n->s.
    SideSpec sides[4] = {
        {1, sq.y0, sq.x0 * Q, sq.x1 * Q, true, +1},
        {0, sq.x1, sq.y0 * Q, sq.y1 * Q, true, -1},
        {1, sq.y1, sq.x0 * Q, sq.x1 * Q, false, -1},
        {0, sq.x0, sq.y0 * Q, sq.y1 * Q, false, +1},
    };
    for (const auto& spec : sides) {
        auto ids = slots_in_range(lay, spec.axis, spec.line, spec.lo, spec.hi);
        if (!spec.ascending) std::reverse(ids.begin(), ids.end());
        for (int id : ids) {
            const Slot& s = lay.slots[id];
            if (lay.mode == LayoutMode::Restricted) {
                ports.push_back({id, s.dir == spec.inward_dir});
            } else {
                ports.push_back({id, true});
                ports.push_back({id, false});
            }
        }
    }
    return ports;
}

std::vector<int> inner_slots(const PortalLayout& lay, const SquareRef& sq) {
    long long Q = lay.Q;
    long long xm = (sq.x0 + sq.x1) / 2;
    long long ym = (sq.y0 + sq.y1) / 2;
    std::vector<int> out = slots_in_range(lay, 0, xm, sq.y0 * Q, sq.y1 * Q);
    auto h = slots_in_range(lay, 1, ym, sq.x0 * Q, sq.x1 * Q);
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

double min_in_square_traversal(const PortalLayout& lay, const SquareRef& sq, int in_slot,
                               int out_slot) {
    if (in_slot == out_slot)
        throw std::invalid_argument("min_in_square_traversal: one slot cannot be both directions");
    (void)sq;
    return distance(lay.slot_point(in_slot), lay.slot_point(out_slot));
}

std::optional<int> nearest_slot_on_line(const PortalLayout& lay, int axis, long long line,
                                        double along, int required_dir, double forbid_below,
                                        double forbid_above) {
    auto it = lay.line_slots.find({axis, line});
    if (it == lay.line_slots.end()) return std::nullopt;
    double best = std::numeric_limits<double>::infinity();
    int best_id = -1;
    for (int id : it->second) {
        const Slot& s = lay.slots[id];
        if (required_dir != 0 && lay.mode == LayoutMode::Restricted && s.dir != required_dir)
            continue;
        double p = static_cast<double>(s.pos) / static_cast<double>(lay.Q);
        if (forbid_below >= 0.0 && p < forbid_below) continue;
        if (forbid_above >= 0.0 && p > forbid_above) continue;
        double dist = std::fabs(p - along);
        if (dist < best) {
            best = dist;
            best_id = id;
        }
    }
    if (best_id < 0) return std::nullopt;
    return best_id;
}

PathSnapResult snap_path_to_portals(const PortalLayout& lay, const std::vector<Point>& path) {
    PathSnapResult res;
    if (path.empty()) return res;
    res.polyline.push_back(path.front());
    auto coord = [](const Point& p, int axis) { return axis == 0 ? p.x : p.y; };
    auto other = [](const Point& p, int axis) { return axis == 0 ? p.y : p.x; };
    for (std::size_t i = 1; i < path.size(); ++i) {
        Point u = res.polyline.back();
        Point v = path[i];
        // Collect crossings of both line families along u -> v.
        struct Crossing {
            double t;
            int axis;
            long long line;
            double along;
            int dir;
        };
        std::vector<Crossing> xs;
        for (int axis = 0; axis <= 1; ++axis) {
            double cu = coord(u, axis), cv = coord(v, axis);
            if (cu == cv) continue;
            int dir = cv > cu ? +1 : -1;
            long long lo = static_cast<long long>(std::floor(std::min(cu, cv))) + 1;
            long long hi = static_cast<long long>(std::ceil(std::max(cu, cv))) - 1;
            for (long long k = std::max(lo, 0LL); k <= std::min(hi, lay.L0); ++k) {
                double t = (static_cast<double>(k) - cu) / (cv - cu);
                if (t <= 0.0 || t >= 1.0) continue;
                double along = other(u, axis) + t * (other(v, axis) - other(u, axis));
                xs.push_back({t, axis, k, along, dir});
            }
        }
        std::sort(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
        for (const auto& c : xs) {
            auto slot = nearest_slot_on_line(lay, c.axis, c.line, c.along, c.dir, -1.0, -1.0);
            if (!slot) throw std::runtime_error("snap_path_to_portals: no admissible slot on line");
            Point sp = lay.slot_point(*slot);
            double moved = std::fabs((c.axis == 0 ? sp.y : sp.x) - c.along);
            res.polyline.push_back(sp);
            res.detours.push_back(2.0 * moved);
            int line_level = 0;
            {
                long long k = c.line;
                if (k > 0 && k < lay.L0) {
                    int v2 = 0;
                    long long kk = k;
                    while ((kk & 1) == 0) {
                        kk >>= 1;
                        v2++;
                    }
                    line_level = lay.rho - v2;
                }
            }
            double eta = lay.eta(line_level);
            res.allowed.push_back(lay.mode == LayoutMode::Restricted ? 4.0 * eta : eta);
            res.crossing_slots.push_back(*slot);
        }
        res.polyline.push_back(v);
    }
    return res;
}

}  // namespace qvrp
