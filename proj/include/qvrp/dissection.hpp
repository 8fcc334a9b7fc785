#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qvrp/model.hpp"

namespace qvrp {

// Shifted quadtree over the instance square. B1 (the instance square, side
// L1 = 2^{rho-1}) sits inside B0 (side L0 = 2^rho) at an integer shift drawn
// from {1..L1}^2. Grid cells are the unit squares of B0; every integer line
// of B0 is a dissection line.
struct Dissection {
    int rho = 1;
    long long L0 = 2;
    long long L1 = 1;
    long long shift_x = 1;
    long long shift_y = 1;
    long long inv_eps = 2;  // 1/epsilon of the instance
    double scale = 1.0;    // rescaled = (orig - b1_origin) * scale + shift
    Point b1_origin;       // original-frame lower-left corner of the instance square

    Point to_b0(const Point& orig) const {
        return {(orig.x - b1_origin.x) * scale + shift_x, (orig.y - b1_origin.y) * scale + shift_y};
    }
    Point to_original(const Point& b0) const {
        return {(b0.x - shift_x) / scale + b1_origin.x, (b0.y - shift_y) / scale + b1_origin.y};
    }

    // Level of the dissection line at integer offset k (0 and L0 are level 0).
    int line_level(long long k) const;
    long long level_side(int level) const { return L0 >> level; }  // L_i
};

Dissection build_dissection(const MPathsInstance& minst, std::uint64_t rng_seed);

struct SnappedPoints {
    std::vector<Point> cell_centers;     // per input point, B0 frame
    std::vector<double> displacement;    // per input point, B0 frame units
    double total_displacement = 0.0;
};

SnappedPoints snap_points_to_cells(const Dissection& d, const std::vector<Point>& b0_points);

enum class LayoutMode { Standard, Restricted };

// One crossing slot on a dissection line. Axis 0 lines are vertical (crossings
// move along x), axis 1 horizontal (crossings move along y). Positions along
// the line are exact integers in units of 1/(4*density). At a position shared
// with a perpendicular line the slot splits into two sided slots (side = the
// displacement sign along the line); elsewhere side = 0.
struct Slot {
    int axis = 0;
    long long line = 0;  // integer offset of the carrying line
    long long pos = 0;   // scaled by Q = 4*density
    int side = 0;        // -1 / 0 / +1
    int dir = 0;         // restricted: crossing direction (+1/-1 along crossing axis); 0 = undirected

    Point location(long long q) const {
        double along = static_cast<double>(pos) / static_cast<double>(q);
        return axis == 0 ? Point{static_cast<double>(line), along}
                         : Point{along, static_cast<double>(line)};
    }
};

struct PortalLayout {
    LayoutMode mode = LayoutMode::Standard;
    int rho = 1;
    long long L0 = 2;
    long long density = 1;  // rho/eps by default
    long long Q = 4;        // position scale = 4*density

    std::vector<Slot> slots;
    // slot ids per (axis, line), ordered by (pos, side)
    std::map<std::pair<int, long long>, std::vector<int>> line_slots;

    long long eta_scaled(int level) const { return 1LL << (rho - level); }  // in 1/Q units
    double eta(int level) const {
        return static_cast<double>(eta_scaled(level)) / static_cast<double>(Q);
    }
    long long portals_per_line(int level) const { return (L0 * Q) / eta_scaled(level) + 1; }
    // Portals per level-i square side lying on a level-i line: 4*density + 1.
    long long nport() const { return 4 * density + 1; }

    Point slot_point(int id) const { return slots[id].location(Q); }
};

PortalLayout build_portals(const Dissection& d, LayoutMode mode,
                           std::optional<long long> density_override = std::nullopt);

// Axis-aligned dissection square at a given level.
struct SquareRef {
    int level = 0;
    long long x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

SquareRef square_at(const Dissection& d, int level, long long ix, long long iy);

// A boundary port of a square: a slot plus its orientation relative to the
// square. Restricted slots yield one port; standard slots yield two.
struct Port {
    int slot = -1;
    bool into_square = true;
};

// Ports in a fixed cyclic walk order: south side west->east, east side
// south->north, north side east->west, west side north->south.
std::vector<Port> boundary_ports(const PortalLayout& layout, const SquareRef& sq);

// Slots on the shared edges between the four children of a square.
std::vector<int> inner_slots(const PortalLayout& layout, const SquareRef& sq);

// Euclidean distance between two directed ports of a square; the restricted
// layout guarantees >= eta(level) for any (in, out) pair.
double min_in_square_traversal(const PortalLayout& layout, const SquareRef& sq, int in_slot,
                               int out_slot);

struct PathSnapResult {
    std::vector<Point> polyline;
    std::vector<double> detours;        // per rerouted crossing
    std::vector<double> allowed;        // matching per-crossing bound (eta or 4*eta)
    std::vector<int> crossing_slots;    // slot id per crossing, in path order
};

// Moves every grid-line crossing of the polyline to a permitted portal slot
// (direction respected in restricted mode). Endpoints are kept.
PathSnapResult snap_path_to_portals(const PortalLayout& layout, const std::vector<Point>& path);

// Nearest slot on the given line to `along`, honouring direction in
// restricted mode (required_dir = +1/-1; 0 = any).
std::optional<int> nearest_slot_on_line(const PortalLayout& layout, int axis, long long line,
                                        double along, int required_dir,
                                        double forbid_below = -1.0, double forbid_above = -1.0);

}  // namespace qvrp
