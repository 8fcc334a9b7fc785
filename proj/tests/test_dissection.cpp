#include <random>
#include <set>

#include "doctest.h"
#include "qvrp/dissection.hpp"

using namespace qvrp;

namespace {

MPathsInstance unit_instance(int n) {
    MPathsInstance inst;
    inst.square_origin = {0, 0};
    inst.side = 1.0;
    inst.a = {0, 0.25};
    inst.b = {0, 0.75};
    inst.m = 1;
    inst.epsilon = 0.5;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < n; ++i) inst.points.push_back({u(rng), u(rng)});
    return inst;
}

// All squares of every level of the dissection.
std::vector<SquareRef> all_squares(const Dissection& d) {
    std::vector<SquareRef> out;
    for (int level = 0; level <= d.rho; ++level) {
        long long cnt = 1LL << level;
        for (long long ix = 0; ix < cnt; ++ix)
            for (long long iy = 0; iy < cnt; ++iy) out.push_back(square_at(d, level, ix, iy));
    }
    return out;
}

}  // namespace

TEST_CASE("dissection parameters follow rho = floor(log2(n/eps))") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);
    CHECK(d.rho == 4);
    CHECK(d.L1 == 8);
    CHECK(d.L0 == 16);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto d2 = build_dissection(inst, seed);
        CHECK(d2.shift_x >= 1);
        CHECK(d2.shift_x <= d2.L1);
        CHECK(d2.shift_y >= 1);
        CHECK(d2.shift_y <= d2.L1);
        auto d3 = build_dissection(inst, seed);
        CHECK(d3.shift_x == d2.shift_x);  // deterministic given the seed
        CHECK(d3.shift_y == d2.shift_y);
    }
    CHECK(d.level_side(d.rho) == 1);  // grid cells are unit squares
}

TEST_CASE("line levels") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);  // L0 = 16
    CHECK(d.line_level(0) == 0);
    CHECK(d.line_level(16) == 0);
    CHECK(d.line_level(8) == 1);
    CHECK(d.line_level(4) == 2);
    CHECK(d.line_level(12) == 2);
    CHECK(d.line_level(1) == 4);
    CHECK(d.line_level(7) == 4);
}

TEST_CASE("snap_points_to_cells") {
    auto inst = unit_instance(4);
    auto d = build_dissection(inst, 1);
    SUBCASE("already centered point is unchanged") {
        auto snapped = snap_points_to_cells(d, {{2.5, 3.5}});
        CHECK(snapped.cell_centers[0] == Point{2.5, 3.5});
        CHECK(snapped.displacement[0] == doctest::Approx(0.0));
    }
    SUBCASE("corner point moves half a diagonal") {
        auto snapped = snap_points_to_cells(d, {{2.0, 3.0}});
        CHECK(snapped.displacement[0] == doctest::Approx(std::sqrt(2.0) / 2.0));
    }
    SUBCASE("total displacement <= sqrt(2) * n") {
        std::vector<Point> pts;
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> u(0.0, double(d.L0));
        for (int i = 0; i < 40; ++i) pts.push_back({u(rng), u(rng)});
        auto snapped = snap_points_to_cells(d, pts);
        CHECK(snapped.total_displacement <= std::sqrt(2.0) * 40.0);
    }
}

TEST_CASE("portal counts match the closed forms") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);  // rho = 4
    auto lay = build_portals(d, LayoutMode::Standard);
    CHECK(lay.density == 8);  // rho / eps = 4 * 2

    // Level-i line carries 1 + 2^{i+2} * rho/eps equally spaced positions.
    for (int level = 0; level <= d.rho; ++level) {
        CHECK(lay.portals_per_line(level) == 1 + (1LL << (level + 2)) * lay.density);
    }
    CHECK(lay.nport() == 4 * lay.density + 1);

    // Spec example: eps = 1/2, rho = 4, level-1 line -> 65 positions, eta = 0.25.
    CHECK(lay.portals_per_line(1) == 65);
    CHECK(lay.eta(1) == doctest::Approx(0.25));
    CHECK(lay.nport() == 33);

    // Count distinct positions actually generated on a level-1 line (x = 8).
    auto it = lay.line_slots.find({0, 8});
    REQUIRE(it != lay.line_slots.end());
    std::set<long long> positions;
    for (int id : it->second) positions.insert(lay.slots[id].pos);
    CHECK(static_cast<long long>(positions.size()) == lay.portals_per_line(1));
}

TEST_CASE("eta halves per level and matches the formula") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);
    auto lay = build_portals(d, LayoutMode::Restricted);
    double eps = 0.5;
    for (int i = 0; i <= d.rho; ++i) {
        double expected = eps * std::pow(2.0, d.rho - i - 2) / d.rho;
        CHECK(lay.eta(i) == doctest::Approx(expected));
        if (i > 0) CHECK(lay.eta(i) == doctest::Approx(lay.eta(i - 1) / 2.0));
    }
}

TEST_CASE("restricted mode: every surviving slot is directed, intersections keep 3 or 4") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);
    auto lay = build_portals(d, LayoutMode::Restricted);
    for (const Slot& s : lay.slots) CHECK(s.dir != 0);

    // Group sided slots by geometric intersection point.
    std::map<std::pair<long long, long long>, int> survivors;
    for (const Slot& s : lay.slots) {
        if (s.side == 0) continue;
        long long along = s.pos / lay.Q;  // integer because sided slots sit on a perp line
        auto key = s.axis == 0 ? std::make_pair(s.line, along) : std::make_pair(along, s.line);
        survivors[key]++;
    }
    for (const auto& [pt, cnt] : survivors) {
        bool interior_x = pt.first > 0 && pt.first < d.L0;
        bool interior_y = pt.second > 0 && pt.second < d.L0;
        if (!interior_x || !interior_y) continue;  // B0 boundary intersections truncated
        int lx = d.line_level(pt.first), ly = d.line_level(pt.second);
        if (lx == ly) {
            CHECK(cnt == 4);  // same-level crossing keeps all four marked crossings
        } else {
            CHECK(cnt == 3);  // mixed-level crossing loses one crossing of the coarser line
        }
    }
}

TEST_CASE("stay-in-square: directed portal pairs of a square are eta(level) apart") {
    // Exhaustive over rho <= 5, eps = 1/2, default density; slots on the B0
    // boundary are excluded (no path may cross out of B0).
    for (int n : {2, 8, 20}) {
        auto inst = unit_instance(n);
        for (std::uint64_t seed : {0ULL, 7ULL}) {
            auto d = build_dissection(inst, seed);
            REQUIRE(d.rho <= 5);
            auto lay = build_portals(d, LayoutMode::Restricted);
            for (const auto& sq : all_squares(d)) {
                auto ports = boundary_ports(lay, sq);
                double eta = lay.eta(sq.level);
                for (const Port& pin : ports) {
                    if (!pin.into_square) continue;
                    const Slot& si = lay.slots[pin.slot];
                    if (si.line == 0 || si.line == d.L0) continue;
                    for (const Port& pout : ports) {
                        if (pout.into_square) continue;
                        const Slot& so = lay.slots[pout.slot];
                        if (so.line == 0 || so.line == d.L0) continue;
                        double dist = min_in_square_traversal(lay, sq, pin.slot, pout.slot);
                        CHECK(dist >= eta - 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("boundary walk order and corner membership") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 3);
    auto lay = build_portals(d, LayoutMode::Restricted);
    auto sq = square_at(d, d.rho, 3, 3);  // a grid cell
    auto ports = boundary_ports(lay, sq);
    CHECK(!ports.empty());
    // Every slot lies on the square's boundary.
    for (const Port& p : ports) {
        Point pt = lay.slot_point(p.slot);
        bool on = (pt.x == sq.x0 || pt.x == sq.x1) ? (pt.y >= sq.y0 && pt.y <= sq.y1)
                                                   : (pt.x >= sq.x0 && pt.x <= sq.x1 &&
                                                      (pt.y == sq.y0 || pt.y == sq.y1));
        CHECK(on);
    }
    // No slot appears twice.
    std::set<int> ids;
    for (const Port& p : ports) CHECK(ids.insert(p.slot).second);
}

TEST_CASE("expected inter-portal distance over random shifts <= eps/4") {
    auto inst = unit_instance(8);
    double eps = inst.epsilon;
    // For a grid line at fixed offset z from B1's corner, average eta over the
    // shift distribution.
    for (long long z : {0LL, 1LL, 3LL}) {
        double acc = 0.0;
        int cnt = 0;
        auto d0 = build_dissection(inst, 0);
        for (long long shift = 1; shift <= d0.L1; ++shift) {
            Dissection d = d0;
            d.shift_x = shift;
            auto lay = build_portals(d, LayoutMode::Restricted);
            long long k = z + shift;
            acc += lay.eta(d.line_level(k));
            cnt++;
        }
        CHECK(acc / cnt <= eps / 4.0 + 1e-12);
    }
}

TEST_CASE("snap_path_to_portals") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 11);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.3, d.L0 - 0.3);

    for (LayoutMode mode : {LayoutMode::Standard, LayoutMode::Restricted}) {
        auto lay = build_portals(d, mode);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Point> path;
            int len = 2 + trial % 5;
            for (int i = 0; i < len; ++i) path.push_back({u(rng), u(rng)});
            auto snapped = snap_path_to_portals(lay, path);
            CHECK(snapped.polyline.front() == path.front());
            CHECK(snapped.polyline.back() == path.back());
            for (std::size_t i = 0; i < snapped.detours.size(); ++i) {
                CHECK(snapped.detours[i] <= snapped.allowed[i] + 1e-12);
            }
        }
    }
}

TEST_CASE("snapping a crossing already at a portal keeps it") {
    auto inst = unit_instance(8);
    auto d = build_dissection(inst, 2);
    auto lay = build_portals(d, LayoutMode::Standard);
    // Cross the vertical line x=8 (level 1) exactly at a portal position.
    auto it = lay.line_slots.find({0, 8});
    REQUIRE(it != lay.line_slots.end());
    const Slot& s = lay.slots[(*it).second[3]];
    double along = double(s.pos) / double(lay.Q);
    std::vector<Point> path = {{7.4, along}, {8.6, along}};
    auto snapped = snap_path_to_portals(lay, path);
    REQUIRE(snapped.detours.size() == 1);
    CHECK(snapped.detours[0] == doctest::Approx(0.0));
}
