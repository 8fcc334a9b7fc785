#include "qvrp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qvrp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> distance_matrix(const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = distance(pts[i], pts[j]);
    return d;
}

}  // namespace

HeldKarpResult held_karp(const std::vector<Point>& pts, TspVariant variant,
                         const OracleBudget& budget) {
    int n = static_cast<int>(pts.size());
    if (n > budget.max_held_karp) throw BudgetExceeded("held_karp: n exceeds budget");
    HeldKarpResult res;
    if (n == 0) return res;
    if (n == 1) {
        res.order = {0};
        return res;
    }
    auto d = distance_matrix(pts);

    if (variant == TspVariant::Tour) {
        // dp[mask][j]: cheapest route 0 -> (mask) -> j, 0 in mask.
        int full = 1 << n;
        std::vector<std::vector<double>> dp(full, std::vector<double>(n, kInf));
        std::vector<std::vector<int>> par(full, std::vector<int>(n, -1));
        dp[1][0] = 0.0;
        for (int mask = 1; mask < full; ++mask) {
            if (!(mask & 1)) continue;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1 << j)) || dp[mask][j] == kInf) continue;
                for (int k = 1; k < n; ++k) {
                    if (mask & (1 << k)) continue;
                    int nm = mask | (1 << k);
                    double nc = dp[mask][j] + d[j][k];
                    if (nc < dp[nm][k]) {
                        dp[nm][k] = nc;
                        par[nm][k] = j;
                    }
                }
            }
        }
        double best = kInf;
        int bestj = -1;
        for (int j = 1; j < n; ++j) {
            double c = dp[full - 1][j] + d[j][0];
            if (c < best) {
                best = c;
                bestj = j;
            }
        }
        res.cost = best;
        int mask = full - 1, j = bestj;
        while (j != -1) {
            res.order.push_back(j);
            int pj = par[mask][j];
            mask ^= (1 << j);
            j = pj;
        }
        std::reverse(res.order.begin(), res.order.end());
        return res;
    }

    // Path variant: endpoints are pts.front() and pts.back().
    int s = 0, t = n - 1;
    int full = 1 << n;
    std::vector<std::vector<double>> dp(full, std::vector<double>(n, kInf));
    std::vector<std::vector<int>> par(full, std::vector<int>(n, -1));
    dp[1 << s][s] = 0.0;
    for (int mask = 1; mask < full; ++mask) {
        if (!(mask & (1 << s))) continue;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1 << j)) || dp[mask][j] == kInf) continue;
            if (j == t) continue;  // t must come last
            for (int k = 0; k < n; ++k) {
                if (mask & (1 << k)) continue;
                if (k == t && mask != full - 1 - (1 << t)) continue;
                int nm = mask | (1 << k);
                double nc = dp[mask][j] + d[j][k];
                if (nc < dp[nm][k]) {
                    dp[nm][k] = nc;
                    par[nm][k] = j;
                }
            }
        }
    }
    res.cost = dp[full - 1][t];
    int mask = full - 1, j = t;
    while (j != -1) {
        res.order.push_back(j);
        int pj = par[mask][j];
        mask ^= (1 << j);
        j = pj;
    }
    std::reverse(res.order.begin(), res.order.end());
    return res;
}

HeldKarpResult held_karp_path(const Point& a, const Point& b, const std::vector<Point>& interior,
                              const OracleBudget& budget) {
    std::vector<Point> pts;
    pts.reserve(interior.size() + 2);
    pts.push_back(a);
    for (const auto& p : interior) pts.push_back(p);
    pts.push_back(b);
    HeldKarpResult raw = held_karp(pts, TspVariant::Path, budget);
    HeldKarpResult res;
    res.cost = raw.cost;
    for (int idx : raw.order) {
        if (idx == 0 || idx == static_cast<int>(pts.size()) - 1) continue;
        res.order.push_back(idx - 1);
    }
    return res;
}

namespace {

// Enumerate set partitions of {0..n-1} into parts of size <= cap; per part, the
// optimal ordering is a Held-Karp tour through the depot.
struct CvrpSearch {
    const CvrpInstance& inst;
    const OracleBudget& budget;
    std::vector<std::vector<int>> parts;
    double best = kInf;
    CvrpSolution best_sol;

    explicit CvrpSearch(const CvrpInstance& i, const OracleBudget& b) : inst(i), budget(b) {}

    double part_cost(const std::vector<int>& part) {
        std::vector<Point> pts;
        pts.push_back(inst.depot);
        for (int idx : part) pts.push_back(inst.points[idx]);
        return held_karp(pts, TspVariant::Tour, budget).cost;
    }

    std::vector<int> part_order(const std::vector<int>& part) {
        std::vector<Point> pts;
        pts.push_back(inst.depot);
        for (int idx : part) pts.push_back(inst.points[idx]);
        auto hk = held_karp(pts, TspVariant::Tour, budget);
        std::vector<int> order;
        for (int i : hk.order)
            if (i != 0) order.push_back(part[i - 1]);
        return order;
    }

    void rec(int next, double acc) {
        if (acc >= best) return;
        if (next == inst.n()) {
            best = acc;
            best_sol.tours.clear();
            for (const auto& part : parts) best_sol.tours.push_back({part_order(part)});
            best_sol.cost = acc;
            return;
        }
        // Point `next` joins an existing part or opens a new one; recursion may
        // grow `parts`, so iterate over the current size by index.
        std::size_t npart = parts.size();
        for (std::size_t pi = 0; pi < npart; ++pi) {
            if (static_cast<int>(parts[pi].size()) >= inst.capacity) continue;
            parts[pi].push_back(next);
            double c = 0.0;
            for (const auto& p : parts) c += part_cost(p);
            if (c < best) rec(next + 1, c);
            parts[pi].pop_back();
        }
        parts.push_back({next});
        double c = 0.0;
        for (const auto& p : parts) c += part_cost(p);
        if (c < best) rec(next + 1, c);
        parts.pop_back();
    }
};

}  // namespace

CvrpSolution brute_force_cvrp(const CvrpInstance& inst, const OracleBudget& budget) {
    if (inst.n() > budget.max_points) throw BudgetExceeded("brute_force_cvrp: n exceeds budget");
    if (inst.n() == 0) return {};
    CvrpSearch search(inst, budget);
    search.rec(0, 0.0);
    return search.best_sol;
}

namespace {

struct MPathsSearch {
    const MPathsInstance& inst;
    const OracleBudget& budget;
    std::vector<std::vector<int>> groups;  // one per path
    double best = kInf;
    MPathsSolution best_sol;
    double lower_bound = 0.0;

    MPathsSearch(const MPathsInstance& i, const OracleBudget& b) : inst(i), budget(b) {
        groups.resize(inst.m);
        lower_bound = inst.m * distance(inst.a, inst.b);
    }

    double group_cost(const std::vector<int>& g) {
        std::vector<Point> interior;
        for (int idx : g) interior.push_back(inst.points[idx]);
        return held_karp_path(inst.a, inst.b, interior, budget).cost;
    }

    std::vector<int> group_order(const std::vector<int>& g) {
        std::vector<Point> interior;
        for (int idx : g) interior.push_back(inst.points[idx]);
        auto hk = held_karp_path(inst.a, inst.b, interior, budget);
        std::vector<int> order;
        for (int i : hk.order) order.push_back(g[i]);
        return order;
    }

    void finalize() {
        double c = 0.0;
        for (const auto& g : groups) c += group_cost(g);
        if (c >= best) return;
        best = c;
        best_sol.paths.clear();
        for (const auto& g : groups) best_sol.paths.push_back({group_order(g), {}});
        best_sol.cost = c;
    }

    void rec(int next) {
        if (next == inst.n()) {
            finalize();
            return;
        }
        // Symmetry break: point may only open group k if groups 0..k-1 are nonempty.
        for (int k = 0; k < inst.m; ++k) {
            groups[k].push_back(next);
            rec(next + 1);
            groups[k].pop_back();
            if (groups[k].empty()) break;
        }
    }
};

}  // namespace

MPathsSolution brute_force_mpaths(const MPathsInstance& inst, const OracleBudget& budget) {
    if (inst.n() > budget.max_points) throw BudgetExceeded("brute_force_mpaths: n exceeds budget");
    if (inst.m > budget.max_m) throw BudgetExceeded("brute_force_mpaths: m exceeds budget");
    MPathsSearch search(inst, budget);
    if (inst.n() == 0) {
        MPathsSolution sol;
        for (int i = 0; i < inst.m; ++i) sol.paths.push_back({{}, {}});
        sol.cost = inst.m * distance(inst.a, inst.b);
        return sol;
    }
    search.rec(0);
    return search.best_sol;
}

CvrpSolution itp(const CvrpInstance& inst, const OracleBudget& budget) {
    int n = inst.n();
    if (n == 0) return {};
    auto hk = held_karp(inst.points, TspVariant::Tour, budget);
    const std::vector<int>& order = hk.order;
    int c = inst.capacity;

    CvrpSolution best;
    best.cost = kInf;
    for (int offset = 0; offset < std::min(c, n); ++offset) {
        CvrpSolution sol;
        // Cut the order into runs of <= c points, first run shortened by offset.
        std::vector<Tour> tours;
        int pos = 0;
        int first_len = (offset == 0) ? c : offset;
        while (pos < n) {
            int take = (pos == 0) ? std::min(first_len, n) : std::min(c, n - pos);
            Tour t;
            for (int j = pos; j < pos + take; ++j) t.visits.push_back(order[j]);
            tours.push_back(std::move(t));
            pos += take;
        }
        sol.tours = std::move(tours);
        sol.cost = cvrp_solution_cost(inst, sol);
        if (sol.cost < best.cost) best = sol;
    }
    return best;
}

}  // namespace qvrp
