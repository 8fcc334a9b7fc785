#include "qvrp/flow_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace qvrp {

bool arcs_cross(const Arc& a, const Arc& b) {
    int a1 = std::min(a.from, a.to), a2 = std::max(a.from, a.to);
    int b1 = std::min(b.from, b.to), b2 = std::max(b.from, b.to);
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;  // shared endpoint
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

bool is_outer_planar(const FlowGraph& g) {
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        const Arc& a = g.arcs[i];
        if (a.from == a.to) return false;
        if (a.from < 0 || a.to < 0 || a.from >= g.portal_count || a.to >= g.portal_count)
            return false;
        for (std::size_t j = i + 1; j < g.arcs.size(); ++j) {
            if (g.arcs[i] == g.arcs[j]) return false;
            if (arcs_cross(a, g.arcs[j])) return false;
        }
    }
    return true;
}

std::string encode(const FlowGraph& g) {
    if (!is_outer_planar(g)) throw std::invalid_argument("encode: graph is not outer-planar");
    std::string out;
    // Open events at portal p: arcs whose earlier endpoint (in walk order) is p.
    // Farther-reaching arcs open first so that closings are LIFO; an
    // antiparallel pair at the same span opens the clockwise arc ('1') first.
    struct Open {
        int close_at;
        bool outgoing;  // tail at the opening portal
    };
    std::vector<std::vector<Open>> opens(g.portal_count);
    for (const Arc& a : g.arcs) {
        int lo = std::min(a.from, a.to), hi = std::max(a.from, a.to);
        opens[lo].push_back({hi, a.from == lo});
    }
    for (auto& v : opens) {
        std::sort(v.begin(), v.end(), [](const Open& x, const Open& y) {
            if (x.close_at != y.close_at) return x.close_at > y.close_at;
            return x.outgoing > y.outgoing;  // '1' before '2' on ties
        });
    }
    std::vector<int> close_count(g.portal_count, 0);
    for (const Arc& a : g.arcs) close_count[std::max(a.from, a.to)]++;
    for (int p = 0; p < g.portal_count; ++p) {
        out.append(close_count[p], '3');
        for (const Open& o : opens[p]) out.push_back(o.outgoing ? '1' : '2');
        out.push_back('0');
    }
    return out;
}

FlowGraph decode(const std::string& s, int portal_count) {
    FlowGraph g;
    g.portal_count = portal_count;
    struct Open {
        int portal;
        bool outgoing;
    };
    std::vector<Open> stack;
    int portal = 0;
    for (char ch : s) {
        switch (ch) {
            case '0':
                portal++;
                if (portal > portal_count)
                    throw std::invalid_argument("decode: more moves than portals");
                break;
            case '1':
            case '2':
                if (portal >= portal_count)
                    throw std::invalid_argument("decode: event after the final move");
                stack.push_back({portal, ch == '1'});
                break;
            case '3': {
                if (portal >= portal_count)
                    throw std::invalid_argument("decode: event after the final move");
                if (stack.empty()) throw std::invalid_argument("decode: unmatched closure");
                Open o = stack.back();
                stack.pop_back();
                if (o.portal == portal) throw std::invalid_argument("decode: self-loop");
                Arc a = o.outgoing ? Arc{o.portal, portal} : Arc{portal, o.portal};
                g.arcs.push_back(a);
                break;
            }
            default:
                throw std::invalid_argument("decode: symbol outside {0,1,2,3}");
        }
    }
    if (portal != portal_count) throw std::invalid_argument("decode: move count != portal count");
    if (!stack.empty()) throw std::invalid_argument("decode: unclosed arc");
    std::sort(g.arcs.begin(), g.arcs.end());
    for (std::size_t i = 1; i < g.arcs.size(); ++i)
        if (g.arcs[i] == g.arcs[i - 1])
            throw std::invalid_argument("decode: duplicate arc in one direction");
    return g;
}

namespace {

void enumerate_rec(FlowGraph& g, const std::vector<Arc>& candidates, std::size_t next,
                   long long cap, long long& count,
                   const std::function<void(const FlowGraph&)>& visit) {
    if (count >= cap) throw CapExceeded("enumerate_flow_graphs: cap exceeded");
    count++;
    visit(g);
    for (std::size_t i = next; i < candidates.size(); ++i) {
        bool crosses = false;
        for (const Arc& a : g.arcs) {
            if (arcs_cross(a, candidates[i])) {
                crosses = true;
                break;
            }
        }
        if (crosses) continue;
        g.arcs.push_back(candidates[i]);
        enumerate_rec(g, candidates, i + 1, cap, count, visit);
        g.arcs.pop_back();
    }
}

}  // namespace

void enumerate_flow_graphs(int portal_count, long long cap,
                           const std::function<void(const FlowGraph&)>& visit) {
    if (portal_count < 1) throw std::invalid_argument("enumerate_flow_graphs: K < 1");
    std::vector<Arc> candidates;
    for (int i = 0; i < portal_count; ++i)
        for (int j = 0; j < portal_count; ++j)
            if (i != j) candidates.push_back({i, j});
    FlowGraph g;
    g.portal_count = portal_count;
    long long count = 0;
    enumerate_rec(g, candidates, 0, cap, count, visit);
}

FlowGraph sample_flow_graph(int portal_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Arc> candidates;
    for (int i = 0; i < portal_count; ++i)
        for (int j = 0; j < portal_count; ++j)
            if (i != j) candidates.push_back({i, j});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    FlowGraph g;
    g.portal_count = portal_count;
    std::uniform_int_distribution<int> want(0, 4 * portal_count - 6);
    int target = want(rng);
    for (const Arc& c : candidates) {
        if (static_cast<int>(g.arcs.size()) >= target) break;
        bool bad = false;
        for (const Arc& a : g.arcs) {
            if (a == c || arcs_cross(a, c)) {
                bad = true;
                break;
            }
        }
        if (!bad) g.arcs.push_back(c);
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

double paper_alpha(long long n, double epsilon) {
    double rho = std::floor(std::log2(static_cast<double>(n) / epsilon));
    double a2 = 1.0 + epsilon * std::log1p(epsilon * epsilon) / (8.0 * rho * rho);
    return std::sqrt(a2);
}

bool RoundingSet::contains(long long v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

RoundingSet build_rounding_set(long long n, double epsilon,
                               std::optional<double> alpha_override) {
    if (n < 1) throw std::invalid_argument("build_rounding_set: n < 1");
    RoundingSet f;
    f.n = n;
    if (alpha_override) {
        if (*alpha_override <= 1.0)
            throw std::invalid_argument("build_rounding_set: alpha must exceed 1");
        f.alpha = *alpha_override;
    } else {
        f.alpha = paper_alpha(n, epsilon);
    }
    std::set<long long> vals = {0, 1, n};
    double pow = 1.0;
    int i = 0;
    while (true) {
        long long v = static_cast<long long>(std::floor(pow));
        if (v >= n) {
            f.n_f = i;
            break;
        }
        vals.insert(v);
        pow *= f.alpha;
        ++i;
        if (i > 4000000) throw std::runtime_error("build_rounding_set: alpha too close to 1");
    }
    f.values.assign(vals.begin(), vals.end());
    return f;
}

long long round_down_to_F(long long v, const RoundingSet& f) {
    if (v < 0) throw std::invalid_argument("round_down_to_F: negative flow");
    auto it = std::upper_bound(f.values.begin(), f.values.end(), v);
    return *std::prev(it);
}

Configuration derive_configuration(const FlowGraph& g, const FlowLabeling& labels) {
    if (labels.value.size() != g.arcs.size())
        throw std::invalid_argument("derive_configuration: labels do not cover all arcs");
    Configuration cfg;
    cfg.in_flow.assign(g.portal_count, 0);
    cfg.out_flow.assign(g.portal_count, 0);
    std::vector<int> parent(g.portal_count);
    for (int i = 0; i < g.portal_count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        long long v = labels.value[i];
        if (v <= 0) throw std::invalid_argument("derive_configuration: flow values are positive");
        cfg.out_flow[g.arcs[i].from] += v;
        cfg.in_flow[g.arcs[i].to] += v;
        parent[find(g.arcs[i].from)] = find(g.arcs[i].to);
    }
    std::map<int, std::vector<int>> comp;
    for (int p = 0; p < g.portal_count; ++p) {
        if (cfg.in_flow[p] == 0 && cfg.out_flow[p] == 0) continue;  // untouched
        comp[find(p)].push_back(p);
        cfg.flow_value += cfg.in_flow[p];
    }
    for (auto& [root, members] : comp) cfg.components.push_back(members);
    long long total_out = 0;
    for (long long v : cfg.out_flow) total_out += v;
    if (total_out != cfg.flow_value)
        throw std::logic_error("derive_configuration: flow conservation violated");
    return cfg;
}

}  // namespace qvrp
