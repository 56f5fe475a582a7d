#include "qc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>

#include "qc/errors.hpp"

namespace qc::verify {

bool hamiltonian_bitmask_dp(const SimpleGraph& g, std::vector<uint32_t>* witness) {
    const uint32_t n = g.n();
    if (n > 24) throw ParamError("bitmask DP capped at n <= 24");
    if (n < 3) return false;
    std::vector<uint32_t> adj(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.neighbors(v)) adj[v] |= 1u << w;

    const uint32_t full = (1u << n) - 1;
    // dp[mask] = endpoints of simple paths from 0 covering mask.
    std::vector<uint32_t> dp(full + 1, 0);
    dp[1] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        uint32_t ends = dp[mask];
        while (ends) {
            uint32_t end = static_cast<uint32_t>(__builtin_ctz(ends));
            ends &= ends - 1;
            uint32_t nexts = adj[end] & ~mask;
            while (nexts) {
                uint32_t w = static_cast<uint32_t>(__builtin_ctz(nexts));
                nexts &= nexts - 1;
                dp[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    uint32_t closers = dp[full] & adj[0];
    if (!closers) return false;
    if (witness) {
        witness->clear();
        uint32_t end = static_cast<uint32_t>(__builtin_ctz(closers));
        uint32_t mask = full;
        std::vector<uint32_t> rev;
        while (mask != 1) {
            rev.push_back(end);
            uint32_t pm = mask & ~(1u << end);
            uint32_t prevs = dp[pm] & adj[end];
            end = static_cast<uint32_t>(__builtin_ctz(prevs));
            mask = pm;
        }
        rev.push_back(0);
        witness->assign(rev.rbegin(), rev.rend());
    }
    return true;
}

HamResult hamiltonian_backtracking(const SimpleGraph& g, double time_budget_s) {
    const uint32_t n = g.n();
    if (n > 64) throw ParamError("backtracking capped at n <= 64");
    HamResult res;
    if (n < 3) return res;
    for (uint32_t v = 0; v < n; ++v)
        if (g.degree(v) < 2) return res;

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(time_budget_s);
    uint64_t ticks = 0;
    bool timed_out = false;

    std::vector<uint32_t> path{0};
    uint64_t visited = 1;

    // Unvisited region must stay connected to the path end and every
    // unvisited vertex must keep two usable connections.
    auto prune = [&](uint32_t end) -> bool {
        uint64_t frontier = 1ULL << end, seen = frontier;
        while (frontier) {
            uint32_t v = static_cast<uint32_t>(__builtin_ctzll(frontier));
            frontier &= frontier - 1;
            for (uint32_t w : g.neighbors(v)) {
                uint64_t bit = 1ULL << w;
                if ((visited & bit) && w != 0) continue;
                if (seen & bit) continue;
                seen |= bit;
                frontier |= bit;
            }
        }
        for (uint32_t v = 0; v < n; ++v) {
            uint64_t bit = 1ULL << v;
            if (visited & bit) continue;
            if (!(seen & bit)) return true;
            uint32_t avail = 0;
            for (uint32_t w : g.neighbors(v))
                if (!(visited & (1ULL << w)) || w == end || w == 0) ++avail;
            if (avail < 2) return true;
        }
        return false;
    };

    std::function<bool()> dfs = [&]() -> bool {
        if ((++ticks & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        uint32_t end = path.back();
        if (path.size() == n) return g.has_edge(end, 0);
        if (prune(end)) return false;
        for (uint32_t w : g.neighbors(end)) {
            if (visited & (1ULL << w)) continue;
            visited |= 1ULL << w;
            path.push_back(w);
            if (dfs()) return true;
            path.pop_back();
            visited &= ~(1ULL << w);
            if (timed_out) return false;
        }
        return false;
    };

    if (dfs()) {
        res.status = Ternary::Yes;
        res.cycle = path;
    } else if (timed_out) {
        res.status = Ternary::Unknown;
    }
    return res;
}

HamResult is_hamiltonian_exact(const SimpleGraph& g, double time_budget_s) {
    if (g.n() <= 24) {
        HamResult res;
        std::vector<uint32_t> cyc;
        res.status = hamiltonian_bitmask_dp(g, &cyc) ? Ternary::Yes : Ternary::No;
        res.cycle = std::move(cyc);
        return res;
    }
    if (g.n() <= 64) return hamiltonian_backtracking(g, time_budget_s);
    throw ParamError("exact Hamiltonicity capped at n <= 64");
}

CertificateDiag validate_certificate(const HamiltonCycle& c, const Oracle& o) {
    CertificateDiag d;
    const uint32_t n = o.n();
    if (c.cycle.size() != n) {
        d.reason = "cycle has " + std::to_string(c.cycle.size()) + " vertices, expected " +
                   std::to_string(n);
        return d;
    }
    if (n < 3) {
        d.reason = "cycle needs at least 3 vertices";
        return d;
    }
    std::vector<uint8_t> seen(n, 0);
    for (uint32_t v : c.cycle) {
        if (v >= n) {
            d.reason = "vertex out of range";
            return d;
        }
        if (seen[v]++) {
            d.reason = "vertex " + std::to_string(v) + " repeated";
            return d;
        }
    }
    for (size_t i = 0; i < c.cycle.size(); ++i) {
        uint32_t u = c.cycle[i], v = c.cycle[(i + 1) % c.cycle.size()];
        auto ans = o.answer_of(Pair(u, v));
        if (!ans) {
            d.reason = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                       ") was never queried";
            return d;
        }
        if (!*ans) {
            d.reason = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                       ") answered negative";
            return d;
        }
    }
    d.ok = true;
    return d;
}

namespace {

// Exhaustive two-ended search over paths that contain e as an edge,
// memoised on (endpoints, visited mask). target_len > 0 allows early exit.
struct ThroughSearch {
    const SimpleGraph& h;
    Pair e;
    uint32_t n;
    std::vector<uint32_t> adj;
    std::vector<uint64_t> seen;  // state bitset
    ThroughE out;
    uint32_t target_len;
    bool done = false;
    std::vector<uint32_t> left, right;  // current path halves: left ... e.u e.v ... right

    ThroughSearch(const SimpleGraph& h_, Pair e_, uint32_t target)
        : h(h_), e(e_), n(h_.n()), adj(n, 0), target_len(target) {
        if (n > 16) throw ParamError("through-e search capped at n <= 16");
        for (uint32_t v = 0; v < n; ++v)
            for (uint32_t w : h.neighbors(v)) adj[v] |= 1u << w;
        const uint64_t states = static_cast<uint64_t>(n) * n << n;
        seen.assign((states + 63) / 64, 0);
    }

    bool mark(uint32_t a, uint32_t b, uint32_t mask) {
        if (a > b) std::swap(a, b);
        uint64_t idx = ((static_cast<uint64_t>(a) * n) + b) << n | mask;
        uint64_t& w = seen[idx >> 6];
        uint64_t bit = 1ULL << (idx & 63);
        if (w & bit) return false;
        w |= bit;
        return true;
    }

    std::vector<uint32_t> snapshot() const {
        std::vector<uint32_t> p(left.rbegin(), left.rend());
        p.push_back(e.u);
        p.push_back(e.v);
        p.insert(p.end(), right.begin(), right.end());
        return p;
    }

    void visit(uint32_t a, uint32_t b, uint32_t mask) {
        if (done || !mark(a, b, mask)) return;
        uint32_t len = static_cast<uint32_t>(__builtin_popcount(mask)) - 1;
        if (len > out.max_len) {
            out.max_len = len;
            out.max_path = snapshot();
        }
        if (mask == (1u << n) - 1 && n >= 3 && ((adj[a] >> b) & 1)) out.ham_cycle = true;
        if (out.ham_cycle && target_len > 0) { done = true; return; }
        if (target_len > 0 && len >= target_len) { done = true; return; }

        uint32_t ext = adj[a] & ~mask;
        while (ext && !done) {
            uint32_t w = static_cast<uint32_t>(__builtin_ctz(ext));
            ext &= ext - 1;
            left.push_back(w);
            visit(w, b, mask | (1u << w));
            left.pop_back();
        }
        ext = adj[b] & ~mask;
        while (ext && !done) {
            uint32_t w = static_cast<uint32_t>(__builtin_ctz(ext));
            ext &= ext - 1;
            right.push_back(w);
            visit(a, w, mask | (1u << w));
            right.pop_back();
        }
    }
};

}  // namespace

ThroughE max_path_through(const SimpleGraph& h, Pair e) {
    if (e.v >= h.n()) throw ParamError("e endpoints out of range");
    ThroughSearch s(h, e, 0);
    s.visit(e.u, e.v, (1u << e.u) | (1u << e.v));
    return s.out;
}

namespace {
ThroughE max_path_through_bounded(const SimpleGraph& h, Pair e, uint32_t target) {
    ThroughSearch s(h, e, target);
    s.visit(e.u, e.v, (1u << e.u) | (1u << e.v));
    return s.out;
}
}  // namespace

std::set<std::pair<uint32_t, uint32_t>> brute_force_boosters(const SimpleGraph& h, Pair e) {
    const uint32_t n = h.n();
    if (n > 12) throw ParamError("brute-force boosters capped at n <= 12");
    ThroughE base = max_path_through(h, e);
    if (base.ham_cycle)
        throw ParamError("h u {e} already has a Hamilton cycle using e");

    std::set<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = a + 1; b < n; ++b) {
            if (h.has_edge(a, b)) continue;
            if (a == e.u && b == e.v) continue;
            SimpleGraph hf = h;
            hf.add_edge(a, b);
            ThroughE r = max_path_through_bounded(hf, e, base.max_len + 1);
            if (r.ham_cycle || r.max_len > base.max_len) out.emplace(a, b);
        }
    }
    return out;
}

LowerBoundReport lower_bound_experiment(const SimpleGraph& g) {
    const uint32_t n = g.n();
    if (n > 16) throw ParamError("lower-bound experiment capped at n <= 16");
    if (n < 3) throw ParamError("need at least 3 vertices");

    // Hamilton-path table via one DP sweep per start vertex.
    std::vector<uint32_t> adj(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.neighbors(v)) adj[v] |= 1u << w;
    const uint32_t full = (1u << n) - 1;
    std::vector<std::vector<uint8_t>> ham_path(n, std::vector<uint8_t>(n, 0));
    std::vector<uint32_t> dp(full + 1);
    for (uint32_t s = 0; s < n; ++s) {
        std::fill(dp.begin(), dp.end(), 0);
        dp[1u << s] = 1u << s;
        for (uint32_t mask = 1; mask <= full; ++mask) {
            uint32_t ends = dp[mask];
            if (!ends || !(mask & (1u << s))) continue;
            while (ends) {
                uint32_t end = static_cast<uint32_t>(__builtin_ctz(ends));
                ends &= ends - 1;
                uint32_t nexts = adj[end] & ~mask;
                while (nexts) {
                    uint32_t w = static_cast<uint32_t>(__builtin_ctz(nexts));
                    nexts &= nexts - 1;
                    dp[mask | (1u << w)] |= 1u << w;
                }
            }
        }
        for (uint32_t t = 0; t < n; ++t)
            if (dp[full] & (1u << t)) ham_path[s][t] = 1;
    }

    // g Hamiltonian iff a Hamilton path from 0 closes on an edge.
    for (uint32_t t : g.neighbors(0))
        if (ham_path[0][t]) throw ParamError("graph is Hamiltonian");

    LowerBoundReport rep;
    rep.k = static_cast<int64_t>(g.m()) - static_cast<int64_t>(n);

    std::vector<uint8_t> in_a(n, 0);
    uint32_t deg1 = 0;
    bool isolated = false;
    for (uint32_t v = 0; v < n; ++v) {
        if (g.degree(v) != 2) {
            in_a[v] = 1;
            rep.A.push_back(v);
        }
        if (g.degree(v) == 1) ++deg1;
        if (g.degree(v) == 0) isolated = true;
    }
    std::vector<uint8_t> in_na(n, 0);
    for (uint32_t v : rep.A)
        for (uint32_t w : g.neighbors(v))
            if (!in_na[w]) {
                in_na[w] = 1;
                rep.NA.push_back(w);
            }
    std::sort(rep.NA.begin(), rep.NA.end());

    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            // g + ab is Hamiltonian iff the new edge closes a Hamilton path.
            if (ham_path[a][b]) {
                rep.closing_pairs.emplace_back(a, b);
                bool a_in = in_a[a] || in_na[a];
                bool b_in = in_a[b] || in_na[b];
                if (!a_in || !b_in) rep.closing_inside_a_na = false;
            }
        }
    }

    rep.degree_precondition = (deg1 <= 2) && !isolated;
    if (rep.degree_precondition)
        rep.a_bound_holds = static_cast<int64_t>(rep.A.size()) <= 2 * rep.k + 4;
    return rep;
}

}  // namespace qc::verify
