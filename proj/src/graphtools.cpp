#include "qc/graphtools.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>

#include "qc/errors.hpp"

namespace qc {

void SimpleGraph::add_edge(uint32_t u, uint32_t v) {
    if (u == v) throw ParamError("no loops in a simple graph");
    if (u >= n() || v >= n()) throw ParamError("edge endpoint out of range");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool SimpleGraph::has_edge(uint32_t u, uint32_t v) const {
    if (u >= n() || v >= n() || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    uint32_t t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::pair<uint32_t, uint32_t>> SimpleGraph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(m_);
    for (uint32_t u = 0; u < n(); ++u)
        for (uint32_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::read_edge_list(std::istream& is) {
    uint32_t n = 0;
    uint64_t m = 0;
    if (!(is >> n >> m)) throw ParamError("bad edge list header");
    SimpleGraph g(n);
    for (uint64_t i = 0; i < m; ++i) {
        uint32_t u, v;
        if (!(is >> u >> v)) throw ParamError("truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

void SimpleGraph::write_edge_list(std::ostream& os) const {
    os << n() << ' ' << m_ << '\n';
    for (const auto& [u, v] : edges()) os << u << ' ' << v << '\n';
}

SimpleGraph SimpleGraph::random(uint32_t n, double p, Rng& rng) {
    SimpleGraph g(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::random_with_edges(uint32_t n, uint64_t m, Rng& rng) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (m > pairs.size()) throw ParamError("too many edges requested");
    rng.shuffle(pairs);
    SimpleGraph g(n);
    for (uint64_t i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

namespace graphtools {

std::vector<uint32_t> min_degree_core(const SimpleGraph& g, uint32_t d) {
    const uint32_t n = g.n();
    std::vector<uint32_t> deg(n);
    std::vector<uint8_t> removed(n, 0);
    std::deque<uint32_t> queue;
    for (uint32_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < d) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : g.neighbors(v)) {
            if (removed[w]) continue;
            if (--deg[w] < d) {
                removed[w] = 1;
                queue.push_back(w);
            }
        }
    }
    // Largest connected component of the survivors.
    std::vector<int32_t> comp(n, -1);
    std::vector<uint32_t> best, cur;
    for (uint32_t s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        cur.clear();
        comp[s] = static_cast<int32_t>(s);
        std::vector<uint32_t> stack{s};
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            cur.push_back(v);
            for (uint32_t w : g.neighbors(v)) {
                if (removed[w] || comp[w] >= 0) continue;
                comp[w] = static_cast<int32_t>(s);
                stack.push_back(w);
            }
        }
        if (cur.size() > best.size()) best = cur;
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::vector<uint32_t>> star_matching(
    const std::vector<std::vector<uint32_t>>& adj_a, uint32_t b_count, uint32_t k) {
    const uint32_t a_count = static_cast<uint32_t>(adj_a.size());
    // Augmenting paths on the blown-up graph: each A-vertex appears k times.
    // match_b[b] = A-vertex currently using b, or -1.
    std::vector<int32_t> match_b(b_count, -1);
    std::vector<uint32_t> stamp(b_count, 0);
    uint32_t round = 0;
    std::vector<uint32_t> owned(a_count, 0);

    // Kuhn-style augmentation with quotas. Stealing a B from its holder
    // forces the holder to re-acquire a replacement, which is exactly an
    // augmenting path in the graph where every A-vertex is duplicated k
    // times.
    std::function<bool(uint32_t)> augment = [&](uint32_t a) -> bool {
        for (uint32_t b : adj_a[a]) {
            if (stamp[b] == round) continue;
            stamp[b] = round;
            int32_t holder = match_b[b];
            if (holder == -1 || augment(static_cast<uint32_t>(holder))) {
                if (holder >= 0) --owned[static_cast<uint32_t>(holder)];
                match_b[b] = static_cast<int32_t>(a);
                ++owned[a];
                return true;
            }
        }
        return false;
    };

    for (uint32_t a = 0; a < a_count; ++a) {
        for (uint32_t need = 0; need < k; ++need) {
            ++round;
            if (!augment(a))
                throw MatchingInfeasible("no disjoint star system of size k=" +
                                         std::to_string(k));
        }
    }
    std::vector<std::vector<uint32_t>> out(a_count);
    for (uint32_t b = 0; b < b_count; ++b)
        if (match_b[b] >= 0) out[static_cast<uint32_t>(match_b[b])].push_back(b);
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

namespace {

// BFS distances inside induced subgraph; -1 = unreached.
std::vector<int32_t> bfs_in(const SimpleGraph& g, const std::vector<uint8_t>& in_s,
                            uint32_t src) {
    std::vector<int32_t> dist(g.n(), -1);
    std::queue<uint32_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        for (uint32_t w : g.neighbors(v)) {
            if (!in_s[w] || dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            q.push(w);
        }
    }
    return dist;
}

}  // namespace

bool diameter_within(const SimpleGraph& g, const std::vector<uint32_t>& S, uint32_t bound) {
    if (S.empty()) return false;
    std::vector<uint8_t> in_s(g.n(), 0);
    for (uint32_t v : S) in_s[v] = 1;
    for (uint32_t src : S) {
        auto dist = bfs_in(g, in_s, src);
        for (uint32_t v : S) {
            if (dist[v] < 0) return false;  // disconnected
            if (static_cast<uint32_t>(dist[v]) > bound) return false;
        }
    }
    return true;
}

std::vector<uint32_t> shortest_path_in(const SimpleGraph& g, const std::vector<uint32_t>& S,
                                       uint32_t u, uint32_t v) {
    std::vector<uint8_t> in_s(g.n(), 0);
    for (uint32_t x : S) in_s[x] = 1;
    if (u >= g.n() || v >= g.n() || !in_s[u] || !in_s[v])
        throw ParamError("path endpoints must lie in S");
    std::vector<int32_t> parent(g.n(), -1);
    std::vector<uint8_t> seen(g.n(), 0);
    std::queue<uint32_t> q;
    seen[u] = 1;
    q.push(u);
    while (!q.empty() && !seen[v]) {
        uint32_t x = q.front();
        q.pop();
        for (uint32_t w : g.neighbors(x)) {
            if (!in_s[w] || seen[w]) continue;
            seen[w] = 1;
            parent[w] = static_cast<int32_t>(x);
            q.push(w);
        }
    }
    if (!seen[v]) return {};
    std::vector<uint32_t> path;
    for (int32_t x = static_cast<int32_t>(v); x >= 0; x = parent[x])
        path.push_back(static_cast<uint32_t>(x));
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_k_pseudorandom_exact(const SimpleGraph& g, uint32_t k, PseudorandomWitness* witness) {
    const uint32_t n = g.n();
    if (n > 24) throw ParamError("exact pseudorandomness check capped at n <= 24");
    if (k == 0) throw ParamError("k must be positive");
    if (2 * k > n) return true;  // no two disjoint k-sets exist
    // Sets of size >= k reduce to size exactly k. A violating pair exists
    // iff some k-set A has at least k vertices outside A u N(A).
    std::vector<uint32_t> nbr_mask(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.neighbors(v)) nbr_mask[v] |= 1u << w;
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // Gosper's hack over all k-subsets.
    uint32_t a = (1u << k) - 1;
    while (a <= full) {
        uint32_t closed = a;
        for (uint32_t m = a; m;) {
            uint32_t v = static_cast<uint32_t>(__builtin_ctz(m));
            m &= m - 1;
            closed |= nbr_mask[v];
        }
        uint32_t outside = full & ~closed;
        if (static_cast<uint32_t>(__builtin_popcount(outside)) >= k) {
            if (witness) {
                witness->A.clear();
                witness->B.clear();
                for (uint32_t v = 0; v < n; ++v)
                    if (a & (1u << v)) witness->A.push_back(v);
                for (uint32_t v = 0; v < n && witness->B.size() < k; ++v)
                    if (outside & (1u << v)) witness->B.push_back(v);
            }
            return false;
        }
        // next k-subset
        uint32_t c = a & ~(a - 1), r = a + c;
        a = (((r ^ a) >> 2) / c) | r;
        if (c == 0) break;
    }
    return true;
}

bool is_k_pseudorandom_sampled(const SimpleGraph& g, uint32_t k, uint64_t trials, Rng& rng,
                               PseudorandomWitness* witness) {
    const uint32_t n = g.n();
    if (k == 0) throw ParamError("k must be positive");
    if (2 * k > n) return true;
    std::vector<uint32_t> perm(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (uint64_t t = 0; t < trials; ++t) {
        rng.shuffle(perm);
        bool any = false;
        for (uint32_t i = 0; i < k && !any; ++i)
            for (uint32_t j = k; j < 2 * k && !any; ++j)
                if (g.has_edge(perm[i], perm[j])) any = true;
        if (!any) {
            if (witness) {
                witness->A.assign(perm.begin(), perm.begin() + k);
                witness->B.assign(perm.begin() + k, perm.begin() + 2 * k);
            }
            return false;
        }
    }
    return true;
}

namespace {

// Enumerate simple cycles of length <= bound through v; abort the pair scan
// early once two of them share exactly the vertex v.
bool two_disjoint_short_cycles_at(const SimpleGraph& g, uint32_t v, uint32_t bound,
                                  std::vector<std::vector<uint32_t>>& found) {
    found.clear();
    std::vector<uint32_t> path{v};
    std::vector<uint8_t> on_path(g.n(), 0);
    on_path[v] = 1;
    bool hit = false;

    std::function<void()> dfs = [&]() {
        if (hit) return;
        uint32_t cur = path.back();
        if (path.size() >= 3 && g.has_edge(cur, v)) {
            std::vector<uint32_t> cyc(path.begin() + 1, path.end());
            std::sort(cyc.begin(), cyc.end());
            for (const auto& other : found) {
                std::vector<uint32_t> inter;
                std::set_intersection(cyc.begin(), cyc.end(), other.begin(), other.end(),
                                      std::back_inserter(inter));
                if (inter.empty()) {
                    hit = true;
                    return;
                }
            }
            found.push_back(cyc);
        }
        if (path.size() >= bound) return;
        for (uint32_t w : g.neighbors(cur)) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            on_path[w] = 0;
            if (hit) return;
        }
    };
    dfs();
    return hit;
}

}  // namespace

NPropertyReport check_N_properties(const SimpleGraph& g, double degree_bound,
                                   double cycle_len_bound, uint32_t trail_len,
                                   uint32_t trail_count_bound) {
    const uint32_t n = g.n();
    const double ln = std::log(std::max<double>(n, 3));
    if (degree_bound <= 0) degree_bound = 40.0 * ln;
    if (cycle_len_bound <= 0) cycle_len_bound = std::pow(ln, 0.9);

    NPropertyReport rep;
    rep.n1_bound = degree_bound;
    for (uint32_t v = 0; v < n; ++v) rep.max_degree = std::max(rep.max_degree, g.degree(v));
    rep.n1_pass = rep.max_degree <= degree_bound;

    const uint32_t cyc_bound = static_cast<uint32_t>(std::floor(cycle_len_bound));
    if (cyc_bound >= 3) {
        std::vector<std::vector<uint32_t>> scratch;
        for (uint32_t v = 0; v < n && rep.n2_pass; ++v) {
            if (two_disjoint_short_cycles_at(g, v, cyc_bound, scratch)) {
                rep.n2_pass = false;
                rep.n2_witness = {v};
            }
        }
    }

    // N4: count edge-distinct walks from each source; every arrival at w is
    // one trail source->w.
    std::vector<uint64_t> trails(n);
    std::vector<std::pair<uint32_t, uint32_t>> used;  // edge stack, canonical
    for (uint32_t src = 0; src < n && rep.n4_pass; ++src) {
        std::fill(trails.begin(), trails.end(), 0);
        std::vector<uint8_t> used_edge;  // indexed lazily via map-free scan
        std::function<void(uint32_t, uint32_t)> walk = [&](uint32_t cur, uint32_t depth) {
            if (!rep.n4_pass || depth == trail_len) return;
            for (uint32_t w : g.neighbors(cur)) {
                auto e = std::minmax(cur, w);
                auto key = std::make_pair(e.first, e.second);
                if (std::find(used.begin(), used.end(), key) != used.end()) continue;
                used.push_back(key);
                if (w != src && ++trails[w] > trail_count_bound) {
                    rep.n4_pass = false;
                    rep.n4_u = src;
                    rep.n4_v = w;
                    rep.n4_trails = trails[w];
                }
                if (rep.n4_pass) walk(w, depth + 1);
                used.pop_back();
                if (!rep.n4_pass) return;
            }
        };
        used.clear();
        walk(src, 0);
    }
    return rep;
}

}  // namespace graphtools
}  // namespace qc
