#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qc/rng.hpp"

namespace qc {

// Undirected simple graph with sorted neighbour lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(uint32_t n) : adj_(n) {}

    uint32_t n() const { return static_cast<uint32_t>(adj_.size()); }
    uint64_t m() const { return m_; }

    void add_edge(uint32_t u, uint32_t v);
    bool has_edge(uint32_t u, uint32_t v) const;
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }
    const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }

    std::vector<std::pair<uint32_t, uint32_t>> edges() const;

    // Edge-list text format: "n m" header then one "u v" line per edge.
    static SimpleGraph read_edge_list(std::istream& is);
    void write_edge_list(std::ostream& os) const;

    static SimpleGraph random(uint32_t n, double p, Rng& rng);
    static SimpleGraph random_with_edges(uint32_t n, uint64_t m, Rng& rng);

private:
    std::vector<std::vector<uint32_t>> adj_;
    uint64_t m_ = 0;
};

namespace graphtools {

// Maximal subgraph of minimum degree >= d (iterative peeling), then its
// largest connected component. Empty if none survives.
std::vector<uint32_t> min_degree_core(const SimpleGraph& g, uint32_t d);

// Bipartite star matching: given adjacency from A-side indices to B-side
// indices, find pairwise disjoint k-subsets J_i of N(i). Throws
// MatchingInfeasible when the Hall-type condition fails.
std::vector<std::vector<uint32_t>> star_matching(
    const std::vector<std::vector<uint32_t>>& adj_a, uint32_t b_count, uint32_t k);

// Exact BFS answers on the subgraph induced by S. diameter_within returns
// false when S is disconnected or some BFS eccentricity exceeds the bound.
bool diameter_within(const SimpleGraph& g, const std::vector<uint32_t>& S, uint32_t bound);

// Shortest path between u and v inside the subgraph induced by S; empty when
// unreachable. Throws ParamError when u or v lies outside S.
std::vector<uint32_t> shortest_path_in(const SimpleGraph& g, const std::vector<uint32_t>& S,
                                       uint32_t u, uint32_t v);

struct PseudorandomWitness {
    std::vector<uint32_t> A;
    std::vector<uint32_t> B;
};

// k-pseudorandom: every two disjoint k-sets are joined by an edge. Exact
// mode enumerates all disjoint pairs of k-sets (n <= 24); sampled mode draws
// random disjoint pairs and can only refute.
bool is_k_pseudorandom_exact(const SimpleGraph& g, uint32_t k,
                             PseudorandomWitness* witness = nullptr);
bool is_k_pseudorandom_sampled(const SimpleGraph& g, uint32_t k, uint64_t trials, Rng& rng,
                               PseudorandomWitness* witness = nullptr);

struct NPropertyReport {
    bool n1_pass = true;  // max degree bound
    uint32_t max_degree = 0;
    double n1_bound = 0;

    bool n2_pass = true;  // no two short cycles sharing exactly one vertex
    std::vector<uint32_t> n2_witness;  // shared vertex, if failed

    bool n4_pass = true;  // at most three trails of length <= 6 between any pair
    uint32_t n4_u = 0, n4_v = 0;
    uint64_t n4_trails = 0;
};

// N-event checkers over a plain graph. N.3 (minimum red degree 2 for fully
// recoloured vertices) depends on the colouring context and is checked by
// the caller. cycle_len_bound defaults to (ln n)^{0.9}; degree_bound to
// 40 ln n.
NPropertyReport check_N_properties(const SimpleGraph& g, double degree_bound = 0,
                                   double cycle_len_bound = 0, uint32_t trail_len = 6,
                                   uint32_t trail_count_bound = 3);

}  // namespace graphtools
}  // namespace qc
