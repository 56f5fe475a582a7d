#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qc/hamilton.hpp"
#include "qc/tricolor.hpp"

namespace qc {

// ---------------------------------------------------------------- phase I

struct DfsState {
    std::vector<uint32_t> active;    // A, stack order; spans a red path
    std::vector<uint32_t> explored;  // C, completion order
    std::vector<uint8_t> status;     // 0 = U, 1 = A, 2 = C
    uint64_t rounds = 0;
};

// Randomised DFS with per-pair filter probability q, stopped at the first
// time |C| = |U|.
DfsState randomized_dfs(ColorState& s, const ParamSet& params, Rng& algrng);

struct Phase1Out {
    std::vector<uint32_t> cycle;     // C1 in red-path order
    std::vector<uint32_t> leftover;  // U = V \ V(C1), ascending
};

// Scans white pairs between the first interval and the far interval of the
// path and closes the first red edge into the cycle C1.
Phase1Out close_cycle(ColorState& s, const std::vector<uint32_t>& path, const ParamSet& params,
                      Rng& algrng);

Phase1Out run_phase1(ColorState& s, const ParamSet& params, Rng& algrng);

// ---------------------------------------------------------------- phase II

struct BlockDecomposition {
    uint32_t block_size = 0;
    uint32_t block_count = 0;                   // m
    std::vector<std::vector<uint32_t>> blocks;  // block j-1, cycle order
    std::vector<uint32_t> block_of;             // vertex -> j in [1,m], 0 = none
    std::vector<uint8_t> inner;                 // vertex is a non-endpoint block member
    std::vector<uint32_t> m1;                   // all inner vertices
};

BlockDecomposition block_decompose(const std::vector<uint32_t>& cycle, uint32_t block_size,
                                   uint32_t n);

struct FSampleStats {
    std::vector<uint32_t> f_degree;  // indexed like U
    uint64_t f_pairs = 0;
};

// Stage 1: each white pair inside U joins F with probability q' and is
// recoloured. f_red_adj collects the red F-edges (global vertex ids).
FSampleStats sample_and_recolour_F(ColorState& s, const std::vector<uint32_t>& U,
                                   const ParamSet& params, Rng& algrng,
                                   std::vector<std::vector<uint32_t>>& f_red_adj);

// Stage 2: T0 = low F-red-degree vertices, absorbed to the fixpoint T_f.
std::vector<uint32_t> absorb_T(ColorState& s, const std::vector<uint32_t>& U,
                               const std::vector<std::vector<uint32_t>>& f_red_adj,
                               const ParamSet& params);

struct PartitionOut {
    std::vector<uint32_t> U;  // V \ V(C1)
    std::vector<uint32_t> exp1, small1, tiny, t_f;
    BlockDecomposition blocks;
    std::vector<std::vector<uint32_t>> f_red_adj;
};

// Stage 3: recolour T_f x V(C1), split T_f into SMALL1 / TINY, then burn all
// remaining white pairs inside U touching TINY.
void classify_small_tiny(ColorState& s, PartitionOut& out, const std::vector<uint32_t>& c1,
                         const ParamSet& params);

PartitionOut run_phase2(ColorState& s, const Phase1Out& p1, const ParamSet& params, Rng& algrng);

// ------------------------------------------------------------- phase III/IV

struct PhaseContext {
    std::vector<uint32_t> cycle;   // current red cycle, cyclic order
    std::vector<uint8_t> on_cycle;
    std::vector<uint32_t> c1_vertices;  // V(C1) frozen after phase I
    std::vector<uint8_t> in_c1;

    std::vector<uint32_t> exp, small, tiny_remaining;
    std::vector<uint8_t> in_exp, in_small;

    std::set<uint32_t> J;  // surviving block indices, 1-based
    BlockDecomposition blocks;
    std::vector<std::vector<uint32_t>> f_red_adj;

    std::vector<uint32_t> off_cycle() const;  // exp u small u tiny_remaining
};

PhaseContext make_context(uint32_t n, const Phase1Out& p1, PartitionOut&& p2);

struct AnchorCase {
    char tag = 'a';  // 'a', 'b' or 'c'
    uint32_t z1 = 0, z2 = 0;
};

AnchorCase classify_anchor_case(const ColorState& s, const PhaseContext& ctx, uint32_t x);

// Expander core: degree-peel the red graph induced on GOOD, keep the largest
// component, certify size and diameter.
std::vector<uint32_t> select_expander_core(const ColorState& s,
                                           const std::vector<uint32_t>& good,
                                           const ParamSet& params);

void absorb_tiny_vertex(ColorState& s, PhaseContext& ctx, uint32_t x, const ParamSet& params,
                        Rng& algrng);
void run_phase3(ColorState& s, PhaseContext& ctx, const ParamSet& params, Rng& algrng);

struct BlockFamily {
    std::vector<uint32_t> small2;                    // y_i order
    std::vector<std::vector<uint32_t>> family;       // J_i per y_i (block ids)
    std::vector<std::vector<uint32_t>> witnesses;    // m_j per y_i, aligned with family
};

BlockFamily allocate_block_families(const ColorState& s, const PhaseContext& ctx,
                                    const ParamSet& params);

void absorb_small_vertex(ColorState& s, PhaseContext& ctx, uint32_t y,
                         const std::vector<uint32_t>& blocks_for_y,
                         const std::vector<uint32_t>& witnesses_for_y, const ParamSet& params);
void run_phase4(ColorState& s, PhaseContext& ctx, const BlockFamily& fam, const ParamSet& params);

// ---------------------------------------------------------------- phase V

// Joins the red components on EXP3 with one red edge per consecutive pair of
// components; returns the number of edges added.
uint32_t connect_components(ColorState& s, const std::vector<uint32_t>& exp3,
                            const ParamSet& params);

struct Ports {
    uint32_t v = 0, w = 0;  // adjacent on C3
    uint32_t x = 0, y = 0;  // red ports into EXP3
};

Ports attach_ports(ColorState& s, const PhaseContext& ctx, const ParamSet& params);

// Booster loop: returns a red Hamilton path on EXP3 from x to y.
std::vector<uint32_t> booster_loop(ColorState& s, const std::vector<uint32_t>& exp3, Pair e,
                                   const ParamSet& params);

HamiltonCycle assemble_hamilton(const PhaseContext& ctx, const Ports& ports,
                                const std::vector<uint32_t>& ham_path);

// Audit helper shared by tests: cycle covers expected vertices once, all
// consecutive pairs red.
bool audit_red_cycle(const ColorState& s, const std::vector<uint32_t>& cycle);
// Every surviving block is a contiguous arc of the cycle.
bool audit_blocks_contiguous(const PhaseContext& ctx);

}  // namespace qc
