#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qc/graphtools.hpp"
#include "qc/hamilton.hpp"
#include "qc/oracle.hpp"
#include "qc/pair.hpp"

namespace qc {
namespace verify {

enum class Ternary { No, Yes, Unknown };

struct HamResult {
    Ternary status = Ternary::No;
    std::vector<uint32_t> cycle;  // witness when Yes
};

// Exact Hamiltonicity. Bitmask dynamic program up to n = 24; pruned
// backtracking with a wall-clock budget up to n = 64 (timeout -> Unknown).
HamResult is_hamiltonian_exact(const SimpleGraph& g, double time_budget_s = 5.0);

// DP-only / backtracking-only entry points so the two routes can be compared
// against each other in tests.
bool hamiltonian_bitmask_dp(const SimpleGraph& g, std::vector<uint32_t>* witness = nullptr);
HamResult hamiltonian_backtracking(const SimpleGraph& g, double time_budget_s);

struct CertificateDiag {
    bool ok = false;
    std::string reason;
};

// A certificate is valid when the cycle visits every vertex exactly once and
// every consecutive pair (including the closing one) has a positive
// transcript entry.
CertificateDiag validate_certificate(const HamiltonCycle& c, const Oracle& o);

// Maximum length (edge count) over paths of h u {e} that contain e as an
// edge, and whether h u {e} has a Hamilton cycle using e. Exhaustive with
// memoisation; capped at 16 vertices.
struct ThroughE {
    uint32_t max_len = 0;
    bool ham_cycle = false;
    std::vector<uint32_t> max_path;  // witness path attaining max_len
};
ThroughE max_path_through(const SimpleGraph& h, Pair e);

// Exact e-booster set per the definition: non-edges f of h (f != e) such
// that h u {e,f} has a through-e path longer than the through-e maximum of
// h u {e}, or a Hamilton cycle using e. Requires that h u {e} has no
// Hamilton cycle using e (contract error otherwise). Capped at 12 vertices.
std::set<std::pair<uint32_t, uint32_t>> brute_force_boosters(const SimpleGraph& h, Pair e);

struct LowerBoundReport {
    std::vector<uint32_t> A;        // vertices of degree != 2
    std::vector<uint32_t> NA;       // N(A)
    std::vector<std::pair<uint32_t, uint32_t>> closing_pairs;  // xy with G+xy Hamiltonian
    int64_t k = 0;                  // |E| - n
    bool closing_inside_a_na = true;
    bool degree_precondition = false;  // <= 2 degree-1 vertices, no isolated
    bool a_bound_holds = true;         // |A| <= 2k+4 when precondition holds
};

// The lower-bound experiment: g must be non-Hamiltonian (verified here).
LowerBoundReport lower_bound_experiment(const SimpleGraph& g);

}  // namespace verify
}  // namespace qc
