#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "qc/oracle.hpp"
#include "qc/params.hpp"
#include "qc/rng.hpp"

namespace qc {

enum class EdgeColor : uint8_t { White, Red, Blue };
enum class RecolourOutcome : uint8_t { Skipped, Red, Blue };

// Red/white/blue tripartition of all vertex pairs plus the incremental red
// adjacency structure. White pairs are implicit: the colour store is the
// oracle transcript (red = positive, blue = negative answer).
//
// Under the p-cap coupling (p > 10 ln n / n) a pair may be "recoloured" on
// the algorithm side without an oracle query; such pairs are tracked in a
// skip set and treated as dead (blue-equivalent) by the phases while staying
// outside the transcript.
class ColorState {
public:
    ColorState(Oracle& oracle, const ParamSet& params);

    uint32_t n() const { return n_; }
    Oracle& oracle() { return *oracle_; }
    const Oracle& oracle() const { return *oracle_; }
    const ParamSet& params() const { return params_; }

    EdgeColor color(Pair e) const {
        auto a = oracle_->answer_of(e);
        if (!a) return EdgeColor::White;
        return *a ? EdgeColor::Red : EdgeColor::Blue;
    }
    bool is_red(Pair e) const {
        auto a = oracle_->answer_of(e);
        return a && *a;
    }
    bool is_capped_skipped(Pair e) const { return capped_skips_.count(e.key()) > 0; }
    // White and not consumed by a capped skip.
    bool is_available(Pair e) const {
        return color(e) == EdgeColor::White && (capped_skips_.empty() || !is_capped_skipped(e));
    }

    EdgeColor recolour(Pair e);
    RecolourOutcome recolour_filtered(Pair e, double qf, Rng& algrng);
    RecolourOutcome recolour_capped(Pair e, double p_eff, Rng& algrng);

    // Effective recolour probability; below the oracle's p every expose()
    // routes through the capped coupling (a capped skip reads as non-edge).
    void set_effective_p(double p_eff);
    double effective_p() const { return effective_p_; }

    // Capped-aware recolour used by the phases: true iff the pair came back
    // red. Skips (capped) and blues both count as non-edges.
    bool expose(Pair e, Rng& algrng);
    // Filter first with probability qf (algorithm coin, pair stays white on
    // a filter skip), then expose.
    RecolourOutcome expose_filtered(Pair e, double qf, Rng& algrng);

    const std::vector<uint32_t>& red_adj(uint32_t v) const { return red_adj_[v]; }
    uint32_t red_degree(uint32_t v) const { return static_cast<uint32_t>(red_adj_[v].size()); }
    uint32_t max_red_degree() const { return max_red_degree_; }

    // Set-restricted views; S is a vertex list. Checker/test paths.
    uint32_t red_degree_in(uint32_t v, const std::vector<uint32_t>& S) const;
    std::vector<uint32_t> red_neighbors_in(uint32_t v, const std::vector<uint32_t>& S) const;
    std::vector<uint32_t> white_neighbors_in(uint32_t v, const std::vector<uint32_t>& S) const;

    uint64_t red_count() const { return red_count_; }
    uint64_t blue_count() const { return blue_count_; }

    // Per-phase telemetry. Phase 0 collects anything outside the five phases.
    void set_phase(int phase) { current_phase_ = phase; }
    uint64_t phase_queries(int phase) const { return phase_[phase].queries; }
    uint64_t phase_positives(int phase) const { return phase_[phase].positives; }

    // Storage hints forwarded to the oracle.
    void install_focus(const std::vector<uint32_t>& members) { oracle_->install_focus(members); }
    void install_row(uint32_t v) { oracle_->install_row(v); }

private:
    void note_red(Pair e);

    Oracle* oracle_;
    ParamSet params_;
    uint32_t n_;

    std::vector<std::vector<uint32_t>> red_adj_;
    uint64_t red_count_ = 0;
    uint64_t blue_count_ = 0;
    uint32_t max_red_degree_ = 0;

    std::unordered_set<uint64_t, PairHash> capped_skips_;

    struct Counters {
        uint64_t queries = 0;
        uint64_t positives = 0;
    };
    std::array<Counters, 6> phase_{};
    int current_phase_ = 0;
};

}  // namespace qc
