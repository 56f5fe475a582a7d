#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

namespace qc {

// Every tunable constant of the five-phase algorithm, with defaults that
// reproduce the asymptotic formulas at a given n. The exponents separate
// scales only for astronomically large n, so desk-scale runs override these
// from config files; nothing here is hard-wired into the phase code.
struct ParamSet {
    uint32_t n = 0;

    double c_slack = 10.0;       // additive slack in the p threshold formula
    double q_dfs = 0.0;          // phase I per-pair filter, (ln n)^{-1/2}
    double q_prime = 0.0;        // phase II subsample, 6 (ln n)^{-0.15} clamped to 1
    uint32_t k_interval = 0;     // stage-2 interval length, n (ln n)^{-0.45}
    uint32_t block_size = 100;   // cycle block length
    double t0_factor = 1.0 / 3.0;      // T0 threshold multiplier on |U| p q'
    uint32_t absorb_threshold = 3;     // red neighbours in T_i needed to absorb
    double small_threshold = 0.0;      // red degree into M1 for SMALL, (ln n)^{0.5}
    double exp_degree_phase3 = 0.0;    // BAD cutoff in phase III, 3 (ln n)^{0.4}
    double exp_degree_phase4 = 0.0;    // BAD cutoff in phase IV, 2 (ln n)^{0.4}
    uint32_t core_size = 0;            // expander core size, n (ln n)^{-0.45} / 240
    uint32_t core_peel_degree = 0;     // min degree kept by peeling, (ln n)^{0.4}
    uint32_t expansion_set_cap = 0;    // Lemma-8 X cap, n (ln n)^{-0.45} / 6000
    double diam_bound = 0.0;           // core diameter bound, 2 ln n
    uint32_t j_block_size = 0;         // |J_i| in phase IV, 10^3 (ln n)^{0.45}
    uint32_t component_cap = 24000;    // phase V component count cap
    double p_cap_factor = 10.0;        // p cap = 10 ln n / n
    double tiny_cap = 0.0;             // |TINY| cap, n^{0.04}
    double t0_cap = 0.0;               // |T_f| cap, 2 n e^{-(ln n)^{0.4}}
    double attach_white_frac = 2.0 / 3.0;  // phase V port white-degree fraction

    static ParamSet defaults(uint32_t n);

    double p_cap() const { return p_cap_factor * std::log(static_cast<double>(n)) / n; }

    // Threshold-formula edge probability (ln n + ln ln n + c_slack)/n, capped at 1.
    double threshold_p() const;

    // Apply "key=value" overrides; unknown keys raise ParamError.
    void set(const std::string& key, const std::string& value);
    void apply(const std::map<std::string, std::string>& overrides);

    std::map<std::string, std::string> to_map() const;
};

}  // namespace qc
