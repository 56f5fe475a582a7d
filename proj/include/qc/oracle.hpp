#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "qc/errors.hpp"
#include "qc/pair.hpp"
#include "qc/rng.hpp"

namespace qc {

struct QueryStats {
    uint64_t total = 0;
    uint64_t positives = 0;
};

// Adaptive G(n,p) oracle. Each unordered pair may be asked at most once and
// answers an independent Bernoulli(p) coin. Answers are a pure function of
// (seed, canonical pair), so memory is O(queried pairs) and a fixed
// (n, p, seed) reproduces the same transcript under any query order.
//
// The transcript is held in three tiers so that runs with ~1e8 queries fit
// in memory:
//   - a dense 2-bit triangular block over an installable "focus" vertex set
//     (the off-cycle set U gets blanket-recoloured in phase II),
//   - per-vertex 2-bit rows for vertices whose whole neighbourhood gets
//     recoloured (the T_f x V(C1) sweeps),
//   - a hash map for everything else.
// Tier installation is a storage hint only; answers and stats are unaffected.
class Oracle {
public:
    Oracle(uint32_t n, double p, uint64_t seed, bool log_order = false);

    uint32_t n() const { return n_; }
    double p() const { return p_; }
    uint64_t seed() const { return seed_; }

    // Answers the pair, extending the transcript. Throws RepeatedQuery if the
    // pair was asked before and ParamError on out-of-range endpoints.
    bool query(Pair e);

    bool was_queried(Pair e) const;
    // Transcript lookup: nullopt if never queried.
    std::optional<bool> answer_of(Pair e) const;

    QueryStats stats() const { return {total_, positives_}; }

    // Line-oriented dump "u v answer" in query order; requires log_order.
    void dump_transcript(std::ostream& os) const;
    bool has_order_log() const { return log_order_; }

    // Storage hints.
    void install_focus(const std::vector<uint32_t>& members);
    void install_row(uint32_t v);

private:
    enum class Tier { Focus, RowU, RowV, Hash, None };

    void check_range(Pair e) const;
    Tier find(Pair e, uint64_t& idx) const;
    bool draw_answer(Pair e) const;
    uint64_t focus_index(uint32_t fu, uint32_t fv) const;

    uint32_t n_;
    double p_;
    uint64_t seed_;
    uint64_t total_ = 0;
    uint64_t positives_ = 0;

    bool log_order_;
    std::vector<std::pair<Pair, bool>> log_;

    std::vector<uint32_t> focus_id_;  // vertex -> compact id + 1; 0 = not in focus
    uint32_t focus_size_ = 0;
    std::vector<uint64_t> focus_bits_;  // 2 bits per focus pair: queried, answer

    std::unordered_map<uint32_t, std::vector<uint64_t>> rows_;  // 2 bits per other vertex
    std::unordered_map<uint64_t, bool, PairHash> scattered_;
};

}  // namespace qc
