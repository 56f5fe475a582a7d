#include "qc/tricolor.hpp"

#include <algorithm>

#include "qc/errors.hpp"

namespace qc {

ColorState::ColorState(Oracle& oracle, const ParamSet& params)
    : oracle_(&oracle), params_(params), n_(oracle.n()), red_adj_(oracle.n()) {}

void ColorState::note_red(Pair e) {
    red_adj_[e.u].push_back(e.v);
    red_adj_[e.v].push_back(e.u);
    ++red_count_;
    max_red_degree_ = std::max<uint32_t>(
        max_red_degree_,
        std::max<uint32_t>(static_cast<uint32_t>(red_adj_[e.u].size()),
                           static_cast<uint32_t>(red_adj_[e.v].size())));
}

EdgeColor ColorState::recolour(Pair e) {
    if (!is_available(e)) throw IllegalRecolour(e.u, e.v);
    bool answer = oracle_->query(e);
    auto& c = phase_[current_phase_];
    ++c.queries;
    if (answer) {
        ++c.positives;
        note_red(e);
        return EdgeColor::Red;
    }
    ++blue_count_;
    return EdgeColor::Blue;
}

RecolourOutcome ColorState::recolour_filtered(Pair e, double qf, Rng& algrng) {
    if (!is_available(e)) throw IllegalRecolour(e.u, e.v);
    if (!algrng.bernoulli(qf)) return RecolourOutcome::Skipped;
    return recolour(e) == EdgeColor::Red ? RecolourOutcome::Red : RecolourOutcome::Blue;
}

RecolourOutcome ColorState::recolour_capped(Pair e, double p_eff, Rng& algrng) {
    const double p = oracle_->p();
    if (p_eff > p) throw ParamError("p_eff exceeds oracle p");
    if (!is_available(e)) throw IllegalRecolour(e.u, e.v);
    // Coupling: query the oracle only with probability p_eff / p, so the
    // marginal red probability is exactly p_eff. A skipped pair is dead for
    // the algorithm but stays out of the transcript.
    const double ratio = p > 0 ? p_eff / p : 0.0;
    if (!algrng.bernoulli(ratio)) {
        capped_skips_.insert(e.key());
        return RecolourOutcome::Skipped;
    }
    return recolour(e) == EdgeColor::Red ? RecolourOutcome::Red : RecolourOutcome::Blue;
}

uint32_t ColorState::red_degree_in(uint32_t v, const std::vector<uint32_t>& S) const {
    uint32_t d = 0;
    if (S.size() < red_adj_[v].size()) {
        for (uint32_t s : S)
            if (s != v && is_red(Pair(v, s))) ++d;
    } else {
        std::vector<uint8_t> mask(n_, 0);
        for (uint32_t s : S) mask[s] = 1;
        for (uint32_t w : red_adj_[v])
            if (mask[w]) ++d;
    }
    return d;
}

std::vector<uint32_t> ColorState::red_neighbors_in(uint32_t v,
                                                   const std::vector<uint32_t>& S) const {
    std::vector<uint8_t> mask(n_, 0);
    for (uint32_t s : S) mask[s] = 1;
    std::vector<uint32_t> out;
    for (uint32_t w : red_adj_[v])
        if (mask[w]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> ColorState::white_neighbors_in(uint32_t v,
                                                     const std::vector<uint32_t>& S) const {
    std::vector<uint32_t> out;
    for (uint32_t s : S)
        if (s != v && color(Pair(v, s)) == EdgeColor::White) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qc
