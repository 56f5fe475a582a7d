#include "qc/oracle.hpp"

#include <algorithm>

namespace qc {

namespace {
inline bool bits_get(const std::vector<uint64_t>& bits, uint64_t idx, bool& answer) {
    uint64_t word = bits[(idx * 2) >> 6];
    unsigned shift = static_cast<unsigned>((idx * 2) & 63);
    answer = (word >> (shift + 1)) & 1;
    return (word >> shift) & 1;
}
inline void bits_set(std::vector<uint64_t>& bits, uint64_t idx, bool answer) {
    uint64_t& word = bits[(idx * 2) >> 6];
    unsigned shift = static_cast<unsigned>((idx * 2) & 63);
    word |= (1ULL << shift) | (static_cast<uint64_t>(answer) << (shift + 1));
}
}  // namespace

Oracle::Oracle(uint32_t n, double p, uint64_t seed, bool log_order)
    : n_(n), p_(p), seed_(seed), log_order_(log_order) {
    if (n < 1) throw ParamError("oracle needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ParamError("p must lie in [0,1]");
    scattered_.reserve(1 << 12);
}

void Oracle::check_range(Pair e) const {
    if (e.v >= n_) throw ParamError("vertex index out of range");
}

bool Oracle::draw_answer(Pair e) const {
    if (p_ <= 0.0) return false;
    if (p_ >= 1.0) return true;
    uint64_t h = mix64(seed_ ^ mix64(e.key() + 0x9e3779b97f4a7c15ULL));
    return unit_double(h) < p_;
}

uint64_t Oracle::focus_index(uint32_t fu, uint32_t fv) const {
    // triangular index over compact focus ids, fu < fv
    uint64_t u = fu, v = fv, m = focus_size_;
    return u * m - u * (u + 1) / 2 + (v - u - 1);
}

// Returns the tier a new answer for e should be written to. Reads must still
// probe every tier that could hold e: a pair may have been recorded before a
// covering row or the focus block was installed.
Oracle::Tier Oracle::find(Pair e, uint64_t& idx) const {
    if (focus_size_ > 0) {
        uint32_t fu = focus_id_[e.u], fv = focus_id_[e.v];
        if (fu && fv) {
            uint32_t a = fu - 1, b = fv - 1;
            if (a > b) std::swap(a, b);
            idx = focus_index(a, b);
            return Tier::Focus;
        }
    }
    if (!rows_.empty()) {
        if (rows_.count(e.u)) { idx = e.v; return Tier::RowU; }
        if (rows_.count(e.v)) { idx = e.u; return Tier::RowV; }
    }
    idx = e.key();
    return Tier::Hash;
}

std::optional<bool> Oracle::answer_of(Pair e) const {
    check_range(e);
    bool ans;
    if (focus_size_ > 0) {
        uint32_t fu = focus_id_[e.u], fv = focus_id_[e.v];
        if (fu && fv) {
            uint32_t a = fu - 1, b = fv - 1;
            if (a > b) std::swap(a, b);
            if (bits_get(focus_bits_, focus_index(a, b), ans)) return ans;
            return std::nullopt;  // focus pairs are never stored elsewhere
        }
    }
    if (!rows_.empty()) {
        auto it = rows_.find(e.u);
        if (it != rows_.end() && bits_get(it->second, e.v, ans)) return ans;
        it = rows_.find(e.v);
        if (it != rows_.end() && bits_get(it->second, e.u, ans)) return ans;
    }
    auto it = scattered_.find(e.key());
    if (it != scattered_.end()) return it->second;
    return std::nullopt;
}

bool Oracle::was_queried(Pair e) const { return answer_of(e).has_value(); }

bool Oracle::query(Pair e) {
    check_range(e);
    if (was_queried(e)) throw RepeatedQuery(e.u, e.v);

    bool answer = draw_answer(e);
    uint64_t idx;
    switch (find(e, idx)) {
        case Tier::Focus: bits_set(focus_bits_, idx, answer); break;
        case Tier::RowU: bits_set(rows_.at(e.u), idx, answer); break;
        case Tier::RowV: bits_set(rows_.at(e.v), idx, answer); break;
        default: scattered_.emplace(e.key(), answer); break;
    }
    ++total_;
    if (answer) ++positives_;
    if (log_order_) log_.emplace_back(e, answer);
    return answer;
}

void Oracle::dump_transcript(std::ostream& os) const {
    if (!log_order_) throw ParamError("oracle was created without an order log");
    for (const auto& [e, ans] : log_)
        os << e.u << ' ' << e.v << ' ' << (ans ? 1 : 0) << '\n';
}

void Oracle::install_focus(const std::vector<uint32_t>& members) {
    if (focus_size_ > 0) throw ParamError("focus block already installed");
    if (members.size() < 2) return;
    focus_id_.assign(n_, 0);
    uint32_t id = 0;
    for (uint32_t v : members) {
        if (v >= n_) throw ParamError("focus member out of range");
        if (focus_id_[v]) throw ParamError("duplicate focus member");
        focus_id_[v] = ++id;
    }
    focus_size_ = id;
    uint64_t pairs = static_cast<uint64_t>(focus_size_) * (focus_size_ - 1) / 2;
    focus_bits_.assign((pairs * 2 + 63) / 64, 0);
    // Migrate entries the block now covers so focus lookups stay single-tier.
    for (auto it = scattered_.begin(); it != scattered_.end();) {
        uint32_t u = static_cast<uint32_t>(it->first >> 32);
        uint32_t v = static_cast<uint32_t>(it->first);
        if (focus_id_[u] && focus_id_[v]) {
            uint32_t a = focus_id_[u] - 1, b = focus_id_[v] - 1;
            if (a > b) std::swap(a, b);
            bits_set(focus_bits_, focus_index(a, b), it->second);
            it = scattered_.erase(it);
        } else {
            ++it;
        }
    }
    for (auto& [v, row] : rows_) {
        if (!focus_id_[v]) continue;
        bool ans;
        for (uint32_t w = 0; w < n_; ++w) {
            if (!focus_id_[w] || w == v) continue;
            if (bits_get(row, w, ans)) {
                uint32_t a = focus_id_[v] - 1, b = focus_id_[w] - 1;
                if (a > b) std::swap(a, b);
                bits_set(focus_bits_, focus_index(a, b), ans);
            }
        }
    }
}

void Oracle::install_row(uint32_t v) {
    if (v >= n_) throw ParamError("row vertex out of range");
    if (rows_.count(v)) return;
    auto& row = rows_[v];
    row.assign((static_cast<uint64_t>(n_) * 2 + 63) / 64, 0);
    // Pre-existing scattered entries touching v stay put; reads probe both.
}

}  // namespace qc
