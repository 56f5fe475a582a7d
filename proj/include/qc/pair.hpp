#pragma once

#include <cstdint>
#include <functional>

#include "qc/errors.hpp"

namespace qc {

// Unordered vertex pair, stored canonically with u < v.
struct Pair {
    uint32_t u;
    uint32_t v;

    Pair(uint32_t a, uint32_t b) {
        if (a == b) throw ParamError("pair endpoints must differ");
        if (a < b) { u = a; v = b; } else { u = b; v = a; }
    }

    uint64_t key() const { return (static_cast<uint64_t>(u) << 32) | v; }

    bool operator==(const Pair& o) const { return u == o.u && v == o.v; }
    bool operator<(const Pair& o) const { return key() < o.key(); }
};

struct PairHash {
    size_t operator()(uint64_t k) const {
        k = (k ^ (k >> 30)) * 0xbf58476d1ce4e5b9ULL;
        k = (k ^ (k >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<size_t>(k ^ (k >> 31));
    }
};

}  // namespace qc
