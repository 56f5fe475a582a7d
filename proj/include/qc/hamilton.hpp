#pragma once

#include <cstdint>
#include <vector>

namespace qc {

struct HamiltonCycle {
    std::vector<uint32_t> cycle;  // vertex sequence; the closing edge is implied
};

}  // namespace qc
