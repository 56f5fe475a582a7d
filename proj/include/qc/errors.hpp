#pragma once

#include <stdexcept>
#include <string>

namespace qc {

struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Asking the oracle about a pair twice is an algorithm bug, never retried.
struct RepeatedQuery : std::logic_error {
    RepeatedQuery(uint32_t u, uint32_t v)
        : std::logic_error("repeated query on pair (" + std::to_string(u) + "," +
                           std::to_string(v) + ")") {}
};

struct IllegalRecolour : std::logic_error {
    IllegalRecolour(uint32_t u, uint32_t v)
        : std::logic_error("recolour of non-white pair (" + std::to_string(u) + "," +
                           std::to_string(v) + ")") {}
};

enum class Phase { Phase1 = 1, Phase2 = 2, Phase3 = 3, Phase4 = 4, Phase5 = 5 };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Phase1: return "phase1";
        case Phase::Phase2: return "phase2";
        case Phase::Phase3: return "phase3";
        case Phase::Phase4: return "phase4";
        case Phase::Phase5: return "phase5";
    }
    return "?";
}

// Desk-scale manifestation of a violated whp event; the harness retries
// the whole trial with a derived sub-seed.
struct PhaseFailure : std::runtime_error {
    Phase phase;
    PhaseFailure(Phase ph, const std::string& why)
        : std::runtime_error(std::string(phase_name(ph)) + ": " + why), phase(ph) {}
};

struct StrategyFailure : std::runtime_error {
    explicit StrategyFailure(const std::string& why) : std::runtime_error(why) {}
};

struct MatchingInfeasible : std::runtime_error {
    explicit MatchingInfeasible(const std::string& why) : std::runtime_error(why) {}
};

}  // namespace qc
