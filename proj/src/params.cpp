#include "qc/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "qc/errors.hpp"

namespace qc {

ParamSet ParamSet::defaults(uint32_t n) {
    if (n < 4) throw ParamError("n must be at least 4");
    ParamSet ps;
    ps.n = n;
    const double ln = std::log(static_cast<double>(n));
    ps.q_dfs = 1.0 / std::sqrt(ln);
    ps.q_prime = std::min(1.0, 6.0 * std::pow(ln, -0.15));
    ps.k_interval = static_cast<uint32_t>(std::lround(n * std::pow(ln, -0.45)));
    ps.small_threshold = std::sqrt(ln);
    ps.exp_degree_phase3 = 3.0 * std::pow(ln, 0.4);
    ps.exp_degree_phase4 = 2.0 * std::pow(ln, 0.4);
    ps.core_size = std::max<uint32_t>(
        2, static_cast<uint32_t>(std::lround(n * std::pow(ln, -0.45) / 240.0)));
    ps.core_peel_degree = std::max<uint32_t>(
        2, static_cast<uint32_t>(std::lround(std::pow(ln, 0.4))));
    ps.expansion_set_cap = std::max<uint32_t>(
        1, static_cast<uint32_t>(std::lround(n * std::pow(ln, -0.45) / 6000.0)));
    ps.diam_bound = 2.0 * ln;
    ps.j_block_size = std::max<uint32_t>(
        2, static_cast<uint32_t>(std::lround(1000.0 * std::pow(ln, 0.45))));
    ps.tiny_cap = std::pow(static_cast<double>(n), 0.04);
    ps.t0_cap = 2.0 * n * std::exp(-std::pow(ln, 0.4));
    return ps;
}

double ParamSet::threshold_p() const {
    const double ln = std::log(static_cast<double>(n));
    return std::min(1.0, (ln + std::log(ln) + c_slack) / n);
}

namespace {

double to_double(const std::string& v) {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw ParamError("bad numeric value '" + v + "'");
    return d;
}

uint32_t to_u32(const std::string& v) {
    double d = to_double(v);
    if (d < 0 || d != std::floor(d)) throw ParamError("expected integer, got '" + v + "'");
    return static_cast<uint32_t>(d);
}

}  // namespace

void ParamSet::set(const std::string& key, const std::string& value) {
    if (key == "c_slack") c_slack = to_double(value);
    else if (key == "q_dfs") q_dfs = to_double(value);
    else if (key == "q_prime") q_prime = to_double(value);
    else if (key == "k_interval") k_interval = to_u32(value);
    else if (key == "block_size") block_size = to_u32(value);
    else if (key == "t0_factor") t0_factor = to_double(value);
    else if (key == "absorb_threshold") absorb_threshold = to_u32(value);
    else if (key == "small_threshold") small_threshold = to_double(value);
    else if (key == "exp_degree_phase3") exp_degree_phase3 = to_double(value);
    else if (key == "exp_degree_phase4") exp_degree_phase4 = to_double(value);
    else if (key == "core_size") core_size = to_u32(value);
    else if (key == "core_peel_degree") core_peel_degree = to_u32(value);
    else if (key == "expansion_set_cap") expansion_set_cap = to_u32(value);
    else if (key == "diam_bound") diam_bound = to_double(value);
    else if (key == "j_block_size") j_block_size = to_u32(value);
    else if (key == "component_cap") component_cap = to_u32(value);
    else if (key == "p_cap_factor") p_cap_factor = to_double(value);
    else if (key == "tiny_cap") tiny_cap = to_double(value);
    else if (key == "t0_cap") t0_cap = to_double(value);
    else if (key == "attach_white_frac") attach_white_frac = to_double(value);
    else throw ParamError("unknown parameter '" + key + "'");

    if (q_dfs < 0 || q_dfs > 1 || q_prime < 0 || q_prime > 1)
        throw ParamError("probabilities must lie in [0,1]");
    if (block_size < 3) throw ParamError("block_size must be at least 3");
}

void ParamSet::apply(const std::map<std::string, std::string>& overrides) {
    for (const auto& [k, v] : overrides) set(k, v);
}

std::map<std::string, std::string> ParamSet::to_map() const {
    auto fmt = [](double d) {
        char buf[32];
        snprintf(buf, sizeof buf, "%.17g", d);
        return std::string(buf);
    };
    std::map<std::string, std::string> m;
    m["c_slack"] = fmt(c_slack);
    m["q_dfs"] = fmt(q_dfs);
    m["q_prime"] = fmt(q_prime);
    m["k_interval"] = std::to_string(k_interval);
    m["block_size"] = std::to_string(block_size);
    m["t0_factor"] = fmt(t0_factor);
    m["absorb_threshold"] = std::to_string(absorb_threshold);
    m["small_threshold"] = fmt(small_threshold);
    m["exp_degree_phase3"] = fmt(exp_degree_phase3);
    m["exp_degree_phase4"] = fmt(exp_degree_phase4);
    m["core_size"] = std::to_string(core_size);
    m["core_peel_degree"] = std::to_string(core_peel_degree);
    m["expansion_set_cap"] = std::to_string(expansion_set_cap);
    m["diam_bound"] = fmt(diam_bound);
    m["j_block_size"] = std::to_string(j_block_size);
    m["component_cap"] = std::to_string(component_cap);
    m["p_cap_factor"] = fmt(p_cap_factor);
    m["tiny_cap"] = fmt(tiny_cap);
    m["t0_cap"] = fmt(t0_cap);
    m["attach_white_frac"] = fmt(attach_white_frac);
    return m;
}

}  // namespace qc
