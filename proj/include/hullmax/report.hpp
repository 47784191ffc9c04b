#ifndef HULLMAX_REPORT_HPP
#define HULLMAX_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hullmax {

// Per-run measurement record housing the analysis symbols.
struct CostReport {
    std::uint64_t n = 0;      // input size
    std::uint64_t h = 0;      // output size
    std::uint64_t sigma = 0;  // smooth runs
    std::uint64_t kappa = 0;  // simple chains
    std::uint64_t rho = 0;    // merged sequences
    std::uint64_t beta = 0;   // certificate blocks
    std::uint64_t delta = 0;  // certificate length
    std::vector<std::size_t> m_list;
    double entropy = 0.0;  // H(n_1, ..., n_k) in bits
    std::map<std::string, std::uint64_t> phase_counts;
    std::uint64_t seed = 0;
    std::uint64_t wall_ns = 0;

    std::uint64_t total_predicates() const {
        std::uint64_t t = 0;
        for (const auto& [k, v] : phase_counts) t += v;
        return t;
    }
};

}  // namespace hullmax

#endif  // HULLMAX_REPORT_HPP
