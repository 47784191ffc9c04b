#ifndef HULLMAX_QUICK_MAXIMA_HPP
#define HULLMAX_QUICK_MAXIMA_HPP

#include <utility>
#include <vector>

#include "hullmax/maxima_cert.hpp"
#include "hullmax/report.hpp"
#include "hullmax/staircase.hpp"

namespace hullmax {

struct MaximaResult {
    Staircase maxima;
    MaximaCertificate certificate;
};

// Quick Union Maxima: maxima set of the union of maxima sequences, with a
// certificate of domination and maximality arguments.
MaximaResult quick_union_maxima(const std::vector<Staircase>& seqs, ProbeCounter& pc);

// Left-to-Right merge: same output, certificate of minimal length.
MaximaResult left_to_right_merge(const std::vector<Staircase>& seqs, ProbeCounter& pc);

// Smooth decomposition followed by Quick Union Maxima on the run staircases.
// Deduplication of exact duplicates happens internally (radix pass, counted
// in its own phase).
std::pair<Staircase, CostReport> synergistic_maxima(const std::vector<Point>& points,
                                                    ProbeCounter& pc);

// Preprocessing shared with the CLI: remove exact duplicate points, keeping
// first occurrence order. Comparison-free (radix sort on packed keys).
std::vector<Point> dedup_points(const std::vector<Point>& points);

}  // namespace hullmax

#endif  // HULLMAX_QUICK_MAXIMA_HPP
