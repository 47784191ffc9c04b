#ifndef HULLMAX_HULL_SEQ_HPP
#define HULLMAX_HULL_SEQ_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hullmax/geom.hpp"

namespace hullmax {

// An upper hull sequence: x strictly increasing, edge slopes strictly
// decreasing (strict convexity, no collinear interior vertices).
struct UpperHullSeq {
    std::vector<Point> points;

    UpperHullSeq() = default;
    explicit UpperHullSeq(std::vector<Point> pts) : points(std::move(pts)) {}

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    const Point& at(std::size_t pos) const { return points[pos - 1]; }  // 1-based

    friend bool operator==(const UpperHullSeq&, const UpperHullSeq&) = default;
};

inline bool is_valid_upper_hull(const std::vector<Point>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x <= pts[i - 1].x) return false;
    for (std::size_t i = 2; i < pts.size(); ++i) {
        // slope(i-2, i-1) > slope(i-1, i), exact
        Wide lhs = Wide(pts[i - 1].y - pts[i - 2].y) * Wide(pts[i].x - pts[i - 1].x);
        Wide rhs = Wide(pts[i].y - pts[i - 1].y) * Wide(pts[i - 1].x - pts[i - 2].x);
        if (lhs <= rhs) return false;
    }
    return true;
}

inline bool is_valid_upper_hull(const UpperHullSeq& u) { return is_valid_upper_hull(u.points); }

struct HullPair {
    UpperHullSeq upper;
    UpperHullSeq lower;  // mirror convention: x increasing, slopes increasing
};

// Melkman's deque construction of the convex hull of a simple polygonal
// chain, split at the x-extremes into upper and lower chains. Collinear
// interior vertices are removed. Precondition: the chain is simple.
HullPair simple_chain_hull(const std::vector<Point>& chain, ProbeCounter& pc);

// Upper hull of the union of two upper hull sequences in O(|a|+|b|).
UpperHullSeq merge_two_upper_hulls(const UpperHullSeq& a, const UpperHullSeq& b,
                                   ProbeCounter& pc);

// Position (1-based) of the vertex maximizing y - slope*x; leftmost on ties.
std::size_t supporting_point(const UpperHullSeq& u, const Slope& slope, ProbeCounter& pc);

enum class Side { Left, Right };

// Tangent from an outside point p to a hull lying strictly on the given side
// of p in x: position of the vertex q with all of u on or below line p-q.
std::size_t tangents_from_point(const Point& p, const UpperHullSeq& u, Side side,
                                ProbeCounter& pc);

// An oriented separating line through two exact points.
struct SeparatorLine {
    Point a, b;
};

// Common upper tangent between two hulls on opposite sides of the separator:
// returns (position in a, position in b) such that every vertex of both
// hulls lies on or below the line through them.
std::pair<std::size_t, std::size_t> tangent_between_hulls(const UpperHullSeq& a,
                                                          const UpperHullSeq& b,
                                                          const SeparatorLine& sep,
                                                          ProbeCounter& pc);

}  // namespace hullmax

#endif  // HULLMAX_HULL_SEQ_HPP
