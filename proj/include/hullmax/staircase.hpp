#ifndef HULLMAX_STAIRCASE_HPP
#define HULLMAX_STAIRCASE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hullmax/geom.hpp"

namespace hullmax {

// A maxima sequence: x strictly increasing, y strictly decreasing. No two
// points are comparable under dominance.
struct Staircase {
    std::vector<Point> points;

    Staircase() = default;
    explicit Staircase(std::vector<Point> pts) : points(std::move(pts)) {}

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    // 1-based access, matching certificate block positions.
    const Point& at(std::size_t pos) const { return points[pos - 1]; }

    friend bool operator==(const Staircase&, const Staircase&) = default;
};

inline bool is_valid_staircase(const std::vector<Point>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x <= pts[i - 1].x) return false;
        if (pts[i].y >= pts[i - 1].y) return false;
    }
    return true;
}

inline bool is_valid_staircase(const Staircase& s) { return is_valid_staircase(s.points); }

struct SmoothRun {
    std::size_t first = 0;  // 1-based inclusive interval in the input order
    std::size_t last = 0;
    Staircase maxima;  // the run's maxima (its greedy tips), sorted by x
};

struct SmoothDecomposition {
    std::vector<SmoothRun> runs;
    std::size_t sigma() const { return runs.size(); }
};

namespace detail {

// One step of the greedy smooth scan. The tip is the last maximal point seen.
// q continues the run iff tip dominates q, or q is a valid new tip (strictly
// to the right and incomparable).
enum class SmoothStep { Dominated, NewTip, Break };

inline SmoothStep smooth_step(const Point& tip, const Point& q, ProbeCounter& pc) {
    if (dominates(tip, q, pc)) return SmoothStep::Dominated;
    if (q.x > tip.x && !dominates(q, tip, pc)) return SmoothStep::NewTip;
    return SmoothStep::Break;
}

}  // namespace detail

// True iff the greedy scan accepts the whole sequence as one smooth run.
inline bool validate_smooth(const std::vector<Point>& pts, ProbeCounter& pc) {
    if (pts.empty()) return true;
    Point tip = pts[0];
    for (std::size_t i = 1; i < pts.size(); ++i) {
        switch (detail::smooth_step(tip, pts[i], pc)) {
            case detail::SmoothStep::Dominated: break;
            case detail::SmoothStep::NewTip: tip = pts[i]; break;
            case detail::SmoothStep::Break: return false;
        }
    }
    return true;
}

// Greedy maximal-prefix partition into smooth runs; the greedy scan's tips
// are exactly each run's maxima, so the staircases fall out of the same pass.
// Requires exact duplicates removed beforehand.
inline SmoothDecomposition decompose_smooth(const std::vector<Point>& pts, ProbeCounter& pc) {
    SmoothDecomposition out;
    if (pts.empty()) return out;
    std::size_t run_first = 1;
    std::vector<Point> tips{pts[0]};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        switch (detail::smooth_step(tips.back(), pts[i], pc)) {
            case detail::SmoothStep::Dominated: break;
            case detail::SmoothStep::NewTip: tips.push_back(pts[i]); break;
            case detail::SmoothStep::Break:
                out.runs.push_back({run_first, i, Staircase(std::move(tips))});
                run_first = i + 1;
                tips = {pts[i]};
                break;
        }
    }
    out.runs.push_back({run_first, pts.size(), Staircase(std::move(tips))});
    return out;
}

// Maxima set of the union of two staircases, in time linear in |a|+|b|.
// Walk by descending x keeping the best y seen to the right.
inline Staircase merge_two_staircases(const Staircase& a, const Staircase& b, ProbeCounter& pc) {
    std::vector<Point> out;
    out.reserve(a.size() + b.size());
    std::size_t i = a.size(), j = b.size();
    bool have_best = false;
    Coord best_y = 0;
    auto take = [&](const Point& p) {
        if (have_best) pc.tick();
        if (!have_best || p.y > best_y) {
            out.push_back(p);
            best_y = p.y;
            have_best = true;
        }
    };
    while (i > 0 || j > 0) {
        if (i == 0) {
            take(b.points[--j]);
        } else if (j == 0) {
            take(a.points[--i]);
        } else {
            pc.tick();
            const Point& pa = a.points[i - 1];
            const Point& pb = b.points[j - 1];
            if (pa.x > pb.x) {
                take(a.points[--i]);
            } else if (pb.x > pa.x) {
                take(b.points[--j]);
            } else {
                // equal x: the higher point dominates the lower
                pc.tick();
                if (pa.y >= pb.y) {
                    take(a.points[--i]);
                    --j;
                } else {
                    take(b.points[--j]);
                    --i;
                }
            }
        }
    }
    std::vector<Point> fwd(out.rbegin(), out.rend());
    return Staircase(std::move(fwd));
}

}  // namespace hullmax

#endif  // HULLMAX_STAIRCASE_HPP
