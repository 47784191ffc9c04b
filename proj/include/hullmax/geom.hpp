#ifndef HULLMAX_GEOM_HPP
#define HULLMAX_GEOM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

// Exact planar primitives. Coordinates are signed 64-bit integers restricted
// to |v| <= 2^31 so every predicate below fits in 128-bit intermediates.

namespace hullmax {

using Coord = std::int64_t;
using Wide = __int128;

constexpr Coord kCoordLimit = Coord(1) << 31;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Per-run predicate counter. Operations never consult hidden global state:
// every predicate takes a ProbeCounter& supplied by the caller. Counts are
// bucketed by a phase label managed with PhaseScope.
class ProbeCounter {
  public:
    void tick(std::uint64_t n = 1) {
        total_ += n;
        phases_[phase_] += n;
    }

    std::uint64_t total() const { return total_; }

    std::uint64_t phase(const std::string& label) const {
        auto it = phases_.find(label);
        return it == phases_.end() ? 0 : it->second;
    }

    const std::map<std::string, std::uint64_t>& phases() const { return phases_; }

    const std::string& current_phase() const { return phase_; }
    void set_phase(std::string label) { phase_ = std::move(label); }

    // Associative merge of a child counter (concurrent recursion branches).
    void merge(const ProbeCounter& child) {
        total_ += child.total_;
        for (const auto& [k, v] : child.phases_) phases_[k] += v;
    }

  private:
    std::uint64_t total_ = 0;
    std::string phase_ = "default";
    std::map<std::string, std::uint64_t> phases_;
};

class PhaseScope {
  public:
    PhaseScope(ProbeCounter& pc, std::string label) : pc_(pc), saved_(pc.current_phase()) {
        pc_.set_phase(std::move(label));
    }
    ~PhaseScope() { pc_.set_phase(saved_); }
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

  private:
    ProbeCounter& pc_;
    std::string saved_;
};

inline int sign_of(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of the cross product (q-p) x (r-p); +1 means r is left of line p->q.
inline int orient(const Point& p, const Point& q, const Point& r, ProbeCounter& pc) {
    pc.tick();
    Wide lhs = Wide(q.x - p.x) * Wide(r.y - p.y);
    Wide rhs = Wide(q.y - p.y) * Wide(r.x - p.x);
    return sign_of(lhs - rhs);
}

// p dominates q iff p.x >= q.x and p.y >= q.y and p != q.
inline bool dominates(const Point& p, const Point& q, ProbeCounter& pc) {
    pc.tick();
    return p.x >= q.x && p.y >= q.y && p != q;
}

// Exact comparison of slope(p,q) with slope(r,s); requires q.x > p.x and
// s.x > r.x. Returns -1 (LT), 0 (EQ) or +1 (GT).
inline int cmp_slopes(const Point& p, const Point& q, const Point& r, const Point& s,
                      ProbeCounter& pc) {
    if (q.x <= p.x || s.x <= r.x)
        throw std::invalid_argument("cmp_slopes: edges must have strictly increasing x");
    pc.tick();
    Wide lhs = Wide(q.y - p.y) * Wide(s.x - r.x);
    Wide rhs = Wide(s.y - r.y) * Wide(q.x - p.x);
    return sign_of(lhs - rhs);
}

// Side of q relative to the (undirected) line through a and b:
// -1 strictly below, 0 on the line, +1 strictly above. a and b are
// normalized to a.x < b.x; for vertical lines the sign follows orient
// after (x,y)-lexicographic normalization.
inline int side_of_line(const Point& a, const Point& b, const Point& q, ProbeCounter& pc) {
    if (a == b) throw std::invalid_argument("side_of_line: degenerate line (a == b)");
    const Point& lo = (a < b) ? a : b;
    const Point& hi = (a < b) ? b : a;
    return orient(lo, hi, q, pc);
}

enum class SearchEnd { Low, High, Both };

// Doubling (galloping) search for the smallest index in [lo..hi] where pred
// flips to true; pred must be false on a prefix and true on the suffix.
// Returns hi+1 when pred is false everywhere; an empty range returns lo.
//
// Probe budget: <= 2*ceil(log2(d+2)) + 3 predicate evaluations, where d is
// the distance of the boundary from the chosen end (the nearer end for Both).
// Both alternates one probe per end; the two gallop schedules use factor-4
// strides (the high end offset by 2x) so the combined count stays within the
// same budget as a one-ended search from the nearer end.
template <typename Pred>
std::int64_t doubling_search(std::int64_t lo, std::int64_t hi, SearchEnd from, Pred&& pred) {
    if (lo > hi) return lo;
    std::int64_t known_false = lo - 1;  // max index known false
    std::int64_t known_true = hi + 1;   // min index known true

    auto probe = [&](std::int64_t idx) {
        if (pred(idx)) {
            known_true = idx;
            return true;
        }
        known_false = idx;
        return false;
    };

    auto binary = [&]() {
        while (known_true - known_false > 1) {
            std::int64_t mid = known_false + (known_true - known_false) / 2;
            probe(mid);
        }
        return known_true;
    };

    if (from == SearchEnd::Low) {
        for (std::int64_t step = 0;; ++step) {
            std::int64_t pos = lo + ((std::int64_t(1) << step) - 1);
            if (pos >= known_true) break;
            if (pos > hi) pos = hi;
            if (probe(pos) || pos == hi) break;
        }
        return binary();
    }
    if (from == SearchEnd::High) {
        for (std::int64_t step = 0;; ++step) {
            std::int64_t pos = hi - ((std::int64_t(1) << step) - 1);
            if (pos <= known_false) break;
            if (pos < lo) pos = lo;
            if (!probe(pos) || pos == lo) break;
        }
        return binary();
    }

    // Both ends, strict alternation starting low. Low gallops at offsets
    // 4^k - 1, high at 2*4^k - 1; either side stops once it observes its
    // flip or its next probe would land on settled ground.
    bool low_done = false, high_done = false;
    std::int64_t k_low = 0, k_high = 0;
    while (!low_done || !high_done) {
        if (!low_done) {
            std::int64_t pos = lo + ((std::int64_t(1) << (2 * k_low)) - 1);
            ++k_low;
            if (pos >= known_true) {
                low_done = true;
            } else {
                if (pos > hi) pos = hi;
                if (probe(pos) || pos == hi) break;
            }
        }
        if (!high_done) {
            std::int64_t pos = hi - (2 * (std::int64_t(1) << (2 * k_high)) - 1);
            ++k_high;
            if (pos <= known_false) {
                high_done = true;
            } else {
                if (pos < lo) pos = lo;
                if (!probe(pos) || pos == lo) break;
            }
        }
    }
    return binary();
}

// Exact comparison of two rationals a_num/a_den vs b_num/b_den with positive
// denominators: -1, 0, +1.
inline int cmp_ratio(Coord a_num, Coord a_den, Coord b_num, Coord b_den) {
    return sign_of(Wide(a_num) * Wide(b_den) - Wide(b_num) * Wide(a_den));
}

// A slope as an exact rational with positive denominator.
struct Slope {
    Coord num = 0;
    Coord den = 1;
};

inline Slope slope_of(const Point& p, const Point& q) {
    if (q.x <= p.x) throw std::invalid_argument("slope_of: requires q.x > p.x");
    return Slope{q.y - p.y, q.x - p.x};
}

inline int cmp_slope(const Slope& a, const Slope& b, ProbeCounter& pc) {
    pc.tick();
    return cmp_ratio(a.num, a.den, b.num, b.den);
}

}  // namespace hullmax

#endif  // HULLMAX_GEOM_HPP
