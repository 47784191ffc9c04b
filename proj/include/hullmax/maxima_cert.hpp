#ifndef HULLMAX_MAXIMA_CERT_HPP
#define HULLMAX_MAXIMA_CERT_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hullmax/staircase.hpp"

namespace hullmax {

// A block of consecutive positions in one input sequence. Sequence index and
// positions are 1-based. The pivot is used by hull eliminator blocks only.
struct BlockRef {
    std::size_t seq = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::optional<std::size_t> pivot;

    friend bool operator==(const BlockRef&, const BlockRef&) = default;
};

struct MaximaArgument {
    enum class Kind { Domination, Maximality };
    Kind kind = Kind::Domination;
    // Domination: subject is the dominating point (lo == hi).
    // Maximality: subject is the output block.
    BlockRef subject;
    std::vector<BlockRef> witnesses;

    friend bool operator==(const MaximaArgument&, const MaximaArgument&) = default;
};

struct MaximaCertificate {
    std::vector<MaximaArgument> arguments;
    std::vector<BlockRef> output_blocks;  // ordered by x; concatenation is the maxima set

    // Certificate length: number of distinct argument points.
    std::size_t length() const {
        std::set<std::pair<std::size_t, std::size_t>> pts;
        for (const auto& a : arguments) {
            pts.insert({a.subject.seq, a.subject.lo});
            if (a.kind == MaximaArgument::Kind::Maximality) pts.insert({a.subject.seq, a.subject.hi});
        }
        return pts.size();
    }

    std::size_t block_count() const {
        std::size_t beta = output_blocks.size();
        for (const auto& a : arguments) beta += a.witnesses.size();
        return beta;
    }

    // m_i: number of distinct sequences referenced by argument i.
    std::vector<std::size_t> sequence_counts() const {
        std::vector<std::size_t> m;
        m.reserve(arguments.size());
        for (const auto& a : arguments) {
            std::set<std::size_t> seqs{a.subject.seq};
            for (const auto& w : a.witnesses) seqs.insert(w.seq);
            m.push_back(seqs.size());
        }
        return m;
    }
};

struct Verdict {
    bool valid = true;
    std::string reason;

    static Verdict ok() { return {true, ""}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_block_in_range(const std::vector<Staircase>& seqs, const BlockRef& b,
                                   const char* what) {
    if (b.seq < 1 || b.seq > seqs.size())
        throw StructuralError(std::string(what) + ": sequence index out of range");
    const std::size_t len = seqs[b.seq - 1].size();
    if (b.lo < 1 || b.hi > len || b.lo > b.hi)
        throw StructuralError(std::string(what) + ": block positions out of range");
    if (b.pivot && (*b.pivot < b.lo || *b.pivot > b.hi))
        throw StructuralError(std::string(what) + ": pivot outside block");
}

}  // namespace detail

// Check one argument in O(t) predicate evaluations, t = witness count.
// Domination: the subject point must dominate the first and last point of
// every witness block (sufficient by staircase monotonicity).
// Maximality: the two-sided condition of the definition; boundary neighbors
// that fall outside a sequence make the corresponding constraint vacuous.
inline bool check_maxima_argument(const std::vector<Staircase>& seqs, const MaximaArgument& arg,
                                  ProbeCounter& pc) {
    detail::require_block_in_range(seqs, arg.subject, "maxima argument subject");
    for (const auto& w : arg.witnesses) detail::require_block_in_range(seqs, w, "maxima witness");

    if (arg.kind == MaximaArgument::Kind::Domination) {
        if (arg.subject.lo != arg.subject.hi)
            throw StructuralError("domination subject must be a single position");
        if (arg.witnesses.empty()) return false;
        const Point& s = seqs[arg.subject.seq - 1].at(arg.subject.lo);
        for (const auto& w : arg.witnesses) {
            const Staircase& m = seqs[w.seq - 1];
            if (!dominates(s, m.at(w.lo), pc)) return false;
            if (w.hi != w.lo && !dominates(s, m.at(w.hi), pc)) return false;
        }
        return true;
    }

    const Staircase& mi = seqs[arg.subject.seq - 1];
    const Point& first = mi.at(arg.subject.lo);
    const Point& last = mi.at(arg.subject.hi);

    // Form 1: M_i[b] dominates each witness's first point, and the point just
    // before each witness lies strictly left of M_i[a].
    auto form1 = [&]() {
        for (const auto& w : arg.witnesses) {
            const Staircase& mj = seqs[w.seq - 1];
            if (!dominates(last, mj.at(w.lo), pc)) return false;
            if (w.lo > 1) {
                pc.tick();
                if (mj.at(w.lo - 1).x >= first.x) return false;
            }
        }
        return true;
    };
    // Form 2: M_i[a] dominates each witness's last point, and the point just
    // after each witness lies strictly below M_i[b].
    auto form2 = [&]() {
        for (const auto& w : arg.witnesses) {
            const Staircase& mj = seqs[w.seq - 1];
            if (!dominates(first, mj.at(w.hi), pc)) return false;
            if (w.hi < mj.size()) {
                pc.tick();
                if (mj.at(w.hi + 1).y >= last.y) return false;
            }
        }
        return true;
    };
    return form1() || form2();
}

// VALID iff (a) every argument checks, (b) every input position is covered by
// a witness block or output block, and (c) the output blocks are x-disjoint
// and concatenate into a valid staircase.
inline Verdict verify_maxima_certificate(const std::vector<Staircase>& seqs,
                                         const MaximaCertificate& cert, ProbeCounter& pc) {
    for (std::size_t i = 0; i < cert.arguments.size(); ++i) {
        try {
            if (!check_maxima_argument(seqs, cert.arguments[i], pc))
                return Verdict::fail("argument " + std::to_string(i + 1) + " invalid");
        } catch (const StructuralError& e) {
            return Verdict::fail("argument " + std::to_string(i + 1) + ": " + e.what());
        }
    }

    std::vector<std::vector<char>> covered(seqs.size());
    for (std::size_t s = 0; s < seqs.size(); ++s) covered[s].assign(seqs[s].size(), 0);
    auto mark = [&](const BlockRef& b) {
        for (std::size_t p = b.lo; p <= b.hi; ++p) covered[b.seq - 1][p - 1] = 1;
    };
    for (const auto& a : cert.arguments)
        for (const auto& w : a.witnesses) mark(w);
    for (const auto& b : cert.output_blocks) {
        try {
            detail::require_block_in_range(seqs, b, "output block");
        } catch (const StructuralError& e) {
            return Verdict::fail(e.what());
        }
        mark(b);
    }
    for (std::size_t s = 0; s < seqs.size(); ++s)
        for (std::size_t p = 0; p < covered[s].size(); ++p)
            if (!covered[s][p])
                return Verdict::fail("position " + std::to_string(p + 1) + " of sequence " +
                                     std::to_string(s + 1) + " uncovered");

    // Every output block must be the subject of exactly one maximality argument.
    for (const auto& b : cert.output_blocks) {
        std::size_t hits = 0;
        for (const auto& a : cert.arguments)
            if (a.kind == MaximaArgument::Kind::Maximality && a.subject == b) ++hits;
        if (hits != 1) return Verdict::fail("output block lacks a unique maximality argument");
    }

    const Point* prev = nullptr;
    for (const auto& b : cert.output_blocks) {
        const Staircase& m = seqs[b.seq - 1];
        for (std::size_t p = b.lo; p <= b.hi; ++p) {
            const Point& cur = m.at(p);
            if (prev) {
                pc.tick();
                if (cur.x <= prev->x || cur.y >= prev->y)
                    return Verdict::fail("output blocks do not concatenate into a staircase");
            }
            prev = &cur;
        }
    }
    return Verdict::ok();
}

// Assemble the claimed maxima set from the output blocks.
inline Staircase certificate_output(const std::vector<Staircase>& seqs,
                                    const MaximaCertificate& cert) {
    std::vector<Point> pts;
    for (const auto& b : cert.output_blocks)
        for (std::size_t p = b.lo; p <= b.hi; ++p) pts.push_back(seqs[b.seq - 1].at(p));
    return Staircase(std::move(pts));
}

}  // namespace hullmax

#endif  // HULLMAX_MAXIMA_CERT_HPP
