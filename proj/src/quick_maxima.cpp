#include "hullmax/quick_maxima.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

namespace hullmax {

namespace {

struct Window {
    std::size_t seq;     // 0-based sequence index
    std::int64_t lo, hi;  // 1-based inclusive positions, lo > hi means empty
};

// Validation: every input must be a strict staircase, and no point value may
// appear in two sequences (the union is a set of points).
void validate_inputs(const std::vector<Staircase>& seqs, ProbeCounter& pc) {
    PhaseScope phase(pc, "validate");
    std::unordered_set<std::uint64_t> seen;
    for (const auto& s : seqs) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0) {
                pc.tick(2);
                if (s.points[i].x <= s.points[i - 1].x || s.points[i].y >= s.points[i - 1].y)
                    throw std::invalid_argument("quick_union_maxima: input is not a staircase");
            }
            std::uint64_t key = (std::uint64_t(s.points[i].x + kCoordLimit) << 32) |
                                std::uint64_t(s.points[i].y + kCoordLimit);
            if (!seen.insert(key).second)
                throw std::invalid_argument(
                    "quick_union_maxima: point appears in two sequences");
        }
    }
}

class QuickUnionMaxima {
  public:
    QuickUnionMaxima(const std::vector<Staircase>& seqs, ProbeCounter& pc)
        : seqs_(seqs), pc_(pc) {}

    MaximaResult run() {
        std::vector<Window> all;
        for (std::size_t s = 0; s < seqs_.size(); ++s)
            if (!seqs_[s].empty()) all.push_back({s, 1, std::int64_t(seqs_[s].size())});
        std::deque<std::vector<Window>> tasks;
        if (!all.empty()) tasks.push_back(std::move(all));
        while (!tasks.empty()) {
            std::vector<Window> t = std::move(tasks.front());
            tasks.pop_front();
            process(std::move(t), tasks);
        }
        finalize();
        return std::move(result_);
    }

  private:
    const Point& pt(std::size_t seq, std::int64_t pos) const { return seqs_[seq].at(pos); }

    void emit_output_block(std::size_t seq, std::int64_t lo, std::int64_t hi) {
        BlockRef block{seq + 1, std::size_t(lo), std::size_t(hi), std::nullopt};
        result_.certificate.output_blocks.push_back(block);
        MaximaArgument arg;
        arg.kind = MaximaArgument::Kind::Maximality;
        arg.subject = block;
        result_.certificate.arguments.push_back(std::move(arg));
    }

    void process(std::vector<Window> windows, std::deque<std::vector<Window>>& tasks) {
        std::erase_if(windows, [](const Window& w) { return w.lo > w.hi; });
        if (windows.empty()) return;
        if (windows.size() == 1) {
            emit_output_block(windows[0].seq, windows[0].lo, windows[0].hi);
            return;
        }

        // Step 1: median of the x-coordinates of the middle points.
        std::vector<Coord> mids;
        mids.reserve(windows.size());
        for (const auto& w : windows) {
            std::int64_t len = w.hi - w.lo + 1;
            mids.push_back(pt(w.seq, w.lo + (len + 1) / 2 - 1).x);
        }
        std::size_t rank = (mids.size() - 1) / 2;  // lower median
        std::nth_element(mids.begin(), mids.begin() + rank, mids.end(),
                         [&](Coord a, Coord b) {
                             pc_.tick();
                             return a < b;
                         });
        const Coord mu = mids[rank];

        // Step 2: both-ended doubling searches for mu in every sequence.
        std::vector<std::int64_t> split(windows.size());
        for (std::size_t i = 0; i < windows.size(); ++i) {
            const auto& w = windows[i];
            split[i] = doubling_search(w.lo, w.hi, SearchEnd::Both, [&](std::int64_t idx) {
                pc_.tick();
                return pt(w.seq, idx).x >= mu;
            });
        }

        // Step 3: p = point of maximum y among points with x >= mu
        // (leftmost on ties).
        std::size_t jw = windows.size();
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (split[i] > windows[i].hi) continue;
            if (jw == windows.size()) {
                jw = i;
                continue;
            }
            const Point& cand = pt(windows[i].seq, split[i]);
            const Point& best = pt(windows[jw].seq, split[jw]);
            pc_.tick();
            if (cand.y > best.y || (cand.y == best.y && cand.x < best.x)) jw = i;
        }
        const Window wj = windows[jw];
        const std::int64_t pos_p = split[jw];
        const Point p = pt(wj.seq, pos_p);

        // Step 4: discard points dominated by p. In each other sequence the
        // dominated positions form one contiguous block [first y<=p_y .. last
        // x<=p_x]; the searches start from the mu split found in step 2.
        std::vector<std::int64_t> first_below(windows.size());  // A_w
        std::vector<std::int64_t> last_leftof(windows.size());  // B_w
        MaximaArgument dom_p;
        dom_p.kind = MaximaArgument::Kind::Domination;
        dom_p.subject = {wj.seq + 1, std::size_t(pos_p), std::size_t(pos_p), std::nullopt};
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (i == jw) continue;
            const auto& w = windows[i];
            std::int64_t upper = std::min(split[i], w.hi);
            first_below[i] = doubling_search(w.lo, upper, SearchEnd::High, [&](std::int64_t idx) {
                pc_.tick();
                return pt(w.seq, idx).y <= p.y;
            });
            std::int64_t first_right = doubling_search(
                split[i], w.hi, SearchEnd::Low, [&](std::int64_t idx) {
                    pc_.tick();
                    return pt(w.seq, idx).x > p.x;
                });
            last_leftof[i] = first_right - 1;
            if (first_below[i] <= last_leftof[i])
                dom_p.witnesses.push_back({w.seq + 1, std::size_t(first_below[i]),
                                           std::size_t(last_leftof[i]), std::nullopt});
        }
        if (!dom_p.witnesses.empty()) result_.certificate.arguments.push_back(dom_p);

        // Step 5: r = max y among points right of p, l = max x among points
        // above p (both excluding the pivot's sequence).
        bool have_r = false, have_l = false;
        Point r{}, l{};
        std::size_t r_win = 0;
        std::int64_t r_pos = 0;
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (i == jw) continue;
            const auto& w = windows[i];
            if (last_leftof[i] + 1 <= w.hi) {
                const Point& cand = pt(w.seq, last_leftof[i] + 1);
                if (have_r) pc_.tick();
                if (!have_r || cand.y > r.y) {
                    r = cand;
                    r_win = i;
                    r_pos = last_leftof[i] + 1;
                    have_r = true;
                }
            }
            if (first_below[i] - 1 >= w.lo) {
                const Point& cand = pt(w.seq, first_below[i] - 1);
                if (have_l) pc_.tick();
                if (!have_l || cand.x > l.x) {
                    l = cand;
                    have_l = true;
                }
            }
        }

        // Tie fallback: if r has the same y as p, r dominates p and p is not
        // maximal; discard p's singleton instead of emitting a block.
        bool p_dominated = false;
        if (have_r) {
            pc_.tick();
            p_dominated = (r.y == p.y);
        }

        std::int64_t bl = wj.lo, br = wj.hi;
        if (!p_dominated) {
            // Step 6: extract the output block around p in its own sequence.
            if (have_l) {
                bl = doubling_search(wj.lo, pos_p - 1, SearchEnd::High, [&](std::int64_t idx) {
                    pc_.tick();
                    return pt(wj.seq, idx).x > l.x;
                });
            }
            if (have_r) {
                std::int64_t first_low = doubling_search(
                    pos_p + 1, wj.hi, SearchEnd::Low, [&](std::int64_t idx) {
                        pc_.tick();
                        return pt(wj.seq, idx).y <= r.y;
                    });
                br = first_low - 1;
            }
        } else {
            MaximaArgument dom_r;
            dom_r.kind = MaximaArgument::Kind::Domination;
            dom_r.subject = {windows[r_win].seq + 1, std::size_t(r_pos), std::size_t(r_pos),
                             std::nullopt};
            dom_r.witnesses.push_back(
                {wj.seq + 1, std::size_t(pos_p), std::size_t(pos_p), std::nullopt});
            result_.certificate.arguments.push_back(std::move(dom_r));
        }

        // Survivors left of the block can still be dominated by the block's
        // first point, and survivors right of it by the block's last point
        // (the Left-to-Right g-discard, which Algorithm 1 leaves implicit).
        std::vector<std::int64_t> left_end(windows.size());
        std::vector<std::int64_t> right_begin(windows.size());
        MaximaArgument dom_bl, dom_br;
        dom_bl.kind = dom_br.kind = MaximaArgument::Kind::Domination;
        if (!p_dominated) {
            dom_bl.subject = {wj.seq + 1, std::size_t(bl), std::size_t(bl), std::nullopt};
            dom_br.subject = {wj.seq + 1, std::size_t(br), std::size_t(br), std::nullopt};
        }
        const Point* wl = p_dominated ? nullptr : &pt(wj.seq, bl);
        const Point* wr = p_dominated ? nullptr : &pt(wj.seq, br);
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (i == jw) {
                left_end[i] = (p_dominated ? pos_p : bl) - 1;
                right_begin[i] = (p_dominated ? pos_p : br) + 1;
                continue;
            }
            const auto& w = windows[i];
            std::int64_t a = first_below[i];  // survivors: [lo .. a-1]
            std::int64_t b = last_leftof[i];  // survivors: [b+1 .. hi]
            left_end[i] = a - 1;
            right_begin[i] = b + 1;
            if (wl && bl < pos_p && a - 1 >= w.lo) {
                std::int64_t cut = doubling_search(
                    w.lo, a - 1, SearchEnd::High, [&](std::int64_t idx) {
                        pc_.tick();
                        return pt(w.seq, idx).y <= wl->y;
                    });
                if (cut <= a - 1) {
                    dom_bl.witnesses.push_back(
                        {w.seq + 1, std::size_t(cut), std::size_t(a - 1), std::nullopt});
                    left_end[i] = cut - 1;
                }
            }
            if (wr && br > pos_p && b + 1 <= w.hi) {
                std::int64_t first_right = doubling_search(
                    b + 1, w.hi, SearchEnd::Low, [&](std::int64_t idx) {
                        pc_.tick();
                        return pt(w.seq, idx).x > wr->x;
                    });
                if (first_right - 1 >= b + 1) {
                    dom_br.witnesses.push_back(
                        {w.seq + 1, std::size_t(b + 1), std::size_t(first_right - 1),
                         std::nullopt});
                    right_begin[i] = first_right;
                }
            }
        }
        if (!dom_bl.witnesses.empty()) result_.certificate.arguments.push_back(dom_bl);
        if (!dom_br.witnesses.empty()) result_.certificate.arguments.push_back(dom_br);

        if (!p_dominated) emit_output_block(wj.seq, bl, br);

        // Step 7: recurse on the non-discarded points left and right of p.
        std::vector<Window> left, right;
        for (std::size_t i = 0; i < windows.size(); ++i) {
            const auto& w = windows[i];
            if (left_end[i] >= w.lo) left.push_back({w.seq, w.lo, left_end[i]});
            if (right_begin[i] <= w.hi) right.push_back({w.seq, right_begin[i], w.hi});
        }
        if (!left.empty()) tasks.push_back(std::move(left));
        if (!right.empty()) tasks.push_back(std::move(right));
    }

    void finalize() {
        auto& blocks = result_.certificate.output_blocks;
        std::sort(blocks.begin(), blocks.end(), [&](const BlockRef& a, const BlockRef& b) {
            return seqs_[a.seq - 1].at(a.lo).x < seqs_[b.seq - 1].at(b.lo).x;
        });
        std::vector<Point> out;
        for (const auto& b : blocks)
            for (std::size_t pos = b.lo; pos <= b.hi; ++pos)
                out.push_back(seqs_[b.seq - 1].at(pos));
        result_.maxima = Staircase(std::move(out));
    }

    const std::vector<Staircase>& seqs_;
    ProbeCounter& pc_;
    MaximaResult result_;
};

}  // namespace

MaximaResult quick_union_maxima(const std::vector<Staircase>& seqs, ProbeCounter& pc) {
    if (seqs.empty()) throw std::invalid_argument("quick_union_maxima: need at least one sequence");
    validate_inputs(seqs, pc);
    PhaseScope phase(pc, "merge");
    return QuickUnionMaxima(seqs, pc).run();
}

namespace {

// Attribute every discarded position to an argument point, preferring points
// that are already endpoints of output blocks, so the certificate length
// stays at the number of block endpoints whenever that is feasible.
class LeftToRight {
  public:
    LeftToRight(const std::vector<Staircase>& seqs, ProbeCounter& pc) : seqs_(seqs), pc_(pc) {}

    MaximaResult run() {
        std::vector<std::int64_t> first(seqs_.size(), 1);
        struct Discard {
            std::size_t seq;  // 0-based
            std::int64_t lo, hi;
        };
        std::vector<Discard> discards;
        struct RawBlock {
            std::size_t seq;
            std::int64_t lo, hi;
        };
        std::vector<RawBlock> blocks;

        while (true) {
            // u, v: max and second max y among the current first points.
            std::size_t ui = seqs_.size(), vi = seqs_.size();
            for (std::size_t s = 0; s < seqs_.size(); ++s) {
                if (first[s] > std::int64_t(seqs_[s].size())) continue;
                const Point& c = seqs_[s].at(first[s]);
                if (ui == seqs_.size()) {
                    ui = s;
                    continue;
                }
                pc_.tick();
                if (c.y > seqs_[ui].at(first[ui]).y) {
                    vi = ui;
                    ui = s;
                } else if (vi == seqs_.size() || c.y > seqs_[vi].at(first[vi]).y) {
                    if (vi != seqs_.size()) pc_.tick();
                    vi = s;
                }
            }
            if (ui == seqs_.size()) break;
            const std::int64_t a = first[ui];
            if (vi == seqs_.size()) {
                blocks.push_back({ui, a, std::int64_t(seqs_[ui].size())});
                first[ui] = std::int64_t(seqs_[ui].size()) + 1;
                continue;
            }
            const Point v = seqs_[vi].at(first[vi]);
            // b: rightmost position in M_ui with y > v_y.
            std::int64_t b =
                doubling_search(a, std::int64_t(seqs_[ui].size()), SearchEnd::Low,
                                [&](std::int64_t idx) {
                                    pc_.tick();
                                    return seqs_[ui].at(idx).y <= v.y;
                                }) -
                1;
            blocks.push_back({ui, a, b});
            first[ui] = b + 1;
            const Point g = seqs_[ui].at(b);
            if (dominates(g, v, pc_)) {
                for (std::size_t s = 0; s < seqs_.size(); ++s) {
                    if (s == ui || first[s] > std::int64_t(seqs_[s].size())) continue;
                    std::int64_t cut = doubling_search(
                        first[s], std::int64_t(seqs_[s].size()), SearchEnd::Low,
                        [&](std::int64_t idx) {
                            pc_.tick();
                            return seqs_[s].at(idx).x > g.x;
                        });
                    if (cut - 1 >= first[s]) {
                        discards.push_back({s, first[s], cut - 1});
                        first[s] = cut;
                    }
                }
            }
        }

        // Coalesce adjacent blocks of the same sequence (they arise when a
        // v-point merely interrupted a run that stays maximal throughout).
        std::sort(blocks.begin(), blocks.end(), [&](const RawBlock& x, const RawBlock& y) {
            return seqs_[x.seq].at(x.lo).x < seqs_[y.seq].at(y.lo).x;
        });
        std::vector<RawBlock> merged;
        for (const auto& blk : blocks) {
            if (!merged.empty() && merged.back().seq == blk.seq &&
                merged.back().hi + 1 == blk.lo) {
                merged.back().hi = blk.hi;
            } else {
                merged.push_back(blk);
            }
        }

        // The argument points that are unavoidable: block endpoints.
        std::set<std::pair<std::size_t, std::int64_t>> endpoint_set;
        for (const auto& blk : merged) {
            endpoint_set.insert({blk.seq, blk.lo});
            endpoint_set.insert({blk.seq, blk.hi});
        }

        // Cover every discarded position with a dominating argument point,
        // using block endpoints when possible and a minimal set of extra
        // subjects otherwise.
        std::vector<std::pair<std::size_t, std::int64_t>> uncovered;
        for (const auto& d : discards)
            for (std::int64_t pos = d.lo; pos <= d.hi; ++pos) {
                const Point& q = seqs_[d.seq].at(pos);
                bool hit = false;
                for (const auto& e : endpoint_set) {
                    if (dominates(seqs_[e.first].at(e.second), q, pc_)) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) uncovered.push_back({d.seq, pos});
            }
        std::vector<std::pair<std::size_t, std::int64_t>> extra =
            pick_extra_subjects(uncovered);
        std::set<std::pair<std::size_t, std::int64_t>> subjects = endpoint_set;
        for (const auto& e : extra) subjects.insert(e);

        // Emit domination arguments grouped by subject: per subject, maximal
        // consecutive runs of positions it dominates.
        std::map<std::pair<std::size_t, std::int64_t>, std::vector<BlockRef>> dom_witness;
        for (const auto& d : discards) {
            std::int64_t pos = d.lo;
            while (pos <= d.hi) {
                const Point& q = seqs_[d.seq].at(pos);
                auto owner = subjects.end();
                for (auto it = subjects.begin(); it != subjects.end(); ++it)
                    if (dominates(seqs_[it->first].at(it->second), q, pc_)) {
                        owner = it;
                        break;
                    }
                // Every position has an owner by construction.
                std::int64_t run_end = pos;
                while (run_end + 1 <= d.hi &&
                       dominates(seqs_[owner->first].at(owner->second),
                                 seqs_[d.seq].at(run_end + 1), pc_))
                    ++run_end;
                dom_witness[*owner].push_back(
                    {d.seq + 1, std::size_t(pos), std::size_t(run_end), std::nullopt});
                pos = run_end + 1;
            }
        }

        MaximaResult res;
        for (const auto& blk : merged) {
            BlockRef ref{blk.seq + 1, std::size_t(blk.lo), std::size_t(blk.hi), std::nullopt};
            res.certificate.output_blocks.push_back(ref);
            MaximaArgument arg;
            arg.kind = MaximaArgument::Kind::Maximality;
            arg.subject = ref;
            res.certificate.arguments.push_back(std::move(arg));
        }
        for (auto& [subj, wits] : dom_witness) {
            MaximaArgument arg;
            arg.kind = MaximaArgument::Kind::Domination;
            arg.subject = {subj.first + 1, std::size_t(subj.second), std::size_t(subj.second),
                           std::nullopt};
            arg.witnesses = std::move(wits);
            res.certificate.arguments.push_back(std::move(arg));
        }
        std::vector<Point> out;
        for (const auto& blk : res.certificate.output_blocks)
            for (std::size_t pos = blk.lo; pos <= blk.hi; ++pos)
                out.push_back(seqs_[blk.seq - 1].at(pos));
        res.maxima = Staircase(std::move(out));
        return res;
    }

  private:
    // Minimum set of extra argument points covering the given positions.
    // Exact by subset enumeration for small candidate counts, greedy
    // set-cover beyond that.
    std::vector<std::pair<std::size_t, std::int64_t>> pick_extra_subjects(
        const std::vector<std::pair<std::size_t, std::int64_t>>& uncovered) {
        std::vector<std::pair<std::size_t, std::int64_t>> out;
        if (uncovered.empty()) return out;
        std::vector<std::pair<std::size_t, std::int64_t>> candidates;
        for (std::size_t s = 0; s < seqs_.size(); ++s)
            for (std::int64_t pos = 1; pos <= std::int64_t(seqs_[s].size()); ++pos)
                candidates.push_back({s, pos});
        auto covers = [&](const std::pair<std::size_t, std::int64_t>& c,
                          const std::pair<std::size_t, std::int64_t>& q) {
            return dominates(seqs_[c.first].at(c.second), seqs_[q.first].at(q.second), pc_);
        };
        if (candidates.size() <= 16) {
            for (std::size_t size = 1; size <= candidates.size(); ++size) {
                std::vector<std::size_t> pick;
                if (search_subset(candidates, uncovered, covers, size, 0, pick)) {
                    for (std::size_t idx : pick) out.push_back(candidates[idx]);
                    return out;
                }
            }
        }
        std::vector<char> done(uncovered.size(), 0);
        std::size_t remaining = uncovered.size();
        while (remaining > 0) {
            std::size_t best = candidates.size();
            std::size_t best_gain = 0;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                std::size_t gain = 0;
                for (std::size_t q = 0; q < uncovered.size(); ++q)
                    if (!done[q] && covers(candidates[c], uncovered[q])) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            if (best == candidates.size()) break;  // cannot happen: g covers v
            out.push_back(candidates[best]);
            for (std::size_t q = 0; q < uncovered.size(); ++q)
                if (!done[q] && covers(candidates[best], uncovered[q])) {
                    done[q] = 1;
                    --remaining;
                }
        }
        return out;
    }

    template <typename Covers>
    bool search_subset(const std::vector<std::pair<std::size_t, std::int64_t>>& candidates,
                       const std::vector<std::pair<std::size_t, std::int64_t>>& uncovered,
                       Covers&& covers, std::size_t size, std::size_t from,
                       std::vector<std::size_t>& pick) {
        if (pick.size() == size) {
            for (const auto& q : uncovered) {
                bool hit = false;
                for (std::size_t idx : pick)
                    if (covers(candidates[idx], q)) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
            return true;
        }
        for (std::size_t c = from; c < candidates.size(); ++c) {
            pick.push_back(c);
            if (search_subset(candidates, uncovered, covers, size, c + 1, pick)) return true;
            pick.pop_back();
        }
        return false;
    }

    const std::vector<Staircase>& seqs_;
    ProbeCounter& pc_;
};

}  // namespace

MaximaResult left_to_right_merge(const std::vector<Staircase>& seqs, ProbeCounter& pc) {
    if (seqs.empty())
        throw std::invalid_argument("left_to_right_merge: need at least one sequence");
    validate_inputs(seqs, pc);
    PhaseScope phase(pc, "merge");
    return LeftToRight(seqs, pc).run();
}

std::vector<Point> dedup_points(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    std::vector<std::uint32_t> order(n), tmp(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = std::uint32_t(i);
    std::vector<std::uint64_t> key(n);
    for (std::size_t i = 0; i < n; ++i)
        key[i] = (std::uint64_t(points[i].x + kCoordLimit) << 32) |
                 std::uint64_t(points[i].y + kCoordLimit);
    // LSD radix on 16-bit digits: comparison-free, so deduplication adds no
    // predicate evaluations to the measured totals.
    for (int shift = 0; shift < 64; shift += 16) {
        std::size_t count[65536] = {};
        for (std::size_t i = 0; i < n; ++i) ++count[(key[order[i]] >> shift) & 0xffff];
        std::size_t pos = 0;
        std::size_t starts[65536];
        for (std::size_t d = 0; d < 65536; ++d) {
            starts[d] = pos;
            pos += count[d];
        }
        for (std::size_t i = 0; i < n; ++i) tmp[starts[(key[order[i]] >> shift) & 0xffff]++] = order[i];
        order.swap(tmp);
    }
    std::vector<char> keep(n, 1);
    for (std::size_t i = 1; i < n; ++i)
        if (key[order[i]] == key[order[i - 1]]) {
            // keep the earliest occurrence in input order
            std::uint32_t a = order[i - 1], b = order[i];
            keep[std::max(a, b)] = 0;
            order[i] = std::min(a, b);
        }
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(points[i]);
    return out;
}

std::pair<Staircase, CostReport> synergistic_maxima(const std::vector<Point>& points,
                                                    ProbeCounter& pc) {
    ProbeCounter local;
    CostReport report;
    report.n = points.size();
    auto t0 = std::chrono::steady_clock::now();

    local.set_phase("dedup");
    std::vector<Point> unique = dedup_points(points);

    local.set_phase("decompose");
    SmoothDecomposition dec = decompose_smooth(unique, local);
    report.sigma = dec.sigma();

    Staircase maxima;
    if (!dec.runs.empty()) {
        std::vector<Staircase> seqs;
        seqs.reserve(dec.runs.size());
        for (auto& r : dec.runs) seqs.push_back(std::move(r.maxima));
        MaximaResult merged = quick_union_maxima(seqs, local);
        maxima = std::move(merged.maxima);
        report.beta = merged.certificate.block_count();
        report.delta = merged.certificate.length();
        report.m_list = merged.certificate.sequence_counts();
    }
    report.rho = report.sigma;
    report.h = maxima.size();
    report.phase_counts = local.phases();
    report.wall_ns = std::uint64_t(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    pc.merge(local);
    return {std::move(maxima), std::move(report)};
}

}  // namespace hullmax
