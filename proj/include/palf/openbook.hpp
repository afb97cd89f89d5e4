#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "palf/tuples.hpp"
#include "palf/twists.hpp"

namespace palf {

/// Stabilization of planar open books along a strict blowup sequence.  The
/// page is a disk with holes ordered left to right; each blowup of the
/// indexing tuple stabilizes the open book once and appends one right-handed
/// convex twist to the monodromy word.

/// Reindexing of a hole subset when a new hole is inserted between holes
/// gap and gap+1 (so the new hole takes index gap+1): holes above the gap
/// shift up, and a twist that enclosed the old hole gap+1 encloses the new
/// hole as well.
inline ConvexTwist lift_subset(const ConvexTwist& t, int gap) {
    std::vector<int> holes;
    holes.reserve(t.holes.size() + 1);
    bool had_split_hole = false;
    for (int h : t.holes) {
        if (h <= gap) {
            holes.push_back(h);
        } else {
            if (h == gap + 1) had_split_hole = true;
            holes.push_back(h + 1);
        }
    }
    if (had_split_hole) holes.push_back(gap + 1);
    return ConvexTwist(std::move(holes), t.sign);
}

/// Open book for the 1-tuple (0) (annulus page, identity monodromy) or for
/// (1, 1) (two-holed disk, one right-handed twist around the second hole).
inline TwistWord initial_openbook(const ZTuple& target) {
    if (target.entries() == Tuple{0}) return TwistWord(1, {});
    if (target.entries() == Tuple{1, 1}) return TwistWord(2, {alpha(2)});
    throw std::invalid_argument("initial_openbook: target must be (0) or (1,1)");
}

/// Stabilization matching an interior blowup at the j-th term, 1 <= j <= r-1
/// on a page with r holes: insert the new hole between holes j and j+1, lift
/// every existing twist, and append the right-handed twist around holes
/// 1..j and j+2 (skipping the new hole).
inline TwistWord stabilize_interior(const TwistWord& w, int j) {
    if (j < 1 || j > w.page_holes - 1)
        throw std::invalid_argument("stabilize_interior: gap out of range");
    TwistWord out;
    out.page_holes = w.page_holes + 1;
    out.twists.reserve(w.twists.size() + 1);
    for (const ConvexTwist& t : w.twists) out.twists.push_back(lift_subset(t, j));
    out.twists.push_back(beta(j));
    return out;
}

/// Stabilization matching a blowup at the last term: a new rightmost hole,
/// not enclosed by any existing twist, with a right-handed twist around it.
inline TwistWord stabilize_end(const TwistWord& w) {
    TwistWord out;
    out.page_holes = w.page_holes + 1;
    out.twists = w.twists;
    out.twists.push_back(alpha(out.page_holes));
    return out;
}

struct StabilizationStep {
    bool interior = false;
    int gap = 0;           // for interior steps: new hole lands at gap+1
    int page_after = 0;
    ConvexTwist appended;
};

/// Record of the whole stabilization run: the blowup sequence used (ending
/// at the target tuple), the per-step data, and the resulting word.  The
/// twists of the word, in order, are exactly the stabilizing curves from
/// top to bottom; the surgery picture machinery consumes them in that
/// order.
struct StabilizationTrace {
    ZTuple target;
    std::vector<ZTuple> blowup_sequence;  // from (1,1) (or just (0)) to target
    std::vector<StabilizationStep> steps;
    TwistWord word;
};

/// The monodromy word of the open book indexed by n, built along the
/// canonical blowup sequence: end blowups from (1,1) up to the height-zero
/// base of n, then the reversed leftmost blowdown trace (whose steps are all
/// interior).  For n of length k >= 2 the word consists of k-1 right-handed
/// twists in stabilization order.
inline StabilizationTrace stabilization_word(const ZTuple& n) {
    if (n.entries() == Tuple{0}) return StabilizationTrace{n, {n}, {}, TwistWord(1, {})};

    BlowdownTrace descent = leftmost_blowdown_trace(n);
    const int base_len = descent.terminal.size();

    StabilizationTrace trace{n, {u_tuple(2)}, {}, TwistWord(1, {})};
    TwistWord w = initial_openbook(u_tuple(2));
    for (int l = 3; l <= base_len; ++l) {
        w = stabilize_end(w);
        trace.blowup_sequence.push_back(u_tuple(l));
        trace.steps.push_back(StabilizationStep{false, 0, w.page_holes, w.twists.back()});
    }
    for (auto it = descent.steps.rbegin(); it != descent.steps.rend(); ++it) {
        const int gap = it->second - 1;
        w = stabilize_interior(w, gap);
        trace.blowup_sequence.push_back(it->first);
        trace.steps.push_back(StabilizationStep{true, gap, w.page_holes, w.twists.back()});
    }
    trace.word = std::move(w);
    return trace;
}

}  // namespace palf
