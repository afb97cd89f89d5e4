#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "palf/contfrac.hpp"

namespace palf {

/// A convex Dehn twist on a disk with holes arranged along the boundary:
/// the curve is determined up to isotopy by the set of holes it encloses,
/// so a twist is just that subset plus a handedness.  sign +1 is
/// right-handed.
struct ConvexTwist {
    std::vector<int> holes;  // sorted, unique, 1-based
    int sign = +1;

    ConvexTwist() = default;
    ConvexTwist(std::vector<int> h, int s = +1) : holes(std::move(h)), sign(s) {
        std::sort(holes.begin(), holes.end());
        holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
        if (holes.empty()) throw std::invalid_argument("ConvexTwist: empty hole set");
        if (holes.front() < 1) throw std::invalid_argument("ConvexTwist: hole indices are 1-based");
        if (sign != 1 && sign != -1) throw std::invalid_argument("ConvexTwist: sign must be +1 or -1");
    }

    bool contains(int hole) const {
        return std::binary_search(holes.begin(), holes.end(), hole);
    }

    ConvexTwist inverse() const { return ConvexTwist(holes, -sign); }

    bool operator==(const ConvexTwist&) const = default;
};

/// alpha_i: the twist around the single hole i.
inline ConvexTwist alpha(int i, int sign = +1) { return ConvexTwist({i}, sign); }

/// gamma_i: the twist around the first i holes.
inline ConvexTwist gamma(int i, int sign = +1) {
    std::vector<int> h(static_cast<std::size_t>(i));
    for (int t = 1; t <= i; ++t) h[static_cast<std::size_t>(t - 1)] = t;
    return ConvexTwist(std::move(h), sign);
}

/// beta_j: holes 1..j together with j+2, skipping j+1.
inline ConvexTwist beta(int j, int sign = +1) {
    std::vector<int> h;
    for (int t = 1; t <= j; ++t) h.push_back(t);
    h.push_back(j + 2);
    return ConvexTwist(std::move(h), sign);
}

/// delta_j: holes j+1 and j+2.
inline ConvexTwist delta(int j, int sign = +1) { return ConvexTwist({j + 1, j + 2}, sign); }

/// An ordered word of convex twists, stored left to right in functional
/// notation (the rightmost twist acts first).
struct TwistWord {
    int page_holes = 1;
    std::vector<ConvexTwist> twists;

    TwistWord() = default;
    TwistWord(int holes, std::vector<ConvexTwist> w) : page_holes(holes), twists(std::move(w)) {
        if (page_holes < 1) throw std::invalid_argument("TwistWord: page needs at least one hole");
        for (const ConvexTwist& t : twists)
            if (t.holes.back() > page_holes)
                throw std::invalid_argument("TwistWord: twist exceeds page holes");
    }

    int length() const { return static_cast<int>(twists.size()); }

    bool operator==(const TwistWord&) const = default;
};

/// Per-hole signed twist count: for each hole, the sum of signs over twists
/// enclosing it.  Invariant under lantern substitution and cancelling-pair
/// moves, so it doubles as a fast refutation layer.
inline std::vector<Entry> twist_count_vector(const TwistWord& w) {
    std::vector<Entry> counts(static_cast<std::size_t>(w.page_holes), 0);
    for (const ConvexTwist& t : w.twists)
        for (int h : t.holes) counts[static_cast<std::size_t>(h - 1)] += t.sign;
    return counts;
}

/// Whether the convex curves for S and T admit disjoint representatives, in
/// which case the twists commute.  True exactly when one hole set is nested
/// in the other, or they are disjoint and do not interleave along the
/// boundary order.
inline bool twists_commute(const ConvexTwist& a, const ConvexTwist& b) {
    const auto& s = a.holes;
    const auto& t = b.holes;
    if (std::includes(s.begin(), s.end(), t.begin(), t.end())) return true;
    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) return true;
    std::vector<int> common;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
    if (!common.empty()) return false;
    // Disjoint: look for an alternation s < t < s' < t' (in either role).
    std::size_t i = 0, j = 0;
    int changes = 0;
    int last = 0;  // 1 = from s, 2 = from t
    while (i < s.size() || j < t.size()) {
        int which = (j >= t.size() || (i < s.size() && s[i] < t[j])) ? 1 : 2;
        if (which == 1) ++i; else ++j;
        if (which != last) {
            if (last != 0) ++changes;
            last = which;
        }
    }
    return changes < 3;
}

inline std::string twist_to_string(const ConvexTwist& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.holes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.holes[i]);
    }
    s += "}";
    if (t.sign < 0) s += "^-1";
    return s;
}

inline std::string word_to_string(const TwistWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.twists.size(); ++i) {
        if (i) s += " ";
        s += twist_to_string(w.twists[i]);
    }
    return s;
}

}  // namespace palf
