#pragma once

#include <stdexcept>
#include <vector>

#include "palf/freegroup.hpp"
#include "palf/twists.hpp"

namespace palf {

/// Exact equality oracle for words of convex Dehn twists on a holed disk.
///
/// Each hole is doubled into a pair of punctures and a convex twist about a
/// hole set S maps to the full twist on the gathered strand pairs of S,
/// acting on the free group of rank 2k through the Artin representation.
/// Doubling matters: the plain punctured-disk action kills twists about a
/// single hole boundary, while the full twist on the corresponding pair is
/// nontrivial, so the framing data survives.
///
/// The map is a homomorphism induced by a surface inclusion (cap each hole
/// with a twice-punctured disk), so UNEQUAL images always certify genuinely
/// unequal mapping classes.  Equal images certify equality only granted
/// injectivity of the capping representation, which we do not prove here;
/// every positive certification in this library carries that caveat.
struct MCGImage {
    int page_holes = 0;
    FreeAuto action;                   // on rank 2 * page_holes
    std::vector<Entry> twist_counts;   // per-hole signed count

    bool operator==(const MCGImage&) const = default;
};

/// Alternative gathering conventions, exposed so tests can demonstrate that
/// the mirrored convention breaks the lantern identity (a negative control
/// for convention drift).
enum class GatherStyle { OverSkipped, UnderSkipped };

inline std::vector<int> doubled_strands(const ConvexTwist& t) {
    std::vector<int> d;
    d.reserve(t.holes.size() * 2);
    for (int h : t.holes) {
        d.push_back(2 * h - 1);
        d.push_back(2 * h);
    }
    return d;
}

inline MCGImage identity_image(int page_holes) {
    return MCGImage{page_holes, identity_auto(2 * page_holes),
                    std::vector<Entry>(static_cast<std::size_t>(page_holes), 0)};
}

inline MCGImage twist_image(const ConvexTwist& t, int page_holes,
                            GatherStyle style = GatherStyle::OverSkipped) {
    if (t.holes.back() > page_holes) throw std::invalid_argument("twist_image: hole out of range");
    std::vector<int> braid = gathered_full_twist(2 * page_holes, doubled_strands(t), t.sign);
    if (style == GatherStyle::UnderSkipped)
        for (int& letter : braid) letter = -letter;
    MCGImage img;
    img.page_holes = page_holes;
    img.action = braid_automorphism(braid, 2 * page_holes);
    img.twist_counts.assign(static_cast<std::size_t>(page_holes), 0);
    for (int h : t.holes) img.twist_counts[static_cast<std::size_t>(h - 1)] += t.sign;
    return img;
}

/// Image of a twist word, composed functionally: the rightmost twist is
/// applied first.  Twist-count vectors add.
inline MCGImage word_image(const TwistWord& w, GatherStyle style = GatherStyle::OverSkipped) {
    MCGImage img = identity_image(w.page_holes);
    for (const ConvexTwist& t : w.twists) {
        MCGImage ti = twist_image(t, w.page_holes, style);
        img.action = compose(img.action, ti.action);
        for (std::size_t i = 0; i < img.twist_counts.size(); ++i)
            img.twist_counts[i] += ti.twist_counts[i];
    }
    return img;
}

/// Induced matrix on the abelianization (exponent sums of generator
/// images).  Cheaper to compare than the free images and refutes most
/// inequalities early.
inline std::vector<std::vector<Entry>> abelianized_action(const FreeAuto& a) {
    const int n = a.rank();
    std::vector<std::vector<Entry>> m(static_cast<std::size_t>(n),
                                      std::vector<Entry>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j)
        for (int g : a.images[static_cast<std::size_t>(j)].letters) {
            const int i = std::abs(g) - 1;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += (g > 0 ? 1 : -1);
        }
    return m;
}

/// True iff the two words have identical images.  Runs the cheap layers
/// first: twist-count vectors, then the abelianized action, then the full
/// free-group comparison.
inline bool equal(const TwistWord& a, const TwistWord& b,
                  GatherStyle style = GatherStyle::OverSkipped) {
    if (a.page_holes != b.page_holes) throw std::invalid_argument("equal: page sizes differ");
    if (twist_count_vector(a) != twist_count_vector(b)) return false;
    MCGImage ia = word_image(a, style);
    MCGImage ib = word_image(b, style);
    if (abelianized_action(ia.action) != abelianized_action(ib.action)) return false;
    return ia.action == ib.action;
}

}  // namespace palf
